#include "frobtsct/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "frobtsct/numtheory.hpp"

namespace frobtsct {

namespace {

// F_{p^2} = F_p[t]/(t^2 - r), elements a + b t
struct FF {
    long a = 0, b = 0;
};

FF ff_mul(const FF& x, const FF& y, long p, long r) {
    return {(x.a * y.a + r * (x.b * y.b % p)) % p, (x.a * y.b + x.b * y.a) % p};
}

FF ff_pow(FF x, long e, long p, long r) {
    FF acc{1, 0};
    while (e > 0) {
        if (e & 1) acc = ff_mul(acc, x, p, r);
        x = ff_mul(x, x, p, r);
        e >>= 1;
    }
    return acc;
}

std::array<long, 4> mat_mul(const std::array<long, 4>& A, const std::array<long, 4>& B, long p) {
    return {(A[0] * B[0] + A[1] * B[2]) % p, (A[0] * B[1] + A[1] * B[3]) % p,
            (A[2] * B[0] + A[3] * B[2]) % p, (A[2] * B[1] + A[3] * B[3]) % p};
}

} // namespace

Group Group::build(const FrobSpec& spec) {
    Group g;
    g.spec_ = spec;
    g.p_ = spec.p;
    g.m_ = spec.m;
    g.n_ = spec.order();
    long p = spec.p;

    std::array<long, 4> alpha{};
    if (spec.fusion == Fusion::Maximal) {
        // F = additive group of F_{p^2}; h acts as multiplication by g0^{(p^2-1)/m}
        // where g0 is the smallest generator of the multiplicative group under
        // lexicographic order on (coefficient of 1, coefficient of t)
        long r = smallest_quadratic_nonresidue(p);
        long n1 = p * p - 1;
        auto qs = prime_divisors(n1);
        FF g0{0, 0};
        bool found = false;
        for (long a = 0; a < p && !found; ++a) {
            for (long b = 0; b < p && !found; ++b) {
                if (a == 0 && b == 0) continue;
                FF cand{a, b};
                bool gen = true;
                for (long q : qs) {
                    FF w = ff_pow(cand, n1 / q, p, r);
                    if (w.a == 1 && w.b == 0) { gen = false; break; }
                }
                if (gen) { g0 = cand; found = true; }
            }
        }
        if (!found) throw std::logic_error("Group::build: no generator of F_{p^2}^x found");
        FF s = ff_pow(g0, n1 / spec.m, p, r);
        // (f1 + f2 t) * (s.a + s.b t) = (s.a f1 + r s.b f2) + (s.b f1 + s.a f2) t
        alpha = {s.a, r * s.b % p, s.b, s.a};
    } else {
        // h acts as the scalar t0 = g0^{(p-1)/m} for the smallest primitive root g0 mod p
        long t0 = pow_mod(smallest_primitive_root(p), (p - 1) / spec.m, p);
        alpha = {t0, 0, 0, t0};
    }

    g.alpha_pow_.assign(spec.m, {1, 0, 0, 1});
    for (long j = 1; j < spec.m; ++j) g.alpha_pow_[j] = mat_mul(alpha, g.alpha_pow_[j - 1], p);
    // sanity: the action has order m and is fixed-point-free
    if (mat_mul(alpha, g.alpha_pow_[spec.m - 1], p) != std::array<long, 4>{1, 0, 0, 1})
        throw std::logic_error("Group::build: action does not have order m");
    for (long j = 1; j < spec.m; ++j) {
        const auto& M = g.alpha_pow_[j];
        long det = ((M[0] - 1) * (M[3] - 1) % p - M[1] * M[2] % p) % p;
        if ((det % p + p) % p == 0)
            throw std::logic_error("Group::build: action is not fixed-point-free");
    }
    return g;
}

std::array<long, 2> Group::act(long j, std::array<long, 2> f) const {
    const auto& M = alpha_pow_[((j % m_) + m_) % m_];
    return {(M[0] * f[0] + M[1] * f[1]) % p_, (M[2] * f[0] + M[3] * f[1]) % p_};
}

std::array<long, 2> Group::act_transposed(long j, std::array<long, 2> e) const {
    const auto& M = alpha_pow_[((j % m_) + m_) % m_];
    return {(M[0] * e[0] + M[2] * e[1]) % p_, (M[1] * e[0] + M[3] * e[1]) % p_};
}

Elt Group::mul(const Elt& a, const Elt& b) const {
    auto bf = act(a.j, {b.f1, b.f2});
    return {(a.f1 + bf[0]) % p_, (a.f2 + bf[1]) % p_, (a.j + b.j) % m_};
}

Elt Group::inv(const Elt& a) const {
    long j = (m_ - a.j) % m_;
    auto f = act(j, {a.f1, a.f2});
    return {(p_ - f[0]) % p_, (p_ - f[1]) % p_, j};
}

long Group::elt_order(const Elt& g) const {
    if (g.j == 0) return (g.f1 == 0 && g.f2 == 0) ? 1 : p_;
    // the f-part dies after m/gcd(m,j) steps: the geometric sum of a
    // fixed-point-free action over a full period vanishes
    return m_ / std::gcd(m_, g.j);
}

std::vector<ConjClass> Group::classes_brute() const {
    std::vector<long> invs(n_);
    for (long i = 0; i < n_; ++i) invs[i] = id(inv(elt(i)));
    std::vector<char> seen(n_, 0);
    std::vector<ConjClass> cls;
    for (long x = 0; x < n_; ++x) {
        if (seen[x]) continue;
        ConjClass c;
        c.rep = elt(x);
        Elt ex = elt(x);
        std::vector<char> inorb(n_, 0);
        for (long g = 0; g < n_; ++g) {
            Elt y = mul(mul(elt(g), ex), elt(invs[g]));
            long yid = id(y);
            if (!inorb[yid]) {
                inorb[yid] = 1;
                c.elem_ids.push_back(yid);
                seen[yid] = 1;
            }
        }
        std::sort(c.elem_ids.begin(), c.elem_ids.end());
        c.size = (long)c.elem_ids.size();
        cls.push_back(std::move(c));
    }
    return cls;
}

std::vector<std::vector<long>> Group::kernel_orbits() const {
    std::vector<char> seen(p_ * p_, 0);
    std::vector<std::vector<long>> orbits;
    for (long f = 1; f < p_ * p_; ++f) {
        if (seen[f]) continue;
        std::vector<long> orb;
        std::array<long, 2> v{f / p_, f % p_};
        for (long j = 0; j < m_; ++j) {
            auto w = act(j, v);
            long wid = w[0] * p_ + w[1];
            if (!seen[wid]) {
                seen[wid] = 1;
                orb.push_back(wid);
            }
        }
        std::sort(orb.begin(), orb.end());
        orbits.push_back(std::move(orb));
    }
    return orbits;
}

std::vector<ConjClass> Group::classes_closed() const {
    std::vector<ConjClass> cls;
    cls.push_back({Elt{0, 0, 0}, 1, {0}});
    for (auto& orb : kernel_orbits()) {
        ConjClass c;
        c.rep = elt(orb.front());
        c.size = (long)orb.size();
        c.elem_ids = orb;
        cls.push_back(std::move(c));
    }
    // the class of h^j is all of F x {h^j}: (1 - alpha^j) is invertible
    for (long j = 1; j < m_; ++j) {
        ConjClass c;
        c.rep = Elt{0, 0, j};
        c.size = p_ * p_;
        c.elem_ids.resize(p_ * p_);
        std::iota(c.elem_ids.begin(), c.elem_ids.end(), j * p_ * p_);
        cls.push_back(std::move(c));
    }
    return cls;
}

std::vector<long> Group::line(long c) const {
    std::vector<long> ids;
    for (long k = 0; k < p_; ++k) {
        if (c < 0) ids.push_back(k); // <y>: elements (0, k)
        else ids.push_back(k * p_ + k * c % p_);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<std::vector<long>> Group::order_p_subgroups() const {
    std::vector<std::vector<long>> subs;
    subs.push_back(line(-1));
    for (long c = 0; c < p_; ++c) subs.push_back(line(c));
    std::sort(subs.begin(), subs.end(),
              [](const auto& A, const auto& B) { return A[1] < B[1]; }); // by smallest nontrivial element
    return subs;
}

std::vector<long> Group::vertex_subgroup(int i) const {
    int r = spec_.num_vertices();
    if (i < 1 || i > r) throw std::invalid_argument("vertex_subgroup: index out of range");
    if (i == 1) return {0};
    if (i == r) {
        std::vector<long> ids(p_ * p_);
        std::iota(ids.begin(), ids.end(), 0);
        return ids;
    }
    if (spec_.fusion == Fusion::Maximal) return line(0); // Q_2 = <x>
    return i <= p_ + 1 ? line(i - 2) : line(-1);         // Q_i = <x y^{i-2}>, Q_{p+2} = <y>
}

long Group::vertex_order(int i) const {
    int r = spec_.num_vertices();
    if (i == 1) return 1;
    return i == r ? p_ * p_ : p_;
}

int Group::vertex_of_line(std::array<long, 2> f) const {
    if (spec_.fusion != Fusion::Minimal)
        throw std::logic_error("vertex_of_line: only meaningful for minimal fusion");
    long f1 = ((f[0] % p_) + p_) % p_, f2 = ((f[1] % p_) + p_) % p_;
    if (f1 == 0 && f2 == 0) throw std::invalid_argument("vertex_of_line: f must be nonzero");
    if (f1 == 0) return (int)p_ + 2;
    // c with (f1, f2) on the line through (1, c)
    long c = f2 * pow_mod(f1, p_ - 2, p_) % p_;
    return (int)c + 2;
}

std::vector<long> Group::normalizer(const std::vector<long>& subgroup_ids) const {
    std::vector<char> member(n_, 0);
    for (long q : subgroup_ids) member[q] = 1;
    std::vector<long> norm;
    for (long gi = 0; gi < n_; ++gi) {
        Elt g = elt(gi), gi_inv = inv(g);
        bool ok = true;
        for (long q : subgroup_ids) {
            if (!member[id(mul(mul(g, elt(q)), gi_inv))]) { ok = false; break; }
        }
        if (ok) norm.push_back(gi);
    }
    return norm;
}

long Group::normalizer_order_closed(int vertex) const {
    int r = spec_.num_vertices();
    if (vertex < 1 || vertex > r) throw std::invalid_argument("normalizer_order_closed: index out of range");
    if (spec_.fusion == Fusion::Maximal && vertex == 2) return p_ * p_ * spec_.d;
    return n_;
}

std::vector<Elt> Group::p_regular_representatives() const {
    std::vector<Elt> reps;
    for (long j = 0; j < m_; ++j) reps.push_back({0, 0, j});
    return reps;
}

std::vector<long> Group::commutator_set() const {
    std::vector<long> invs(n_);
    for (long i = 0; i < n_; ++i) invs[i] = id(inv(elt(i)));
    std::vector<char> seen(n_, 0);
    std::vector<long> comms;
    for (long a = 0; a < n_; ++a) {
        Elt ea = elt(a);
        for (long b = 0; b < n_; ++b) {
            long c = id(mul(mul(ea, elt(b)), mul(elt(invs[a]), elt(invs[b]))));
            if (!seen[c]) {
                seen[c] = 1;
                comms.push_back(c);
            }
        }
    }
    std::sort(comms.begin(), comms.end());
    return comms;
}

} // namespace frobtsct
