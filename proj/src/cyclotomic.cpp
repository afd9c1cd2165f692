#include "frobtsct/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "frobtsct/numtheory.hpp"

namespace frobtsct {

namespace {

// per-conductor reduction data: row k holds the coordinates of z^k on the
// power basis, for every exponent k an operation can produce
struct Basis {
    long n = 1, phi = 1;
    std::vector<std::vector<Integer>> pow;
};

const Basis& basis(long n) {
    static std::map<long, Basis> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    Basis b;
    b.n = n;
    b.phi = euler_phi(n);
    const auto& poly = cyclotomic_polynomial(n);
    long rows = std::max(2 * b.phi - 1, n); // products and promotions stay in range
    b.pow.assign(rows, std::vector<Integer>(b.phi));
    for (long k = 0; k < std::min(rows, b.phi); ++k) b.pow[k][k] = 1;
    for (long k = b.phi; k < rows; ++k) {
        // z^k = z * z^{k-1}, then fold the overflow z^phi via the minimal polynomial
        const auto& prev = b.pow[k - 1];
        auto& cur = b.pow[k];
        for (long i = 1; i < b.phi; ++i) cur[i] = prev[i - 1];
        const Integer& top = prev[b.phi - 1];
        if (top != 0)
            for (long i = 0; i < b.phi; ++i) cur[i] -= top * poly[i];
    }
    return cache.emplace(n, std::move(b)).first->second;
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

} // namespace

Cyclotomic Cyclotomic::zeta(long n, long k) {
    if (n < 1) throw std::invalid_argument("zeta: conductor must be positive");
    k %= n;
    if (k < 0) k += n;
    const Basis& b = basis(n);
    std::vector<Rational> c(b.phi);
    for (long i = 0; i < b.phi; ++i) c[i] = Rational(b.pow[k][i]);
    Cyclotomic z(n, std::move(c));
    z.collapse_if_rational();
    return z;
}

bool Cyclotomic::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::logic_error("rational_value: value is not rational");
    return c_[0];
}

bool Cyclotomic::is_integral() const { return is_rational() && frobtsct::is_integral(c_[0]); }

void Cyclotomic::collapse_if_rational() {
    if (n_ == 1 || !is_rational()) return;
    Rational v = c_[0];
    n_ = 1;
    c_.assign(1, v);
}

Cyclotomic Cyclotomic::promoted(long N) const {
    if (N < 1 || N % n_ != 0)
        throw std::invalid_argument("promoted: current conductor must divide the target");
    if (N == n_) return *this;
    const Basis& b = basis(N);
    long step = N / n_;
    std::vector<Rational> c(b.phi);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const auto& row = b.pow[(long)i * step];
        for (long j = 0; j < b.phi; ++j)
            if (row[j] != 0) c[j] += c_[i] * Rational(row[j]);
    }
    return Cyclotomic(N, std::move(c));
}

Cyclotomic Cyclotomic::galois(long j) const {
    if (n_ == 1) return *this;
    j %= n_;
    if (j < 0) j += n_;
    if (std::gcd(j, n_) != 1) throw std::invalid_argument("galois: j must be a unit mod the conductor");
    const Basis& b = basis(n_);
    std::vector<Rational> c(b.phi);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const auto& row = b.pow[((long)i * j) % n_];
        for (long k = 0; k < b.phi; ++k)
            if (row[k] != 0) c[k] += c_[i] * Rational(row[k]);
    }
    Cyclotomic r(n_, std::move(c));
    r.collapse_if_rational();
    return r;
}

Cyclotomic Cyclotomic::conjugate() const { return galois(n_ - 1); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    if (n_ != o.n_) {
        long L = lcm_long(n_, o.n_);
        *this = promoted(L);
        Cyclotomic ob = o.promoted(L);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += ob.c_[i];
    } else {
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    }
    collapse_if_rational();
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    *this += -o;
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& q0) {
    Rational q = canonical(q0);
    if (q == 0) {
        n_ = 1;
        c_.assign(1, Rational(0));
        return *this;
    }
    for (auto& x : c_) x *= q;
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rational& q0) {
    Rational q = canonical(q0);
    if (q == 0) throw std::invalid_argument("cyclotomic division by zero");
    for (auto& x : c_) x /= q;
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    // rational factors are plain coordinate scalings
    if (o.is_rational()) return *this *= o.c_[0];
    if (is_rational()) {
        Rational q = c_[0];
        *this = o;
        return *this *= q;
    }
    long L = lcm_long(n_, o.n_);
    Cyclotomic a = promoted(L), b = o.promoted(L);
    const Basis& bs = basis(L);
    long phi = bs.phi;
    std::vector<Rational> prod(2 * phi - 1);
    for (long i = 0; i < phi; ++i) {
        if (a.c_[i] == 0) continue;
        for (long j = 0; j < phi; ++j)
            if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
    std::vector<Rational> c(prod.begin(), prod.begin() + phi);
    for (long k = phi; k < 2 * phi - 1; ++k) {
        if (prod[k] == 0) continue;
        const auto& row = bs.pow[k];
        for (long i = 0; i < phi; ++i)
            if (row[i] != 0) c[i] += prod[k] * Rational(row[i]);
    }
    n_ = L;
    c_ = std::move(c);
    collapse_if_rational();
    return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    long L = lcm_long(a.n_, b.n_);
    return a.promoted(L).c_ == b.promoted(L).c_;
}

Cyclotomic Cyclotomic::reduced() const {
    if (n_ == 1) return *this;
    if (is_rational()) return Cyclotomic(c_[0]);
    // fast path: a single basis monomial q * z^k is q * (a root of unity of
    // order n/gcd(n,k)), whose minimal conductor is that order (halved when
    // the order is 2 mod 4, absorbing the sign)
    {
        long k = -1;
        bool monomial = true;
        for (size_t i = 0; i < c_.size() && monomial; ++i) {
            if (c_[i] == 0) continue;
            if (k >= 0) monomial = false;
            else k = (long)i;
        }
        if (monomial && k >= 1) {
            Rational q = c_[k];
            long g = std::gcd(n_, k), ord = n_ / g, kk = k / g;
            if (ord % 4 == 2) {
                long u = ord / 2;
                Cyclotomic r = zeta(u, kk * ((u + 1) / 2) % u);
                if (kk % 2) q = -q;
                return r *= q;
            }
            if (ord == n_) return *this;
            Cyclotomic r = zeta(ord, kk);
            return r *= q;
        }
    }
    for (long d : divisors(n_)) {
        if (d == n_) return *this;
        // fixed by Gal(Q(zeta_n)/Q(zeta_d)) = { z -> z^j : j = 1 mod d, gcd(j, n) = 1 }
        bool fixed = true;
        for (long j = 1 + d; j < n_ && fixed; j += d)
            if (std::gcd(j, n_) == 1 && galois(j) != *this) fixed = false;
        if (!fixed) continue;
        // demote: solve for coordinates on the power basis at conductor d
        const Basis& bn = basis(n_);
        long phiN = bn.phi, phiD = euler_phi(d), step = n_ / d;
        // augmented matrix [A | v], column k of A = image of zeta_d^k at conductor n
        std::vector<std::vector<Rational>> M(phiN, std::vector<Rational>(phiD + 1));
        for (long k = 0; k < phiD; ++k) {
            const auto& row = bn.pow[k * step];
            for (long i = 0; i < phiN; ++i) M[i][k] = Rational(row[i]);
        }
        for (long i = 0; i < phiN; ++i) M[i][phiD] = c_[i];
        // exact Gaussian elimination
        std::vector<long> pivot_row(phiD, -1);
        long r = 0;
        for (long col = 0; col < phiD && r < phiN; ++col) {
            long pr = -1;
            for (long i = r; i < phiN; ++i)
                if (M[i][col] != 0) { pr = i; break; }
            if (pr < 0) continue;
            std::swap(M[pr], M[r]);
            Rational inv = M[r][col];
            for (long j = col; j <= phiD; ++j) M[r][j] /= inv;
            for (long i = 0; i < phiN; ++i) {
                if (i == r || M[i][col] == 0) continue;
                Rational f = M[i][col];
                for (long j = col; j <= phiD; ++j) M[i][j] -= f * M[r][j];
            }
            pivot_row[col] = r;
            ++r;
        }
        for (long i = r; i < phiN; ++i)
            if (M[i][phiD] != 0) throw std::logic_error("reduced: inconsistent demotion system");
        std::vector<Rational> c(phiD);
        for (long k = 0; k < phiD; ++k)
            if (pivot_row[k] >= 0) c[k] = M[pivot_row[k]][phiD];
        return Cyclotomic(d, std::move(c));
    }
    return *this;
}

std::string Cyclotomic::to_atom() const {
    Cyclotomic v = reduced();
    if (v.n_ == 1) return rational_str(v.c_[0]);
    std::string out;
    bool first = true;
    for (size_t k = 0; k < v.c_.size(); ++k) {
        const Rational& q = v.c_[k];
        if (q == 0) continue;
        Rational mag = q < 0 ? Rational(-q) : q;
        if (first) {
            if (q < 0) out += '-';
            first = false;
        } else {
            out += q < 0 ? '-' : '+';
        }
        if (k == 0) {
            out += rational_str(mag);
            continue;
        }
        if (mag != 1) {
            out += rational_str(mag);
            out += '*';
        }
        out += "E(" + std::to_string(v.n_) + ")";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

namespace {

// recursive-descent parser for the atom grammar
struct AtomParser {
    std::string_view s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("atom parse error at position " + std::to_string(i) + ": " + what);
    }
    Integer integer() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (i == start) fail("expected integer");
        return Integer(std::string(s.substr(start, i - start)));
    }
    long small_integer() {
        Integer z = integer();
        if (!z.fits_slong_p()) fail("integer out of range");
        return z.get_si();
    }

    Cyclotomic factor() {
        skip_ws();
        if (i < s.size() && (s[i] == 'E' || s[i] == 'e')) {
            ++i;
            if (!eat('(')) fail("expected '(' after E");
            long n = small_integer();
            if (n < 1) fail("conductor must be positive");
            if (!eat(')')) fail("expected ')'");
            long k = 1;
            if (eat('^')) {
                bool neg = eat('-');
                k = small_integer();
                if (neg) k = -k;
            }
            return Cyclotomic::zeta(n, k);
        }
        return Cyclotomic(Rational(integer()));
    }

    Cyclotomic term() {
        Cyclotomic v = factor();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                v *= factor();
            } else if (i < s.size() && s[i] == '/') {
                ++i;
                Cyclotomic d = factor();
                if (!d.is_rational() || d.rational_value() == 0) fail("division only by nonzero rationals");
                v /= d.rational_value();
            } else {
                return v;
            }
        }
    }

    Cyclotomic expr() {
        skip_ws();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Cyclotomic v = term();
        if (neg) v = -v;
        for (;;) {
            skip_ws();
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else break;
        }
        skip_ws();
        if (i != s.size()) fail("trailing input");
        return v;
    }
};

} // namespace

Cyclotomic Cyclotomic::parse(std::string_view s) {
    AtomParser p{s};
    return p.expr();
}

} // namespace frobtsct
