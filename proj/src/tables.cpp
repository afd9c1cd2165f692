#include "frobtsct/tables.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "frobtsct/numtheory.hpp"

namespace frobtsct {

std::vector<std::string> class_names(const std::vector<long>& orders) {
    std::map<long, long> counter;
    std::vector<std::string> names;
    for (long o : orders) {
        long idx = counter[o]++;
        // a..z, then aa, ab, ...
        std::string letters;
        ++idx;
        while (idx > 0) {
            --idx;
            letters.insert(letters.begin(), char('a' + idx % 26));
            idx /= 26;
        }
        names.push_back(std::to_string(o) + letters);
    }
    return names;
}

CharTable cyclic_table(long m) {
    if (m < 1) throw std::invalid_argument("cyclic_table: m must be positive");
    CharTable t;
    t.group_name = "C" + std::to_string(m);
    t.group_order = m;
    std::vector<long> orders;
    for (long j = 0; j < m; ++j) {
        orders.push_back(m / std::gcd(m, j == 0 ? m : j));
        t.cols.push_back({"", Elt{0, 0, j}, 1, orders.back()});
    }
    auto names = class_names(orders);
    for (long j = 0; j < m; ++j) t.cols[j].name = names[j];
    for (long a = 1; a <= m; ++a) {
        t.row_names.push_back("xi_" + std::to_string(a));
        std::vector<Cyclotomic> row;
        for (long j = 0; j < m; ++j) row.push_back(Cyclotomic::zeta(m, (a - 1) * j));
        t.vals.push_back(std::move(row));
    }
    return t;
}

namespace {

// orbits of the transposed action on the nonzero character exponents (u, w),
// each orbit listed by its lex-smallest representative
std::vector<std::array<long, 2>> dual_orbit_reps(const Group& g) {
    long p = g.p();
    std::vector<char> seen(p * p, 0);
    std::vector<std::array<long, 2>> reps;
    for (long u = 0; u < p; ++u)
        for (long w = 0; w < p; ++w) {
            if ((u == 0 && w == 0) || seen[u * p + w]) continue;
            reps.push_back({u, w});
            for (long j = 0; j < g.m(); ++j) {
                auto ee = g.act_transposed(j, {u, w});
                seen[ee[0] * p + ee[1]] = 1;
            }
        }
    return reps;
}

// vertex index of the kernel line of the character with exponent e:
// Ker(nu_e) = { f : u f1 + w f2 = 0 }
int kernel_vertex(const Group& g, std::array<long, 2> e) {
    long p = g.p();
    long u = e[0], w = e[1];
    std::array<long, 2> f{};
    if (w != 0) f = {1, (p - u) * pow_mod(w, p - 2, p) % p};
    else f = {0, 1};
    return g.vertex_of_line(f);
}

} // namespace

std::vector<std::array<long, 2>> induced_char_exponents(const Group& g) {
    auto reps = dual_orbit_reps(g); // already sorted lex by construction
    if (g.spec().fusion == Fusion::Minimal) {
        // group by the vertex index of the kernel line so the induced
        // characters appear in the same order as the vertex subgroups
        std::stable_sort(reps.begin(), reps.end(), [&](const auto& a, const auto& b) {
            return kernel_vertex(g, a) < kernel_vertex(g, b);
        });
    }
    return reps;
}

namespace {

// value of Ind_F^G(nu_e) at the class representative x, by the coset sum
// (1/|F|) * sum over g in G with g x g^-1 in F of nu_e(g x g^-1)
Cyclotomic induced_value(const Group& g, std::array<long, 2> e, const Elt& x) {
    long p = g.p();
    if (x.j != 0) return Cyclotomic(0); // no conjugate of x lies in F
    // (1/|F|) sum_{g in G} zeta^{e . gxg^-1}: conjugation by f h^j sends x to
    // alpha^j x independently of f, so each orbit point carries weight |F|
    std::vector<long> cnt(p, 0);
    for (long j = 0; j < g.m(); ++j) {
        auto im = g.act(j, {x.f1, x.f2});
        cnt[(e[0] * im[0] + e[1] * im[1]) % p] += 1;
    }
    Cyclotomic v;
    for (long c = 0; c < p; ++c)
        if (cnt[c]) v += Cyclotomic::zeta(p, c) * Rational(cnt[c]);
    return v;
}

} // namespace

CharTable irr_frobenius(const FrobSpec& spec) {
    Group g = Group::build(spec);
    long p = spec.p, m = spec.m;

    CharTable t;
    t.group_name = spec.shape();
    t.group_order = spec.order();

    // columns: identity, h^j (j = 1..m-1), then the classes inside F \ {1};
    // in the minimal case the F-classes follow the vertex order of their lines
    std::vector<ClassCol> fcols;
    for (auto& orb : g.kernel_orbits()) {
        Elt rep = g.elt(orb.front());
        fcols.push_back({"", rep, (long)orb.size(), p});
    }
    if (spec.fusion == Fusion::Minimal) {
        auto key = [&](const ClassCol& c) {
            return std::pair<int, long>(g.vertex_of_line({c.rep.f1, c.rep.f2}), g.id(c.rep));
        };
        std::sort(fcols.begin(), fcols.end(), [&](const ClassCol& a, const ClassCol& b) { return key(a) < key(b); });
    }
    t.cols.push_back({"", Elt{0, 0, 0}, 1, 1});
    for (long j = 1; j < m; ++j) t.cols.push_back({"", Elt{0, 0, j}, p * p, g.elt_order({0, 0, j})});
    for (auto& c : fcols) t.cols.push_back(c);

    std::vector<long> orders;
    for (auto& c : t.cols) orders.push_back(c.elt_order);
    auto names = class_names(orders);
    for (size_t i = 0; i < t.cols.size(); ++i) t.cols[i].name = names[i];

    // linear rows: inflations of Irr(C_m), value zeta_m^{(a-1) j} at (f, h^j)
    for (long a = 1; a <= m; ++a) {
        std::vector<Cyclotomic> row;
        for (auto& c : t.cols) row.push_back(Cyclotomic::zeta(m, (a - 1) * c.rep.j));
        t.row_names.push_back("chi_" + std::to_string(a));
        t.vals.push_back(std::move(row));
    }
    // induced rows
    auto exps = induced_char_exponents(g);
    for (size_t b = 0; b < exps.size(); ++b) {
        std::vector<Cyclotomic> row;
        for (auto& c : t.cols) row.push_back(induced_value(g, exps[b], c.rep));
        t.row_names.push_back("chi_" + std::to_string(m + (long)b + 1));
        t.vals.push_back(std::move(row));
    }
    return t;
}

CharTable restrict_to_p_regular(const CharTable& X) {
    CharTable t;
    t.group_name = X.group_name;
    t.group_order = X.group_order;
    t.row_names = X.row_names;
    std::vector<long> keep;
    for (long c = 0; c < X.num_cols(); ++c)
        if (X.cols[c].rep.f1 == 0 && X.cols[c].rep.f2 == 0) keep.push_back(c);
    if (keep.empty()) throw std::invalid_argument("restrict_to_p_regular: table has no p-regular columns");
    for (long c : keep) t.cols.push_back(X.cols[c]);
    for (auto& row : X.vals) {
        std::vector<Cyclotomic> r;
        for (long c : keep) r.push_back(row[c]);
        t.vals.push_back(std::move(r));
    }
    return t;
}

namespace {

// ordinary table of C_p : C_k where the complement acts on the kernel as the
// scalar t (of order k mod p); columns: identity, complement classes, then
// kernel orbits; rows: k linear, (p-1)/k induced
CharTable rank1_frobenius_table(long p, long k, long t, const std::string& name) {
    CharTable tb;
    tb.group_name = name;
    tb.group_order = p * k;
    std::vector<long> orders;
    tb.cols.push_back({"", Elt{0, 0, 0}, 1, 1});
    orders.push_back(1);
    for (long j = 1; j < k; ++j) {
        tb.cols.push_back({"", Elt{0, 0, j}, p, k / std::gcd(k, j)});
        orders.push_back(tb.cols.back().elt_order);
    }
    // orbits of <t> on the nonzero residues, by smallest member
    std::vector<char> seen(p, 0);
    std::vector<long> orbit_reps;
    for (long v = 1; v < p; ++v) {
        if (seen[v]) continue;
        orbit_reps.push_back(v);
        long w = v;
        for (long j = 0; j < k; ++j) {
            seen[w] = 1;
            w = w * t % p;
        }
    }
    for (long v : orbit_reps) {
        tb.cols.push_back({"", Elt{v, 0, 0}, k, p});
        orders.push_back(p);
    }
    auto names = class_names(orders);
    for (size_t i = 0; i < tb.cols.size(); ++i) tb.cols[i].name = names[i];

    for (long a = 1; a <= k; ++a) {
        std::vector<Cyclotomic> row;
        for (auto& c : tb.cols) row.push_back(Cyclotomic::zeta(k, (a - 1) * c.rep.j));
        tb.row_names.push_back("theta_" + std::to_string(a));
        tb.vals.push_back(std::move(row));
    }
    // induced characters, one per dual orbit; dual orbits of the scalar action
    // coincide with the orbits above, so reuse the same representatives
    for (size_t b = 0; b < orbit_reps.size(); ++b) {
        long u = orbit_reps[b];
        std::vector<Cyclotomic> row;
        for (auto& c : tb.cols) {
            if (c.rep.j != 0) {
                row.push_back(Cyclotomic(0));
            } else if (c.rep.f1 == 0) {
                row.push_back(Cyclotomic(k));
            } else {
                Cyclotomic v;
                long s = 1;
                for (long j = 0; j < k; ++j) {
                    v += Cyclotomic::zeta(p, u * s * c.rep.f1);
                    s = s * t % p;
                }
                row.push_back(v);
            }
        }
        tb.row_names.push_back("theta_" + std::to_string(k + (long)b + 1));
        tb.vals.push_back(std::move(row));
    }
    return tb;
}

} // namespace

CharTable quotient_normalizer_table(const FrobSpec& spec, int v) {
    int r = spec.num_vertices();
    if (v < 1 || v > r) throw std::invalid_argument("quotient_normalizer_table: vertex index out of range");
    if (v == 1) return irr_frobenius(spec);
    if (v == r) {
        CharTable t = cyclic_table(spec.m);
        for (auto& n : t.row_names) n = "theta_" + n.substr(n.find('_') + 1);
        return t;
    }
    if (spec.fusion == Fusion::Maximal) {
        // N_G(Q_2)/Q_2 = C_p : C_d; h^{p+1} acts on F (hence on F/Q_2) as a scalar
        Group g = Group::build(spec);
        long s = g.alpha_pow(spec.p + 1)[0];
        std::string name = "C" + std::to_string(spec.p) + " : C" + std::to_string(spec.d);
        return rank1_frobenius_table(spec.p, spec.d, s, name);
    }
    // minimal: G/Q_v = C_p : C_m with the same scalar action
    Group g = Group::build(spec);
    long t0 = g.alpha_pow(1)[0];
    std::string name = "C" + std::to_string(spec.p) + " : C" + std::to_string(spec.m);
    return rank1_frobenius_table(spec.p, spec.m, t0, name);
}

DecMatrix decomposition_matrix(const FrobSpec& spec, int v) {
    int r = spec.num_vertices();
    if (v < 1 || v > r) throw std::invalid_argument("decomposition_matrix: vertex index out of range");
    long lin = 0, ind = 0;
    std::string row_prefix = "theta_";
    if (v == 1) {
        lin = spec.m;
        ind = spec.num_induced();
        row_prefix = "chi_";
    } else if (v == r) {
        lin = spec.m;
        ind = 0;
    } else if (spec.fusion == Fusion::Maximal) {
        lin = spec.d;
        ind = spec.e;
    } else {
        lin = spec.m;
        ind = spec.a;
    }
    DecMatrix d;
    for (long i = 1; i <= lin + ind; ++i) d.row_names.push_back(row_prefix + std::to_string(i));
    for (long i = 1; i <= lin; ++i) d.col_names.push_back("phi_" + std::to_string(i));
    d.entries.assign(lin + ind, std::vector<long>(lin, 0));
    for (long i = 0; i < lin; ++i) d.entries[i][i] = 1;
    for (long i = lin; i < lin + ind; ++i)
        for (long c = 0; c < lin; ++c) d.entries[i][c] = 1;
    return d;
}

CharTable projective_table(const DecMatrix& dec, const CharTable& X_p_regular) {
    long rows = (long)dec.entries.size(), lin = (long)dec.col_names.size();
    if (rows != X_p_regular.rows())
        throw std::invalid_argument("projective_table: decomposition matrix and table have mismatched row counts");
    CharTable t;
    t.group_name = X_p_regular.group_name;
    t.group_order = X_p_regular.group_order;
    t.cols = X_p_regular.cols;
    for (long a = 0; a < lin; ++a) {
        std::vector<Cyclotomic> row(X_p_regular.num_cols());
        for (long i = 0; i < rows; ++i) {
            if (dec.entries[i][a] == 0) continue;
            Rational mult(dec.entries[i][a]);
            for (long c = 0; c < X_p_regular.num_cols(); ++c) row[c] += X_p_regular.vals[i][c] * mult;
        }
        t.row_names.push_back("Phi_" + std::to_string(a + 1));
        t.vals.push_back(std::move(row));
    }
    return t;
}

} // namespace frobtsct
