#include "frobtsct/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "frobtsct/numtheory.hpp"

namespace frobtsct {

namespace {

std::string fmt_pair(long i, long j) {
    std::ostringstream os;
    os << "(" << i << "," << j << ")";
    return os.str();
}

// Exact arithmetic on algebraic-integer table entries in "exponent space":
// a value is a short list of (exponent, coefficient) terms of zeta_N.  The
// O(rows^2 * cols) orthogonality sums accumulate term products into a
// length-N buffer, which is reduced to the power basis once per inner
// product; everything stays in 64-bit integers (magnitudes here are far
// below the overflow line, and the reduction accumulates in 128-bit).
struct ExpSpace {
    long n = 1;
    long phi = 1;
    std::vector<std::vector<long long>> red; // x^t -> power-basis coordinates

    explicit ExpSpace(long N) : n(N) {
        phi = euler_phi(n);
        const auto& poly = cyclotomic_polynomial(n);
        red.assign(n, std::vector<long long>(phi, 0));
        for (long t = 0; t < phi; ++t) red[t][t] = 1;
        for (long t = phi; t < n; ++t) {
            const auto& prev = red[t - 1];
            auto& cur = red[t];
            for (long k = 0; k + 1 < phi; ++k) cur[k + 1] = prev[k];
            long long top = prev[phi - 1];
            if (top)
                for (long k = 0; k < phi; ++k) cur[k] -= top * poly[k].get_si();
        }
    }

    // (exponent, coefficient) terms of an integral value, exponents scaled
    // from the value's own conductor up to n
    std::vector<std::pair<long, long long>> terms(const Cyclotomic& v) const {
        if (n % v.conductor() != 0) throw std::logic_error("conductor does not divide the exponent space");
        const long stride = n / v.conductor();
        std::vector<std::pair<long, long long>> out;
        const auto& c = v.coeffs();
        for (size_t k = 0; k < c.size(); ++k) {
            if (c[k] == 0) continue;
            if (!is_integral(c[k])) throw std::logic_error("non-integral value in exponent space");
            out.push_back({static_cast<long>(k) * stride, c[k].get_num().get_si()});
        }
        return out;
    }

    std::vector<std::pair<long, long long>> conj_terms(const Cyclotomic& v) const {
        auto out = terms(v);
        for (auto& t : out) t.first = (n - t.first) % n;
        return out;
    }

    std::vector<long long> reduce_buffer(const std::vector<long long>& buf) const {
        std::vector<long long> out(phi, 0);
        for (long t = 0; t < n; ++t) {
            if (!buf[t]) continue;
            __int128 b = buf[t];
            for (long k = 0; k < phi; ++k) out[k] += static_cast<long long>(b * red[t][k]);
        }
        return out;
    }

    std::vector<long long> reduce_terms(const std::vector<std::pair<long, long long>>& ts) const {
        std::vector<long long> buf(n, 0);
        for (const auto& t : ts) buf[t.first % n] += t.second;
        return reduce_buffer(buf);
    }

    // coords represent the rational integer v?
    static bool is_integer_value(const std::vector<long long>& coords, long long v) {
        if (coords.empty() || coords[0] != v) return false;
        for (size_t k = 1; k < coords.size(); ++k)
            if (coords[k] != 0) return false;
        return true;
    }
};

long table_conductor_lcm(const CharTable& X) {
    long N = 1;
    for (const auto& row : X.vals)
        for (const auto& v : row) N = std::lcm(N, v.conductor());
    return N;
}

// Q_v <=_G Q_i for the vertex chain/antichain of the given fusion case
bool subconjugate(const FrobSpec& spec, int v, int i) {
    if (v == 1 || v == i) return true;
    if (spec.fusion == Fusion::Maximal) return v < i; // Q1 < Q2 < Q3
    return i == spec.num_vertices();                  // only F contains the lines
}

} // namespace

std::vector<Cyclotomic> permutation_character(const Group& g, const std::vector<long>& subgroup_ids,
                                              const std::vector<ClassCol>& cols) {
    const long n = g.order();
    std::vector<char> member(n, 0);
    for (long id : subgroup_ids) member[id] = 1;
    const long q = static_cast<long>(subgroup_ids.size());
    std::vector<Cyclotomic> out;
    out.reserve(cols.size());
    for (const auto& col : cols) {
        long fixed = 0;
        for (long x = 0; x < n; ++x) {
            Elt xe = g.elt(x);
            Elt t = g.mul(g.mul(g.inv(xe), col.rep), xe);
            if (member[g.id(t)]) ++fixed;
        }
        if (fixed % q != 0) throw std::logic_error("fixed-coset count not divisible by |Q|");
        out.push_back(Cyclotomic(Rational(fixed / q)));
    }
    return out;
}

TSDecomp decompose_into_ts_rows(const TSCT& t, const CharTable& X, const std::vector<Cyclotomic>& values,
                                int target_vertex) {
    TSDecomp out;
    if (values.size() != X.cols.size()) {
        out.error = "value vector does not match the character table columns";
        return out;
    }
    // multiplicities in Irr(G): <values, chi_i> = (1/|G|) sum_c |c| u(c) conj(chi_i(c))
    long N = table_conductor_lcm(X);
    for (const auto& v : values) N = std::lcm(N, v.conductor());
    ExpSpace es(N);
    std::vector<std::vector<std::pair<long, long long>>> u(values.size());
    for (size_t c = 0; c < values.size(); ++c) u[c] = es.terms(values[c]);

    std::vector<long> coeffs;
    std::vector<long long> buf(es.n);
    for (size_t i = 0; i < X.vals.size(); ++i) {
        std::fill(buf.begin(), buf.end(), 0);
        for (size_t c = 0; c < X.cols.size(); ++c) {
            auto cj = es.conj_terms(X.vals[i][c]);
            for (const auto& a : u[c])
                for (const auto& b : cj) buf[(a.first + b.first) % es.n] += X.cols[c].size * a.second * b.second;
        }
        auto coords = es.reduce_buffer(buf);
        bool integer = coords[0] % X.group_order == 0;
        for (size_t k = 1; integer && k < coords.size(); ++k) integer = coords[k] == 0;
        if (!integer) {
            out.error = "inner product with row " + X.row_names[i] + " is not a rational integer";
            return out;
        }
        long c = static_cast<long>(coords[0] / X.group_order);
        if (c < 0) {
            out.error = "negative multiplicity at row " + X.row_names[i];
            return out;
        }
        coeffs.push_back(c);
    }
    out.irr_coeffs = coeffs;

    // greedy peel-off, largest vertex first, restricted to subconjugate vertices
    std::vector<long> rem = coeffs;
    for (int v = t.spec.num_vertices(); v >= 1; --v) {
        if (!subconjugate(t.spec, v, target_vertex)) continue;
        const auto& labels = t.row_labels[v - 1];
        for (size_t row = 0; row < labels.size(); ++row) {
            long mu = -1;
            for (int idx : labels[row]) {
                long c = rem[idx - 1];
                if (mu < 0 || c < mu) mu = c;
            }
            if (mu > 0) {
                for (int idx : labels[row]) rem[idx - 1] -= mu;
                out.mults.push_back({v, static_cast<int>(row), mu});
            }
        }
    }
    for (size_t i = 0; i < rem.size(); ++i)
        if (rem[i] != 0) {
            out.error = "residue " + std::to_string(rem[i]) + " at row " + X.row_names[i] +
                        " not covered by rows with subconjugate vertex";
            return out;
        }
    out.ok = true;
    return out;
}

Report check_orthogonality(const CharTable& X) {
    Report rep;
    const size_t nr = X.vals.size();
    const size_t nc = X.cols.size();
    if (nr != nc) {
        rep.add("row_orthogonality", false, "table is not square");
        rep.add("column_orthogonality", false, "table is not square");
        return rep;
    }

    ExpSpace es(table_conductor_lcm(X));
    std::vector<std::vector<std::vector<std::pair<long, long long>>>> sp(nr), cj(nr);
    for (size_t i = 0; i < nr; ++i) {
        sp[i].resize(nc);
        cj[i].resize(nc);
        for (size_t c = 0; c < nc; ++c) {
            sp[i][c] = es.terms(X.vals[i][c]);
            cj[i][c] = es.conj_terms(X.vals[i][c]);
        }
    }

    bool rows_ok = true;
    std::string detail;
    std::vector<long long> buf(es.n);
    for (size_t i = 0; rows_ok && i < nr; ++i)
        for (size_t j = i; rows_ok && j < nr; ++j) {
            std::fill(buf.begin(), buf.end(), 0);
            for (size_t c = 0; c < nc; ++c) {
                const long long w = X.cols[c].size;
                for (const auto& a : sp[i][c])
                    for (const auto& b : cj[j][c]) buf[(a.first + b.first) % es.n] += w * a.second * b.second;
            }
            if (!ExpSpace::is_integer_value(es.reduce_buffer(buf), i == j ? X.group_order : 0)) {
                rows_ok = false;
                detail = "row pair " + fmt_pair(long(i), long(j));
            }
        }
    rep.add("row_orthogonality", rows_ok, detail);

    bool cols_ok = true;
    detail.clear();
    for (size_t c = 0; cols_ok && c < nc; ++c)
        for (size_t c2 = c; cols_ok && c2 < nc; ++c2) {
            std::fill(buf.begin(), buf.end(), 0);
            for (size_t i = 0; i < nr; ++i)
                for (const auto& a : sp[i][c])
                    for (const auto& b : cj[i][c2]) buf[(a.first + b.first) % es.n] += a.second * b.second;
            if (!ExpSpace::is_integer_value(es.reduce_buffer(buf), c == c2 ? X.group_order / X.cols[c].size : 0)) {
                cols_ok = false;
                detail = "column pair " + fmt_pair(long(c), long(c2));
            }
        }
    rep.add("column_orthogonality", cols_ok, detail);
    return rep;
}

Report closed_form_vs_enumeration(const FrobSpec& spec) {
    Report rep;
    Group g = Group::build(spec);
    const long n = g.order();
    const long p = spec.p;

    { // identity and inverses
        bool ok = true;
        std::string detail;
        Elt e = g.elt(0);
        for (long a = 0; ok && a < n; ++a) {
            Elt x = g.elt(a);
            if (!(g.mul(x, e) == x) || !(g.mul(e, x) == x)) {
                ok = false;
                detail = "identity law fails at " + std::to_string(a);
            } else if (g.id(g.mul(x, g.inv(x))) != 0 || g.id(g.mul(g.inv(x), x)) != 0) {
                ok = false;
                detail = "inverse law fails at " + std::to_string(a);
            }
        }
        rep.add("identity_and_inverses", ok, detail);
    }

    { // associativity over the full Cayley table
        std::vector<int32_t> tbl(static_cast<size_t>(n) * n);
        for (long a = 0; a < n; ++a) {
            Elt xa = g.elt(a);
            for (long b = 0; b < n; ++b) tbl[a * n + b] = static_cast<int32_t>(g.id(g.mul(xa, g.elt(b))));
        }
        bool ok = true;
        std::string detail;
        for (long a = 0; ok && a < n; ++a)
            for (long b = 0; ok && b < n; ++b) {
                const int32_t ab = tbl[a * n + b];
                const int32_t* row_ab = &tbl[static_cast<long>(ab) * n];
                for (long c = 0; c < n; ++c) {
                    if (row_ab[c] != tbl[a * n + tbl[b * n + c]]) {
                        ok = false;
                        detail = "associativity fails at " + fmt_pair(a, b) + "," + std::to_string(c);
                        break;
                    }
                }
            }
        rep.add("associativity", ok, detail);
    }

    { // conjugacy classes: closed form vs brute force
        auto brute = g.classes_brute();
        auto closed = g.classes_closed();
        bool ok = brute.size() == closed.size();
        std::string detail;
        if (!ok) detail = "class counts differ";
        for (size_t i = 0; ok && i < brute.size(); ++i) {
            if (!(brute[i].rep == closed[i].rep) || brute[i].size != closed[i].size ||
                brute[i].elem_ids != closed[i].elem_ids) {
                ok = false;
                detail = "class " + std::to_string(i) + " differs";
            }
        }
        long total = 0;
        for (auto& c : brute) total += c.size;
        if (ok && total != n) {
            ok = false;
            detail = "class sizes do not sum to |G|";
        }
        rep.add("conjugacy_classes", ok, detail);
    }

    { // order-p subgroups of the kernel: count and closure
        auto lines = g.order_p_subgroups();
        bool ok = static_cast<long>(lines.size()) == p + 1;
        std::string detail = ok ? "" : "expected p+1 lines";
        for (size_t li = 0; ok && li < lines.size(); ++li) {
            const auto& ids = lines[li];
            std::set<long> s(ids.begin(), ids.end());
            if (static_cast<long>(s.size()) != p) {
                ok = false;
                detail = "line " + std::to_string(li) + " has wrong order";
                break;
            }
            for (long x : ids)
                for (long y : ids)
                    if (!s.count(g.id(g.mul(g.elt(x), g.elt(y))))) {
                        ok = false;
                        detail = "line " + std::to_string(li) + " not closed";
                    }
        }
        rep.add("order_p_subgroups", ok, detail);
    }

    { // vertex subgroup orders and normalizers, brute vs closed form
        bool ok = true;
        std::string detail;
        for (int v = 1; ok && v <= spec.num_vertices(); ++v) {
            auto ids = g.vertex_subgroup(v);
            if (static_cast<long>(ids.size()) != g.vertex_order(v)) {
                ok = false;
                detail = "vertex " + std::to_string(v) + " order mismatch";
                break;
            }
            long nb = static_cast<long>(g.normalizer(ids).size());
            if (nb != g.normalizer_order_closed(v)) {
                ok = false;
                detail = "vertex " + std::to_string(v) + " normalizer order: brute " + std::to_string(nb);
            }
        }
        rep.add("vertex_normalizers", ok, detail);
    }

    { // p-regular class representatives
        auto reps = g.p_regular_representatives();
        auto classes = g.classes_brute();
        std::map<long, size_t> class_of;
        for (size_t ci = 0; ci < classes.size(); ++ci)
            for (long id : classes[ci].elem_ids) class_of[id] = ci;
        bool ok = static_cast<long>(reps.size()) == spec.m;
        std::string detail = ok ? "" : "expected m representatives";
        std::set<size_t> seen;
        for (size_t ri = 0; ok && ri < reps.size(); ++ri) {
            if (g.elt_order(reps[ri]) % p == 0) {
                ok = false;
                detail = "representative " + std::to_string(ri) + " is p-singular";
                break;
            }
            seen.insert(class_of[g.id(reps[ri])]);
        }
        if (ok && seen.size() != reps.size()) {
            ok = false;
            detail = "representatives are not pairwise non-conjugate";
        }
        if (ok) {
            long preg = 0;
            for (auto& c : classes)
                if (g.elt_order(c.rep) % p != 0) ++preg;
            if (preg != static_cast<long>(reps.size())) {
                ok = false;
                detail = "p-regular class count " + std::to_string(preg);
            }
        }
        rep.add("p_regular_classes", ok, detail);
    }

    { // commutator subgroup equals the kernel C_p x C_p
        auto comm = g.commutator_set();
        bool ok = static_cast<long>(comm.size()) == p * p;
        for (size_t i = 0; ok && i < comm.size(); ++i)
            if (comm[i] != static_cast<long>(i)) ok = false;
        rep.add("commutator_subgroup", ok, ok ? "" : "derived subgroup is not the kernel");
    }

    { // the complement acts without nontrivial fixed points
        bool ok = true;
        for (long j = 1; ok && j < spec.m; ++j)
            for (long f1 = 0; ok && f1 < p; ++f1)
                for (long f2 = 0; f2 < p; ++f2) {
                    if (f1 == 0 && f2 == 0) continue;
                    auto y = g.act(j, {f1, f2});
                    if (y[0] == f1 && y[1] == f2) {
                        ok = false;
                        break;
                    }
                }
        rep.add("fixed_point_free_action", ok, ok ? "" : "complement action has a nontrivial fixed point");
    }

    return rep;
}

namespace {

void merge(Report& into, const Report& from, const std::string& prefix) {
    for (const auto& c : from.checks) into.add(prefix + c.name, c.ok, c.detail);
}

} // namespace

Report verify_spec_report(const FrobSpec& spec, long cap) {
    Report rep;
    Group g = Group::build(spec);
    CharTable X = irr_frobenius(spec);
    TSCT t = build_tsct(spec);
    const int r = spec.num_vertices();

    { // character degrees
        bool ok = static_cast<long>(X.vals.size()) == spec.num_irr();
        Integer sq = 0;
        for (auto& row : X.vals) {
            if (!row[0].is_rational() || !row[0].is_integral()) ok = false;
            if (ok) sq += row[0].rational_value().get_num() * row[0].rational_value().get_num();
        }
        if (sq != Integer(spec.order())) ok = false;
        rep.add("degree_squares_sum", ok, ok ? "" : "sum of squared degrees is not |G|");
    }

    merge(rep, check_orthogonality(X), "ordinary_");

    // local tables at every proper vertex (v = 1 is the ordinary table again)
    for (int v = 2; v <= r; ++v) {
        CharTable Nv = quotient_normalizer_table(spec, v);
        Report orth = check_orthogonality(Nv);
        bool ok = orth.ok();
        std::string detail;
        if (!ok)
            for (auto& c : orth.checks)
                if (!c.ok) detail = c.name + ": " + c.detail;
        rep.add("local_orthogonality_v" + std::to_string(v), ok, detail);
    }

    { // diagonal blocks are the projective tables of the local quotients
        bool ok = true;
        std::string detail;
        for (int v = 1; ok && v <= r; ++v) {
            CharTable Np = restrict_to_p_regular(v == 1 ? X : quotient_normalizer_table(spec, v));
            DecMatrix dec = decomposition_matrix(spec, v);
            CharTable proj = projective_table(dec, Np);
            const auto& blk = t.blocks[v - 1][v - 1];
            if (blk.size() != proj.vals.size() || (blk.size() && blk[0].size() != proj.vals[0].size())) {
                ok = false;
                detail = "vertex " + std::to_string(v) + ": diagonal block shape";
                break;
            }
            for (size_t i = 0; ok && i < blk.size(); ++i)
                for (size_t c = 0; c < blk[i].size(); ++c)
                    if (!(blk[i][c] == proj.vals[i][c])) {
                        ok = false;
                        detail = "vertex " + std::to_string(v) + ": entry " + fmt_pair(long(i), long(c));
                        break;
                    }
        }
        rep.add("diagonal_blocks_projective", ok, detail);
    }

    { // first-column blocks agree with sums of ordinary characters on p-regular classes
        CharTable Xp = restrict_to_p_regular(X);
        bool ok = true;
        std::string detail;
        for (int v = 1; ok && v <= r; ++v) {
            const auto& labels = t.row_labels[v - 1];
            const auto& blk = t.blocks[v - 1][0];
            if (blk.size() != labels.size() || (blk.size() && blk[0].size() != Xp.cols.size())) {
                ok = false;
                detail = "vertex " + std::to_string(v) + ": first-column block shape";
                break;
            }
            for (size_t row = 0; ok && row < labels.size(); ++row)
                for (size_t c = 0; c < Xp.cols.size(); ++c) {
                    Cyclotomic s;
                    for (int idx : labels[row]) s = s + Xp.vals[idx - 1][c];
                    if (!(blk[row][c] == s)) {
                        ok = false;
                        detail = "vertex " + std::to_string(v) + ": row " + std::to_string(row) + " column " +
                                 std::to_string(c);
                        break;
                    }
                }
        }
        rep.add("first_column_sums", ok, detail);
    }

    { // zero blocks exactly at non-subconjugate pairs (first column always set)
        bool ok = true;
        std::string detail;
        for (int i = 1; ok && i <= r; ++i)
            for (int v = 1; v <= r; ++v) {
                bool all_zero = true;
                for (const auto& row : t.blocks[i - 1][v - 1])
                    for (const auto& x : row)
                        if (!x.is_zero()) all_zero = false;
                bool expect_zero = !subconjugate(spec, v, i);
                if (all_zero != expect_zero) {
                    ok = false;
                    detail = "block " + fmt_pair(i, v) + (all_zero ? " unexpectedly zero" : " should be zero");
                    break;
                }
            }
        rep.add("block_zero_pattern", ok, detail);
    }

    { // row labels partition sanity
        bool ok = true;
        std::string detail;
        std::vector<long> expected_rows;
        if (spec.fusion == Fusion::Maximal)
            expected_rows = {spec.m, spec.d, spec.m};
        else {
            expected_rows.assign(static_cast<size_t>(r), spec.m);
        }
        for (int v = 1; ok && v <= r; ++v) {
            if (static_cast<long>(t.row_labels[v - 1].size()) != expected_rows[v - 1]) {
                ok = false;
                detail = "vertex " + std::to_string(v) + " row count";
                break;
            }
            for (const auto& lab : t.row_labels[v - 1]) {
                std::set<int> s(lab.begin(), lab.end());
                if (s.size() != lab.size() || lab.empty() || *s.begin() < 1 || *s.rbegin() > spec.num_irr()) {
                    ok = false;
                    detail = "vertex " + std::to_string(v) + " has a malformed label";
                }
            }
        }
        rep.add("row_label_sanity", ok, detail);
    }

    if (g.order() <= cap) {
        merge(rep, closed_form_vs_enumeration(spec), "enum_");

        // permutation characters Ind_Q^G(1) decompose into rows with
        // subconjugate vertices, with the trivial character appearing once
        for (int v = 1; v <= r; ++v) {
            auto pc = permutation_character(g, g.vertex_subgroup(v), X.cols);
            TSDecomp d = decompose_into_ts_rows(t, X, pc, v);
            bool ok = d.ok;
            std::string detail = d.error;
            if (ok && d.irr_coeffs[0] != 1) {
                ok = false;
                detail = "trivial character multiplicity " + std::to_string(d.irr_coeffs[0]);
            }
            if (ok) {
                long at_target = 0;
                for (auto& mrec : d.mults)
                    if (mrec.vertex == v) at_target += mrec.mult;
                if (at_target < 1) {
                    ok = false;
                    detail = "no summand with the full vertex";
                }
            }
            rep.add("perm_char_v" + std::to_string(v), ok, detail);
        }

        { // inductions from F recomputed by coset enumeration, plus Frobenius
          // reciprocity <Ind nu, chi> = <nu, Res chi> across all pairs
            const long p = spec.p;
            const long n = g.order();
            ExpSpace es(std::lcm(table_conductor_lcm(X), p));
            const long stride_p = es.n / p;
            const size_t nc = X.cols.size();

            // X column holding each element of F
            std::map<Elt, size_t> col_of_rep;
            for (size_t c = 0; c < nc; ++c) col_of_rep[X.cols[c].rep] = c;
            std::vector<size_t> col_of_f(p * p, 0);
            bool ok = true;
            std::string detail;
            for (long f1 = 0; ok && f1 < p; ++f1)
                for (long f2 = 0; f2 < p; ++f2) {
                    Elt best{p, p, 0};
                    for (long j = 0; j < spec.m; ++j) {
                        auto im = g.act(j, {f1, f2});
                        Elt cand{im[0], im[1], 0};
                        if (cand < best) best = cand;
                    }
                    auto it = col_of_rep.find(best);
                    if (it == col_of_rep.end()) {
                        ok = false;
                        detail = "no column for an element of F";
                        break;
                    }
                    col_of_f[f1 * p + f2] = it->second;
                }

            // per class c: how often x^-1 rep_c x hits each element of F
            std::vector<std::vector<long>> cf(nc, std::vector<long>(p * p, 0));
            for (size_t c = 0; ok && c < nc; ++c)
                for (long x = 0; x < n; ++x) {
                    Elt xe = g.elt(x);
                    Elt t = g.mul(g.mul(g.inv(xe), X.cols[c].rep), xe);
                    if (t.j == 0) ++cf[c][t.f1 * p + t.f2];
                }

            std::vector<std::vector<std::vector<std::pair<long, long long>>>> cjX;
            if (ok) {
                cjX.assign(X.vals.size(), {});
                for (size_t i = 0; i < X.vals.size(); ++i) {
                    cjX[i].resize(nc);
                    for (size_t c = 0; c < nc; ++c) cjX[i][c] = es.conj_terms(X.vals[i][c]);
                }
            }

            auto exps = induced_char_exponents(g);
            std::vector<long long> buf(es.n);
            for (size_t b = 0; ok && b < exps.size(); ++b) {
                const auto& ex = exps[b];
                const size_t row = spec.m + b; // chi_{m+b+1}, 0-based row index

                // p^2 * Ind_F^G nu_e at every class vs p^2 * table row
                for (size_t c = 0; ok && c < nc; ++c) {
                    std::vector<long long> counts(p, 0);
                    for (long f1 = 0; f1 < p; ++f1)
                        for (long f2 = 0; f2 < p; ++f2) counts[(ex[0] * f1 + ex[1] * f2) % p] += cf[c][f1 * p + f2];
                    std::vector<std::pair<long, long long>> ts;
                    for (long k = 0; k < p; ++k)
                        if (counts[k]) ts.push_back({k * stride_p, counts[k]});
                    auto lhs = es.reduce_terms(ts);
                    auto rhs = es.reduce_terms(es.terms(X.vals[row][c]));
                    for (auto& v : rhs) v *= p * p;
                    if (lhs != rhs) {
                        ok = false;
                        detail = "induced row " + std::to_string(b) + " differs from enumeration at column " +
                                 std::to_string(c);
                    }
                }

                // p^2 * <nu_e, Res_F chi_i> = p^2 * [i == row], for every i
                std::map<std::pair<size_t, long>, long long> Wmap;
                for (long f1 = 0; f1 < p; ++f1)
                    for (long f2 = 0; f2 < p; ++f2)
                        ++Wmap[{col_of_f[f1 * p + f2], (ex[0] * f1 + ex[1] * f2) % p}];
                std::vector<std::tuple<size_t, long, long long>> Wflat;
                for (const auto& [key, w] : Wmap) Wflat.push_back({key.first, key.second * stride_p, w});
                for (size_t i = 0; ok && i < X.vals.size(); ++i) {
                    std::fill(buf.begin(), buf.end(), 0);
                    for (const auto& [c, koff, w] : Wflat)
                        for (const auto& t : cjX[i][c]) buf[(koff + t.first) % es.n] += w * t.second;
                    if (!ExpSpace::is_integer_value(es.reduce_buffer(buf), i == row ? p * p : 0)) {
                        ok = false;
                        detail = "reciprocity fails for induced " + std::to_string(b) + " against row " +
                                 X.row_names[i];
                    }
                }
            }
            rep.add("frobenius_reciprocity", ok, detail);
        }
    } else {
        rep.add("enumeration_skipped", true, "group order exceeds oracle cap " + std::to_string(cap));
    }

    return rep;
}

Report verify_chartab_fixture(const CharTable& X, const nlohmann::json& fixture) {
    Report rep;
    const auto& jcols = fixture.at("columns");
    const auto& jrows = fixture.at("rows");

    bool ok = jcols.size() == X.cols.size();
    std::string detail = ok ? "" : "column count";
    for (size_t c = 0; ok && c < X.cols.size(); ++c) {
        const auto& jc = jcols[c];
        if (jc.at("name").get<std::string>() != X.cols[c].name) {
            ok = false;
            detail = "column " + std::to_string(c) + " name: got " + X.cols[c].name;
            break;
        }
        if (jc.contains("size") && jc.at("size").get<long>() != X.cols[c].size) {
            ok = false;
            detail = "column " + std::to_string(c) + " class size";
            break;
        }
        if (jc.contains("rep")) {
            auto r = jc.at("rep");
            Elt e{r.at(0).get<long>(), r.at(1).get<long>(), r.at(2).get<long>()};
            if (!(e == X.cols[c].rep)) {
                ok = false;
                detail = "column " + std::to_string(c) + " representative";
                break;
            }
        }
        if (jc.contains("order") && jc.at("order").get<long>() != X.cols[c].elt_order) {
            ok = false;
            detail = "column " + std::to_string(c) + " element order";
            break;
        }
    }
    rep.add("columns", ok, detail);

    ok = jrows.size() == X.vals.size();
    detail = ok ? "" : "row count";
    for (size_t i = 0; ok && i < X.vals.size(); ++i) {
        const auto& jr = jrows[i];
        if (jr.at("name").get<std::string>() != X.row_names[i]) {
            ok = false;
            detail = "row " + std::to_string(i) + " name: got " + X.row_names[i];
            break;
        }
        const auto& vals = jr.at("values");
        if (vals.size() != X.vals[i].size()) {
            ok = false;
            detail = "row " + std::to_string(i) + " length";
            break;
        }
        for (size_t c = 0; c < vals.size(); ++c) {
            Cyclotomic expect = Cyclotomic::parse(vals[c].get<std::string>());
            if (!(expect == X.vals[i][c])) {
                ok = false;
                detail = "entry " + fmt_pair(long(i), long(c)) + ": got " + X.vals[i][c].to_atom() + ", fixture " +
                         vals[c].get<std::string>();
                break;
            }
        }
    }
    rep.add("entries", ok, detail);
    return rep;
}

Report verify_tsct_fixture(const TSCT& t, const nlohmann::json& fixture) {
    Report rep;
    const int r = t.spec.num_vertices();

    {
        const auto& jv = fixture.at("vertices");
        bool ok = static_cast<int>(jv.size()) == r;
        std::string detail = ok ? "" : "vertex count";
        for (int v = 1; ok && v <= r; ++v) {
            const auto& x = jv[v - 1];
            const auto& info = t.vertices[v - 1];
            if (x.at("index").get<int>() != info.index || x.at("order").get<long>() != info.order ||
                x.at("normalizer_order").get<long>() != info.normalizer_order) {
                ok = false;
                detail = "vertex " + std::to_string(v);
            }
            if (ok && x.contains("shape") && x.at("shape").get<std::string>() != info.shape) {
                ok = false;
                detail = "vertex " + std::to_string(v) + " shape: got " + info.shape;
            }
        }
        rep.add("vertices", ok, detail);
    }

    {
        const auto& jl = fixture.at("row_labels");
        bool ok = static_cast<int>(jl.size()) == r;
        std::string detail = ok ? "" : "label list count";
        for (int v = 1; ok && v <= r; ++v) {
            const auto& lv = jl[v - 1];
            if (lv.size() != t.row_labels[v - 1].size()) {
                ok = false;
                detail = "vertex " + std::to_string(v) + " row count";
                break;
            }
            for (size_t row = 0; row < lv.size(); ++row) {
                std::vector<int> lab = lv[row].get<std::vector<int>>();
                if (lab != t.row_labels[v - 1][row]) {
                    ok = false;
                    detail = "vertex " + std::to_string(v) + " row " + std::to_string(row) + ": got " +
                             row_label_str(t.row_labels[v - 1][row]);
                    break;
                }
            }
        }
        rep.add("row_labels", ok, detail);
    }

    {
        const auto& jc = fixture.at("columns");
        bool ok = static_cast<int>(jc.size()) == r;
        std::string detail = ok ? "" : "column list count";
        for (int v = 1; ok && v <= r; ++v) {
            const auto& cv = jc[v - 1];
            if (cv.size() != t.col_labels[v - 1].size()) {
                ok = false;
                detail = "vertex " + std::to_string(v) + " column count";
                break;
            }
            for (size_t c = 0; c < cv.size(); ++c) {
                if (cv[c].at("name").get<std::string>() != t.col_labels[v - 1][c].name) {
                    ok = false;
                    detail = "vertex " + std::to_string(v) + " column " + std::to_string(c) + " name: got " +
                             t.col_labels[v - 1][c].name;
                    break;
                }
                if (cv[c].contains("rep")) {
                    auto rj = cv[c].at("rep");
                    Elt e{rj.at(0).get<long>(), rj.at(1).get<long>(), rj.at(2).get<long>()};
                    if (!(e == t.col_labels[v - 1][c].rep)) {
                        ok = false;
                        detail = "vertex " + std::to_string(v) + " column " + std::to_string(c) + " representative";
                        break;
                    }
                }
            }
        }
        rep.add("columns", ok, detail);
    }

    {
        const auto& jb = fixture.at("blocks");
        bool ok = true;
        std::string detail;
        for (int i = 1; ok && i <= r; ++i)
            for (int v = 1; ok && v <= r; ++v) {
                std::string key = std::to_string(i) + "," + std::to_string(v);
                const auto& blk = t.blocks[i - 1][v - 1];
                if (!jb.contains(key)) {
                    for (const auto& row : blk)
                        for (const auto& x : row)
                            if (!x.is_zero()) {
                                ok = false;
                                detail = "block " + key + " should be zero per fixture";
                            }
                    continue;
                }
                const auto& jrows = jb.at(key);
                if (jrows.size() != blk.size()) {
                    ok = false;
                    detail = "block " + key + " row count";
                    break;
                }
                for (size_t row = 0; ok && row < blk.size(); ++row) {
                    if (jrows[row].size() != blk[row].size()) {
                        ok = false;
                        detail = "block " + key + " column count";
                        break;
                    }
                    for (size_t c = 0; c < blk[row].size(); ++c) {
                        Cyclotomic expect = Cyclotomic::parse(jrows[row][c].get<std::string>());
                        if (!(expect == blk[row][c])) {
                            ok = false;
                            detail = "block " + key + " entry " + fmt_pair(long(row), long(c)) + ": got " +
                                     blk[row][c].to_atom() + ", fixture " + jrows[row][c].get<std::string>();
                            break;
                        }
                    }
                }
            }
        rep.add("blocks", ok, detail);
    }

    return rep;
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return nlohmann::json::parse(in);
}

} // namespace frobtsct
