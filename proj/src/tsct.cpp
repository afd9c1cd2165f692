#include "frobtsct/tsct.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "frobtsct/numtheory.hpp"

namespace frobtsct {

std::string row_label_str(const std::vector<int>& label) {
    std::string s;
    for (size_t i = 0; i < label.size(); ++i) {
        if (i) s += '+';
        s += "chi_" + std::to_string(label[i]);
    }
    return s;
}

std::vector<int> parse_row_label(const std::string& s) {
    std::vector<int> out;
    size_t i = 0;
    while (i < s.size()) {
        size_t j = s.find('+', i);
        if (j == std::string::npos) j = s.size();
        std::string part = s.substr(i, j - i);
        if (part.rfind("chi_", 0) != 0) throw std::invalid_argument("parse_row_label: expected chi_<k> terms");
        out.push_back(std::stoi(part.substr(4)));
        i = j + 1;
    }
    return out;
}

std::vector<std::vector<int>> linear_restriction_fibers(const FrobSpec& spec) {
    if (spec.fusion != Fusion::Maximal)
        throw std::invalid_argument("linear_restriction_fibers: defined for maximal fusion");
    // chi_c restricted to <h^{p+1}> is theta_a iff c-1 = a-1 mod d
    std::vector<std::vector<int>> fibers(spec.d);
    for (int c = 1; c <= spec.m; ++c) fibers[(c - 1) % spec.d].push_back(c);
    return fibers;
}

int kernel_of_character(const FrobSpec& spec, int chi_index) {
    if (spec.fusion != Fusion::Minimal)
        throw std::invalid_argument("kernel_of_character: defined for minimal fusion");
    if (chi_index <= spec.m || chi_index > spec.num_irr())
        throw std::invalid_argument("kernel_of_character: index must name an induced character");
    Group g = Group::build(spec);
    auto exps = induced_char_exponents(g);
    auto e = exps[chi_index - spec.m - 1];
    long p = spec.p, u = e[0], w = e[1];
    std::array<long, 2> f = w != 0 ? std::array<long, 2>{1, (p - u) * pow_mod(w, p - 2, p) % p}
                                   : std::array<long, 2>{0, 1};
    return g.vertex_of_line(f);
}

namespace {

// zeta_m^{(a-1) j} as an m x m matrix, the cyclic table without labels
std::vector<std::vector<Cyclotomic>> cyclic_values(long m) {
    std::vector<std::vector<Cyclotomic>> v(m);
    for (long a = 0; a < m; ++a)
        for (long j = 0; j < m; ++j) v[a].push_back(Cyclotomic::zeta(m, a * j));
    return v;
}

std::vector<ClassCol> h_power_columns(const std::vector<long>& exponents, long m, long p) {
    std::vector<ClassCol> cols;
    std::vector<long> orders;
    for (long j : exponents) {
        long o = j == 0 ? 1 : m / std::gcd(m, j);
        cols.push_back({"", Elt{0, 0, j}, j == 0 ? 1 : p * p, o});
        orders.push_back(o);
    }
    auto names = class_names(orders);
    for (size_t i = 0; i < cols.size(); ++i) cols[i].name = names[i];
    return cols;
}

std::vector<std::vector<Cyclotomic>> zero_block(long rows, long cols) {
    return std::vector<std::vector<Cyclotomic>>(rows, std::vector<Cyclotomic>(cols));
}

} // namespace

TSCT build_tsct_maximal(long p, long m) {
    FrobSpec spec = validate_spec(p, m, Fusion::Maximal);
    long d = spec.d, e = spec.e;
    TSCT t;
    t.spec = spec;

    t.vertices.push_back({1, 1, spec.order(), spec.shape()});
    t.vertices.push_back({2, p, p * p * d, "(C" + std::to_string(p) + " x C" + std::to_string(p) + ") : C" + std::to_string(d)});
    t.vertices.push_back({3, p * p, spec.order(), spec.shape()});

    std::vector<long> all_h(m), nh(d);
    std::iota(all_h.begin(), all_h.end(), 0);
    for (long j = 0; j < d; ++j) nh[j] = j * (p + 1); // N_H(Q_2) = <h^{p+1}>, ascending powers
    t.col_labels.push_back(h_power_columns(all_h, m, p));
    t.col_labels.push_back(h_power_columns(nh, m, p));
    t.col_labels.push_back(h_power_columns(all_h, m, p));

    // row labels
    std::vector<int> induced;
    for (long b = 1; b <= e; ++b) induced.push_back((int)(m + b));
    std::vector<std::vector<int>> v1, v2, v3;
    for (int a = 1; a <= m; ++a) {
        std::vector<int> lab{a};
        lab.insert(lab.end(), induced.begin(), induced.end());
        v1.push_back(lab);
        v3.push_back({a});
    }
    auto fibers = linear_restriction_fibers(spec);
    for (long a = 0; a < d; ++a) {
        std::vector<int> lab = fibers[a];
        lab.insert(lab.end(), induced.begin(), induced.end());
        std::sort(lab.begin(), lab.end());
        v2.push_back(lab);
    }
    t.row_labels = {v1, v2, v3};

    auto XH = cyclic_values(m);

    // X(N_H(Q_2)) with omega = zeta_m^{p+1} (an order-d root of unity)
    std::vector<std::vector<Cyclotomic>> XN(d);
    for (long a = 0; a < d; ++a)
        for (long j = 0; j < d; ++j) XN[a].push_back(Cyclotomic::zeta(m, (p + 1) * a * j));

    t.blocks.assign(3, {});
    // vertex 1 rows: X(H) plus p^2-1 down the identity column
    auto T11 = XH;
    for (long a = 0; a < m; ++a) T11[a][0] += Cyclotomic(p * p - 1);
    t.blocks[0] = {T11, zero_block(m, d), zero_block(m, m)};

    // vertex 2 rows
    auto T22 = XN;
    for (long a = 0; a < d; ++a) T22[a][0] += Cyclotomic(p - 1);
    auto T21 = zero_block(d, m);
    for (long a = 0; a < d; ++a)
        for (long j = 0; j < d; ++j) T21[a][j * (p + 1)] = T22[a][j] * Rational(p + 1);
    t.blocks[1] = {T21, T22, zero_block(d, m)};

    // vertex 3 rows: X(H) everywhere, restricted to N_H(Q_2) in the middle
    auto T32 = zero_block(m, d);
    for (long a = 0; a < m; ++a)
        for (long j = 0; j < d; ++j) T32[a][j] = XH[a][j * (p + 1)];
    t.blocks[2] = {XH, T32, XH};
    return t;
}

TSCT build_tsct_minimal(long p, long m) {
    FrobSpec spec = validate_spec(p, m, Fusion::Minimal);
    int r = spec.num_vertices(); // p + 3
    TSCT t;
    t.spec = spec;

    Group g = Group::build(spec);
    for (int i = 1; i <= r; ++i) t.vertices.push_back({i, g.vertex_order(i), spec.order(), spec.shape()});

    std::vector<long> all_h(m);
    std::iota(all_h.begin(), all_h.end(), 0);
    for (int i = 1; i <= r; ++i) t.col_labels.push_back(h_power_columns(all_h, m, p));

    // kernels of the induced characters, grouped by construction
    std::vector<std::vector<int>> by_vertex(r + 1);
    auto exps = induced_char_exponents(g);
    for (size_t b = 0; b < exps.size(); ++b) {
        long u = exps[b][0], w = exps[b][1];
        std::array<long, 2> f = w != 0 ? std::array<long, 2>{1, (p - u) * pow_mod(w, p - 2, p) % p}
                                       : std::array<long, 2>{0, 1};
        by_vertex[g.vertex_of_line(f)].push_back((int)(m + b + 1));
    }

    t.row_labels.assign(r, {});
    std::vector<int> all_induced;
    for (long b = 1; b <= spec.num_induced(); ++b) all_induced.push_back((int)(m + b));
    for (int a = 1; a <= m; ++a) {
        std::vector<int> lab{a};
        lab.insert(lab.end(), all_induced.begin(), all_induced.end());
        t.row_labels[0].push_back(lab);
        t.row_labels[r - 1].push_back({a});
    }
    for (int i = 2; i <= r - 1; ++i)
        for (int a = 1; a <= m; ++a) {
            std::vector<int> lab{a};
            lab.insert(lab.end(), by_vertex[i].begin(), by_vertex[i].end());
            std::sort(lab.begin(), lab.end());
            t.row_labels[i - 1].push_back(lab);
        }

    auto XH = cyclic_values(m);
    auto bump = [&](long add) {
        auto M = XH;
        for (long a = 0; a < m; ++a) M[a][0] += Cyclotomic(add);
        return M;
    };

    t.blocks.assign(r, std::vector<std::vector<std::vector<Cyclotomic>>>(r));
    for (int i = 1; i <= r; ++i)
        for (int v = 1; v <= r; ++v) t.blocks[i - 1][v - 1] = zero_block(m, m);
    t.blocks[0][0] = bump(p * p - 1);
    for (int i = 2; i <= r - 1; ++i) {
        t.blocks[i - 1][0] = bump(p - 1);
        t.blocks[i - 1][i - 1] = bump(p - 1);
    }
    for (int v = 1; v <= r; ++v) t.blocks[r - 1][v - 1] = XH;
    return t;
}

TSCT build_tsct(const FrobSpec& spec) {
    return spec.fusion == Fusion::Maximal ? build_tsct_maximal(spec.p, spec.m)
                                          : build_tsct_minimal(spec.p, spec.m);
}

} // namespace frobtsct
