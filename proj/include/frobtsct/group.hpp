#pragma once

#include <array>
#include <vector>

#include "frobtsct/frobspec.hpp"

namespace frobtsct {

// element (f1, f2; h^j) of F : <h>, residues mod p, mod p, mod m.
// The total order is lexicographic on (j, f1, f2).
struct Elt {
    long f1 = 0, f2 = 0, j = 0;

    friend bool operator==(const Elt&, const Elt&) = default;
    friend bool operator<(const Elt& a, const Elt& b) {
        if (a.j != b.j) return a.j < b.j;
        if (a.f1 != b.f1) return a.f1 < b.f1;
        return a.f2 < b.f2;
    }
};

struct ConjClass {
    Elt rep;                    // smallest element of the class
    long size = 0;
    std::vector<long> elem_ids; // sorted
};

// concrete (C_p x C_p) : C_m with the deterministic action of h on F
class Group {
public:
    static Group build(const FrobSpec& spec);

    const FrobSpec& spec() const { return spec_; }
    long order() const { return n_; }
    long p() const { return spec_.p; }
    long m() const { return spec_.m; }

    // element ids follow the total order: id = (j * p + f1) * p + f2
    long id(const Elt& g) const { return (g.j * p_ + g.f1) * p_ + g.f2; }
    Elt elt(long id) const { return {id / p_ % p_, id % p_, id / (p_ * p_)}; }

    Elt mul(const Elt& a, const Elt& b) const;
    Elt inv(const Elt& a) const;
    Elt conj(const Elt& g, const Elt& x) const { return mul(mul(g, x), inv(g)); }
    long elt_order(const Elt& g) const;
    bool in_kernel(const Elt& g) const { return g.j == 0; }

    // action of h^j on F (2x2 matrix mod p, row major)
    const std::array<long, 4>& alpha_pow(long j) const { return alpha_pow_[j % m_]; }
    // f -> alpha^j f and the transposed action (used on character exponents)
    std::array<long, 2> act(long j, std::array<long, 2> f) const;
    std::array<long, 2> act_transposed(long j, std::array<long, 2> e) const;

    // conjugacy classes, ascending by class representative
    std::vector<ConjClass> classes_brute() const;
    std::vector<ConjClass> classes_closed() const;

    // orbits of <alpha> on F \ {1}, each sorted, ordered by smallest member
    std::vector<std::vector<long>> kernel_orbits() const;

    // the p+1 subgroups of order p (lines in F), as sorted id lists,
    // ordered by smallest nontrivial element
    std::vector<std::vector<long>> order_p_subgroups() const;

    // the vertex subgroup Q_i (1-based); Q_1 = 1, Q_r = F, lines in between
    std::vector<long> vertex_subgroup(int i) const;
    long vertex_order(int i) const;
    // line through (1, c) for c in 0..p-1, or the line <y> for c = -1
    std::vector<long> line(long c) const;
    // vertex index of the line containing a nonzero f (minimal fusion layout)
    int vertex_of_line(std::array<long, 2> f) const;

    std::vector<long> normalizer(const std::vector<long>& subgroup_ids) const;
    long normalizer_order_closed(int vertex) const;

    // h^j for j = 0..m-1: one representative per p-regular class
    std::vector<Elt> p_regular_representatives() const;

    // set of all commutators [a, b], sorted ids (oracle substrate)
    std::vector<long> commutator_set() const;

private:
    FrobSpec spec_;
    long p_ = 0, m_ = 0, n_ = 0;
    std::vector<std::array<long, 4>> alpha_pow_; // alpha^0 .. alpha^{m-1}
};

} // namespace frobtsct
