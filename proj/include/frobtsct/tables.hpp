#pragma once

#include <array>
#include <string>
#include <vector>

#include "frobtsct/cyclotomic.hpp"
#include "frobtsct/group.hpp"

namespace frobtsct {

// one column of a character table
struct ClassCol {
    std::string name; // GAP-style: element order + letter ("1a", "8b", ...)
    Elt rep;
    long size = 0;
    long elt_order = 0;
};

struct CharTable {
    std::string group_name;
    long group_order = 0;
    std::vector<std::string> row_names;
    std::vector<ClassCol> cols;
    std::vector<std::vector<Cyclotomic>> vals;

    long rows() const { return (long)row_names.size(); }
    long num_cols() const { return (long)cols.size(); }
};

// assigns "1a, 8a, 4a, 8b, ..." given the element orders, in column order
std::vector<std::string> class_names(const std::vector<long>& orders);

// X(C_m): rows xi_a, columns h^j, entries zeta_m^{(a-1) j}
CharTable cyclic_table(long m);

// the exponent pairs e_b labelling the induced characters chi_{m+b}, in the
// order the characters are listed in the table
std::vector<std::array<long, 2>> induced_char_exponents(const Group& g);

// full ordinary character table: m linear rows (inflations) then the induced
// rows; columns are the identity, the h^j classes, then the classes inside F
CharTable irr_frobenius(const FrobSpec& spec);

// keep the p-regular columns (those with trivial F-part), preserving order
CharTable restrict_to_p_regular(const CharTable& X);

// ordinary character table of N_G(Q_v)/Q_v, built from the quotient's
// parameters (v is 1-based; v = 1 gives X(G), v = r gives X(H))
CharTable quotient_normalizer_table(const FrobSpec& spec, int v);

struct DecMatrix {
    std::vector<std::string> row_names; // ordinary characters
    std::vector<std::string> col_names; // p-modular simples
    std::vector<std::vector<long>> entries;
};

// p-decomposition matrix of N_G(Q_v)/Q_v: identity block for the linear
// characters, all-ones rows for the induced ones
DecMatrix decomposition_matrix(const FrobSpec& spec, int v);

// table of projective indecomposable characters: Dec^t * X restricted to the
// p-regular columns
CharTable projective_table(const DecMatrix& dec, const CharTable& X_p_regular);

} // namespace frobtsct
