#pragma once

#include <string>
#include <vector>

#include "frobtsct/tables.hpp"

namespace frobtsct {

struct VertexInfo {
    int index = 0;             // 1-based
    long order = 0;            // |Q_i|
    long normalizer_order = 0; // |N_G(Q_i)|
    std::string shape;         // of the normalizer
};

// block table of trivial source character values: block(i, v) holds the
// values of the vertex-Q_i rows at the p-regular classes of N_G(Q_v)
struct TSCT {
    FrobSpec spec;
    std::vector<VertexInfo> vertices;
    // [v-1][row] -> ascending 1-based indices into Irr(G); the row is the sum
    // of the listed ordinary characters
    std::vector<std::vector<std::vector<int>>> row_labels;
    // [v-1] -> p-regular class representatives of N_G(Q_v)
    std::vector<std::vector<ClassCol>> col_labels;
    // [i-1][v-1][row][col]
    std::vector<std::vector<std::vector<std::vector<Cyclotomic>>>> blocks;

    int num_vertices() const { return (int)vertices.size(); }
};

// render "chi_1+chi_9" from a label
std::string row_label_str(const std::vector<int>& label);
std::vector<int> parse_row_label(const std::string& s);

// maximal case: which linear characters restrict to theta_a on N_H(Q_2);
// fibers[a-1] lists 1-based indices, each of size p+1
std::vector<std::vector<int>> linear_restriction_fibers(const FrobSpec& spec);

// minimal case: vertex index i with Ker(chi) = Q_i, for an induced character
int kernel_of_character(const FrobSpec& spec, int chi_index);

TSCT build_tsct_maximal(long p, long m);
TSCT build_tsct_minimal(long p, long m);
TSCT build_tsct(const FrobSpec& spec);

} // namespace frobtsct
