#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "frobtsct/tsct.hpp"

namespace frobtsct {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail; // failure description or short note
};

struct Report {
    std::vector<CheckResult> checks;
    bool ok() const {
        for (auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
    void add(const std::string& name, bool ok, const std::string& detail = "") {
        checks.push_back({name, ok, detail});
    }
};

// values of the permutation character Ind_Q^G(1) at the given class
// representatives (fixed points on G/Q, counted by enumeration)
std::vector<Cyclotomic> permutation_character(const Group& g, const std::vector<long>& subgroup_ids,
                                              const std::vector<ClassCol>& cols);

struct TSRowMult {
    int vertex = 0; // 1-based
    int row = 0;    // 0-based within the vertex
    long mult = 0;
};

struct TSDecomp {
    bool ok = false;
    std::string error;
    std::vector<long> irr_coeffs; // multiplicities of Irr(G) in the character
    std::vector<TSRowMult> mults; // greedy decomposition into TSCT rows
};

// decompose a character (values aligned with X's columns) into TSCT rows
// whose vertices are subconjugate to Q_target; greedy, largest vertex first;
// fails loudly if no non-negative integer combination is found
TSDecomp decompose_into_ts_rows(const TSCT& t, const CharTable& X, const std::vector<Cyclotomic>& values,
                                int target_vertex);

// first and second orthogonality relations, exact
Report check_orthogonality(const CharTable& X);

// closed-form group data against brute-force enumeration (axioms, classes,
// subgroups, normalizers, p-regular representatives, commutators)
Report closed_form_vs_enumeration(const FrobSpec& spec);

// the full verification battery; enumeration-backed checks are skipped with a
// note when the group order exceeds cap
Report verify_spec_report(const FrobSpec& spec, long cap);

// fixture comparison (exact values; atoms are parsed, not string-compared)
Report verify_chartab_fixture(const CharTable& X, const nlohmann::json& fixture);
Report verify_tsct_fixture(const TSCT& t, const nlohmann::json& fixture);

nlohmann::json load_json_file(const std::string& path);

} // namespace frobtsct
