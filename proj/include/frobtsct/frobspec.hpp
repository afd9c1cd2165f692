#pragma once

#include <string>
#include <vector>

namespace frobtsct {

// fusion pattern of the p-subgroups: one conjugacy class of subgroups of
// order p (maximal fusion) or p+1 classes (minimal fusion)
enum class Fusion { Maximal, Minimal };

std::string fusion_name(Fusion f);
Fusion fusion_from_name(const std::string& name);

// parameters of the group (C_p x C_p) : C_m together with the quantities
// derived from the fusion condition
struct FrobSpec {
    long p = 0;
    long m = 0;
    Fusion fusion = Fusion::Maximal;
    long d = 0; // maximal: gcd(p-1, m), order of N_H(Q_2)
    long e = 0; // maximal: (p^2-1)/m, number of induced characters
    long a = 0; // minimal: (p-1)/m, induced characters per kernel line

    long order() const { return p * p * m; }
    // number of vertex subgroup classes
    int num_vertices() const { return fusion == Fusion::Maximal ? 3 : (int)p + 3; }
    // number of irreducible characters of the group
    long num_irr() const { return m + num_induced(); }
    long num_induced() const { return fusion == Fusion::Maximal ? e : (p + 1) * a; }
    std::string shape() const; // "(Cp x Cp) : Cm"
};

// checks the arithmetic conditions on (p, m) and fills in the derived
// quantities; throws std::invalid_argument naming the violated condition
FrobSpec validate_spec(long p, long m, Fusion fusion);

// every valid spec with order <= max_order, sorted by (p, m, fusion)
std::vector<FrobSpec> all_valid_specs(long max_order);

} // namespace frobtsct
