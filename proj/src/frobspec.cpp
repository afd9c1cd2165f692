#include "frobtsct/frobspec.hpp"

#include <numeric>
#include <stdexcept>

#include "frobtsct/numtheory.hpp"

namespace frobtsct {

std::string fusion_name(Fusion f) { return f == Fusion::Maximal ? "maximal" : "minimal"; }

Fusion fusion_from_name(const std::string& name) {
    if (name == "maximal") return Fusion::Maximal;
    if (name == "minimal") return Fusion::Minimal;
    throw std::invalid_argument("unknown fusion case '" + name + "' (expected maximal or minimal)");
}

std::string FrobSpec::shape() const {
    std::string cp = "C" + std::to_string(p);
    return "(" + cp + " x " + cp + ") : C" + std::to_string(m);
}

FrobSpec validate_spec(long p, long m, Fusion fusion) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("validate_spec: p must be an odd prime");
    if (m < 2)
        throw std::invalid_argument("validate_spec: m must be at least 2");
    FrobSpec s;
    s.p = p;
    s.m = m;
    s.fusion = fusion;
    if (fusion == Fusion::Maximal) {
        long d = std::gcd(p - 1, m);
        if (m != (p + 1) * d)
            throw std::invalid_argument("validate_spec: maximal fusion requires m = (p+1) * gcd(p-1, m)");
        s.d = d;
        s.e = (p * p - 1) / m; // = (p-1)/d
        if (d % 2 != 0 || s.e * m != p * p - 1)
            throw std::logic_error("validate_spec: inconsistent maximal-fusion derived data");
    } else {
        if ((p - 1) % m != 0)
            throw std::invalid_argument("validate_spec: minimal fusion requires m | p-1");
        s.a = (p - 1) / m;
    }
    return s;
}

std::vector<FrobSpec> all_valid_specs(long max_order) {
    std::vector<FrobSpec> out;
    for (long p = 3; p * p * 2 <= max_order; p += 2) {
        if (!is_prime(p)) continue;
        for (long m = 2; p * p * m <= max_order; ++m) {
            for (Fusion f : {Fusion::Maximal, Fusion::Minimal}) {
                try {
                    out.push_back(validate_spec(p, m, f));
                } catch (const std::invalid_argument&) {
                }
            }
        }
    }
    return out;
}

} // namespace frobtsct
