#pragma once

#include "brpic/h3.hpp"
#include "brpic/zoo.hpp"

namespace brpic {

// The two extra special groups of order p^{2n+1}: kind D has exponent p
// (dihedral-type at p = 2), kind Q has exponent p^2 (quaternion-type).
struct ExtraSpecialSpec {
    enum class Kind { D, Q };

    ExtraSpecialSpec(std::uint32_t p_, int n_, Kind kind_);

    PrimeField field;
    int n;
    Kind kind;
};

// Extension class kappa_G in H^2(V_{2n}, F_p) of 0 -> F_p -> G -> V_{2n} -> 0.
// Coordinates here are 0-based: pair (2i-2, 2i-1) is the i-th symplectic
// block. Odd p: kappa_D = sum x_{2i-1} x_{2i}, kappa_Q adds the carry y_1;
// p = 2: kappa_Q adds x_1^2 + x_2^2 instead.
H2FpClass kappa_class(const ExtraSpecialSpec& spec);

// omega_G on V_{2n+1}: the image of x_0 u kappa_G. Coordinate 0 is the
// central direction.
H3Class omega_class(const ExtraSpecialSpec& spec);

// Known stabilizer identification for the spec, with its order for
// cross-checking; throws NotTabulated when no identification is on record
// (odd p, n > 1, kind Q).
struct ExpectedResult {
    std::string group_name;
    BigInt order;
    std::string claim;  // which identification supplies the value
};

ExpectedResult expected_result(const ExtraSpecialSpec& spec);

}  // namespace brpic
