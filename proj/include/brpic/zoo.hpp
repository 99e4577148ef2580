#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brpic/gl.hpp"

namespace brpic {

// Classical order formulas used to label computed stabilizers. `n` is the
// natural-module dimension (degree for "S"); "Sp", "O+", "O-" need n even,
// "SO" needs n odd. "AffSp" is F_p^n x| Sp_n, "AffSpx" additionally extends
// by F_p^x, "AffO2" is F_p^2 x| O_2^+ (the split type). "S" is the symmetric
// group of degree n (p ignored).
BigInt named_order(std::string_view name, int n, std::uint32_t p);

struct ZooMatch {
    std::string name;      // display name with parameters, e.g. "Sp_4(F_2)"
    BigInt order;
};

// Looks for a zoo entry whose order equals `order`, sweeping a bounded
// parameter range around the ambient dimension. Several classical names can
// share one order (often because the groups are isomorphic); ties resolve by
// a fixed documented priority: S, SL, Sp, SO, O+, O-, AffO2, AffSp, AffSpx,
// GL. A match means order-consistency only, never a proved isomorphism.
std::optional<ZooMatch> find_named_match(const BigInt& order, std::uint32_t p, int ambient_dim);

}  // namespace brpic
