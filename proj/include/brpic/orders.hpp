#pragma once

#include "brpic/stabilizer.hpp"

namespace brpic {

// Order-level data of the center Z(C(V_n, omega)):
//   inv_center_order = p^(n + rad_dim)  (dual group times the radical kernel
//   of the beta homomorphism),
//   pointed center  <=>  omega_alt = 0,
//   pointed part Lagrangian  <=>  rad_dim = 0.
struct CenterProfile {
    std::uint32_t p = 0;
    int n = 0;
    int rad_dim = 0;
    BigInt inv_center_order{0};
    bool is_center_pointed = false;
    bool pt_is_lagrangian = false;
};

CenterProfile center_profile(const H3Class& omega);

// |image of induction| = p^(C(n,2) - n + rad_dim) * |Stab(omega)|.
BigInt induction_image_order(const H3Class& omega, const SearchOptions& opts = {});

// |BrPic(C(V_n, omega))| = p^(C(n,2) - n) * |Stab(omega)| whenever omega_alt
// is non-degenerate; throws NondegenerateRequired otherwise (the exact
// sequence behind the formula needs that hypothesis, and no substitute value
// is reported).
BigInt brpic_order(const H3Class& omega, const SearchOptions& opts = {});

// Everything the two computations share, reported together. brpic_order is
// present only in the non-degenerate case; the group itself is an extension
// of Stab(omega) by an elementary abelian p-group whose extension class is
// not determined here.
struct BrPicReport {
    CenterProfile center;
    StabilizerReport stab;
    int kernel_exponent = 0;  // C(n,2) - n + rad_dim
    BigInt induction_image_order{0};
    std::optional<BigInt> brpic_order;
};

BrPicReport brpic_report(const H3Class& omega, const SearchOptions& opts = {});

}  // namespace brpic
