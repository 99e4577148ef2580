#include "doctest.h"

#include "helpers.hpp"

#include "brpic/extraspecial.hpp"
#include "brpic/orders.hpp"

using namespace brpic;
using namespace brpic::testing;

TEST_CASE("center profile: stated cases") {
    // omega = 0 on V_2 over F_3: pointed center of order 3^4
    {
        PrimeField f(3);
        auto c = center_profile(H3Class::zero(f, 2));
        CHECK(c.rad_dim == 2);
        CHECK(c.inv_center_order == 81);
        CHECK(c.is_center_pointed);
        CHECK_FALSE(c.pt_is_lagrangian);
    }
    // omega_D over F_3, n = 1: radical zero, 27 invertibles, Lagrangian pointed part
    {
        auto c = center_profile(omega_class({3, 1, ExtraSpecialSpec::Kind::D}));
        CHECK(c.rad_dim == 0);
        CHECK(c.inv_center_order == 27);
        CHECK_FALSE(c.is_center_pointed);
        CHECK(c.pt_is_lagrangian);
    }
    // x_0 ^ x_1 ^ x_2 on V_4 over F_3: e_3 spans the radical
    {
        PrimeField f(3);
        WedgeForm alt(f, 4, 3);
        alt.add_term({0, 1, 2}, 1);
        auto c = center_profile(H3Class::odd(alt, SymForm(f, 4, 2)));
        CHECK(c.rad_dim == 1);
        CHECK(c.inv_center_order == 243);
        CHECK_FALSE(c.pt_is_lagrangian);
    }
}

TEST_CASE("induction image order: stated cases") {
    SearchOptions opts;
    opts.workers = 2;
    // omega_D over F_2, n = 1: 2^0 * 24
    CHECK(induction_image_order(omega_class({2, 1, ExtraSpecialSpec::Kind::D}), opts) == 24);
    // omega = 0: p^C(n,2) * |GL_n|
    {
        PrimeField f(3);
        CHECK(induction_image_order(H3Class::zero(f, 2), opts) == 3 * 48);
    }
    // omega_Q over F_3, n = 1: 3^0 * 36
    CHECK(induction_image_order(omega_class({3, 1, ExtraSpecialSpec::Kind::Q}), opts) == 36);
}

TEST_CASE("brpic order: stated cases and the degenerate refusal") {
    SearchOptions opts;
    opts.workers = 2;
    CHECK(brpic_order(omega_class({2, 1, ExtraSpecialSpec::Kind::D}), opts) == 24);
    CHECK(brpic_order(omega_class({2, 1, ExtraSpecialSpec::Kind::Q}), opts) == 6);
    CHECK(brpic_order(omega_class({3, 1, ExtraSpecialSpec::Kind::D}), opts) == 5616);

    PrimeField f(3);
    CHECK_THROWS_AS(brpic_order(H3Class::zero(f, 3), opts), NondegenerateRequired);
}

TEST_CASE("report: kernel exponent and agreement in the non-degenerate case") {
    SearchOptions opts;
    opts.workers = 2;
    auto r = brpic_report(omega_class({3, 1, ExtraSpecialSpec::Kind::D}), opts);
    CHECK(r.kernel_exponent == 0);  // C(3,2) - 3 + 0
    REQUIRE(r.brpic_order.has_value());
    CHECK(*r.brpic_order == r.induction_image_order);
    CHECK(*r.brpic_order == 5616);

    // degenerate: induction order still reported, brpic order absent
    PrimeField f(3);
    auto rz = brpic_report(H3Class::zero(f, 2), opts);
    CHECK_FALSE(rz.brpic_order.has_value());
    CHECK(rz.kernel_exponent == 1);  // C(2,2)=1, -2, +2
    CHECK(rz.induction_image_order == 3 * 48);
}

TEST_CASE("profiles and orders are constant on GL-orbits") {
    auto rng_ = rng(51);
    SearchOptions opts;
    opts.workers = 2;
    for (std::uint32_t p : {2u, 3u}) {
        ExtraSpecialSpec::Kind kinds[] = {ExtraSpecialSpec::Kind::D, ExtraSpecialSpec::Kind::Q};
        for (auto kind : kinds) {
            H3Class omega = omega_class({p, 1, kind});
            auto base_profile = center_profile(omega);
            BigInt base_order = brpic_order(omega, opts);
            PrimeField f(p);
            for (int t = 0; t < 5; ++t) {
                FpMatrix g = rand_invertible(rng_, f, 3);
                H3Class moved = gl_act_h3(g, omega);
                auto cp = center_profile(moved);
                CHECK(cp.rad_dim == base_profile.rad_dim);
                CHECK(cp.inv_center_order == base_profile.inv_center_order);
                CHECK(cp.is_center_pointed == base_profile.is_center_pointed);
                CHECK(brpic_order(moved, opts) == base_order);
                CHECK(induction_image_order(moved, opts) == base_order);
            }
        }
    }
}
