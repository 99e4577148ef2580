#include "doctest.h"

#include "helpers.hpp"

#include "brpic/extraspecial.hpp"
#include "brpic/stabilizer.hpp"

using namespace brpic;
using Kind = brpic::ExtraSpecialSpec::Kind;

TEST_CASE("kappa classes") {
    {
        H2FpClass k = kappa_class({3, 1, Kind::D});
        CHECK(k.pairs.size() == 1);
        CHECK(k.pairs.at({0, 1}) == 1);
        CHECK(k.carry == std::vector<Residue>{0, 0});
    }
    {
        H2FpClass k = kappa_class({3, 1, Kind::Q});
        CHECK(k.pairs.at({0, 1}) == 1);
        CHECK(k.carry == std::vector<Residue>{1, 0});
    }
    {
        H2FpClass k = kappa_class({2, 2, Kind::Q});
        CHECK(k.pairs.size() == 2);
        CHECK(k.pairs.at({0, 1}) == 1);
        CHECK(k.pairs.at({2, 3}) == 1);
        CHECK(k.carry == std::vector<Residue>{1, 1, 0, 0});  // x_1^2 + x_2^2
    }
}

TEST_CASE("omega classes match the closed forms") {
    // (p=3, n=1, Q) -> (x_0^x_1^x_2, z_0 z_1)
    {
        H3Class w = omega_class({3, 1, Kind::Q});
        PrimeField f(3);
        WedgeForm alt(f, 3, 3);
        alt.add_term({0, 1, 2}, 1);
        SymForm sym(f, 3, 2);
        sym.add_term({0, 1}, 1);
        CHECK(w == H3Class::odd(alt, sym));
    }
    // (p=2, n=1, D) -> coset of x_0 x_1 x_2
    {
        H3Class w = omega_class({2, 1, Kind::D});
        PrimeField f(2);
        SymForm cubic(f, 3, 3);
        cubic.add_term({0, 1, 2}, 1);
        CHECK(w == H3Class::even(sym3_reduce(cubic)));
    }
    // (p=2, n=2, D) -> coset of x_0x_1x_2 + x_0x_3x_4
    {
        H3Class w = omega_class({2, 2, Kind::D});
        PrimeField f(2);
        SymForm cubic(f, 5, 3);
        cubic.add_term({0, 1, 2}, 1);
        cubic.add_term({0, 3, 4}, 1);
        CHECK(w == H3Class::even(sym3_reduce(cubic)));
    }
    // closed forms for every parity and n <= 3: alt part is always
    // x_0 ^ (sum of symplectic pairs); odd-p sym part is z_0 z_1 for Q only
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int n = 1; n <= 3; ++n) {
            for (Kind kind : {Kind::D, Kind::Q}) {
                H3Class w = omega_class({p, n, kind});
                PrimeField f = w.field();
                WedgeForm expect_alt(f, 2 * n + 1, 3);
                for (int i = 1; i <= n; ++i) expect_alt.add_term({0, 2 * i - 1, 2 * i}, 1);
                CHECK(w.alt_part() == expect_alt);
                if (p != 2) {
                    SymForm expect_sym(f, 2 * n + 1, 2);
                    if (kind == Kind::Q) expect_sym.add_term({0, 1}, 1);
                    CHECK(w.sym() == expect_sym);
                }
            }
        }
    }
}

TEST_CASE("alternating parts are non-degenerate for every spec") {
    for (std::uint32_t p : {2u, 3u, 5u})
        for (int n = 1; n <= 3; ++n)
            for (Kind kind : {Kind::D, Kind::Q}) {
                H3Class w = omega_class({p, n, kind});
                CHECK(is_nondegenerate(w.alt_part()));
            }
}

TEST_CASE("expected results") {
    CHECK(expected_result({2, 2, Kind::D}).order == 720);
    CHECK(expected_result({2, 2, Kind::D}).group_name == "Sp_4(F_2)");
    CHECK(expected_result({2, 1, Kind::Q}).order == 6);
    CHECK(expected_result({2, 1, Kind::Q}).group_name == "S_3");
    CHECK(expected_result({5, 1, Kind::D}).order == 372000);  // |SL_3(F_5)|
    CHECK(expected_result({3, 2, Kind::D}).order == 8398080);
    CHECK_THROWS_AS(expected_result({5, 2, Kind::Q}), NotTabulated);
}

TEST_CASE("brute force confirms the expected orders on every feasible spec") {
    // the n = 1 cases for p in {2, 3, 5}; larger ones live in the acceptance
    // suite (GL_5(F_2)) or need the closure method (odd p, n = 2)
    for (std::uint32_t p : {2u, 3u, 5u})
        for (Kind kind : {Kind::D, Kind::Q}) {
            ExtraSpecialSpec spec{p, 1, kind};
            auto r = brute_force_stabilizer(omega_class(spec));
            CHECK(r.order == expected_result(spec).order);
        }
}
