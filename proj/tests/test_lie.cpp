#include "doctest.h"

#include "helpers.hpp"

#include "brpic/lie.hpp"

using namespace brpic;
using namespace brpic::testing;

namespace {

// sl_2 with basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
LieAlgebraFp sl2(std::uint32_t p) {
    PrimeField field(p);
    std::map<std::pair<int, int>, std::vector<LieAlgebraFp::BracketTerm>> br;
    br[{0, 1}] = {{2, 1}};   // [e,f] = h
    br[{2, 0}] = {{0, 2}};   // [h,e] = 2e
    br[{2, 1}] = {{1, -2}};  // [h,f] = -2f
    return LieAlgebraFp(field, 3, br);
}

LieAlgebraFp abelian(std::uint32_t p, int dim) {
    return LieAlgebraFp(PrimeField(p), dim, {});
}

}  // namespace

TEST_CASE("ad matrices of sl_2") {
    LieAlgebraFp g = sl2(5);
    PrimeField f(5);
    CHECK(ad_matrix(g, 0) == FpMatrix::from_rows(f, {{0, 0, -2}, {0, 0, 0}, {0, 1, 0}}));
    CHECK(ad_matrix(g, 1) == FpMatrix::from_rows(f, {{0, 0, 0}, {0, 0, 2}, {-1, 0, 0}}));
    CHECK(ad_matrix(g, 2) == FpMatrix::from_rows(f, {{2, 0, 0}, {0, -2, 0}, {0, 0, 0}}));
    CHECK(ad_matrix(abelian(5, 3), 0) == FpMatrix(PrimeField(5), 3, 3));
    CHECK_THROWS_AS(ad_matrix(g, 3), IndexOutOfRange);
}

TEST_CASE("Killing form of sl_2") {
    LieAlgebraFp g = sl2(5);
    MetricForm b = killing_form(g);
    CHECK(b.b.at(0, 1) == 4);
    CHECK(b.b.at(1, 0) == 4);
    CHECK(b.b.at(2, 2) == 3);  // 8 mod 5
    CHECK(b.b.at(0, 0) == 0);
    CHECK(b.b.at(0, 2) == 0);
    CHECK(is_invertible(b.b));  // non-degenerate

    CHECK(killing_form(abelian(5, 2)).b == FpMatrix(PrimeField(5), 2, 2));
}

TEST_CASE("malformed structure constants are rejected") {
    PrimeField f(5);
    // [e0,e1] = e2, [e0,e2] = e0: the Jacobi sum on (0,1,2) is -e2 != 0
    std::map<std::pair<int, int>, std::vector<LieAlgebraFp::BracketTerm>> bad;
    bad[{0, 1}] = {{2, 1}};
    bad[{0, 2}] = {{0, 1}};
    CHECK_THROWS_AS(LieAlgebraFp(f, 3, bad), WrongShape);

    // [e_i, e_i] must vanish
    std::map<std::pair<int, int>, std::vector<LieAlgebraFp::BracketTerm>> diag;
    diag[{0, 0}] = {{1, 1}};
    CHECK_THROWS_AS(LieAlgebraFp(f, 2, diag), WrongShape);

    // duplicate unordered pair
    std::map<std::pair<int, int>, std::vector<LieAlgebraFp::BracketTerm>> dup;
    dup[{0, 1}] = {{2, 1}};
    dup[{1, 0}] = {{2, -1}};
    CHECK_THROWS_AS(LieAlgebraFp(f, 3, dup), WrongShape);

    CHECK_THROWS_AS(sl2(3), WrongCharacteristic);
}

TEST_CASE("bracket evaluation is bilinear and antisymmetric") {
    LieAlgebraFp g = sl2(7);
    PrimeField f(7);
    auto rng_ = rng(61);
    for (int t = 0; t < 20; ++t) {
        FpVector a = rand_vector(rng_, f, 3);
        FpVector b = rand_vector(rng_, f, 3);
        FpVector c = rand_vector(rng_, f, 3);
        CHECK(g.bracket(a, b) + g.bracket(b, a) == FpVector(f, 3));
        CHECK(g.bracket(a + b, c) == g.bracket(a, c) + g.bracket(b, c));
    }
}

TEST_CASE("invariance checking") {
    LieAlgebraFp g = sl2(5);
    PrimeField f(5);
    // the Killing form passes by construction; a generic symmetric matrix fails
    FpMatrix not_invariant = FpMatrix::from_rows(f, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK_THROWS_AS(MetricForm(g, not_invariant), FormNotInvariant);
    // asymmetric input fails earlier
    FpMatrix asym = FpMatrix::from_rows(f, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
    CHECK_THROWS_AS(MetricForm(g, asym), WrongShape);
    // scalar multiples of the Killing form stay invariant
    MetricForm b = killing_form(g);
    FpMatrix doubled = b.b;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) doubled.set_residue(i, j, f.mul(2, b.b.at(i, j)));
    CHECK_NOTHROW(MetricForm(g, doubled));
}

TEST_CASE("omega from the Killing form of sl_2") {
    // over F_5: (3 x_e^x_f^x_h, 4 z_e z_f + 3 z_h^2)
    LieAlgebraFp g = sl2(5);
    H3Class w = omega_from_metric(g, killing_form(g));
    PrimeField f(5);
    WedgeForm alt(f, 3, 3);
    alt.add_term({0, 1, 2}, 3);  // 8 mod 5
    SymForm sym(f, 3, 2);
    sym.add_term({0, 1}, 4);
    sym.add_term({2, 2}, 3);
    CHECK(w == H3Class::odd(alt, sym));
    CHECK(is_nondegenerate(w.alt_part()));

    // abelian algebra with the zero form: omega = 0, and no stabilizer report
    LieAlgebraFp ab = abelian(5, 2);
    MetricForm zero(ab, FpMatrix(f, 2, 2));
    CHECK(omega_from_metric(ab, zero).is_zero());
    CHECK_THROWS_AS(autm_stab_report(ab, zero), NondegenerateRequired);
}

TEST_CASE("the metric criterion for non-degeneracy") {
    // perfect + non-degenerate form <-> non-degenerate alternating part
    LieAlgebraFp g = sl2(7);
    CHECK(is_nondegenerate(omega_from_metric(g, killing_form(g)).alt_part()));
    // degenerate invariant form on an abelian algebra: alt part is zero
    LieAlgebraFp ab = abelian(7, 3);
    MetricForm idf(ab, FpMatrix::identity(PrimeField(7), 3));
    CHECK_FALSE(is_nondegenerate(omega_from_metric(ab, idf).alt_part()));
}
