#include <doctest.h>

#include "kschur/algebra.hpp"
#include "kschur/genfun.hpp"

using namespace kschur;

namespace {

MultiPoly x(int i) { return MultiPoly::variable(xvar(i)); }
MultiPoly beta() { return MultiPoly::constant(BetaInt::beta()); }

} // namespace

TEST_CASE("small generating polynomials") {
    // GQ of a single box in one variable: {1}, {1'}, {1',1}
    CHECK(genfun(Family::GQ, {1}, {}, 1) == x(1).scaled(BetaInt(2)) + beta() * x(1).pow(2));
    // GP excludes the primed diagonal fillings
    CHECK(genfun(Family::GP, {1}, {}, 1) == x(1));
    // jq of a single row of two boxes: 2x^2 - beta x
    CHECK(genfun(Family::jq, {2}, {}, 1) == x(1).pow(2).scaled(BetaInt(2)) - beta() * x(1));
    // gp of a single box: x1 + ... + xn
    for (int n = 1; n <= 4; ++n) {
        MultiPoly expect;
        for (int i = 1; i <= n; ++i) expect += x(i);
        CHECK(genfun(Family::gp, {1}, {}, n) == expect);
    }
    // not-contained inner gives 0
    CHECK(genfun(Family::gp, {2}, {3, 1}, 2).is_zero());
    CHECK(genfun(Family::GQss, {2}, {3, 1}, 2).is_zero());
}

TEST_CASE("one-variable specializations") {
    CHECK(genfun_one_var(Family::jp, {3}, {}) == one_row_basis_poly(OneRowBasis::jp, 3));
    CHECK(genfun_one_var(Family::jq, {1}, {}) == one_row_basis_poly(OneRowBasis::jq, 1));
    // gq of a single row of two boxes: the three plane partitions 1'1', 1'1, 11
    UniPoly expect = UniPoly::t(2).scaled(BetaRat(2)) - UniPoly::t(1).scaled(BetaRat::beta());
    CHECK(genfun_one_var(Family::gq, {2}, {}) == expect);
}

TEST_CASE("ribbon closed forms") {
    // (8,5,3,1)/(5,4,1): params scc=0, mcc=2, fb=2, res=3
    UniPoly t = UniPoly::t();
    UniPoly tb = t - UniPoly::constant(BetaRat::beta());
    UniPoly two_tb = t.scaled(BetaRat(2)) - UniPoly::constant(BetaRat::beta());
    UniPoly expect = (t * t.scaled(BetaRat(2)) - t.scaled(BetaRat::beta())) * tb * t.pow(3) * two_tb;
    CHECK(ribbon_closed_form(RibbonKind::jq, {8, 5, 3, 1}, {5, 4, 1}) == expect);
    CHECK(genfun_one_var(Family::jq, {8, 5, 3, 1}, {5, 4, 1}) == expect);

    for (int n = 1; n <= 6; ++n) {
        CHECK(ribbon_closed_form(RibbonKind::jq, {n}, {}) == one_row_basis_poly(OneRowBasis::jq, n));
        CHECK(ribbon_closed_form(RibbonKind::jp, {n}, {}) == one_row_basis_poly(OneRowBasis::jp, n));
    }
}

TEST_CASE("symmetry") {
    CHECK(is_symmetric(genfun(Family::jq, {3, 1}, {}, 3), 3));
    CHECK_FALSE(is_symmetric(x(1).pow(2) * x(2), 2));
    CHECK(is_symmetric(genfun(Family::GP, {2, 1}, {}, 3), 3));
}

TEST_CASE("double-slash families") {
    // GP_{lambda//empty} = GP_lambda
    for (const auto& lam : {StrictPartition{2}, StrictPartition{2, 1}, StrictPartition{3, 1}}) {
        CHECK(genfun(Family::GPss, lam, {}, 2) == genfun(Family::GP, lam, {}, 2));
        CHECK(genfun(Family::GQss, lam, {}, 2) == genfun(Family::GQ, lam, {}, 2));
    }
    // GP_{lambda//lambda} is typically not 1
    CHECK(genfun(Family::GPss, {2, 1}, {2, 1}, 2) != MultiPoly::one());
}

TEST_CASE("stability under dropping the last variable") {
    for (Family f : {Family::GP, Family::GQ, Family::gp, Family::gq, Family::jp, Family::jq}) {
        for (const auto& lam : {StrictPartition{3, 1}, StrictPartition{2, 1}}) {
            MultiPoly three = genfun(f, lam, {}, 3);
            CHECK(three.with_var_zero(xvar(3)) == genfun(f, lam, {}, 2));
        }
    }
}

TEST_CASE("gq to gp one-row relation") {
    // gq_n = 2 gp_n + [n>1] beta gp_{n-1} in several variables
    for (int n = 1; n <= 4; ++n) {
        for (int vars : {1, 3}) {
            MultiPoly lhs = genfun(Family::gq, {n}, {}, vars);
            MultiPoly rhs = genfun(Family::gp, {n}, {}, vars).scaled(BetaInt(2));
            if (n > 1) {
                MultiPoly prev = genfun(Family::gp, {n - 1}, {}, vars);
                rhs += prev.scaled(BetaInt::beta());
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("beta collapse at small scale") {
    for (const auto& lam : {StrictPartition{2, 1}, StrictPartition{3}}) {
        MultiPoly gp0 = beta_specialize(genfun(Family::gp, lam, {}, 3), BetaValue::zero);
        MultiPoly jp0 = beta_specialize(genfun(Family::jp, lam, {}, 3), BetaValue::zero);
        MultiPoly GP0 = beta_specialize(genfun(Family::GP, lam, {}, 3), BetaValue::zero);
        CHECK(gp0 == jp0);
        CHECK(jp0 == GP0);
        MultiPoly GQ0 = beta_specialize(genfun(Family::GQ, lam, {}, 3), BetaValue::zero);
        CHECK(GQ0 == GP0.scaled(BetaInt(Int(1) << lam.size())));
    }
}

TEST_CASE("split variables agree with plain genfun under renaming") {
    // f(x1, y1) with ny = 1 matches f(x1, x2) with x2 renamed
    MultiPoly split = genfun_split(Family::GQ, {2}, {}, 1, 1);
    MultiPoly plain = genfun(Family::GQ, {2}, {}, 2).renamed_var(xvar(2), yvar(1));
    CHECK(split == plain);
}
