#include "qrious/laurent.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qrious;

TEST_CASE("single factor expansion") {
    LaurentPoly2 p = lp_mul_factor(LaurentPoly2::one(), {0, 1, 0});  // 1 - x
    REQUIRE(p.term_count() == 2);
    CHECK(p.terms().at({0, 0}) == IntPoly::one());
    CHECK(p.terms().at({1, 0}) == IntPoly({-1}));
}

TEST_CASE("two factors with q-weighting") {
    // (1 - x)(1 - q/x) = (1 + q) - x - q/x
    LaurentPoly2 p = LaurentPoly2::one();
    p.mul_one_minus({0, 1, 0});
    p.mul_one_minus({1, -1, 0});
    REQUIRE(p.term_count() == 3);
    CHECK(p.terms().at({0, 0}) == IntPoly({1, 1}));
    CHECK(p.terms().at({1, 0}) == IntPoly({-1}));
    CHECK(p.terms().at({-1, 0}) == IntPoly({0, -1}));
    CHECK(p.constant_term() == IntPoly({1, 1}));
}

TEST_CASE("the unit monomial factor annihilates") {
    LaurentPoly2 p = LaurentPoly2::one();
    p.mul_one_minus({0, 1, 0});
    p.mul_one_minus({0, 0, 0});  // times (1 - 1)
    CHECK(p.is_zero());
    CHECK(p.constant_term().is_zero());
}

TEST_CASE("pochhammer factor lists") {
    auto fx = pochhammer_factors({0, 1, 0}, 2);
    REQUIRE(fx.size() == 2);
    CHECK((fx[0].qpow == 0 && fx[0].xpow == 1 && fx[0].ypow == 0));
    CHECK((fx[1].qpow == 1 && fx[1].xpow == 1 && fx[1].ypow == 0));

    auto fqx = pochhammer_factors({1, -1, 0}, 1);
    REQUIRE(fqx.size() == 1);
    CHECK(fqx[0].qpow == 1);

    auto fy = pochhammer_factors({0, -2, 1}, 3);
    REQUIRE(fy.size() == 3);
    for (i64 j = 0; j < 3; ++j) {
        CHECK(fy[static_cast<std::size_t>(j)].qpow == j);
        CHECK(fy[static_cast<std::size_t>(j)].xpow == -2);
        CHECK(fy[static_cast<std::size_t>(j)].ypow == 1);
    }

    CHECK(pochhammer_factors({0, 1, 0}, 0).empty());
}

TEST_CASE("constant term extraction") {
    // (1 - x)(1 - 1/x) = 2 - x - 1/x
    LaurentPoly2 p = LaurentPoly2::one();
    p.mul_one_minus({0, 1, 0});
    p.mul_one_minus({0, -1, 0});
    CHECK(p.constant_term() == IntPoly({2}));

    LaurentPoly2 xy;
    xy.add_term(1, 0, IntPoly::one());
    xy.add_term(0, 1, IntPoly::one());
    CHECK(constant_term(xy).is_zero());
}

TEST_CASE("constant term is linear") {
    LaurentPoly2 a = LaurentPoly2::one();
    a.mul_one_minus({0, 1, 0});
    a.mul_one_minus({1, -1, 0});
    LaurentPoly2 b = LaurentPoly2::one();
    b.mul_one_minus({0, -1, 1});
    b.mul_one_minus({2, 1, -1});

    LaurentPoly2 sum = a;
    for (const auto& [key, coeff] : b.terms()) sum.add_term(key.first, key.second, coeff);
    CHECK(sum.constant_term() == a.constant_term() + b.constant_term());

    // Scaling by a q-polynomial scalar distributes over CT.
    IntPoly scalar{3, -1};
    LaurentPoly2 scaled;
    for (const auto& [key, coeff] : a.terms()) scaled.add_term(key.first, key.second, coeff * scalar);
    CHECK(scaled.constant_term() == a.constant_term() * scalar);
}

TEST_CASE("add_term prunes cancellations") {
    LaurentPoly2 p;
    p.add_term(2, -1, IntPoly({1, 1}));
    p.add_term(2, -1, -IntPoly({1, 1}));
    CHECK(p.is_zero());
    p.add_term(0, 0, IntPoly::zero());
    CHECK(p.term_count() == 0);
}

TEST_CASE("q=1 specialization") {
    LaurentPoly2 p = LaurentPoly2::one();
    p.mul_one_minus({0, 1, 0});
    p.mul_one_minus({1, -1, 0});
    p.specialize_q1();
    CHECK(p.terms().at({0, 0}) == IntPoly({2}));
    CHECK(p.terms().at({1, 0}) == IntPoly({-1}));
    CHECK(p.terms().at({-1, 0}) == IntPoly({-1}));

    // (1 - q) vanishes at q = 1 and the term must disappear entirely.
    LaurentPoly2 v;
    v.add_term(1, 1, IntPoly({1, -1}));
    v.specialize_q1();
    CHECK(v.is_zero());
}

TEST_CASE("budget guard") {
    LaurentPoly2 p = LaurentPoly2::one();
    p.mul_one_minus({0, 1, 0});
    CHECK_THROWS_AS(p.mul_one_minus({0, 0, 1}, 3), BudgetExceeded);
    try {
        LaurentPoly2 q = LaurentPoly2::one();
        q.mul_one_minus({0, 1, 0}, 4);
        q.mul_one_minus({0, 0, 1}, 3);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.terms == 4);
        CHECK(e.budget == 3);
    }
}

TEST_CASE("debug dump is key-sorted") {
    LaurentPoly2 p;
    p.add_term(1, 0, IntPoly({-1}));
    p.add_term(-1, 2, IntPoly({0, 1}));
    p.add_term(0, 0, IntPoly({1, 1}));
    CHECK(p.dump() == "-1 2 : q\n0 0 : 1+q\n1 0 : -1\n");
}

TEST_CASE("lp_mul_factor does not mutate its input") {
    LaurentPoly2 p = LaurentPoly2::one();
    LaurentPoly2 r = lp_mul_factor(p, {0, 1, 1});
    CHECK(p == LaurentPoly2::one());
    CHECK(r.term_count() == 2);
}
