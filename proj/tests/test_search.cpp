#include "qrious/search.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

using namespace qrious;

namespace {

const SearchCandidate* find_candidate(const std::vector<SearchCandidate>& all,
                                      std::vector<i64> num, std::vector<i64> den) {
    for (const auto& c : all)
        if (c.num == num && c.den == den) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("central binomial appears at the smallest sum") {
    auto all = search_height_one(2, 1);
    REQUIRE(all.size() == 1);
    CHECK(all[0].num == std::vector<i64>{2});
    CHECK(all[0].den == std::vector<i64>{1, 1});
    CHECK(all[0].outcome == SearchCandidate::Outcome::Integral);
    CHECK(all[0].label() == "(2; 1,1)");
    CHECK_FALSE(all[0].internal_error);
}

TEST_CASE("candidates are canonical, primitive, and deduplicated") {
    auto all = search_height_one(12, 2);
    std::set<std::pair<std::vector<i64>, std::vector<i64>>> seen;
    for (const auto& c : all) {
        CHECK(std::is_sorted(c.num.rbegin(), c.num.rend()));
        CHECK(std::is_sorted(c.den.rbegin(), c.den.rend()));
        i64 g = 0;
        for (i64 x : c.num) g = std::gcd(g, x);
        for (i64 x : c.den) g = std::gcd(g, x);
        CHECK(g == 1);
        CHECK(c.sum() == std::accumulate(c.den.begin(), c.den.end(), i64{0}));
        CHECK(c.den.size() == c.num.size() + 1);
        CHECK(seen.insert({c.num, c.den}).second);
    }
    CHECK(std::is_sorted(all.begin(), all.end(),
                         [](const SearchCandidate& x, const SearchCandidate& y) {
                             return std::tuple(x.sum(), x.num, x.den) <
                                    std::tuple(y.sum(), y.num, y.den);
                         }));
}

TEST_CASE("verdicts carry witnesses") {
    auto all = search_height_one(10, 2);
    for (const auto& c : all) {
        INFO(c.label());
        CHECK_FALSE(c.internal_error);
        if (c.outcome == SearchCandidate::Outcome::NonIntegral) {
            REQUIRE(c.criterion_witness.has_value());
            CHECK(c.criterion_witness->value < 0);
            REQUIRE(c.witness_n.has_value());
            RatioSpec spec = c.to_spec();
            CHECK(std::holds_alternative<NonInteger>(
                eval_ratio(spec, ParamPoint{*c.witness_n})));
        }
    }
}

TEST_CASE("the Chebyshev ratio is found") {
    auto all = search_height_one(31, 2);
    const SearchCandidate* chebyshev = find_candidate(all, {30, 1}, {15, 10, 6});
    REQUIRE(chebyshev != nullptr);
    CHECK(chebyshev->outcome == SearchCandidate::Outcome::Integral);
    CHECK_FALSE(chebyshev->internal_error);
    for (const auto& c : all) CHECK_FALSE(c.internal_error);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(search_height_one(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(search_height_one(5, 0), std::invalid_argument);
}
