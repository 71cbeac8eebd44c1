#include "qrious/families.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qrious;

namespace {

std::vector<std::vector<i64>> rows(const std::vector<LinearForm>& fs) {
    std::vector<std::vector<i64>> out;
    for (const auto& f : fs) out.push_back(f.coeffs);
    return out;
}

}  // namespace

TEST_CASE("registry contents") {
    REQUIRE(known_families().size() == 7);
    for (const char* name : {"A", "Aq", "C", "Cq", "binomial", "superCatalan", "family3"})
        CHECK(find_family(name) != nullptr);
    CHECK(find_family("nope") == nullptr);
}

TEST_CASE("A spec coefficients") {
    const Family* a = find_family("A");
    REQUIRE(a);
    CHECK(rows(a->spec.num) == std::vector<std::vector<i64>>{{3, 3}, {0, 3}, {2, 0}, {0, 2}});
    CHECK(rows(a->spec.den) ==
          std::vector<std::vector<i64>>{{2, 3}, {1, 2}, {1, 1}, {1, 0}, {0, 1}, {0, 1}});
    CHECK(a->spec == find_family("Aq")->spec);
}

TEST_CASE("Cq spec coefficients") {
    const Family* cq = find_family("Cq");
    REQUIRE(cq);
    CHECK(rows(cq->spec.num) == std::vector<std::vector<i64>>{{6, 30}, {0, 1}});
    CHECK(rows(cq->spec.den) == std::vector<std::vector<i64>>{{3, 15}, {2, 10}, {1, 0}, {0, 6}});
}

TEST_CASE("superCatalan spec coefficients") {
    const Family* sc = find_family("superCatalan");
    REQUIRE(sc);
    CHECK(rows(sc->spec.num) == std::vector<std::vector<i64>>{{2, 0}, {0, 2}});
    CHECK(rows(sc->spec.den) == std::vector<std::vector<i64>>{{1, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("heights and balance") {
    auto height_of = [](const char* n) { return find_family(n)->height(); };
    CHECK(height_of("A") == 2);
    CHECK(height_of("Aq") == 2);
    CHECK(height_of("C") == 1);
    CHECK(height_of("Cq") == 2);
    CHECK(height_of("binomial") == 1);
    CHECK(height_of("superCatalan") == 1);
    CHECK(height_of("family3") == 1);
    for (const auto& f : known_families()) {
        INFO(f.name);
        CHECK(f.balanced());
    }
}

TEST_CASE("family3 domain is triangular") {
    const RatioSpec& t = find_family("family3")->spec;
    CHECK(t.in_domain(ParamPoint{2, 3}));
    CHECK_FALSE(t.in_domain(ParamPoint{3, 2}));
}

TEST_CASE("Cq at m=0 matches the one-parameter Chebyshev ratio") {
    CHECK(cq_reduces_to_chebyshev(2));
}
