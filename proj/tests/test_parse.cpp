#include "qrious/parse.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qrious;

TEST_CASE("binomial spec") {
    RatioSpec s = parse_spec("m+n / m, n");
    CHECK(s.params == std::vector<char>{'m', 'n'});
    REQUIRE(s.num.size() == 1);
    REQUIRE(s.den.size() == 2);
    CHECK(s.num[0].coeffs == std::vector<i64>{1, 1});
    CHECK(s.den[0].coeffs == std::vector<i64>{1, 0});
    CHECK(s.den[1].coeffs == std::vector<i64>{0, 1});
}

TEST_CASE("Chebyshev spec") {
    RatioSpec s = parse_spec("30n, n / 15n, 10n, 6n");
    CHECK(s.params == std::vector<char>{'n'});
    CHECK(s.num.size() == 2);
    CHECK(s.den.size() == 3);
    CHECK(s.num[0].coeffs == std::vector<i64>{30});
    CHECK(s.den[2].coeffs == std::vector<i64>{6});
}

TEST_CASE("two-parameter spec with repeated forms and subtraction") {
    RatioSpec s = parse_spec("3m+3n,3n,2m,2n/2m+3n,m+2n,m+n,m,n,n");
    CHECK(s.arity() == 2);
    CHECK(s.num.size() == 4);
    CHECK(s.den.size() == 6);
    CHECK(s.den[4].coeffs == s.den[5].coeffs);

    RatioSpec t = parse_spec("m,2n/2m,n,n-m");
    CHECK(t.den[2].coeffs == std::vector<i64>{-1, 1});
}

TEST_CASE("whitespace is insignificant") {
    CHECK(parse_spec(" m + n /m,n ") == parse_spec("m+n/m,n"));
    CHECK(parse_spec("30n,n/15n,10n,6n") == parse_spec("30 n , n / 15 n, 10n ,6n"));
}

TEST_CASE("like terms combine") {
    RatioSpec s = parse_spec("n+n/2n");
    CHECK(s.num[0].coeffs == std::vector<i64>{2});
}

TEST_CASE("constant terms must cancel") {
    // "m+1-1" is fine; "m+1" is not a factorial argument template.
    CHECK(parse_spec("m+1-1/m").num[0].coeffs == std::vector<i64>{1});
    CHECK_THROWS_AS(parse_spec("m+1/m"), ParseError);
    CHECK_THROWS_AS(parse_spec("m/m-2"), ParseError);
    CHECK_THROWS_AS(parse_spec("3/m"), ParseError);
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse_spec("3m+ / n"), ParseError);
    CHECK_THROWS_AS(parse_spec("m+n"), ParseError);       // no '/'
    CHECK_THROWS_AS(parse_spec("m/ "), ParseError);       // empty denominator
    CHECK_THROWS_AS(parse_spec("/n"), ParseError);        // empty numerator
    CHECK_THROWS_AS(parse_spec("m,/n"), ParseError);      // dangling comma
    CHECK_THROWS_AS(parse_spec("m/n/n"), ParseError);     // second slash
    CHECK_THROWS_AS(parse_spec("m$n/m"), ParseError);     // stray character
    CHECK_THROWS_AS(parse_spec("m-m/n"), ParseError);     // form cancels to zero
    CHECK_THROWS_AS(parse_spec(""), ParseError);
    CHECK_THROWS_AS(parse_spec("99999999999999999999n/n"), ParseError);
}

TEST_CASE("error positions point into the input") {
    try {
        parse_spec("3m+ / n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
        CHECK(std::string(e.what()).find("offset 4") != std::string::npos);
    }
}

TEST_CASE("canonical text round-trips") {
    for (const char* text : {"m+n/m,n", "30n,n/15n,10n,6n", "3m+3n,3n,2m,2n/2m+3n,m+2n,m+n,m,n,n",
                             "m,2n/2m,n,n-m", "6m+30n,n/3m+15n,2m+10n,m,6n"}) {
        RatioSpec s = parse_spec(text);
        CHECK(parse_spec(s.text()) == s);
        CHECK(s.text() == text);
    }
}
