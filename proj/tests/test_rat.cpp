#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <binomsum/rat.hpp>

using binomsum::Rat;

TEST_CASE("construction canonicalizes", "[rat]") {
    CHECK(Rat(6, 4).str() == "3/2");
    CHECK(Rat(-6, 4).str() == "-3/2");
    CHECK(Rat(6, -4).str() == "-3/2");
    CHECK(Rat(0, 7).str() == "0");
    CHECK(Rat(42).str() == "42");
    CHECK_THROWS_AS(Rat(1, 0), binomsum::domain_error);
}

TEST_CASE("parse accepts canonical forms and rejects junk", "[rat]") {
    CHECK(Rat::parse("3/2") == Rat(3, 2));
    CHECK(Rat::parse("-3/2") == Rat(-3, 2));
    CHECK(Rat::parse("+7") == Rat(7));
    CHECK(Rat::parse("4/6") == Rat(2, 3));
    CHECK(Rat::parse("1/-2") == Rat(-1, 2));
    CHECK_THROWS_AS(Rat::parse(""), binomsum::domain_error);
    CHECK_THROWS_AS(Rat::parse("1/0"), binomsum::domain_error);
    CHECK_THROWS_AS(Rat::parse("1.5"), binomsum::domain_error);
    CHECK_THROWS_AS(Rat::parse("a/b"), binomsum::domain_error);
    CHECK_THROWS_AS(Rat::parse("1/"), binomsum::domain_error);
    CHECK_THROWS_AS(Rat::parse("/2"), binomsum::domain_error);
}

TEST_CASE("arithmetic is exact", "[rat]") {
    const Rat a(1, 3), b(1, 6);
    CHECK(a + b == Rat(1, 2));
    CHECK(a - b == Rat(1, 6));
    CHECK(a * b == Rat(1, 18));
    CHECK(a / b == Rat(2));
    CHECK((-a).str() == "-1/3");
    CHECK(a.inv() == Rat(3));
    CHECK_THROWS_AS(a / Rat(0), binomsum::domain_error);
    CHECK_THROWS_AS(Rat(0).inv(), binomsum::domain_error);
}

TEST_CASE("predicates and conversions", "[rat]") {
    CHECK(Rat(5).is_integer());
    CHECK(Rat(5, 2).is_half_integer());
    CHECK_FALSE(Rat(5, 3).is_half_integer());
    CHECK(Rat(-4).is_nonpos_integer());
    CHECK(Rat(0).is_nonpos_integer());
    CHECK(Rat(0).is_nonneg_integer());
    CHECK_FALSE(Rat(-1, 2).is_integer());
    CHECK(Rat(-9).to_long() == -9);
    CHECK_THROWS_AS(Rat(1, 2).to_long(), binomsum::domain_error);
    CHECK(Rat(3, 2) > Rat(1));
    CHECK(Rat(-3, 2) < Rat(-1));
}

TEST_CASE("pow handles negative exponents", "[rat]") {
    CHECK(binomsum::pow(Rat(2, 3), 3) == Rat(8, 27));
    CHECK(binomsum::pow(Rat(2, 3), -2) == Rat(9, 4));
    CHECK(binomsum::pow(Rat(5), 0) == Rat(1));
    CHECK_THROWS_AS(binomsum::pow(Rat(0), -1), binomsum::domain_error);
}

TEST_CASE("string form round-trips losslessly", "[rat]") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-10000, 10000);
    std::uniform_int_distribution<long> den(1, 9999);
    for (int i = 0; i < 500; ++i) {
        const Rat r(num(rng), den(rng));
        CHECK(Rat::parse(r.str()) == r);
        CHECK(Rat::parse(r.str()).str() == r.str());
    }
}
