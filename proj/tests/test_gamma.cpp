#include <catch2/catch_amalgamated.hpp>

#include <binomsum/gamma.hpp>

using binomsum::gamma_half;
using binomsum::gamma_product;
using binomsum::gamma_ratio_or_zero;
using binomsum::GammaValue;
using binomsum::Rat;

TEST_CASE("gamma at integers and half-integers", "[gamma]") {
    CHECK(gamma_half(Rat(1)) == GammaValue{Rat(1), 0});
    CHECK(gamma_half(Rat(4)) == GammaValue{Rat(6), 0});
    CHECK(gamma_half(Rat(1, 2)) == GammaValue{Rat(1), 1});
    CHECK(gamma_half(Rat(3, 2)) == GammaValue{Rat(1, 2), 1});
    CHECK(gamma_half(Rat(5, 2)) == GammaValue{Rat(3, 4), 1});
    CHECK(gamma_half(Rat(-1, 2)) == GammaValue{Rat(-2), 1});
    CHECK(gamma_half(Rat(-3, 2)) == GammaValue{Rat(4, 3), 1});
}

TEST_CASE("gamma errors", "[gamma]") {
    CHECK_THROWS_AS(gamma_half(Rat(0)), binomsum::pole_error);
    CHECK_THROWS_AS(gamma_half(Rat(-3)), binomsum::pole_error);
    CHECK_THROWS_AS(gamma_half(Rat(1, 3)), binomsum::domain_error);
    CHECK_THROWS_AS(gamma_product({Rat(2)}, {Rat(-1)}), binomsum::pole_error);
}

TEST_CASE("gamma_product examples", "[gamma]") {
    CHECK(gamma_product({Rat(4)}, {Rat(2)}) == GammaValue{Rat(6), 0});
    CHECK(gamma_product({Rat(5, 2)}, {Rat(1, 2)}) == GammaValue{Rat(3, 4), 0});
    CHECK(gamma_product({Rat(3, 2)}, {Rat(2)}) == GammaValue{Rat(1, 2), 1});
}

TEST_CASE("gamma_product respects the recurrence", "[gamma]") {
    for (long twice = -9; twice <= 12; ++twice) {
        const Rat z(twice, 2);
        if (z.is_nonpos_integer() || (z + Rat(1)).is_nonpos_integer())
            continue;
        const GammaValue g = gamma_product({z + Rat(1)}, {z});
        CHECK(g.coeff == z);
        CHECK(g.sqrt_pi_exp == 0);
    }
}

TEST_CASE("rational_value demands cancelled exponents", "[gamma]") {
    CHECK(gamma_product({Rat(1, 2), Rat(1, 2)}, {Rat(1)}).sqrt_pi_exp == 2);
    CHECK_THROWS_AS(gamma_product({Rat(1, 2)}, {Rat(1)}).rational_value(),
                    binomsum::domain_error);
    CHECK(gamma_product({Rat(5, 2)}, {Rat(1, 2)}).rational_value() == Rat(3, 4));
}

TEST_CASE("gamma_ratio_or_zero reads denominator poles as zero", "[gamma]") {
    CHECK_FALSE(gamma_ratio_or_zero({Rat(2)}, {Rat(0)}).has_value());
    CHECK_FALSE(gamma_ratio_or_zero({Rat(3, 2)}, {Rat(-4)}).has_value());
    const auto g = gamma_ratio_or_zero({Rat(4)}, {Rat(2)});
    REQUIRE(g.has_value());
    CHECK(g->coeff == Rat(6));
    CHECK_THROWS_AS(gamma_ratio_or_zero({Rat(-1)}, {Rat(2)}), binomsum::pole_error);
    CHECK_THROWS_AS(gamma_ratio_or_zero({Rat(1, 4)}, {Rat(2)}), binomsum::domain_error);
}
