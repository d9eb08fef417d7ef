#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include <binomsum/hypergeom.hpp>

using namespace binomsum;

TEST_CASE("terminating evaluation", "[hypergeom]") {
    // 2F1[-2, 1; 3; 1] = 1 - 2/3 + 1/6
    CHECK(eval_terminating({{Rat(-2), Rat(1)}, {Rat(3)}, Rat(1)}) == Rat(1, 2));
    // an upper parameter 0 truncates immediately
    CHECK(eval_terminating({{Rat(0), Rat(7, 3)}, {Rat(5)}, Rat(1)}) == Rat(1));
    // 3F2[-1, a, b; c, d; 1] = 1 - ab/(cd)
    const Rat a(3, 2), b(-5, 3), c(7, 2), d(4);
    CHECK(eval_terminating({{Rat(-1), a, b}, {c, d}, Rat(1)}) == Rat(1) - a * b / (c * d));
}

TEST_CASE("termination and pole diagnostics", "[hypergeom]") {
    CHECK(termination_index({{Rat(-5), Rat(-2)}, {Rat(1)}, Rat(1)}) == 2);
    CHECK_THROWS_AS(eval_terminating({{Rat(1, 2)}, {Rat(1)}, Rat(1)}), non_terminating);
    CHECK_THROWS_AS(eval_terminating({{Rat(-3), Rat(1)}, {Rat(-1)}, Rat(1)}),
                    lower_param_pole);
    // pole at -3 is beyond the termination index 2: fine
    CHECK_NOTHROW(eval_terminating({{Rat(-2), Rat(1)}, {Rat(-3)}, Rat(1)}));
}

TEST_CASE("parameter list order is irrelevant", "[hypergeom]") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 3);
    for (int i = 0; i < 60; ++i) {
        std::vector<Rat> up = {Rat(-3), Rat(num(rng), den(rng)), Rat(num(rng), den(rng))};
        std::vector<Rat> lo = {Rat(num(rng) + 8), Rat(num(rng) + 9)};
        const Rat v = eval_terminating({up, lo, Rat(1)});
        std::shuffle(up.begin(), up.end(), rng);
        std::shuffle(lo.begin(), lo.end(), rng);
        CHECK(eval_terminating({up, lo, Rat(1)}) == v);
    }
}

TEST_CASE("Chu-Vandermonde", "[hypergeom]") {
    CHECK(chu_vandermonde(2, Rat(1), Rat(3)) == Rat(1, 2));
    CHECK(chu_vandermonde(0, Rat(9, 7), Rat(-13, 3)) == Rat(1));
    // (3)_3 / (5/2)_3 = 60 / (315/8); the series sums to the same value
    CHECK(chu_vandermonde(3, Rat(-1, 2), Rat(5, 2)) == Rat(32, 21));
    CHECK_THROWS_AS(chu_vandermonde(3, Rat(1), Rat(-1)), lower_param_pole);
}

TEST_CASE("3F2 transformation", "[hypergeom]") {
    CHECK(transform_3f2_check(0, Rat(3, 2), Rat(-7, 3), Rat(4), Rat(5, 2)));
    CHECK(transform_3f2_check(2, Rat(1), Rat(1, 2), Rat(3), Rat(5, 2)));
    CHECK(transform_3f2_check(3, Rat(2), Rat(3), Rat(7, 2), Rat(9)));
    // random grid of valid tuples
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> nd(0, 8);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    auto bad_lower = [](const Rat& l, long n) {
        return l.is_integer() && l.sign() <= 0 && -l.to_long() <= n - 1;
    };
    int done = 0;
    while (done < 60) {
        const long n = nd(rng);
        const Rat a(num(rng), den(rng)), b(num(rng), den(rng));
        const Rat d(num(rng), den(rng)), e(num(rng), den(rng));
        const Rat e2 = Rat(1) + b - e - Rat(n);
        if (bad_lower(d, n) || bad_lower(e, n) || bad_lower(e2, n))
            continue;
        if (pochhammer(e, n).is_zero())
            continue;
        ++done;
        CHECK(transform_3f2_check(n, a, b, d, e));
    }
}

TEST_CASE("Gessel-Stanton evaluation", "[hypergeom]") {
    CHECK(gessel_stanton_check(1, Rat(2), Rat(1)));       // upper hits 0, both sides 1
    CHECK(gessel_stanton_check(3, Rat(5, 2), Rat(-3, 2)));
    CHECK(gessel_stanton_check(1, Rat(3), Rat(-2)));      // the (m,n,alpha)=(2,2,1) step
    for (long n = 0; n <= 10; ++n)
        CHECK(gessel_stanton_check(n, Rat(7, 2), Rat(1, 2)));
}

TEST_CASE("hypergeometric route reproduces the closed form", "[hypergeom]") {
    CHECK(second_proof_chain(2, 1, Rat(1, 2)) == Rat(3));
    CHECK(second_proof_chain(1, 1, Rat(1)) == Rat(1));
    CHECK(second_proof_chain(3, 2, Rat(2)) == rhs_theorem1(3, 2, Rat(2)));
    for (long m = 1; m <= 6; ++m)
        for (long n = 1; n <= 6; ++n)
            for (const Rat& a : {Rat(1), Rat(2), Rat(1, 2), Rat(5, 3)})
                CHECK(second_proof_chain(m, n, a) == rhs_theorem1(m, n, a));
}

TEST_CASE("Dixon's formula", "[hypergeom]") {
    CHECK(dixon_check(Rat(2), Rat(-1), Rat(1, 2)));
    CHECK(dixon_check(Rat(3), Rat(-2), Rat(1)));
    CHECK(dixon_check(Rat(2), Rat(-1), Rat(0)));  // c = 0: both sides 1
    CHECK_THROWS_AS(dixon_check(Rat(2), Rat(1, 2), Rat(1, 3)), non_terminating);
}

TEST_CASE("Whipple's formula", "[hypergeom]") {
    CHECK(whipple_check(Rat(-2), Rat(1), Rat(2)));   // both sides 0 (gamma pole below)
    CHECK(whipple_check(Rat(-4), Rat(2), Rat(3)));
    CHECK(whipple_check(Rat(1), Rat(1), Rat(2)));    // 1-a = 0: series is 1
    CHECK(whipple_check(Rat(-1), Rat(5, 2), Rat(2)));
    CHECK(whipple_check(Rat(-3), Rat(3), Rat(2)));
    CHECK(whipple_check(Rat(4), Rat(7, 2), Rat(3)));  // terminates through 1-a
    CHECK_THROWS_AS(whipple_check(Rat(1, 2), Rat(1, 2), Rat(1, 2)), non_terminating);
}

TEST_CASE("the chain 3F2 evaluated three ways", "[hypergeom]") {
    // At alpha = 1 and m = n the 3F2 of the hypergeometric route meets both
    // Dixon's and Whipple's parameter patterns; all three evaluations and
    // the direct sum must coincide.
    for (long n = 1; n <= 7; ++n) {
        const Rat direct = eval_terminating(
            {{Rat(1 - n), Rat(n), Rat(2 * n + 1)}, {Rat(n + 2), Rat(3 * n + 1)}, Rat(1)});
        CHECK(direct == chain_3f2_by_dixon(n, n));
        CHECK(direct == chain_3f2_by_whipple(n, n));
    }
    // Dixon covers alpha = 1 for any m, n; Whipple covers alpha = n/m.
    for (long m = 1; m <= 5; ++m)
        for (long n = 1; n <= 5; ++n) {
            const Rat direct_dixon = eval_terminating({{Rat(1 - n), Rat(m), Rat(2 * m + 1)},
                                                       {Rat(m + 2), Rat(2 * m + n + 1)},
                                                       Rat(1)});
            CHECK(direct_dixon == chain_3f2_by_dixon(m, n));
            const Rat alpha(n, m);
            const Rat direct_whip =
                eval_terminating({{Rat(1 - n), alpha * m, (Rat(1) + alpha) * m + 1},
                                  {alpha * m + 2, (Rat(1) + alpha) * m + alpha.inv() * n + 1},
                                  Rat(1)});
            CHECK(direct_whip == chain_3f2_by_whipple(m, n));
        }
}
