#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include <binomsum/identities.hpp>

using namespace binomsum;

namespace {

const std::vector<Rat>& sample_alphas() {
    static const std::vector<Rat> a = {Rat(1),    Rat(2),    Rat(3),   Rat(1, 2),
                                       Rat(2, 3), Rat(5, 3), Rat(7, 2)};
    return a;
}

} // namespace

TEST_CASE("theorem 1 anchor values", "[identities]") {
    CHECK(lhs_theorem1(2, 1, Rat(1, 2)) == Rat(3));  // a=1 term 2, a=2 term 1
    CHECK(rhs_theorem1(2, 1, Rat(1, 2)) == Rat(3));  // (2/6) C(3,2) C(3,1)
    CHECK(lhs_theorem1(0, 5, Rat(1)) == Rat(0));
    CHECK(rhs_theorem1(1, 0, Rat(3)) == Rat(0));
    CHECK_THROWS_AS(rhs_theorem1(0, 0, Rat(1)), degenerate_error);
    CHECK_THROWS_AS(rhs_theorem1(2, 1, Rat(-1, 2)), degenerate_error);  // m + n/alpha = 0
    CHECK_THROWS_AS(lhs_theorem1(1, 1, Rat(0)), domain_error);
    CHECK_THROWS_AS(lhs_theorem1(1, 1, Rat(-1)), domain_error);
}

TEST_CASE("single sum anchor values", "[identities]") {
    CHECK(single_sum_k(2, 2, Rat(1)) == Rat(18));  // C(4,1)^2 + 2 C(4,0)^2
    CHECK(rhs_theorem1(2, 2, Rat(1)) == Rat(18));
    CHECK(single_sum_k(0, 7, Rat(2)) == Rat(0));
}

TEST_CASE("three-way equality at desk scale", "[identities]") {
    for (long m = 0; m <= 8; ++m)
        for (long n = 0; n <= 8; ++n) {
            if (m == 0 && n == 0)
                continue;
            for (const Rat& a : sample_alphas()) {
                const Rat rhs = rhs_theorem1(m, n, a);
                CHECK(lhs_theorem1(m, n, a) == rhs);
                CHECK(single_sum_k(m, n, a) == rhs);
            }
        }
}

TEST_CASE("swap symmetry (m, alpha) <-> (n, 1/alpha)", "[identities]") {
    for (long m = 0; m <= 6; ++m)
        for (long n = 0; n <= 6; ++n)
            for (const Rat& a : {Rat(2), Rat(1, 2), Rat(5, 3)}) {
                CHECK(lhs_theorem1(m, n, a) == lhs_theorem1(n, m, a.inv()));
                if (m + n > 0)
                    CHECK(rhs_theorem1(m, n, a) == rhs_theorem1(n, m, a.inv()));
            }
}

TEST_CASE("positivity and integrality", "[identities]") {
    // Every summand is strictly positive for positive alpha, so the sum is
    // nonnegative; it is an integer when alpha is a positive integer
    // dividing n (otherwise C((1+1/alpha)n, n) itself is fractional, e.g.
    // lhs_theorem1(1, 3, 2) = 63/8).
    for (long m = 1; m <= 7; ++m)
        for (long n = 1; n <= 7; ++n)
            for (const Rat& a : sample_alphas())
                CHECK(lhs_theorem1(m, n, a).sign() >= 0);
    for (long m = 1; m <= 7; ++m)
        for (long alpha = 1; alpha <= 3; ++alpha)
            for (long n = alpha; n <= 7; n += alpha)
                CHECK(lhs_theorem1(m, n, Rat(alpha)).is_integer());
    CHECK(lhs_theorem1(1, 3, Rat(2)) == Rat(63, 8));
}

TEST_CASE("telescoping certificate", "[identities]") {
    CHECK(telescope_certificate(2, 2, Rat(1), 1));  // s(1)-s(2) = 18-2 = 16
    CHECK(telescope_certificate(1, 1, Rat(1), 0));  // 0 = s(0)-s(1)
    CHECK(telescope_certificate(3, 2, Rat(2, 3), 2));  // k = min(m,n) edge
    CHECK_THROWS_AS(telescope_certificate(2, 2, Rat(1), 3), domain_error);
    CHECK_THROWS_AS(telescope_certificate(2, 2, Rat(1), -1), domain_error);
    for (long m = 1; m <= 6; ++m)
        for (long n = 1; n <= 6; ++n)
            for (const Rat& a : sample_alphas())
                for (long k = 0; k <= std::min(m, n); ++k)
                    CHECK(telescope_certificate(m, n, a, k));
}

TEST_CASE("telescoped total equals the closed form", "[identities]") {
    for (long m = 1; m <= 6; ++m)
        for (long n = 1; n <= 6; ++n)
            for (const Rat& a : {Rat(1), Rat(1, 2), Rat(7, 2)}) {
                // s(0) is the closed form itself; s(min+1) vanishes by the
                // k < 0 binomial convention, so the sum telescopes exactly.
                CHECK(detail::telescope_s(m, n, a, 0) == rhs_theorem1(m, n, a));
                CHECK(detail::telescope_s(m, n, a, std::min(m, n) + 1) == Rat(0));
                CHECK(single_sum_k(m, n, a) == rhs_theorem1(m, n, a));
            }
}

TEST_CASE("theorem 2 anchor values", "[identities]") {
    CHECK(lhs_theorem2(0, 0, 0, Rat(1)) == Rat(1));  // lone C(-1,0)^2 term
    CHECK(rhs_theorem2(0, 0, 0, Rat(1)) == Rat(1));
    CHECK(lhs_theorem2(1, 1, 0, Rat(1)) == Rat(6));
    CHECK(rhs_theorem2(1, 1, 0, Rat(1)) == Rat(6));  // 2 + C(2,1)^2
    CHECK(lhs_theorem2(3, 3, 0, Rat(1)) == rhs_theorem2(3, 3, 0, Rat(1)));
    CHECK(lhs_theorem2(3, 3, 1, Rat(1)) == rhs_theorem2(3, 3, 1, Rat(1)));
}

TEST_CASE("theorem 2 at desk scale including empty first sums", "[identities]") {
    for (long m = 0; m <= 5; ++m)
        for (long n = 0; n <= 5; ++n)
            for (long r = 0; r <= 4; ++r)
                for (const Rat& a : {Rat(1), Rat(1, 2), Rat(5, 3)})
                    CHECK(lhs_theorem2(m, n, r, a) == rhs_theorem2(m, n, r, a));
}

TEST_CASE("seed identity S3", "[identities]") {
    CHECK(lhs_s3(2, 1) == Rat(3));
    CHECK(rhs_s3(2, 1) == Rat(3));  // (2/6) C(3,2)^2
    for (long m = 1; m <= 7; ++m)
        for (long n = 1; n <= 7; ++n) {
            CHECK(lhs_s3(m, n) == rhs_s3(m, n));
            // S3 is theorem 1 at alpha = n/m.
            CHECK(lhs_s3(m, n) == lhs_theorem1(m, n, Rat(n, m)));
            CHECK(rhs_s3(m, n) == rhs_theorem1(m, n, Rat(n, m)));
        }
}

TEST_CASE("seed identity S4", "[identities]") {
    CHECK(lhs_s4(3, 3) == Rat(1));
    CHECK(rhs_s4(3, 3) == Rat(400) + Rat(225) + Rat(300) - Rat(924));
    // At m = 2 or n = 2 the sum is empty and the closed form vanishes.
    for (long n = 2; n <= 9; ++n) {
        CHECK(lhs_s4(2, n) == Rat(0));
        CHECK(rhs_s4(2, n) == Rat(0));
        CHECK(rhs_s4(n, 2) == Rat(0));
    }
    for (long m = 2; m <= 8; ++m)
        for (long n = 2; n <= 8; ++n)
            CHECK(lhs_s4(m, n) == rhs_s4(m, n));
}

TEST_CASE("corollary 1 equals the theorem 1 specialization", "[identities]") {
    for (long p = 1; p <= 4; ++p)
        for (long q = 1; q <= 4; ++q)
            for (long m = 1; m <= 10; ++m)
                for (long n = 1; n <= 10; ++n) {
                    CHECK(lhs_cor1(p, q, m, n) == lhs_theorem1(p * m, q * n, Rat(q, p)));
                    CHECK(rhs_cor1(p, q, m, n) == rhs_theorem1(p * m, q * n, Rat(q, p)));
                    CHECK(lhs_cor1(p, q, m, n) == rhs_cor1(p, q, m, n));
                }
}

TEST_CASE("exchanged form and the Chu-Vandermonde extensions", "[identities]") {
    CHECK(lhs_cv_full(1, 1, 1, 1) == Rat(3));  // (1/2) C(4,2)
    CHECK(lhs_cv_tail(1, 1, 1, 1) == Rat(2));
    for (long p = 1; p <= 2; ++p)
        for (long q = 1; q <= 2; ++q)
            for (long m = 1; m <= 3; ++m)
                for (long n = 1; n <= 3; ++n) {
                    CHECK(lhs_cor1_exchanged(p, q, m, n) == rhs_cor1_exchanged(p, q, m, n));
                    CHECK(lhs_cv_full(p, q, m, n) == rhs_cv_full(p, q, m, n));
                    CHECK(lhs_cv_tail(p, q, m, n) == rhs_cv_tail(p, q, m, n));
                }
}

TEST_CASE("free-parameter corollary and its limit", "[identities]") {
    CHECK(lhs_cor2(1, 1, Rat(1)) == Rat(1));
    CHECK(rhs_cor2(1, 1, Rat(1)) == Rat(1));
    for (long m = 1; m <= 4; ++m)
        for (long n = 1; n <= 4; ++n) {
            for (const Rat& x : {Rat(1), Rat(2), Rat(5, 2), Rat(7)})
                CHECK(lhs_cor2(m, n, x) == rhs_cor2(m, n, x));
            CHECK(lhs_cor3(m, n) == rhs_cor3(m, n));
        }
    CHECK(lhs_cor3(1, 1) == Rat(1));
    CHECK(rhs_cor3(1, 1) == Rat(1));
}

TEST_CASE("r-family corollaries", "[identities]") {
    for (long p = 1; p <= 2; ++p)
        for (long q = 1; q <= 2; ++q)
            for (long m = 1; m <= 3; ++m)
                for (long n = 1; n <= 3; ++n)
                    for (long r = 0; r <= 3; ++r) {
                        CHECK(lhs_cor4(p, q, m, n, r) == rhs_cor4(p, q, m, n, r));
                        CHECK(lhs_pm_r1(p, q, m, n, r) == rhs_pm_r1(p, q, m, n, r));
                        if (r <= p * n - 1 && r <= q * m - 1)
                            CHECK(lhs_pm_r2(p, q, m, n, r) == rhs_pm_r2(p, q, m, n, r));
                        if (r <= q * m - 1)
                            CHECK(lhs_pm_r3(p, q, m, n, r) == rhs_pm_r3(p, q, m, n, r));
                        if (r >= 1)
                            CHECK(lhs_cor5(p, q, m, n, r) == rhs_cor5(p, q, m, n, r));
                    }
}

TEST_CASE("range splits recombine into the shifted corollary", "[identities]") {
    // Eliminating the shared band from the two splits and substituting into
    // the reflected identity rederives the combined corollary at r+1.
    for (long p = 1; p <= 2; ++p)
        for (long q = 1; q <= 2; ++q)
            for (long m = 1; m <= 3; ++m)
                for (long n = 1; n <= 3; ++n)
                    for (long r = 0; r <= 2; ++r)
                        CHECK(lhs_cor5(p, q, m, n, r + 1) ==
                              rhs_pm_r1(p, q, m, n, r) - rhs_pm_r2(p, q, m, n, r) +
                                  rhs_pm_r3(p, q, m, n, r));
}

TEST_CASE("p=q=1 and m=n=1 corollaries with displayed specializations", "[identities]") {
    CHECK(lhs_cor7(2, 2, 1) == Rat(1));
    CHECK(rhs_cor7(2, 2, 1) == Rat(18) - Rat(35) + Rat(18));
    for (long m = 1; m <= 6; ++m)
        for (long n = 1; n <= 6; ++n) {
            for (long r = 1; r <= 4; ++r) {
                CHECK(lhs_cor6(m, n, r) == rhs_cor6(m, n, r));
                CHECK(lhs_cor7(m, n, r) == rhs_cor7(m, n, r));
            }
            CHECK(lhs_cor6(m, n, 1) == rhs_cor6_r1(m, n));
            CHECK(lhs_cor6(m, n, 2) == rhs_cor6_r2(m, n));
            CHECK(lhs_cor7(m, n, 1) == rhs_cor7_r1(m, n));
            // The fourth displayed specialization is S4 itself.
            if (m >= 2 && n >= 2)
                CHECK(lhs_cor7(m, n, 2) == rhs_s4(m, n));
        }
}

TEST_CASE("theorem 3 and its reflected form", "[identities]") {
    CHECK(lhs_theorem3(1, 1, Rat(2)) == Rat(2));
    CHECK(rhs_theorem3(1, 1, Rat(2)) == Rat(2));  // (1/5) C(5,2)
    CHECK(theorem3_certify(1, 1));
    CHECK(theorem3_certify(2, 1));
    CHECK(theorem3_certify(1, 2));
    CHECK(theorem3_certify(3, 4));
    CHECK(doub_xab_check(1, 1, Rat(3)));
    CHECK(doub_xab_check(2, 1, Rat(5, 2)));
    CHECK(doub_xab_check(1, 1, Rat(0)));
    CHECK(doub_xab_check(3, 2, Rat(-7, 3)));
    CHECK_THROWS_AS(rhs_theorem3(2, 1, Rat(-1)), degenerate_error);  // 2x + m = 0
}

TEST_CASE("theorem 1 certified as a polynomial identity in alpha", "[identities]") {
    for (long m = 1; m <= 4; ++m)
        for (long n = 1; n <= 4; ++n)
            CHECK(theorem1_alpha_certify(m, n));
}
