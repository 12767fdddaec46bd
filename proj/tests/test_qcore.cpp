#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qgen/exact.hpp"
#include "qgen/qcore.hpp"

using namespace qgen;

TEST_CASE("q_number basic values") {
    CHECK(q_number(0.0, 0.5) == doctest::Approx(0.0));
    CHECK(q_number(1.0, 0.7) == doctest::Approx(1.0));
    CHECK(q_number(2.0, 0.5) == doctest::Approx(1.5));
    CHECK_THROWS_AS(q_number(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(q_number(1.0, -0.2), DomainError);
}

TEST_CASE("q_number splitting identity [m+x] = [x] + q^x [m]") {
    for (double q : {0.2, 0.5, 0.9})
        for (double x : {0.0, 0.25, 1.0, 2.5, 7.0})
            for (long m : {0L, 1L, 2L, 5L, 11L}) {
                const double lhs = q_number(m + x, q);
                const double rhs = q_number(x, q) + std::pow(q, x) * q_number(m, q);
                CHECK(std::abs(lhs - rhs) <= 1e-14);
            }
}

TEST_CASE("q_number shift and bound") {
    for (double q : {0.3, 0.6, 0.95})
        for (double x : {0.0, 0.5, 1.0, 4.0, 20.0}) {
            CHECK(q_number(x + 1, q) ==
                  doctest::Approx(1.0 + q * q_number(x, q)).epsilon(1e-13));
            CHECK(q_number(x, q) < 1.0 / (1.0 - q));
        }
}

TEST_CASE("q_number_exact values and float agreement") {
    CHECK(q_number_exact(3, mpq_class(1, 2)) == mpq_class(7, 4));
    CHECK(q_number_exact(0, mpq_class(1, 3)) == 0);
    CHECK(q_number_exact(1, mpq_class(2, 3)) == 1);
    CHECK_THROWS_AS(q_number_exact(2, mpq_class(3, 2)), DomainError);
    CHECK_THROWS_AS(q_number_exact(-1, mpq_class(1, 2)), DomainError);

    for (long x : {0L, 1L, 2L, 7L, 19L}) {
        const mpq_class q(3, 7);
        const double exact = q_number_exact(x, q).get_d();
        const double approx = q_number(static_cast<double>(x), q.get_d());
        CHECK(std::abs(exact - approx) <= 1e-15 * std::max(1.0, std::abs(exact)));
    }
}

TEST_CASE("q_number_exact splitting identity is exact") {
    const mpq_class q(2, 5);
    for (long x : {0L, 1L, 3L})
        for (long m : {0L, 2L, 6L}) {
            const mpq_class lhs = q_number_exact(m + x, q);
            const mpq_class rhs =
                q_number_exact(x, q) + rat_pow(q, x) * q_number_exact(m, q);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("binomial values and out-of-range") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(0, 0) == 1);
    // the closed-form reindexing identity C(n,k)C(n-k,l) = C(n,k+l)C(k+l,k)
    CHECK(binomial(6, 2) * binomial(4, 1) == 60);
    CHECK(binomial(6, 3) * binomial(3, 2) == 60);
}

TEST_CASE("binomial symmetry and Pascal's rule up to n = 64") {
    for (long n = 1; n <= 64; ++n)
        for (long l = 0; l <= n; ++l) {
            CHECK(binomial(n, l) == binomial(n, n - l));
            CHECK(binomial(n, l) == binomial(n - 1, l - 1) + binomial(n - 1, l));
        }
}

TEST_CASE("falling_ratio") {
    CHECK(falling_ratio(5, 2) == 20);
    CHECK(falling_ratio(3, 3) == 6);
    for (long k : {1L, 2L, 5L, 9L}) CHECK(falling_ratio(k, k) == factorial(k));
    CHECK_THROWS_AS(falling_ratio(2, 3), DomainError);
}

TEST_CASE("integer powers with negative exponents") {
    CHECK(ipow(2.0, 10) == doctest::Approx(1024.0));
    CHECK(ipow(2.0, -2) == doctest::Approx(0.25));
    CHECK(ipow(-1.5, 0) == doctest::Approx(1.0));
    CHECK(rat_pow(mpq_class(2, 3), -2) == mpq_class(9, 4));
    CHECK(rat_pow(mpq_class(0), 0) == 1);
    CHECK_THROWS_AS(rat_pow(mpq_class(0), -1), DomainError);
}

TEST_CASE("ModelParams invariants") {
    CHECK_NOTHROW(ModelParams(0.5, Complex(1.0 / 3.0), 1.0, 1, 1));
    CHECK_THROWS_AS(ModelParams(1.5, Complex(1.0), 1.0, 1, 1), DomainError);
    CHECK_THROWS_AS(ModelParams(0.5, Complex(1.0), 1.0, 1, 0), DomainError);
    CHECK_THROWS_AS(ModelParams(0.5, Complex(1.0), 0.0, 1, 1), DomainError);
    CHECK_THROWS_AS(ModelParams(0.5, Complex(0.0), 1.0, 1, 1), DomainError);
    CHECK_THROWS_AS(ModelParams(0.5, Complex(1.0), 1.0, 0, 1), DomainError);
    CHECK_THROWS_AS(EvalPoint(-1, 0.0), DomainError);
    CHECK_THROWS_AS(EvalPoint(0, -0.5), DomainError);
}

TEST_CASE("ExactScalar field arithmetic") {
    const ExactScalar z(mpq_class(1, 2), mpq_class(-1, 3));
    const ExactScalar w(mpq_class(2), mpq_class(1, 5));
    CHECK((z + w) - w == z);
    CHECK(z * w == w * z);
    CHECK((z / w) * w == z);
    CHECK(es_pow(z, 3) == z * z * z);
    CHECK(es_pow(z, -2) * es_pow(z, 2) == ExactScalar(1));
    CHECK_THROWS_AS(z / ExactScalar(0), DomainError);
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("1/3") == mpq_class(1, 3));
    CHECK(parse_rational("-7") == -7);
    CHECK(parse_rational("0.25") == mpq_class(1, 4));
    CHECK(parse_rational("-1.5") == mpq_class(-3, 2));
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
}
