#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qgen/identities.hpp"
#include "qgen/zeta.hpp"

using namespace qgen;

namespace {
const ModelParams kGeom(0.5, Complex(1.0 / 3.0), 1.0, 1, 1);
const SeriesConfig kTight(1e-13, 100000);
} // namespace

TEST_CASE("zeta_eval closed values at s = 0 and s = -1") {
    // s=0: plain geometric sum 1/(1 - 1/3) = 3/2
    const auto z0 = zeta_eval(kGeom, Complex(0.0), 1.0, kTight);
    CHECK(z0.converged);
    CHECK(std::abs(z0.value - Complex(1.5)) <= 1e-12);

    // s=-1: sum (1/3)^m (2 - 2^{-m}) = 3 - 6/5 = 9/5
    const auto z1 = zeta_eval(kGeom, Complex(-1.0), 1.0, kTight);
    CHECK(std::abs(z1.value - Complex(1.8)) <= 1e-12);
}

TEST_CASE("zeta_eval domain and convergence guards") {
    CHECK_THROWS_AS(zeta_eval(kGeom, Complex(1.0), 0.0, kTight), DomainError);
    CHECK_THROWS_AS(zeta_eval(kGeom, Complex(1.0), -2.0, kTight), DomainError);
    const ModelParams diverging(0.5, Complex(1.0), -1.0, 1, 1);
    CHECK_THROWS_AS(zeta_eval(diverging, Complex(1.0), 1.0, kTight),
                    NotConvergent);
}

TEST_CASE("conjugate symmetry for real parameters") {
    const ModelParams p(0.7, Complex(0.6), 2.0, 1, 2);
    for (double sr : {-3.0, 0.0, 2.5})
        for (double si : {0.5, 4.0}) {
            const auto up = zeta_eval(p, Complex(sr, si), 0.75, kTight);
            const auto dn = zeta_eval(p, Complex(sr, -si), 0.75, kTight);
            CHECK(std::abs(dn.value - std::conj(up.value)) <= 1e-11);
        }
}

TEST_CASE("tolerance halving keeps values within the reported bounds") {
    const std::vector<ModelParams> grid = {
        ModelParams(0.5, Complex(1.0 / 3.0), 1.0, 1, 1),
        ModelParams(0.3, Complex(0.8), 2.0, 1, 2),
        ModelParams(0.8, Complex(-0.5), -1.5, 1, 2),
        ModelParams(0.5, Complex(3.0), 1.0, -1, 1),
    };
    for (const auto& p : grid)
        for (double sr : {-8.0, -1.0, 0.0, 3.0, 8.0})
            for (double si : {-8.0, 0.0, 8.0})
                for (double x : {0.5, 1.0, 2.0}) {
                    const auto coarse =
                        zeta_eval(p, Complex(sr, si), x, {1e-8, 100000});
                    const auto fine =
                        zeta_eval(p, Complex(sr, si), x, {1e-11, 100000});
                    REQUIRE(coarse.converged);
                    REQUIRE(fine.converged);
                    CHECK(std::abs(coarse.value - fine.value) <=
                          coarse.abs_error_bound + fine.abs_error_bound);
                    CHECK(fine.terms_used >= coarse.terms_used);
                }
}

TEST_CASE("reported bound dominates the observed truncation error") {
    const ModelParams p(0.6, Complex(0.5), 1.0, 1, 1);
    const auto ref = zeta_eval(p, Complex(-2.0), 1.5, {1e-13, 100000});
    const auto coarse = zeta_eval(p, Complex(-2.0), 1.5, {1e-4, 100000});
    CHECK(std::abs(coarse.value - ref.value) <=
          coarse.abs_error_bound + ref.abs_error_bound);
}

TEST_CASE("interpolation at negative integers ties back to the polynomials") {
    // shifted variant: I(-(n-k); x) = -S_n(x) (n-k)!/n!
    for (long n : {1L, 2L, 4L}) {
        const auto vd = verify_interpolation(kGeom, n, 1.0, VariantId::corrected,
                                             ClosedVariant::corrected);
        CHECK(vd.passed);
    }
    // at n = k the shifted variant reads I(0) = -S_k(x)/k!
    const auto z = zeta_eval(kGeom, Complex(0.0), 1.0, kTight);
    const auto s1 = s_poly_closed(kGeom, EvalPoint(1, 1.0),
                                  ClosedVariant::corrected);
    CHECK(std::abs(z.value + s1.value) <= 1e-11);
}

TEST_CASE("interpolation adjudication: exactly one index convention") {
    const ModelParams p(0.3, Complex(0.8), 2.0, 1, 1);
    for (long n : {2L, 3L, 4L}) {
        const auto printed = verify_interpolation(p, n, 0.5, VariantId::printed,
                                                  ClosedVariant::corrected);
        const auto shifted = verify_interpolation(p, n, 0.5, VariantId::corrected,
                                                  ClosedVariant::corrected);
        CHECK(shifted.passed);
        CHECK_FALSE(printed.passed);
    }
}
