#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "qgen/series.hpp"

using namespace qgen;

namespace {
const SeriesConfig kTight(1e-12, 10000);
}

TEST_CASE("s_poly_series geometric case: -3/2") {
    // k=1, n=1, x=0: the sum collapses to -sum (1/3)^m = -3/2
    const ModelParams p(0.5, Complex(1.0 / 3.0), 1.0, 1, 1);
    const auto r = s_poly_series(p, EvalPoint(1, 0.0), kTight);
    CHECK(r.converged);
    CHECK(std::abs(r.value.value - Complex(-1.5)) <= 1e-12 + r.value.abs_error_bound);
    CHECK(r.value.abs_error_bound <= 1e-12);
}

TEST_CASE("s_poly_series is exactly zero below order") {
    const ModelParams p(0.5, Complex(1.0 / 3.0), 1.0, 1, 2);
    const auto r = s_poly_series(p, EvalPoint(1, 0.7), kTight);
    CHECK(r.value.value == Complex(0.0));
    CHECK(r.value.abs_error_bound == 0.0);
    CHECK(r.converged);
}

TEST_CASE("s_poly_series diverges at |ratio| = 1") {
    const ModelParams p(0.5, Complex(1.0), -1.0, 1, 1);
    CHECK_THROWS_AS(s_poly_series(p, EvalPoint(2, 0.0), kTight), NotConvergent);
}

TEST_CASE("tail-bound soundness: tol vs tol/100") {
    const std::vector<ModelParams> grid = {
        ModelParams(0.5, Complex(1.0 / 3.0), 1.0, 1, 1),
        ModelParams(0.2, Complex(0.8), 2.0, 1, 2),
        ModelParams(0.9, Complex(-0.3), 1.0, 1, 1),
        ModelParams(0.5, Complex(2.5), 1.0, -1, 3),
    };
    for (const auto& p : grid)
        for (long n : {1L, 3L, 6L})
            for (double x : {0.0, 1.0, 2.5}) {
                const auto coarse = s_poly_series(p, EvalPoint(n, x), {1e-6, 10000});
                const auto fine = s_poly_series(p, EvalPoint(n, x), {1e-8, 10000});
                CHECK(std::abs(coarse.value.value - fine.value.value) <=
                      coarse.value.abs_error_bound + fine.value.abs_error_bound);
                // monotone truncation
                CHECK(fine.value.terms_used >= coarse.value.terms_used);
            }
}

TEST_CASE("genfun_eval at t = 0 vanishes") {
    const ModelParams p(0.5, Complex(0.25), 2.0, 1, 2);
    const auto r = genfun_eval(p, Complex(0.0), 0.3, kTight);
    CHECK(r.value.value == Complex(0.0));
}

TEST_CASE("genfun_eval agrees with its direct transcription") {
    // -t * sum (1/3)^m exp([m]_{0.5} * t) at t = 0.05
    const ModelParams p(0.5, Complex(1.0 / 3.0), 1.0, 1, 1);
    const double t = 0.05;
    Complex direct(0.0);
    for (long m = 0; m < 200; ++m)
        direct += ipow(1.0 / 3.0, m) * std::exp(q_number(m, 0.5) * t);
    direct *= -t;
    const auto r = genfun_eval(p, Complex(t), 0.0, kTight);
    CHECK(std::abs(r.value.value - direct) <= 1e-12);
}

TEST_CASE("genfun_eval matches the coefficient sum") {
    const ModelParams p(0.5, Complex(1.0 / 3.0), 1.0, 1, 1);
    const double t = 0.05;
    Complex coeff_sum(0.0);
    double fact = 1.0;
    for (long n = 0; n <= 20; ++n) {
        if (n > 0) fact *= n;
        coeff_sum += s_poly_series(p, EvalPoint(n, 0.0), kTight).value.value *
                     ipow(t, n) / fact;
    }
    const auto r = genfun_eval(p, Complex(t), 0.0, kTight);
    CHECK(std::abs(r.value.value - coeff_sum) <= 1e-12);
}

TEST_CASE("generating-function consistency on a parameter grid") {
    // |F(t,x) - sum_{n<=20} S_n(x) t^n/n!| <= 1e-10, |t| <= 0.1
    long points = 0;
    for (double q : {0.3, 0.5, 0.8})
        for (double a : {1.0, 2.0})
            for (long k : {1L, 2L})
                for (double x : {0.0, 1.0}) {
                    const ModelParams p(q, Complex(0.4 * a), a, 1, k);
                    for (double t : {0.05, -0.1}) {
                        Complex coeff_sum(0.0);
                        double fact = 1.0;
                        for (long n = 0; n <= 20; ++n) {
                            if (n > 0) fact *= n;
                            coeff_sum +=
                                s_poly_series(p, EvalPoint(n, x), kTight)
                                    .value.value *
                                ipow(Complex(t), n) / fact;
                        }
                        const auto r = genfun_eval(p, Complex(t), x, kTight);
                        CHECK(std::abs(r.value.value - coeff_sum) <= 1e-10);
                        ++points;
                    }
                }
    CHECK(points >= 10);
}

TEST_CASE("q_genocchi_reference low orders") {
    CHECK(q_genocchi_reference(0.5, 0, 0.0, kTight).value.value == Complex(0.0));
    const auto g1 = q_genocchi_reference(0.5, 1, 0.0, kTight);
    CHECK(std::abs(g1.value.value - Complex(1.0)) <= 1e-12);
}

TEST_CASE("q_genocchi cross-check against the unified series") {
    // G_{n,q}(x) = [2]_q * S_{n,q,q}(x|1,-1,1): both sides are independent
    // geometric-type truncations.
    for (double q : {0.3, 0.5, 0.8})
        for (long n : {1L, 2L, 3L, 5L})
            for (double x : {0.0, 0.25, 1.0}) {
                const auto g = q_genocchi_reference(q, n, x, kTight);
                const ModelParams p(q, Complex(q), -1.0, 1, 1);
                const auto s = s_poly_series(p, EvalPoint(n, x), kTight);
                CHECK(std::abs(g.value.value - (1.0 + q) * s.value.value) <= 1e-9);
            }
}

TEST_CASE("hq_genocchi_reference") {
    // h=2 coincides with the plain q-family
    for (double q : {0.3, 0.6})
        for (long n : {0L, 1L, 3L})
            for (double x : {0.0, 0.5}) {
                const auto a = hq_genocchi_reference(q, 2, n, x, kTight);
                const auto b = q_genocchi_reference(q, n, x, kTight);
                CHECK(std::abs(a.value.value - b.value.value) <= 1e-11);
            }
    // h=3, n=1, x=0: [2]_q / (1 + q^2) = 1.2 at q = 0.5
    const auto r = hq_genocchi_reference(0.5, 3, 1, 0.0, kTight);
    CHECK(std::abs(r.value.value - Complex(1.2)) <= 1e-12);
    // cross-check against the unified series with beta = q^{h-1}
    const auto g = hq_genocchi_reference(0.5, 3, 4, 0.5, kTight);
    const ModelParams p(0.5, Complex(0.25), -1.0, 1, 1);
    const auto s = s_poly_series(p, EvalPoint(4, 0.5), kTight);
    CHECK(std::abs(g.value.value - 1.5 * s.value.value) <= 1e-9);
    CHECK_THROWS_AS(hq_genocchi_reference(0.5, 1, 2, 0.0, kTight), DomainError);
}

TEST_CASE("SeriesConfig validation") {
    CHECK_THROWS_AS(SeriesConfig(0.0, 100), DomainError);
    CHECK_THROWS_AS(SeriesConfig(1e-6, 0), DomainError);
}
