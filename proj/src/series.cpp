#include "qgen/series.hpp"

#include <cmath>

namespace qgen {

SeriesConfig::SeriesConfig(double tol_, long max_terms_)
    : tol(tol_), max_terms(max_terms_) {
    if (!(tol > 0.0)) throw DomainError("tol must be > 0");
    if (max_terms < 1) throw DomainError("max_terms must be >= 1");
}

namespace {

// Sums coef * sum_{m>=0} ratio^m * term(m), stopping once
// tail_scale * |ratio|^{M+1} / (1 - |ratio|) <= tol.  term(m) must be
// bounded in magnitude by tail_scale / |coef| uniformly in m.
template <typename TermFn>
SeriesResult geometric_sum(Complex coef, Complex ratio, double tail_scale,
                           TermFn&& term, const SeriesConfig& cfg, Method method) {
    double rmag = std::abs(ratio);
    if (rmag >= 1.0)
        throw NotConvergent("series ratio magnitude " + std::to_string(rmag) +
                            " is not < 1");
    Complex acc(0.0);
    Complex rpow(1.0);
    long m = 0;
    bool converged = false;
    double bound = tail_scale / (1.0 - rmag);
    while (m < cfg.max_terms) {
        acc += rpow * term(m);
        rpow *= ratio;
        ++m;
        bound = tail_scale * std::pow(rmag, static_cast<double>(m)) / (1.0 - rmag);
        if (bound <= cfg.tol) {
            converged = true;
            break;
        }
    }
    return {{coef * acc, bound, method, m}, converged};
}

} // namespace

SeriesResult s_poly_series(const ModelParams& p, const EvalPoint& pt,
                           const SeriesConfig& cfg) {
    if (pt.n < p.k)
        return {{Complex(0.0), 0.0, Method::series, 0}, true};
    const long nk = pt.n - p.k;
    const Complex r = p.ratio();
    // coef = -(n!/(n-k)!) [2]_q^{1-k} a^{-b}
    const Complex coef = -falling_ratio(pt.n, p.k).get_d() *
                         ipow(1.0 + p.q, 1 - p.k) * ipow(p.a, -p.b);
    // [m+x]_q <= 1/(1-q) for all m, x >= 0
    const double tail_scale = std::abs(coef) * ipow(1.0 / (1.0 - p.q), nk);
    const double q = p.q, x = pt.x;
    return geometric_sum(
        coef, r, tail_scale,
        [&](long m) { return Complex(ipow(q_number(m + x, q), nk)); }, cfg,
        Method::series);
}

SeriesResult genfun_eval(const ModelParams& p, Complex t, double x,
                         const SeriesConfig& cfg) {
    if (x < 0.0) throw DomainError("x must be >= 0");
    const Complex r = p.ratio();
    const Complex coef = -ipow(1.0 + p.q, 1 - p.k) * ipow(t, p.k) * ipow(p.a, -p.b);
    const double tmag = std::abs(t);
    const double tail_scale = ipow(1.0 + p.q, 1 - p.k) * ipow(tmag, p.k) *
                              std::abs(ipow(p.a, -p.b)) *
                              std::exp(tmag / (1.0 - p.q));
    const double q = p.q;
    return geometric_sum(
        coef, r, tail_scale,
        [&](long m) { return std::exp(q_number(m + x, q) * t); }, cfg,
        Method::series);
}

SeriesResult q_genocchi_reference(double q, long n, double x,
                                  const SeriesConfig& cfg) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("q must lie in (0,1)");
    if (n < 0) throw DomainError("n must be >= 0");
    if (x < 0.0) throw DomainError("x must be >= 0");
    if (n == 0)
        return {{Complex(0.0), 0.0, Method::series, 0}, true};
    const Complex coef(static_cast<double>(n) * (1.0 + q));
    const double tail_scale =
        static_cast<double>(n) * (1.0 + q) * ipow(1.0 / (1.0 - q), n - 1);
    return geometric_sum(
        coef, Complex(-q), tail_scale,
        [&](long l) { return Complex(ipow(q_number(x + l, q), n - 1)); }, cfg,
        Method::series);
}

SeriesResult hq_genocchi_reference(double q, long h, long n, double x,
                                   const SeriesConfig& cfg) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("q must lie in (0,1)");
    if (h < 2) throw DomainError("h must be >= 2");
    if (n < 0) throw DomainError("n must be >= 0");
    if (x < 0.0) throw DomainError("x must be >= 0");
    if (n == 0)
        return {{Complex(0.0), 0.0, Method::series, 0}, true};
    const double rho = ipow(q, h - 1);
    const Complex coef(static_cast<double>(n) * (1.0 + q));
    const double tail_scale =
        static_cast<double>(n) * (1.0 + q) * ipow(1.0 / (1.0 - q), n - 1);
    return geometric_sum(
        coef, Complex(-rho), tail_scale,
        [&](long l) { return Complex(ipow(q_number(x + l, q), n - 1)); }, cfg,
        Method::series);
}

} // namespace qgen
