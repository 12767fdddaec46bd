#pragma once

#include "qgen/qcore.hpp"

namespace qgen {

struct SeriesConfig {
    double tol = 1e-12;     // target absolute error
    long max_terms = 10000; // summation budget

    SeriesConfig() = default;
    SeriesConfig(double tol_, long max_terms_);
};

struct SeriesResult {
    ApproxValue value;
    bool converged = false;
};

/// Definition-first evaluation of S_{n,beta,q}(x|k,a,b): the truncated
/// infinite series with a geometric tail bound.  Returns exactly 0 for
/// n < k.  Requires |(beta/a)^b| < 1.
SeriesResult s_poly_series(const ModelParams& p, const EvalPoint& pt,
                           const SeriesConfig& cfg = {});

/// Direct truncated evaluation of the generating function
/// F_{beta,q}(t,x|k,a,b) = -[2]_q^{1-k} t^k sum_m beta^{bm} a^{-bm-b} e^{[m+x]_q t}.
SeriesResult genfun_eval(const ModelParams& p, Complex t, double x,
                         const SeriesConfig& cfg = {});

/// q-Genocchi polynomial G_{n,q}(x) by direct truncated summation of
/// G_{n+1,q}(x) = (n+1)[2]_q sum_l (-1)^l q^l [x+l]_q^n.  G_0 = 0.
SeriesResult q_genocchi_reference(double q, long n, double x,
                                  const SeriesConfig& cfg = {});

/// (h,q)-Genocchi polynomial G^{(h)}_{n,q}(x); the alternating weight is
/// q^{(h-1)l}, so h >= 2 gives geometric domination.
SeriesResult hq_genocchi_reference(double q, long h, long n, double x,
                                   const SeriesConfig& cfg = {});

} // namespace qgen
