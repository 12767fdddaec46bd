#pragma once

#include "qgen/series.hpp"

namespace qgen {

/// One evaluated point of the Hurwitz-zeta-type interpolation function.
struct ZetaPoint {
    Complex s{};
    Complex value{};
    double abs_error_bound = 0.0;
    long terms_used = 0;
    bool converged = false;
};

/// I_{beta,q}(s;x,a,b) = [2]_q^{1-k} sum_m beta^{bm} a^{-bm-b} / [m+x]_q^s.
/// Requires |(beta/a)^b| < 1 (the series then converges for every complex
/// s) and x > 0 (keeps the principal power single-valued).
ZetaPoint zeta_eval(const ModelParams& p, Complex s, double x,
                    const SeriesConfig& cfg = {});

} // namespace qgen
