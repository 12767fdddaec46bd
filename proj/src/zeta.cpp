#include "qgen/zeta.hpp"

#include <algorithm>
#include <cmath>

namespace qgen {

ZetaPoint zeta_eval(const ModelParams& p, Complex s, double x,
                    const SeriesConfig& cfg) {
    if (!(x > 0.0)) throw DomainError("x must be > 0");
    const Complex r = p.ratio();
    const double rmag = std::abs(r);
    if (rmag >= 1.0)
        throw NotConvergent("series ratio magnitude " + std::to_string(rmag) +
                            " is not < 1");

    const double two_pow = ipow(1.0 + p.q, 1 - p.k);
    const double abinv = std::abs(ipow(p.a, -p.b));
    // [x]_q <= [m+x]_q <= 1/(1-q), so |[m+x]_q^{-s}| is bounded by the
    // larger endpoint power.
    const double lo = q_number(x, p.q);
    const double hi = 1.0 / (1.0 - p.q);
    const double env = std::max(std::pow(lo, -s.real()), std::pow(hi, -s.real()));
    const double tail_scale = two_pow * abinv * env;

    const Complex coef = two_pow * ipow(p.a, -p.b);
    Complex acc(0.0);
    Complex rpow(1.0);
    long m = 0;
    bool converged = false;
    double bound = tail_scale / (1.0 - rmag);
    while (m < cfg.max_terms) {
        acc += rpow * std::pow(Complex(q_number(m + x, p.q)), -s);
        rpow *= r;
        ++m;
        bound = tail_scale * std::pow(rmag, static_cast<double>(m)) / (1.0 - rmag);
        if (bound <= cfg.tol) {
            converged = true;
            break;
        }
    }
    return {s, coef * acc, bound, m, converged};
}

} // namespace qgen
