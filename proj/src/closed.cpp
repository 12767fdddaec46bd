#include "qgen/closed.hpp"

#include <cmath>

namespace qgen {

const char* closed_variant_name(ClosedVariant v) {
    return v == ClosedVariant::printed ? "printed" : "corrected";
}

ApproxValue s_poly_closed(const ModelParams& p, const EvalPoint& pt,
                          ClosedVariant variant) {
    const Method method = variant == ClosedVariant::printed
                              ? Method::closed_printed
                              : Method::closed_corrected;
    if (pt.n < p.k) return {Complex(0.0), 0.0, method, 0};

    // The alternating sum is a disguised finite difference: near q = 1 its
    // terms cancel by many orders of magnitude (condition ~ (1-q)^{-(n-k)}),
    // so accumulate in extended precision and report a condition-aware bound.
    using CLD = std::complex<long double>;
    const long double qld = p.q;
    const CLD bb = std::pow(CLD(p.beta.real(), p.beta.imag()),
                            static_cast<long double>(p.b));
    const long double ab = std::pow(static_cast<long double>(p.a),
                                    static_cast<long double>(p.b));
    long double pref = factorial(p.k).get_d() *
                       std::pow(1.0L + qld, static_cast<long double>(1 - p.k)) *
                       std::pow(1.0L / (1.0L - qld),
                                static_cast<long double>(pt.n - p.k));
    if (variant == ClosedVariant::printed) pref /= ab;

    CLD sum(0.0L);
    long double sum_abs = 0.0L;
    for (long l = p.k; l <= pt.n; ++l) {
        const long double qlk = std::pow(qld, static_cast<long double>(l - p.k));
        const CLD den = bb * qlk - ab;
        if (std::abs(den) < 1e-14L * (std::abs(bb * qlk) + std::abs(ab)))
            throw PoleAtDenominator(l);
        const long double c =
            mpz_class(binomial(pt.n, l) * binomial(l, p.k)).get_d();
        const long double sign = ((l - p.k) % 2 == 0) ? 1.0L : -1.0L;
        const CLD term = sign * c * std::pow(qld, (l - p.k) * (long double)pt.x) / den;
        sum += term;
        sum_abs += std::abs(term);
    }
    const CLD value_ld = pref * sum;
    const Complex value(static_cast<double>(value_ld.real()),
                        static_cast<double>(value_ld.imag()));
    const long double cancel =
        std::abs(sum) > 0.0L ? sum_abs / std::abs(sum) : 1.0L;
    const double bound =
        std::max(1e-15, static_cast<double>(cancel) * 1e-18) * std::abs(value);
    return {value, bound, method, pt.n - p.k + 1};
}

ExactScalar closed_sum_exact(const mpq_class& q, const ExactScalar& beta,
                             const mpq_class& a, long b, long k, long n,
                             long x, ClosedVariant variant) {
    if (q == 0 || q == 1) throw DomainError("exact closed sum needs q != 0, 1");
    if (a == 0) throw DomainError("a must be nonzero");
    if (beta.is_zero()) throw DomainError("beta must be nonzero");
    if (k < 1) throw DomainError("k must be >= 1");
    if (n < k) return ExactScalar(0);

    const ExactScalar bb = es_pow(beta, b);
    const mpq_class ab = rat_pow(a, b);
    mpq_class pref = mpq_class(factorial(k)) * rat_pow(1 + q, 1 - k) *
                     rat_pow(1 - q, k - n);
    if (variant == ClosedVariant::printed) pref /= ab;

    ExactScalar sum(0);
    for (long l = k; l <= n; ++l) {
        const ExactScalar den = bb * ExactScalar(rat_pow(q, l - k)) - ExactScalar(ab);
        if (den.is_zero()) throw PoleAtDenominator(l);
        mpq_class c(binomial(n, l) * binomial(l, k));
        if ((l - k) % 2 != 0) c = -c;
        const mpq_class qpx = rat_pow(q, (l - k) * x);
        sum = sum + ExactScalar(c * qpx) / den;
    }
    return ExactScalar(pref) * sum;
}

ExactScalar s_poly_exact(const ExactParams& p, long n, long x,
                         ClosedVariant variant) {
    if (n < 0) throw DomainError("n must be >= 0");
    if (x < 0) throw DomainError("x must be a non-negative integer");
    return closed_sum_exact(p.q, p.beta, p.a, p.b, p.k, n, x, variant);
}

std::vector<ApproxValue> s_numbers(const ModelParams& p, long n_max,
                                   ClosedVariant variant) {
    if (n_max < 0) throw DomainError("n_max must be >= 0");
    std::vector<ApproxValue> out;
    out.reserve(static_cast<size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n)
        out.push_back(s_poly_closed(p, EvalPoint(n, 0.0), variant));
    return out;
}

ApproxValue expand_from_numbers(const ModelParams& p, const EvalPoint& pt,
                                ExpansionVariant variant,
                                ClosedVariant closed_variant) {
    const auto numbers = s_numbers(p, pt.n, closed_variant);
    const double qx = q_number(pt.x, p.q);
    Complex sum(0.0);
    for (long l = 0; l <= pt.n; ++l) {
        sum += binomial(pt.n, l).get_d() * std::pow(p.q, l * pt.x) *
               numbers[static_cast<size_t>(l)].value * ipow(qx, pt.n - l);
    }
    if (variant == ExpansionVariant::corrected)
        sum *= std::pow(p.q, -static_cast<double>(p.k) * pt.x);
    return {sum, 1e-13 * std::abs(sum), numbers[0].method, pt.n + 1};
}

ExactScalar expand_from_numbers_exact(const ExactParams& p, long n, long x,
                                      ExpansionVariant variant,
                                      ClosedVariant closed_variant) {
    if (n < 0) throw DomainError("n must be >= 0");
    if (x < 0) throw DomainError("x must be a non-negative integer");
    const mpq_class qx = q_number_exact(x, p.q);
    ExactScalar sum(0);
    for (long l = 0; l <= n; ++l) {
        const ExactScalar s_l = s_poly_exact(p, l, 0, closed_variant);
        const mpq_class coeff =
            mpq_class(binomial(n, l)) * rat_pow(p.q, l * x) * rat_pow(qx, n - l);
        sum = sum + ExactScalar(coeff) * s_l;
    }
    if (variant == ExpansionVariant::corrected)
        sum = ExactScalar(rat_pow(p.q, -p.k * x)) * sum;
    return sum;
}

mpq_class classical_genocchi(long n) {
    if (n < 0) throw DomainError("n must be >= 0");
    std::vector<mpq_class> g(static_cast<size_t>(n) + 1);
    for (long m = 0; m <= n; ++m) {
        mpq_class rhs = (m == 1) ? 2 : 0;
        for (long j = 0; j < m; ++j)
            rhs -= mpq_class(binomial(m, j)) * g[static_cast<size_t>(j)];
        g[static_cast<size_t>(m)] = rhs / 2;
    }
    return g[static_cast<size_t>(n)];
}

mpq_class classical_euler_poly(long n, const mpq_class& x) {
    if (n < 0) throw DomainError("n must be >= 0");
    std::vector<mpq_class> e(static_cast<size_t>(n) + 1);
    for (long m = 0; m <= n; ++m) {
        mpq_class rhs = 2 * rat_pow(x, m);
        for (long j = 0; j < m; ++j)
            rhs -= mpq_class(binomial(m, j)) * e[static_cast<size_t>(j)];
        e[static_cast<size_t>(m)] = rhs / 2;
    }
    return e[static_cast<size_t>(n)];
}

mpq_class ozden_y(long n, const mpq_class& x, long k, const mpq_class& a,
                  long b, const mpq_class& beta) {
    if (n < 0) throw DomainError("n must be >= 0");
    if (k < 0) throw DomainError("k must be >= 0");
    if (b == 0) throw DomainError("b must be a nonzero integer");
    if (a == 0 || beta == 0) throw DomainError("a and beta must be nonzero");
    const mpq_class ab = rat_pow(a, b);
    const mpq_class bb = rat_pow(beta, b);
    if (ab == bb)
        throw DegenerateRecurrence("beta^b == a^b: recurrence unsolvable");
    const mpq_class two_pow = rat_pow(2, 1 - k);
    std::vector<mpq_class> y(static_cast<size_t>(n) + 1);
    for (long m = 0; m <= n; ++m) {
        mpq_class rhs = 0;
        if (m >= k)
            rhs = two_pow * mpq_class(k >= 1 ? falling_ratio(m, k) : mpz_class(1)) *
                  rat_pow(x, m - k);
        for (long j = 0; j < m; ++j)
            rhs -= bb * mpq_class(binomial(m, j)) * y[static_cast<size_t>(j)];
        y[static_cast<size_t>(m)] = rhs / (bb - ab);
    }
    return y[static_cast<size_t>(n)];
}

} // namespace qgen
