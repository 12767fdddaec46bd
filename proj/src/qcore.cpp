#include "qgen/qcore.hpp"

#include <cmath>

namespace qgen {

const char* method_name(Method m) {
    switch (m) {
        case Method::series: return "series";
        case Method::closed_printed: return "closed_printed";
        case Method::closed_corrected: return "closed_corrected";
        case Method::exact_downcast: return "exact_downcast";
    }
    return "unknown";
}

ModelParams::ModelParams(double q_, Complex beta_, double a_, long b_, long k_)
    : q(q_), beta(beta_), a(a_), b(b_), k(k_) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("q must lie in (0,1)");
    if (k < 1) throw DomainError("k must be a positive integer");
    if (a == 0.0) throw DomainError("a must be nonzero");
    if (beta == Complex(0.0)) throw DomainError("beta must be nonzero");
    if (b == 0) throw DomainError("b must be a nonzero integer");
}

Complex ModelParams::ratio() const {
    return ipow(beta / a, b);
}

EvalPoint::EvalPoint(long n_, double x_) : n(n_), x(x_) {
    if (n < 0) throw DomainError("n must be >= 0");
    if (x < 0.0) throw DomainError("x must be >= 0");
}

double q_number(double x, double q) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("q must lie in (0,1)");
    return (1.0 - std::pow(q, x)) / (1.0 - q);
}

mpq_class q_number_exact(long x, const mpq_class& q) {
    if (x < 0) throw DomainError("x must be a non-negative integer");
    if (!(q > 0 && q < 1)) throw DomainError("q must lie in (0,1)");
    mpq_class num = 1 - rat_pow(q, x);
    mpq_class den = 1 - q;
    mpq_class r = num / den;
    r.canonicalize();
    return r;
}

mpz_class binomial(long n, long l) {
    if (n < 0) throw DomainError("binomial: n must be >= 0");
    if (l < 0 || l > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(l));
    return r;
}

mpz_class falling_ratio(long n, long k) {
    if (k < 1) throw DomainError("falling_ratio: k must be >= 1");
    if (n < k) throw DomainError("falling_ratio: n must be >= k");
    mpz_class r = 1;
    for (long i = 0; i < k; ++i) r *= (n - i);
    return r;
}

mpz_class factorial(long n) {
    if (n < 0) throw DomainError("factorial: n must be >= 0");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

double ipow(double base, long e) {
    if (e < 0) return 1.0 / ipow(base, -e);
    double acc = 1.0, p = base;
    for (long m = e; m > 0; m >>= 1) {
        if (m & 1) acc *= p;
        p *= p;
    }
    return acc;
}

Complex ipow(Complex base, long e) {
    if (e < 0) return Complex(1.0) / ipow(base, -e);
    Complex acc(1.0), p = base;
    for (long m = e; m > 0; m >>= 1) {
        if (m & 1) acc *= p;
        p *= p;
    }
    return acc;
}

mpq_class rat_pow(const mpq_class& base, long e) {
    if (e < 0) {
        if (base == 0) throw DomainError("rat_pow: zero base with negative exponent");
        return 1 / rat_pow(base, -e);
    }
    mpq_class acc = 1, p = base;
    for (long m = e; m > 0; m >>= 1) {
        if (m & 1) acc *= p;
        p *= p;
    }
    acc.canonicalize();
    return acc;
}

} // namespace qgen
