#pragma once

#include <complex>
#include <gmpxx.h>

#include "qgen/errors.hpp"

namespace qgen {

using Complex = std::complex<double>;

/// How a value was produced.  exact_downcast marks a rational result
/// converted to floating point.
enum class Method { series, closed_printed, closed_corrected, exact_downcast };

const char* method_name(Method m);

/// The fixed symbols of the generating function: deformation q in (0,1),
/// complex weight beta, base a, integer exponent b, order k of the t-factor.
struct ModelParams {
    double q;
    Complex beta;
    double a;
    long b;
    long k;

    ModelParams(double q_, Complex beta_, double a_, long b_, long k_);

    /// The series ratio r = (beta/a)^b.
    Complex ratio() const;
};

/// Polynomial order n and real argument x >= 0.
struct EvalPoint {
    long n;
    double x;

    EvalPoint(long n_, double x_);
};

/// A complex evaluation result with a rigorous absolute-error bound.
struct ApproxValue {
    Complex value{};
    double abs_error_bound = 0.0;
    Method method = Method::series;
    long terms_used = 0;
};

/// q-number [x]_q = (1 - q^x)/(1 - q).  Requires q in (0,1).
double q_number(double x, double q);

/// Exact rational [x]_q for integer x >= 0 and rational q in (0,1).
mpq_class q_number_exact(long x, const mpq_class& q);

/// Binomial coefficient; 0 outside 0 <= l <= n.
mpz_class binomial(long n, long l);

/// n!/(n-k)! = n(n-1)...(n-k+1).  Requires n >= k >= 1.
mpz_class falling_ratio(long n, long k);

mpz_class factorial(long n);

/// Integer powers, negative exponents allowed.
double ipow(double base, long e);
Complex ipow(Complex base, long e);
mpq_class rat_pow(const mpq_class& base, long e);

} // namespace qgen
