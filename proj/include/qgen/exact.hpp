#pragma once

#include <string>
#include <utility>

#include "qgen/qcore.hpp"

namespace qgen {

/// Complex scalar over the rationals.  Equality is exact; division errors
/// on a zero divisor.
struct ExactScalar {
    mpq_class re{0};
    mpq_class im{0};

    ExactScalar() = default;
    ExactScalar(mpq_class r) : re(std::move(r)) {} // NOLINT(google-explicit-constructor)
    ExactScalar(long v) : re(v) {}                 // NOLINT(google-explicit-constructor)
    ExactScalar(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    mpq_class norm() const { return re * re + im * im; } // |z|^2
    mpq_class abs_l1() const { return abs(re) + abs(im); }

    Complex to_complex() const { return {re.get_d(), im.get_d()}; }

    std::string str() const;
};

ExactScalar operator+(const ExactScalar& x, const ExactScalar& y);
ExactScalar operator-(const ExactScalar& x, const ExactScalar& y);
ExactScalar operator-(const ExactScalar& x);
ExactScalar operator*(const ExactScalar& x, const ExactScalar& y);
ExactScalar operator/(const ExactScalar& x, const ExactScalar& y);
bool operator==(const ExactScalar& x, const ExactScalar& y);

/// Multiplicative inverse; errors on zero.
ExactScalar es_inv(const ExactScalar& x);

/// Integer power, negative exponents allowed.
ExactScalar es_pow(const ExactScalar& base, long e);

/// Exact-mode mirror of ModelParams: every field rational.
struct ExactParams {
    mpq_class q;
    ExactScalar beta;
    mpq_class a;
    long b;
    long k;

    ExactParams(mpq_class q_, ExactScalar beta_, mpq_class a_, long b_, long k_);

    ExactScalar ratio() const; // (beta/a)^b

    /// Float-mode view of the same parameters.
    ModelParams downcast() const;
};

/// Parses "p/q", an integer, or a plain decimal ("0.25") into an exact rational.
mpq_class parse_rational(const std::string& s);

} // namespace qgen
