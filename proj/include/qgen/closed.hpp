#pragma once

#include <vector>

#include "qgen/exact.hpp"
#include "qgen/qcore.hpp"

namespace qgen {

/// The finite closed form ships in two variants.  `printed` carries the
/// 1/a^b prefactor exactly as typeset; `corrected` is printed times a^b,
/// the candidate obtained by re-summing the defining series.  Neither is
/// presumed right: the identity audit adjudicates against the series.
enum class ClosedVariant { printed, corrected };

const char* closed_variant_name(ClosedVariant v);

/// Theorem-1 expansion in numbers, in two variants: `printed` as typeset,
/// `corrected` multiplies the sum by q^{-k x}.
enum class ExpansionVariant { printed, corrected };

/// Closed-form evaluation of S_{n,beta,q}(x|k,a,b):
///   prefactor * sum_{l=k}^{n} C(n,l) C(l,k) (-1)^{l-k} q^{(l-k)x}
///                               / (beta^b q^{l-k} - a^b)
/// Returns exactly 0 when n < k (empty sum).  Valid wherever the
/// denominators are nonzero, including outside the series' convergence
/// region (analytic continuation).
ApproxValue s_poly_closed(const ModelParams& p, const EvalPoint& pt,
                          ClosedVariant variant);

/// Exact closed-form sum over the rationals.  q may be any rational other
/// than 0 and 1 and x any integer: the symmetry audit substitutes
/// q -> 1/q and x -> 1-x formally into this finite rational expression.
ExactScalar closed_sum_exact(const mpq_class& q, const ExactScalar& beta,
                             const mpq_class& a, long b, long k, long n,
                             long x, ClosedVariant variant);

/// Exact-mode evaluation with validated parameters and integer x >= 0.
ExactScalar s_poly_exact(const ExactParams& p, long n, long x,
                         ClosedVariant variant);

/// Numbers S_0..S_{n_max} at x = 0.
std::vector<ApproxValue> s_numbers(const ModelParams& p, long n_max,
                                   ClosedVariant variant);

/// Theorem-1 evaluation from the numbers:
///   sum_l C(n,l) q^{lx} S_l [x]_q^{n-l}, times q^{-kx} when corrected.
/// The numbers themselves come from the closed form in `closed_variant`.
ApproxValue expand_from_numbers(const ModelParams& p, const EvalPoint& pt,
                                ExpansionVariant variant,
                                ClosedVariant closed_variant);

ExactScalar expand_from_numbers_exact(const ExactParams& p, long n, long x,
                                      ExpansionVariant variant,
                                      ClosedVariant closed_variant);

/// Classical Genocchi number G_n, from (e^t + 1) sum G_n t^n/n! = 2t.
mpq_class classical_genocchi(long n);

/// Classical Euler polynomial E_n(x), from the analogous recurrence
/// sum_j C(n,j) E_j(x) + E_n(x) = 2 x^n.
mpq_class classical_euler_poly(long n, const mpq_class& x);

/// Ozden's unified polynomial y_{n,beta}(x;k,a,b) by the recurrence from
/// (beta^b e^t - a^b) sum y_n t^n/n! = 2^{1-k} t^k e^{xt}.  k = 0 is
/// allowed (Euler specialization).
mpq_class ozden_y(long n, const mpq_class& x, long k, const mpq_class& a,
                  long b, const mpq_class& beta);

} // namespace qgen
