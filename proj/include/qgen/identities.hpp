#pragma once

#include <map>
#include <string>
#include <vector>

#include "qgen/closed.hpp"
#include "qgen/series.hpp"
#include "qgen/zeta.hpp"

namespace qgen {

enum class IdentityId {
    expansion_thm1,
    umbral_cor1,
    symmetry_thm4,
    difference_thm5,
    umbral_cor2,
    distribution_thm6,
    specialization,
    q1_limit,
    interpolation_thm8,
};

/// Every identity ships as printed plus one corrected candidate.  For the
/// interpolation identity the corrected candidate is the index shift
/// (reported as "shifted").
enum class VariantId { printed, corrected };

enum class VerdictMode { exact, floating };

const char* identity_name(IdentityId id);
const char* variant_name(IdentityId id, VariantId v);

/// One audited (identity, variant, parameter-point) triple.  In exact mode
/// `passed` reflects rational equality; in float mode the rule is
/// abs_diff <= max(1e-9, 1e-9 |lhs|).
struct IdentityVerdict {
    IdentityId identity{};
    VariantId variant{};
    VerdictMode mode{};
    std::string point;
    Complex lhs{};
    Complex rhs{};
    double abs_diff = 0.0;
    bool passed = false;
};

/// Float-mode pass tolerance (separate from the evaluator tolerance).
inline constexpr double kFloatPassTol = 1e-9;

struct VariantSummary {
    long pass = 0;
    long total = 0;
    double max_abs_diff = 0.0;
};

struct AuditReport {
    std::string grid_id;
    ClosedVariant closed_variant = ClosedVariant::corrected;
    std::vector<IdentityVerdict> verdicts;

    /// Per (identity, variant) pass counts, keyed by name.
    std::map<std::string, std::map<std::string, VariantSummary>> summary() const;

    /// True when every audited identity has a variant passing at every point.
    bool all_identities_adjudicated() const;

    /// Canonical serialization: sorted keys, floats at 17 significant digits.
    std::string to_json() const;
};

// --- Theorem audits (exact mode) -------------------------------------------

IdentityVerdict verify_expansion(const ExactParams& p, long n, long x,
                                 VariantId variant, ClosedVariant cv);

IdentityVerdict verify_symmetry(const ExactParams& p, long n, long x,
                                VariantId variant, ClosedVariant cv);

IdentityVerdict verify_difference(const ExactParams& p, long n, VariantId variant,
                                  ClosedVariant cv);

/// Corollary-2 audit: the difference relation with S_n(1|.) produced by the
/// Theorem-1 expansion in `winning_expansion` rather than directly.
IdentityVerdict verify_difference_umbral(const ExactParams& p, long n,
                                         VariantId variant, ClosedVariant cv,
                                         ExpansionVariant winning_expansion);

// --- Theorem audits (float mode) -------------------------------------------

IdentityVerdict verify_distribution(const ModelParams& p, long n, double x,
                                    long d, VariantId variant, ClosedVariant cv);

IdentityVerdict verify_specialization_plain(double q, long n, double x,
                                            VariantId variant,
                                            const SeriesConfig& cfg = {});

IdentityVerdict verify_specialization_h(double q, long h, long n, double x,
                                        VariantId variant,
                                        const SeriesConfig& cfg = {});

/// Both specializations, both variants, h in {2,3,4} for the (h,q) family.
std::vector<IdentityVerdict> verify_specializations(double q, long n, double x,
                                                    const SeriesConfig& cfg = {});

IdentityVerdict verify_interpolation(const ModelParams& p, long n, double x,
                                     VariantId variant, ClosedVariant cv,
                                     const SeriesConfig& cfg = {});

// --- q -> 1 limit -----------------------------------------------------------

enum class LimitTarget { ozden, euler, genocchi };

/// Richardson extrapolation on a ladder sampled at h_j = 2^{-j}, j rising;
/// columns up to `order`.
mpq_class richardson_extrapolate(const std::vector<mpq_class>& ladder, int order);

/// Extrapolates exact-mode values along q_j = 1 - 2^{-j}, j = 3..14, and
/// compares with the Eq.-(1)-style recurrence.  target=euler fixes
/// (beta,a,b,k) = (1,-1,1,0) and compares recurrences directly (the k = 0
/// endpoint has no q-deformed family); target=genocchi fixes (1,-1,1,1).
IdentityVerdict verify_q1_limit(LimitTarget target, long n, const mpq_class& x,
                                long k, const mpq_class& a, long b,
                                const mpq_class& beta, ClosedVariant cv);

// --- Grid adjudication ------------------------------------------------------

struct OracleCheck {
    bool printed_all = true;
    bool corrected_all = true;
    double printed_max_rel = 0.0;
    double corrected_max_rel = 0.0;
    long points = 0;
};

/// Committed oracle grid: closed form (both variants) against the series
/// definition, relative tolerance 1e-9, |(beta/a)^b| < 1 throughout.
OracleCheck run_oracle_grid();

/// The audit-winning closed variant; throws if the oracle grid does not
/// single out exactly one.
ClosedVariant adjudicate_closed_variant();

/// Runs every audit over the committed grid named by grid_id ("smoke" or
/// "full"); exact mode where possible, float elsewhere.  Deterministic:
/// byte-identical reports across runs.
AuditReport run_audit(const std::string& grid_id);

} // namespace qgen
