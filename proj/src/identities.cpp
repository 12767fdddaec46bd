#include "qgen/identities.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "qgen/report.hpp"

namespace qgen {

const char* identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::expansion_thm1: return "expansion_thm1";
        case IdentityId::umbral_cor1: return "umbral_cor1";
        case IdentityId::symmetry_thm4: return "symmetry_thm4";
        case IdentityId::difference_thm5: return "difference_thm5";
        case IdentityId::umbral_cor2: return "umbral_cor2";
        case IdentityId::distribution_thm6: return "distribution_thm6";
        case IdentityId::specialization: return "specialization";
        case IdentityId::q1_limit: return "q1_limit";
        case IdentityId::interpolation_thm8: return "interpolation_thm8";
    }
    return "unknown";
}

const char* variant_name(IdentityId id, VariantId v) {
    if (id == IdentityId::interpolation_thm8)
        return v == VariantId::printed ? "printed" : "shifted";
    return v == VariantId::printed ? "printed" : "corrected";
}

namespace {

bool float_pass(double abs_diff, Complex lhs) {
    return abs_diff <= std::max(kFloatPassTol, kFloatPassTol * std::abs(lhs));
}

IdentityVerdict exact_verdict(IdentityId id, VariantId v, std::string point,
                              const ExactScalar& lhs, const ExactScalar& rhs) {
    const ExactScalar d = lhs - rhs;
    IdentityVerdict out;
    out.identity = id;
    out.variant = v;
    out.mode = VerdictMode::exact;
    out.point = std::move(point);
    out.lhs = lhs.to_complex();
    out.rhs = rhs.to_complex();
    out.abs_diff = d.abs_l1().get_d();
    out.passed = d.is_zero();
    return out;
}

IdentityVerdict float_verdict(IdentityId id, VariantId v, std::string point,
                              Complex lhs, Complex rhs) {
    IdentityVerdict out;
    out.identity = id;
    out.variant = v;
    out.mode = VerdictMode::floating;
    out.point = std::move(point);
    out.lhs = lhs;
    out.rhs = rhs;
    out.abs_diff = std::abs(lhs - rhs);
    out.passed = float_pass(out.abs_diff, lhs);
    return out;
}

std::string exact_point(const ExactParams& p, long n, long x, long d = -1) {
    std::ostringstream os;
    os << "q=" << p.q.get_str() << ";beta=" << p.beta.str()
       << ";a=" << p.a.get_str() << ";b=" << p.b << ";k=" << p.k << ";n=" << n;
    if (x >= 0) os << ";x=" << x;
    if (d >= 0) os << ";d=" << d;
    return os.str();
}

std::string float_point(const ModelParams& p, long n, double x, long d = -1) {
    std::ostringstream os;
    os << "q=" << fmt_g17(p.q) << ";beta=" << fmt_complex_label(p.beta)
       << ";a=" << fmt_g17(p.a) << ";b=" << p.b << ";k=" << p.k << ";n=" << n
       << ";x=" << fmt_g17(x);
    if (d >= 0) os << ";d=" << d;
    return os.str();
}

long parity_sign(long e) {
    return ((e % 2) + 2) % 2 == 0 ? 1 : -1;
}

} // namespace

// --- exact-mode audits ------------------------------------------------------

IdentityVerdict verify_expansion(const ExactParams& p, long n, long x,
                                 VariantId variant, ClosedVariant cv) {
    const ExpansionVariant ev = variant == VariantId::printed
                                    ? ExpansionVariant::printed
                                    : ExpansionVariant::corrected;
    const ExactScalar lhs = s_poly_exact(p, n, x, cv);
    const ExactScalar rhs = expand_from_numbers_exact(p, n, x, ev, cv);
    return exact_verdict(IdentityId::expansion_thm1, variant, exact_point(p, n, x),
                         lhs, rhs);
}

IdentityVerdict verify_symmetry(const ExactParams& p, long n, long x,
                                VariantId variant, ClosedVariant cv) {
    // Left side: formal substitution q -> 1/q, beta -> 1/beta, a -> 1/a,
    // x -> 1-x into the finite closed sum (a rational expression, no
    // convergence needed).
    const ExactScalar lhs = closed_sum_exact(1 / p.q, es_inv(p.beta), 1 / p.a,
                                             p.b, p.k, n, 1 - x, cv);
    const ExactScalar s = closed_sum_exact(p.q, p.beta, p.a, p.b, p.k, n, x, cv);
    const long eb = variant == VariantId::printed ? 3 * p.b : p.b;
    const mpq_class factor_re =
        parity_sign(n - p.k - 1) * rat_pow(p.q, n - 1) * rat_pow(p.a, eb);
    const ExactScalar rhs = ExactScalar(factor_re) * es_pow(p.beta, p.b) * s;
    IdentityVerdict out = exact_verdict(IdentityId::symmetry_thm4, variant,
                                        exact_point(p, n, x), lhs, rhs);
    return out;
}

namespace {

IdentityVerdict difference_verdict(IdentityId id, const ExactParams& p, long n,
                                   VariantId variant, const ExactScalar& s1,
                                   const ExactScalar& s0) {
    ExactScalar lhs;
    if (variant == VariantId::printed) {
        // Eq. (17) verbatim: S_n(0) - (beta/a) S_n(1)
        lhs = s0 - (p.beta / ExactScalar(p.a)) * s1;
    } else {
        // Index-shift candidate: (beta/a)^b S_n(1) - S_n(0)
        lhs = p.ratio() * s1 - s0;
    }
    ExactScalar rhs(0);
    if (n == p.k)
        rhs = ExactScalar(rat_pow(1 + p.q, 1 - p.k) * mpq_class(factorial(p.k)) /
                          rat_pow(p.a, p.b));
    return exact_verdict(id, variant, exact_point(p, n, -1), lhs, rhs);
}

} // namespace

IdentityVerdict verify_difference(const ExactParams& p, long n, VariantId variant,
                                  ClosedVariant cv) {
    const ExactScalar s0 = s_poly_exact(p, n, 0, cv);
    const ExactScalar s1 = s_poly_exact(p, n, 1, cv);
    return difference_verdict(IdentityId::difference_thm5, p, n, variant, s1, s0);
}

IdentityVerdict verify_difference_umbral(const ExactParams& p, long n,
                                         VariantId variant, ClosedVariant cv,
                                         ExpansionVariant winning_expansion) {
    const ExactScalar s0 = s_poly_exact(p, n, 0, cv);
    const ExactScalar s1 =
        expand_from_numbers_exact(p, n, 1, winning_expansion, cv);
    return difference_verdict(IdentityId::umbral_cor2, p, n, variant, s1, s0);
}

// --- float-mode audits ------------------------------------------------------

IdentityVerdict verify_distribution(const ModelParams& p, long n, double x,
                                    long d, VariantId variant, ClosedVariant cv) {
    if (d < 1) throw DomainError("d must be >= 1");
    const Complex lhs = s_poly_closed(p, EvalPoint(n, x), cv).value;

    const ModelParams inner(ipow(p.q, d), ipow(p.beta, d), ipow(p.a, d), p.b, p.k);
    Complex sum(0.0);
    for (long l = 0; l < d; ++l) {
        const Complex s =
            s_poly_closed(inner, EvalPoint(n, (x + l) / d), cv).value;
        sum += ipow(p.beta / p.a, p.b * l) * s;
    }
    Complex rhs = ipow(1.0 + p.q, 1 - p.k) / ipow(1.0 + inner.q, 1 - p.k) *
                  ipow(q_number(static_cast<double>(d), p.q), n - p.k) * sum;
    if (variant == VariantId::corrected) rhs *= ipow(p.a, (d - 1) * p.b);
    return float_verdict(IdentityId::distribution_thm6, variant,
                         float_point(p, n, x, d), lhs, rhs);
}

IdentityVerdict verify_specialization_plain(double q, long n, double x,
                                            VariantId variant,
                                            const SeriesConfig& cfg) {
    const Complex g = q_genocchi_reference(q, n, x, cfg).value.value;
    const ModelParams p(q, Complex(q), -1.0, 1, 1);
    Complex s = s_poly_series(p, EvalPoint(n, x), cfg).value.value;
    if (variant == VariantId::corrected) s *= (1.0 + q);
    IdentityVerdict out = float_verdict(IdentityId::specialization, variant, "", g, s);
    std::ostringstream os;
    os << "family=q_genocchi;q=" << fmt_g17(q) << ";n=" << n << ";x=" << fmt_g17(x);
    out.point = os.str();
    return out;
}

IdentityVerdict verify_specialization_h(double q, long h, long n, double x,
                                        VariantId variant,
                                        const SeriesConfig& cfg) {
    const Complex g = hq_genocchi_reference(q, h, n, x, cfg).value.value;
    const ModelParams p(q, Complex(ipow(q, h - 1)), -1.0, 1, 1);
    Complex s = s_poly_series(p, EvalPoint(n, x), cfg).value.value;
    if (variant == VariantId::corrected) s *= (1.0 + q);
    IdentityVerdict out = float_verdict(IdentityId::specialization, variant, "", g, s);
    std::ostringstream os;
    os << "family=hq_genocchi;h=" << h << ";q=" << fmt_g17(q) << ";n=" << n
       << ";x=" << fmt_g17(x);
    out.point = os.str();
    return out;
}

std::vector<IdentityVerdict> verify_specializations(double q, long n, double x,
                                                    const SeriesConfig& cfg) {
    std::vector<IdentityVerdict> out;
    for (VariantId v : {VariantId::printed, VariantId::corrected}) {
        out.push_back(verify_specialization_plain(q, n, x, v, cfg));
        for (long h : {2L, 3L, 4L})
            out.push_back(verify_specialization_h(q, h, n, x, v, cfg));
    }
    return out;
}

IdentityVerdict verify_interpolation(const ModelParams& p, long n, double x,
                                     VariantId variant, ClosedVariant cv,
                                     const SeriesConfig& cfg) {
    if (n < p.k) throw DomainError("interpolation audit needs n >= k");
    const long s_arg = variant == VariantId::printed ? -n : -(n - p.k);
    const Complex lhs =
        zeta_eval(p, Complex(static_cast<double>(s_arg)), x, cfg).value;
    const Complex s_n = s_poly_closed(p, EvalPoint(n, x), cv).value;
    const Complex rhs = -s_n / falling_ratio(n, p.k).get_d();
    IdentityVerdict out = float_verdict(IdentityId::interpolation_thm8, variant,
                                        float_point(p, n, x), lhs, rhs);
    return out;
}

// --- q -> 1 limit -----------------------------------------------------------

mpq_class richardson_extrapolate(const std::vector<mpq_class>& ladder, int order) {
    if (ladder.empty()) throw DomainError("empty extrapolation ladder");
    std::vector<mpq_class> t = ladder;
    const int max_order =
        std::min<int>(order, static_cast<int>(ladder.size()) - 1);
    for (int m = 1; m <= max_order; ++m) {
        const mpq_class w = rat_pow(2, m);
        for (size_t i = t.size() - 1; i >= static_cast<size_t>(m); --i) {
            t[i] = (w * t[i] - t[i - 1]) / (w - 1);
            if (i == static_cast<size_t>(m)) break;
        }
    }
    return t.back();
}

IdentityVerdict verify_q1_limit(LimitTarget target, long n, const mpq_class& x,
                                long k, const mpq_class& a, long b,
                                const mpq_class& beta, ClosedVariant cv) {
    const char* target_name = target == LimitTarget::ozden    ? "ozden"
                              : target == LimitTarget::euler ? "euler"
                                                             : "genocchi";
    mpq_class eff_a = a, eff_beta = beta;
    long eff_k = k, eff_b = b;
    if (target == LimitTarget::euler) {
        eff_k = 0;
        eff_a = -1;
        eff_b = 1;
        eff_beta = 1;
    } else if (target == LimitTarget::genocchi) {
        eff_k = 1;
        eff_a = -1;
        eff_b = 1;
        eff_beta = 1;
    }

    std::ostringstream os;
    os << "target=" << target_name << ";beta=" << eff_beta.get_str()
       << ";a=" << eff_a.get_str() << ";b=" << eff_b << ";k=" << eff_k
       << ";n=" << n << ";x=" << x.get_str();
    const std::string point = os.str();

    const mpq_class reference = ozden_y(n, x, eff_k, eff_a, eff_b, eff_beta);

    if (target == LimitTarget::euler) {
        // k = 0 has no q-deformed family; the Euler check compares the two
        // exact recurrences directly.
        const mpq_class e_n = classical_euler_poly(n, x);
        return exact_verdict(IdentityId::q1_limit, VariantId::printed, point,
                             ExactScalar(reference), ExactScalar(e_n));
    }

    if (x.get_den() != 1)
        throw DomainError("q->1 ladder needs integer x in exact mode");
    const long xl = static_cast<long>(x.get_num().get_si());

    std::vector<mpq_class> ladder;
    for (long j = 3; j <= 14; ++j) {
        const mpq_class qj = 1 - rat_pow(2, -j);
        const ExactScalar s = closed_sum_exact(qj, ExactScalar(eff_beta), eff_a,
                                               eff_b, eff_k, n, xl, cv);
        ladder.push_back(s.re); // rational parameters keep the value real
    }
    const mpq_class extrap = richardson_extrapolate(ladder, 6);

    IdentityVerdict out;
    out.identity = IdentityId::q1_limit;
    out.variant = VariantId::printed;
    out.mode = VerdictMode::floating;
    out.point = point;
    out.lhs = Complex(extrap.get_d());
    out.rhs = Complex(reference.get_d());
    out.abs_diff = std::abs(mpq_class(extrap - reference).get_d());
    out.passed = out.abs_diff <= 1e-6;
    return out;
}

// --- grid adjudication ------------------------------------------------------

namespace {

struct GridPoint {
    ModelParams p;
    long n;
    double x;
};

std::vector<GridPoint> oracle_grid_points() {
    std::vector<GridPoint> pts;
    const double qs[] = {0.2, 0.5, 0.9};
    const long ks[] = {1, 2, 3};
    const long bs[] = {-2, -1, 1, 2, 3};
    const double as[] = {0.5, 1.0, 2.0, -1.5};
    const long ns[] = {0, 1, 2, 3, 5, 8};
    const double xs[] = {0.0, 0.25, 1.0, 2.5};
    for (double q : qs)
        for (long k : ks)
            for (long b : bs)
                for (double a : as) {
                    const Complex beta = a * (b > 0 ? 0.4 : 2.5);
                    const ModelParams p(q, beta, a, b, k);
                    for (long n : ns)
                        for (double x : xs) pts.push_back({p, n, x});
                }
    // a handful of complex-beta points
    for (long b : {1L, 2L})
        for (long k : {1L, 2L})
            for (long n : {2L, 5L})
                for (double x : {0.0, 1.0})
                    pts.push_back(
                        {ModelParams(0.5, Complex(0.3, 0.2), 1.0, b, k), n, x});
    return pts;
}

} // namespace

OracleCheck run_oracle_grid() {
    OracleCheck res;
    const SeriesConfig cfg(1e-12, 10000);
    for (const GridPoint& gp : oracle_grid_points()) {
        const Complex ref = s_poly_series(gp.p, EvalPoint(gp.n, gp.x), cfg).value.value;
        const double scale = std::max(kFloatPassTol, kFloatPassTol * std::abs(ref));
        for (ClosedVariant v : {ClosedVariant::printed, ClosedVariant::corrected}) {
            const Complex got = s_poly_closed(gp.p, EvalPoint(gp.n, gp.x), v).value;
            const double diff = std::abs(got - ref);
            const double rel = diff / std::max(1.0, std::abs(ref));
            if (v == ClosedVariant::printed) {
                res.printed_max_rel = std::max(res.printed_max_rel, rel);
                if (diff > scale) res.printed_all = false;
            } else {
                res.corrected_max_rel = std::max(res.corrected_max_rel, rel);
                if (diff > scale) res.corrected_all = false;
            }
        }
        ++res.points;
    }
    return res;
}

ClosedVariant adjudicate_closed_variant() {
    const OracleCheck oc = run_oracle_grid();
    if (oc.printed_all == oc.corrected_all)
        throw std::runtime_error(
            "oracle grid did not single out one closed variant");
    return oc.printed_all ? ClosedVariant::printed : ClosedVariant::corrected;
}

// --- committed audit grids --------------------------------------------------

namespace {

struct ExactTuple {
    ExactParams p;
};

std::vector<ExactParams> exact_grid(bool full) {
    std::vector<ExactParams> out;
    std::vector<mpq_class> qs, as;
    std::vector<long> bs, ks;
    if (full) {
        qs = {mpq_class(1, 2), mpq_class(4, 5)};
        as = {mpq_class(1), mpq_class(2), mpq_class(-3, 2)};
        bs = {-2, 1, 3};
        ks = {1, 2, 3};
    } else {
        qs = {mpq_class(1, 2)};
        as = {mpq_class(1), mpq_class(2)};
        bs = {1, 2};
        ks = {1, 2};
    }
    for (const auto& q : qs)
        for (const auto& a : as)
            for (long b : bs)
                for (long k : ks)
                    out.emplace_back(q, ExactScalar(a * mpq_class(2, 5)), a, b, k);
    if (full) {
        // complex-beta points
        for (const auto& a : {mpq_class(1), mpq_class(2)})
            for (long b : {1L, 3L})
                for (long k : {1L, 2L})
                    out.emplace_back(
                        mpq_class(1, 2),
                        ExactScalar(a * mpq_class(1, 3), a * mpq_class(1, 4)), a,
                        b, k);
    }
    return out;
}

} // namespace

AuditReport run_audit(const std::string& grid_id) {
    const bool full = grid_id == "full";
    if (!full && grid_id != "smoke")
        throw DomainError("unknown grid_id: " + grid_id);

    AuditReport rep;
    rep.grid_id = grid_id;
    rep.closed_variant = adjudicate_closed_variant();
    const ClosedVariant cv = rep.closed_variant;

    const std::vector<ExactParams> tuples = exact_grid(full);
    const std::vector<long> ns =
        full ? std::vector<long>{0, 1, 3, 6} : std::vector<long>{0, 1, 2, 3, 4};
    const std::vector<long> xs =
        full ? std::vector<long>{0, 1, 2} : std::vector<long>{0, 1};
    const auto variants = {VariantId::printed, VariantId::corrected};

    // Theorem 1 + Corollary 1 (the umbral statement is the same finite sum).
    for (const auto& p : tuples)
        for (long n : ns)
            for (long x : xs)
                for (VariantId v : variants) {
                    IdentityVerdict t1 = verify_expansion(p, n, x, v, cv);
                    IdentityVerdict c1 = t1;
                    c1.identity = IdentityId::umbral_cor1;
                    rep.verdicts.push_back(std::move(t1));
                    rep.verdicts.push_back(std::move(c1));
                }

    // Winning expansion variant feeds the Corollary-2 audit.
    bool printed_all = true, corrected_all = true;
    for (const auto& vd : rep.verdicts) {
        if (vd.identity != IdentityId::expansion_thm1) continue;
        if (vd.variant == VariantId::printed && !vd.passed) printed_all = false;
        if (vd.variant == VariantId::corrected && !vd.passed) corrected_all = false;
    }
    const ExpansionVariant winning_expansion =
        corrected_all ? ExpansionVariant::corrected : ExpansionVariant::printed;
    if (!printed_all && !corrected_all)
        throw std::runtime_error("no Theorem-1 variant passes the grid");

    // Theorem 4.
    for (const auto& p : tuples)
        for (long n : ns)
            for (long x : xs)
                for (VariantId v : variants)
                    rep.verdicts.push_back(verify_symmetry(p, n, x, v, cv));

    // Theorem 5 + Corollary 2.
    for (const auto& p : tuples)
        for (long n : ns)
            for (VariantId v : variants) {
                rep.verdicts.push_back(verify_difference(p, n, v, cv));
                rep.verdicts.push_back(
                    verify_difference_umbral(p, n, v, cv, winning_expansion));
            }

    // Theorem 6 (float: (x+l)/d is generally irrational in q-powers).
    {
        const std::vector<double> qs = full ? std::vector<double>{0.3, 0.5}
                                            : std::vector<double>{0.5};
        const std::vector<double> as =
            full ? std::vector<double>{1.0, 2.0, -1.5} : std::vector<double>{1.0, 2.0};
        const std::vector<long> bs =
            full ? std::vector<long>{-1, 1, 2} : std::vector<long>{1};
        const std::vector<long> dks = full ? std::vector<long>{1, 2} : std::vector<long>{1};
        const std::vector<long> ds =
            full ? std::vector<long>{1, 2, 3} : std::vector<long>{1, 2};
        const std::vector<long> dns =
            full ? std::vector<long>{0, 2, 3, 6} : std::vector<long>{0, 1, 2, 3, 4};
        const std::vector<double> dxs =
            full ? std::vector<double>{0.0, 0.5, 1.0} : std::vector<double>{0.0, 1.0};
        for (double q : qs)
            for (double a : as)
                for (long b : bs)
                    for (long k : dks) {
                        const ModelParams p(q, Complex(a * (b > 0 ? 0.4 : 2.5)),
                                            a, b, k);
                        for (long d : ds)
                            for (long n : dns)
                                for (double x : dxs)
                                    for (VariantId v : variants)
                                        rep.verdicts.push_back(
                                            verify_distribution(p, n, x, d, v, cv));
                    }
    }

    // Specializations.
    {
        const std::vector<double> qs = full ? std::vector<double>{0.3, 0.5, 0.8}
                                            : std::vector<double>{0.5};
        const long n_max = full ? 6 : 3;
        const std::vector<double> sxs =
            full ? std::vector<double>{0.0, 0.5, 1.0} : std::vector<double>{0.0, 1.0};
        for (double q : qs)
            for (long n = 0; n <= n_max; ++n)
                for (double x : sxs)
                    for (auto& vd : verify_specializations(q, n, x))
                        rep.verdicts.push_back(std::move(vd));
    }

    // Theorem 8.
    {
        struct ZP {
            double q, br, bi, a;
            long b, k;
        };
        const std::vector<ZP> zps = full
            ? std::vector<ZP>{{0.5, 1.0 / 3.0, 0.0, 1.0, 1, 1},
                              {0.5, 1.0 / 3.0, 0.0, 1.0, 1, 2},
                              {0.5, 1.0 / 3.0, 0.0, 1.0, 1, 3},
                              {0.3, 0.8, 0.0, 2.0, 1, 1},
                              {0.8, -0.5, 0.0, -1.5, 1, 2},
                              {0.5, 3.0, 0.0, 1.0, -1, 1}}
            : std::vector<ZP>{{0.5, 1.0 / 3.0, 0.0, 1.0, 1, 1},
                              {0.5, 1.0 / 3.0, 0.0, 1.0, 1, 2}};
        const long n_max = full ? 6 : 4;
        for (const ZP& z : zps) {
            const ModelParams p(z.q, Complex(z.br, z.bi), z.a, z.b, z.k);
            for (long n = p.k; n <= n_max; ++n)
                for (double x : {0.5, 1.0, 2.0})
                    for (VariantId v : variants)
                        rep.verdicts.push_back(
                            verify_interpolation(p, n, x, v, cv));
        }
    }

    // q -> 1 limits.
    {
        struct LP {
            mpq_class beta, a;
            long b, k;
        };
        const std::vector<LP> lps = {{mpq_class(1, 3), mpq_class(1), 1, 1},
                                     {mpq_class(1, 3), mpq_class(1), 1, 2},
                                     {mpq_class(1, 4), mpq_class(1, 2), 2, 1},
                                     {mpq_class(3), mpq_class(1), -1, 1},
                                     {mpq_class(2, 5), mpq_class(1), 1, 3}};
        const std::vector<long> lns =
            full ? std::vector<long>{0, 2, 4, 6} : std::vector<long>{0, 2};
        for (const LP& lp : lps)
            for (long n : lns)
                for (long x : {0L, 1L})
                    rep.verdicts.push_back(verify_q1_limit(
                        LimitTarget::ozden, n, mpq_class(x), lp.k, lp.a, lp.b,
                        lp.beta, cv));
        for (long n : {0L, 1L, 3L})
            for (long x : {0L, 1L})
                rep.verdicts.push_back(verify_q1_limit(LimitTarget::euler, n,
                                                       mpq_class(x), 0, -1, 1, 1,
                                                       cv));
        for (long n : {1L, 2L, 4L})
            for (long x : {0L, 1L})
                rep.verdicts.push_back(verify_q1_limit(LimitTarget::genocchi, n,
                                                       mpq_class(x), 1, -1, 1, 1,
                                                       cv));
    }

    std::sort(rep.verdicts.begin(), rep.verdicts.end(),
              [](const IdentityVerdict& u, const IdentityVerdict& w) {
                  return std::tuple<int, int, const std::string&>(
                             static_cast<int>(u.identity),
                             static_cast<int>(u.variant), u.point) <
                         std::tuple<int, int, const std::string&>(
                             static_cast<int>(w.identity),
                             static_cast<int>(w.variant), w.point);
              });
    return rep;
}

// --- report -----------------------------------------------------------------

std::map<std::string, std::map<std::string, VariantSummary>>
AuditReport::summary() const {
    std::map<std::string, std::map<std::string, VariantSummary>> out;
    for (const auto& v : verdicts) {
        VariantSummary& s =
            out[identity_name(v.identity)][variant_name(v.identity, v.variant)];
        ++s.total;
        if (v.passed) ++s.pass;
        s.max_abs_diff = std::max(s.max_abs_diff, v.abs_diff);
    }
    return out;
}

bool AuditReport::all_identities_adjudicated() const {
    const auto sum = summary();
    for (const auto& [identity, by_variant] : sum) {
        bool ok = false;
        for (const auto& [variant, s] : by_variant)
            if (s.pass == s.total) ok = true;
        if (!ok) return false;
    }
    return !sum.empty();
}

std::string AuditReport::to_json() const {
    nlohmann::json j;
    j["schema_version"] = "1";
    j["grid_id"] = grid_id;
    j["closed_variant"] = closed_variant_name(closed_variant);
    nlohmann::json jsum;
    for (const auto& [identity, by_variant] : summary()) {
        nlohmann::json jv;
        for (const auto& [variant, s] : by_variant) {
            jv[variant] = {{"pass", s.pass},
                           {"total", s.total},
                           {"max_abs_diff", fmt_float(s.max_abs_diff)}};
        }
        jsum[identity] = std::move(jv);
    }
    j["summary"] = std::move(jsum);
    nlohmann::json jv = nlohmann::json::array();
    for (const auto& v : verdicts) {
        jv.push_back({{"identity", identity_name(v.identity)},
                      {"variant", variant_name(v.identity, v.variant)},
                      {"mode", v.mode == VerdictMode::exact ? "exact" : "float"},
                      {"point", v.point},
                      {"lhs_re", fmt_float(v.lhs.real())},
                      {"lhs_im", fmt_float(v.lhs.imag())},
                      {"rhs_re", fmt_float(v.rhs.real())},
                      {"rhs_im", fmt_float(v.rhs.imag())},
                      {"abs_diff", fmt_float(v.abs_diff)},
                      {"passed", v.passed}});
    }
    j["verdicts"] = std::move(jv);
    return j.dump();
}

} // namespace qgen
