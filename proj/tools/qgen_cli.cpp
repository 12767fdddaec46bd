#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgen/closed.hpp"
#include "qgen/exact.hpp"
#include "qgen/identities.hpp"
#include "qgen/report.hpp"
#include "qgen/series.hpp"
#include "qgen/zeta.hpp"

using nlohmann::json;

namespace {

// exit codes: 0 success / 1 usage / 2 domain / 3 numeric / 4 audit failure
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitAudit = 4;

double parse_real(const std::string& s) {
    if (s.find('/') != std::string::npos)
        return qgen::parse_rational(s).get_d();
    return std::stod(s);
}

qgen::Complex parse_complex(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) return {parse_real(s), 0.0};
    return {parse_real(s.substr(0, comma)), parse_real(s.substr(comma + 1))};
}

qgen::ExactScalar parse_exact_complex(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) return {qgen::parse_rational(s), 0};
    return {qgen::parse_rational(s.substr(0, comma)),
            qgen::parse_rational(s.substr(comma + 1))};
}

std::vector<double> parse_grid(const std::string& s) {
    auto c1 = s.find(':');
    auto c2 = s.find(':', c1 == std::string::npos ? 0 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw qgen::DomainError("grid must be start:stop:step");
    const double start = std::stod(s.substr(0, c1));
    const double stop = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
    const double step = std::stod(s.substr(c2 + 1));
    if (!(step > 0.0)) throw qgen::DomainError("grid step must be > 0");
    std::vector<double> out;
    for (double v = start; v <= stop + 0.5 * step; v += step) out.push_back(v);
    return out;
}

void emit(const std::string& command, const json& params, const json& results,
          const json& errors = json::array()) {
    json env;
    env["schema_version"] = "1";
    env["command"] = command;
    env["params"] = params;
    env["results"] = results;
    env["errors"] = errors;
    std::cout << env.dump() << "\n";
}

json error_record(const std::string& kind, const std::string& message) {
    return {{"kind", kind}, {"message", message}};
}

struct ModelFlags {
    std::string q = "0.5", beta, a = "1", tol = "1e-12";
    long b = 1, k = 1;

    void attach(CLI::App* cmd, bool beta_required = true) {
        cmd->add_option("--q", q, "deformation parameter in (0,1)");
        auto* bo = cmd->add_option("--beta", beta, "complex weight, re[,im] or p/q");
        if (beta_required) bo->required();
        cmd->add_option("--a", a, "base (nonzero real or p/q)");
        cmd->add_option("--b", b, "nonzero integer exponent");
        cmd->add_option("--k", k, "order of the t-factor, k >= 1");
        cmd->add_option("--tol", tol, "series tolerance");
    }

    qgen::ModelParams model() const {
        return {parse_real(q), parse_complex(beta), parse_real(a), b, k};
    }

    qgen::ExactParams exact() const {
        return {qgen::parse_rational(q), parse_exact_complex(beta),
                qgen::parse_rational(a), b, k};
    }

    qgen::SeriesConfig series_cfg() const { return {std::stod(tol), 10000}; }
};

json approx_json(const qgen::ApproxValue& v) {
    return {{"value_re", qgen::fmt_float(v.value.real())},
            {"value_im", qgen::fmt_float(v.value.imag())},
            {"abs_error_bound", qgen::fmt_float(v.abs_error_bound)},
            {"method", qgen::method_name(v.method)},
            {"terms_used", v.terms_used}};
}

qgen::ClosedVariant parse_variant(const std::string& s) {
    if (s == "printed") return qgen::ClosedVariant::printed;
    if (s == "corrected") return qgen::ClosedVariant::corrected;
    throw qgen::DomainError("variant must be printed or corrected");
}

int run_eval(const ModelFlags& mf, long n, const std::string& x,
             const std::string& method, const std::string& variant) {
    json params = {{"q", mf.q},      {"beta", mf.beta}, {"a", mf.a},
                   {"b", mf.b},      {"k", mf.k},       {"n", n},
                   {"x", x},         {"method", method}, {"variant", variant},
                   {"tol", mf.tol}};
    json results;
    if (method == "series") {
        const auto r = qgen::s_poly_series(mf.model(),
                                           qgen::EvalPoint(n, std::stod(x)),
                                           mf.series_cfg());
        results = approx_json(r.value);
        results["converged"] = r.converged;
    } else if (method == "closed") {
        const auto v = qgen::s_poly_closed(mf.model(),
                                           qgen::EvalPoint(n, std::stod(x)),
                                           parse_variant(variant));
        results = approx_json(v);
    } else if (method == "exact") {
        const mpq_class xr = qgen::parse_rational(x);
        if (xr.get_den() != 1 || xr < 0)
            throw qgen::DomainError("exact mode needs integer x >= 0");
        const qgen::ExactScalar v =
            qgen::s_poly_exact(mf.exact(), n, xr.get_num().get_si(),
                               parse_variant(variant));
        results = {{"value_re", qgen::fmt_float(v.re.get_d())},
                   {"value_im", qgen::fmt_float(v.im.get_d())},
                   {"value_exact_re", v.re.get_str()},
                   {"value_exact_im", v.im.get_str()},
                   {"abs_error_bound", qgen::fmt_float(0.0)},
                   {"method", "exact_downcast"},
                   {"terms_used", n < mf.k ? 0 : n - mf.k + 1}};
    } else {
        throw qgen::DomainError("method must be series, closed or exact");
    }
    emit("eval", params, results);
    return 0;
}

int run_table(const ModelFlags& mf, long n_max, const std::string& x_grid,
              const std::string& format, const std::string& method,
              const std::string& variant) {
    const auto xs = parse_grid(x_grid);
    const auto p = mf.model();
    const auto cfg = mf.series_cfg();
    const auto cv = parse_variant(variant);

    json errors = json::array();
    struct Row {
        long n;
        double x;
        std::optional<qgen::ApproxValue> v;
    };
    std::vector<Row> rows;
    for (long n = 0; n <= n_max; ++n)
        for (double x : xs) {
            try {
                qgen::ApproxValue v =
                    method == "series"
                        ? qgen::s_poly_series(p, qgen::EvalPoint(n, x), cfg)
                              .value
                        : qgen::s_poly_closed(p, qgen::EvalPoint(n, x), cv);
                rows.push_back({n, x, v});
            } catch (const std::exception& e) {
                rows.push_back({n, x, std::nullopt});
                errors.push_back(error_record(
                    "cell", "n=" + std::to_string(n) +
                                ",x=" + qgen::fmt_g17(x) + ": " + e.what()));
            }
        }

    if (format == "csv") {
        std::cout << "n,x,value_re,value_im,err_bound,method\n";
        for (const Row& r : rows) {
            std::cout << r.n << "," << qgen::fmt_float(r.x) << ",";
            if (r.v)
                std::cout << qgen::fmt_float(r.v->value.real()) << ","
                          << qgen::fmt_float(r.v->value.imag()) << ","
                          << qgen::fmt_float(r.v->abs_error_bound) << ","
                          << qgen::method_name(r.v->method);
            else
                std::cout << ",,,";
            std::cout << "\n";
        }
        for (const auto& e : errors)
            std::cerr << e["message"].get<std::string>() << "\n";
        return 0;
    }

    json jrows = json::array();
    for (const Row& r : rows) {
        json jr = {{"n", r.n}, {"x", qgen::fmt_float(r.x)}};
        if (r.v) {
            jr["value_re"] = qgen::fmt_float(r.v->value.real());
            jr["value_im"] = qgen::fmt_float(r.v->value.imag());
            jr["err_bound"] = qgen::fmt_float(r.v->abs_error_bound);
            jr["method"] = qgen::method_name(r.v->method);
        }
        jrows.push_back(std::move(jr));
    }
    json params = {{"q", mf.q},       {"beta", mf.beta},   {"a", mf.a},
                   {"b", mf.b},       {"k", mf.k},         {"n_max", n_max},
                   {"x_grid", x_grid}, {"method", method}, {"variant", variant},
                   {"tol", mf.tol}};
    emit("table", params, {{"rows", std::move(jrows)}}, errors);
    return 0;
}

int run_verify(const std::string& identity, const std::string& grid) {
    const qgen::AuditReport rep = qgen::run_audit(grid);

    std::vector<qgen::IdentityId> wanted;
    if (identity == "all") {
        wanted = {qgen::IdentityId::expansion_thm1,  qgen::IdentityId::umbral_cor1,
                  qgen::IdentityId::symmetry_thm4,   qgen::IdentityId::difference_thm5,
                  qgen::IdentityId::umbral_cor2,     qgen::IdentityId::distribution_thm6,
                  qgen::IdentityId::specialization,  qgen::IdentityId::q1_limit,
                  qgen::IdentityId::interpolation_thm8};
    } else if (identity == "expansion") {
        wanted = {qgen::IdentityId::expansion_thm1, qgen::IdentityId::umbral_cor1};
    } else if (identity == "symmetry") {
        wanted = {qgen::IdentityId::symmetry_thm4};
    } else if (identity == "difference") {
        wanted = {qgen::IdentityId::difference_thm5, qgen::IdentityId::umbral_cor2};
    } else if (identity == "distribution") {
        wanted = {qgen::IdentityId::distribution_thm6};
    } else if (identity == "specialization") {
        wanted = {qgen::IdentityId::specialization};
    } else if (identity == "limit") {
        wanted = {qgen::IdentityId::q1_limit};
    } else if (identity == "interpolation") {
        wanted = {qgen::IdentityId::interpolation_thm8};
    } else {
        throw qgen::DomainError("unknown identity: " + identity);
    }

    qgen::AuditReport filtered;
    filtered.grid_id = rep.grid_id;
    filtered.closed_variant = rep.closed_variant;
    for (const auto& v : rep.verdicts)
        if (std::find(wanted.begin(), wanted.end(), v.identity) != wanted.end())
            filtered.verdicts.push_back(v);

    json params = {{"identity", identity}, {"grid", grid}};
    emit("verify", params, json::parse(filtered.to_json()));
    return filtered.all_identities_adjudicated() ? 0 : kExitAudit;
}

int run_zeta(const ModelFlags& mf, const std::string& s_flag,
             const std::string& s_grid, const std::string& x) {
    const auto p = mf.model();
    const auto cfg = mf.series_cfg();
    const double xv = std::stod(x);

    std::vector<qgen::Complex> ss;
    if (!s_grid.empty())
        for (double v : parse_grid(s_grid)) ss.emplace_back(v, 0.0);
    else
        ss.push_back(parse_complex(s_flag));

    json jpoints = json::array();
    for (qgen::Complex s : ss) {
        const qgen::ZetaPoint zp = qgen::zeta_eval(p, s, xv, cfg);
        jpoints.push_back({{"s_re", qgen::fmt_float(zp.s.real())},
                           {"s_im", qgen::fmt_float(zp.s.imag())},
                           {"value_re", qgen::fmt_float(zp.value.real())},
                           {"value_im", qgen::fmt_float(zp.value.imag())},
                           {"abs_error_bound", qgen::fmt_float(zp.abs_error_bound)},
                           {"terms_used", zp.terms_used}});
    }
    json params = {{"q", mf.q}, {"beta", mf.beta}, {"a", mf.a},  {"b", mf.b},
                   {"k", mf.k}, {"s", s_flag},     {"s_grid", s_grid},
                   {"x", x},    {"tol", mf.tol}};
    emit("zeta", params, {{"points", std::move(jpoints)}});
    return 0;
}

int run_limit(const std::string& target, const ModelFlags& mf, long n,
              const std::string& x) {
    qgen::LimitTarget t;
    if (target == "ozden")
        t = qgen::LimitTarget::ozden;
    else if (target == "euler")
        t = qgen::LimitTarget::euler;
    else if (target == "genocchi")
        t = qgen::LimitTarget::genocchi;
    else
        throw qgen::DomainError("target must be ozden, euler or genocchi");

    const mpq_class xr = qgen::parse_rational(x);
    const mpq_class beta =
        mf.beta.empty() ? mpq_class(1) : qgen::parse_rational(mf.beta);
    const qgen::ClosedVariant cv = qgen::adjudicate_closed_variant();
    const qgen::IdentityVerdict v = qgen::verify_q1_limit(
        t, n, xr, mf.k, qgen::parse_rational(mf.a), mf.b, beta, cv);

    json params = {{"target", target}, {"beta", mf.beta}, {"a", mf.a},
                   {"b", mf.b},        {"k", mf.k},       {"n", n},
                   {"x", x}};
    json results = {{"extrapolant", qgen::fmt_float(v.lhs.real())},
                    {"reference", qgen::fmt_float(v.rhs.real())},
                    {"abs_diff", qgen::fmt_float(v.abs_diff)},
                    {"point", v.point},
                    {"passed", v.passed}};
    emit("limit", params, results);
    return v.passed ? 0 : kExitAudit;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"unified q-Genocchi polynomial evaluator and identity auditor"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate one S_{n,beta,q}(x|k,a,b)");
    ModelFlags ef;
    ef.attach(eval);
    long en = 0;
    std::string ex = "0", emethod = "closed", evariant = "corrected";
    eval->add_option("--n", en)->required();
    eval->add_option("--x", ex);
    eval->add_option("--method", emethod)
        ->check(CLI::IsMember({"series", "closed", "exact"}));
    eval->add_option("--variant", evariant)
        ->check(CLI::IsMember({"printed", "corrected"}));

    // table
    auto* table = app.add_subcommand("table", "emit an (n x x) value table");
    ModelFlags tf;
    tf.attach(table);
    long tn_max = 0;
    std::string tx_grid = "0:1:1", tformat = "csv", tmethod = "closed",
                tvariant = "corrected";
    table->add_option("--n-max", tn_max)->required();
    table->add_option("--x-grid", tx_grid)->required();
    table->add_option("--format", tformat)->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--method", tmethod)
        ->check(CLI::IsMember({"series", "closed"}));
    table->add_option("--variant", tvariant)
        ->check(CLI::IsMember({"printed", "corrected"}));

    // verify
    auto* verify = app.add_subcommand("verify", "run the identity audit");
    std::string videntity = "all", vgrid = "smoke", vreport = "json";
    verify->add_option("--identity", videntity);
    verify->add_option("--grid", vgrid)->check(CLI::IsMember({"smoke", "full"}));
    verify->add_option("--report", vreport)->check(CLI::IsMember({"json"}));

    // zeta
    auto* zeta = app.add_subcommand("zeta", "evaluate the interpolation function");
    ModelFlags zf;
    zf.attach(zeta);
    std::string zs, zs_grid, zx = "1";
    zeta->add_option("--s", zs);
    zeta->add_option("--s-grid", zs_grid);
    zeta->add_option("--x", zx);

    // limit
    auto* limit = app.add_subcommand("limit", "q -> 1 limit check");
    ModelFlags lf;
    lf.attach(limit, /*beta_required=*/false);
    std::string ltarget = "ozden", lx = "0";
    long ln = 0;
    limit->add_option("--target", ltarget)
        ->check(CLI::IsMember({"ozden", "euler", "genocchi"}));
    limit->add_option("--n", ln)->required();
    limit->add_option("--x", lx);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (eval->parsed()) return run_eval(ef, en, ex, emethod, evariant);
        if (table->parsed())
            return run_table(tf, tn_max, tx_grid, tformat, tmethod, tvariant);
        if (verify->parsed()) return run_verify(videntity, vgrid);
        if (zeta->parsed()) {
            if (zs.empty() && zs_grid.empty())
                throw qgen::DomainError("one of --s or --s-grid is required");
            return run_zeta(zf, zs, zs_grid, zx);
        }
        if (limit->parsed()) return run_limit(ltarget, lf, ln, lx);
    } catch (const qgen::NotConvergent& e) {
        emit(app.get_subcommands().front()->get_name(), {}, {},
             json::array({error_record("not_convergent", e.what())}));
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const qgen::PoleAtDenominator& e) {
        emit(app.get_subcommands().front()->get_name(), {}, {},
             json::array({error_record("pole_at_denominator", e.what())}));
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const qgen::DomainError& e) {
        emit(app.get_subcommands().front()->get_name(), {}, {},
             json::array({error_record("domain", e.what())}));
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
