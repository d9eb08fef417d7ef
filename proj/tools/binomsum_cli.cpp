// Command-line driver: single verifications, exhaustive parameter-grid
// sweeps, series dumps, and the identity catalog. Exit codes are the CI
// contract: 0 all equal / pass, 1 at least one failure, 2 usage or
// domain errors.

#include <algorithm>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <binomsum/registry.hpp>
#include <binomsum/series_checks.hpp>
#include <binomsum/sweep.hpp>

namespace {

using namespace binomsum;

std::vector<Rat> parse_rats(const std::vector<std::string>& raw) {
    std::vector<Rat> out;
    out.reserve(raw.size());
    for (const std::string& s : raw)
        out.push_back(Rat::parse(s));
    return out;
}

// Integer axis tokens: "7" or an inclusive range "0..30".
std::vector<long> parse_longs(const std::vector<std::string>& raw) {
    std::vector<long> out;
    for (const std::string& s : raw) {
        const auto dots = s.find("..");
        if (dots == std::string::npos) {
            out.push_back(Rat::parse(s).to_long());
            continue;
        }
        const long lo = Rat::parse(s.substr(0, dots)).to_long();
        const long hi = Rat::parse(s.substr(dots + 2)).to_long();
        if (hi < lo)
            throw domain_error("empty range \"" + s + "\"");
        for (long v = lo; v <= hi; ++v)
            out.push_back(v);
    }
    return out;
}

int cmd_verify(const std::string& id, const std::vector<std::string>& m,
               const std::vector<std::string>& n, const std::vector<std::string>& r,
               const std::vector<std::string>& p, const std::vector<std::string>& q,
               const std::vector<std::string>& alpha, const std::vector<std::string>& x,
               bool json) {
    const IdentityDescriptor& ident = find_identity(id);
    ParamSet ps;
    auto single = [](const std::vector<std::string>& vals, const char* name) {
        if (vals.size() != 1)
            throw domain_error(std::string("verify needs exactly one --") + name);
        return vals[0];
    };
    for (Param param : ident.params)
        switch (param) {
            case Param::m: ps.m = Rat::parse(single(m, "m")).to_long(); break;
            case Param::n: ps.n = Rat::parse(single(n, "n")).to_long(); break;
            case Param::r: ps.r = Rat::parse(single(r, "r")).to_long(); break;
            case Param::p: ps.p = Rat::parse(single(p, "p")).to_long(); break;
            case Param::q: ps.q = Rat::parse(single(q, "q")).to_long(); break;
            case Param::alpha: ps.alpha = Rat::parse(single(alpha, "alpha")); break;
            case Param::x: ps.x = Rat::parse(single(x, "x")); break;
        }
    const VerificationReport rep = eval_identity(id, ps);
    if (json) {
        std::cout << report_to_json(ident, rep).dump() << '\n';
    } else {
        std::cout << rep.identity << detail::param_text(ident, rep.params) << "  lhs=" << rep.lhs
                  << " rhs=" << rep.rhs << "  " << (rep.equal ? "EQUAL" : "UNEQUAL") << "  ("
                  << rep.micros << " us)\n";
    }
    return rep.equal ? 0 : 1;
}

int cmd_series(const std::string& kind, const Rat& alpha, long r, long order) {
    if (kind == "revert") {
        const LaurentSeries t = revert_u(alpha, order);
        for (long e = 1; e <= order; ++e)
            std::cout << e << ' ' << t.coeff(e) << '\n';
        return 0;
    }
    if (kind == "F") {
        const BiSeries f = F_closed_form(alpha, order);
        for (long i = 0; i <= order; ++i)
            for (long j = 0; j <= order; ++j)
                std::cout << i << ' ' << j << ' ' << f.coeff(i, j) << '\n';
        return 0;
    }
    if (kind == "Gr") {
        const BiSeries g = g_r_series(alpha, r, order);
        for (long i = -r; i <= order; ++i)
            for (long j = -r; j <= order; ++j)
                std::cout << i << ' ' << j << ' ' << g.coeff(i, j) << '\n';
        return 0;
    }
    if (kind == "pde") {
        const bool ok = pde_check(alpha, order);
        std::cout << (ok ? "pass" : "fail") << '\n';
        return ok ? 0 : 1;
    }
    if (kind == "routine") {
        const bool ok = routine_identity_check(alpha, r);
        std::cout << (ok ? "pass" : "fail") << '\n';
        return ok ? 0 : 1;
    }
    throw domain_error("unknown series kind \"" + kind +
                       "\" (expected revert | F | Gr | pde | routine)");
}

int cmd_list() {
    for (const IdentityDescriptor& ident : registry()) {
        std::cout << ident.id << "  (";
        for (std::size_t i = 0; i < ident.params.size(); ++i)
            std::cout << (i ? ", " : "") << param_name(ident.params[i]);
        std::cout << ")  " << ident.note << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of a family of binomial double-sum identities"};
    app.require_subcommand(1);

    std::vector<std::string> ids, ms, ns, rs, ps, qs, alphas, xs;
    bool json = false;
    bool use_default = false;
    int jobs = 1;
    long order = 16;
    std::string series_kind;

    auto add_param_opts = [&](CLI::App* cmd) {
        cmd->add_option("--m", ms, "values for m (int or lo..hi)");
        cmd->add_option("--n", ns, "values for n (int or lo..hi)");
        cmd->add_option("--r", rs, "values for r (int or lo..hi)");
        cmd->add_option("--p", ps, "values for p (int or lo..hi)");
        cmd->add_option("--q", qs, "values for q (int or lo..hi)");
        cmd->add_option("--alpha", alphas, "values for alpha (rationals \"p/q\")");
        cmd->add_option("--x", xs, "values for x (rationals \"p/q\")");
        cmd->add_flag("--json", json, "emit JSON records instead of text");
    };

    CLI::App* verify = app.add_subcommand("verify", "evaluate one identity at one point");
    std::string verify_id;
    verify->add_option("id", verify_id, "identity id (see `list`)")->required();
    add_param_opts(verify);

    CLI::App* sweep = app.add_subcommand("sweep", "evaluate identities over a parameter grid");
    sweep->add_option("--id", ids, "identity ids to sweep");
    add_param_opts(sweep);
    sweep->add_flag("--default", use_default, "run the built-in full verification plan");
    sweep->add_option("--jobs", jobs, "worker threads (output is identical for any value)");

    CLI::App* series = app.add_subcommand("series", "series expansions and series-side checks");
    series->add_option("kind", series_kind, "revert | F | Gr | pde | routine")->required();
    series->add_option("--alpha", alphas, "alpha (rational \"p/q\")");
    series->add_option("--r", rs, "Laurent depth r");
    series->add_option("--N,--order", order, "truncation order");

    CLI::App* list = app.add_subcommand("list", "print the identity catalog");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed())
            return cmd_verify(verify_id, ms, ns, rs, ps, qs, alphas, xs, json);
        if (sweep->parsed()) {
            if (use_default) {
                const SweepSummary sum = run_plan(default_sweep_plan(), jobs, json, std::cout);
                return sum.clean() ? 0 : 1;
            }
            if (ids.empty())
                throw domain_error("sweep needs --id (or --default)");
            SweepConfig cfg;
            cfg.ids = ids;
            cfg.m_values = parse_longs(ms);
            cfg.n_values = parse_longs(ns);
            cfg.r_values = parse_longs(rs);
            cfg.p_values = parse_longs(ps);
            cfg.q_values = parse_longs(qs);
            cfg.alpha_values = parse_rats(alphas);
            cfg.x_values = parse_rats(xs);
            cfg.jobs = jobs;
            cfg.json = json;
            for (const std::string& id : cfg.ids) {
                const IdentityDescriptor& ident = find_identity(id);
                if (cfg.m_values.empty() || cfg.n_values.empty())
                    throw domain_error("sweep needs --m and --n values");
                if (ident.uses(Param::r) && cfg.r_values.empty())
                    throw domain_error(id + " needs --r values");
                if (ident.uses(Param::p) && cfg.p_values.empty())
                    throw domain_error(id + " needs --p values");
                if (ident.uses(Param::q) && cfg.q_values.empty())
                    throw domain_error(id + " needs --q values");
                if (ident.uses(Param::alpha) && cfg.alpha_values.empty())
                    throw domain_error(id + " needs --alpha values");
                if (ident.uses(Param::x) && cfg.x_values.empty())
                    throw domain_error(id + " needs --x values");
            }
            const SweepSummary sum = run_sweep(cfg, std::cout);
            return sum.clean() ? 0 : 1;
        }
        if (series->parsed()) {
            if (alphas.size() > 1 || rs.size() > 1)
                throw domain_error("series takes at most one --alpha and one --r");
            const Rat alpha = alphas.empty() ? Rat(1) : Rat::parse(alphas[0]);
            const long r = rs.empty() ? 0 : Rat::parse(rs[0]).to_long();
            return cmd_series(series_kind, alpha, r, order);
        }
        if (list->parsed())
            return cmd_list();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
