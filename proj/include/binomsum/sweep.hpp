#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "registry.hpp"

namespace binomsum {

/**
 * One sweep: a set of identity ids and one value list per parameter axis.
 * An identity's grid is the Cartesian product of the axes it uses; cells
 * outside its domain are emitted as skip records, never dropped.
 */
struct SweepConfig {
    std::vector<std::string> ids;
    std::vector<long> m_values;
    std::vector<long> n_values;
    std::vector<long> r_values;
    std::vector<long> p_values;
    std::vector<long> q_values;
    std::vector<Rat> alpha_values;
    std::vector<Rat> x_values;
    long series_order = 16;
    int jobs = 1;
    bool json = false;
    // Sweep records suppress per-cell timing (micros = 0) so output is
    // byte-identical across runs and thread counts; `verify` reports real
    // timings.
    bool real_micros = false;
};

enum class CellStatus { pass, fail, skip, error };

struct SweepRecord {
    const IdentityDescriptor* ident = nullptr;
    ParamSet params;
    CellStatus status = CellStatus::skip;
    Rat lhs;
    Rat rhs;
    std::int64_t micros = 0;
    std::string reason;
};

struct SweepSummary {
    long pass = 0;
    long fail = 0;
    long skip = 0;
    long error = 0;

    bool clean() const { return fail == 0 && error == 0; }
};

namespace detail {

template <class T>
std::vector<T> sorted_unique(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Cells for one identity, enumerated in (m, n, r, p, q, alpha, x) order so
// the overall record sequence is already deterministically sorted.
inline void append_cells(const IdentityDescriptor& ident, const SweepConfig& cfg,
                         std::vector<SweepRecord>& out) {
    const std::vector<long> one_long{0};
    const std::vector<Rat> one_rat{Rat(0)};
    const auto& ms = cfg.m_values;
    const auto& ns = cfg.n_values;
    const auto& rs = ident.uses(Param::r) ? cfg.r_values : one_long;
    const auto& ps = ident.uses(Param::p) ? cfg.p_values : one_long;
    const auto& qs = ident.uses(Param::q) ? cfg.q_values : one_long;
    const auto& as = ident.uses(Param::alpha) ? cfg.alpha_values : one_rat;
    const auto& xs = ident.uses(Param::x) ? cfg.x_values : one_rat;
    for (long m : ms)
        for (long n : ns)
            for (long r : rs)
                for (long p : ps)
                    for (long q : qs)
                        for (const Rat& alpha : as)
                            for (const Rat& x : xs) {
                                SweepRecord rec;
                                rec.ident = &ident;
                                rec.params.m = m;
                                rec.params.n = n;
                                if (ident.uses(Param::r)) rec.params.r = r;
                                if (ident.uses(Param::p)) rec.params.p = p;
                                if (ident.uses(Param::q)) rec.params.q = q;
                                if (ident.uses(Param::alpha)) rec.params.alpha = alpha;
                                if (ident.uses(Param::x)) rec.params.x = x;
                                out.push_back(std::move(rec));
                            }
}

inline void eval_cell(SweepRecord& rec) {
    const IdentityDescriptor& ident = *rec.ident;
    if (auto reason = ident.domain(rec.params)) {
        rec.status = CellStatus::skip;
        rec.reason = *reason;
        return;
    }
    try {
        const auto t0 = std::chrono::steady_clock::now();
        rec.lhs = ident.lhs(rec.params);
        rec.rhs = ident.rhs(rec.params);
        const auto t1 = std::chrono::steady_clock::now();
        rec.micros = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
        rec.status = rec.lhs == rec.rhs ? CellStatus::pass : CellStatus::fail;
    } catch (const std::exception& e) {
        rec.status = CellStatus::error;
        rec.reason = e.what();
    }
}

inline std::string param_text(const IdentityDescriptor& ident, const ParamSet& ps) {
    std::string out;
    for (Param p : ident.params) {
        out += ' ';
        out += param_name(p);
        out += '=';
        switch (p) {
            case Param::m: out += std::to_string(ps.m); break;
            case Param::n: out += std::to_string(ps.n); break;
            case Param::r: out += std::to_string(ps.r.value()); break;
            case Param::p: out += std::to_string(ps.p.value()); break;
            case Param::q: out += std::to_string(ps.q.value()); break;
            case Param::alpha: out += ps.alpha.value().str(); break;
            case Param::x: out += ps.x.value().str(); break;
        }
    }
    return out;
}

} // namespace detail

/// Expand the grid. Ids and axis values are sorted first, so the cell
/// sequence (and therefore all output) is independent of input order.
inline std::vector<SweepRecord> expand_grid(const SweepConfig& cfg) {
    SweepConfig sorted = cfg;
    sorted.m_values = detail::sorted_unique(cfg.m_values);
    sorted.n_values = detail::sorted_unique(cfg.n_values);
    sorted.r_values = detail::sorted_unique(cfg.r_values);
    sorted.p_values = detail::sorted_unique(cfg.p_values);
    sorted.q_values = detail::sorted_unique(cfg.q_values);
    sorted.alpha_values = detail::sorted_unique(cfg.alpha_values);
    sorted.x_values = detail::sorted_unique(cfg.x_values);
    std::vector<SweepRecord> cells;
    for (const std::string& id : detail::sorted_unique(cfg.ids))
        detail::append_cells(find_identity(id), sorted, cells);
    return cells;
}

/**
 * Evaluate every cell, possibly in parallel. Each worker claims cells by
 * atomic index and writes into its preassigned slot, so the record order
 * is fixed by the (sorted) enumeration alone and the output bytes do not
 * depend on the number of jobs.
 */
inline SweepSummary run_cells(std::vector<SweepRecord>& cells, int jobs) {
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        for (SweepRecord& rec : cells)
            detail::eval_cell(rec);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&]() {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= cells.size())
                        return;
                    detail::eval_cell(cells[i]);
                }
            });
        for (std::thread& th : pool)
            th.join();
    }
    SweepSummary sum;
    for (const SweepRecord& rec : cells)
        switch (rec.status) {
            case CellStatus::pass: ++sum.pass; break;
            case CellStatus::fail: ++sum.fail; break;
            case CellStatus::skip: ++sum.skip; break;
            case CellStatus::error: ++sum.error; break;
        }
    return sum;
}

inline void render_record(const SweepRecord& rec, bool json, bool real_micros,
                          std::ostream& os) {
    if (json) {
        nlohmann::json j;
        j["identity"] = rec.ident->id;
        j["params"] = params_to_json(*rec.ident, rec.params);
        switch (rec.status) {
            case CellStatus::pass:
            case CellStatus::fail:
                j["lhs"] = rec.lhs.str();
                j["rhs"] = rec.rhs.str();
                j["equal"] = rec.status == CellStatus::pass;
                j["micros"] = real_micros ? rec.micros : 0;
                break;
            case CellStatus::skip:
                j["skip"] = true;
                j["reason"] = rec.reason;
                break;
            case CellStatus::error:
                j["error"] = rec.reason;
                break;
        }
        os << j.dump() << '\n';
        return;
    }
    os << rec.ident->id << detail::param_text(*rec.ident, rec.params);
    switch (rec.status) {
        case CellStatus::pass:
            os << "  lhs=" << rec.lhs << " rhs=" << rec.rhs << "  PASS";
            break;
        case CellStatus::fail:
            os << "  lhs=" << rec.lhs << " rhs=" << rec.rhs << "  FAIL";
            break;
        case CellStatus::skip:
            os << "  SKIP (" << rec.reason << ")";
            break;
        case CellStatus::error:
            os << "  ERROR (" << rec.reason << ")";
            break;
    }
    os << '\n';
}

inline void render_summary(const SweepSummary& sum, bool json, std::ostream& os) {
    if (json) {
        nlohmann::json s;
        s["pass"] = sum.pass;
        s["fail"] = sum.fail;
        s["skip"] = sum.skip;
        s["error"] = sum.error;
        os << s.dump() << '\n';
    } else {
        os << "pass=" << sum.pass << " fail=" << sum.fail << " skip=" << sum.skip
           << " error=" << sum.error << '\n';
    }
}

inline SweepSummary run_sweep(const SweepConfig& cfg, std::ostream& os) {
    std::vector<SweepRecord> cells = expand_grid(cfg);
    const SweepSummary sum = run_cells(cells, cfg.jobs);
    for (const SweepRecord& rec : cells)
        render_record(rec, cfg.json, cfg.real_micros, os);
    render_summary(sum, cfg.json, os);
    return sum;
}

namespace detail {

inline std::vector<long> range_values(long lo, long hi) {
    std::vector<long> v;
    for (long i = lo; i <= hi; ++i)
        v.push_back(i);
    return v;
}

} // namespace detail

inline std::vector<Rat> default_alpha_values() {
    return {Rat(1), Rat(2), Rat(3), Rat(1, 2), Rat(2, 3), Rat(5, 3), Rat(7, 2)};
}

/**
 * The default plan: the identity-registry sweeps of the acceptance grids,
 * one config per grid shape. The series and hypergeometric checks have
 * their own commands and their own acceptance runner.
 */
inline std::vector<SweepConfig> default_sweep_plan() {
    using detail::range_values;
    std::vector<SweepConfig> plan;

    SweepConfig thm1;
    thm1.ids = {"thm1"};
    thm1.m_values = range_values(0, 30);
    thm1.n_values = range_values(0, 30);
    thm1.alpha_values = default_alpha_values();
    plan.push_back(thm1);

    SweepConfig s3;
    s3.ids = {"S3"};
    s3.m_values = range_values(1, 40);
    s3.n_values = range_values(1, 40);
    plan.push_back(s3);

    SweepConfig s4;
    s4.ids = {"S4"};
    s4.m_values = range_values(2, 40);
    s4.n_values = range_values(2, 40);
    plan.push_back(s4);

    SweepConfig thm2;
    thm2.ids = {"thm2"};
    thm2.m_values = range_values(0, 20);
    thm2.n_values = range_values(0, 20);
    thm2.r_values = range_values(0, 5);
    thm2.alpha_values = default_alpha_values();
    plan.push_back(thm2);

    SweepConfig pq;
    pq.ids = {"cor1", "cor1x", "cv_full", "cv_tail"};
    pq.p_values = range_values(1, 4);
    pq.q_values = range_values(1, 4);
    pq.m_values = range_values(1, 10);
    pq.n_values = range_values(1, 10);
    plan.push_back(pq);

    SweepConfig cor2;
    cor2.ids = {"cor2"};
    cor2.m_values = range_values(1, 10);
    cor2.n_values = range_values(1, 10);
    cor2.x_values = {Rat(1), Rat(2), Rat(5, 2), Rat(7)};
    plan.push_back(cor2);

    SweepConfig cor3;
    cor3.ids = {"cor3"};
    cor3.m_values = range_values(1, 15);
    cor3.n_values = range_values(1, 15);
    plan.push_back(cor3);

    SweepConfig pqr;
    pqr.ids = {"cor4", "cor5", "pm_r1", "pm_r2", "pm_r3"};
    pqr.p_values = range_values(1, 4);
    pqr.q_values = range_values(1, 4);
    pqr.m_values = range_values(1, 10);
    pqr.n_values = range_values(1, 10);
    pqr.r_values = range_values(1, 4);
    plan.push_back(pqr);

    SweepConfig mr;
    mr.ids = {"cor6", "cor7"};
    mr.m_values = range_values(1, 10);
    mr.n_values = range_values(1, 10);
    mr.r_values = range_values(1, 4);
    plan.push_back(mr);

    SweepConfig disp;
    disp.ids = {"cor6_r1", "cor6_r2", "cor7_r1"};
    disp.m_values = range_values(1, 10);
    disp.n_values = range_values(1, 10);
    plan.push_back(disp);

    SweepConfig thm3;
    thm3.ids = {"thm3"};
    thm3.m_values = range_values(1, 10);
    thm3.n_values = range_values(1, 10);
    thm3.x_values = {Rat(1), Rat(2), Rat(5, 2), Rat(7)};
    plan.push_back(thm3);

    SweepConfig doub;
    doub.ids = {"doub_xab"};
    doub.m_values = range_values(1, 10);
    doub.n_values = range_values(1, 10);
    doub.x_values = {Rat(0), Rat(1), Rat(5, 2)};
    plan.push_back(doub);

    return plan;
}

/// Run a multi-config plan with shared jobs/format settings; per-record
/// output for every config, one aggregated summary line at the end.
inline SweepSummary run_plan(std::vector<SweepConfig> plan, int jobs, bool json,
                             std::ostream& os) {
    SweepSummary total;
    for (SweepConfig& cfg : plan) {
        cfg.jobs = jobs;
        cfg.json = json;
        std::vector<SweepRecord> cells = expand_grid(cfg);
        const SweepSummary sum = run_cells(cells, cfg.jobs);
        for (const SweepRecord& rec : cells)
            render_record(rec, json, /*real_micros=*/false, os);
        total.pass += sum.pass;
        total.fail += sum.fail;
        total.skip += sum.skip;
        total.error += sum.error;
    }
    render_summary(total, json, os);
    return total;
}

} // namespace binomsum
