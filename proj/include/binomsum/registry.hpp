#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "identities.hpp"
#include "rat.hpp"

namespace binomsum {

/// Parameter tuple for one identity evaluation. m and n are always
/// present; the rest only where the identity uses them.
struct ParamSet {
    long m = 0;
    long n = 0;
    std::optional<long> r;
    std::optional<long> p;
    std::optional<long> q;
    std::optional<Rat> alpha;
    std::optional<Rat> x;

    friend bool operator==(const ParamSet&, const ParamSet&) = default;
};

// Deterministic ordering used for sweep output: (m, n, r, p, q, alpha, x),
// absent fields first.
inline bool param_less(const ParamSet& a, const ParamSet& b) {
    if (a.m != b.m) return a.m < b.m;
    if (a.n != b.n) return a.n < b.n;
    if (a.r != b.r) return a.r < b.r;
    if (a.p != b.p) return a.p < b.p;
    if (a.q != b.q) return a.q < b.q;
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return a.x < b.x;
}

enum class Param { m, n, r, p, q, alpha, x };

inline const char* param_name(Param p) {
    switch (p) {
        case Param::m: return "m";
        case Param::n: return "n";
        case Param::r: return "r";
        case Param::p: return "p";
        case Param::q: return "q";
        case Param::alpha: return "alpha";
        case Param::x: return "x";
    }
    return "?";
}

/**
 * One registry entry: a stable id, the parameters the identity consumes,
 * exact evaluators for both sides, the domain predicate, and a one-line
 * description for the catalog listing.
 *
 * domain() returns nullopt when the parameters are admissible, otherwise
 * the reason they are not.
 */
struct IdentityDescriptor {
    std::string id;
    std::vector<Param> params;
    std::function<Rat(const ParamSet&)> lhs;
    std::function<Rat(const ParamSet&)> rhs;
    std::function<std::optional<std::string>(const ParamSet&)> domain;
    std::string note;

    bool uses(Param p) const {
        for (Param q : params)
            if (q == p)
                return true;
        return false;
    }
};

/// Verdict for one (identity, parameters) evaluation, with exact values.
struct VerificationReport {
    std::string identity;
    ParamSet params;
    Rat lhs;
    Rat rhs;
    bool equal = false;
    std::int64_t micros = 0;
};

inline nlohmann::json params_to_json(const IdentityDescriptor& ident, const ParamSet& ps) {
    nlohmann::json j = nlohmann::json::object();
    for (Param p : ident.params) {
        switch (p) {
            case Param::m: j["m"] = std::to_string(ps.m); break;
            case Param::n: j["n"] = std::to_string(ps.n); break;
            case Param::r: j["r"] = std::to_string(ps.r.value()); break;
            case Param::p: j["p"] = std::to_string(ps.p.value()); break;
            case Param::q: j["q"] = std::to_string(ps.q.value()); break;
            case Param::alpha: j["alpha"] = ps.alpha.value().str(); break;
            case Param::x: j["x"] = ps.x.value().str(); break;
        }
    }
    return j;
}

inline nlohmann::json report_to_json(const IdentityDescriptor& ident,
                                     const VerificationReport& rep) {
    nlohmann::json j;
    j["identity"] = rep.identity;
    j["params"] = params_to_json(ident, rep.params);
    j["lhs"] = rep.lhs.str();
    j["rhs"] = rep.rhs.str();
    j["equal"] = rep.equal;
    j["micros"] = rep.micros;
    return j;
}

namespace detail {

inline std::optional<std::string> need(bool ok, const char* reason) {
    if (ok)
        return std::nullopt;
    return std::string(reason);
}

inline std::optional<std::string> alpha_ok(const ParamSet& ps) {
    const Rat& a = ps.alpha.value();
    if (a.is_zero())
        return std::string("alpha = 0 outside domain");
    if (a == Rat(-1))
        return std::string("alpha = -1 outside domain");
    return std::nullopt;
}

inline std::vector<IdentityDescriptor> make_registry() {
    using PS = const ParamSet&;
    std::vector<IdentityDescriptor> reg;

    reg.push_back({"thm1",
                   {Param::m, Param::n, Param::alpha},
                   [](PS ps) { return lhs_theorem1(ps.m, ps.n, *ps.alpha); },
                   [](PS ps) { return rhs_theorem1(ps.m, ps.n, *ps.alpha); },
                   [](PS ps) -> std::optional<std::string> {
                       if (ps.m < 0 || ps.n < 0)
                           return std::string("m, n must be >= 0");
                       if (auto bad = alpha_ok(ps))
                           return bad;
                       if (ps.m == 0 && ps.n == 0)
                           return std::string("degenerate at m = n = 0");
                       if ((Rat(ps.m) + ps.alpha->inv() * ps.n).is_zero())
                           return std::string("m + n/alpha vanishes");
                       return std::nullopt;
                   },
                   "double sum over (a,b) of shifted binomials vs closed form, parameter alpha"});

    reg.push_back({"S3",
                   {Param::m, Param::n},
                   [](PS ps) { return lhs_s3(ps.m, ps.n); },
                   [](PS ps) { return rhs_s3(ps.m, ps.n); },
                   [](PS ps) {
                       return need(ps.m >= 0 && ps.n >= 0 && ps.m + ps.n >= 1,
                                   "needs m, n >= 0 and not both zero");
                   },
                   "symmetric seed identity: mn/(2(m+n)) C(m+n,m)^2 closed form"});

    reg.push_back({"S4",
                   {Param::m, Param::n},
                   [](PS ps) { return lhs_s4(ps.m, ps.n); },
                   [](PS ps) { return rhs_s4(ps.m, ps.n); },
                   [](PS ps) { return need(ps.m >= 2 && ps.n >= 2, "needs m, n >= 2"); },
                   "second seed identity, four-term closed form"});

    reg.push_back({"thm2",
                   {Param::m, Param::n, Param::r, Param::alpha},
                   [](PS ps) { return lhs_theorem2(ps.m, ps.n, *ps.r, *ps.alpha); },
                   [](PS ps) { return rhs_theorem2(ps.m, ps.n, *ps.r, *ps.alpha); },
                   [](PS ps) -> std::optional<std::string> {
                       if (ps.m < 0 || ps.n < 0 || *ps.r < 0)
                           return std::string("m, n, r must be >= 0");
                       if (auto bad = alpha_ok(ps))
                           return bad;
                       if (ps.m != 0 && ps.n != 0 &&
                           (Rat(ps.m) + ps.alpha->inv() * ps.n).is_zero())
                           return std::string("m + n/alpha vanishes");
                       return std::nullopt;
                   },
                   "two double sums vs closed form plus weighted diagonal k-sum"});

    auto pos4 = [](PS ps) {
        return need(*ps.p >= 1 && *ps.q >= 1 && ps.m >= 1 && ps.n >= 1,
                    "needs p, q, m, n >= 1");
    };

    reg.push_back({"cor1",
                   {Param::p, Param::q, Param::m, Param::n},
                   [](PS ps) { return lhs_cor1(*ps.p, *ps.q, ps.m, ps.n); },
                   [](PS ps) { return rhs_cor1(*ps.p, *ps.q, ps.m, ps.n); },
                   pos4,
                   "integer substitution alpha = q/p, m -> pm, n -> qn"});

    reg.push_back({"cor1x",
                   {Param::p, Param::q, Param::m, Param::n},
                   [](PS ps) { return lhs_cor1_exchanged(*ps.p, *ps.q, ps.m, ps.n); },
                   [](PS ps) { return rhs_cor1_exchanged(*ps.p, *ps.q, ps.m, ps.n); },
                   pos4,
                   "cor1 with (p,m) and (q,n) exchanged"});

    reg.push_back({"cv_full",
                   {Param::p, Param::q, Param::m, Param::n},
                   [](PS ps) { return lhs_cv_full(*ps.p, *ps.q, ps.m, ps.n); },
                   [](PS ps) { return rhs_cv_full(*ps.p, *ps.q, ps.m, ps.n); },
                   pos4,
                   "a-range extended to [1-pn, pm]; closes by Chu-Vandermonde"});

    reg.push_back({"cv_tail",
                   {Param::p, Param::q, Param::m, Param::n},
                   [](PS ps) { return lhs_cv_tail(*ps.p, *ps.q, ps.m, ps.n); },
                   [](PS ps) { return rhs_cv_tail(*ps.p, *ps.q, ps.m, ps.n); },
                   pos4,
                   "the [1-pn, 0] band of cv_full, reindexed by a -> 1-a"});

    reg.push_back({"cor2",
                   {Param::m, Param::n, Param::x},
                   [](PS ps) { return lhs_cor2(ps.m, ps.n, *ps.x); },
                   [](PS ps) { return rhs_cor2(ps.m, ps.n, *ps.x); },
                   [](PS ps) -> std::optional<std::string> {
                       if (ps.m < 1 || ps.n < 1)
                           return std::string("needs m, n >= 1");
                       const Rat& x = ps.x.value();
                       if (x == Rat(-1))
                           return std::string("x = -1 outside domain");
                       if (pochhammer(Rat(ps.m) * x + 1, ps.m).is_zero() ||
                           pochhammer(Rat(ps.n) * x + 1, ps.n).is_zero())
                           return std::string("Pochhammer denominator vanishes");
                       return std::nullopt;
                   },
                   "free-parameter form via p,q,m,n -> m,n,x,1 and division by C(pm+qm, pm)"});

    reg.push_back({"cor3",
                   {Param::m, Param::n},
                   [](PS ps) { return lhs_cor3(ps.m, ps.n); },
                   [](PS ps) { return rhs_cor3(ps.m, ps.n); },
                   [](PS ps) { return need(ps.m >= 1 && ps.n >= 1, "needs m, n >= 1"); },
                   "x -> infinity limit of cor2, power-weighted sum"});

    auto pos5 = [](PS ps) {
        return need(*ps.p >= 1 && *ps.q >= 1 && ps.m >= 1 && ps.n >= 1 && *ps.r >= 0,
                    "needs p, q, m, n >= 1 and r >= 0");
    };

    reg.push_back({"cor4",
                   {Param::p, Param::q, Param::m, Param::n, Param::r},
                   [](PS ps) { return lhs_cor4(*ps.p, *ps.q, ps.m, ps.n, *ps.r); },
                   [](PS ps) { return rhs_cor4(*ps.p, *ps.q, ps.m, ps.n, *ps.r); },
                   [](PS ps) {
                       return need(*ps.p >= 1 && *ps.q >= 1 && ps.m >= 0 && ps.n >= 0 && *ps.r >= 0,
                                   "needs p, q >= 1 and m, n, r >= 0");
                   },
                   "Theorem 2 under alpha = q/p, m -> pm, n -> qn"});

    reg.push_back({"pm_r1",
                   {Param::p, Param::q, Param::m, Param::n, Param::r},
                   [](PS ps) { return lhs_pm_r1(*ps.p, *ps.q, ps.m, ps.n, *ps.r); },
                   [](PS ps) { return rhs_pm_r1(*ps.p, *ps.q, ps.m, ps.n, *ps.r); },
                   pos5,
                   "cor4 with the second sum reflected to nonpositive indices"});

    reg.push_back({"pm_r2",
                   {Param::p, Param::q, Param::m, Param::n, Param::r},
                   [](PS ps) { return lhs_pm_r2(*ps.p, *ps.q, ps.m, ps.n, *ps.r); },
                   [](PS ps) { return rhs_pm_r2(*ps.p, *ps.q, ps.m, ps.n, *ps.r); },
                   [pos5](PS ps) -> std::optional<std::string> {
                       if (auto bad = pos5(ps))
                           return bad;
                       if (*ps.r > *ps.p * ps.n - 1 || *ps.r > *ps.q * ps.m - 1)
                           return std::string("needs r <= pn-1 and r <= qm-1");
                       return std::nullopt;
                   },
                   "first Chu-Vandermonde range split of pm_r1"});

    reg.push_back({"pm_r3",
                   {Param::p, Param::q, Param::m, Param::n, Param::r},
                   [](PS ps) { return lhs_pm_r3(*ps.p, *ps.q, ps.m, ps.n, *ps.r); },
                   [](PS ps) { return rhs_pm_r3(*ps.p, *ps.q, ps.m, ps.n, *ps.r); },
                   [pos5](PS ps) -> std::optional<std::string> {
                       if (auto bad = pos5(ps))
                           return bad;
                       if (*ps.r > *ps.q * ps.m - 1)
                           return std::string("needs r <= qm-1");
                       return std::nullopt;
                   },
                   "second Chu-Vandermonde range split of pm_r1"});

    reg.push_back({"cor5",
                   {Param::p, Param::q, Param::m, Param::n, Param::r},
                   [](PS ps) { return lhs_cor5(*ps.p, *ps.q, ps.m, ps.n, *ps.r); },
                   [](PS ps) { return rhs_cor5(*ps.p, *ps.q, ps.m, ps.n, *ps.r); },
                   [](PS ps) {
                       return need(*ps.p >= 1 && *ps.q >= 1 && ps.m >= 1 && ps.n >= 1 && *ps.r >= 1,
                                   "needs p, q, m, n, r >= 1");
                   },
                   "combined range-split identity, r shifted by one"});

    auto pos3r = [](PS ps) {
        return need(ps.m >= 1 && ps.n >= 1 && *ps.r >= 1, "needs m, n, r >= 1");
    };

    reg.push_back({"cor6",
                   {Param::m, Param::n, Param::r},
                   [](PS ps) { return lhs_cor6(ps.m, ps.n, *ps.r); },
                   [](PS ps) { return rhs_cor6(ps.m, ps.n, *ps.r); },
                   pos3r,
                   "cor5 at p = q = 1 (tops 2m and 2n)"});

    reg.push_back({"cor7",
                   {Param::m, Param::n, Param::r},
                   [](PS ps) { return lhs_cor7(ps.m, ps.n, *ps.r); },
                   [](PS ps) { return rhs_cor7(ps.m, ps.n, *ps.r); },
                   pos3r,
                   "cor5 at m = n = 1 (tops m+n, squared closed form)"});

    auto pos2 = [](PS ps) { return need(ps.m >= 1 && ps.n >= 1, "needs m, n >= 1"); };

    reg.push_back({"cor6_r1",
                   {Param::m, Param::n},
                   [](PS ps) { return lhs_cor6(ps.m, ps.n, 1); },
                   [](PS ps) { return rhs_cor6_r1(ps.m, ps.n); },
                   pos2,
                   "displayed r = 1 specialization of cor6"});

    reg.push_back({"cor6_r2",
                   {Param::m, Param::n},
                   [](PS ps) { return lhs_cor6(ps.m, ps.n, 2); },
                   [](PS ps) { return rhs_cor6_r2(ps.m, ps.n); },
                   pos2,
                   "displayed r = 2 specialization of cor6"});

    reg.push_back({"cor7_r1",
                   {Param::m, Param::n},
                   [](PS ps) { return lhs_cor7(ps.m, ps.n, 1); },
                   [](PS ps) { return rhs_cor7_r1(ps.m, ps.n); },
                   pos2,
                   "displayed r = 1 specialization of cor7 (r = 2 is the S4 identity)"});

    reg.push_back({"thm3",
                   {Param::m, Param::n, Param::x},
                   [](PS ps) { return lhs_theorem3(ps.m, ps.n, *ps.x); },
                   [](PS ps) { return rhs_theorem3(ps.m, ps.n, *ps.x); },
                   [](PS ps) -> std::optional<std::string> {
                       if (ps.m < 1 || ps.n < 1)
                           return std::string("needs m, n >= 1");
                       if ((Rat(2) * *ps.x + ps.m).is_zero())
                           return std::string("2x + m vanishes");
                       return std::nullopt;
                   },
                   "free-parameter identity, polynomial in x of degree < 2n"});

    reg.push_back({"doub_xab",
                   {Param::m, Param::n, Param::x},
                   [](PS ps) { return lhs_doub_xab(ps.m, ps.n, *ps.x); },
                   [](PS ps) { return rhs_doub_xab(ps.m, ps.n, *ps.x); },
                   pos2,
                   "reflected form of thm3 under x -> -x-m+n"});

    return reg;
}

} // namespace detail

/// The immutable identity catalog. Built once, safe to share across threads.
inline const std::vector<IdentityDescriptor>& registry() {
    static const std::vector<IdentityDescriptor> reg = detail::make_registry();
    return reg;
}

inline const IdentityDescriptor& find_identity(const std::string& id) {
    for (const IdentityDescriptor& d : registry())
        if (d.id == id)
            return d;
    throw unknown_identity("unknown identity \"" + id + "\"");
}

/// Evaluate one identity at one parameter set, timing the evaluation.
/// Throws unknown_identity / domain_error on bad input.
inline VerificationReport eval_identity(const std::string& id, const ParamSet& params) {
    const IdentityDescriptor& ident = find_identity(id);
    if (auto reason = ident.domain(params))
        throw domain_error(*reason);
    VerificationReport rep;
    rep.identity = id;
    rep.params = params;
    const auto t0 = std::chrono::steady_clock::now();
    rep.lhs = ident.lhs(params);
    rep.rhs = ident.rhs(params);
    const auto t1 = std::chrono::steady_clock::now();
    rep.equal = rep.lhs == rep.rhs;
    rep.micros = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
    return rep;
}

} // namespace binomsum
