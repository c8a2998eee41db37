#include "modres/runner.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "modres/acceptance.hpp"
#include "modres/arith.hpp"
#include "modres/dims_fusion.hpp"
#include "modres/fn_tqft.hpp"
#include "modres/jm_extension.hpp"
#include "modres/ks_oracle.hpp"
#include "modres/permutation.hpp"
#include "modres/resolution.hpp"

namespace modres {

namespace {

enum class PType { Int, Str, Bool };

struct ParamSpec {
    const char* name;
    PType type;
    bool required;
    Json def;
};

const std::map<std::string, std::vector<ParamSpec>>& schemas() {
    static const std::map<std::string, std::vector<ParamSpec>> s{
        {"resolve", {{"p", PType::Int, true, {}}, {"n", PType::Int, true, {}}, {"k", PType::Int, true, {}}}},
        {"character", {{"p", PType::Int, true, {}}, {"tau", PType::Str, true, {}}, {"sigma", PType::Str, false, ""}}},
        {"factors", {{"p", PType::Int, true, {}}, {"tau", PType::Str, true, {}}}},
        {"dims", {{"p", PType::Int, true, {}}, {"g", PType::Int, true, {}}}},
        {"fusion", {{"p", PType::Int, true, {}}, {"g", PType::Int, false, 1}}},
        {"alexander",
         {{"g", PType::Int, true, {}}, {"word", PType::Str, false, "1"}, {"p", PType::Int, false, 0},
          {"sign", PType::Int, false, 0}}},
        {"jm", {{"p", PType::Int, true, {}}, {"k", PType::Int, true, {}}, {"g", PType::Int, true, {}}, {"m", PType::Int, false, 3}}},
        {"selftest", {{"quick", PType::Bool, false, false}}},
    };
    return s;
}

void need(bool cond, const std::string& msg) {
    if (!cond) throw UsageError(msg);
}

void need_prime(std::int64_t p, std::int64_t hi) {
    need(p >= 3 && p <= hi && is_prime(static_cast<std::uint64_t>(p)),
         "p must be an odd prime <= " + std::to_string(hi) + " (got " + std::to_string(p) + ")");
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
    std::string t;
    for (char ch : s) t += (ch == '[' || ch == ']' || ch == '(' || ch == ')') ? ' ' : (ch == ',' ? ' ' : ch);
    std::istringstream is(t);
    std::vector<int> out;
    std::string tok;
    while (is >> tok) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument("");
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("bad " + what + " '" + s + "'");
        }
    }
    return out;
}

Diagram2 parse_tau(const std::string& s) {
    const auto v = parse_int_list(s, "tau");
    need(v.size() == 2 || v.size() == 1, "tau must be two row lengths 'a,b' (got '" + s + "')");
    const int a = v[0], b = v.size() == 2 ? v[1] : 0;
    need(b >= 0 && a >= b, "tau must satisfy a >= b >= 0 (got '" + s + "')");
    return Diagram2(a, b);
}

Json check_json(const CheckRecord& c) { return Json{{"name", c.name}, {"status", c.status}, {"details", c.details}}; }

CheckRecord rec(const std::string& name, bool ok, const std::string& details) {
    return CheckRecord{name, ok ? "pass" : "fail", details};
}

std::string diag_str(const Diagram2& d) { return "[" + std::to_string(d.a) + "," + std::to_string(d.b) + "]"; }

void validate(const Job& job) {
    const Json& q = job.params;
    auto I = [&](const char* k) { return q.at(k).get<std::int64_t>(); };
    const std::string& c = job.command;
    if (c == "resolve") {
        need_prime(I("p"), 97);
        const auto n = I("n"), k = I("k");
        need(n >= 0 && n <= 24, "n must be in [0, 24]");
        need(k > 0 && k < I("p"), "k must satisfy 0 < k < p");
        need((n + 1 - k) % 2 == 0, "k must have the parity of n + 1");
        need(k <= n + 1, "k must be at most n + 1");
    } else if (c == "character") {
        need_prime(I("p"), 31);
        const Diagram2 t = parse_tau(q.at("tau").get<std::string>());
        need(t.n() >= 1 && t.n() <= 12, "character needs 1 <= n <= 12");
        need(t.a - t.b <= I("p") - 2, "character needs a - b <= p - 2");
        const std::string sg = q.at("sigma").get<std::string>();
        if (!sg.empty()) {
            auto ty = parse_int_list(sg, "sigma");
            int sum = 0;
            for (int x : ty) {
                need(x >= 1, "sigma parts must be positive");
                sum += x;
            }
            need(sum == t.n(), "sigma must be a cycle type of n = " + std::to_string(t.n()));
        }
    } else if (c == "factors") {
        need_prime(I("p"), 31);
        const Diagram2 t = parse_tau(q.at("tau").get<std::string>());
        need(t.n() <= 14, "factors needs n <= 14");
    } else if (c == "dims") {
        need_prime(I("p"), 31);
        need(I("g") >= 0 && I("g") <= 12, "g must be in [0, 12]");
    } else if (c == "fusion") {
        need_prime(I("p"), 31);
        need(I("g") >= 0 && I("g") <= 12, "g must be in [0, 12]");
    } else if (c == "alexander") {
        const auto g = I("g");
        need(g >= 1 && g <= 4, "g must be in [1, 4]");
        const auto p = I("p");
        if (p != 0) need_prime(p, 13);
        need(I("sign") >= -1 && I("sign") <= 1, "sign must be -1, 0 (both) or 1");
        try {
            for (const auto& t : parse_word(q.at("word").get<std::string>(), static_cast<int>(g)))
                need(t.is_group(), "word must consist of group tokens (S, P, A, B, C)");
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    } else if (c == "jm") {
        need_prime(I("p"), 13);
        const auto k = I("k"), g = I("g"), m = I("m");
        need(g >= 1 && g <= 4, "g must be in [1, 4]");
        need(m >= 1 && m <= 3, "m must be in [1, 3]");
        need(k > 0 && k < I("p") - m, "k must satisfy 0 < k < p - m");
        need(k <= g + 1, "k must be at most g + 1");
    }
}

// ---------------------------------------------------------------- commands

Report run_resolve(const Json& q) {
    Report r;
    const auto p = q.at("p").get<std::uint32_t>();
    const int n = q.at("n").get<int>(), k = q.at("k").get<int>();
    const auto cx = build_complex(p, n, k);
    const auto er = verify_exactness(cx);
    Json nodes = Json::array(), ranks = Json::array();
    std::ostringstream bad;
    for (const auto& nd : er.nodes) {
        nodes.push_back(Json{{"weight", nd.weight}, {"dim", nd.dim}, {"dim_ker", nd.dim_ker}, {"dim_im", nd.dim_im},
                             {"homology", nd.homology}});
        if (nd.homology != 0) bad << " S^" << nd.weight << " (dim ker " << nd.dim_ker << ", dim im " << nd.dim_im << ")";
    }
    for (std::size_t t = 1; t < er.nodes.size(); ++t) ranks.push_back(er.nodes[t].dim_im);
    const std::int64_t formula = d_dim(static_cast<int>(p), n, k);
    r.results = Json{{"terms", cx.spec.weights},
                     {"dims", cx.dims},
                     {"ranks", ranks},
                     {"truncation_l", cx.spec.truncation_l},
                     {"nodes", nodes},
                     {"exact", er.exact},
                     {"composites_zero", er.composites_zero},
                     {"image_in_radical", er.image_in_radical},
                     {"dimD", er.dim_quotient_from_complex},
                     {"dimD_gram", er.dim_quotient_from_gram},
                     {"dimD_formula", formula}};
    const std::string spec = "complex p=" + std::to_string(p) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
    r.checks.push_back(rec("resolve.exactness", er.exact,
                           er.exact ? spec + " exact" : spec + " fails at" + bad.str() +
                                                            (er.composites_zero ? "" : "; composites nonzero") +
                                                            (er.image_in_radical ? "" : "; last image leaves the radical")));
    const bool agree = static_cast<std::int64_t>(er.dim_quotient_from_complex) == formula &&
                       er.dim_quotient_from_complex == er.dim_quotient_from_gram;
    r.checks.push_back(rec("resolve.dimension_agreement", agree,
                           "complex " + std::to_string(er.dim_quotient_from_complex) + ", formula " +
                               std::to_string(formula) + ", gram " + std::to_string(er.dim_quotient_from_gram)));
    return r;
}

Report run_character(const Json& q) {
    Report r;
    const auto p = q.at("p").get<std::uint32_t>();
    const Diagram2 tau = parse_tau(q.at("tau").get<std::string>());
    const std::string sg = q.at("sigma").get<std::string>();
    std::vector<std::vector<int>> types;
    if (sg.empty()) {
        types = partitions(tau.n());
    } else {
        auto t = parse_int_list(sg, "sigma");
        std::sort(t.rbegin(), t.rend());
        types.push_back(t);
    }
    Json classes = Json::array();
    std::size_t bad = 0;
    for (const auto& t : types) {
        const auto cc = modular_character_check(p, tau, Permutation::from_cycle_type(t));
        classes.push_back(Json{{"cycle_type", t}, {"trace", cc.lhs}, {"alternating_sum", cc.rhs}, {"characters", cc.chis}});
        if (!cc.pass()) ++bad;
    }
    r.results = Json{{"tau", {tau.a, tau.b}}, {"dimD", simple_quotient(p, tau).dim()}, {"classes", classes}};
    r.checks.push_back(rec("character.identity", bad == 0,
                           std::to_string(types.size() - bad) + "/" + std::to_string(types.size()) + " classes agree mod p"));
    return r;
}

Report run_factors(const Json& q) {
    Report r;
    const auto p = q.at("p").get<int>();
    const Diagram2 tau = parse_tau(q.at("tau").get<std::string>());
    const auto ctx = make_ks_context(tau, p);
    const auto adm = admissible_sets(ctx);
    Json sets = Json::array();
    std::int64_t total = 0;
    for (const auto& I : adm.admissible) {
        const Diagram2 d = nu(I, ctx);
        const int c = d.a - d.b + 1;
        const std::int64_t dim =
            c < p ? d_dim(p, d.n(), c) : static_cast<std::int64_t>(simple_quotient(static_cast<std::uint32_t>(p), d).dim());
        total += dim;
        sets.push_back(Json{{"set", I.to_string()}, {"delta", delta(I, ctx)}, {"nu", {d.a, d.b}}, {"dimD", dim}});
    }
    Json factors = Json::array();
    for (const auto& d : composition_factors(ctx)) factors.push_back(diag_str(d));
    const std::int64_t cat = catalan(tau.n(), tau.b);
    const auto gram = static_cast<std::int64_t>(simple_quotient(static_cast<std::uint32_t>(p), tau).dim());
    const std::int64_t recd = ks_recursive_dim(tau, p);
    r.results = Json{{"tau", {tau.a, tau.b}},   {"c", ctx.c},          {"digits", ctx.digits},
                     {"endpoint_bound", adm.bound}, {"admissible", sets}, {"factors", factors},
                     {"dimS", cat},            {"sum_dimD", total},   {"dimD", gram}};
    r.checks.push_back(rec("ks.partition", total == cat,
                           "dim S = " + std::to_string(cat) + ", sum over admissible sets = " + std::to_string(total)));
    r.checks.push_back(rec("ks.recursive_dim", recd == gram,
                           "recursive " + std::to_string(recd) + ", gram " + std::to_string(gram)));
    if (ctx.c % p != 0 && ctx.c > p) {
        const auto ph = phi_bijection(ctx);
        r.results["phi"] = Json{{"tau_prime", diag_str(ph.tau_prime.tau)}, {"pairs", ph.pairs.size()}};
        r.checks.push_back(rec("ks.phi_bijection", ph.pass(),
                               std::string("digit law ") + (ph.digit_law ? "ok" : "fails") + ", bijective " +
                                   (ph.bijective ? "yes" : "no") + ", delta relation " + (ph.delta_relation ? "ok" : "fails") +
                                   ", nu relation " + (ph.nu_relation ? "ok" : "fails")));
    } else {
        r.checks.push_back(CheckRecord{"ks.phi_bijection", "skip", "needs c > p and c not divisible by p"});
    }
    return r;
}

Report run_dims(const Json& q) {
    Report r;
    const int p = q.at("p").get<int>(), g = q.at("g").get<int>();
    Json dims = Json::array(), assembled = Json::array();
    bool agree = true;
    for (int k = 1; k < p; ++k) {
        const auto a = verlinde_dim(p, k, g), b = verlinde_dim_from_d(p, k, g);
        dims.push_back(a);
        assembled.push_back(b);
        agree = agree && a == b;
    }
    const FusionAlgebra fa(p);
    const auto rt_star = fa.power(fa.big_f_star(), g)[1], rt = fa.power(fa.big_f(), g)[1];
    r.results = Json{{"dims", dims}, {"assembled", assembled}, {"rt", {{"F_star", rt_star}, {"F", rt}}}};
    r.checks.push_back(rec("verlinde.assembled", agree, "fusion multiplicities vs weighted sums of d-dimensions"));
    if (p == 5) {
        const auto cf = lemma15_dims(g);
        r.results["closed_form"] = cf;
        bool ok = true;
        for (int k = 1; k <= 4; ++k) ok = ok && cf[k - 1] == dims[k - 1].get<std::int64_t>();
        r.checks.push_back(rec("verlinde.closed_forms", ok, "closed forms vs fusion multiplicities"));
    } else {
        r.checks.push_back(CheckRecord{"verlinde.closed_forms", "skip", "closed forms exist for p = 5 only"});
    }
    r.checks.push_back(rec("verlinde.rt_relation", rt_star == checked_mul(checked_pow(2, g), rt),
                           "mult(1, F*^g) = " + std::to_string(rt_star) + ", 2^g mult(1, F^g) = " +
                               std::to_string(checked_mul(checked_pow(2, g), rt))));
    return r;
}

Report run_fusion(const Json& q) {
    Report r;
    const int p = q.at("p").get<int>(), g = q.at("g").get<int>();
    const FusionAlgebra fa(p);
    Json table = Json::array();
    for (int i = 1; i < p; ++i)
        for (int j = i; j < p; ++j)
            table.push_back(Json{{"x", i}, {"y", j}, {"product", fa.multiply(fa.label(i), fa.label(j)).to_string()}});
    const auto pn = perron_norms(p);
    const IntPolynomial rp = tschebycheff_R(p);
    std::ostringstream nf;
    nf.precision(12);
    auto fmt = [&](double x) {
        std::ostringstream o;
        o.precision(12);
        o << x;
        return o.str();
    };
    r.results = Json{{"products", table},
                     {"f", fa.small_f().to_string()},
                     {"F", fa.big_f().to_string()},
                     {"F_star", fa.big_f_star().to_string()},
                     {"f_power", fa.power(fa.small_f(), g).mult},
                     {"F_power", fa.power(fa.big_f(), g).mult},
                     {"R_p", rp.to_string()},
                     {"norm_f", fmt(pn.small_closed)},
                     {"norm_F", fmt(pn.big_closed)}};
    const bool perron_ok = std::abs(pn.big_power - pn.big_closed) < 1e-9 && std::abs(pn.small_power - pn.small_closed) < 1e-9;
    r.checks.push_back(rec("rp.perron_closed_forms", perron_ok,
                           "power iteration vs closed forms, tol 1e-9"));
    if (p >= 5) {
        const double v = rp.evaluate(pn.small_closed);
        r.checks.push_back(rec("rp.norm_relation", std::abs(v - pn.big_closed) < 1e-9,
                               "R_p(|f|) = " + fmt(v) + ", |F| = " + fmt(pn.big_closed)));
    } else {
        r.checks.push_back(CheckRecord{"rp.norm_relation", "skip", "stated for p >= 5"});
    }
    r.checks.push_back(rec("fusion.big_f_star", fa.big_f_star() == fa.scale(fa.big_f(), 2), "F* = 2F"));
    const auto rt_star = fa.power(fa.big_f_star(), g)[1], rt = fa.power(fa.big_f(), g)[1];
    r.checks.push_back(rec("verlinde.rt_relation", rt_star == checked_mul(checked_pow(2, g), rt),
                           "g=" + std::to_string(g)));
    return r;
}

Report run_alexander(const Json& q) {
    Report r;
    const int g = q.at("g").get<int>();
    const SpWord w = parse_word(q.at("word").get<std::string>(), g);
    const auto ad = alexander_trace(w, g);
    r.results = Json{{"word", word_to_string(w)}, {"T", ad.T.to_string()}, {"t", ad.t}, {"recombined", ad.recombined.to_string()}};
    r.checks.push_back(rec("alexander.decomposition", ad.pass(), "T = " + ad.T.to_string()));
    const auto p = q.at("p").get<std::uint32_t>();
    if (p != 0) {
        const int s = q.at("sign").get<int>();
        Json arr = Json::array();
        for (int sign : {1, -1}) {
            if (s != 0 && s != sign) continue;
            const auto t3 = theorem3_check(p, w, g, sign);
            arr.push_back(Json{{"sign", sign}, {"lhs", t3.lhs.to_string()}, {"rhs", t3.rhs.to_string()}, {"traces", t3.traces}});
            r.checks.push_back(rec("root_of_unity.trace_formula", t3.pass(),
                                   "p=" + std::to_string(p) + " sign=" + std::to_string(sign) + ": " + t3.lhs.to_string() +
                                       " vs " + t3.rhs.to_string()));
        }
        r.results["root_of_unity"] = arr;
    }
    return r;
}

Report run_jm(const Json& q, std::uint64_t seed) {
    Report r;
    const auto p = q.at("p").get<std::uint32_t>();
    const int k = q.at("k").get<int>(), g = q.at("g").get<int>(), m = q.at("m").get<int>();
    const BlockModule mod(p, k, m, g, JmVariant::Quotient);
    r.results = Json{{"dim_top", mod.top_dim()}, {"dim_bottom", mod.bottom_dim()}, {"dim_abelian", mod.space().dim()}};
    if (g <= 3) {
        const auto cs = lemma16_check(g, seed);
        r.checks.push_back(rec("jm.nu_mu_identities", all_pass(cs), std::to_string(cs.size()) + " identities, g=" + std::to_string(g)));
    } else {
        r.checks.push_back(CheckRecord{"jm.nu_mu_identities", "skip", "run for g <= 3"});
    }
    const auto l17 = lemma17_check(p, k, m, g, seed + 1);
    std::string failed;
    for (const auto& c : l17)
        if (!c.pass) failed += " " + c.name;
    r.checks.push_back(rec("jm.induced_maps", all_pass(l17), failed.empty() ? "all induced-map properties hold" : "failing:" + failed));
    {
        std::mt19937_64 rng(seed + 2);
        bool ok = true;
        for (int i = 0; i < 20; ++i) {
            const JmElement e1 = jm_random(mod.space(), rng), e2 = jm_random(mod.space(), rng);
            ok = ok && mod.action(jm_multiply(mod.space(), e1, e2)) == mod.action(e1) * mod.action(e2);
        }
        r.checks.push_back(rec("jm.block_homomorphism", ok, "20 seeded pairs, quotient variant"));
    }
    if (m == 3) {
        const auto w = nonsplit_witness(p, k, g);
        Json wj{{"found", w.found()}, {"search_dim", w.search_dim}, {"note", w.note}};
        if (w.witness) {
            wj["x"] = ExteriorVector::basis(g, *w.witness).to_string();
            wj["rank"] = w.witness_rank;
            wj["section_exists"] = w.section_exists;
            wj["control_section_exists"] = w.control_section_exists;
        }
        r.results["witness"] = wj;
        if (w.bottom_dim == 0 || w.top_dim == 0)
            r.checks.push_back(CheckRecord{"jm.nonsplit_witness", "skip", w.note});
        else
            r.checks.push_back(rec("jm.nonsplit_witness", w.nonsplit(), w.note));
        const auto s = sequence69_check(p, k, g);
        Json strands = Json::array();
        for (const auto& st : s.strands)
            strands.push_back(Json{{"label", st.label}, {"labels", st.labels}, {"dims", st.dims}, {"ranks", st.ranks},
                                   {"quotient_dim", st.quotient_dim}, {"exact", st.exact}});
        r.results["sequence"] = Json{{"strands", strands}, {"u_dims", s.u_dims}};
        r.checks.push_back(rec("jm.sequence", s.pass(), "two strands, composites zero and exact"));
    }
    return r;
}

Report run_selftest(const Json& q, const RunOptions& opts, std::uint64_t seed) {
    Report r;
    AcceptanceConfig cfg;
    cfg.quick = q.at("quick").get<bool>();
    cfg.seed = seed;
    const auto ids = acceptance_ids();
    const auto res = parallel_map<CriterionResult>(ids.size(), opts.workers,
                                                   [&](std::size_t i) { return run_criterion(ids[i], cfg); });
    Json crit = Json::array();
    for (const auto& c : res) {
        crit.push_back(Json{{"id", c.id}, {"key", c.key}, {"title", c.title}, {"status", c.pass() ? "pass" : "fail"}});
        char buf[8];
        std::snprintf(buf, sizeof buf, "%02d", c.id);
        for (const auto& ch : c.checks)
            r.checks.push_back(rec(std::string("acceptance.") + buf + "." + ch.name, ch.pass, ch.details));
    }
    r.results = Json{{"quick", cfg.quick}, {"criteria", crit}};
    return r;
}

bool uses_seed(const std::string& c) { return c == "jm" || c == "selftest"; }

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"resolve", "character", "factors", "dims",
                                                "fusion",  "alexander", "jm",      "selftest"};
    return names;
}

Job make_job(const std::string& command, const Json& params) {
    const auto& sc = schemas();
    auto it = sc.find(command);
    if (it == sc.end()) throw UsageError("unknown command '" + command + "'");
    if (!params.is_object()) throw UsageError("job parameters must be an object");
    Job job;
    job.command = command;
    for (const auto& [key, val] : params.items()) {
        if (key == "seed") continue;
        const bool known = std::any_of(it->second.begin(), it->second.end(), [&](const ParamSpec& s) { return key == s.name; });
        if (!known) throw UsageError("command '" + command + "' has no parameter '" + key + "'");
    }
    for (const auto& s : it->second) {
        if (!params.contains(s.name)) {
            if (s.required) throw UsageError("command '" + command + "' requires '" + s.name + "'");
            job.params[s.name] = s.def;
            continue;
        }
        const Json& v = params.at(s.name);
        switch (s.type) {
            case PType::Int:
                if (!v.is_number_integer()) throw UsageError(std::string("'") + s.name + "' must be an integer");
                break;
            case PType::Str:
                if (!v.is_string()) throw UsageError(std::string("'") + s.name + "' must be a string");
                break;
            case PType::Bool:
                if (!v.is_boolean()) throw UsageError(std::string("'") + s.name + "' must be true or false");
                break;
        }
        job.params[s.name] = v;
    }
    if (params.contains("seed")) {
        const Json& v = params.at("seed");
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
            throw UsageError("'seed' must be a non-negative integer");
        job.params["seed"] = v.get<std::uint64_t>();
    }
    validate(job);
    return job;
}

Job job_from_json(const Json& obj) {
    if (!obj.is_object()) throw UsageError("each job must be an object");
    if (!obj.contains("command") || !obj.at("command").is_string()) throw UsageError("job needs a string 'command'");
    Json params = obj;
    params.erase("command");
    return make_job(obj.at("command").get<std::string>(), params);
}

std::vector<Job> parse_job_file(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw UsageError("job file: parse error at line " + std::to_string(line) + ", column " + std::to_string(col));
    }
    if (doc.is_object() && doc.contains("jobs")) doc = doc.at("jobs");
    if (!doc.is_array()) throw UsageError("job file: expected a list of jobs");
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        try {
            jobs.push_back(job_from_json(doc[i]));
        } catch (const UsageError& e) {
            throw UsageError("job file: job " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return jobs;
}

Report run_job(const Job& job, const RunOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t seed = job.params.contains("seed") ? job.params.at("seed").get<std::uint64_t>() : opts.seed;
    Json params = job.params;
    if (uses_seed(job.command)) params["seed"] = seed;
    Report r;
    const Json& q = job.params;
    try {
        if (job.command == "resolve") r = run_resolve(q);
        else if (job.command == "character") r = run_character(q);
        else if (job.command == "factors") r = run_factors(q);
        else if (job.command == "dims") r = run_dims(q);
        else if (job.command == "fusion") r = run_fusion(q);
        else if (job.command == "alexander") r = run_alexander(q);
        else if (job.command == "jm") r = run_jm(q, seed);
        else if (job.command == "selftest") r = run_selftest(q, opts, seed);
        else throw UsageError("unknown command '" + job.command + "'");
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        r = Report{};
        r.checks.push_back(CheckRecord{"internal.error", "fail", e.what()});
    }
    r.job = Json{{"command", job.command}, {"params", params}};
    if (opts.timings)
        r.timings["total"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<Report> run_batch(const std::vector<Job>& jobs, const RunOptions& opts) {
    RunOptions inner = opts;
    inner.workers = 1;
    return parallel_map<Report>(jobs.size(), opts.workers, [&](std::size_t i) { return run_job(jobs[i], inner); });
}

bool Report::failed() const {
    return std::any_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == "fail"; });
}

Json Report::to_json() const {
    Json cs = Json::array();
    for (const auto& c : checks) cs.push_back(check_json(c));
    return Json{{"job", job}, {"results", results}, {"checks", cs}, {"timings_ms", timings}};
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "== " << job.value("command", std::string("?"));
    if (job.contains("params"))
        for (const auto& [k, v] : job.at("params").items()) os << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
    os << "\n";
    for (const auto& [k, v] : results.items()) os << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    for (const auto& c : checks) {
        std::string st = c.status;
        std::transform(st.begin(), st.end(), st.begin(), ::toupper);
        os << "  [" << st << "] " << c.name << ": " << c.details << "\n";
    }
    for (const auto& [k, v] : timings.items()) os << "  time " << k << ": " << v.dump() << " ms\n";
    return os.str();
}

Json aggregate_json(const std::vector<Report>& reports) {
    Json jobs = Json::array();
    std::size_t failed = 0;
    for (const auto& r : reports) {
        jobs.push_back(r.to_json());
        if (r.failed()) ++failed;
    }
    return Json{{"jobs", jobs}, {"summary", {{"total", reports.size()}, {"passed", reports.size() - failed}, {"failed", failed}}}};
}

std::string aggregate_text(const std::vector<Report>& reports) {
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& r : reports) {
        os << r.to_text();
        if (r.failed()) ++failed;
    }
    os << "summary: " << reports.size() - failed << "/" << reports.size() << " jobs passed\n";
    return os.str();
}

int exit_code(const std::vector<Report>& reports) {
    for (const auto& r : reports)
        if (r.failed()) return 1;
    return 0;
}

}  // namespace modres
