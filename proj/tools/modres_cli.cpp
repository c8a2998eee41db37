#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "modres/runner.hpp"

using modres::Json;

namespace {

struct Flags {
    std::string output = "text";
    std::uint64_t seed = 0;
    std::string jobs;
    unsigned workers = 1;
    bool timings = false;
};

// Subcommand options; only those the user actually passed are forwarded.
struct SubOpts {
    std::int64_t p = 0, n = 0, k = 0, g = 0, sign = 0, m = 3;
    std::string tau, word, sigma;
    bool quick = false;
};

void add_int(CLI::App* sub, const char* flag, std::int64_t& v, const char* help) { sub->add_option(flag, v, help); }

Json collect(CLI::App* sub, const SubOpts& o) {
    Json params = Json::object();
    auto given = [&](const char* name) {
        const CLI::Option* opt = sub->get_option_no_throw(std::string("--") + name);
        return opt != nullptr && opt->count() > 0;
    };
    auto put_i = [&](const char* name, std::int64_t v) {
        if (given(name)) params[name] = v;
    };
    auto put_s = [&](const char* name, const std::string& v) {
        if (given(name)) params[name] = v;
    };
    put_i("p", o.p);
    put_i("n", o.n);
    put_i("k", o.k);
    put_i("g", o.g);
    put_i("m", o.m);
    put_i("sign", o.sign);
    put_s("tau", o.tau);
    put_s("word", o.word);
    put_s("sigma", o.sigma);
    if (given("quick")) params["quick"] = o.quick;
    return params;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"modres: modular resolutions, dimension formulas and TQFT checks"};
    app.require_subcommand(0, 1);
    Flags f;
    app.add_option("--output", f.output, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", f.seed, "Seed for randomized checks (default 0)");
    app.add_option("--jobs", f.jobs, "JSON file with a list of jobs");
    app.add_option("--workers", f.workers, "Worker threads")->check(CLI::Range(1u, 64u));
    app.add_flag("--timings", f.timings, "Include wall-clock timings in reports");

    SubOpts o;
    struct Def {
        const char* name;
        const char* help;
        std::vector<const char*> flags;
    };
    const std::vector<Def> defs{
        {"resolve", "Build and verify the resolution complex for (p, n, k)", {"p", "n", "k"}},
        {"character", "Check the modular character identity for a two-row shape", {"p", "tau", "sigma"}},
        {"factors", "Admissible sets and composition factors for a two-row shape", {"p", "tau"}},
        {"dims", "Quotient TQFT dimensions and cross-checks", {"p", "g"}},
        {"fusion", "Fusion algebra, R_p polynomial and Perron norms", {"p", "g"}},
        {"alexander", "Alexander-type trace decomposition of a mapping-class word", {"g", "word", "p", "sign"}},
        {"jm", "Extension checks for the Johnson-Morita construction", {"p", "k", "g", "m"}},
        {"selftest", "Run the acceptance suite", {"quick"}},
    };
    std::vector<CLI::App*> subs;
    for (const auto& d : defs) {
        CLI::App* sub = app.add_subcommand(d.name, d.help);
        sub->fallthrough();
        for (const std::string fl : d.flags) {
            if (fl == "p") add_int(sub, "--p", o.p, "odd prime");
            else if (fl == "n") add_int(sub, "--n", o.n, "number of boxes");
            else if (fl == "k") add_int(sub, "--k", o.k, "label");
            else if (fl == "g") add_int(sub, "--g", o.g, "genus");
            else if (fl == "m") add_int(sub, "--m", o.m, "degree (default 3)");
            else if (fl == "sign") add_int(sub, "--sign", o.sign, "sign of the root of unity, 0 for both");
            else if (fl == "tau") sub->add_option("--tau", o.tau, "shape as 'a,b'");
            else if (fl == "word") sub->add_option("--word", o.word, "word in S<j> P<i> A<i> B<i> C<i>");
            else if (fl == "sigma") sub->add_option("--sigma", o.sigma, "cycle type, e.g. '2,1,1'");
            else if (fl == "quick") sub->add_flag("--quick", o.quick, "reduced ranges");
        }
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    modres::RunOptions opts;
    opts.seed = f.seed;
    opts.workers = f.workers;
    opts.timings = f.timings;
    const bool json = f.output == "json";

    try {
        std::vector<modres::Job> jobs;
        bool batch = false;
        if (!f.jobs.empty()) {
            if (!app.get_subcommands().empty()) throw modres::UsageError("--jobs cannot be combined with a subcommand");
            std::ifstream in(f.jobs);
            if (!in) throw modres::UsageError("cannot read job file '" + f.jobs + "'");
            std::stringstream ss;
            ss << in.rdbuf();
            jobs = modres::parse_job_file(ss.str());
            batch = true;
        } else {
            const auto chosen = app.get_subcommands();
            if (chosen.empty()) throw modres::UsageError("no subcommand given (see --help)");
            jobs.push_back(modres::make_job(chosen[0]->get_name(), collect(chosen[0], o)));
        }
        std::vector<modres::Report> reports;
        if (batch) {
            reports = modres::run_batch(jobs, opts);
            if (json)
                std::cout << modres::aggregate_json(reports).dump(2) << "\n";
            else
                std::cout << modres::aggregate_text(reports);
        } else {
            reports.push_back(modres::run_job(jobs[0], opts));
            if (json)
                std::cout << reports[0].to_json().dump(2) << "\n";
            else
                std::cout << reports[0].to_text();
        }
        return modres::exit_code(reports);
    } catch (const modres::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
