#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modres/runner.hpp"

using namespace modres;

namespace {
Report run(const std::string& cmd, const Json& params, unsigned workers = 1) {
    RunOptions o;
    o.workers = workers;
    return run_job(make_job(cmd, params), o);
}
}  // namespace

TEST_CASE("resolve example report") {
    const auto r = run("resolve", {{"p", 3}, {"n", 4}, {"k", 1}});
    CHECK(r.results.at("terms") == Json::array({5, 1}));
    CHECK(r.results.at("dims") == Json::array({1, 2}));
    CHECK(r.results.at("exact") == true);
    CHECK(r.results.at("dimD") == 1);
    CHECK_FALSE(r.failed());
    CHECK(exit_code({r}) == 0);
    const Json j = r.to_json();
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"job", "results", "checks", "timings_ms"});
    CHECK(j.at("timings_ms").empty());
    for (const auto& c : j.at("checks")) {
        CHECK(c.at("name").is_string());
        CHECK(c.at("details").is_string());
        CHECK(c.at("status") == "pass");
    }
}

TEST_CASE("dims example with closed-form cross-check") {
    const auto r = run("dims", {{"p", 5}, {"g", 3}});
    CHECK(r.results.at("dims") == Json::array({14, 14, 6, 1}));
    CHECK(r.results.at("closed_form") == Json::array({14, 14, 6, 1}));
    CHECK_FALSE(r.failed());
    const auto r2 = run("dims", {{"p", 5}, {"g", 2}});
    CHECK(r2.results.at("dims") == Json::array({5, 4, 1, 0}));
}

TEST_CASE("every command runs and passes at small sizes") {
    const std::vector<std::pair<std::string, Json>> jobs{
        {"character", {{"p", 5}, {"tau", "4,2"}}},
        {"character", {{"p", 3}, {"tau", "3,2"}, {"sigma", "2,2,1"}}},
        {"factors", {{"p", 3}, {"tau", "7,2"}}},
        {"factors", {{"p", 5}, {"tau", "3,1"}}},
        {"fusion", {{"p", 7}, {"g", 2}}},
        {"alexander", {{"g", 2}, {"word", "S1.A2.P1"}, {"p", 5}}},
        {"alexander", {{"g", 1}}},
        {"jm", {{"p", 5}, {"k", 1}, {"g", 2}}},
        {"jm", {{"p", 7}, {"k", 2}, {"g", 3}, {"m", 2}}},
    };
    for (const auto& [c, p] : jobs) {
        const auto r = run(c, p);
        INFO(r.to_text());
        CHECK_FALSE(r.failed());
        CHECK_FALSE(r.checks.empty());
    }
}

TEST_CASE("validation rejects bad parameters") {
    CHECK_THROWS_AS(make_job("nope", Json::object()), UsageError);
    CHECK_THROWS_AS(make_job("resolve", {{"p", 3}, {"n", 4}}), UsageError);
    CHECK_THROWS_AS(make_job("resolve", {{"p", 4}, {"n", 4}, {"k", 1}}), UsageError);
    CHECK_THROWS_AS(make_job("resolve", {{"p", 3}, {"n", 4}, {"k", 2}}), UsageError);
    CHECK_THROWS_AS(make_job("resolve", {{"p", 3}, {"n", 4}, {"k", 1}, {"x", 1}}), UsageError);
    CHECK_THROWS_AS(make_job("resolve", {{"p", "3"}, {"n", 4}, {"k", 1}}), UsageError);
    CHECK_THROWS_AS(make_job("character", {{"p", 3}, {"tau", "5,1"}}), UsageError);
    CHECK_THROWS_AS(make_job("character", {{"p", 5}, {"tau", "2,3"}}), UsageError);
    CHECK_THROWS_AS(make_job("character", {{"p", 5}, {"tau", "3,1"}, {"sigma", "2,1"}}), UsageError);
    CHECK_THROWS_AS(make_job("alexander", {{"g", 2}, {"word", "Q1"}}), UsageError);
    CHECK_THROWS_AS(make_job("alexander", {{"g", 2}, {"word", "e1"}}), UsageError);
    CHECK_THROWS_AS(make_job("alexander", {{"g", 2}, {"sign", 2}}), UsageError);
    CHECK_THROWS_AS(make_job("jm", {{"p", 5}, {"k", 2}, {"g", 3}}), UsageError);
    CHECK_THROWS_AS(make_job("selftest", {{"quick", 1}}), UsageError);
    CHECK_THROWS_AS(make_job("dims", {{"p", 5}, {"g", 3}, {"seed", -1}}), UsageError);
}

TEST_CASE("job echo keeps schema order and fills defaults") {
    const Job j = make_job("alexander", {{"word", "S1"}, {"g", 2}});
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.params.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"g", "word", "p", "sign"});
    RunOptions o;
    o.seed = 9;
    const auto r = run_job(make_job("jm", {{"p", 5}, {"k", 1}, {"g", 2}}), o);
    CHECK(r.job.at("params").at("seed") == 9);
}

TEST_CASE("job files: order, empty list, parse errors") {
    const std::string three = R"([
      {"command": "resolve", "p": 5, "n": 6, "k": 3},
      {"command": "resolve", "p": 3, "n": 4, "k": 1},
      {"command": "resolve", "p": 7, "n": 8, "k": 5}
    ])";
    const auto jobs = parse_job_file(three);
    REQUIRE(jobs.size() == 3);
    RunOptions o;
    o.workers = 3;
    const auto reps = run_batch(jobs, o);
    REQUIRE(reps.size() == 3);
    CHECK(reps[0].job.at("params").at("n") == 6);
    CHECK(reps[1].job.at("params").at("n") == 4);
    CHECK(reps[2].job.at("params").at("n") == 8);
    o.workers = 1;
    CHECK(aggregate_json(reps).dump() == aggregate_json(run_batch(jobs, o)).dump());

    const auto none = parse_job_file("[]");
    CHECK(none.empty());
    const auto empty = run_batch(none, o);
    CHECK(exit_code(empty) == 0);
    CHECK(aggregate_json(empty).at("jobs").empty());

    try {
        parse_job_file("[\n  {\"command\": \"dims\",\n   \"p\": 5 \"g\": 3}\n]");
        FAIL("expected a parse error");
    } catch (const UsageError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_job_file("{\"command\": \"dims\"}"), UsageError);
    CHECK_THROWS_AS(parse_job_file("[{\"p\": 5}]"), UsageError);
}

TEST_CASE("failing job sets exit code 1 and keeps per-job status") {
    auto reps = run_batch(parse_job_file(R"([{"command":"dims","p":5,"g":2},{"command":"dims","p":5,"g":3}])"), {});
    Report bad;
    bad.job = Json{{"command", "synthetic"}};
    bad.checks.push_back(CheckRecord{"synthetic.fail", "fail", "forced"});
    reps.insert(reps.begin() + 1, bad);
    CHECK(exit_code(reps) == 1);
    const Json agg = aggregate_json(reps);
    CHECK(agg.at("summary").at("failed") == 1);
    CHECK(agg.at("summary").at("passed") == 2);
    CHECK(agg.at("jobs")[1].at("checks")[0].at("status") == "fail");
    CHECK(agg.at("jobs")[0].at("checks")[0].at("status") == "pass");
}

TEST_CASE("parallel_map keeps order and rethrows") {
    const auto v = parallel_map<int>(50, 4, [](std::size_t i) { return static_cast<int>(i * i); });
    for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == static_cast<int>(i * i));
    CHECK_THROWS(parallel_map<int>(10, 3, [](std::size_t i) -> int {
        if (i == 7) throw std::runtime_error("boom");
        return 0;
    }));
}

TEST_CASE("text output has no json wrapper and flags status") {
    const auto r = run("resolve", {{"p", 3}, {"n", 4}, {"k", 1}});
    const std::string t = r.to_text();
    CHECK(t.find("[PASS] resolve.exactness") != std::string::npos);
    CHECK(t.find("terms: [5,1]") != std::string::npos);
}
