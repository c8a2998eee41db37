#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

namespace modres {

using Json = nlohmann::ordered_json;

// Bad parameters or unreadable job files; maps to exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Job {
    std::string command;
    Json params = Json::object();  // validated, defaults filled, schema order
};

struct CheckRecord {
    std::string name;
    std::string status;  // pass | fail | skip
    std::string details;
};

struct Report {
    Json job = Json::object();
    Json results = Json::object();
    std::vector<CheckRecord> checks;
    Json timings = Json::object();

    bool failed() const;
    Json to_json() const;
    std::string to_text() const;
};

struct RunOptions {
    std::uint64_t seed = 0;
    unsigned workers = 1;
    bool timings = false;
};

const std::vector<std::string>& command_names();
// Validates command and params; unknown keys, missing or ill-typed values throw UsageError.
Job make_job(const std::string& command, const Json& params);
// A job object in a batch: {"command": ..., <param>: ...}.
Job job_from_json(const Json& obj);
std::vector<Job> parse_job_file(const std::string& text);

Report run_job(const Job& job, const RunOptions& opts);
std::vector<Report> run_batch(const std::vector<Job>& jobs, const RunOptions& opts);
Json aggregate_json(const std::vector<Report>& reports);
std::string aggregate_text(const std::vector<Report>& reports);
int exit_code(const std::vector<Report>& reports);

// Runs fn(i) for i < n on up to `workers` threads; results keep index order.
template <class R>
std::vector<R> parallel_map(std::size_t n, unsigned workers, const std::function<R(std::size_t)>& fn) {
    std::vector<R> out(n);
    std::vector<std::exception_ptr> errs(n);
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                out[i] = fn(i);
            } catch (...) {
                errs[i] = std::current_exception();
            }
        }
    };
    const unsigned w = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
    if (w <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < w; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace modres
