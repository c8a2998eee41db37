#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "modres/dims_fusion.hpp"
#include "modres/runner.hpp"
#include "modres/specht.hpp"

namespace py = pybind11;

namespace {

// Runs one job given as JSON text; returns the report as JSON text.
std::string run_job_json(const std::string& command, const std::string& params, std::uint64_t seed, unsigned workers,
                         bool timings) {
    modres::Json p;
    try {
        p = modres::Json::parse(params);
    } catch (const modres::Json::parse_error& e) {
        throw modres::UsageError(std::string("params: ") + e.what());
    }
    modres::RunOptions o{seed, workers, timings};
    const modres::Job job = modres::make_job(command, p);
    py::gil_scoped_release release;
    return modres::run_job(job, o).to_json().dump();
}

std::string run_batch_json(const std::string& text, std::uint64_t seed, unsigned workers, bool timings) {
    const auto jobs = modres::parse_job_file(text);
    modres::RunOptions o{seed, workers, timings};
    py::gil_scoped_release release;
    const auto reps = modres::run_batch(jobs, o);
    return modres::aggregate_json(reps).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Modular resolutions, quotient TQFT dimensions and extension checks";
    py::register_exception<modres::UsageError>(m, "UsageError", PyExc_ValueError);

    m.def("command_names", &modres::command_names);
    m.def("run_job_json", &run_job_json, py::arg("command"), py::arg("params"), py::arg("seed") = 0,
          py::arg("workers") = 1, py::arg("timings") = false);
    m.def("run_batch_json", &run_batch_json, py::arg("text"), py::arg("seed") = 0, py::arg("workers") = 1,
          py::arg("timings") = false);

    m.def("catalan", &modres::catalan, py::arg("n"), py::arg("j"));
    m.def("d_dim", &modres::d_dim, py::arg("p"), py::arg("n"), py::arg("k"));
    m.def("verlinde_dim", &modres::verlinde_dim, py::arg("p"), py::arg("k"), py::arg("g"));
    m.def("verlinde_dim_from_d", &modres::verlinde_dim_from_d, py::arg("p"), py::arg("k"), py::arg("g"));
    m.def("lemma15_dims", &modres::lemma15_dims, py::arg("g"));
}
