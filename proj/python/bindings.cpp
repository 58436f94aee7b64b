#include "brieskorn/errors.hpp"
#include "brieskorn/jacobi.hpp"
#include "brieskorn/newton.hpp"
#include "brieskorn/parser.hpp"
#include "brieskorn/pipeline.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace brieskorn;

namespace {

Mode mode_of(const std::string& m) {
    try {
        return parse_mode(m);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

std::string run(const std::string& command, const std::string& job, std::optional<std::string> h) {
    Json j;
    try {
        j = Json::parse(job);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("job is not valid JSON: ") + e.what());
    }
    return run_command(parse_command(command), JobSpec::from_json(j), h).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Brieskorn lattice computations for Laurent polynomials";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<UsageError>(m, "UsageError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<HypothesisError>(m, "HypothesisError", base.ptr());
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

    m.def("run", &run, py::arg("command"), py::arg("job"), py::arg("h") = py::none(),
          "Runs a pipeline command on a JSON job and returns the JSON report.");
    m.def(
        "milnor_number",
        [](const std::string& f, std::size_t n, const std::string& mode) {
            return milnor_number(parse_poly(f, n, 0, mode_of(mode)));
        },
        py::arg("f"), py::arg("n"), py::arg("mode") = "laurent");
    m.def(
        "newton_number",
        [](const std::string& f, std::size_t n, const std::string& mode) {
            return newton_number(build_polyhedron(parse_poly(f, n, 0, mode_of(mode)))).get_str();
        },
        py::arg("f"), py::arg("n"), py::arg("mode") = "laurent");
    m.def(
        "normalize",
        [](const std::string& f, std::size_t n, std::size_t r, const std::string& mode) {
            return parse_poly(f, n, r, mode_of(mode)).to_string();
        },
        py::arg("f"), py::arg("n"), py::arg("r") = 0, py::arg("mode") = "laurent",
        "Parses an expression and prints it in canonical form.");
}
