#include "koszulcy/cli/commands.hpp"
#include "koszulcy/errors.hpp"
#include "koszulcy/regular.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace koszulcy;

namespace {

std::vector<std::vector<std::string>> matrix_strings(const Matrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& s : m.row(i)) {
      out[i].push_back(to_string(s));
    }
  }
  return out;
}

QuadraticAlgebra algebra_of(const std::string& document) {
  return cli::to_algebra(cli::parse_description(document));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact quadratic-algebra computations";

  auto error = py::register_exception<Error>(m, "KoszulcyError");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<DimensionError>(m, "DimensionError", error.ptr());
  py::register_exception<ResourceGuardError>(m, "ResourceGuardError", error.ptr());

  m.attr("DEFAULT_WORD_CAP") = kDefaultWordCap;

  m.def("commands", &cli::command_names);

  m.def(
      "run",
      [](const std::string& command, const std::string& document, std::size_t max_degree,
         std::uint64_t seed, const std::string& sigma, std::size_t word_cap) {
        cli::RunOptions o;
        o.max_degree = max_degree;
        o.seed = seed;
        o.sigma = cli::parse_sigma_choice(sigma);
        o.word_cap = word_cap;
        cli::RunResult r;
        {
          py::gil_scoped_release release;
          r = cli::run(command, document, o);
        }
        return py::make_tuple(r.exit_code, r.report.verdict_body());
      },
      py::arg("command"), py::arg("document"), py::arg("max_degree") = 5, py::arg("seed") = 0,
      py::arg("sigma") = "nakayama", py::arg("word_cap") = kDefaultWordCap);

  m.def("canonicalize", [](const std::string& document) {
    return cli::serialize(cli::parse_description(document));
  });

  m.def("dual", [](const std::string& document) {
    return cli::serialize(cli::describe(quadratic_dual(algebra_of(document))));
  });

  m.def(
      "hilbert",
      [](const std::string& document, std::size_t max_degree, std::size_t word_cap) {
        return graded_dims(algebra_of(document), max_degree, word_cap);
      },
      py::arg("document"), py::arg("max_degree") = 5, py::arg("word_cap") = kDefaultWordCap);

  m.def(
      "nakayama",
      [](const std::string& document, std::size_t bound) {
        const auto a = algebra_of(document);
        return matrix_strings(nakayama_of_A(a, require_regular(a, bound)));
      },
      py::arg("document"), py::arg("bound") = 5);
}
