#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "vinwit/coset.hpp"
#include "vinwit/error.hpp"
#include "vinwit/pipeline.hpp"
#include "vinwit/serialize.hpp"
#include "vinwit/subgroups.hpp"
#include "vinwit/vinberg.hpp"
#include "vinwit/zariski.hpp"

namespace py = pybind11;
using namespace vinwit;

namespace {

IntMatrix to_int_matrix(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Integer>> z;
  for (const auto& r : rows) z.emplace_back(r.begin(), r.end());
  return IntMatrix::from_rows(z);
}

std::vector<std::vector<py::int_>> to_rows(const IntMatrix& m) {
  std::vector<std::vector<py::int_>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[i].push_back(py::reinterpret_steal<py::int_>(PyLong_FromString(m(i, j).get_str().c_str(), nullptr, 10)));
  return out;
}

// Builds a RunConfig from keyword arguments mirroring the command-line flags.
RunConfig make_config(const py::kwargs& kw) {
  RunConfig cfg = default_config();
  Budgets& b = cfg.budgets;
  for (auto [key, value] : kw) {
    std::string k = py::str(key);
    if (k == "diagram") cfg.diagram = CoxeterDiagram::parse_text(value.cast<std::string>());
    else if (k == "cartan") cfg.cartan = cartan_from_json(Json::parse(value.cast<std::string>()));
    else if (k == "seed") cfg.seed = value.cast<std::uint64_t>();
    else if (k == "out_dir") cfg.out_dir = value.cast<std::string>();
    else if (k == "max_cosets") b.max_cosets = value.cast<std::size_t>();
    else if (k == "max_index") b.max_index = value.cast<std::size_t>();
    else if (k == "low_index_nodes") b.low_index_nodes = value.cast<std::size_t>();
    else if (k == "word_length") b.word_length = value.cast<std::size_t>();
    else if (k == "prime_bound") b.prime_bound = value.cast<std::uint64_t>();
    else if (k == "density_words") b.density_words = value.cast<std::size_t>();
    else if (k == "depth") b.depth = value.cast<std::size_t>();
    else if (k == "samples") b.samples = value.cast<std::size_t>();
    else if (k == "sample_length") b.sample_length = value.cast<std::size_t>();
    else if (k == "kernel_radius") b.kernel_radius = value.cast<int>();
    else throw InvalidInput("unknown option '" + k + "'");
  }
  return cfg;
}

py::tuple run(const std::string& command, const py::kwargs& kw) {
  std::optional<std::size_t> rank;
  std::string which = "even";
  py::kwargs rest;
  for (auto [key, value] : kw) {
    std::string k = py::str(key);
    if (k == "rank") rank = value.cast<std::size_t>();
    else if (k == "set") which = value.cast<std::string>();
    else rest[key] = value;
  }
  RunConfig cfg = make_config(rest);
  Report r;
  {
    py::gil_scoped_release release;
    if (command == "diagram analyze") r = diagram_analyze(cfg);
    else if (command == "lanner enumerate") r = lanner_enumerate(rank.value_or(5), cfg);
    else if (command == "rep build") r = rep_build(cfg);
    else if (command == "rep verify") r = rep_verify(cfg);
    else if (command == "density certify") r = density_certify(cfg, which);
    else if (command == "subgroups search") r = subgroups_search(cfg);
    else if (command == "geometry orbit") r = geometry_orbit(cfg);
    else if (command == "geometry limitset") r = geometry_limitset(cfg);
    else if (command == "witness pipeline") r = witness_pipeline(cfg);
    else throw InvalidInput("unknown command '" + command + "'");
  }
  return py::make_tuple(dump(r.json), r.exit_code());
}

Presentation make_presentation(std::size_t gens, const std::vector<FreeWord>& relators) {
  return Presentation(gens, relators);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact reflection-group verification core";
  m.attr("__version__") = "0.1.0";

  // Translators run newest first, so the base class goes in before its subclasses.
  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<ResourceLimit>(m, "ResourceLimit", base.ptr());

  m.def("run", &run, py::arg("command"), "Runs a command; returns (report JSON text, exit code).");

  m.def("signature", [](const std::string& diagram) {
    auto s = signature(cartan_from_diagram(CoxeterDiagram::parse_text(diagram)).entries);
    return py::make_tuple(s.positives, s.zeros, s.negatives);
  }, py::arg("diagram"), "Inertia (positives, zeros, negatives) of the diagram's Cartan matrix.");

  m.def("cartan_matrix", [](const std::string& diagram) {
    auto a = cartan_from_diagram(CoxeterDiagram::parse_text(diagram)).entries;
    std::vector<std::vector<std::string>> rows(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) rows[i].push_back(a(i, j).str());
    return rows;
  }, py::arg("diagram"));

  m.def("reflection_generators", [](const std::vector<std::vector<long>>& cartan) {
    std::vector<std::vector<std::vector<py::int_>>> out;
    for (const auto& g : reflection_generators(CartanMatrix::from_integer(to_int_matrix(cartan))))
      out.push_back(to_rows(g.matrix));
    return out;
  }, py::arg("cartan"));

  m.def("char_poly", [](const std::vector<std::vector<long>>& matrix) {
    IntPolynomial f = char_poly(to_int_matrix(matrix));
    std::vector<py::int_> c;
    for (const auto& x : f.coeffs())
      c.push_back(py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10)));
    return c;
  }, py::arg("matrix"), "Coefficients of det(xI - M), constant term first.");

  m.def("factor_pattern", [](const std::vector<long>& coeffs, std::uint64_t p) {
    auto pat = factor_pattern_mod_p(IntPolynomial(std::vector<Integer>(coeffs.begin(), coeffs.end())), p);
    return py::make_tuple(pat.degrees, pat.squarefree);
  }, py::arg("coefficients"), py::arg("prime"));

  m.def("coset_count", [](std::size_t gens, const std::vector<FreeWord>& relators,
                          const std::vector<FreeWord>& subgroup, std::size_t max_cosets) -> std::optional<std::size_t> {
    auto e = todd_coxeter(make_presentation(gens, relators), subgroup, max_cosets);
    if (!e.table) return std::nullopt;
    return e.table->index();
  }, py::arg("generators"), py::arg("relators"), py::arg("subgroup") = std::vector<FreeWord>{},
     py::arg("max_cosets") = 1000000, "Index of the subgroup, or None when the budget is exhausted.");

  m.def("abelianization", [](std::size_t gens, const std::vector<FreeWord>& relators) {
    auto a = abelianization(make_presentation(gens, relators));
    std::vector<py::int_> f;
    for (const auto& x : a.invariant_factors)
      f.push_back(py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10)));
    return py::make_tuple(f, a.betti);
  }, py::arg("generators"), py::arg("relators"), "(invariant factors, betti number).");
}
