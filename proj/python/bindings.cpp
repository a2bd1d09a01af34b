// Python bindings for the core operations.  Structured results cross the
// boundary as JSON strings; the qrdensity package turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "qrd/arith.hpp"
#include "qrd/density.hpp"
#include "qrd/diagrams.hpp"
#include "qrd/empirical.hpp"
#include "qrd/errors.hpp"
#include "qrd/json_io.hpp"

namespace py = pybind11;

namespace {

qrd::StandardTuple parse_tuple(const std::string& tuple_json) {
  return qrd::tuple_from_json(qrd::Json::parse(tuple_json));
}

std::string analyze_json(const std::string& tuple_json, bool check) {
  return qrd::analysis_to_json(qrd::analyze(parse_tuple(tuple_json), check)).dump();
}

py::tuple density_pair(const std::string& tuple_json) {
  qrd::DensityAnalysis a = qrd::analyze(parse_tuple(tuple_json));
  return py::make_tuple(py::int_(py::str(a.density_plus.num.str())),
                        a.density_plus.den_log2);
}

std::string empirical_json(const std::string& tuple_json, std::uint64_t bound) {
  return qrd::empirical_to_json(qrd::empirical_density(parse_tuple(tuple_json), bound))
      .dump();
}

std::string qcount_json(const std::string& tuple_json, std::uint64_t p, int epsilon) {
  return qrd::qcount_to_json(qrd::q_epsilon_count(p, parse_tuple(tuple_json), epsilon))
      .dump();
}

std::string generate_json(const std::string& config_json) {
  qrd::GeneratorConfig config =
      qrd::generator_from_json(qrd::Json::parse(config_json));
  return qrd::tuple_to_json(qrd::run_generator(config)).dump();
}

std::string render(const std::string& source_json) {
  qrd::Json j = qrd::Json::parse(source_json);
  if (j.contains("gaps") && !j.contains("a")) {
    qrd::OverlapDiagram d;
    d.s = j.contains("s") ? j.at("s").get<int>() : 2;
    for (const qrd::Json& g : j.at("gaps")) d.gaps.push_back(g.get<long long>());
    return qrd::render_ascii(d);
  }
  qrd::TupleStructure st = qrd::build_structure(qrd::tuple_from_json(j));
  return qrd::render_ascii(qrd::quotient_diagram(st));
}

}  // namespace

PYBIND11_MODULE(_qrdensity, m) {
  m.doc() = "exact densities of primes whose residue or non-residue sets "
            "contain prescribed arithmetic-progression unions";

  py::register_exception<qrd::domain_error>(m, "DomainError", PyExc_ValueError);
  py::register_exception<qrd::size_limit_error>(m, "SizeLimitError",
                                                PyExc_ValueError);
  py::register_exception<qrd::resource_error>(m, "ResourceError",
                                              PyExc_MemoryError);

  m.def("analyze_json", &analyze_json, py::arg("tuple_json"),
        py::arg("check") = false, "full analysis of a tuple, as a JSON string");
  m.def("density", &density_pair, py::arg("tuple_json"),
        "density as (numerator, log2 of the denominator)");
  m.def("empirical_json", &empirical_json, py::arg("tuple_json"),
        py::arg("bound") = 1'000'000, "sieve verification report");
  m.def("qcount_json", &qcount_json, py::arg("tuple_json"), py::arg("p"),
        py::arg("epsilon") = 1, "qualifying progression count modulo p");
  m.def("generate_json", &generate_json, py::arg("config_json"),
        "tuple built from a gap prescription");
  m.def("render", &render, py::arg("source_json"), "ASCII diagram");
  m.def(
      "legendre",
      [](std::int64_t z, std::uint64_t p) { return qrd::legendre(z, p); },
      py::arg("z"), py::arg("p"), "Legendre symbol of z modulo the odd prime p");
  m.def(
      "squarefree_part",
      [](std::int64_t n) {
        return qrd::squarefree_part(qrd::Int(n)).convert_to<std::int64_t>();
      },
      py::arg("n"));
  m.def(
      "sieve_primes",
      [](std::uint64_t bound) { return qrd::sieve_primes(bound).primes; },
      py::arg("bound"), "all primes up to the bound");
}
