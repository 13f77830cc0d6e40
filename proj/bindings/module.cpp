#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "archlab/archetypes.hpp"
#include "archlab/circuit.hpp"
#include "archlab/circuit_io.hpp"
#include "archlab/errors.hpp"
#include "archlab/properties.hpp"

namespace py = pybind11;
using namespace archlab;

namespace {

py::dict verdict_to_dict(const Verdict& v, const NeuroCircuit& c) {
  py::dict out;
  switch (v.status) {
    case VerdictStatus::Pass:
      out["status"] = "pass";
      break;
    case VerdictStatus::Fail:
      out["status"] = "fail";
      break;
    case VerdictStatus::HypothesesNotMet:
      out["status"] = "hypotheses-not-met";
      break;
  }
  out["checked"] = v.checked_count;
  if (!v.failed_hypothesis.empty()) out["hypothesis"] = v.failed_hypothesis;
  if (v.counterexample) {
    const Counterexample& ce = *v.counterexample;
    py::dict cex;
    cex["input"] =
        format_input_string(ce.inputs, c.suppl_input(), c.neurons().size());
    cex["neuron"] = ce.neuron_id;
    cex["t"] = ce.divergent_time;
    cex["expected"] = ce.expected;
    cex["actual"] = ce.actual;
    out["counterexample"] = cex;
  }
  return out;
}

std::vector<std::string> classify_names(const NeuroCircuit& c) {
  std::vector<std::string> names;
  for (ArchetypeClass a : classify(c)) names.emplace_back(archetype_name(a));
  std::sort(names.begin(), names.end());
  return names;
}

py::list trace_records(const NeuroCircuit& c, const std::string& input) {
  ExternalInputs inps =
      parse_input_string(input, c.suppl_input(), c.neurons().size());
  SimTrace trace = simulate_trace(c, inps);
  py::list rows;
  for (const SimTrace::Step& step : trace.steps) {
    py::dict row;
    row["t"] = step.t;
    row["outputs"] = step.outputs;
    py::list pots;
    for (const Rational& p : step.potentials) pots.append(p.str());
    row["potentials"] = pots;
    rows.append(row);
  }
  return rows;
}

py::dict check_from_python(const NeuroCircuit& c, const std::string& property,
                           std::optional<std::size_t> max_len,
                           std::optional<std::size_t> random_count,
                           std::uint64_t seed) {
  auto p = property_from_name(property);
  if (!p) throw py::value_error("unknown property \"" + property + "\"");
  VerifyMode mode = ExhaustiveMode{};
  if (random_count) mode = RandomMode{*random_count, seed};
  Verdict v = verify_bounded(*p, c, default_family(*p, max_len), mode);
  return verdict_to_dict(v, c);
}

}  // namespace

PYBIND11_MODULE(archlab, m) {
  m.doc() = "Exact simulator and bounded property checker for boolean "
            "leaky integrate-and-fire circuits";

  py::register_exception<ConstraintError>(m, "ConstraintError");
  py::register_exception<SyntaxError>(m, "CircuitSyntaxError");
  py::register_exception<SchemaError>(m, "CircuitSchemaError");

  py::class_<NeuroCircuit>(m, "Circuit")
      .def_static("from_json", [](const std::string& text) {
        return parse_circuit(text);
      }, py::arg("text"), "Parse a circuit document")
      .def("to_json", [](const NeuroCircuit& c) { return serialize_circuit(c); })
      .def_property_readonly("time", &NeuroCircuit::time)
      .def_property_readonly("size",
                             [](const NeuroCircuit& c) { return c.neurons().size(); })
      .def_property_readonly("suppl_input", &NeuroCircuit::suppl_input)
      .def("output", [](const NeuroCircuit& c, std::size_t id) {
        const Neuron* n = c.find_by_id(id);
        return n ? n->output() : BoolSeq{};
      }, py::arg("id"),
        "Output history of a neuron, most recent step first")
      .def("cur_pot", [](const NeuroCircuit& c, std::size_t id) {
        const Neuron* n = c.find_by_id(id);
        return (n ? n->cur_pot() : Rational()).str();
      }, py::arg("id"))
      .def("step", [](const NeuroCircuit& c, const std::vector<bool>& bits) {
        if (bits.size() != c.suppl_input())
          throw py::value_error("expected one bit per external source");
        ExternalInput f;
        for (std::size_t j = 0; j < bits.size(); ++j)
          if (bits[j]) f.set(c.neurons().size() + j, true);
        return next_step(c, f);
      }, py::arg("bits"), "One synchronous step; bits by external id ascending")
      .def("classify", &classify_names);

  m.def("simulate", &trace_records, py::arg("circuit"), py::arg("input"),
        "Chronological trace records for a boundary-format input string");
  m.def("classify", &classify_names, py::arg("circuit"));
  m.def("check", &check_from_python, py::arg("circuit"), py::arg("property"),
        py::arg("max_len") = std::nullopt, py::arg("random") = std::nullopt,
        py::arg("seed") = 0,
        "Bounded verification; returns a verdict dictionary");
  m.def("properties", [] {
    std::vector<std::string> names;
    for (PropertyId p : property_catalog())
      names.emplace_back(property_name(p));
    return names;
  }, "Names of the checkable properties");
  m.def("repeat_pattern", [](const std::vector<bool>& pattern, std::size_t n) {
    return repeat_pattern(pattern, n);
  }, py::arg("pattern"), py::arg("n"),
    "Cycle a pattern out to n elements, newest first");
}
