// Command-line front end: simulate circuits, classify their topology, and
// run the bounded property checks over circuit files.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "archlab/archetypes.hpp"
#include "archlab/circuit.hpp"
#include "archlab/circuit_io.hpp"
#include "archlab/errors.hpp"
#include "archlab/properties.hpp"

namespace {

using namespace archlab;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitHypotheses = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
    s.pop_back();
  return s;
}

NeuroCircuit load_circuit(const std::string& path) {
  return parse_circuit(read_file(path));
}

/// Chronological bit string (oldest first) of a reverse-chronological
/// history.
std::string chrono_bits(const BoolSeq& seq) {
  std::string out;
  for (std::size_t i = seq.size(); i-- > 0;) out += seq[i] ? '1' : '0';
  return out;
}

std::optional<std::size_t> env_max_len() {
  const char* raw = std::getenv("ARCHLAB_MAX_LEN");
  if (!raw) return std::nullopt;
  char* end = nullptr;
  unsigned long v = std::strtoul(raw, &end, 10);
  if (end == raw || *end != '\0') return std::nullopt;
  return static_cast<std::size_t>(v);
}

// --- simulate ---------------------------------------------------------------

int run_simulate(const std::string& circuit_path, const std::string& input,
                 const std::string& format) {
  NeuroCircuit circuit = load_circuit(circuit_path);
  ExternalInputs inps =
      parse_input_string(input, circuit.suppl_input(), circuit.neurons().size());
  SimTrace trace = simulate_trace(circuit, inps);
  std::size_t n = circuit.neurons().size();
  if (format == "csv") {
    std::cout << 't';
    for (std::size_t i = 0; i < n; ++i) std::cout << ",y" << i;
    for (std::size_t i = 0; i < n; ++i) std::cout << ",p" << i;
    std::cout << '\n';
    for (const SimTrace::Step& step : trace.steps) {
      std::cout << step.t;
      for (std::size_t i = 0; i < n; ++i)
        std::cout << ',' << (step.outputs[i] ? 1 : 0);
      for (std::size_t i = 0; i < n; ++i)
        std::cout << ',' << step.potentials[i].str();
      std::cout << '\n';
    }
  } else {
    for (const SimTrace::Step& step : trace.steps) {
      std::cout << "{\"t\":" << step.t << ",\"outputs\":[";
      for (std::size_t i = 0; i < n; ++i)
        std::cout << (i ? "," : "") << (step.outputs[i] ? 1 : 0);
      std::cout << "],\"potentials\":[";
      for (std::size_t i = 0; i < n; ++i)
        std::cout << (i ? "," : "") << '"' << step.potentials[i].str() << '"';
      std::cout << "]}\n";
    }
  }
  return kExitOk;
}

// --- classify ---------------------------------------------------------------

int run_classify(const std::string& circuit_path) {
  NeuroCircuit circuit = load_circuit(circuit_path);
  std::vector<std::string> names;
  for (ArchetypeClass a : classify(circuit))
    names.emplace_back(archetype_name(a));
  std::sort(names.begin(), names.end());
  if (names.empty()) {
    std::cout << "none\n";
  } else {
    for (const std::string& name : names) std::cout << name << '\n';
  }
  return kExitOk;
}

// --- check ------------------------------------------------------------------

void print_counterexample(const Counterexample& ce, const NeuroCircuit& c) {
  std::cout << "counterexample: input="
            << format_input_string(ce.inputs, c.suppl_input(),
                                   c.neurons().size())
            << " neuron=" << ce.neuron_id << " t=" << ce.divergent_time
            << " expected="
            << (ce.expected.empty() ? std::string("-")
                                    : chrono_bits(ce.expected))
            << " actual=" << chrono_bits(ce.actual) << '\n';
}

int report_verdict(const Verdict& verdict, std::string_view name,
                   const NeuroCircuit& circuit) {
  switch (verdict.status) {
    case VerdictStatus::Pass:
      std::cout << "PASS " << name << " checked=" << verdict.checked_count
                << '\n';
      return kExitOk;
    case VerdictStatus::Fail:
      std::cout << "FAIL " << name << " checked=" << verdict.checked_count
                << '\n';
      print_counterexample(*verdict.counterexample, circuit);
      return kExitFail;
    case VerdictStatus::HypothesesNotMet:
      std::cout << "HYPOTHESES-NOT-MET \"" << verdict.failed_hypothesis
                << "\"\n";
      return kExitHypotheses;
  }
  return kExitInputError;
}

/// Corrupts the expected output of the family's first input and reports the
/// resulting mismatch; exercises the failure path end to end.
int run_injected_fault(PropertyId p, const NeuroCircuit& circuit,
                       const InputFamily& family, std::string_view name) {
  auto first = family_prefix(family, circuit, 1);
  if (first.empty()) throw SchemaError("family is empty; nothing to corrupt");
  const ExternalInputs& inps = first.front();
  auto expected = expected_outputs(p, circuit, inps);
  if (!expected || expected->empty())
    throw SchemaError("property has no closed-form oracle to corrupt");
  auto [id, seq] = *expected->begin();
  seq.front() = !seq.front();
  BoolSeq actual = output_neuron(circuit, inps, id);
  Verdict verdict;
  verdict.status = VerdictStatus::Fail;
  verdict.checked_count = 1;
  std::size_t len = seq.size();
  std::size_t t = 0;
  while (t < len && seq[len - 1 - t] == actual[len - 1 - t]) ++t;
  verdict.counterexample = Counterexample{inps, id, t, seq, actual};
  return report_verdict(verdict, name, circuit);
}

int run_check(const std::string& circuit_path, const std::string& property,
              std::optional<std::size_t> max_len, std::optional<std::size_t> random_count,
              std::uint64_t seed, bool inject_fault) {
  NeuroCircuit circuit = load_circuit(circuit_path);
  auto p = property_from_name(property);
  if (!p) throw SchemaError("unknown property \"" + property + "\"");
  if (!max_len) max_len = env_max_len();
  InputFamily family = default_family(*p, max_len);
  if (inject_fault) return run_injected_fault(*p, circuit, family, property);
  VerifyMode mode = ExhaustiveMode{};
  if (random_count) mode = RandomMode{*random_count, seed};
  Verdict verdict = verify_bounded(*p, circuit, family, mode);
  return report_verdict(verdict, property, circuit);
}

// --- sweep ------------------------------------------------------------------

using Grid = std::map<std::string, std::vector<std::string>>;

Grid default_grid() {
  return {{"tau", {"1/3", "1/2", "1"}},
          {"leak", {"0", "1/2", "1"}},
          {"w1", {"-1", "-1/2", "-1/4", "1/4", "1/2", "1"}}};
}

Grid load_grid(const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(e.what(), e.byte);
  }
  if (!doc.is_object()) throw SchemaError("grid must be a JSON object");
  Grid grid;
  for (const auto& [key, values] : doc.items()) {
    if (key != "tau" && key != "leak" &&
        !(key.size() > 1 && key[0] == 'w' &&
          key.find_first_not_of("0123456789", 1) == std::string::npos))
      throw SchemaError("unknown grid parameter \"" + key + "\"");
    if (!values.is_array() || values.empty())
      throw SchemaError("grid parameter \"" + key +
                        "\" must be a non-empty array");
    for (const auto& v : values) {
      if (!v.is_string())
        throw SchemaError("grid values must be rational strings");
      grid[key].push_back(v.get<std::string>());
    }
  }
  if (grid.count("w0"))
    throw SchemaError("w0 would be a self-connection; weights start at w1");
  return grid;
}

/// Single-neuron probe circuit for one grid point.
NeuroCircuit grid_circuit(const std::map<std::string, std::string>& point) {
  Rational tau = Rational::parse(point.count("tau") ? point.at("tau") : "1/2");
  Rational leak = Rational::parse(point.count("leak") ? point.at("leak") : "0");
  WeightMap weights;
  std::size_t suppl = 1;
  for (const auto& [key, value] : point) {
    if (key == "tau" || key == "leak") continue;
    std::size_t id = std::stoul(key.substr(1));
    weights.set(id, Rational::parse(value));
    suppl = std::max(suppl, id);
  }
  std::vector<Neuron> neurons;
  neurons.push_back(set_neuron(NeuronFeature(0, weights, leak, tau)));
  return NeuroCircuit::make(std::move(neurons), suppl);
}

int run_sweep(const std::string& grid_path, const std::string& property,
              std::optional<std::size_t> max_len) {
  auto p = property_from_name(property);
  if (!p) throw SchemaError("unknown property \"" + property + "\"");
  if (!max_len) max_len = env_max_len();
  Grid grid = grid_path.empty() ? default_grid() : load_grid(grid_path);

  std::vector<std::string> keys;
  for (const auto& [key, values] : grid) keys.push_back(key);

  bool any_fail = false;
  std::map<std::string, std::string> point;
  std::function<void(std::size_t)> recurse = [&](std::size_t depth) {
    if (depth == keys.size()) {
      NeuroCircuit circuit = grid_circuit(point);
      Verdict v =
          verify_bounded(*p, circuit, default_family(*p, max_len));
      for (const std::string& key : keys)
        std::cout << key << '=' << point.at(key) << ' ';
      switch (v.status) {
        case VerdictStatus::Pass:
          std::cout << "PASS checked=" << v.checked_count << '\n';
          break;
        case VerdictStatus::Fail:
          any_fail = true;
          std::cout << "FAIL checked=" << v.checked_count << '\n';
          print_counterexample(*v.counterexample, circuit);
          break;
        case VerdictStatus::HypothesesNotMet:
          std::cout << "HYPOTHESES-NOT-MET checked=0 \"" << v.failed_hypothesis
                    << "\"\n";
          break;
      }
      return;
    }
    for (const std::string& value : grid.at(keys[depth])) {
      point[keys[depth]] = value;
      recurse(depth + 1);
    }
  };
  recurse(0);
  return any_fail ? kExitFail : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact simulator and bounded property checker for boolean "
               "leaky integrate-and-fire circuits"};
  app.require_subcommand(1);

  std::string circuit_path, input_text, input_file, format = "jsonl";
  std::string property, grid_path;
  std::optional<std::size_t> max_len, random_count;
  std::uint64_t seed = 0;
  bool inject_fault = false;

  CLI::App* simulate = app.add_subcommand("simulate", "Run a circuit on an input string and print the trace");
  simulate->add_option("--circuit", circuit_path, "Circuit file")->required();
  auto* opt_input = simulate->add_option("--input", input_text, "Chronological input string, e.g. 101 or 11;10");
  simulate->add_option("--input-file", input_file, "File holding the input string")->excludes(opt_input);
  simulate->add_option("--format", format, "Trace format")
      ->check(CLI::IsMember({"jsonl", "csv"}));

  CLI::App* classify_cmd = app.add_subcommand("classify", "Print the archetypes a circuit matches");
  classify_cmd->add_option("--circuit", circuit_path, "Circuit file")->required();

  CLI::App* check = app.add_subcommand("check", "Verify a property over the bounded input family");
  check->add_option("--circuit", circuit_path, "Circuit file")->required();
  check->add_option("--property", property, "Property name")->required();
  check->add_option("--max-len", max_len, "Bound on enumerated input length");
  check->add_option("--random", random_count, "Randomized mode with this many draws");
  check->add_option("--seed", seed, "Seed for randomized mode");
  check->add_flag("--inject-fault", inject_fault, "Corrupt the oracle to exercise the failure path")
      ->group("");

  CLI::App* sweep = app.add_subcommand("sweep", "Check a property across a parameter grid of single-input neurons");
  sweep->add_option("--grid", grid_path, "Grid file (JSON map of parameter to rational arrays)");
  sweep->add_option("--property", property, "Property name")->required();
  sweep->add_option("--max-len", max_len, "Bound on enumerated input length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (simulate->parsed()) {
      std::string input = input_text;
      if (!input_file.empty()) input = trimmed(read_file(input_file));
      return run_simulate(circuit_path, input, format);
    }
    if (classify_cmd->parsed()) return run_classify(circuit_path);
    if (check->parsed())
      return run_check(circuit_path, property, max_len, random_count, seed,
                       inject_fault);
    if (sweep->parsed()) return run_sweep(grid_path, property, max_len);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
