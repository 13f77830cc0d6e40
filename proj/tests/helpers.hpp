#pragma once

// Shared fixtures for the unit and acceptance suites: canned circuits,
// bit-string conversions, random generators, and a CLI capture harness.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "archlab/archetypes.hpp"
#include "archlab/circuit.hpp"
#include "archlab/circuit_io.hpp"
#include "archlab/neuron.hpp"
#include "archlab/properties.hpp"
#include "archlab/rational.hpp"

namespace th {

using namespace archlab;

inline Rational Q(const char* text) { return Rational::parse(text); }

/// Reverse-chronological bit sequence from a string whose first character is
/// the most recent step (the order worked examples are written in).
inline BoolSeq bits(std::string_view s) {
  BoolSeq out;
  out.reserve(s.size());
  for (char c : s) out.push_back(c == '1');
  return out;
}

inline std::string bitstr(const BoolSeq& seq) {
  std::string out;
  for (bool b : seq) out += b ? '1' : '0';
  return out;
}

/// Input sequence driving a single identifier with the given bits.
inline InputSequence seq_at(const BoolSeq& bit_seq, std::size_t id) {
  InputSequence out;
  out.reserve(bit_seq.size());
  for (bool b : bit_seq) {
    InputFunction f;
    if (b) f.set(id, true);
    out.push_back(f);
  }
  return out;
}

/// len steps with every listed identifier true.
inline ExternalInputs steps_on(std::size_t len,
                               std::initializer_list<std::size_t> ids) {
  ExternalInput f;
  for (std::size_t id : ids) f.set(id, true);
  return ExternalInputs(len, f);
}

// --- canned circuits --------------------------------------------------------

inline NeuroCircuit one_neuron_circuit(const char* tau, const char* w,
                                       const char* lk) {
  WeightMap weights;
  weights.set(1, Q(w));
  std::vector<Neuron> ns;
  ns.push_back(set_neuron(NeuronFeature(0, weights, Q(lk), Q(tau))));
  return NeuroCircuit::make(std::move(ns), 1);
}

inline NeuroCircuit delayer_circuit() {
  return one_neuron_circuit("1/2", "1", "1/2");
}

/// Chain of n neurons, all live weights 1, tau 1/2.
inline NeuroCircuit series_circuit(std::size_t n, const char* lk = "0") {
  std::vector<Neuron> ns;
  for (std::size_t id = 0; id < n; ++id) {
    WeightMap w;
    w.set(id == 0 ? n : id - 1, Q("1"));
    ns.push_back(set_neuron(NeuronFeature(id, w, Q(lk), Q("1/2"))));
  }
  return NeuroCircuit::make(std::move(ns), 1);
}

/// Hub neuron 0 plus `leaves` neurons each fed by it.
inline NeuroCircuit parallel_circuit(std::size_t leaves) {
  std::vector<Neuron> ns;
  std::size_t n = leaves + 1;
  WeightMap hub;
  hub.set(n, Q("1"));
  ns.push_back(set_neuron(NeuronFeature(0, hub, Q("0"), Q("1/2"))));
  for (std::size_t id = 1; id < n; ++id) {
    WeightMap w;
    w.set(0, Q("1"));
    ns.push_back(set_neuron(NeuronFeature(id, w, Q("0"), Q("1/2"))));
  }
  return NeuroCircuit::make(std::move(ns), 1);
}

inline NeuroCircuit two_neuron_loop(const char* w01, const char* w02,
                                    const char* w10, const char* lk0) {
  WeightMap w0;
  w0.set(1, Q(w01));
  w0.set(2, Q(w02));
  WeightMap w1;
  w1.set(0, Q(w10));
  std::vector<Neuron> ns;
  ns.push_back(set_neuron(NeuronFeature(0, w0, Q(lk0), Q("1/2"))));
  ns.push_back(set_neuron(NeuronFeature(1, w1, Q("1/2"), Q("1/2"))));
  return NeuroCircuit::make(std::move(ns), 1);
}

inline NeuroCircuit positive_loop() {
  return two_neuron_loop("1/2", "1", "1", "1/2");
}

inline NeuroCircuit negative_loop_case1() {
  return two_neuron_loop("-1", "1", "1", "1/2");
}

inline NeuroCircuit negative_loop_case2() {
  return two_neuron_loop("-1/4", "1/2", "1", "1/2");
}

inline NeuroCircuit two_neuron_inhib(const char* w01, const char* w02,
                                     const char* w10, const char* w13) {
  WeightMap w0;
  w0.set(1, Q(w01));
  w0.set(2, Q(w02));
  WeightMap w1;
  w1.set(0, Q(w10));
  w1.set(3, Q(w13));
  std::vector<Neuron> ns;
  ns.push_back(set_neuron(NeuronFeature(0, w0, Q("1/2"), Q("1/2"))));
  ns.push_back(set_neuron(NeuronFeature(1, w1, Q("1/2"), Q("1/2"))));
  return NeuroCircuit::make(std::move(ns), 2);
}

inline NeuroCircuit inhibition_circuit() {
  return two_neuron_inhib("0", "1", "-1", "1");
}

inline NeuroCircuit contra_circuit() {
  return two_neuron_inhib("-1/2", "1", "-1", "1");
}

/// Two neurons feeding each other, two external sources, mixed signs;
/// matches no archetype.
inline NeuroCircuit mixed_circuit() {
  WeightMap w0;
  w0.set(1, Q("1/3"));
  w0.set(2, Q("-2/3"));
  w0.set(3, Q("1"));
  WeightMap w1;
  w1.set(0, Q("-1/2"));
  w1.set(2, Q("3/4"));
  std::vector<Neuron> ns;
  ns.push_back(set_neuron(NeuronFeature(0, w0, Q("1/3"), Q("2/3"))));
  ns.push_back(set_neuron(NeuronFeature(1, w1, Q("1"), Q("1/4"))));
  return NeuroCircuit::make(std::move(ns), 2);
}

/// Closed two-neuron system with no external sources.
inline NeuroCircuit closed_circuit() {
  WeightMap w0;
  w0.set(1, Q("1/2"));
  WeightMap w1;
  w1.set(0, Q("-1/2"));
  std::vector<Neuron> ns;
  ns.push_back(set_neuron(NeuronFeature(0, w0, Q("1/2"), Q("1/3"))));
  ns.push_back(set_neuron(NeuronFeature(1, w1, Q("0"), Q("1"))));
  return NeuroCircuit::make(std::move(ns), 0);
}

inline std::vector<NeuroCircuit> corpus() {
  std::vector<NeuroCircuit> out;
  out.push_back(delayer_circuit());
  out.push_back(one_neuron_circuit("1/2", "1/4", "1/2"));  // filter
  out.push_back(one_neuron_circuit("1", "-1/2", "1"));     // inhibited
  out.push_back(series_circuit(3));
  out.push_back(series_circuit(5, "1/2"));
  out.push_back(parallel_circuit(2));
  out.push_back(parallel_circuit(3));
  out.push_back(positive_loop());
  out.push_back(negative_loop_case1());
  out.push_back(negative_loop_case2());
  out.push_back(inhibition_circuit());
  out.push_back(contra_circuit());
  out.push_back(mixed_circuit());
  out.push_back(closed_circuit());
  return out;
}

// --- random generation -------------------------------------------------------

struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}
  std::size_t below(std::size_t n) { return g() % n; }           // [0, n)
  std::int64_t range(std::int64_t lo, std::int64_t hi) {         // inclusive
    return lo + static_cast<std::int64_t>(g() % static_cast<std::uint64_t>(
                                                    hi - lo + 1));
  }
  bool flip() { return g() & 1ull; }
};

/// Random weight in [-1,1]; sign_mode +1 forces >= 0, -1 forces <= 0.
inline Rational random_weight(Rng& rng, int sign_mode) {
  std::int64_t den = rng.range(1, 4);
  std::int64_t num = rng.range(sign_mode > 0 ? 0 : -den,
                               sign_mode < 0 ? 0 : den);
  return Rational::ratio(num, den);
}

inline NeuronFeature random_feature(Rng& rng, std::size_t id, std::size_t env,
                                    int sign_mode = 0) {
  WeightMap weights;
  for (std::size_t src = 0; src < env; ++src) {
    if (src == id || rng.flip()) continue;
    weights.set(src, random_weight(rng, sign_mode));
  }
  std::int64_t tden = rng.range(1, 4);
  Rational tau = Rational::ratio(rng.range(1, 2 * tden), tden);
  std::int64_t lden = rng.range(1, 4);
  Rational leak = Rational::ratio(rng.range(0, lden), lden);
  return NeuronFeature(id, std::move(weights), std::move(leak), std::move(tau));
}

inline InputFunction random_input(Rng& rng, std::size_t env) {
  InputFunction f;
  for (std::size_t id = 0; id < env; ++id)
    if (rng.flip()) f.set(id, true);
  return f;
}

inline InputSequence random_inputs(Rng& rng, std::size_t env,
                                   std::size_t max_len) {
  InputSequence out(rng.below(max_len + 1));
  for (InputFunction& f : out) f = random_input(rng, env);
  return out;
}

/// Random valid circuit: 1..4 neurons in shuffled list order, 0..2 external
/// sources; optionally advanced a few random steps.
inline NeuroCircuit random_circuit(Rng& rng, bool initial = true) {
  std::size_t n = 1 + rng.below(4);
  std::size_t suppl = rng.below(3);
  std::vector<std::size_t> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i;
  for (std::size_t i = n; i-- > 1;) std::swap(ids[i], ids[rng.below(i + 1)]);
  std::vector<Neuron> ns;
  for (std::size_t id : ids)
    ns.push_back(set_neuron(random_feature(rng, id, n + suppl)));
  NeuroCircuit c = NeuroCircuit::make(std::move(ns), suppl);
  if (!initial) {
    std::size_t steps = rng.below(4);
    for (std::size_t k = 0; k < steps; ++k)
      c = next_step(c, random_input(rng, n + suppl));
  }
  return c;
}

/// Boundary-format strings of the first entries of a family, for pinning
/// enumeration order.
inline std::vector<std::string> family_prefix_strings(const InputFamily& fam,
                                                      const NeuroCircuit& c,
                                                      std::size_t limit) {
  std::vector<std::string> out;
  for (const ExternalInputs& inps : family_prefix(fam, c, limit))
    out.push_back(
        format_input_string(inps, c.suppl_input(), c.neurons().size()));
  return out;
}

// --- CLI harness --------------------------------------------------------------

struct RunResult {
  int exit_code = -1;
  std::string out;
};

/// Runs the built CLI with the given arguments, capturing stdout. `env` is
/// prefixed verbatim (e.g. "ARCHLAB_MAX_LEN=4").
inline RunResult run_cli(const std::vector<std::string>& args,
                         const std::string& env = "") {
  std::string cmd = env.empty() ? std::string() : env + " ";
  cmd += ARCHLAB_CLI_PATH;
  for (const std::string& a : args) cmd += " '" + a + "'";
  cmd += " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
    result.out.append(buf, got);
  int status = pclose(pipe);
  result.exit_code = WEXITSTATUS(status);
  return result;
}

inline std::string write_temp(const std::string& name,
                              const std::string& content) {
  std::string path = "/tmp/archlab_" + name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  return path;
}

}  // namespace th
