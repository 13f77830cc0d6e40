#include "archlab/circuit.hpp"

#include <algorithm>
#include <string>

#include "archlab/errors.hpp"

namespace archlab {

NeuroCircuit NeuroCircuit::make(std::vector<Neuron> neurons,
                                std::size_t suppl_input) {
  std::vector<bool> seen(neurons.size(), false);
  std::size_t history = neurons.empty() ? 1 : neurons.front().output().size();
  for (const Neuron& n : neurons) {
    std::size_t id = n.feature().id();
    if (id >= neurons.size())
      throw ConstraintError("IdInfLen",
                            "neuron id " + std::to_string(id) + " outside 0.." +
                                std::to_string(neurons.size() - 1));
    if (seen[id])
      throw ConstraintError("IdNeuroDiff",
                            "duplicate neuron id " + std::to_string(id));
    seen[id] = true;
    if (n.output().size() != history)
      throw ConstraintError("TimeNeuro",
                            "output histories have unequal lengths");
  }
  return NeuroCircuit(history - 1, std::move(neurons), suppl_input);
}

const Neuron* NeuroCircuit::find_by_id(std::size_t id) const {
  for (const Neuron& n : neurons_)
    if (n.feature().id() == id) return &n;
  return nullptr;
}

namespace {

/// Composite environment input for one step: previous outputs for internal
/// identifiers, the external assignment for the rest.
InputFunction composite_input(const NeuroCircuit& c, const ExternalInput& inp) {
  InputFunction f;
  for (const Neuron& n : c.neurons())
    if (n.fired()) f.set(n.feature().id(), true);
  for (std::size_t id : inp.true_ids())
    if (id >= c.neurons().size()) f.set(id, true);
  return f;
}

}  // namespace

NeuroCircuit next_step(const NeuroCircuit& c, const ExternalInput& inp) {
  InputFunction env = composite_input(c, inp);
  std::size_t len = c.env_len();
  std::vector<Neuron> stepped;
  stepped.reserve(c.neurons().size());
  for (const Neuron& n : c.neurons()) stepped.push_back(next_neuron(env, len, n));
  return NeuroCircuit(c.time() + 1, std::move(stepped), c.suppl_input());
}

NeuroCircuit n_steps(const NeuroCircuit& c, const ExternalInputs& inps) {
  NeuroCircuit cur = c;
  for (auto it = inps.rbegin(); it != inps.rend(); ++it)
    cur = next_step(cur, *it);
  return cur;
}

BoolSeq output_neuron(const NeuroCircuit& c, const ExternalInputs& inps,
                      std::size_t id) {
  NeuroCircuit done = n_steps(c, inps);
  const Neuron* n = done.find_by_id(id);
  return n ? n->output() : BoolSeq{};
}

Rational curpot_neuron(const NeuroCircuit& c, const ExternalInputs& inps,
                       std::size_t id) {
  NeuroCircuit done = n_steps(c, inps);
  const Neuron* n = done.find_by_id(id);
  return n ? n->cur_pot() : Rational();
}

InputSequence expand_inputs(const NeuroCircuit& c, const ExternalInputs& inps) {
  InputSequence expanded;
  expanded.reserve(inps.size());
  NeuroCircuit cur = c;
  for (auto it = inps.rbegin(); it != inps.rend(); ++it) {
    expanded.push_back(composite_input(cur, *it));
    cur = next_step(cur, *it);
  }
  std::reverse(expanded.begin(), expanded.end());
  return expanded;
}

bool is_initial_circuit(const NeuroCircuit& c) {
  for (const Neuron& n : c.neurons())
    if (!is_initial_neuron(n, c.env_len())) return false;
  return true;
}

bool well_formed_circuit(const NeuroCircuit& c) {
  for (const Neuron& n : c.neurons())
    if (!well_formed_neuron(n)) return false;
  return true;
}

namespace {

SimTrace::Step snapshot(const NeuroCircuit& c) {
  SimTrace::Step step;
  step.t = c.time();
  step.outputs.resize(c.neurons().size());
  step.potentials.resize(c.neurons().size());
  for (const Neuron& n : c.neurons()) {
    step.outputs[n.feature().id()] = n.fired();
    step.potentials[n.feature().id()] = n.cur_pot();
  }
  return step;
}

}  // namespace

SimTrace simulate_trace(const NeuroCircuit& c, const ExternalInputs& inps) {
  SimTrace trace;
  trace.steps.reserve(inps.size() + 1);
  NeuroCircuit cur = c;
  trace.steps.push_back(snapshot(cur));
  for (auto it = inps.rbegin(); it != inps.rend(); ++it) {
    cur = next_step(cur, *it);
    trace.steps.push_back(snapshot(cur));
  }
  return trace;
}

}  // namespace archlab
