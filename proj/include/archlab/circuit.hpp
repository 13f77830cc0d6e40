#pragma once

#include <cstddef>
#include <vector>

#include "archlab/neuron.hpp"

namespace archlab {

/// Input assignment for the external sources of a circuit. External sources
/// carry the identifiers n .. n+suppl_input-1 where n is the neuron count.
using ExternalInput = InputFunction;
using ExternalInputs = std::vector<ExternalInput>;  // reverse-chronological

/// Synchronous circuit: a set of neurons, the current time, and the number
/// of external input sources. Construction validates that neuron ids are
/// pairwise distinct (IdNeuroDiff), below the neuron count (IdInfLen), and
/// that every output history has length time+1 (TimeNeuro).
class NeuroCircuit {
 public:
  static NeuroCircuit make(std::vector<Neuron> neurons,
                           std::size_t suppl_input);

  std::size_t time() const { return time_; }
  const std::vector<Neuron>& neurons() const { return neurons_; }
  std::size_t suppl_input() const { return suppl_input_; }
  /// Environment size: neuron count plus external source count.
  std::size_t env_len() const { return neurons_.size() + suppl_input_; }

  /// The unique neuron with the given id, or nullptr if id is not a neuron.
  const Neuron* find_by_id(std::size_t id) const;

 private:
  NeuroCircuit(std::size_t time, std::vector<Neuron> neurons,
               std::size_t suppl_input)
      : time_(time), neurons_(std::move(neurons)), suppl_input_(suppl_input) {}

  std::size_t time_;
  std::vector<Neuron> neurons_;
  std::size_t suppl_input_;

  friend NeuroCircuit next_step(const NeuroCircuit& c,
                                const ExternalInput& inp);
};

/// Advances every neuron one step in lock-step. Internal identifiers read
/// the previous step's outputs; external identifiers read inp.
NeuroCircuit next_step(const NeuroCircuit& c, const ExternalInput& inp);

/// Folds next_step over the inputs, oldest step first.
NeuroCircuit n_steps(const NeuroCircuit& c, const ExternalInputs& inps);

/// Output history of neuron id after processing inps; empty if id is not in
/// the circuit.
BoolSeq output_neuron(const NeuroCircuit& c, const ExternalInputs& inps,
                      std::size_t id);

/// Potential of neuron id after processing inps; 0 if id is not in the
/// circuit.
Rational curpot_neuron(const NeuroCircuit& c, const ExternalInputs& inps,
                       std::size_t id);

/// Expands external inputs to full-environment input functions: at each step
/// internal identifiers map to the feeding neuron's previous output and
/// external identifiers map to the supplied bits. A neuron stepped with the
/// expanded sequence evolves exactly as it does inside the circuit.
InputSequence expand_inputs(const NeuroCircuit& c, const ExternalInputs& inps);

bool is_initial_circuit(const NeuroCircuit& c);
bool well_formed_circuit(const NeuroCircuit& c);

/// Per-step snapshot of the whole circuit, including the starting state.
struct SimTrace {
  struct Step {
    std::size_t t;
    BoolSeq outputs;                    // by neuron id ascending
    std::vector<Rational> potentials;   // by neuron id ascending
  };
  std::vector<Step> steps;
};

SimTrace simulate_trace(const NeuroCircuit& c, const ExternalInputs& inps);

}  // namespace archlab
