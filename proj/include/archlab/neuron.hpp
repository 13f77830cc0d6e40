#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "archlab/rational.hpp"

namespace archlab {

/// Boolean sequence stored reverse-chronologically: index 0 is the most
/// recent step, the last element is time 0. Chronological order exists only
/// at I/O boundaries.
using BoolSeq = std::vector<bool>;

/// Total weight map over environment identifiers, finite support, default 0.
/// Zero entries are never stored, so equal maps compare equal structurally.
class WeightMap {
 public:
  WeightMap() = default;
  WeightMap(std::initializer_list<std::pair<const std::size_t, Rational>> init);

  Rational operator()(std::size_t id) const;
  WeightMap& set(std::size_t id, Rational w);
  const std::map<std::size_t, Rational>& entries() const { return entries_; }

  bool operator==(const WeightMap&) const = default;

 private:
  std::map<std::size_t, Rational> entries_;
};

/// Static description of a neuron: identifier, incoming synapse weights,
/// leak factor and firing threshold. The constructor enforces the record
/// constraints (LeakRange, PosTau, WRange, WId) and throws ConstraintError.
class NeuronFeature {
 public:
  NeuronFeature(std::size_t id, WeightMap weights, Rational leak_factor,
                Rational tau);

  std::size_t id() const { return id_; }
  const WeightMap& weights() const { return weights_; }
  Rational weight(std::size_t source) const { return weights_(source); }
  const Rational& leak_factor() const { return leak_factor_; }
  const Rational& tau() const { return tau_; }

  bool operator==(const NeuronFeature&) const = default;

 private:
  std::size_t id_;
  WeightMap weights_;
  Rational leak_factor_;
  Rational tau_;
};

/// Boolean input assignment over environment identifiers; finite support,
/// default false.
class InputFunction {
 public:
  InputFunction() = default;
  InputFunction(std::initializer_list<std::size_t> true_ids);

  bool operator()(std::size_t id) const;
  InputFunction& set(std::size_t id, bool value);
  const std::vector<std::size_t>& true_ids() const { return on_; }

  bool operator==(const InputFunction&) const = default;

 private:
  std::vector<std::size_t> on_;  // sorted, unique
};

/// One input assignment per time step, reverse-chronological (head = most
/// recent step).
using InputSequence = std::vector<InputFunction>;

/// Dynamic neuron state: spike history, current membrane potential, and the
/// static feature. Instances only arise from set_neuron, next_neuron, or the
/// validated with_history factory, so the head of the output always equals
/// (tau <= cur_pot).
class Neuron {
 public:
  /// Resumes a neuron at an arbitrary point of its history. The output must
  /// be non-empty and its head must match (tau <= cur_pot); otherwise throws
  /// ConstraintError("CurPot_Output").
  static Neuron with_history(BoolSeq output, Rational cur_pot,
                             NeuronFeature feature);

  const BoolSeq& output() const { return output_; }
  const Rational& cur_pot() const { return cur_pot_; }
  const NeuronFeature& feature() const { return feature_; }
  /// Output at the current time (head of the history).
  bool fired() const { return output_.front(); }

 private:
  Neuron(BoolSeq output, Rational cur_pot, NeuronFeature feature);

  BoolSeq output_;
  Rational cur_pot_;
  NeuronFeature feature_;

  friend Neuron set_neuron(NeuronFeature feature);
  friend Neuron next_neuron(const InputFunction& inp, std::size_t len,
                            const Neuron& n);
};

/// Initial neuron: output [0], potential 0.
Neuron set_neuron(NeuronFeature feature);

/// Weighted sum of the active inputs with identifiers below len.
Rational potential(const WeightMap& ws, const InputFunction& inp,
                   std::size_t len);

/// Membrane potential after one step: the weighted input sum, plus the
/// leaked previous potential unless the neuron just fired (firing resets
/// the residue).
Rational next_potential(const Neuron& n, const InputFunction& inp,
                        std::size_t len);

/// Spike decision: true iff tau <= p.
bool next_output(const Neuron& n, const Rational& p);

/// One synchronous step; returns the successor state.
Neuron next_neuron(const InputFunction& inp, std::size_t len, const Neuron& n);

/// Folds next_neuron over the input sequence, oldest step first.
Neuron after_n_steps(const Neuron& n, const InputSequence& inps,
                     std::size_t len);

/// Feature equality up to the environment size: same id, same weights on
/// [0, len), same leak factor and threshold.
bool equiv_feature(const NeuronFeature& a, const NeuronFeature& b,
                   std::size_t len);

/// Feature equivalence plus identical output history and equal potential.
bool equiv_neuron(const Neuron& a, const Neuron& b, std::size_t len);

/// True iff the neuron is equivalent to a freshly set neuron.
bool is_initial_neuron(const Neuron& n, std::size_t len);

/// True iff id < len and every other identifier below len has weight 0.
bool one_input_or_less(const NeuronFeature& nf, std::size_t id,
                       std::size_t len);

/// True iff the output at time 0 is false.
bool well_formed_neuron(const Neuron& n);

}  // namespace archlab
