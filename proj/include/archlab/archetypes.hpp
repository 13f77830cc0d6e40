#pragma once

#include <string_view>
#include <vector>

#include "archlab/circuit.hpp"

namespace archlab {

/// The recognized circuit topologies. Series also covers a series in which
/// every neuron is read as an output.
enum class ArchetypeClass {
  Series,
  ParallelComposition,
  PositiveLoop,
  NegativeLoop,
  Inhibition,
  ContralateralInhibition,
};

/// Kebab-case name used by the CLI and serialized reports.
std::string_view archetype_name(ArchetypeClass a);

/// Chain: one external source feeding neuron 0, each later neuron fed only
/// by its predecessor, all live weights strictly positive.
bool check_series(const NeuroCircuit& c);

/// Hub: one external source feeding neuron 0, every other neuron fed only
/// by neuron 0 with a strictly positive weight.
bool check_parallel_composition(const NeuroCircuit& c);

/// Two neurons activating each other, one external source on neuron 0.
bool check_positive_loop(const NeuroCircuit& c);

/// As the positive loop but neuron 1 inhibits neuron 0.
bool check_negative_loop(const NeuroCircuit& c);

/// Two neurons with private external sources; neuron 0 inhibits neuron 1.
bool check_inhibition(const NeuroCircuit& c);

/// As inhibition plus the reverse inhibiting edge from neuron 1 to neuron 0.
bool check_contra_inhib(const NeuroCircuit& c);

/// Every archetype the circuit matches, in enum order. The predicates
/// overlap for degenerate sizes, so this is a set, not a single label.
std::vector<ArchetypeClass> classify(const NeuroCircuit& c);

}  // namespace archlab
