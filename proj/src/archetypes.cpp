#include "archlab/archetypes.hpp"

namespace archlab {

std::string_view archetype_name(ArchetypeClass a) {
  switch (a) {
    case ArchetypeClass::Series:
      return "series";
    case ArchetypeClass::ParallelComposition:
      return "parallel-composition";
    case ArchetypeClass::PositiveLoop:
      return "positive-loop";
    case ArchetypeClass::NegativeLoop:
      return "negative-loop";
    case ArchetypeClass::Inhibition:
      return "inhibition";
    case ArchetypeClass::ContralateralInhibition:
      return "contralateral-inhibition";
  }
  return "?";
}

namespace {

bool positive(const Rational& r) { return r.sign() > 0; }
bool negative(const Rational& r) { return r.sign() < 0; }

/// All weights of n over [0, limit) are zero except possibly `keep`.
bool only_weight(const Neuron& n, std::size_t keep, std::size_t limit) {
  for (const auto& [src, w] : n.feature().weights().entries()) {
    if (src != keep && src < limit && !w.is_zero()) return false;
  }
  return true;
}

}  // namespace

bool check_series(const NeuroCircuit& c) {
  if (c.suppl_input() != 1) return false;
  std::size_t n = c.neurons().size();
  if (n == 0) return false;
  for (const Neuron& neuron : c.neurons()) {
    std::size_t id = neuron.feature().id();
    if (id == 0) {
      // fed by the external source only
      if (!only_weight(neuron, n, n)) return false;
      if (!positive(neuron.feature().weight(n))) return false;
    } else {
      // fed by the predecessor only
      if (!only_weight(neuron, id - 1, n + 1)) return false;
      if (!positive(neuron.feature().weight(id - 1))) return false;
    }
  }
  return true;
}

bool check_parallel_composition(const NeuroCircuit& c) {
  if (c.suppl_input() != 1) return false;
  std::size_t n = c.neurons().size();
  if (n == 0) return false;
  for (const Neuron& neuron : c.neurons()) {
    std::size_t id = neuron.feature().id();
    if (id == 0) {
      if (!only_weight(neuron, n, n)) return false;
      if (!positive(neuron.feature().weight(n))) return false;
    } else {
      if (!only_weight(neuron, 0, n + 1)) return false;
      if (!positive(neuron.feature().weight(0))) return false;
    }
  }
  return true;
}

namespace {

/// Common frame of the two loop archetypes; first_sign picks the sign of
/// the edge from neuron 1 back to neuron 0.
bool check_loop(const NeuroCircuit& c, int first_sign) {
  if (c.suppl_input() != 1 || c.neurons().size() != 2) return false;
  const Neuron* n0 = c.find_by_id(0);
  const Neuron* n1 = c.find_by_id(1);
  if (!n0 || !n1) return false;
  if (n0->feature().weight(1).sign() != first_sign) return false;
  if (!positive(n0->feature().weight(2))) return false;
  if (!positive(n1->feature().weight(0))) return false;
  if (!n1->feature().weight(2).is_zero()) return false;
  return true;
}

}  // namespace

bool check_positive_loop(const NeuroCircuit& c) { return check_loop(c, 1); }

bool check_negative_loop(const NeuroCircuit& c) { return check_loop(c, -1); }

namespace {

bool check_inhib_frame(const NeuroCircuit& c, bool contra) {
  if (c.suppl_input() != 2 || c.neurons().size() != 2) return false;
  const Neuron* n0 = c.find_by_id(0);
  const Neuron* n1 = c.find_by_id(1);
  if (!n0 || !n1) return false;
  const Rational& w01 = n0->feature().weight(1);
  if (contra ? !negative(w01) : !w01.is_zero()) return false;
  if (!positive(n0->feature().weight(2))) return false;
  if (!n0->feature().weight(3).is_zero()) return false;
  if (!negative(n1->feature().weight(0))) return false;
  if (!n1->feature().weight(2).is_zero()) return false;
  if (!positive(n1->feature().weight(3))) return false;
  return true;
}

}  // namespace

bool check_inhibition(const NeuroCircuit& c) {
  return check_inhib_frame(c, false);
}

bool check_contra_inhib(const NeuroCircuit& c) {
  return check_inhib_frame(c, true);
}

std::vector<ArchetypeClass> classify(const NeuroCircuit& c) {
  std::vector<ArchetypeClass> out;
  if (check_series(c)) out.push_back(ArchetypeClass::Series);
  if (check_parallel_composition(c))
    out.push_back(ArchetypeClass::ParallelComposition);
  if (check_positive_loop(c)) out.push_back(ArchetypeClass::PositiveLoop);
  if (check_negative_loop(c)) out.push_back(ArchetypeClass::NegativeLoop);
  if (check_inhibition(c)) out.push_back(ArchetypeClass::Inhibition);
  if (check_contra_inhib(c))
    out.push_back(ArchetypeClass::ContralateralInhibition);
  return out;
}

}  // namespace archlab
