#include "archlab/neuron.hpp"

#include <algorithm>
#include <cassert>

#include "archlab/errors.hpp"

namespace archlab {

WeightMap::WeightMap(
    std::initializer_list<std::pair<const std::size_t, Rational>> init) {
  for (const auto& [id, w] : init) set(id, w);
}

Rational WeightMap::operator()(std::size_t id) const {
  auto it = entries_.find(id);
  return it == entries_.end() ? Rational() : it->second;
}

WeightMap& WeightMap::set(std::size_t id, Rational w) {
  if (w.is_zero())
    entries_.erase(id);
  else
    entries_[id] = std::move(w);
  return *this;
}

NeuronFeature::NeuronFeature(std::size_t id, WeightMap weights,
                             Rational leak_factor, Rational tau)
    : id_(id),
      weights_(std::move(weights)),
      leak_factor_(std::move(leak_factor)),
      tau_(std::move(tau)) {
  const Rational zero;
  const Rational one = Rational::from_int(1);
  if (leak_factor_ < zero || leak_factor_ > one)
    throw ConstraintError("LeakRange",
                          "leak factor " + leak_factor_.str() + " outside [0,1]");
  if (tau_ <= zero)
    throw ConstraintError("PosTau", "threshold " + tau_.str() + " is not positive");
  for (const auto& [src, w] : weights_.entries()) {
    if (w < -one || w > one)
      throw ConstraintError("WRange", "weight " + std::to_string(id_) + "<-" +
                                          std::to_string(src) + " is " + w.str());
  }
  if (!weights_(id_).is_zero())
    throw ConstraintError("WId", "neuron " + std::to_string(id_) +
                                     " has a self-connection of weight " +
                                     weights_(id_).str());
}

InputFunction::InputFunction(std::initializer_list<std::size_t> true_ids) {
  for (std::size_t id : true_ids) set(id, true);
}

bool InputFunction::operator()(std::size_t id) const {
  return std::binary_search(on_.begin(), on_.end(), id);
}

InputFunction& InputFunction::set(std::size_t id, bool value) {
  auto it = std::lower_bound(on_.begin(), on_.end(), id);
  bool present = it != on_.end() && *it == id;
  if (value && !present) on_.insert(it, id);
  if (!value && present) on_.erase(it);
  return *this;
}

Neuron::Neuron(BoolSeq output, Rational cur_pot, NeuronFeature feature)
    : output_(std::move(output)),
      cur_pot_(std::move(cur_pot)),
      feature_(std::move(feature)) {
  assert(!output_.empty());
  assert(output_.front() == (feature_.tau() <= cur_pot_));
}

Neuron Neuron::with_history(BoolSeq output, Rational cur_pot,
                            NeuronFeature feature) {
  if (output.empty())
    throw ConstraintError("CurPot_Output", "output history is empty");
  if (output.front() != (feature.tau() <= cur_pot))
    throw ConstraintError("CurPot_Output",
                          "head of output does not match tau <= cur_pot");
  return Neuron(std::move(output), std::move(cur_pot), std::move(feature));
}

Neuron set_neuron(NeuronFeature feature) {
  return Neuron(BoolSeq{false}, Rational(), std::move(feature));
}

Rational potential(const WeightMap& ws, const InputFunction& inp,
                   std::size_t len) {
  Rational sum;
  // true_ids is sorted, so everything from the first out-of-range id on is
  // outside the environment
  for (std::size_t id : inp.true_ids()) {
    if (id >= len) break;
    sum = sum + ws(id);
  }
  return sum;
}

Rational next_potential(const Neuron& n, const InputFunction& inp,
                        std::size_t len) {
  Rational p = potential(n.feature().weights(), inp, len);
  if (n.feature().tau() <= n.cur_pot()) return p;
  return p + n.feature().leak_factor() * n.cur_pot();
}

bool next_output(const Neuron& n, const Rational& p) {
  return n.feature().tau() <= p;
}

Neuron next_neuron(const InputFunction& inp, std::size_t len, const Neuron& n) {
  Rational p = next_potential(n, inp, len);
  BoolSeq output;
  output.reserve(n.output().size() + 1);
  output.push_back(next_output(n, p));
  output.insert(output.end(), n.output().begin(), n.output().end());
  return Neuron(std::move(output), std::move(p), n.feature());
}

Neuron after_n_steps(const Neuron& n, const InputSequence& inps,
                     std::size_t len) {
  Neuron cur = n;
  for (auto it = inps.rbegin(); it != inps.rend(); ++it)
    cur = next_neuron(*it, len, cur);
  return cur;
}

bool equiv_feature(const NeuronFeature& a, const NeuronFeature& b,
                   std::size_t len) {
  if (a.id() != b.id()) return false;
  if (a.leak_factor() != b.leak_factor() || a.tau() != b.tau()) return false;
  for (std::size_t id = 0; id < len; ++id)
    if (a.weight(id) != b.weight(id)) return false;
  return true;
}

bool equiv_neuron(const Neuron& a, const Neuron& b, std::size_t len) {
  return equiv_feature(a.feature(), b.feature(), len) &&
         a.output() == b.output() && a.cur_pot() == b.cur_pot();
}

bool is_initial_neuron(const Neuron& n, std::size_t len) {
  return equiv_neuron(n, set_neuron(n.feature()), len);
}

bool one_input_or_less(const NeuronFeature& nf, std::size_t id,
                       std::size_t len) {
  if (id >= len) return false;
  for (const auto& [src, w] : nf.weights().entries()) {
    if (src != id && src < len && !w.is_zero()) return false;
  }
  return true;
}

bool well_formed_neuron(const Neuron& n) { return n.output().back() == false; }

}  // namespace archlab
