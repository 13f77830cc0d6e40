#include "archlab/properties.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>
#include <stdexcept>

#include "archlab/archetypes.hpp"
#include "archlab/errors.hpp"

namespace archlab {

// ---------------------------------------------------------------------------
// Sequence utilities.

BoolSeq repeat_value(bool v, std::size_t n) { return BoolSeq(n, v); }

BoolSeq repeat_pattern(const BoolSeq& pattern, std::size_t n) {
  if (n == 0) return {};
  if (pattern.empty())
    throw std::invalid_argument("repeat_pattern: empty pattern");
  BoolSeq out(n);
  for (std::size_t k = 0; k < n; ++k)
    out[k] = pattern[(n - 1 - k) % pattern.size()];
  return out;
}

BoolSeq suffix(const BoolSeq& l, std::size_t i) {
  if (i >= l.size()) return {};
  return BoolSeq(l.begin() + static_cast<std::ptrdiff_t>(i), l.end());
}

std::size_t count_true(const BoolSeq& l) {
  return static_cast<std::size_t>(std::count(l.begin(), l.end(), true));
}

// ---------------------------------------------------------------------------
// Catalog.

namespace {

struct CatalogEntry {
  PropertyId id;
  std::string_view name;
};

constexpr std::array<CatalogEntry, 15> kCatalog{{
    {PropertyId::DelayerEffect, "delayer-effect"},
    {PropertyId::FilteringEffect, "filtering-effect"},
    {PropertyId::GeneralBehavior, "general-behavior"},
    {PropertyId::SpikeDecreasing, "spike-decreasing"},
    {PropertyId::InhibitorEffect, "inhibitor-effect"},
    {PropertyId::AlwaysNonNegCurPot, "always-non-neg-cur-pot"},
    {PropertyId::SeriesDelayer, "series-delayer"},
    {PropertyId::ParallelDelayer0, "parallel-delayer-0"},
    {PropertyId::ParallelDelayerSucc, "parallel-delayer-succ"},
    {PropertyId::PLZeros, "pl-zeros"},
    {PropertyId::PLTwoOnes, "pl-two-ones"},
    {PropertyId::PLSingleOne, "pl-single-one"},
    {PropertyId::NLCase1, "nl-case1"},
    {PropertyId::NLCase2, "nl-case2"},
    {PropertyId::CIWinnerTakesAll, "ci-winner-takes-all"},
}};

}  // namespace

std::string_view property_name(PropertyId p) {
  for (const auto& e : kCatalog)
    if (e.id == p) return e.name;
  return "?";
}

std::optional<PropertyId> property_from_name(std::string_view name) {
  for (const auto& e : kCatalog)
    if (e.name == name) return e.id;
  return std::nullopt;
}

const std::vector<PropertyId>& property_catalog() {
  static const std::vector<PropertyId> ids = [] {
    std::vector<PropertyId> v;
    for (const auto& e : kCatalog) v.push_back(e.id);
    return v;
  }();
  return ids;
}

// ---------------------------------------------------------------------------
// Families.

InputFamily InputFamily::all_sequences(std::size_t max_len) {
  return {Kind::AllSequences, max_len, 0};
}
InputFamily InputFamily::all_zeros(std::size_t max_len) {
  return {Kind::AllZeros, max_len, 0};
}
InputFamily InputFamily::all_ones(std::size_t max_len) {
  return {Kind::AllOnes, max_len, 0};
}
InputFamily InputFamily::zeros_with_one_at(std::size_t max_newer,
                                           std::size_t max_older) {
  return {Kind::ZerosWithOneAt, max_newer, max_older};
}
InputFamily InputFamily::zeros_then_two_ones_then_any(std::size_t max_newer,
                                                      std::size_t max_older) {
  return {Kind::ZerosThenTwoOnesThenAny, max_newer, max_older};
}

InputFamily default_family(PropertyId p, std::optional<std::size_t> max_len) {
  switch (p) {
    case PropertyId::PLZeros:
      return InputFamily::all_zeros(max_len.value_or(12));
    case PropertyId::PLTwoOnes:
      return InputFamily::zeros_then_two_ones_then_any(max_len.value_or(6),
                                                       max_len.value_or(6));
    case PropertyId::PLSingleOne:
      return InputFamily::zeros_with_one_at(max_len.value_or(6),
                                            max_len.value_or(6));
    case PropertyId::NLCase1:
    case PropertyId::NLCase2:
    case PropertyId::CIWinnerTakesAll:
      return InputFamily::all_ones(max_len.value_or(12));
    default:
      return InputFamily::all_sequences(max_len.value_or(8));
  }
}

// ---------------------------------------------------------------------------
// Hypotheses.

namespace {

const Rational kZero;

/// Neurons sorted by identifier.
std::vector<const Neuron*> by_id(const NeuroCircuit& c) {
  std::vector<const Neuron*> out;
  out.reserve(c.neurons().size());
  for (std::size_t id = 0; id < c.neurons().size(); ++id)
    out.push_back(c.find_by_id(id));
  return out;
}

/// Identifiers below env with a nonzero weight.
std::vector<std::size_t> live_sources(const NeuronFeature& nf,
                                      std::size_t env) {
  std::vector<std::size_t> out;
  for (const auto& [src, w] : nf.weights().entries())
    if (src < env) out.push_back(src);
  return out;
}

/// The single source a one-input neuron listens to. With no live weight the
/// first external source stands in (any identifier works; all are inert).
std::optional<std::size_t> single_source(const NeuronFeature& nf,
                                         std::size_t n_neurons,
                                         std::size_t env) {
  auto live = live_sources(nf, env);
  if (live.size() > 1) return std::nullopt;
  if (live.size() == 1) return live[0];
  return n_neurons < env ? n_neurons : nf.id();
}

bool is_neuron_scope(PropertyId p) {
  switch (p) {
    case PropertyId::DelayerEffect:
    case PropertyId::FilteringEffect:
    case PropertyId::GeneralBehavior:
    case PropertyId::SpikeDecreasing:
    case PropertyId::InhibitorEffect:
    case PropertyId::AlwaysNonNegCurPot:
      return true;
    default:
      return false;
  }
}

/// Per-neuron hypotheses of the neuron-scope properties. On failure returns
/// a message naming the first failed one.
std::optional<std::string> neuron_hypothesis_failure(PropertyId p,
                                                     const NeuronFeature& nf,
                                                     std::size_t n_neurons,
                                                     std::size_t env) {
  std::string who = "neuron " + std::to_string(nf.id()) + ": ";
  switch (p) {
    case PropertyId::DelayerEffect: {
      auto src = single_source(nf, n_neurons, env);
      if (!src) return who + "one input or less";
      if (!(nf.tau() <= nf.weight(*src)))
        return who + "w(" + std::to_string(*src) + ") >= tau";
      return std::nullopt;
    }
    case PropertyId::FilteringEffect: {
      auto src = single_source(nf, n_neurons, env);
      if (!src) return who + "one input or less";
      if (!(nf.weight(*src) < nf.tau()))
        return who + "w(" + std::to_string(*src) + ") < tau";
      return std::nullopt;
    }
    case PropertyId::GeneralBehavior:
    case PropertyId::SpikeDecreasing: {
      if (!single_source(nf, n_neurons, env)) return who + "one input or less";
      return std::nullopt;
    }
    case PropertyId::InhibitorEffect: {
      for (std::size_t src : live_sources(nf, env))
        if (nf.weight(src) > kZero) return who + "weights <= 0";
      return std::nullopt;
    }
    case PropertyId::AlwaysNonNegCurPot: {
      for (std::size_t src : live_sources(nf, env))
        if (nf.weight(src) < kZero) return who + "weights >= 0";
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

/// Neurons the property's conclusion is checked on.
std::vector<const Neuron*> qualifying_neurons(PropertyId p,
                                              const NeuroCircuit& c) {
  std::vector<const Neuron*> out;
  for (const Neuron* n : by_id(c)) {
    if (!neuron_hypothesis_failure(p, n->feature(), c.neurons().size(),
                                   c.env_len()))
      out.push_back(n);
  }
  return out;
}

std::optional<std::string> archetype_hypothesis_failure(PropertyId p,
                                                        const NeuroCircuit& c) {
  const std::size_t n = c.neurons().size();
  auto weight = [&](std::size_t id, std::size_t src) {
    return c.find_by_id(id)->feature().weight(src);
  };
  auto tau = [&](std::size_t id) { return c.find_by_id(id)->feature().tau(); };

  switch (p) {
    case PropertyId::SeriesDelayer: {
      if (!check_series(c)) return std::string("series archetype");
      if (!is_initial_circuit(c)) return std::string("initial circuit");
      if (!(tau(0) <= weight(0, n))) return std::string("w0(ext) >= tau0");
      for (std::size_t id = 1; id < n; ++id)
        if (!(tau(id) <= weight(id, id - 1)))
          return "w" + std::to_string(id) + "(" + std::to_string(id - 1) +
                 ") >= tau" + std::to_string(id);
      return std::nullopt;
    }
    case PropertyId::ParallelDelayer0:
    case PropertyId::ParallelDelayerSucc: {
      if (!check_parallel_composition(c))
        return std::string("parallel-composition archetype");
      if (!is_initial_circuit(c)) return std::string("initial circuit");
      if (!(tau(0) <= weight(0, n))) return std::string("w0(ext) >= tau0");
      if (p == PropertyId::ParallelDelayerSucc) {
        for (std::size_t id = 1; id < n; ++id)
          if (!(tau(id) <= weight(id, 0)))
            return "w" + std::to_string(id) + "(0) >= tau" + std::to_string(id);
      }
      return std::nullopt;
    }
    case PropertyId::PLZeros:
    case PropertyId::PLTwoOnes:
    case PropertyId::PLSingleOne: {
      if (!check_positive_loop(c)) return std::string("positive-loop archetype");
      if (!is_initial_circuit(c)) return std::string("initial circuit");
      if (!(tau(0) <= weight(0, 2))) return std::string("w0(2) >= tau0");
      if (!(tau(0) <= weight(0, 1))) return std::string("w0(1) >= tau0");
      if (!(tau(1) <= weight(1, 0))) return std::string("w1(0) >= tau1");
      return std::nullopt;
    }
    case PropertyId::NLCase1: {
      if (!check_negative_loop(c)) return std::string("negative-loop archetype");
      if (!is_initial_circuit(c)) return std::string("initial circuit");
      if (!(tau(0) <= weight(0, 2))) return std::string("w0(2) >= tau0");
      if (!(tau(1) <= weight(1, 0))) return std::string("w1(0) >= tau1");
      if (weight(0, 1) != -weight(0, 2)) return std::string("w0(1) = -w0(2)");
      return std::nullopt;
    }
    case PropertyId::NLCase2: {
      if (!check_negative_loop(c)) return std::string("negative-loop archetype");
      if (!is_initial_circuit(c)) return std::string("initial circuit");
      if (!(tau(0) <= weight(0, 2))) return std::string("w0(2) >= tau0");
      if (!(tau(1) <= weight(1, 0))) return std::string("w1(0) >= tau1");
      Rational sum = weight(0, 1) + weight(0, 2);
      if (sum < kZero) return std::string("w0(1)+w0(2) >= 0");
      Rational one_plus_lk =
          Rational::from_int(1) + c.find_by_id(0)->feature().leak_factor();
      if (!(one_plus_lk * sum < tau(0)))
        return std::string("(1+lk0)*(w0(1)+w0(2)) < tau0");
      return std::nullopt;
    }
    case PropertyId::CIWinnerTakesAll: {
      if (!check_contra_inhib(c))
        return std::string("contralateral-inhibition archetype");
      if (!is_initial_circuit(c)) return std::string("initial circuit");
      if (!(tau(0) <= weight(0, 1) + weight(0, 2)))
        return std::string("w0(1)+w0(2) >= tau0");
      if (!(tau(1) <= weight(1, 3))) return std::string("w1(3) >= tau1");
      if (weight(1, 0) + weight(1, 3) > kZero)
        return std::string("w1(0)+w1(3) <= 0");
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

std::optional<std::string> failed_hypothesis(PropertyId p,
                                             const NeuroCircuit& c) {
  if (is_neuron_scope(p)) {
    if (!is_initial_circuit(c)) return std::string("initial circuit");
    std::optional<std::string> first;
    for (const Neuron* n : by_id(c)) {
      auto why = neuron_hypothesis_failure(p, n->feature(), c.neurons().size(),
                                           c.env_len());
      if (!why) return std::nullopt;  // at least one neuron qualifies
      if (!first) first = why;
    }
    return first ? first : std::optional<std::string>("empty circuit");
  }
  return archetype_hypothesis_failure(p, c);
}

bool hypotheses_hold(PropertyId p, const NeuroCircuit& c) {
  return !failed_hypothesis(p, c);
}

// ---------------------------------------------------------------------------
// Expected outputs.

namespace {

BoolSeq cat(BoolSeq a, const BoolSeq& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Per-step bits seen at one identifier, reverse-chronological.
BoolSeq project(const InputSequence& inps, std::size_t id) {
  BoolSeq out;
  out.reserve(inps.size());
  for (const InputFunction& f : inps) out.push_back(f(id));
  return out;
}

/// Decomposition of a positive-loop input around its trigger.
struct TwoOnesSplit {
  std::size_t newer = 0;  // free segment after the pair
  std::size_t older = 0;  // zeros before the pair
};

/// bits reverse-chronological: matches any(a) ++ [1,1] ++ zeros(b)?
std::optional<TwoOnesSplit> split_two_ones(const BoolSeq& bits) {
  // chronological scan for the first spike
  std::size_t L = bits.size();
  for (std::size_t t = 0; t < L; ++t) {
    if (bits[L - 1 - t]) {
      if (t + 1 >= L || !bits[L - 1 - (t + 1)]) return std::nullopt;
      return TwoOnesSplit{L - (t + 2), t};
    }
  }
  return std::nullopt;
}

/// bits reverse-chronological: matches zeros(a) ++ [1] ++ zeros(b)?
std::optional<TwoOnesSplit> split_single_one(const BoolSeq& bits) {
  if (count_true(bits) != 1) return std::nullopt;
  std::size_t L = bits.size();
  for (std::size_t t = 0; t < L; ++t)
    if (bits[L - 1 - t]) return TwoOnesSplit{L - 1 - t, t};
  return std::nullopt;
}

/// Input-shape hypotheses; the circuit-side ones are assumed to hold.
std::optional<std::string> input_hypothesis_failure(PropertyId p,
                                                    const NeuroCircuit& c,
                                                    const ExternalInputs& inps) {
  const std::size_t n = c.neurons().size();
  switch (p) {
    case PropertyId::PLZeros: {
      for (const ExternalInput& f : inps)
        if (f(n)) return std::string("input all zeros");
      return std::nullopt;
    }
    case PropertyId::PLTwoOnes: {
      if (!split_two_ones(project(inps, n)))
        return std::string("input zeros then [1;1] then any");
      return std::nullopt;
    }
    case PropertyId::PLSingleOne: {
      if (!split_single_one(project(inps, n)))
        return std::string("input contains exactly one 1");
      return std::nullopt;
    }
    case PropertyId::NLCase1:
    case PropertyId::NLCase2: {
      for (const ExternalInput& f : inps)
        if (!f(n)) return std::string("input all ones");
      return std::nullopt;
    }
    case PropertyId::CIWinnerTakesAll: {
      for (const ExternalInput& f : inps)
        if (!f(n) || !f(n + 1)) return std::string("input all ones");
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

std::map<std::size_t, BoolSeq> closed_forms(PropertyId p,
                                            const NeuroCircuit& c,
                                            const ExternalInputs& inps) {
  const std::size_t n = c.neurons().size();
  const std::size_t L = inps.size();
  std::map<std::size_t, BoolSeq> out;
  switch (p) {
    case PropertyId::SeriesDelayer: {
      BoolSeq inp = project(inps, n);
      for (std::size_t id = 0; id < n; ++id) {
        out[id] = id <= L ? cat(suffix(inp, id), repeat_value(false, id + 1))
                          : repeat_value(false, L + 1);
      }
      return out;
    }
    case PropertyId::ParallelDelayer0: {
      BoolSeq inp = project(inps, n);
      out[0] = cat(std::move(inp), {false});
      return out;
    }
    case PropertyId::ParallelDelayerSucc: {
      BoolSeq inp = project(inps, n);
      BoolSeq leaf =
          L > 0 ? cat(suffix(inp, 1), {false, false}) : BoolSeq{false};
      for (std::size_t id = 1; id < n; ++id) out[id] = leaf;
      return out;
    }
    case PropertyId::PLZeros: {
      out[0] = repeat_value(false, L + 1);
      out[1] = repeat_value(false, L + 1);
      return out;
    }
    case PropertyId::PLTwoOnes: {
      auto split = split_two_ones(project(inps, n));
      assert(split);
      out[0] = cat(repeat_value(true, split->newer + 2),
                   repeat_value(false, split->older + 1));
      out[1] = cat(repeat_value(true, split->newer + 1),
                   repeat_value(false, split->older + 2));
      return out;
    }
    case PropertyId::PLSingleOne: {
      auto split = split_single_one(project(inps, n));
      assert(split);
      out[0] = cat(repeat_pattern({true, false}, split->newer + 1),
                   repeat_value(false, split->older + 1));
      out[1] = cat(repeat_pattern({true, false}, split->newer),
                   repeat_value(false, split->older + 2));
      return out;
    }
    case PropertyId::NLCase1:
    case PropertyId::NLCase2: {
      out[0] = repeat_pattern({false, true, true, false}, L + 1);
      out[1] = repeat_pattern({false, false, true, true}, L + 1);
      return out;
    }
    case PropertyId::CIWinnerTakesAll: {
      out[0] = cat(repeat_value(true, L), {false});
      out[1] = L == 0 ? BoolSeq{false}
                      : cat(repeat_value(false, L - 1), {true, false});
      return out;
    }
    default:
      return out;
  }
}

bool has_closed_form(PropertyId p) {
  switch (p) {
    case PropertyId::FilteringEffect:
    case PropertyId::GeneralBehavior:
    case PropertyId::SpikeDecreasing:
    case PropertyId::AlwaysNonNegCurPot:
      return false;
    default:
      return true;
  }
}

}  // namespace

std::optional<std::map<std::size_t, BoolSeq>> expected_outputs(
    PropertyId p, const NeuroCircuit& c, const ExternalInputs& inps) {
  if (auto why = failed_hypothesis(p, c)) throw HypothesesNotMet(*why);
  if (auto why = input_hypothesis_failure(p, c, inps))
    throw HypothesesNotMet(*why);
  if (!has_closed_form(p)) return std::nullopt;
  if (is_neuron_scope(p)) {
    // delayer and inhibitor: per qualifying neuron
    std::map<std::size_t, BoolSeq> out;
    InputSequence expanded = expand_inputs(c, inps);
    for (const Neuron* n : qualifying_neurons(p, c)) {
      if (p == PropertyId::DelayerEffect) {
        auto src = single_source(n->feature(), c.neurons().size(), c.env_len());
        out[n->feature().id()] = cat(project(expanded, *src), {false});
      } else {
        out[n->feature().id()] = repeat_value(false, inps.size() + 1);
      }
    }
    return out;
  }
  return closed_forms(p, c, inps);
}

// ---------------------------------------------------------------------------
// Checking.

namespace {

Verdict not_met(std::string why) {
  Verdict v;
  v.status = VerdictStatus::HypothesesNotMet;
  v.failed_hypothesis = std::move(why);
  return v;
}

/// First chronological time step at which the two histories differ;
/// histories have equal length.
std::size_t divergence_time(const BoolSeq& expected, const BoolSeq& actual) {
  std::size_t len = expected.size();
  for (std::size_t t = 0; t < len; ++t)
    if (expected[len - 1 - t] != actual[len - 1 - t]) return t;
  return len;
}

Verdict fail_at(const ExternalInputs& inps, std::size_t id, std::size_t t,
                BoolSeq expected, BoolSeq actual) {
  Verdict v;
  v.status = VerdictStatus::Fail;
  v.checked_count = 1;
  v.counterexample =
      Counterexample{inps, id, t, std::move(expected), std::move(actual)};
  return v;
}

const Verdict kPassOnce = [] {
  Verdict v;
  v.status = VerdictStatus::Pass;
  v.checked_count = 1;
  return v;
}();

/// Output is the effective input delayed one step.
bool delays(const BoolSeq& out, const BoolSeq& eff) {
  return out == cat(BoolSeq(eff), {false});
}

/// Position (reverse-chron index of the newer element) of the first
/// chronological adjacent spike pair, if any.
std::optional<std::size_t> adjacent_pair(const BoolSeq& out) {
  for (std::size_t k = out.size(); k-- > 1;)
    if (out[k] && out[k - 1]) return k - 1;
  return std::nullopt;
}

Verdict check_neuron_scope(PropertyId p, const NeuroCircuit& c,
                           const ExternalInputs& inps) {
  auto qualifying = qualifying_neurons(p, c);
  const std::size_t n_neurons = c.neurons().size();
  const std::size_t env = c.env_len();

  // AlwaysNonNegCurPot constrains the potential at every step.
  if (p == PropertyId::AlwaysNonNegCurPot) {
    SimTrace trace = simulate_trace(c, inps);
    for (const Neuron* q : qualifying) {
      std::size_t id = q->feature().id();
      for (const SimTrace::Step& step : trace.steps) {
        if (step.potentials[id] < kZero) {
          BoolSeq actual = output_neuron(c, inps, id);
          return fail_at(inps, id, step.t, {}, std::move(actual));
        }
      }
    }
    return kPassOnce;
  }

  std::optional<InputSequence> expanded;
  auto effective_input = [&](const NeuronFeature& nf) {
    std::size_t src = *single_source(nf, n_neurons, env);
    if (src >= n_neurons) return project(inps, src);
    if (!expanded) expanded = expand_inputs(c, inps);
    return project(*expanded, src);
  };

  NeuroCircuit done = n_steps(c, inps);
  for (const Neuron* q : qualifying) {
    std::size_t id = q->feature().id();
    const BoolSeq& out = done.find_by_id(id)->output();
    switch (p) {
      case PropertyId::DelayerEffect: {
        BoolSeq expected = cat(effective_input(q->feature()), {false});
        if (out != expected)
          return fail_at(inps, id, divergence_time(expected, out),
                         std::move(expected), out);
        break;
      }
      case PropertyId::FilteringEffect: {
        if (auto k = adjacent_pair(out))
          return fail_at(inps, id, out.size() - 1 - *k, {}, out);
        break;
      }
      case PropertyId::GeneralBehavior: {
        if (!delays(out, effective_input(q->feature()))) {
          if (auto k = adjacent_pair(out))
            return fail_at(inps, id, out.size() - 1 - *k, {}, out);
        }
        break;
      }
      case PropertyId::SpikeDecreasing: {
        BoolSeq eff = effective_input(q->feature());
        if (count_true(out) > count_true(eff))
          return fail_at(inps, id, inps.size(), {}, out);
        break;
      }
      case PropertyId::InhibitorEffect: {
        BoolSeq expected = repeat_value(false, out.size());
        if (out != expected)
          return fail_at(inps, id, divergence_time(expected, out),
                         std::move(expected), out);
        break;
      }
      default:
        break;
    }
  }
  return kPassOnce;
}

Verdict check_closed_form(PropertyId p, const NeuroCircuit& c,
                          const ExternalInputs& inps) {
  auto expected = closed_forms(p, c, inps);
  NeuroCircuit done = n_steps(c, inps);
  for (const auto& [id, exp] : expected) {
    const BoolSeq& out = done.find_by_id(id)->output();
    if (out != exp)
      return fail_at(inps, id, divergence_time(exp, out), exp, out);
  }
  return kPassOnce;
}

}  // namespace

Verdict check_once(PropertyId p, const NeuroCircuit& c,
                   const ExternalInputs& inps) {
  if (auto why = failed_hypothesis(p, c)) return not_met(*why);
  if (auto why = input_hypothesis_failure(p, c, inps)) return not_met(*why);
  if (is_neuron_scope(p)) return check_neuron_scope(p, c, inps);
  return check_closed_form(p, c, inps);
}

// ---------------------------------------------------------------------------
// Bounded verification.

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// External ids all true / all false for one step.
ExternalInput step_all(const NeuroCircuit& c, bool value) {
  ExternalInput f;
  if (value)
    for (std::size_t s = 0; s < c.suppl_input(); ++s)
      f.set(c.neurons().size() + s, true);
  return f;
}

/// Single-source step (families with segment structure are only used with
/// one external source).
ExternalInput step_bit(const NeuroCircuit& c, bool value) {
  ExternalInput f;
  if (value) f.set(c.neurons().size(), true);
  return f;
}

using Visitor = std::function<bool(const ExternalInputs&)>;

/// All bit patterns for `sources` external ids over lengths 1..max_len, in
/// (length, oldest-first bits) order. Returns false if the visitor stopped.
bool enumerate_all_sequences(const NeuroCircuit& c, std::size_t max_len,
                             const Visitor& visit) {
  std::size_t sources = c.suppl_input();
  std::size_t base = c.neurons().size();
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t bits = sources * len;
    if (bits > 26)
      throw std::invalid_argument("exhaustive family too large");
    std::uint64_t total = 1ull << bits;
    for (std::uint64_t code = 0; code < total; ++code) {
      ExternalInputs inps(len);
      for (std::size_t chrono = 0; chrono < len; ++chrono) {
        // oldest step in the most significant group; lowest source id in
        // the most significant bit of its group
        std::uint64_t group =
            (code >> ((len - 1 - chrono) * sources)) & ((1ull << sources) - 1);
        ExternalInput& f = inps[len - 1 - chrono];
        for (std::size_t j = 0; j < sources; ++j)
          if ((group >> (sources - 1 - j)) & 1ull) f.set(base + j, true);
      }
      if (!visit(inps)) return false;
    }
  }
  return true;
}

bool enumerate_constant(const NeuroCircuit& c, std::size_t max_len, bool value,
                        const Visitor& visit) {
  for (std::size_t len = 0; len <= max_len; ++len) {
    ExternalInputs inps(len, step_all(c, value));
    if (!visit(inps)) return false;
  }
  return true;
}

bool enumerate_single_one(const NeuroCircuit& c, std::size_t max_newer,
                          std::size_t max_older, const Visitor& visit) {
  for (std::size_t total = 1; total <= max_newer + max_older + 1; ++total) {
    for (std::size_t older = total; older-- > 0;) {
      std::size_t newer = total - 1 - older;
      if (newer > max_newer || older > max_older) continue;
      ExternalInputs inps(total, step_bit(c, false));
      inps[newer] = step_bit(c, true);
      if (!visit(inps)) return false;
    }
  }
  return true;
}

bool enumerate_two_ones(const NeuroCircuit& c, std::size_t max_newer,
                        std::size_t max_older, const Visitor& visit) {
  for (std::size_t total = 2; total <= max_newer + max_older + 2; ++total) {
    for (std::size_t older = total - 1; older-- > 0;) {
      std::size_t newer = total - 2 - older;
      if (newer > max_newer || older > max_older) continue;
      std::uint64_t combos = 1ull << newer;
      for (std::uint64_t code = 0; code < combos; ++code) {
        ExternalInputs inps(total, step_bit(c, false));
        inps[newer] = step_bit(c, true);
        inps[newer + 1] = step_bit(c, true);
        for (std::size_t k = 0; k < newer; ++k) {
          // oldest free bit in the most significant position
          bool bit = (code >> k) & 1ull;
          inps[k] = step_bit(c, bit);
        }
        if (!visit(inps)) return false;
      }
    }
  }
  return true;
}

bool enumerate_exhaustive(const InputFamily& fam, const NeuroCircuit& c,
                          const Visitor& visit) {
  switch (fam.kind) {
    case InputFamily::Kind::AllSequences:
      return enumerate_all_sequences(c, fam.max_len, visit);
    case InputFamily::Kind::AllZeros:
      return enumerate_constant(c, fam.max_len, false, visit);
    case InputFamily::Kind::AllOnes:
      return enumerate_constant(c, fam.max_len, true, visit);
    case InputFamily::Kind::ZerosWithOneAt:
      return enumerate_single_one(c, fam.max_len, fam.max_older, visit);
    case InputFamily::Kind::ZerosThenTwoOnesThenAny:
      return enumerate_two_ones(c, fam.max_len, fam.max_older, visit);
  }
  return true;
}

ExternalInputs draw_random(const InputFamily& fam, const NeuroCircuit& c,
                           std::uint64_t seed, std::size_t index) {
  std::uint64_t state = splitmix64(seed ^ splitmix64(index));
  auto next = [&state]() {
    state = splitmix64(state);
    return state;
  };
  auto uniform = [&](std::size_t lo, std::size_t hi) {  // inclusive
    return lo + next() % (hi - lo + 1);
  };
  std::size_t base = c.neurons().size();
  std::size_t sources = c.suppl_input();
  switch (fam.kind) {
    case InputFamily::Kind::AllSequences: {
      std::size_t len = uniform(1, fam.max_len);
      ExternalInputs inps(len);
      for (ExternalInput& f : inps)
        for (std::size_t j = 0; j < sources; ++j)
          if (next() & 1ull) f.set(base + j, true);
      return inps;
    }
    case InputFamily::Kind::AllZeros:
      return ExternalInputs(uniform(0, fam.max_len), step_all(c, false));
    case InputFamily::Kind::AllOnes:
      return ExternalInputs(uniform(0, fam.max_len), step_all(c, true));
    case InputFamily::Kind::ZerosWithOneAt: {
      std::size_t newer = uniform(0, fam.max_len);
      std::size_t older = uniform(0, fam.max_older);
      ExternalInputs inps(newer + older + 1, step_bit(c, false));
      inps[newer] = step_bit(c, true);
      return inps;
    }
    case InputFamily::Kind::ZerosThenTwoOnesThenAny: {
      std::size_t newer = uniform(0, fam.max_len);
      std::size_t older = uniform(0, fam.max_older);
      ExternalInputs inps(newer + older + 2, step_bit(c, false));
      inps[newer] = step_bit(c, true);
      inps[newer + 1] = step_bit(c, true);
      for (std::size_t k = 0; k < newer; ++k)
        inps[k] = step_bit(c, next() & 1ull);
      return inps;
    }
  }
  return {};
}

}  // namespace

Verdict verify_bounded(PropertyId p, const NeuroCircuit& c,
                       const InputFamily& family, const VerifyMode& mode) {
  if (auto why = failed_hypothesis(p, c)) return not_met(*why);

  Verdict agg;
  agg.status = VerdictStatus::Pass;
  auto visit = [&](const ExternalInputs& inps) {
    Verdict v = check_once(p, c, inps);
    ++agg.checked_count;
    if (v.status != VerdictStatus::Pass) {
      agg.status = v.status;
      agg.counterexample = std::move(v.counterexample);
      agg.failed_hypothesis = std::move(v.failed_hypothesis);
      return false;
    }
    return true;
  };

  if (std::holds_alternative<ExhaustiveMode>(mode)) {
    enumerate_exhaustive(family, c, visit);
  } else {
    const auto& rnd = std::get<RandomMode>(mode);
    for (std::size_t i = 0; i < rnd.count; ++i)
      if (!visit(draw_random(family, c, rnd.seed, i))) break;
  }
  return agg;
}

std::vector<ExternalInputs> family_prefix(const InputFamily& family,
                                          const NeuroCircuit& c,
                                          std::size_t limit) {
  std::vector<ExternalInputs> out;
  if (limit == 0) return out;
  enumerate_exhaustive(family, c, [&](const ExternalInputs& inps) {
    out.push_back(inps);
    return out.size() < limit;
  });
  return out;
}

}  // namespace archlab
