#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "archlab/circuit.hpp"

namespace archlab {

// ---------------------------------------------------------------------------
// Sequence utilities shared by the expected-output formulas.

/// n copies of v.
BoolSeq repeat_value(bool v, std::size_t n);

/// n elements cycling through pattern so that the pattern's first element
/// lands at the end: result[k] = pattern[(n-1-k) mod |pattern|].
/// Throws std::invalid_argument when n > 0 and the pattern is empty.
BoolSeq repeat_pattern(const BoolSeq& pattern, std::size_t n);

/// Elements from index i onward; empty when i >= |l|.
BoolSeq suffix(const BoolSeq& l, std::size_t i);

std::size_t count_true(const BoolSeq& l);

// ---------------------------------------------------------------------------
// Property catalog.

enum class PropertyId {
  DelayerEffect,
  FilteringEffect,
  GeneralBehavior,
  SpikeDecreasing,
  InhibitorEffect,
  AlwaysNonNegCurPot,
  SeriesDelayer,
  ParallelDelayer0,
  ParallelDelayerSucc,
  PLZeros,
  PLTwoOnes,
  PLSingleOne,
  NLCase1,
  NLCase2,
  CIWinnerTakesAll,
};

std::string_view property_name(PropertyId p);
std::optional<PropertyId> property_from_name(std::string_view name);
const std::vector<PropertyId>& property_catalog();

// ---------------------------------------------------------------------------
// Verdicts.

enum class VerdictStatus { Pass, Fail, HypothesesNotMet };

/// Replayable witness of a failed check: re-running the property on `inputs`
/// reproduces the divergence.
struct Counterexample {
  ExternalInputs inputs;        // reverse-chronological
  std::size_t neuron_id = 0;
  std::size_t divergent_time = 0;  // first differing time step
  BoolSeq expected;  // reverse-chronological; empty for predicate properties
  BoolSeq actual;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Pass;
  std::size_t checked_count = 0;
  std::optional<Counterexample> counterexample;
  std::string failed_hypothesis;  // set when status == HypothesesNotMet
};

// ---------------------------------------------------------------------------
// Quantification shapes for the bounded driver.

/// The input families the catalog properties quantify over. Lengths are in
/// steps; families with two segments bound each segment separately.
struct InputFamily {
  enum class Kind {
    AllSequences,             // every bit pattern, lengths 1..max_len
    AllZeros,                 // all-false steps, lengths 0..max_len
    AllOnes,                  // all-true steps, lengths 0..max_len
    ZerosWithOneAt,           // zeros(a) ++ [1] ++ zeros(b), a,b <= bounds
    ZerosThenTwoOnesThenAny,  // any(a) ++ [1,1] ++ zeros(b), a,b <= bounds
  };
  Kind kind = Kind::AllSequences;
  std::size_t max_len = 8;    // primary bound
  std::size_t max_older = 6;  // older-segment bound for two-segment shapes

  static InputFamily all_sequences(std::size_t max_len);
  static InputFamily all_zeros(std::size_t max_len);
  static InputFamily all_ones(std::size_t max_len);
  static InputFamily zeros_with_one_at(std::size_t max_newer,
                                       std::size_t max_older);
  static InputFamily zeros_then_two_ones_then_any(std::size_t max_newer,
                                                  std::size_t max_older);
};

/// The family a property is quantified over. max_len, when given, overrides
/// every segment bound; otherwise defaults are 8 for free sequences, 12 for
/// fixed patterns, 6 per segment for split shapes.
InputFamily default_family(PropertyId p,
                           std::optional<std::size_t> max_len = std::nullopt);

// ---------------------------------------------------------------------------
// Checking.

/// Evaluates the property's structural, weight and initial-state hypotheses
/// on the circuit. Returns the first failed hypothesis, or nullopt when all
/// hold.
std::optional<std::string> failed_hypothesis(PropertyId p,
                                             const NeuroCircuit& c);
bool hypotheses_hold(PropertyId p, const NeuroCircuit& c);

/// Closed-form expected outputs per neuron id, for the properties that have
/// one; nullopt for predicate-style properties. Throws HypothesesNotMet.
std::optional<std::map<std::size_t, BoolSeq>> expected_outputs(
    PropertyId p, const NeuroCircuit& c, const ExternalInputs& inps);

/// Simulates inps on the circuit and compares against the property's
/// conclusion. Input-shape hypotheses (e.g. all-ones input) are validated
/// here as well.
Verdict check_once(PropertyId p, const NeuroCircuit& c,
                   const ExternalInputs& inps);

struct ExhaustiveMode {};
struct RandomMode {
  std::size_t count = 1000;
  std::uint64_t seed = 0;
};
using VerifyMode = std::variant<ExhaustiveMode, RandomMode>;

/// Bounded verification: exhaustive mode enumerates the family in a fixed
/// order (shortest first, then oldest-first bit patterns ascending) and
/// stops at the first counterexample, which is therefore the least one.
/// Random mode draws reproducibly from (seed, draw index).
Verdict verify_bounded(PropertyId p, const NeuroCircuit& c,
                       const InputFamily& family,
                       const VerifyMode& mode = ExhaustiveMode{});

/// The first `limit` inputs of the family in enumeration order (all of them
/// when the family is smaller).
std::vector<ExternalInputs> family_prefix(const InputFamily& family,
                                          const NeuroCircuit& c,
                                          std::size_t limit);

}  // namespace archlab
