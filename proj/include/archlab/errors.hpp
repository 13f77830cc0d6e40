#pragma once

#include <stdexcept>
#include <string>

namespace archlab {

/// Malformed rational literal (bad syntax).
struct MalformedRational : std::runtime_error {
  explicit MalformedRational(const std::string& text)
      : std::runtime_error("malformed rational: " + text) {}
};

/// Rational literal with a zero denominator.
struct ZeroDenominator : std::runtime_error {
  explicit ZeroDenominator(const std::string& text)
      : std::runtime_error("zero denominator: " + text) {}
};

/// A record constraint was violated. `constraint()` is the record-field name
/// (LeakRange, PosTau, WRange, WId, IdNeuroDiff, IdInfLen, TimeNeuro).
class ConstraintError : public std::runtime_error {
 public:
  ConstraintError(std::string constraint, const std::string& detail)
      : std::runtime_error(constraint + ": " + detail),
        constraint_(std::move(constraint)) {}
  const std::string& constraint() const { return constraint_; }

 private:
  std::string constraint_;
};

/// Document text is not syntactically valid. `position()` is a byte offset
/// when known, npos otherwise.
class SyntaxError : public std::runtime_error {
 public:
  explicit SyntaxError(const std::string& detail,
                       std::size_t position = std::string::npos)
      : std::runtime_error(detail), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Document is well-formed but does not match the expected schema
/// (missing or mistyped field, out-of-range key, bad arity).
struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& detail) : std::runtime_error(detail) {}
};

/// A property was evaluated in a context that does not satisfy its
/// hypotheses. `hypothesis()` names the first one that failed.
class HypothesesNotMet : public std::runtime_error {
 public:
  explicit HypothesesNotMet(std::string hypothesis)
      : std::runtime_error("hypotheses not met: " + hypothesis),
        hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

}  // namespace archlab
