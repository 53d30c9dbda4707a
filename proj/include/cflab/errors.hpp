#pragma once

#include <stdexcept>
#include <string>

namespace cflab {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Request exceeds a configured limit (e.g. maximum reference digits).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric evaluation could not reach a meaningful result, e.g. a
/// denominator that cannot be separated from zero at working precision.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent oracles disagreed beyond their combined error bounds.
class OracleMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A convergent denominator q_n vanished.
class BreakdownError : public std::runtime_error {
 public:
  BreakdownError(long index)
      : std::runtime_error("continued fraction breakdown: q_" + std::to_string(index) + " = 0"),
        index_(index) {}
  long index() const noexcept { return index_; }

 private:
  long index_;
};

/// A report or data file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// eval_cf hit its term budget before the stopping rule was met.
class ConvergenceError : public EvaluationError {
 public:
  ConvergenceError(long terms, std::string last_value, std::string last_delta)
      : EvaluationError("no convergence within " + std::to_string(terms) + " terms (last value " + last_value +
                        ", last |c_n - c_(n-1)| " + last_delta + ")"),
        terms_(terms),
        last_value_(std::move(last_value)),
        last_delta_(std::move(last_delta)) {}
  long terms() const noexcept { return terms_; }
  const std::string& last_value() const noexcept { return last_value_; }
  const std::string& last_delta() const noexcept { return last_delta_; }

 private:
  long terms_;
  std::string last_value_;
  std::string last_delta_;
};

}  // namespace cflab
