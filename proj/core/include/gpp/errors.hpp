#pragma once

#include <stdexcept>
#include <string>

namespace gpp {

/// Parameter outside its allowed interval. The message names the field.
class RangeError : public std::invalid_argument {
public:
  RangeError(const std::string& field, double value, double lo, double hi)
      : std::invalid_argument(field + " = " + std::to_string(value) +
                              " outside [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "]"),
        field_(field) {}
  const std::string& field() const { return field_; }

private:
  std::string field_;
};

class ArgumentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Non-finite value produced inside the forward model; carries the scenario id.
class NumericalError : public std::runtime_error {
public:
  NumericalError(const std::string& what, long scenario_id)
      : std::runtime_error(what + " (scenario " + std::to_string(scenario_id) + ")"),
        scenario_id_(scenario_id) {}
  long scenario_id() const { return scenario_id_; }

private:
  long scenario_id_;
};

/// A sensor band extends beyond the simulated wavelength grid.
class CoverageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class DegenerateInputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Too few samples survive an output sub-range restriction; names the input.
class InsufficientDataError : public std::runtime_error {
public:
  InsufficientDataError(const std::string& input, const std::string& what)
      : std::runtime_error("insufficient data for input '" + input + "': " + what),
        input_(input) {}
  const std::string& input() const { return input_; }

private:
  std::string input_;
};

class LoadError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class MismatchError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace gpp
