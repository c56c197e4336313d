#pragma once

#include <stdexcept>
#include <string>

namespace qdw {

/// Argument outside the mathematical domain of a function (e.g. f(0)).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Physical parameter outside its admissible range.
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Fock truncation too small for the requested tail tolerance.
class TruncationError : public std::runtime_error {
public:
  TruncationError(const std::string &what, int minimal_n_max)
      : std::runtime_error(what), m_minimal(minimal_n_max) {}
  int minimal_n_max() const { return m_minimal; }

private:
  int m_minimal;
};

/// Every generator entry of a block vanishes, so there is no Rabi frequency.
class DegenerateBlockError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An algebraic identity the propagator relies on does not hold.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Adaptive integration could not proceed (step underflow, step budget).
class IntegrationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Full-space oracle dimension above the configured cap.
class OracleTooLargeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bad command-line or config-file input; the message names the field.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace qdw
