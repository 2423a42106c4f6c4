#ifndef RINGLAB_ERRORS_HPP
#define RINGLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ringlab {

// Argument lies outside the potential's support.
class OutOfSupportError : public std::domain_error {
 public:
  explicit OutOfSupportError(const std::string& what) : std::domain_error(what) {}
};

// Operation requested on a potential that does not provide it
// (e.g. complex-argument evaluation of a cosine potential).
class UnsupportedCapabilityError : public std::invalid_argument {
 public:
  explicit UnsupportedCapabilityError(const std::string& what)
      : std::invalid_argument(what) {}
};

// The normalization condition for the outer ring radius has no solution
// inside the support. Carries the cumulative eigenvalue mass that fits.
class InfeasibleRingError : public std::runtime_error {
 public:
  InfeasibleRingError(const std::string& what, double mass_achieved,
                      double mass_required)
      : std::runtime_error(what),
        mass_achieved(mass_achieved),
        mass_required(mass_required) {}
  double mass_achieved;
  double mass_required;
};

// A norm integral does not converge; `level` is the offending polynomial degree.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, int level)
      : std::runtime_error(what), level(level) {}
  int level;
};

class EigensolverError : public std::runtime_error {
 public:
  explicit EigensolverError(const std::string& what) : std::runtime_error(what) {}
};

// Run-configuration parse failure; line is 1-based, 0 when not applicable.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, int line, std::string field)
      : std::runtime_error(what), line(line), field(std::move(field)) {}
  int line;
  std::string field;
};

}  // namespace ringlab

#endif
