#pragma once

#include <stdexcept>
#include <string>

namespace mdrk {

/// Invalid user configuration (unknown case, bad option value, unsupported degree).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A state left the admissible set and could not be repaired.
class AdmissibilityError : public std::runtime_error {
 public:
  AdmissibilityError(const std::string& what, int element, int node, std::string constraint, double value)
      : std::runtime_error(what),
        element_(element),
        node_(node),
        constraint_(std::move(constraint)),
        value_(value) {}

  int element() const { return element_; }
  int node() const { return node_; }
  const std::string& constraint() const { return constraint_; }
  double value() const { return value_; }

 private:
  int element_;
  int node_;
  std::string constraint_;
  double value_;
};

/// A perturbed state inside the time-derivative stencil left the admissible set.
class StencilError : public AdmissibilityError {
 public:
  using AdmissibilityError::AdmissibilityError;
};

/// Malformed input file; carries the offending line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line) : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace mdrk
