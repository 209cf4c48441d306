#pragma once

#include <stdexcept>
#include <string>

namespace dictcode {

/// Lexical failure while reading an input file (missing file, bad token, bad header).
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& file, std::size_t line, const std::string& what_arg)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + what_arg) {}
  explicit parse_error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// Well-formed input whose content violates a documented constraint
/// (non-stochastic rows, duplicate words, probabilities out of range, ...).
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested size exceeds the documented desk-scale cap of an operation.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested code size is not supported by the packing bound of the instance.
class capacity_error : public std::runtime_error {
 public:
  capacity_error(const std::string& what_arg, long long bound_product)
      : std::runtime_error(what_arg), bound_product_(bound_product) {}
  /// The product d_L * d_R that the requested size collides with.
  long long bound_product() const { return bound_product_; }

 private:
  long long bound_product_;
};

}  // namespace dictcode
