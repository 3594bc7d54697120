#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ghcode {

/// Malformed or out-of-domain input (bad prime, bad type string, size mismatch).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A word handed to the inverse Gray map is not the image of any ring vector.
class NotAGrayImage : public InputError {
 public:
  using InputError::InputError;
};

/// Chain algebra was asked for sigma of a type whose generator matrix has a single row.
class NoSecondRow : public InputError {
 public:
  using InputError::InputError;
};

/// The requested computation does not fit in the configured memory budget.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, std::uint64_t required_bytes, std::uint64_t budget_bytes)
      : std::runtime_error(what + " (estimated " + std::to_string(required_bytes) + " bytes, budget " +
                           std::to_string(budget_bytes) + " bytes)"),
        required_bytes_(required_bytes),
        budget_bytes_(budget_bytes) {}

  std::uint64_t required_bytes() const noexcept { return required_bytes_; }
  std::uint64_t budget_bytes() const noexcept { return budget_bytes_; }

 private:
  std::uint64_t required_bytes_;
  std::uint64_t budget_bytes_;
};

/// Working-memory ceiling for materialising codes.
struct ResourceLimits {
  static constexpr std::uint64_t kDefaultBudget = std::uint64_t{4} << 30;  // 4 GiB
  std::uint64_t budget_bytes = kDefaultBudget;
};

}  // namespace ghcode
