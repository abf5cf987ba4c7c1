#pragma once

#include <stdexcept>
#include <string>

namespace liefoliate {

/// Raised when an input is well-formed but outside the mathematical domain
/// of an operation (unknown space, invalid rank, non-orthogonal subset, ...).
/// The CLI maps this to exit status 1.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace liefoliate
