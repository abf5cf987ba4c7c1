#pragma once

// Self-check suite behind `liefoliate verify`. Each check reports a name,
// a verdict and a one-line detail.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace liefoliate {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed{false};
  std::string detail;
};

/// Suites: rootsys, spacecat, parabolic, foliate, slmodel, all.
const std::vector<std::string>& verify_suites();

/// Throws DomainError for an unknown suite name.
std::vector<CheckResult> run_verify(std::string_view suite, std::uint64_t seed);

}  // namespace liefoliate
