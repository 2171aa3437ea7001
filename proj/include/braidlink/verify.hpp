#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidlink/io.hpp"

namespace braidlink {

struct VerifyOptions {
  int count = 50;
  std::uint64_t seed = 0;
  double tol = 1e-4;
  int samples = 512;
};

struct SuiteResult {
  SuiteResult() = default;
  explicit SuiteResult(std::string suite_name) : name(std::move(suite_name)) {}

  std::string name;
  int passed = 0;
  int total = 0;
  double max_residual = 0.0;
  std::optional<Json> counterexample;

  bool ok() const { return passed == total; }
};

/// Runs the homomorphism, integrality, convergence, oracle and table sweeps.
std::vector<SuiteResult> run_verify(const VerifyOptions& options);

}  // namespace braidlink
