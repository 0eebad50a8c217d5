#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "spshuffle/expr.hpp"
#include "spshuffle/poset.hpp"

namespace spshuffle {

// One expression per isomorphism class of SP posets with exactly k points.
std::vector<PosetExpr> sp_expressions(std::size_t k);

struct VerifyOptions {
  std::size_t max_points = 5;
  std::size_t max_n = 4;
  std::size_t reciprocity_max_n = 6;
};

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  std::vector<std::string> examples;  // first few mismatches
};

struct VerifyReport {
  std::size_t posets = 0;
  std::vector<CheckResult> checks;

  bool ok() const;
  std::string table() const;
  nlohmann::json to_json() const;
};

// Closed forms against brute force over every SP poset up to max_points.
VerifyReport run_verification(const VerifyOptions& options = {});

}  // namespace spshuffle
