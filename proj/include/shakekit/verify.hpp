#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "shakekit/exactlinalg.hpp"
#include "shakekit/patterns.hpp"
#include "shakekit/seifert.hpp"

namespace shakekit::verify {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Options {
  /// Replaces the 4x4 Seifert form of Q = P_1 wherever the checks use it.
  std::optional<SeifertMatrix> q_seifert;
  double tol = kDefaultTolerance;
  std::uint64_t seed = 0x5eed5eedULL;
};

/// Runs every reproduction check in order; never throws for a failed check.
std::vector<CheckResult> run_all(const Options& opts = {});

/// The Seifert forms displayed for Q and Q_1 in the odd-framing argument.
SeifertMatrix displayed_q_seifert();
SeifertMatrix displayed_q1_seifert();

/// Determinant by Laplace expansion along the first row.
LaurentPoly cofactor_det(const LaurentMatrix& m);

/// Random term over atoms P, Q, R (and wrapping-one K) of depth <= max_depth.
patterns::Pattern random_pattern(std::mt19937_64& rng, int max_depth);

}  // namespace shakekit::verify
