#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "format.hpp"
#include "gaussian.hpp"

namespace zilat {

// every alpha with 2 <= norm <= max_norm, one per associate class
// (re > 0, im >= 0), sorted by (norm, re, im)
std::vector<GaussInt> canonical_alphas(int64_t max_norm);

struct SweepRow {
  GaussInt alpha;
  bool pass = false;
  std::string detail;  // failure description, empty on pass
};

struct SweepReport {
  std::string check;
  int64_t max_norm = 0;
  std::vector<SweepRow> rows;
  int64_t failures = 0;
};

// check: axioms | primitivity | clean | circulant | all; max_norm <= 500.
// axioms       - the five defining conditions plus tensor constancy
// primitivity  - brute-force verdict equals Gaussian primality of alpha
// clean        - boundary criterion equals the odd-order criterion
// circulant    - every adjacency matrix equals its compact-form expansion
SweepReport run_sweep(int64_t max_norm, const std::string& check);

std::string render_sweep(const SweepReport& report, OutputFormat f);

}  // namespace zilat
