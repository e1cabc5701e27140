#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scheme.hpp"

namespace zilat {

// Every subset S of {0..d} that contains 0 and whose relation union is an
// equivalence relation (equivalently, p_ij^k != 0 with i, j in S forces
// k in S), found by exhaustive scan over all 2^d subsets of nonzero classes.
// Sorted by size, then by lowest members. Error when d > 20.
std::vector<std::vector<int>> closed_subsets(const Scheme& s);

// Partition of the class indices: a ~ b when p_ab^i != 0 for some i in
// zero_tilde, transitively closed. zero_tilde must contain 0 and be closed.
// Blocks sorted by minimal member; the block of 0 equals zero_tilde.
std::vector<std::vector<int>> index_equivalence(const Scheme& s,
                                                const std::vector<int>& zero_tilde);

struct QuotientScheme {
  std::vector<int> zero_tilde;
  std::vector<std::vector<int64_t>> point_classes;  // quotient point -> parent points
  std::vector<std::vector<int>> relation_classes;   // quotient class -> parent classes
  Scheme scheme;
};

// Collapse the point set along the equivalence of the zero_tilde relations.
// Throws if some pair of point classes meets relations from more than one
// index block (the quotient would not be well defined).
QuotientScheme quotient(const Scheme& s, const std::vector<int>& zero_tilde);

// The valency-1 classes (always including 0). Each such class a induces a
// fixed-point-free pairing sigma_a; composition lands back in the set, and
// for these schemes the set forms an elementary abelian 2-group.
struct InvolutionSet {
  std::vector<int> classes;
  std::vector<std::vector<int>> table;  // table[a][b] = position in `classes` of sigma_a sigma_b
  bool closed = false;                  // composition well defined and inside the set
  bool elementary_abelian = false;
};

InvolutionSet involutions(const Scheme& s);

// Maximal divisor chain alpha = a_0, a_1, ... where each a_{t+1} = a_t / prime
// (primes consumed in (norm, re) order, repeated per multiplicity); one entry
// per division, stopping at the last non-unit. Each entry carries the ring,
// its scheme, and the involution classes.
struct ChainStep {
  GaussInt divisor;  // canonical associate (the input alpha itself for step 0)
  RingScheme rs;
  std::vector<int> involution_classes;
};

std::vector<ChainStep> quotient_chain(GaussInt alpha);

// For odd-norm alpha: every chain step must have odd point count and a
// trivial involution set {0}. Error when norm(alpha) is even.
struct CleanQuotientStep {
  GaussInt divisor;
  int64_t order = 0;
  bool odd = false;
  bool trivial_involutions = false;
};

struct CleanQuotientReport {
  bool pass = false;
  std::vector<CleanQuotientStep> steps;
};

CleanQuotientReport clean_quotient_check(GaussInt alpha);

}  // namespace zilat
