#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gaussian.hpp"

namespace zilat {

// The additive structure of Z[i]/alpha Z[i]. The sublattice alpha Z[i] has
// Z-basis {alpha, i*alpha}; Smith normal form of that 2x2 matrix yields
// invariant factors d1 | d2 with d1*d2 = norm(alpha) and a basis g1, g2 with
// every residue uniquely c1*g1 + c2*g2, c1 in Z_d1, c2 in Z_d2.
class QuotientRing {
 public:
  explicit QuotientRing(GaussInt alpha);  // error if norm(alpha) <= 1

  GaussInt alpha() const { return alpha_; }
  int64_t order() const { return order_; }
  int64_t d1() const { return d1_; }
  int64_t d2() const { return d2_; }
  GaussInt g1() const { return g1_; }
  GaussInt g2() const { return g2_; }

  // canonical representative: minimal norm, ties broken by maximal (re, im)
  GaussInt reduce(GaussInt x) const;

  // residues in coordinate order: index = c1*d2 + c2
  const std::vector<GaussInt>& residues() const { return residues_; }
  GaussInt residue(int64_t index) const { return residues_[index]; }
  int64_t index_of(GaussInt x) const;                  // residue index of the class of x
  std::array<int64_t, 2> coords(GaussInt x) const;     // (c1, c2)
  GaussInt section(int64_t c1, int64_t c2) const;      // canonical rep of c1*g1 + c2*g2

  int64_t add(int64_t i, int64_t j) const;             // index arithmetic
  int64_t sub(int64_t i, int64_t j) const;
  int64_t negate(int64_t i) const { return sub(0, i); }
  int64_t mul_i(int64_t i) const { return mul_i_[i]; } // index of i * residue(i)

 private:
  GaussInt alpha_;
  int64_t order_;
  int64_t d1_, d2_;
  GaussInt g1_, g2_;
  int64_t u_[2][2];  // unimodular row transform: coords(x) = U*(x.re, x.im) mod (d1, d2)
  std::vector<GaussInt> residues_;
  std::vector<int64_t> mul_i_;
};

}  // namespace zilat
