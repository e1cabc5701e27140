#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace zilat {

// The field isomorphism GF(p) -> Z[i]/pi for a Gaussian prime pi of prime
// norm p: g maps to g - [g*conj(pi)/p]*pi, the minimal-norm representative.
GaussInt gfp_to_point(int64_t g, GaussInt pi);
int64_t point_to_gfp(GaussInt z, GaussInt pi);  // inverse of the above

struct Constellation {
  int64_t p = 0;
  GaussInt modulus;
  std::vector<std::pair<int64_t, GaussInt>> points;  // (label, point)
};

// split case: labels 0..p-1 through gfp_to_point
Constellation build_split_constellation(GaussInt pi);
// inert case (p = 3 mod 4): the p^2 grid points k + il with
// k, l in [-(p-1)/2, (p-1)/2], labels (k mod p) + p*(l mod p)
Constellation build_inert_constellation(int64_t p);

// min |re| + |im| over the representatives of the class of x within the
// window |re|, |im| <= norm(alpha)
int64_t mannheim_weight(const QuotientRing& ring, GaussInt x);
int64_t mannheim_distance(const QuotientRing& ring, GaussInt x, GaussInt y);

}  // namespace zilat
