#include "coding.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace zilat {

namespace {

bool prime_int(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int64_t pos_mod(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

int64_t mod_inverse(int64_t a, int64_t m) {
  int64_t t = 0, new_t = 1, r = m, new_r = pos_mod(a, m);
  while (new_r != 0) {
    int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: not invertible");
  return pos_mod(t, m);
}

void require_prime_norm(GaussInt pi) {
  if (!prime_int(norm(pi)))
    throw std::invalid_argument("constellation modulus must have prime norm, got norm " +
                                std::to_string(norm(pi)));
}

}  // namespace

GaussInt gfp_to_point(int64_t g, GaussInt pi) {
  require_prime_norm(pi);
  const int64_t p = norm(pi);
  if (g < 0 || g >= p) throw std::invalid_argument("gfp_to_point: label out of range");
  return divmod_nearest({g, 0}, pi).r;
}

int64_t point_to_gfp(GaussInt z, GaussInt pi) {
  require_prime_norm(pi);
  const int64_t p = norm(pi);
  // i = -re(pi) * im(pi)^-1 in GF(p), so a + bi reads as a + b*t mod p
  const int64_t t = pos_mod(-pi.re * mod_inverse(pi.im, p), p);
  const int64_t label = pos_mod(z.re + z.im * t, p);
  if (!divides(pi, z - GaussInt{label, 0}))
    throw std::logic_error("point_to_gfp: label mismatch");
  return label;
}

Constellation build_split_constellation(GaussInt pi) {
  require_prime_norm(pi);
  Constellation c;
  c.p = norm(pi);
  c.modulus = pi;
  for (int64_t g = 0; g < c.p; ++g) c.points.emplace_back(g, gfp_to_point(g, pi));
  return c;
}

Constellation build_inert_constellation(int64_t p) {
  if (!prime_int(p) || p % 4 != 3)
    throw std::invalid_argument("build_inert_constellation: p must be a prime = 3 mod 4");
  Constellation c;
  c.p = p;
  c.modulus = {p, 0};
  const int64_t h = (p - 1) / 2;
  for (int64_t l = -h; l <= h; ++l)
    for (int64_t k = -h; k <= h; ++k)
      c.points.emplace_back(pos_mod(k, p) + p * pos_mod(l, p), GaussInt{k, l});
  return c;
}

int64_t mannheim_weight(const QuotientRing& ring, GaussInt x) {
  const GaussInt r = ring.reduce(x);
  // any representative beating |re|+|im| of the reduced form lies within
  // gamma in [-2, 2]^2 of it
  int64_t best = std::abs(r.re) + std::abs(r.im);
  for (int64_t u = -2; u <= 2; ++u)
    for (int64_t v = -2; v <= 2; ++v) {
      const GaussInt cand = r + GaussInt{u, v} * ring.alpha();
      best = std::min(best, std::abs(cand.re) + std::abs(cand.im));
    }
  return best;
}

int64_t mannheim_distance(const QuotientRing& ring, GaussInt x, GaussInt y) {
  return mannheim_weight(ring, x - y);
}

}  // namespace zilat
