#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace zilat {

// Gaussian integer a + bi with 64-bit components. Desk-scale inputs: all
// norms handled here stay far below the int64 range.
struct GaussInt {
  int64_t re = 0;
  int64_t im = 0;

  constexpr GaussInt() = default;
  constexpr GaussInt(int64_t r, int64_t i) : re(r), im(i) {}

  friend constexpr GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
  friend constexpr GaussInt operator-(GaussInt a, GaussInt b) { return {a.re - b.re, a.im - b.im}; }
  friend constexpr GaussInt operator-(GaussInt a) { return {-a.re, -a.im}; }
  friend constexpr GaussInt operator*(GaussInt a, GaussInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend constexpr bool operator==(GaussInt a, GaussInt b) { return a.re == b.re && a.im == b.im; }
  friend constexpr bool operator!=(GaussInt a, GaussInt b) { return !(a == b); }
  // lexicographic (re, im); used only for deterministic container ordering
  friend constexpr bool operator<(GaussInt a, GaussInt b) {
    return a.re != b.re ? a.re < b.re : a.im < b.im;
  }
};

inline constexpr GaussInt gi_zero{0, 0};
inline constexpr GaussInt gi_one{1, 0};
inline constexpr GaussInt gi_i{0, 1};

constexpr GaussInt conj(GaussInt z) { return {z.re, -z.im}; }
constexpr int64_t norm(GaussInt z) { return z.re * z.re + z.im * z.im; }
constexpr bool is_unit(GaussInt z) { return norm(z) == 1; }

// the i^k z that lies in the quadrant re > 0, im >= 0 (error on 0)
GaussInt canonical_associate(GaussInt z);

// Nearest-quotient division: q = [x * conj(y) / norm(y)] rounded per
// coordinate to the closest integer, exact halves toward +infinity;
// r = x - q*y satisfies norm(r) <= norm(y)/2. Error on y = 0.
struct DivModResult {
  GaussInt q;
  GaussInt r;
};
DivModResult divmod_nearest(GaussInt x, GaussInt y);

// Euclidean gcd via divmod_nearest; result is the canonical associate.
// gcd(0, 0) is an error.
GaussInt gcd(GaussInt a, GaussInt b);

bool divides(GaussInt d, GaussInt z);  // d != 0, exact divisibility
GaussInt exact_div(GaussInt z, GaussInt d);

// prime iff one of: norm 2; norm an odd prime = 1 mod 4; associate of a
// rational prime = 3 mod 4
bool is_gaussian_prime(GaussInt z);

// decomposition p = a^2 + b^2 for rational prime p = 2 or p = 1 mod 4,
// returned as a + bi with a >= b >= 1; error for other p
GaussInt two_square(int64_t p);

struct Factorization {
  GaussInt unit;                                   // one of 1, i, -1, -i
  std::vector<std::pair<GaussInt, int>> factors;   // (canonical prime, multiplicity),
                                                   // sorted by (norm, re)
};
// error on z = 0; unit * product(prime^mult) == z exactly
Factorization factor(GaussInt z);

// "a+bi" with the usual abbreviations: "0", "7", "2i", "i", "-i", "3-2i"
std::string to_string(GaussInt z);

// Accepts the forms produced by to_string plus optional whitespace and an
// explicit 1-coefficient ("1i", "-1i", "3+1i"). Throws on anything else.
GaussInt parse_gauss(const std::string& text);

}  // namespace zilat
