#include "tiling.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "ring.hpp"
#include "scheme.hpp"

namespace zilat {

namespace {

bool prime_int(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TileType classify_tile(GaussInt alpha) {
  const int64_t n = norm(alpha);
  if (n <= 1) throw std::invalid_argument("classify_tile: norm(alpha) must be at least 2");
  if (n == 2) return TileType::one_plus_i;
  if (prime_int(n) && n % 4 == 1) return TileType::split_prime;
  if (is_gaussian_prime(alpha)) return TileType::inert_prime;
  return TileType::composite;
}

std::string tile_type_name(TileType t) {
  switch (t) {
    case TileType::one_plus_i: return "ONE_PLUS_I";
    case TileType::split_prime: return "SPLIT_PRIME";
    case TileType::inert_prime: return "INERT_PRIME";
    case TileType::composite: return "COMPOSITE";
  }
  return "?";
}

CleanBoundaryResult is_clean_boundary(GaussInt alpha) {
  if (norm(alpha) <= 1) throw std::invalid_argument("is_clean_boundary: norm(alpha) too small");
  const int64_t bound = std::abs(alpha.re) + std::abs(alpha.im);

  std::vector<GaussInt> pts;
  for (int64_t x = -bound; x <= bound; ++x)
    for (int64_t y = -bound; y <= bound; ++y) pts.push_back({x, y});
  std::sort(pts.begin(), pts.end(), [](GaussInt a, GaussInt b) {
    if (norm(a) != norm(b)) return norm(a) < norm(b);
    if (a.re != b.re) return a.re > b.re;
    return a.im > b.im;
  });

  for (GaussInt z : pts) {
    int64_t best = -1;
    int hits = 0;
    for (int64_t u = -4; u <= 4; ++u)
      for (int64_t v = -4; v <= 4; ++v) {
        const int64_t d2 = norm(z - GaussInt{u, v} * alpha);
        if (best < 0 || d2 < best) {
          best = d2;
          hits = 1;
        } else if (d2 == best) {
          ++hits;
        }
      }
    if (hits > 1) return {false, z};
  }
  return {true, gi_zero};
}

bool is_clean_odd(GaussInt alpha) {
  if (norm(alpha) <= 1) throw std::invalid_argument("is_clean_odd: norm(alpha) too small");
  return norm(alpha) % 2 == 1;
}

std::vector<GaussInt> fundamental_representatives(GaussInt alpha) {
  const int64_t n = norm(alpha);
  if (n <= 1) throw std::invalid_argument("fundamental_representatives: norm(alpha) too small");
  const int64_t bound = std::abs(alpha.re) + std::abs(alpha.im);
  const GaussInt bar = conj(alpha);

  // z = u*alpha + v*i*alpha with u = Re(z*bar)/n, v = Im(z*bar)/n; keep
  // 0 <= u < 1 and 0 <= v < 1 using the exact integer numerators
  std::vector<GaussInt> reps;
  for (int64_t x = -bound; x <= bound; ++x)
    for (int64_t y = -bound; y <= bound; ++y) {
      const GaussInt num = GaussInt{x, y} * bar;
      if (num.re >= 0 && num.re < n && num.im >= 0 && num.im < n) reps.push_back({x, y});
    }
  std::sort(reps.begin(), reps.end(), [&bar](GaussInt a, GaussInt b) {
    const GaussInt ka = a * bar, kb = b * bar;
    if (ka.im != kb.im) return ka.im < kb.im;
    return ka.re < kb.re;
  });
  return reps;
}

bool is_representable(int64_t c) {
  if (c < 0) return false;
  if (c == 0) return true;
  // sum of two squares iff every prime = 3 mod 4 divides to an even power
  for (int64_t p = 2; p * p <= c; ++p) {
    if (c % p != 0) continue;
    int mult = 0;
    while (c % p == 0) {
      c /= p;
      ++mult;
    }
    if (p % 4 == 3 && mult % 2 == 1) return false;
  }
  if (c > 1 && c % 4 == 3) return false;  // leftover prime
  return true;
}

namespace {

const char* palette(int cls) {
  static const char* colors[] = {"#555555", "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e",
                                 "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22",
                                 "#7f7f7f", "#aec7e8", "#98df8a"};
  return colors[cls % 13];
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

}  // namespace

std::string render_svg(GaussInt alpha, const SvgOptions& opts) {
  const int64_t n = norm(alpha);
  if (n <= 1) throw std::invalid_argument("render_svg: norm(alpha) too small");
  if (n > 2000) throw std::invalid_argument("render_svg: norm(alpha) exceeds the render cap");

  const int64_t w = opts.window > 0 ? opts.window : std::abs(alpha.re) + std::abs(alpha.im) + 1;
  const double scale = 40.0;
  const double size = (2 * w + 1) * scale;
  auto px = [&](double x) { return (x + double(w) + 0.5) * scale; };
  auto py = [&](double y) { return (double(w) + 0.5 - y) * scale; };  // y up

  QuotientRing ring(alpha);
  RingScheme rs = build_scheme(ring);
  const std::vector<GaussInt> reps = fundamental_representatives(alpha);

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(size) + "\" height=\"" +
         num(size) + "\" viewBox=\"0 0 " + num(size) + " " + num(size) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // fundamental parallelogram 0 -> alpha -> alpha + i*alpha -> i*alpha
  const GaussInt ia = alpha * gi_i;
  svg += "<polygon points=\"" + num(px(0)) + "," + num(py(0)) + " " + num(px(double(alpha.re))) +
         "," + num(py(double(alpha.im))) + " " + num(px(double(alpha.re + ia.re))) + "," +
         num(py(double(alpha.im + ia.im))) + " " + num(px(double(ia.re))) + "," +
         num(py(double(ia.im))) + "\" fill=\"#fff3c4\" stroke=\"#c8a200\" stroke-width=\"1.5\"/>\n";

  // grid of Z^2 with the sublattice alpha Z[i] as squares
  for (int64_t x = -w; x <= w; ++x)
    for (int64_t y = -w; y <= w; ++y) {
      const GaussInt z{x, y};
      const GaussInt q = divmod_nearest(z, alpha).q;
      const bool sublattice = z == q * alpha;
      if (sublattice) {
        svg += "<rect x=\"" + num(px(double(x)) - 5) + "\" y=\"" + num(py(double(y)) - 5) +
               "\" width=\"10\" height=\"10\" fill=\"black\"/>\n";
      } else {
        svg += "<circle cx=\"" + num(px(double(x))) + "\" cy=\"" + num(py(double(y))) +
               "\" r=\"3\" fill=\"none\" stroke=\"#999999\"/>\n";
      }
    }

  // representatives: filled, colored by orbit class
  for (GaussInt r : reps) {
    const int cls = rs.cls[ring.index_of(r)];
    const char* color = opts.color_orbits ? palette(cls) : "#d62728";
    if (std::abs(r.re) > w || std::abs(r.im) > w) continue;
    svg += "<circle cx=\"" + num(px(double(r.re))) + "\" cy=\"" + num(py(double(r.im))) +
           "\" r=\"6\" fill=\"" + color + "\"/>\n";
  }

  svg += "<text x=\"8\" y=\"18\" font-family=\"monospace\" font-size=\"14\">alpha = " +
         to_string(alpha) + ", " + std::to_string(n) + " residues</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace zilat
