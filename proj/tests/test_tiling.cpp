#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "gaussian.hpp"
#include "ring.hpp"
#include "tiling.hpp"

using namespace zilat;

namespace {

std::vector<GaussInt> alphas_up_to(int64_t max_norm) {
  std::vector<GaussInt> out;
  for (int64_t a = 1; a * a <= max_norm; ++a)
    for (int64_t b = 0; a * a + b * b <= max_norm; ++b)
      if (a * a + b * b >= 2) out.push_back({a, b});
  std::sort(out.begin(), out.end(),
            [](GaussInt x, GaussInt y) { return norm(x) != norm(y) ? norm(x) < norm(y) : x < y; });
  return out;
}

// squared distance from z to the nearest point of alpha Z[i], plus how many
// lattice points attain it (ties mean a Voronoi boundary point)
std::pair<int64_t, int> nearest_count(GaussInt z, GaussInt alpha) {
  int64_t best = -1;
  int count = 0;
  for (int64_t u = -5; u <= 5; ++u)
    for (int64_t v = -5; v <= 5; ++v) {
      const int64_t d2 = norm(z - GaussInt{u, v} * alpha);
      if (best < 0 || d2 < best) {
        best = d2;
        count = 1;
      } else if (d2 == best) {
        ++count;
      }
    }
  return {best, count};
}

}  // namespace

TEST_CASE("classify_tile: frozen cases") {
  CHECK(classify_tile({1, 1}) == TileType::one_plus_i);
  CHECK(classify_tile({1, -1}) == TileType::one_plus_i);
  CHECK(classify_tile({2, 1}) == TileType::split_prime);
  CHECK(classify_tile({3, 2}) == TileType::split_prime);
  CHECK(classify_tile({4, 1}) == TileType::split_prime);
  CHECK(classify_tile({3, 0}) == TileType::inert_prime);
  CHECK(classify_tile({7, 0}) == TileType::inert_prime);
  CHECK(classify_tile({0, 7}) == TileType::inert_prime);
  CHECK(classify_tile({-3, 0}) == TileType::inert_prime);
  CHECK(classify_tile({2, 0}) == TileType::composite);
  CHECK(classify_tile({4, 0}) == TileType::composite);
  CHECK(classify_tile({2, 2}) == TileType::composite);
  CHECK(classify_tile({9, 0}) == TileType::composite);
  CHECK(classify_tile({13, 0}) == TileType::composite);  // 13 = (3+2i)(3-2i)
  CHECK_THROWS(classify_tile({1, 0}));
  CHECK_THROWS(classify_tile({0, 1}));
  CHECK_THROWS(classify_tile({0, 0}));
}

TEST_CASE("tile_type_name") {
  CHECK(tile_type_name(TileType::one_plus_i) == "ONE_PLUS_I");
  CHECK(tile_type_name(TileType::split_prime) == "SPLIT_PRIME");
  CHECK(tile_type_name(TileType::inert_prime) == "INERT_PRIME");
  CHECK(tile_type_name(TileType::composite) == "COMPOSITE");
}

TEST_CASE("classify_tile agrees with factorization") {
  for (GaussInt alpha : alphas_up_to(200)) {
    const TileType t = classify_tile(alpha);
    if (norm(alpha) == 2) {
      CHECK(t == TileType::one_plus_i);
    } else if (is_gaussian_prime(alpha)) {
      CHECK(t == (alpha.re != 0 && alpha.im != 0 ? TileType::split_prime
                                                 : TileType::inert_prime));
    } else {
      CHECK(t == TileType::composite);
    }
  }
}

TEST_CASE("is_clean_boundary vs independent Voronoi scan") {
  for (GaussInt alpha : alphas_up_to(150)) {
    const CleanBoundaryResult r = is_clean_boundary(alpha);
    CHECK(r.clean == (norm(alpha) % 2 == 1));
    CHECK(r.clean == is_clean_odd(alpha));
    if (!r.clean) {
      // the witness really is equidistant from at least two lattice points
      const auto [d2, ties] = nearest_count(r.witness, alpha);
      CHECK(d2 > 0);
      CHECK(ties >= 2);
    }
  }
}

TEST_CASE("is_clean_boundary: deterministic witness for 1+i and 2+2i") {
  const CleanBoundaryResult r2 = is_clean_boundary({1, 1});
  CHECK(!r2.clean);
  const auto [d2a, ta] = nearest_count(r2.witness, {1, 1});
  CHECK(ta >= 2);
  const CleanBoundaryResult r8 = is_clean_boundary({2, 2});
  CHECK(!r8.clean);
  const auto [d2b, tb] = nearest_count(r8.witness, {2, 2});
  CHECK(tb >= 2);
  // repeated calls return the same witness
  CHECK(is_clean_boundary({2, 2}).witness == r8.witness);
}

TEST_CASE("fundamental representatives: size, distinct classes, frozen 1+i") {
  CHECK(fundamental_representatives({1, 1}) == std::vector<GaussInt>{{0, 0}, {0, 1}});
  for (GaussInt alpha : alphas_up_to(200)) {
    const auto reps = fundamental_representatives(alpha);
    CHECK(static_cast<int64_t>(reps.size()) == norm(alpha));
    const QuotientRing ring(alpha);
    std::set<int64_t> classes;
    for (GaussInt r : reps) classes.insert(ring.index_of(r));
    CHECK(static_cast<int64_t>(classes.size()) == norm(alpha));
  }
}

TEST_CASE("is_representable vs exhaustive two-square scan") {
  for (int64_t c = 0; c <= 500; ++c) {
    bool found = false;
    for (int64_t r = 0; r * r <= c && !found; ++r)
      for (int64_t s = 0; r * r + s * s <= c; ++s)
        if (r * r + s * s == c) {
          found = true;
          break;
        }
    CHECK(is_representable(c) == found);
  }
  CHECK(is_representable(0));
  CHECK(is_representable(1));
  CHECK(is_representable(2));
  CHECK(!is_representable(3));
  CHECK(is_representable(4));
  CHECK(is_representable(5));
  CHECK(!is_representable(6));
  CHECK(!is_representable(7));
  CHECK(is_representable(8));
  CHECK(is_representable(25));
  CHECK(!is_representable(21));
}

TEST_CASE("render_svg: structure and size guard") {
  const std::string svg = render_svg({2, 2});
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.rfind("</svg>") != std::string::npos);
  CHECK(svg.find("polygon") != std::string::npos);
  int64_t circles = 0;
  for (size_t pos = svg.find("<circle"); pos != std::string::npos;
       pos = svg.find("<circle", pos + 1))
    ++circles;
  CHECK(circles >= 8);  // at least one marker per representative

  SvgOptions opts;
  opts.window = 6;
  opts.color_orbits = false;
  const std::string svg2 = render_svg({3, 2}, opts);
  CHECK(svg2.find("<svg") == 0);
  CHECK_THROWS(render_svg({50, 0}));  // norm 2500 > 2000
  CHECK_THROWS(render_svg({1, 0}));
}
