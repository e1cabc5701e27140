#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gaussian.hpp"

namespace zilat {

// the three primitive tile types plus everything else
enum class TileType { one_plus_i, split_prime, inert_prime, composite };

TileType classify_tile(GaussInt alpha);  // error when norm(alpha) <= 1
std::string tile_type_name(TileType t);

// Geometric cleanness: no point of Z^2 lies on the boundary of a Voronoi
// cell of the sublattice alpha Z[i], i.e. no integer point is equidistant
// from two nearest sublattice points. Scan order: increasing norm, then
// decreasing (re, im), so the reported witness is deterministic.
struct CleanBoundaryResult {
  bool clean = true;
  GaussInt witness;  // meaningful only when !clean
};

CleanBoundaryResult is_clean_boundary(GaussInt alpha);

// Arithmetic cleanness criterion: an odd number of points in the tile.
bool is_clean_odd(GaussInt alpha);

// The norm(alpha) lattice points with both coordinates in [0, 1) in the
// basis (alpha, i*alpha); exact rational membership tests. Row-major order
// in that basis.
std::vector<GaussInt> fundamental_representatives(GaussInt alpha);

// is c a sum of two integer squares?
bool is_representable(int64_t c);

struct SvgOptions {
  int64_t window = 0;    // half-width of the Z^2 viewport; 0 picks a default
  bool color_orbits = true;
};

// Standalone SVG: the integer grid, the sublattice alpha Z[i], the
// fundamental parallelogram, and the representatives (colored by unit-orbit
// class when requested). Error when norm(alpha) > 2000.
std::string render_svg(GaussInt alpha, const SvgOptions& opts = {});

}  // namespace zilat
