#include "scheme.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace zilat {

namespace {

std::array<int64_t, 3> rep_key(GaussInt z) { return {norm(z), z.re, z.im}; }

bool prime_int(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

void compute_tensor(Scheme& s) {
  const int dp1 = s.d + 1;
  s.valency.assign(dp1, 0);
  for (int64_t y = 0; y < s.n; ++y) s.valency[s.rel_at(0, y)]++;

  s.tensor.assign(int64_t(dp1) * dp1 * dp1, 0);
  for (int k = 0; k < dp1; ++k) {
    int64_t y0 = -1;
    for (int64_t y = 0; y < s.n; ++y)
      if (s.rel_at(0, y) == k) {
        y0 = y;
        break;
      }
    if (y0 < 0) continue;  // class not realized from point 0 (malformed table)
    for (int64_t z = 0; z < s.n; ++z) {
      int i = s.rel_at(0, z);
      int j = s.rel_at(z, y0);
      s.tensor[(int64_t(i) * dp1 + j) * dp1 + k]++;
    }
  }
}

RingScheme build_scheme(const QuotientRing& ring, Rotation rot) {
  RingScheme rs{ring, {}, {}, {}, {}};
  const int64_t n = ring.order();
  rs.cls.assign(n, -1);

  for (int64_t idx = 0; idx < n; ++idx) {
    if (rs.cls[idx] >= 0) continue;
    const int c = static_cast<int>(rs.orbits.size());
    std::vector<int64_t> orbit;
    int64_t j = idx;
    do {
      orbit.push_back(j);
      rs.cls[j] = c;
      j = rot == Rotation::units ? ring.mul_i(j) : ring.negate(j);
    } while (j != idx);

    GaussInt rep = gi_zero;
    if (idx != 0) {
      rep = canonical_associate(ring.residue(orbit[0]));
      for (int64_t m : orbit) {
        GaussInt cand = canonical_associate(ring.residue(m));
        if (rep_key(cand) < rep_key(rep)) rep = cand;
      }
      // start the displayed cycle at the representative when it is a residue
      for (size_t t = 0; t < orbit.size(); ++t)
        if (ring.residue(orbit[t]) == rep) {
          std::rotate(orbit.begin(), orbit.begin() + t, orbit.end());
          break;
        }
    }
    rs.orbits.push_back(std::move(orbit));
    rs.orbit_reps.push_back(rep);
  }

  Scheme& s = rs.scheme;
  s.n = n;
  s.d = static_cast<int>(rs.orbits.size()) - 1;
  s.rel.resize(n * n);
  for (int64_t x = 0; x < n; ++x)
    for (int64_t y = 0; y < n; ++y) s.rel[x * n + y] = rs.cls[ring.sub(x, y)];
  s.point_labels.resize(n);
  for (int64_t x = 0; x < n; ++x) s.point_labels[x] = to_string(ring.residue(x));
  compute_tensor(s);
  return rs;
}

Ordering parse_ordering(const std::string& name) {
  if (name == "coords") return Ordering::coords;
  if (name == "gfp") return Ordering::gfp;
  throw std::invalid_argument("unknown ordering \"" + name + "\" (expected coords or gfp)");
}

SchemeView make_view(const RingScheme& rs, Ordering ordering) {
  SchemeView v;
  v.ordering = ordering;
  const int64_t n = rs.ring.order();
  const int dp1 = rs.scheme.d + 1;
  v.point_order.resize(n);
  v.display_class.resize(dp1);
  v.internal_class.resize(dp1);

  if (ordering == Ordering::coords) {
    std::iota(v.point_order.begin(), v.point_order.end(), 0);
    std::iota(v.display_class.begin(), v.display_class.end(), 0);
    std::iota(v.internal_class.begin(), v.internal_class.end(), 0);
    return v;
  }

  if (!prime_int(n))
    throw std::invalid_argument("gfp ordering requires a prime-order ring, norm(alpha) = " +
                                std::to_string(n));
  std::vector<char> seen(n, 0);
  for (int64_t g = 0; g < n; ++g) {
    int64_t idx = rs.ring.index_of({g, 0});
    v.point_order[g] = idx;
    if (seen[idx]) throw std::logic_error("gfp carrier is not a bijection");
    seen[idx] = 1;
  }
  // classes sorted by representative: 0 stays first (norm 0)
  std::vector<int> order(dp1);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&rs](int a, int b) {
    auto ka = rep_key(rs.orbit_reps[a]), kb = rep_key(rs.orbit_reps[b]);
    return ka != kb ? ka < kb : a < b;
  });
  for (int pos = 0; pos < dp1; ++pos) {
    v.internal_class[pos] = order[pos];
    v.display_class[order[pos]] = pos;
  }
  return v;
}

std::vector<int> relation_vector(const RingScheme& rs, const SchemeView& view) {
  std::vector<int> vec(rs.ring.order());
  const int64_t x0 = view.point_order[0];
  for (size_t j = 0; j < vec.size(); ++j)
    vec[j] = view.display_class[rs.cls[rs.ring.sub(x0, view.point_order[j])]];
  return vec;
}

std::string format_relation_vector(const RingScheme& rs, const SchemeView& view) {
  std::vector<int> vec = relation_vector(rs, view);
  const int64_t block = view.ordering == Ordering::coords ? rs.ring.d2() : int64_t(vec.size());
  std::string out = "[";
  for (size_t j = 0; j < vec.size(); ++j) {
    if (j > 0) out += (j % block == 0) ? "|" : ",";
    out += std::to_string(vec[j]);
  }
  return out + "]";
}

BlockCirculantForm block_circulant_form(const RingScheme& rs, const SchemeView& view,
                                        int display_cls) {
  const int internal = view.internal_class.at(display_cls);
  BlockCirculantForm f;
  if (view.ordering == Ordering::coords) {
    f.blocks = rs.ring.d1();
    f.block_size = rs.ring.d2();
    f.rows.assign(f.blocks, std::vector<int>(f.block_size, 0));
    for (int64_t t = 0; t < f.blocks; ++t)
      for (int64_t s = 0; s < f.block_size; ++s)
        f.rows[t][s] = rs.cls[t * f.block_size + s] == internal ? 1 : 0;
  } else {
    f.blocks = 1;
    f.block_size = rs.ring.order();
    f.rows.assign(1, std::vector<int>(f.block_size, 0));
    for (int64_t s = 0; s < f.block_size; ++s)
      f.rows[0][s] = rs.cls[view.point_order[s]] == internal ? 1 : 0;
  }
  return f;
}

std::vector<std::vector<int>> expand_block_circulant(const BlockCirculantForm& f) {
  const int64_t n = f.blocks * f.block_size;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int64_t x = 0; x < n; ++x)
    for (int64_t y = 0; y < n; ++y) {
      int64_t bi = x / f.block_size, u = x % f.block_size;
      int64_t bj = y / f.block_size, v = y % f.block_size;
      int64_t t = (bi - bj + f.blocks) % f.blocks;
      int64_t shift = ((u - v) % f.block_size + f.block_size) % f.block_size;
      a[x][y] = f.rows[t][shift];
    }
  return a;
}

std::vector<std::vector<int>> adjacency_matrix(const RingScheme& rs, const SchemeView& view,
                                               int display_cls) {
  const int internal = view.internal_class.at(display_cls);
  const int64_t n = rs.ring.order();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int64_t x = 0; x < n; ++x)
    for (int64_t y = 0; y < n; ++y)
      a[x][y] =
          rs.cls[rs.ring.sub(view.point_order[x], view.point_order[y])] == internal ? 1 : 0;
  return a;
}

std::vector<EigenRow> eigenmatrix(const RingScheme& rs) {
  const QuotientRing& ring = rs.ring;
  const int dp1 = rs.scheme.d + 1;
  const int64_t n = ring.order(), d1 = ring.d1(), d2 = ring.d2();
  constexpr double tol = 1e-6;

  std::vector<EigenRow> rows;
  for (int64_t m1 = 0; m1 < d1; ++m1)
    for (int64_t m2 = 0; m2 < d2; ++m2) {
      std::vector<std::complex<double>> vals(dp1);
      for (int c = 0; c < dp1; ++c) {
        std::complex<double> sum{0.0, 0.0};
        for (int64_t idx : rs.orbits[c]) {
          // exact root-of-unity exponent: m1*c1/d1 + m2*c2/d2 = k/n
          const int64_t c1 = idx / d2, c2 = idx % d2;
          const int64_t k = (m1 * c1 * d2 + m2 * c2 * d1) % n;
          const double ang = 2.0 * std::numbers::pi * double(k) / double(n);
          sum += std::complex<double>{std::cos(ang), std::sin(ang)};
        }
        vals[c] = sum;
      }
      bool grouped = false;
      for (EigenRow& r : rows) {
        double dmax = 0.0;
        for (int c = 0; c < dp1; ++c)
          dmax = std::max({dmax, std::abs(r.values[c].real() - vals[c].real()),
                           std::abs(r.values[c].imag() - vals[c].imag())});
        if (dmax < tol) {
          r.multiplicity++;
          grouped = true;
          break;
        }
      }
      if (!grouped) rows.push_back({1, {m1, m2}, std::move(vals)});
    }
  return rows;
}

namespace {

// shared inner loop of the product check: recomputes every entry of every
// product A_i A_j through the z-histogram of one (x, y) pair at a time
struct ProductScan {
  bool ok = true;
  std::string witness;
  bool commutes = true;
  std::string commute_witness;
};

ProductScan scan_products(const Scheme& s) {
  ProductScan out;
  const int dp1 = s.d + 1;
  std::vector<int64_t> h(dp1 * dp1);
  for (int64_t x = 0; x < s.n && (out.ok || out.commutes); ++x)
    for (int64_t y = 0; y < s.n && (out.ok || out.commutes); ++y) {
      std::fill(h.begin(), h.end(), 0);
      const int* row_x = s.rel.data() + x * s.n;
      for (int64_t z = 0; z < s.n; ++z) h[row_x[z] * dp1 + s.rel_at(z, y)]++;
      const int k = s.rel_at(x, y);
      for (int i = 0; i < dp1 && out.ok; ++i)
        for (int j = 0; j < dp1; ++j) {
          if (h[i * dp1 + j] != s.p(i, j, k)) {
            out.ok = false;
            out.witness = "(A_" + std::to_string(i) + " A_" + std::to_string(j) + ")[" +
                          std::to_string(x) + "][" + std::to_string(y) + "] = " +
                          std::to_string(h[i * dp1 + j]) + " but p(" + std::to_string(i) + "," +
                          std::to_string(j) + "," + std::to_string(k) + ") = " +
                          std::to_string(s.p(i, j, k));
            break;
          }
        }
      if (out.commutes)
        for (int i = 0; i < dp1 && out.commutes; ++i)
          for (int j = i + 1; j < dp1; ++j)
            if (h[i * dp1 + j] != h[j * dp1 + i]) {
              out.commutes = false;
              out.commute_witness = "(A_" + std::to_string(i) + " A_" + std::to_string(j) +
                                    ")[" + std::to_string(x) + "][" + std::to_string(y) +
                                    "] != (A_" + std::to_string(j) + " A_" + std::to_string(i) +
                                    ")[" + std::to_string(x) + "][" + std::to_string(y) + "]";
              break;
            }
    }
  return out;
}

}  // namespace

AxiomReport verify_axioms(const Scheme& s) {
  AxiomReport rep;
  const int dp1 = s.d + 1;

  std::vector<int64_t> counts(dp1, 0);
  for (int64_t x = 0; x < s.n && rep.partition.ok; ++x)
    for (int64_t y = 0; y < s.n; ++y) {
      int r = s.rel_at(x, y);
      if (r < 0 || r > s.d) {
        rep.partition = {false, "relation index " + std::to_string(r) + " out of range at (" +
                                    std::to_string(x) + "," + std::to_string(y) + ")"};
        break;
      }
      counts[r]++;
    }
  if (rep.partition.ok)
    for (int c = 0; c < dp1; ++c)
      if (counts[c] == 0) rep.partition = {false, "class " + std::to_string(c) + " is empty"};

  for (int64_t x = 0; x < s.n && rep.symmetry.ok; ++x)
    for (int64_t y = x + 1; y < s.n; ++y)
      if (s.rel_at(x, y) != s.rel_at(y, x)) {
        rep.symmetry = {false, "rel(" + std::to_string(x) + "," + std::to_string(y) +
                                   ") != rel(" + std::to_string(y) + "," + std::to_string(x) + ")"};
        break;
      }

  for (int64_t x = 0; x < s.n && rep.identity.ok; ++x) {
    if (s.rel_at(x, x) != 0)
      rep.identity = {false, "rel(" + std::to_string(x) + "," + std::to_string(x) + ") != 0"};
    else
      for (int64_t y = 0; y < s.n; ++y)
        if (y != x && s.rel_at(x, y) == 0) {
          rep.identity = {false, "rel(" + std::to_string(x) + "," + std::to_string(y) +
                                     ") = 0 off the diagonal"};
          break;
        }
  }

  ProductScan ps = scan_products(s);
  rep.products = {ps.ok, ps.witness};
  rep.commutativity = {ps.commutes, ps.commute_witness};
  return rep;
}

void validate_intersection_numbers(const Scheme& s) {
  ProductScan ps = scan_products(s);
  if (!ps.ok)
    throw std::runtime_error("intersection numbers are not constant over a class: " + ps.witness);
}

PrimitivityResult is_primitive_bruteforce(const Scheme& s) {
  const int dp1 = s.d + 1;
  for (int a = 1; a <= s.d; ++a) {
    std::vector<char> in(dp1, 0);
    std::vector<int> members{0, a}, work{0, a};
    in[0] = in[a] = 1;
    while (!work.empty()) {
      int i = work.back();
      work.pop_back();
      for (size_t m = 0; m < members.size(); ++m) {
        int j = members[m];
        for (int k = 0; k < dp1; ++k) {
          if (in[k]) continue;
          if (s.p(i, j, k) != 0 || s.p(j, i, k) != 0) {
            in[k] = 1;
            members.push_back(k);
            work.push_back(k);
          }
        }
      }
    }
    if (static_cast<int>(members.size()) < dp1) {
      std::sort(members.begin(), members.end());
      return {false, members};
    }
  }
  return {true, {}};
}

PseudocyclicReport is_pseudocyclic(const Scheme& s) {
  PseudocyclicReport rep;
  rep.sums.resize(s.d);
  for (int k = 1; k <= s.d; ++k) {
    int64_t sum = 0;
    for (int i = 0; i <= s.d; ++i) sum += s.p(i, i, k);
    rep.sums[k - 1] = sum;
  }
  rep.constant = std::adjacent_find(rep.sums.begin(), rep.sums.end(),
                                    std::not_equal_to<>()) == rep.sums.end();
  return rep;
}

SignedRefinement signed_refinement(const QuotientRing& ring) {
  SignedRefinement out{build_scheme(ring, Rotation::signs), {}};
  RingScheme full = build_scheme(ring, Rotation::units);
  out.merge.assign(full.scheme.d + 1, {});
  for (int rc = 0; rc <= out.refined.scheme.d; ++rc)
    out.merge[full.cls[out.refined.orbits[rc][0]]].push_back(rc);
  return out;
}

}  // namespace zilat
