#include "ring.hpp"

#include <stdexcept>

namespace zilat {

namespace {

using Mat2 = std::array<std::array<int64_t, 2>, 2>;

void row_op(Mat2& m, Mat2& u, int dst, int src, int64_t k) {
  for (int c = 0; c < 2; ++c) {
    m[dst][c] += k * m[src][c];
    u[dst][c] += k * u[src][c];
  }
}

void col_op(Mat2& m, Mat2& v, int dst, int src, int64_t k) {
  for (int r = 0; r < 2; ++r) {
    m[r][dst] += k * m[r][src];
    v[r][dst] += k * v[r][src];
  }
}

void swap_rows(Mat2& m, Mat2& u) {
  std::swap(m[0], m[1]);
  std::swap(u[0], u[1]);
}

void swap_cols(Mat2& m, Mat2& v) {
  for (int r = 0; r < 2; ++r) std::swap(m[r][0], m[r][1]);
  for (int r = 0; r < 2; ++r) std::swap(v[r][0], v[r][1]);
}

// Smith normal form of a nonsingular 2x2 integer matrix: U*M*V = diag(d1, d2)
// with U, V unimodular and 0 < d1 | d2. Deterministic pivoting: smallest
// nonzero |entry|, row-major tie break.
struct Snf {
  Mat2 u, v;
  int64_t d1, d2;
};

Snf smith_2x2(Mat2 m) {
  Mat2 u{{{1, 0}, {0, 1}}};
  Mat2 v{{{1, 0}, {0, 1}}};
  for (;;) {
    // move the smallest nonzero |entry| to (0,0)
    int br = -1, bc = -1;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        if (m[r][c] == 0) continue;
        if (br < 0 || std::abs(m[r][c]) < std::abs(m[br][bc])) {
          br = r;
          bc = c;
        }
      }
    if (br == 1) swap_rows(m, u);
    if (bc == 1) swap_cols(m, v);
    // clear the rest of row 0 and column 0
    bool dirty = false;
    if (m[1][0] != 0) {
      int64_t q = m[1][0] / m[0][0];
      row_op(m, u, 1, 0, -q);
      dirty = m[1][0] != 0;
    }
    if (m[0][1] != 0) {
      int64_t q = m[0][1] / m[0][0];
      col_op(m, v, 1, 0, -q);
      dirty = dirty || m[0][1] != 0;
    }
    if (dirty) continue;
    if (m[1][1] % m[0][0] != 0) {  // force divisibility d1 | d2
      row_op(m, u, 0, 1, 1);
      continue;
    }
    break;
  }
  if (m[0][0] < 0) row_op(m, u, 0, 0, -2);  // negate row 0
  if (m[1][1] < 0) row_op(m, u, 1, 1, -2);
  return {u, v, m[0][0], m[1][1]};
}

int64_t pos_mod(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

QuotientRing::QuotientRing(GaussInt alpha) : alpha_(alpha), order_(norm(alpha)) {
  if (order_ <= 1) throw std::invalid_argument("QuotientRing: norm(alpha) must be at least 2");

  // columns alpha, i*alpha
  Mat2 m{{{alpha.re, -alpha.im}, {alpha.im, alpha.re}}};
  Snf snf = smith_2x2(m);
  d1_ = snf.d1;
  d2_ = snf.d2;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) u_[r][c] = snf.u[r][c];

  // basis g_j = U^-1 e_j; det(U) = +-1 so the adjugate inverse is integral
  int64_t det = snf.u[0][0] * snf.u[1][1] - snf.u[0][1] * snf.u[1][0];
  Mat2 inv{{{snf.u[1][1] / det, -snf.u[0][1] / det}, {-snf.u[1][0] / det, snf.u[0][0] / det}}};
  g1_ = {inv[0][0], inv[1][0]};
  g2_ = {inv[0][1], inv[1][1]};

  residues_.reserve(order_);
  for (int64_t c1 = 0; c1 < d1_; ++c1)
    for (int64_t c2 = 0; c2 < d2_; ++c2) {
      GaussInt z{c1 * g1_.re + c2 * g2_.re, c1 * g1_.im + c2 * g2_.im};
      residues_.push_back(reduce(z));
    }

  mul_i_.resize(order_);
  for (int64_t k = 0; k < order_; ++k) mul_i_[k] = index_of(residues_[k] * gi_i);
}

GaussInt QuotientRing::reduce(GaussInt x) const {
  GaussInt r = divmod_nearest(x, alpha_).r;
  // the minimal-norm representative differs from r by gamma*alpha with
  // |gamma| <= sqrt(2), so a 3x3 window suffices
  GaussInt best = r;
  int64_t best_norm = norm(r);
  for (int64_t u = -1; u <= 1; ++u)
    for (int64_t v = -1; v <= 1; ++v) {
      GaussInt cand = r + GaussInt{u, v} * alpha_;
      int64_t n = norm(cand);
      if (n < best_norm || (n == best_norm && (cand.re > best.re ||
                                               (cand.re == best.re && cand.im > best.im)))) {
        best = cand;
        best_norm = n;
      }
    }
  return best;
}

std::array<int64_t, 2> QuotientRing::coords(GaussInt x) const {
  return {pos_mod(u_[0][0] * x.re + u_[0][1] * x.im, d1_),
          pos_mod(u_[1][0] * x.re + u_[1][1] * x.im, d2_)};
}

int64_t QuotientRing::index_of(GaussInt x) const {
  auto c = coords(x);
  return c[0] * d2_ + c[1];
}

GaussInt QuotientRing::section(int64_t c1, int64_t c2) const {
  if (c1 < 0 || c1 >= d1_ || c2 < 0 || c2 >= d2_)
    throw std::invalid_argument("section: coordinates out of range");
  return residues_[c1 * d2_ + c2];
}

int64_t QuotientRing::add(int64_t i, int64_t j) const {
  int64_t a1 = i / d2_, a2 = i % d2_, b1 = j / d2_, b2 = j % d2_;
  return ((a1 + b1) % d1_) * d2_ + (a2 + b2) % d2_;
}

int64_t QuotientRing::sub(int64_t i, int64_t j) const {
  int64_t a1 = i / d2_, a2 = i % d2_, b1 = j / d2_, b2 = j % d2_;
  return pos_mod(a1 - b1, d1_) * d2_ + pos_mod(a2 - b2, d2_);
}

}  // namespace zilat
