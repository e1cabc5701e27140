#include "quotient.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace zilat {

namespace {

// bit c set when p_ij^c != 0 for some witness; class count must fit a mask
std::vector<uint32_t> product_masks(const Scheme& s) {
  const int dp1 = s.d + 1;
  std::vector<uint32_t> mask(dp1 * dp1, 0);
  for (int i = 0; i < dp1; ++i)
    for (int j = 0; j < dp1; ++j)
      for (int k = 0; k < dp1; ++k)
        if (s.p(i, j, k) != 0) mask[i * dp1 + j] |= uint32_t(1) << k;
  return mask;
}

bool subset_closed(const std::vector<uint32_t>& mask, int dp1, uint32_t sub) {
  for (int i = 0; i < dp1; ++i) {
    if (!(sub >> i & 1)) continue;
    for (int j = 0; j < dp1; ++j)
      if ((sub >> j & 1) && (mask[i * dp1 + j] & ~sub)) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> closed_subsets(const Scheme& s) {
  if (s.d > 20)
    throw std::invalid_argument("closed_subsets: class count " + std::to_string(s.d) +
                                " exceeds the exhaustive-scan cap of 20");
  const int dp1 = s.d + 1;
  const auto mask = product_masks(s);
  std::vector<std::vector<int>> out;
  for (uint32_t bits = 0; bits < (uint32_t(1) << s.d); ++bits) {
    uint32_t sub = (bits << 1) | 1;  // nonzero classes shifted up; 0 always in
    if (!subset_closed(mask, dp1, sub)) continue;
    std::vector<int> subset;
    for (int c = 0; c < dp1; ++c)
      if (sub >> c & 1) subset.push_back(c);
    out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<std::vector<int>> index_equivalence(const Scheme& s,
                                                const std::vector<int>& zero_tilde) {
  const int dp1 = s.d + 1;
  if (std::find(zero_tilde.begin(), zero_tilde.end(), 0) == zero_tilde.end())
    throw std::invalid_argument("index_equivalence: zero_tilde must contain class 0");

  std::vector<char> in_zt(dp1, 0);
  for (int c : zero_tilde) {
    if (c < 0 || c > s.d) throw std::invalid_argument("index_equivalence: class index out of range");
    in_zt[c] = 1;
  }
  for (int i = 0; i < dp1; ++i)
    for (int j = 0; j < dp1; ++j) {
      if (!in_zt[i] || !in_zt[j]) continue;
      for (int k = 0; k < dp1; ++k)
        if (s.p(i, j, k) != 0 && !in_zt[k])
          throw std::invalid_argument("index_equivalence: zero_tilde is not a closed subset");
    }

  // union-find gives the transitive closure of "p_ab^i != 0 for i in 0~"
  std::vector<int> parent(dp1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < dp1; ++a)
    for (int b = 0; b < dp1; ++b) {
      bool related = false;
      for (int i = 0; i < dp1 && !related; ++i)
        if (in_zt[i] && s.p(a, b, i) != 0) related = true;
      if (related) parent[find(a)] = find(b);
    }

  std::vector<std::vector<int>> blocks(dp1);
  for (int c = 0; c < dp1; ++c) blocks[find(c)].push_back(c);
  std::erase_if(blocks, [](const auto& b) { return b.empty(); });
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  std::vector<int> zt_sorted = zero_tilde;
  std::sort(zt_sorted.begin(), zt_sorted.end());
  if (blocks.front() != zt_sorted)
    throw std::runtime_error("index_equivalence: the block of 0 differs from zero_tilde");
  return blocks;
}

QuotientScheme quotient(const Scheme& s, const std::vector<int>& zero_tilde) {
  QuotientScheme q;
  q.zero_tilde = zero_tilde;
  std::sort(q.zero_tilde.begin(), q.zero_tilde.end());
  q.relation_classes = index_equivalence(s, q.zero_tilde);

  const int dp1 = s.d + 1;
  std::vector<int> block_of(dp1, -1);
  for (size_t b = 0; b < q.relation_classes.size(); ++b)
    for (int c : q.relation_classes[b]) block_of[c] = static_cast<int>(b);

  std::vector<char> in_zt(dp1, 0);
  for (int c : q.zero_tilde) in_zt[c] = 1;

  // point classes: connected components of the zero_tilde relations
  std::vector<int64_t> point_class(s.n, -1);
  for (int64_t x = 0; x < s.n; ++x) {
    if (point_class[x] >= 0) continue;
    const auto id = static_cast<int64_t>(q.point_classes.size());
    std::vector<int64_t> stack{x}, members;
    point_class[x] = id;
    while (!stack.empty()) {
      int64_t u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (int64_t v = 0; v < s.n; ++v)
        if (point_class[v] < 0 && in_zt[s.rel_at(u, v)]) {
          point_class[v] = id;
          stack.push_back(v);
        }
    }
    std::sort(members.begin(), members.end());
    q.point_classes.push_back(std::move(members));
  }

  // relation between two point classes: all pairs must land in one index block
  const auto m = static_cast<int64_t>(q.point_classes.size());
  Scheme& qs = q.scheme;
  qs.n = m;
  qs.d = static_cast<int>(q.relation_classes.size()) - 1;
  qs.rel.assign(m * m, -1);
  for (int64_t a = 0; a < m; ++a)
    for (int64_t b = 0; b < m; ++b) {
      int block = -1;
      for (int64_t x : q.point_classes[a])
        for (int64_t y : q.point_classes[b]) {
          int bl = block_of[s.rel_at(x, y)];
          if (block < 0) block = bl;
          if (bl != block)
            throw std::runtime_error(
                "quotient: relations between point classes " + std::to_string(a) + " and " +
                std::to_string(b) + " span more than one merged class (not well defined)");
        }
      qs.rel[a * m + b] = block;
    }

  qs.point_labels.resize(m);
  for (int64_t a = 0; a < m; ++a) {
    std::string label = "{";
    for (size_t t = 0; t < q.point_classes[a].size(); ++t) {
      if (t) label += ",";
      int64_t x = q.point_classes[a][t];
      label += s.point_labels.empty() ? std::to_string(x) : s.point_labels[x];
    }
    qs.point_labels[a] = label + "}";
  }
  compute_tensor(qs);
  return q;
}

InvolutionSet involutions(const Scheme& s) {
  InvolutionSet inv;
  for (int c = 0; c <= s.d; ++c)
    if (s.valency[c] == 1) inv.classes.push_back(c);

  const auto a_count = inv.classes.size();
  std::vector<int> pos(s.d + 1, -1);
  for (size_t t = 0; t < a_count; ++t) pos[inv.classes[t]] = static_cast<int>(t);

  // sigma_a(x) = the unique y with rel(x, y) = a
  std::vector<std::vector<int64_t>> sigma(a_count, std::vector<int64_t>(s.n, -1));
  for (size_t t = 0; t < a_count; ++t) {
    const int a = inv.classes[t];
    for (int64_t x = 0; x < s.n; ++x)
      for (int64_t y = 0; y < s.n; ++y)
        if (s.rel_at(x, y) == a) {
          sigma[t][x] = y;
          break;
        }
  }

  inv.closed = true;
  inv.table.assign(a_count, std::vector<int>(a_count, -1));
  for (size_t ta = 0; ta < a_count && inv.closed; ++ta)
    for (size_t tb = 0; tb < a_count && inv.closed; ++tb) {
      const int c = s.rel_at(0, sigma[ta][sigma[tb][0]]);
      for (int64_t x = 1; x < s.n; ++x)
        if (s.rel_at(x, sigma[ta][sigma[tb][x]]) != c) {
          inv.closed = false;
          break;
        }
      if (inv.closed && pos[c] < 0) inv.closed = false;  // composition escaped the set
      if (inv.closed) inv.table[ta][tb] = pos[c];
    }

  if (inv.closed) {
    inv.elementary_abelian = true;
    for (size_t ta = 0; ta < a_count; ++ta)
      for (size_t tb = 0; tb < a_count; ++tb) {
        if (inv.table[ta][tb] != inv.table[tb][ta]) inv.elementary_abelian = false;
        if (ta == tb && inv.classes[inv.table[ta][tb]] != 0) inv.elementary_abelian = false;
      }
  }
  return inv;
}

std::vector<ChainStep> quotient_chain(GaussInt alpha) {
  if (norm(alpha) <= 1) throw std::invalid_argument("quotient_chain: norm(alpha) must be >= 2");
  Factorization f = factor(alpha);
  std::vector<GaussInt> primes;
  for (const auto& [prime, mult] : f.factors)
    for (int t = 0; t < mult; ++t) primes.push_back(prime);

  std::vector<ChainStep> chain;
  GaussInt cur = alpha;
  for (size_t step = 0; step < primes.size(); ++step) {
    GaussInt shown = step == 0 ? cur : canonical_associate(cur);
    QuotientRing ring(shown);
    RingScheme rs = build_scheme(ring);
    InvolutionSet inv = involutions(rs.scheme);
    chain.push_back({shown, std::move(rs), inv.classes});
    cur = exact_div(cur, primes[step]);
  }
  return chain;
}

CleanQuotientReport clean_quotient_check(GaussInt alpha) {
  if (norm(alpha) % 2 == 0)
    throw std::invalid_argument("clean_quotient_check: norm(alpha) must be odd");
  CleanQuotientReport rep;
  rep.pass = true;
  for (const ChainStep& step : quotient_chain(alpha)) {
    CleanQuotientStep out;
    out.divisor = step.divisor;
    out.order = step.rs.ring.order();
    out.odd = out.order % 2 == 1;
    out.trivial_involutions = step.involution_classes == std::vector<int>{0};
    rep.pass = rep.pass && out.odd && out.trivial_involutions;
    rep.steps.push_back(out);
  }
  return rep;
}

}  // namespace zilat
