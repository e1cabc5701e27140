#include "format.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace zilat {

namespace {

using nlohmann::json;

constexpr double kImagZeroTol = 1e-9;

std::string fmt_num(double v) {
  if (std::abs(v) < 5e-13) v = 0.0;  // avoid "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt_complex(std::complex<double> z) {
  if (std::abs(z.imag()) < kImagZeroTol) return fmt_num(z.real());
  return fmt_num(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt_num(std::abs(z.imag())) + "i";
}

template <class T, class F>
std::string join(const std::vector<T>& xs, const std::string& sep, F to_str) {
  std::string out;
  for (size_t t = 0; t < xs.size(); ++t) {
    if (t) out += sep;
    out += to_str(xs[t]);
  }
  return out;
}

std::string join_ints(const std::vector<int>& xs, const std::string& sep) {
  return join(xs, sep, [](int v) { return std::to_string(v); });
}

// compact class-index set: "{0,2}"
std::string class_set(const std::vector<int>& xs) { return "{" + join_ints(xs, ",") + "}"; }

std::string bracket_row(const std::vector<int>& xs) { return "[" + join_ints(xs, ",") + "]"; }

std::string group_name(const QuotientRing& ring) {
  if (ring.d1() == 1) return "Z_" + std::to_string(ring.d2());
  return "Z_" + std::to_string(ring.d1()) + " x Z_" + std::to_string(ring.d2());
}

std::string dump_doc(json& j) {
  j["schema_version"] = 1;
  return j.dump(2) + "\n";
}

// ---- view labels -------------------------------------------------------------

// inverse of point_order: residue index -> view position
std::vector<int64_t> view_positions(const RingScheme& rs, const SchemeView& view) {
  std::vector<int64_t> pos(rs.scheme.n);
  for (int64_t v = 0; v < rs.scheme.n; ++v) pos[view.point_order[v]] = v;
  return pos;
}

// label of the residue at a view position: the residue itself for coords,
// the GF(p) carrier label (= the position) for gfp
std::string member_label(const RingScheme& rs, const SchemeView& view,
                         const std::vector<int64_t>& pos, int64_t residue_index) {
  if (view.ordering == Ordering::gfp) return std::to_string(pos[residue_index]);
  return to_string(rs.ring.residue(residue_index));
}

std::string orbit_members(const RingScheme& rs, const SchemeView& view,
                          const std::vector<int64_t>& pos, int internal_cls) {
  return "{" +
         join(rs.orbits[internal_cls], ", ",
              [&](int64_t r) { return member_label(rs, view, pos, r); }) +
         "}";
}

json orbit_members_json(const RingScheme& rs, const SchemeView& view,
                        const std::vector<int64_t>& pos, int internal_cls) {
  json arr = json::array();
  for (int64_t r : rs.orbits[internal_cls]) {
    if (view.ordering == Ordering::gfp)
      arr.push_back(pos[r]);
    else
      arr.push_back(to_string(rs.ring.residue(r)));
  }
  return arr;
}

bool single_block(const RingScheme& rs, const SchemeView& view) {
  return view.ordering == Ordering::gfp || rs.ring.d1() == 1;
}

json tensor_json(const RingScheme& rs, const SchemeView& view) {
  const int d = rs.scheme.d;
  json ti = json::array();
  for (int i = 0; i <= d; ++i) {
    json tj = json::array();
    for (int j = 0; j <= d; ++j) {
      json tk = json::array();
      for (int k = 0; k <= d; ++k)
        tk.push_back(rs.scheme.p(view.internal_class[i], view.internal_class[j],
                                 view.internal_class[k]));
      tj.push_back(tk);
    }
    ti.push_back(tj);
  }
  return ti;
}

json eigen_json(const RingScheme& rs, const SchemeView& view) {
  json rows = json::array();
  for (const EigenRow& row : eigenmatrix(rs)) {
    json re = json::array(), im = json::array();
    for (int dc = 0; dc <= rs.scheme.d; ++dc) {
      const std::complex<double> v = row.values[view.internal_class[dc]];
      re.push_back(v.real());
      im.push_back(v.imag());
    }
    rows.push_back({{"multiplicity", row.multiplicity}, {"values_re", re}, {"values_im", im}});
  }
  return rows;
}

// ---- scheme text modes --------------------------------------------------------

std::string scheme_summary_text(const RingScheme& rs, const SchemeView& view) {
  const auto pos = view_positions(rs, view);
  const int d = rs.scheme.d;
  std::string out;
  out += "alpha = " + to_string(rs.ring.alpha()) + "\n";
  out += "ordering = " + std::string(view.ordering == Ordering::gfp ? "gfp" : "coords") + "\n";
  out += "points = " + std::to_string(rs.scheme.n) + "\n";
  out += "classes = " + std::to_string(d + 1) + "\n";
  out += "group = " + group_name(rs.ring) + "\n";
  for (int dc = 0; dc <= d; ++dc) {
    const int ic = view.internal_class[dc];
    out += "R" + std::to_string(dc) + " = " + orbit_members(rs, view, pos, ic) +
           "  (valency " + std::to_string(rs.scheme.valency[ic]) + ")\n";
  }
  out += "relation vector: " + format_relation_vector(rs, view) + "\n";
  if (single_block(rs, view)) {
    for (int dc = 0; dc <= d; ++dc) {
      const BlockCirculantForm f = block_circulant_form(rs, view, dc);
      out += "D" + std::to_string(dc) + " = " + bracket_row(f.rows[0]) + "\n";
    }
  }
  return out;
}

std::string scheme_matrices_text(const RingScheme& rs, const SchemeView& view) {
  std::string out;
  for (int dc = 0; dc <= rs.scheme.d; ++dc) {
    const auto m = adjacency_matrix(rs, view, dc);
    out += "A" + std::to_string(dc) + ":\n";
    for (const auto& row : m) out += join_ints(row, " ") + "\n";
    if (dc < rs.scheme.d) out += "\n";
  }
  return out;
}

std::string scheme_pmatrix_text(const RingScheme& rs, const SchemeView& view) {
  std::string out = "eigenmatrix (rows: eigenvalue vectors; columns: classes)\n";
  for (const EigenRow& row : eigenmatrix(rs)) {
    out += "mult " + std::to_string(row.multiplicity) + ": ";
    std::string vals;
    for (int dc = 0; dc <= rs.scheme.d; ++dc) {
      if (dc) vals += " ";
      vals += fmt_complex(row.values[view.internal_class[dc]]);
    }
    out += vals + "\n";
  }
  return out;
}

std::string scheme_tensor_text(const RingScheme& rs, const SchemeView& view) {
  const int d = rs.scheme.d;
  std::string out = "intersection numbers p_ij^k (rows i, columns j)\n";
  for (int k = 0; k <= d; ++k) {
    out += "k = " + std::to_string(k) + ":\n";
    for (int i = 0; i <= d; ++i) {
      std::string row;
      for (int j = 0; j <= d; ++j) {
        if (j) row += " ";
        row += std::to_string(rs.scheme.p(view.internal_class[i], view.internal_class[j],
                                          view.internal_class[k]));
      }
      out += row + "\n";
    }
  }
  return out;
}

std::string scheme_verify_text(const RingScheme& rs, const SchemeView& view) {
  const AxiomReport rep = verify_axioms(rs.scheme);
  auto line = [](const std::string& name, const AxiomCheck& c) {
    return name + " = " + (c.ok ? "ok" : "FAIL (" + c.witness + ")") + "\n";
  };
  std::string out;
  out += line("partition", rep.partition);
  out += line("symmetry", rep.symmetry);
  out += line("identity", rep.identity);
  out += line("products", rep.products);
  out += line("commutativity", rep.commutativity);
  bool tensor_ok = true;
  std::string tensor_msg;
  try {
    validate_intersection_numbers(rs.scheme);
  } catch (const std::exception& e) {
    tensor_ok = false;
    tensor_msg = e.what();
  }
  out += std::string("tensor constant over pairs = ") +
         (tensor_ok ? "ok" : "FAIL (" + tensor_msg + ")") + "\n";

  const PseudocyclicReport pc = is_pseudocyclic(rs.scheme);
  std::string sums;
  for (int dc = 1; dc <= rs.scheme.d; ++dc) {
    if (dc > 1) sums += ",";
    sums += std::to_string(pc.sums[view.internal_class[dc] - 1]);
  }
  out += std::string("pseudocyclic = ") + (pc.constant ? "yes" : "no") + " (diagonal sums: " +
         sums + ")\n";

  const PrimitivityResult pr = is_primitive_bruteforce(rs.scheme);
  out += std::string("primitive = ") + (pr.primitive ? "yes" : "no");
  if (!pr.primitive) {
    std::vector<int> w;
    for (int ic : pr.witness) w.push_back(view.display_class[ic]);
    std::sort(w.begin(), w.end());
    out += " (closed subset " + class_set(w) + ")";
  }
  out += "\n";
  out += std::string("result: ") + (rep.all_ok() && tensor_ok ? "PASS" : "FAIL") + "\n";
  return out;
}

std::string scheme_refined_text(const RingScheme& rs, const SchemeView& view) {
  const SignedRefinement sr = signed_refinement(rs.ring);
  std::string out;
  out += "alpha = " + to_string(rs.ring.alpha()) + "\n";
  out += "refined classes (sign orbits) = " + std::to_string(sr.refined.scheme.d + 1) + "\n";
  std::string vals;
  for (int64_t v : sr.refined.scheme.valency) {
    if (!vals.empty()) vals += ",";
    vals += std::to_string(v);
  }
  out += "refined valencies: [" + vals + "]\n";
  size_t widest = 0;
  for (int dc = 0; dc <= rs.scheme.d; ++dc) {
    const auto& parts = sr.merge[view.internal_class[dc]];
    widest = std::max(widest, parts.size());
    out += "R" + std::to_string(dc) + " <- {" +
           join(parts, ", ", [](int s) { return "S" + std::to_string(s); }) + "}\n";
  }
  out += "max refined classes merged into one = " + std::to_string(widest) + "\n";
  return out;
}

json scheme_json_doc(const RingScheme& rs, const SchemeView& view) {
  const auto pos = view_positions(rs, view);
  const int d = rs.scheme.d;
  json j;
  j["alpha"] = to_string(rs.ring.alpha());
  j["ordering"] = view.ordering == Ordering::gfp ? "gfp" : "coords";
  j["points"] = rs.scheme.n;
  j["classes"] = d + 1;
  j["group"] = group_name(rs.ring);
  j["d1"] = rs.ring.d1();
  j["d2"] = rs.ring.d2();
  json orbits = json::array();
  json valencies = json::array();
  for (int dc = 0; dc <= d; ++dc) {
    const int ic = view.internal_class[dc];
    orbits.push_back({{"class", dc},
                      {"rep", to_string(rs.orbit_reps[ic])},
                      {"valency", rs.scheme.valency[ic]},
                      {"members", orbit_members_json(rs, view, pos, ic)}});
    valencies.push_back(rs.scheme.valency[ic]);
  }
  j["orbits"] = orbits;
  j["valencies"] = valencies;
  j["vector"] = format_relation_vector(rs, view);
  j["tensor"] = tensor_json(rs, view);
  j["eigenmatrix"] = eigen_json(rs, view);
  json circ = json::array();
  for (int dc = 0; dc <= d; ++dc) {
    const BlockCirculantForm f = block_circulant_form(rs, view, dc);
    json rows = json::array();
    for (const auto& r : f.rows) {
      json row = json::array();
      for (int v : r) row.push_back(v);
      rows.push_back(row);
    }
    circ.push_back(
        {{"class", dc}, {"blocks", f.blocks}, {"block_size", f.block_size}, {"rows", rows}});
  }
  j["circulant"] = circ;
  return j;
}

// ---- quotient helpers ----------------------------------------------------------

json int_sets_json(const std::vector<std::vector<int>>& sets) {
  json arr = json::array();
  for (const auto& s : sets) {
    json block = json::array();
    for (int v : s) block.push_back(v);
    arr.push_back(block);
  }
  return arr;
}

// nontrivial proper closed subsets of a scheme with the point count of the
// quotient each one produces
std::vector<std::pair<std::vector<int>, int64_t>> further_quotients(const Scheme& s) {
  std::vector<std::pair<std::vector<int>, int64_t>> out;
  for (const auto& sub : closed_subsets(s)) {
    if (sub.size() <= 1 || static_cast<int>(sub.size()) == s.d + 1) continue;
    out.emplace_back(sub, quotient(s, sub).point_classes.size());
  }
  return out;
}

std::string first_row_vector(const Scheme& s) {
  std::vector<int> row(s.rel.begin(), s.rel.begin() + s.n);
  return bracket_row(row);
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown output format: " + name);
}

std::string render_factor(GaussInt alpha, OutputFormat f) {
  const Factorization fac = factor(alpha);
  const bool prime = is_gaussian_prime(alpha);
  if (f == OutputFormat::json) {
    json j;
    j["alpha"] = to_string(alpha);
    j["norm"] = norm(alpha);
    j["prime"] = prime;
    j["unit"] = to_string(fac.unit);
    json terms = json::array();
    for (const auto& [p, e] : fac.factors)
      terms.push_back({{"prime", to_string(p)}, {"exponent", e}});
    j["factors"] = terms;
    return dump_doc(j);
  }
  std::string out;
  out += "alpha = " + to_string(alpha) + "\n";
  out += "norm = " + std::to_string(norm(alpha)) + "\n";
  out += std::string("prime = ") + (prime ? "yes" : "no") + "\n";
  std::string rhs;
  if (fac.unit != gi_one || fac.factors.empty()) rhs = to_string(fac.unit);
  for (const auto& [p, e] : fac.factors) {
    if (!rhs.empty()) rhs += " * ";
    rhs += "(" + to_string(p) + ")";
    if (e > 1) rhs += "^" + std::to_string(e);
  }
  out += to_string(alpha) + " = " + rhs + "\n";
  return out;
}

std::string render_ring(const QuotientRing& ring, OutputFormat f) {
  if (f == OutputFormat::json) {
    json j;
    j["alpha"] = to_string(ring.alpha());
    j["order"] = ring.order();
    j["d1"] = ring.d1();
    j["d2"] = ring.d2();
    j["group"] = group_name(ring);
    j["g1"] = to_string(ring.g1());
    j["g2"] = to_string(ring.g2());
    json res = json::array();
    for (int64_t t = 0; t < ring.order(); ++t) {
      const auto c = ring.coords(ring.residue(t));
      res.push_back({{"index", t}, {"coords", {c[0], c[1]}}, {"rep", to_string(ring.residue(t))}});
    }
    j["residues"] = res;
    return dump_doc(j);
  }
  std::string out;
  out += "alpha = " + to_string(ring.alpha()) + "\n";
  out += "order = " + std::to_string(ring.order()) + "\n";
  out += "invariant factors: d1 = " + std::to_string(ring.d1()) +
         ", d2 = " + std::to_string(ring.d2()) + "\n";
  out += "group = " + group_name(ring) + "\n";
  out += "basis: g1 = " + to_string(ring.g1()) + ", g2 = " + to_string(ring.g2()) + "\n";
  out += "index  coords  rep\n";
  for (int64_t t = 0; t < ring.order(); ++t) {
    const auto c = ring.coords(ring.residue(t));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-6lld (%lld,%lld)  ", static_cast<long long>(t),
                  static_cast<long long>(c[0]), static_cast<long long>(c[1]));
    out += buf + to_string(ring.residue(t)) + "\n";
  }
  return out;
}

std::string render_scheme(const RingScheme& rs, const SchemeView& view, const std::string& mode,
                          OutputFormat f) {
  if (f == OutputFormat::json) {
    json j = scheme_json_doc(rs, view);
    return dump_doc(j);
  }
  if (mode == "summary") return scheme_summary_text(rs, view);
  if (mode == "vector") return format_relation_vector(rs, view) + "\n";
  if (mode == "matrices") return scheme_matrices_text(rs, view);
  if (mode == "pmatrix") return scheme_pmatrix_text(rs, view);
  if (mode == "tensor") return scheme_tensor_text(rs, view);
  if (mode == "verify") return scheme_verify_text(rs, view);
  if (mode == "refined") return scheme_refined_text(rs, view);
  throw std::invalid_argument("unknown scheme mode: " + mode);
}

std::vector<std::pair<std::string, std::string>> scheme_matrices_csv(const RingScheme& rs,
                                                                     const SchemeView& view) {
  std::vector<std::pair<std::string, std::string>> files;
  for (int dc = 0; dc <= rs.scheme.d; ++dc) {
    std::string body;
    for (const auto& row : adjacency_matrix(rs, view, dc)) body += join_ints(row, ",") + "\n";
    files.emplace_back("A" + std::to_string(dc) + ".csv", body);
  }
  return files;
}

std::string render_quotient_overview(const RingScheme& rs, OutputFormat f) {
  const auto subs = closed_subsets(rs.scheme);
  const InvolutionSet inv = involutions(rs.scheme);
  if (f == OutputFormat::json) {
    json j;
    j["alpha"] = to_string(rs.ring.alpha());
    j["classes"] = rs.scheme.d + 1;
    j["closed_subsets"] = int_sets_json(subs);
    json a = json::array();
    for (int c : inv.classes) a.push_back(c);
    j["involutions"] = a;
    j["involutions_closed"] = inv.closed;
    j["elementary_abelian"] = inv.elementary_abelian;
    return dump_doc(j);
  }
  std::string out;
  out += "alpha = " + to_string(rs.ring.alpha()) + "\n";
  out += "classes = " + std::to_string(rs.scheme.d + 1) + "\n";
  out += "closed subsets:\n";
  for (const auto& s : subs) out += "  " + class_set(s) + "\n";
  out += "involutions: A = " + class_set(inv.classes) + "\n";
  out += std::string("sigma composition closed = ") + (inv.closed ? "yes" : "no") + "\n";
  out += std::string("elementary abelian 2-group = ") + (inv.elementary_abelian ? "yes" : "no") +
         "\n";
  return out;
}

std::string render_quotient(const RingScheme& rs, const std::vector<int>& zero_tilde,
                            const std::string& mode, OutputFormat f) {
  if (mode != "summary" && mode != "vector")
    throw std::invalid_argument("unknown quotient mode: " + mode);
  const auto partition = index_equivalence(rs.scheme, zero_tilde);
  const QuotientScheme q = quotient(rs.scheme, zero_tilde);
  const auto further = further_quotients(q.scheme);
  if (f == OutputFormat::json) {
    json j;
    j["alpha"] = to_string(rs.ring.alpha());
    json zt = json::array();
    for (int c : zero_tilde) zt.push_back(c);
    j["zero_tilde"] = zt;
    j["index_partition"] = int_sets_json(partition);
    j["points"] = static_cast<int64_t>(q.point_classes.size());
    json pcs = json::array();
    for (const auto& pc : q.point_classes) {
      json block = json::array();
      for (int64_t x : pc) block.push_back(rs.scheme.point_labels[x]);
      pcs.push_back(block);
    }
    j["point_classes"] = pcs;
    j["classes"] = q.scheme.d + 1;
    json vals = json::array();
    for (int64_t v : q.scheme.valency) vals.push_back(v);
    j["valencies"] = vals;
    j["vector"] = first_row_vector(q.scheme);
    j["tensor"] = [&] {
      json ti = json::array();
      for (int i = 0; i <= q.scheme.d; ++i) {
        json tj = json::array();
        for (int jj = 0; jj <= q.scheme.d; ++jj) {
          json tk = json::array();
          for (int k = 0; k <= q.scheme.d; ++k) tk.push_back(q.scheme.p(i, jj, k));
          tj.push_back(tk);
        }
        ti.push_back(tj);
      }
      return ti;
    }();
    json fq = json::array();
    for (const auto& [sub, pts] : further) {
      json zt2 = json::array();
      for (int c : sub) zt2.push_back(c);
      fq.push_back({{"zero_tilde", zt2}, {"points", pts}});
    }
    j["further_quotients"] = fq;
    return dump_doc(j);
  }
  if (mode == "vector") return first_row_vector(q.scheme) + "\n";
  std::string out;
  out += "alpha = " + to_string(rs.ring.alpha()) + "\n";
  out += "zero-tilde = " + class_set(zero_tilde) + "\n";
  out += "index partition: " +
         join(partition, " ", [](const std::vector<int>& b) { return class_set(b); }) + "\n";
  out += "points = " + std::to_string(q.point_classes.size()) + "\n";
  for (size_t a = 0; a < q.point_classes.size(); ++a)
    out += "P" + std::to_string(a) + " = " + q.scheme.point_labels[a] + "\n";
  std::string vals;
  for (int64_t v : q.scheme.valency) {
    if (!vals.empty()) vals += ",";
    vals += std::to_string(v);
  }
  out += "classes = " + std::to_string(q.scheme.d + 1) + "\n";
  out += "valencies: [" + vals + "]\n";
  out += "relation vector: " + first_row_vector(q.scheme) + "\n";
  if (further.empty()) {
    out += "further quotients: none\n";
  } else {
    out += "further quotients:\n";
    for (const auto& [sub, pts] : further)
      out += "  zero-tilde " + class_set(sub) + " -> " + std::to_string(pts) + " points\n";
  }
  return out;
}

std::string render_chain(GaussInt alpha, OutputFormat f) {
  const auto chain = quotient_chain(alpha);
  const bool odd = norm(alpha) % 2 != 0;
  CleanQuotientReport clean;
  if (odd) clean = clean_quotient_check(alpha);
  if (f == OutputFormat::json) {
    json j;
    j["alpha"] = to_string(alpha);
    json divisors = json::array();
    json steps = json::array();
    for (const auto& step : chain) {
      divisors.push_back(to_string(step.divisor));
      json inv = json::array();
      for (int c : step.involution_classes) inv.push_back(c);
      steps.push_back({{"divisor", to_string(step.divisor)},
                       {"order", step.rs.scheme.n},
                       {"classes", step.rs.scheme.d + 1},
                       {"involutions", inv}});
    }
    j["chain"] = divisors;
    j["steps"] = steps;
    if (odd) j["clean"] = clean.pass;
    return dump_doc(j);
  }
  std::string out;
  out += "alpha = " + to_string(alpha) + "\n";
  out += "chain length = " + std::to_string(chain.size()) + "\n";
  out += "chain: " +
         join(chain, " > ", [](const ChainStep& s) { return to_string(s.divisor); }) + "\n";
  for (size_t t = 0; t < chain.size(); ++t) {
    const ChainStep& s = chain[t];
    out += "step " + std::to_string(t) + ": divisor = " + to_string(s.divisor) +
           "  order = " + std::to_string(s.rs.scheme.n) +
           "  classes = " + std::to_string(s.rs.scheme.d + 1) +
           "  A = " + class_set(s.involution_classes) + "\n";
  }
  if (odd)
    out += std::string("clean chain (odd orders, trivial involutions) = ") +
           (clean.pass ? "yes" : "no") + "\n";
  return out;
}

std::string render_tiles(GaussInt alpha, const std::string& mode, OutputFormat f) {
  const TileType type = classify_tile(alpha);
  const CleanBoundaryResult cb = is_clean_boundary(alpha);
  const bool codd = is_clean_odd(alpha);
  const auto reps = fundamental_representatives(alpha);
  if (f == OutputFormat::json) {
    json j;
    j["alpha"] = to_string(alpha);
    j["norm"] = norm(alpha);
    j["type"] = tile_type_name(type);
    j["clean_boundary"] = cb.clean;
    if (!cb.clean) j["boundary_witness"] = to_string(cb.witness);
    j["clean_odd"] = codd;
    j["agree"] = cb.clean == codd;
    json r = json::array();
    for (GaussInt z : reps) r.push_back(to_string(z));
    j["representatives"] = r;
    return dump_doc(j);
  }
  std::string out;
  out += "alpha = " + to_string(alpha) + "\n";
  out += "norm = " + std::to_string(norm(alpha)) + "\n";
  const bool all = mode == "summary";
  if (all || mode == "classify") out += "type = " + tile_type_name(type) + "\n";
  if (all || mode == "clean") {
    out += std::string("clean (boundary) = ") + (cb.clean ? "yes" : "no");
    if (!cb.clean) out += "  (witness " + to_string(cb.witness) + ")";
    out += "\n";
    out += std::string("clean (odd order) = ") + (codd ? "yes" : "no") + "\n";
    out += std::string("criteria agree = ") + (cb.clean == codd ? "yes" : "no") + "\n";
  }
  if (all || mode == "reps") {
    out += "representatives (" + std::to_string(reps.size()) + "): " +
           join(reps, ", ", [](GaussInt z) { return to_string(z); }) + "\n";
  }
  if (!all && mode != "classify" && mode != "clean" && mode != "reps")
    throw std::invalid_argument("unknown tiles mode: " + mode);
  return out;
}

std::string render_code(int64_t p, const GaussInt* pi, const std::string& mode, OutputFormat f) {
  if (mode != "table" && mode != "distances")
    throw std::invalid_argument("unknown code mode: " + mode);
  if (p < 3) throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
  Constellation con;
  std::string kind;
  if (p % 4 == 1) {
    kind = "split";
    GaussInt m{0, 0};
    if (pi) {
      if (norm(*pi) != p)
        throw std::invalid_argument("pi = " + to_string(*pi) + " has norm " +
                                    std::to_string(norm(*pi)) + ", expected " + std::to_string(p));
      m = *pi;
    } else {
      m = two_square(p);
    }
    con = build_split_constellation(m);
  } else {
    kind = "inert";
    if (pi) throw std::invalid_argument("--pi only applies to split primes (p = 1 mod 4)");
    con = build_inert_constellation(p);
  }
  const QuotientRing ring(con.modulus);
  std::vector<int64_t> weights;
  if (mode == "distances")
    for (const auto& [label, z] : con.points) weights.push_back(mannheim_weight(ring, z));
  if (f == OutputFormat::json) {
    json j;
    j["p"] = p;
    j["kind"] = kind;
    j["modulus"] = to_string(con.modulus);
    json pts = json::array();
    for (const auto& [label, z] : con.points)
      pts.push_back({{"label", label}, {"point", to_string(z)}});
    j["points"] = pts;
    if (mode == "distances") {
      json w = json::array();
      for (int64_t v : weights) w.push_back(v);
      j["weights"] = w;
      json rows = json::array();
      for (const auto& [la, za] : con.points) {
        json row = json::array();
        for (const auto& [lb, zb] : con.points) row.push_back(mannheim_distance(ring, za, zb));
        rows.push_back(row);
      }
      j["distances"] = rows;
    }
    return dump_doc(j);
  }
  std::string out;
  out += "p = " + std::to_string(p) + "\n";
  out += "kind = " + kind + "\n";
  out += "modulus = " + to_string(con.modulus) + "\n";
  out += "points = " + std::to_string(con.points.size()) + "\n";
  for (const auto& [label, z] : con.points) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%3lld -> ", static_cast<long long>(label));
    out += buf + to_string(z) + "\n";
  }
  if (mode == "distances") {
    out += "mannheim weights:\n";
    for (size_t t = 0; t < con.points.size(); ++t) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%3lld: ", static_cast<long long>(con.points[t].first));
      out += buf + std::to_string(weights[t]) + "\n";
    }
    out += "distance matrix:\n";
    for (const auto& [la, za] : con.points) {
      std::string row;
      for (const auto& [lb, zb] : con.points) {
        if (!row.empty()) row += " ";
        row += std::to_string(mannheim_distance(ring, za, zb));
      }
      out += row + "\n";
    }
  }
  return out;
}

std::vector<int> parse_zero_tilde(const RingScheme& rs, const std::string& spec) {
  std::vector<int> out;
  size_t start = 0;
  while (start <= spec.size()) {
    size_t comma = spec.find(',', start);
    if (comma == std::string::npos) comma = spec.size();
    std::string tok = spec.substr(start, comma - start);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.erase(0, 1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.pop_back();
    if (tok.empty()) throw std::invalid_argument("empty entry in zero-tilde list");
    bool digits = true;
    for (char ch : tok)
      if (!std::isdigit(static_cast<unsigned char>(ch))) digits = false;
    int cls;
    if (digits && std::stoll(tok) <= rs.scheme.d) {
      cls = static_cast<int>(std::stoll(tok));
    } else {
      const GaussInt z = parse_gauss(tok);
      cls = rs.cls[rs.ring.index_of(rs.ring.reduce(z))];
    }
    out.push_back(cls);
    if (comma == spec.size()) break;
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace zilat
