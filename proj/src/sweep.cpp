#include "sweep.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "scheme.hpp"
#include "tiling.hpp"

namespace zilat {

namespace {

std::string check_axioms(const RingScheme& rs) {
  const AxiomReport rep = verify_axioms(rs.scheme);
  if (!rep.partition.ok) return "partition: " + rep.partition.witness;
  if (!rep.symmetry.ok) return "symmetry: " + rep.symmetry.witness;
  if (!rep.identity.ok) return "identity: " + rep.identity.witness;
  if (!rep.products.ok) return "products: " + rep.products.witness;
  if (!rep.commutativity.ok) return "commutativity: " + rep.commutativity.witness;
  try {
    validate_intersection_numbers(rs.scheme);
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

std::string check_primitivity(const RingScheme& rs) {
  const bool prime = is_gaussian_prime(rs.ring.alpha());
  const PrimitivityResult res = is_primitive_bruteforce(rs.scheme);
  if (res.primitive == prime) return "";
  std::string msg = std::string("brute force says ") + (res.primitive ? "primitive" : "imprimitive") +
                    ", alpha is " + (prime ? "prime" : "composite");
  if (!res.primitive) {
    msg += " (closed subset {";
    for (size_t t = 0; t < res.witness.size(); ++t)
      msg += (t ? "," : "") + std::to_string(res.witness[t]);
    msg += "})";
  }
  return msg;
}

std::string check_clean(GaussInt alpha) {
  const CleanBoundaryResult cb = is_clean_boundary(alpha);
  const bool codd = is_clean_odd(alpha);
  if (cb.clean == codd) return "";
  return std::string("boundary says ") + (cb.clean ? "clean" : "not clean (witness " +
                                                        to_string(cb.witness) + ")") +
         ", odd-order says " + (codd ? "clean" : "not clean");
}

std::string check_circulant(const RingScheme& rs) {
  const SchemeView view = make_view(rs, Ordering::coords);
  for (int c = 0; c <= rs.scheme.d; ++c) {
    const auto dense = adjacency_matrix(rs, view, c);
    const auto expanded = expand_block_circulant(block_circulant_form(rs, view, c));
    if (dense != expanded) return "class " + std::to_string(c) + " expansion mismatch";
  }
  return "";
}

}  // namespace

std::vector<GaussInt> canonical_alphas(int64_t max_norm) {
  std::vector<GaussInt> out;
  for (int64_t a = 1; a * a <= max_norm; ++a)
    for (int64_t b = 0; a * a + b * b <= max_norm; ++b)
      if (a * a + b * b >= 2) out.push_back({a, b});
  std::sort(out.begin(), out.end(), [](GaussInt x, GaussInt y) {
    if (norm(x) != norm(y)) return norm(x) < norm(y);
    if (x.re != y.re) return x.re < y.re;
    return x.im < y.im;
  });
  return out;
}

SweepReport run_sweep(int64_t max_norm, const std::string& check) {
  if (max_norm < 2 || max_norm > 500)
    throw std::invalid_argument("sweep bound must be between 2 and 500, got " +
                                std::to_string(max_norm));
  const bool axioms = check == "axioms" || check == "all";
  const bool primitivity = check == "primitivity" || check == "all";
  const bool clean = check == "clean" || check == "all";
  const bool circulant = check == "circulant" || check == "all";
  if (!(axioms || primitivity || clean || circulant))
    throw std::invalid_argument("unknown sweep check: " + check);

  SweepReport report;
  report.check = check;
  report.max_norm = max_norm;
  for (GaussInt alpha : canonical_alphas(max_norm)) {
    SweepRow row;
    row.alpha = alpha;
    std::string detail;
    if (axioms || primitivity || circulant) {
      const RingScheme rs = build_scheme(QuotientRing(alpha));
      if (axioms && detail.empty()) detail = check_axioms(rs);
      if (primitivity && detail.empty()) detail = check_primitivity(rs);
      if (circulant && detail.empty()) detail = check_circulant(rs);
    }
    if (clean && detail.empty()) detail = check_clean(alpha);
    row.pass = detail.empty();
    row.detail = detail;
    if (!row.pass) ++report.failures;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string render_sweep(const SweepReport& report, OutputFormat f) {
  if (f == OutputFormat::json) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["check"] = report.check;
    j["max_norm"] = report.max_norm;
    j["alphas"] = static_cast<int64_t>(report.rows.size());
    j["failures"] = report.failures;
    nlohmann::json rows = nlohmann::json::array();
    for (const SweepRow& row : report.rows)
      rows.push_back({{"alpha", to_string(row.alpha)},
                      {"norm", norm(row.alpha)},
                      {"pass", row.pass},
                      {"detail", row.detail}});
    j["rows"] = rows;
    return j.dump(2) + "\n";
  }
  std::string out;
  out += "check = " + report.check + "\n";
  out += "max norm = " + std::to_string(report.max_norm) + "\n";
  out += "alphas = " + std::to_string(report.rows.size()) + "\n";
  for (const SweepRow& row : report.rows) {
    out += std::string(row.pass ? "PASS" : "FAIL") + " " + to_string(row.alpha) + " (norm " +
           std::to_string(norm(row.alpha)) + ")";
    if (!row.detail.empty()) out += ": " + row.detail;
    out += "\n";
  }
  out += "failures = " + std::to_string(report.failures) + "\n";
  out += std::string("result: ") + (report.failures == 0 ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace zilat
