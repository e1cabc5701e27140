#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zilat.h"

namespace {

int domain_error() {
  std::cerr << "error: " << zilat_last_error() << "\n";
  return 1;
}

int usage_error(const std::string& message) {
  std::cerr << "usage error: " << message << "\n";
  return 2;
}

// print a rendered document and release it; domain error on NULL
int emit(char* doc) {
  if (!doc) return domain_error();
  std::cout << doc;
  zilat_free_string(doc);
  return 0;
}

int write_file(const std::string& path, const char* content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out.good()) {
    std::cerr << "error: cannot write " << path << "\n";
    return 1;
  }
  std::cout << "wrote " << path << "\n";
  return 0;
}

struct RingHandle {
  zilat_ring* ptr = nullptr;
  ~RingHandle() { zilat_ring_free(ptr); }
};

struct SchemeHandle {
  zilat_scheme* ptr = nullptr;
  ~SchemeHandle() { zilat_scheme_free(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"association schemes on Z[i]/alpha Z[i]: factorization, quotient rings,\n"
               "orbit schemes, quotient schemes, square tilings, constellations"};
  app.require_subcommand(1);

  std::string alpha_text, ordering = "coords", zero_tilde, pi_text, svg_path;
  std::string check = "all", out_dir = ".";
  int64_t p = 0, max_norm = 100, window = 0;
  bool json = false, table = false, csv = false;
  bool vector_mode = false, matrices = false, pmatrix = false, tensor = false, verify = false,
       refined = false;
  bool chain = false, classify = false, clean = false, reps = false, distances = false,
       code_table = false;

  auto* cmd_factor = app.add_subcommand("factor", "Gaussian prime factorization of alpha");
  cmd_factor->add_option("--alpha", alpha_text, "Gaussian integer, e.g. 3+2i")->required();
  cmd_factor->add_flag("--json", json, "JSON output");
  cmd_factor->add_flag("--table", table, "plain text output (default)");

  auto* cmd_ring = app.add_subcommand("ring", "residues and invariant factors of Z[i]/alpha");
  cmd_ring->add_option("--alpha", alpha_text)->required();
  cmd_ring->add_flag("--json", json);
  cmd_ring->add_flag("--table", table);

  auto* cmd_scheme = app.add_subcommand("scheme", "unit-orbit association scheme on Z[i]/alpha");
  cmd_scheme->add_option("--alpha", alpha_text)->required();
  cmd_scheme->add_option("--ordering", ordering, "coords | gfp (default coords)");
  cmd_scheme->add_flag("--vector", vector_mode, "print only the relation vector");
  cmd_scheme->add_flag("--matrices", matrices, "adjacency matrices");
  cmd_scheme->add_flag("--pmatrix", pmatrix, "eigenmatrix");
  cmd_scheme->add_flag("--tensor", tensor, "intersection numbers");
  cmd_scheme->add_flag("--verify", verify, "axiom report");
  cmd_scheme->add_flag("--refined", refined, "sign-orbit refinement and merge map");
  cmd_scheme->add_flag("--json", json);
  cmd_scheme->add_flag("--csv", csv, "write one adjacency matrix per file");
  cmd_scheme->add_flag("--table", table);
  cmd_scheme->add_option("--out", out_dir, "output directory for --csv (default .)");

  auto* cmd_quotient = app.add_subcommand("quotient", "quotient schemes and divisor chains");
  cmd_quotient->add_option("--alpha", alpha_text)->required();
  cmd_quotient->add_option("--zero-tilde", zero_tilde,
                           "comma list of class indices or Gaussian integers, e.g. 0,2");
  cmd_quotient->add_flag("--chain", chain, "maximal divisor chain with involution sets");
  cmd_quotient->add_flag("--vector", vector_mode, "print only the quotient relation vector");
  cmd_quotient->add_flag("--json", json);
  cmd_quotient->add_flag("--table", table);

  auto* cmd_tiles = app.add_subcommand("tiles", "tile classification and cleanliness");
  cmd_tiles->add_option("--alpha", alpha_text)->required();
  cmd_tiles->add_flag("--classify", classify, "tile type only");
  cmd_tiles->add_flag("--clean", clean, "cleanliness criteria only");
  cmd_tiles->add_flag("--reps", reps, "fundamental-region representatives only");
  cmd_tiles->add_option("--svg", svg_path, "write an SVG rendering to this path");
  cmd_tiles->add_option("--window", window, "half-width of the SVG viewport");
  cmd_tiles->add_flag("--json", json);
  cmd_tiles->add_flag("--table", table);

  auto* cmd_code = app.add_subcommand("code", "GF(p) / Z_p[i] constellations, Mannheim metric");
  cmd_code->add_option("--p", p, "odd prime")->required();
  cmd_code->add_option("--pi", pi_text, "split modulus of norm p (default from p = a^2+b^2)");
  cmd_code->add_flag("--table", code_table, "label -> point table (default)");
  cmd_code->add_flag("--distances", distances, "Mannheim weights and distance matrix");
  cmd_code->add_flag("--json", json);

  auto* cmd_sweep = app.add_subcommand("sweep", "batch property checks over all alpha");
  cmd_sweep->add_option("--max-norm", max_norm, "norm bound, 2..500 (default 100)");
  cmd_sweep->add_option("--check", check,
                        "axioms | primitivity | clean | circulant | all (default all)");
  cmd_sweep->add_flag("--json", json);
  cmd_sweep->add_flag("--table", table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (json && (table || code_table)) return usage_error("choose one of --json and --table");
  if (json && csv) return usage_error("choose one of --json and --csv");
  const char* fmt = json ? "json" : "text";

  zilat_gint alpha{0, 0};
  if (!alpha_text.empty()) {
    if (zilat_parse_gint(alpha_text.c_str(), &alpha) != ZILAT_OK)
      return usage_error(std::string("bad --alpha: ") + zilat_last_error());
  }

  if (cmd_factor->parsed()) return emit(zilat_render_factor(alpha, fmt));

  if (cmd_ring->parsed()) {
    RingHandle ring{zilat_ring_new(alpha)};
    if (!ring.ptr) return domain_error();
    return emit(zilat_render_ring(ring.ptr, fmt));
  }

  if (cmd_scheme->parsed()) {
    const int picked = vector_mode + matrices + pmatrix + tensor + verify + refined;
    if (picked > 1) return usage_error("choose at most one scheme output mode");
    std::string mode = "summary";
    if (vector_mode) mode = "vector";
    if (matrices) mode = "matrices";
    if (pmatrix) mode = "pmatrix";
    if (tensor) mode = "tensor";
    if (verify) mode = "verify";
    if (refined) mode = "refined";
    RingHandle ring{zilat_ring_new(alpha)};
    if (!ring.ptr) return domain_error();
    SchemeHandle s{zilat_scheme_new(ring.ptr, ordering.c_str())};
    if (!s.ptr) return domain_error();
    if (csv) {
      for (int c = 0; c < zilat_scheme_classes(s.ptr); ++c) {
        char* body = zilat_scheme_matrix_csv(s.ptr, c);
        if (!body) return domain_error();
        const std::string path = out_dir + "/A" + std::to_string(c) + ".csv";
        const int rc = write_file(path, body);
        zilat_free_string(body);
        if (rc) return rc;
      }
      return 0;
    }
    return emit(zilat_render_scheme(s.ptr, mode.c_str(), fmt));
  }

  if (cmd_quotient->parsed()) {
    if (chain && !zero_tilde.empty())
      return usage_error("choose either --chain or --zero-tilde");
    if (chain) return emit(zilat_render_chain(alpha, fmt));
    RingHandle ring{zilat_ring_new(alpha)};
    if (!ring.ptr) return domain_error();
    if (zero_tilde.empty()) return emit(zilat_render_quotient_overview(ring.ptr, fmt));
    return emit(zilat_render_quotient(ring.ptr, zero_tilde.c_str(),
                                      vector_mode ? "vector" : "summary", fmt));
  }

  if (cmd_tiles->parsed()) {
    if (!svg_path.empty()) {
      if (classify || clean || reps || json)
        return usage_error("--svg cannot be combined with other output modes");
      char* svg = zilat_render_svg(alpha, window);
      if (!svg) return domain_error();
      const int rc = write_file(svg_path, svg);
      zilat_free_string(svg);
      return rc;
    }
    const int picked = classify + clean + reps;
    if (picked > 1) return usage_error("choose at most one of --classify, --clean, --reps");
    std::string mode = "summary";
    if (classify) mode = "classify";
    if (clean) mode = "clean";
    if (reps) mode = "reps";
    return emit(zilat_render_tiles(alpha, mode.c_str(), fmt));
  }

  if (cmd_code->parsed()) {
    if (code_table && distances) return usage_error("choose one of --table and --distances");
    return emit(zilat_render_code(p, pi_text.empty() ? nullptr : pi_text.c_str(),
                                  distances ? "distances" : "table", fmt));
  }

  if (cmd_sweep->parsed()) return emit(zilat_render_sweep(max_norm, check.c_str(), fmt));

  return usage_error("no subcommand");
}
