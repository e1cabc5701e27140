#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coding.hpp"
#include "gaussian.hpp"
#include "quotient.hpp"
#include "ring.hpp"
#include "scheme.hpp"
#include "tiling.hpp"

namespace zilat {

enum class OutputFormat { text, json };

OutputFormat parse_format(const std::string& name);  // "text" | "json", else error

// Renderers return the complete output document (trailing newline included).
// JSON documents carry a top-level "schema_version": 1 and are serialized
// with sorted keys and 2-space indentation, so parse + re-dump is byte
// identical.

std::string render_factor(GaussInt alpha, OutputFormat f);

std::string render_ring(const QuotientRing& ring, OutputFormat f);

// modes: summary | vector | matrices | pmatrix | tensor | verify | refined.
// "vector" prints the bare relation vector line; JSON output is the full
// scheme document regardless of mode.
std::string render_scheme(const RingScheme& rs, const SchemeView& view, const std::string& mode,
                          OutputFormat f);

// one (filename, content) pair per adjacency matrix, 0/1 entries, row-major
std::vector<std::pair<std::string, std::string>> scheme_matrices_csv(const RingScheme& rs,
                                                                     const SchemeView& view);

// closed subsets + involutions overview (the quotient subcommand without a
// zero-tilde selection)
std::string render_quotient_overview(const RingScheme& rs, OutputFormat f);

// quotient by the given zero-tilde class set; mode: summary | vector
std::string render_quotient(const RingScheme& rs, const std::vector<int>& zero_tilde,
                            const std::string& mode, OutputFormat f);

std::string render_chain(GaussInt alpha, OutputFormat f);

// modes: summary | classify | clean | reps
std::string render_tiles(GaussInt alpha, const std::string& mode, OutputFormat f);

// split (pi given or derived from p = 1 mod 4) or inert (p = 3 mod 4)
// constellations; mode: table | distances
std::string render_code(int64_t p, const GaussInt* pi, const std::string& mode, OutputFormat f);

// "0,2" or "0,2+2i": entries are class indices when they parse as a bare
// integer below the class count, otherwise Gaussian integers mapped to the
// class of their residue
std::vector<int> parse_zero_tilde(const RingScheme& rs, const std::string& spec);

}  // namespace zilat
