#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "ring.hpp"

namespace zilat {

// Combinatorial association scheme: n points, classes 0..d with class 0 the
// identity relation, full relation table, valencies and intersection numbers
// p_ij^k computed from one representative pair per class.
struct Scheme {
  int64_t n = 0;
  int d = 0;
  std::vector<int> rel;                   // n*n, rel[x*n+y]
  std::vector<int64_t> valency;           // d+1 entries
  std::vector<int64_t> tensor;            // (d+1)^3, index (i*(d+1)+j)*(d+1)+k
  std::vector<std::string> point_labels;  // size n (may be empty for raw tables)

  int rel_at(int64_t x, int64_t y) const { return rel[x * n + y]; }
  int64_t p(int i, int j, int k) const { return tensor[(int64_t(i) * (d + 1) + j) * (d + 1) + k]; }
};

// fill valencies + tensor from an existing relation table
void compute_tensor(Scheme& s);

// Orbit scheme of a quotient ring: points are the residues in coordinate
// order, (x, y) lies in the class of the unit-group orbit containing x - y.
// Classes are numbered by first occurrence along the residue order, which
// reproduces the worked 8-point example's numbering.
struct RingScheme {
  QuotientRing ring;
  Scheme scheme;
  std::vector<int> cls;                        // residue index -> class
  std::vector<std::vector<int64_t>> orbits;    // class -> residue indices, cycle order
  std::vector<GaussInt> orbit_reps;            // class -> canonical-associate-minimal member
};

// rotation group acting on residues: the full unit group {1, i, -1, -i} or
// the sign subgroup {1, -1} (the refined scheme of the signed construction)
enum class Rotation { units, signs };

RingScheme build_scheme(const QuotientRing& ring, Rotation rot = Rotation::units);

// ---- orderings ---------------------------------------------------------------

// coords: residues as stored (index c1*d2 + c2, relation matrices come out
//         block circulant). gfp: carrier {0..p-1} for prime-order rings, the
//         residue of g at position g; classes renumbered by representative
//         sorted under (norm, re, im) to match the published GF(13) listing.
enum class Ordering { coords, gfp };

Ordering parse_ordering(const std::string& name);  // "coords" | "gfp", else error

struct SchemeView {
  Ordering ordering = Ordering::coords;
  std::vector<int64_t> point_order;  // view position -> residue index
  std::vector<int> display_class;    // internal class -> display class
  std::vector<int> internal_class;   // display class -> internal class
};

SchemeView make_view(const RingScheme& rs, Ordering ordering);

// display classes along the view's point order; entry 0 is always 0
std::vector<int> relation_vector(const RingScheme& rs, const SchemeView& view);

// "[0,1,2,1|3,1,3,1]" — coords ordering groups d1 blocks of d2 with bars
std::string format_relation_vector(const RingScheme& rs, const SchemeView& view);

// ---- compact circulant data ---------------------------------------------------

// Indicator rows F_t[s] = [class(t*g1 + s*g2) == cls] so that the adjacency
// matrix entry at ((I,u),(J,v)) equals F_{(I-J) mod d1}[(u-v) mod d2].
// In gfp ordering there is a single row indexed by the carrier.
struct BlockCirculantForm {
  int64_t blocks = 1;                     // d1 (1 for gfp)
  int64_t block_size = 0;                 // d2 (p for gfp)
  std::vector<std::vector<int>> rows;     // blocks x block_size
};

BlockCirculantForm block_circulant_form(const RingScheme& rs, const SchemeView& view,
                                        int display_cls);
// expand to a dense n x n 0/1 matrix in view order
std::vector<std::vector<int>> expand_block_circulant(const BlockCirculantForm& f);
// dense adjacency matrix straight from the relation table, in view order
std::vector<std::vector<int>> adjacency_matrix(const RingScheme& rs, const SchemeView& view,
                                               int display_cls);

// ---- spectra ------------------------------------------------------------------

// One row of the first eigenmatrix: the common eigenvalue vector of a group
// of characters of Z_d1 x Z_d2 (grouped within max component distance 1e-6).
struct EigenRow {
  int64_t multiplicity = 0;
  std::array<int64_t, 2> character{0, 0};   // first (m1, m2) in the group
  std::vector<std::complex<double>> values; // one eigenvalue per class
};

// row 0 is the trivial character (valencies); internal class columns
std::vector<EigenRow> eigenmatrix(const RingScheme& rs);

// ---- structure tests ----------------------------------------------------------

struct AxiomCheck {
  bool ok = true;
  std::string witness;  // empty when ok
};

// the five defining conditions: partition, symmetry, identity, product
// expansion A_i A_j = sum_k p_ij^k A_k (every entry of every product is
// recomputed), commutativity
struct AxiomReport {
  AxiomCheck partition, symmetry, identity, products, commutativity;
  bool all_ok() const {
    return partition.ok && symmetry.ok && identity.ok && products.ok && commutativity.ok;
  }
};

AxiomReport verify_axioms(const Scheme& s);

// intersection-number contract: tensor from representative pairs, then
// validated constant over every pair of each class (throws on violation)
void validate_intersection_numbers(const Scheme& s);

struct PrimitivityResult {
  bool primitive = true;
  std::vector<int> witness;  // a proper closed subset (with 0) when imprimitive
};

// Model-level check, independent of any primality criterion: scans the
// closure of {0, a} for every nonzero class a under "k joins whenever
// p_ij^k != 0"; any proper closure is a nontrivial equivalence.
PrimitivityResult is_primitive_bruteforce(const Scheme& s);

struct PseudocyclicReport {
  bool constant = false;
  std::vector<int64_t> sums;  // sum_i p_ii^k for k = 1..d
};

PseudocyclicReport is_pseudocyclic(const Scheme& s);

// refined scheme of the sign subgroup plus the merge map onto the full
// unit-group classes (each coarse class is a union of at most two)
struct SignedRefinement {
  RingScheme refined;
  std::vector<std::vector<int>> merge;  // coarse class -> refined classes
};

SignedRefinement signed_refinement(const QuotientRing& ring);

}  // namespace zilat
