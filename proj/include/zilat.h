#ifndef ZILAT_H
#define ZILAT_H

/* C interface to the zilat library: association schemes on the quotient
 * rings Z[i]/alpha Z[i], their quotient schemes, circulant structure, square
 * tilings, and Mannheim-metric constellations.
 *
 * Conventions:
 *  - Functions returning a pointer give NULL on failure; functions returning
 *    a status give ZILAT_OK on success. The failure message is available via
 *    zilat_last_error() (thread local) until the next failing call.
 *  - Strings returned as char* are owned by the caller: release them with
 *    zilat_free_string().
 *  - Query functions on handles return -1 on invalid arguments.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zilat_status {
  ZILAT_OK = 0,
  ZILAT_ERR_DOMAIN = 1, /* violated precondition (bad alpha, non-prime p, ...) */
  ZILAT_ERR_USAGE = 2   /* malformed request (unknown mode/format/ordering) */
} zilat_status;

/* Gaussian integer re + im*i */
typedef struct zilat_gint {
  int64_t re;
  int64_t im;
} zilat_gint;

typedef struct zilat_ring zilat_ring;     /* Z[i]/alpha Z[i] */
typedef struct zilat_scheme zilat_scheme; /* unit-orbit association scheme on a ring */

/* ---- library ---------------------------------------------------------- */

const char* zilat_version(void);
const char* zilat_last_error(void);
void zilat_free_string(char* s);

/* ---- Gaussian integers ------------------------------------------------ */

/* forms like "0", "7", "-2i", "3-2i"; whitespace tolerated */
zilat_status zilat_parse_gint(const char* text, zilat_gint* out);
char* zilat_format_gint(zilat_gint z);
int64_t zilat_gint_norm(zilat_gint z);
/* the associate with re > 0, im >= 0; error on 0 */
zilat_status zilat_canonical_associate(zilat_gint z, zilat_gint* out);
/* 1 or 0 */
int zilat_is_prime(zilat_gint z);
/* nearest-quotient division x = q*y + r, norm(r) <= norm(y)/2; error on y = 0 */
zilat_status zilat_divmod(zilat_gint x, zilat_gint y, zilat_gint* q, zilat_gint* r);
zilat_status zilat_gcd(zilat_gint a, zilat_gint b, zilat_gint* out);

/* ---- quotient rings ---------------------------------------------------- */

/* requires norm(alpha) >= 2 */
zilat_ring* zilat_ring_new(zilat_gint alpha);
void zilat_ring_free(zilat_ring* ring);
zilat_gint zilat_ring_alpha(const zilat_ring* ring);
int64_t zilat_ring_order(const zilat_ring* ring);
int64_t zilat_ring_d1(const zilat_ring* ring);
int64_t zilat_ring_d2(const zilat_ring* ring);
/* canonical minimal-norm representative of the class of x */
zilat_gint zilat_ring_reduce(const zilat_ring* ring, zilat_gint x);
/* residue index of the class of x, in coordinate order */
int64_t zilat_ring_index_of(const zilat_ring* ring, zilat_gint x);
/* representative at a residue index (index in [0, order)) */
zilat_gint zilat_ring_residue(const zilat_ring* ring, int64_t index);

/* ---- association schemes ----------------------------------------------- */

/* ordering: "coords" (block-circulant point order) or "gfp" (GF(p) carrier
 * labels; requires prime order) */
zilat_scheme* zilat_scheme_new(const zilat_ring* ring, const char* ordering);
void zilat_scheme_free(zilat_scheme* s);
int64_t zilat_scheme_points(const zilat_scheme* s);
/* number of classes including class 0 */
int zilat_scheme_classes(const zilat_scheme* s);
int64_t zilat_scheme_valency(const zilat_scheme* s, int cls);
/* intersection number p_ij^k */
int64_t zilat_scheme_p(const zilat_scheme* s, int i, int j, int k);
/* class of the pair at view positions (x, y) */
int zilat_scheme_rel(const zilat_scheme* s, int64_t x, int64_t y);
/* 1 primitive, 0 imprimitive, -1 error */
int zilat_scheme_is_primitive(const zilat_scheme* s);

/* ---- document renderers ------------------------------------------------ */
/* format: "text" or "json"; JSON documents carry "schema_version": 1 */

char* zilat_render_factor(zilat_gint alpha, const char* format);
char* zilat_render_ring(const zilat_ring* ring, const char* format);
/* mode: summary | vector | matrices | pmatrix | tensor | verify | refined */
char* zilat_render_scheme(const zilat_scheme* s, const char* mode, const char* format);
/* one adjacency matrix as CSV rows (0/1 entries) */
char* zilat_scheme_matrix_csv(const zilat_scheme* s, int cls);
/* closed subsets + involutions of the coords-ordered scheme on the ring */
char* zilat_render_quotient_overview(const zilat_ring* ring, const char* format);
/* zero_tilde: comma list of class indices or Gaussian integers, e.g. "0,2";
 * mode: summary | vector */
char* zilat_render_quotient(const zilat_ring* ring, const char* zero_tilde, const char* mode,
                            const char* format);
char* zilat_render_chain(zilat_gint alpha, const char* format);
/* mode: summary | classify | clean | reps */
char* zilat_render_tiles(zilat_gint alpha, const char* mode, const char* format);
/* standalone SVG document; window 0 picks a default */
char* zilat_render_svg(zilat_gint alpha, int64_t window);
/* constellation for an odd prime p; pi optional ("3+2i") for split primes;
 * mode: table | distances */
char* zilat_render_code(int64_t p, const char* pi, const char* mode, const char* format);
/* check: axioms | primitivity | clean | circulant | all; 2 <= max_norm <= 500 */
char* zilat_render_sweep(int64_t max_norm, const char* check, const char* format);

#ifdef __cplusplus
}
#endif

#endif /* ZILAT_H */
