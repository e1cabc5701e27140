#include "zilat.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "coding.hpp"
#include "format.hpp"
#include "gaussian.hpp"
#include "quotient.hpp"
#include "ring.hpp"
#include "scheme.hpp"
#include "sweep.hpp"
#include "tiling.hpp"

struct zilat_ring {
  zilat::QuotientRing ring;
};

struct zilat_scheme {
  zilat::RingScheme rs;
  zilat::SchemeView view;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what; }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) {
    set_error("out of memory");
    return nullptr;
  }
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// run a renderer, converting exceptions into NULL + last_error
template <class F>
char* render_guard(F&& fn) {
  try {
    return dup_string(fn());
  } catch (const std::exception& e) {
    set_error(e.what());
    return nullptr;
  }
}

zilat::GaussInt from_c(zilat_gint z) { return {z.re, z.im}; }
zilat_gint to_c(zilat::GaussInt z) { return {z.re, z.im}; }

const zilat::QuotientRing* ring_of(const zilat_ring* r) { return r ? &r->ring : nullptr; }

}  // namespace

extern "C" {

const char* zilat_version(void) { return "1.0.0"; }

const char* zilat_last_error(void) { return g_last_error.c_str(); }

void zilat_free_string(char* s) { std::free(s); }

/* ---- Gaussian integers ------------------------------------------------ */

zilat_status zilat_parse_gint(const char* text, zilat_gint* out) {
  if (!text || !out) {
    set_error("null argument");
    return ZILAT_ERR_USAGE;
  }
  try {
    *out = to_c(zilat::parse_gauss(text));
    return ZILAT_OK;
  } catch (const std::exception& e) {
    set_error(e.what());
    return ZILAT_ERR_USAGE;
  }
}

char* zilat_format_gint(zilat_gint z) { return dup_string(zilat::to_string(from_c(z))); }

int64_t zilat_gint_norm(zilat_gint z) { return zilat::norm(from_c(z)); }

zilat_status zilat_canonical_associate(zilat_gint z, zilat_gint* out) {
  if (!out) {
    set_error("null argument");
    return ZILAT_ERR_USAGE;
  }
  try {
    *out = to_c(zilat::canonical_associate(from_c(z)));
    return ZILAT_OK;
  } catch (const std::exception& e) {
    set_error(e.what());
    return ZILAT_ERR_DOMAIN;
  }
}

int zilat_is_prime(zilat_gint z) { return zilat::is_gaussian_prime(from_c(z)) ? 1 : 0; }

zilat_status zilat_divmod(zilat_gint x, zilat_gint y, zilat_gint* q, zilat_gint* r) {
  if (!q || !r) {
    set_error("null argument");
    return ZILAT_ERR_USAGE;
  }
  try {
    const zilat::DivModResult res = zilat::divmod_nearest(from_c(x), from_c(y));
    *q = to_c(res.q);
    *r = to_c(res.r);
    return ZILAT_OK;
  } catch (const std::exception& e) {
    set_error(e.what());
    return ZILAT_ERR_DOMAIN;
  }
}

zilat_status zilat_gcd(zilat_gint a, zilat_gint b, zilat_gint* out) {
  if (!out) {
    set_error("null argument");
    return ZILAT_ERR_USAGE;
  }
  try {
    *out = to_c(zilat::gcd(from_c(a), from_c(b)));
    return ZILAT_OK;
  } catch (const std::exception& e) {
    set_error(e.what());
    return ZILAT_ERR_DOMAIN;
  }
}

/* ---- quotient rings ---------------------------------------------------- */

zilat_ring* zilat_ring_new(zilat_gint alpha) {
  try {
    return new zilat_ring{zilat::QuotientRing(from_c(alpha))};
  } catch (const std::exception& e) {
    set_error(e.what());
    return nullptr;
  }
}

void zilat_ring_free(zilat_ring* ring) { delete ring; }

zilat_gint zilat_ring_alpha(const zilat_ring* ring) {
  return ring ? to_c(ring->ring.alpha()) : zilat_gint{0, 0};
}

int64_t zilat_ring_order(const zilat_ring* ring) { return ring ? ring->ring.order() : -1; }

int64_t zilat_ring_d1(const zilat_ring* ring) { return ring ? ring->ring.d1() : -1; }

int64_t zilat_ring_d2(const zilat_ring* ring) { return ring ? ring->ring.d2() : -1; }

zilat_gint zilat_ring_reduce(const zilat_ring* ring, zilat_gint x) {
  return ring ? to_c(ring->ring.reduce(from_c(x))) : zilat_gint{0, 0};
}

int64_t zilat_ring_index_of(const zilat_ring* ring, zilat_gint x) {
  return ring ? ring->ring.index_of(from_c(x)) : -1;
}

zilat_gint zilat_ring_residue(const zilat_ring* ring, int64_t index) {
  if (!ring || index < 0 || index >= ring->ring.order()) return {0, 0};
  return to_c(ring->ring.residue(index));
}

/* ---- association schemes ----------------------------------------------- */

zilat_scheme* zilat_scheme_new(const zilat_ring* ring, const char* ordering) {
  if (!ring || !ordering) {
    set_error("null argument");
    return nullptr;
  }
  try {
    zilat::RingScheme rs = zilat::build_scheme(ring->ring);
    zilat::SchemeView view = zilat::make_view(rs, zilat::parse_ordering(ordering));
    return new zilat_scheme{std::move(rs), std::move(view)};
  } catch (const std::exception& e) {
    set_error(e.what());
    return nullptr;
  }
}

void zilat_scheme_free(zilat_scheme* s) { delete s; }

int64_t zilat_scheme_points(const zilat_scheme* s) { return s ? s->rs.scheme.n : -1; }

int zilat_scheme_classes(const zilat_scheme* s) { return s ? s->rs.scheme.d + 1 : -1; }

int64_t zilat_scheme_valency(const zilat_scheme* s, int cls) {
  if (!s || cls < 0 || cls > s->rs.scheme.d) return -1;
  return s->rs.scheme.valency[s->view.internal_class[cls]];
}

int64_t zilat_scheme_p(const zilat_scheme* s, int i, int j, int k) {
  if (!s) return -1;
  const int d = s->rs.scheme.d;
  if (i < 0 || j < 0 || k < 0 || i > d || j > d || k > d) return -1;
  return s->rs.scheme.p(s->view.internal_class[i], s->view.internal_class[j],
                        s->view.internal_class[k]);
}

int zilat_scheme_rel(const zilat_scheme* s, int64_t x, int64_t y) {
  if (!s || x < 0 || y < 0 || x >= s->rs.scheme.n || y >= s->rs.scheme.n) return -1;
  const int internal = s->rs.scheme.rel_at(s->view.point_order[x], s->view.point_order[y]);
  return s->view.display_class[internal];
}

int zilat_scheme_is_primitive(const zilat_scheme* s) {
  if (!s) return -1;
  try {
    return zilat::is_primitive_bruteforce(s->rs.scheme).primitive ? 1 : 0;
  } catch (const std::exception& e) {
    set_error(e.what());
    return -1;
  }
}

/* ---- document renderers ------------------------------------------------ */

char* zilat_render_factor(zilat_gint alpha, const char* format) {
  if (!format) {
    set_error("null argument");
    return nullptr;
  }
  return render_guard(
      [&] { return zilat::render_factor(from_c(alpha), zilat::parse_format(format)); });
}

char* zilat_render_ring(const zilat_ring* ring, const char* format) {
  if (!ring_of(ring) || !format) {
    set_error("null argument");
    return nullptr;
  }
  return render_guard([&] { return zilat::render_ring(ring->ring, zilat::parse_format(format)); });
}

char* zilat_render_scheme(const zilat_scheme* s, const char* mode, const char* format) {
  if (!s || !mode || !format) {
    set_error("null argument");
    return nullptr;
  }
  return render_guard(
      [&] { return zilat::render_scheme(s->rs, s->view, mode, zilat::parse_format(format)); });
}

char* zilat_scheme_matrix_csv(const zilat_scheme* s, int cls) {
  if (!s || cls < 0 || cls > s->rs.scheme.d) {
    set_error("class index out of range");
    return nullptr;
  }
  return render_guard([&] { return zilat::scheme_matrices_csv(s->rs, s->view)[cls].second; });
}

char* zilat_render_quotient_overview(const zilat_ring* ring, const char* format) {
  if (!ring || !format) {
    set_error("null argument");
    return nullptr;
  }
  return render_guard([&] {
    return zilat::render_quotient_overview(zilat::build_scheme(ring->ring),
                                           zilat::parse_format(format));
  });
}

char* zilat_render_quotient(const zilat_ring* ring, const char* zero_tilde, const char* mode,
                            const char* format) {
  if (!ring || !zero_tilde || !mode || !format) {
    set_error("null argument");
    return nullptr;
  }
  return render_guard([&] {
    const zilat::RingScheme rs = zilat::build_scheme(ring->ring);
    return zilat::render_quotient(rs, zilat::parse_zero_tilde(rs, zero_tilde), mode,
                                  zilat::parse_format(format));
  });
}

char* zilat_render_chain(zilat_gint alpha, const char* format) {
  if (!format) {
    set_error("null argument");
    return nullptr;
  }
  return render_guard(
      [&] { return zilat::render_chain(from_c(alpha), zilat::parse_format(format)); });
}

char* zilat_render_tiles(zilat_gint alpha, const char* mode, const char* format) {
  if (!mode || !format) {
    set_error("null argument");
    return nullptr;
  }
  return render_guard(
      [&] { return zilat::render_tiles(from_c(alpha), mode, zilat::parse_format(format)); });
}

char* zilat_render_svg(zilat_gint alpha, int64_t window) {
  return render_guard([&] {
    zilat::SvgOptions opts;
    opts.window = window;
    return zilat::render_svg(from_c(alpha), opts);
  });
}

char* zilat_render_code(int64_t p, const char* pi, const char* mode, const char* format) {
  if (!mode || !format) {
    set_error("null argument");
    return nullptr;
  }
  return render_guard([&] {
    zilat::GaussInt parsed{0, 0};
    const zilat::GaussInt* pi_ptr = nullptr;
    if (pi) {
      parsed = zilat::parse_gauss(pi);
      pi_ptr = &parsed;
    }
    return zilat::render_code(p, pi_ptr, mode, zilat::parse_format(format));
  });
}

char* zilat_render_sweep(int64_t max_norm, const char* check, const char* format) {
  if (!check || !format) {
    set_error("null argument");
    return nullptr;
  }
  return render_guard([&] {
    return zilat::render_sweep(zilat::run_sweep(max_norm, check), zilat::parse_format(format));
  });
}

} /* extern "C" */
