#include "doctest.h"

#include <cstring>
#include <string>

#include "zilat.h"

namespace {

// take ownership of a C string result and require success
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  zilat_free_string(s);
  return out;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

struct Ring {
  zilat_ring* h = nullptr;
  explicit Ring(zilat_gint a) : h(zilat_ring_new(a)) {}
  ~Ring() { zilat_ring_free(h); }
};

struct SchemeH {
  zilat_scheme* h = nullptr;
  SchemeH(const zilat_ring* r, const char* ord) : h(zilat_scheme_new(r, ord)) {}
  ~SchemeH() { zilat_scheme_free(h); }
};

}  // namespace

TEST_CASE("version and error plumbing") {
  REQUIRE(zilat_version() != nullptr);
  CHECK(std::strlen(zilat_version()) > 0);
  zilat_free_string(nullptr);  // must be a no-op
}

TEST_CASE("gint parse/format round trip") {
  zilat_gint z;
  REQUIRE(zilat_parse_gint("3-2i", &z) == ZILAT_OK);
  CHECK(z.re == 3);
  CHECK(z.im == -2);
  CHECK(take(zilat_format_gint(z)) == "3-2i");
  CHECK(take(zilat_format_gint({0, 0})) == "0");
  CHECK(take(zilat_format_gint({0, -1})) == "-i");
  CHECK(zilat_gint_norm({3, -2}) == 13);

  CHECK(zilat_parse_gint("zzz", &z) == ZILAT_ERR_USAGE);
  CHECK(std::strlen(zilat_last_error()) > 0);
  CHECK(zilat_parse_gint("", &z) == ZILAT_ERR_USAGE);
  CHECK(zilat_parse_gint(nullptr, &z) == ZILAT_ERR_USAGE);
  CHECK(zilat_parse_gint("1", nullptr) == ZILAT_ERR_USAGE);
}

TEST_CASE("gint arithmetic entry points") {
  zilat_gint out;
  REQUIRE(zilat_canonical_associate({-2, 2}, &out) == ZILAT_OK);
  CHECK(out.re == 2);
  CHECK(out.im == 2);
  CHECK(zilat_canonical_associate({0, 0}, &out) == ZILAT_ERR_DOMAIN);

  CHECK(zilat_is_prime({3, 2}) == 1);
  CHECK(zilat_is_prime({2, 2}) == 0);
  CHECK(zilat_is_prime({3, 0}) == 1);
  CHECK(zilat_is_prime({13, 0}) == 0);

  zilat_gint q, r;
  REQUIRE(zilat_divmod({7, 3}, {2, 1}, &q, &r) == ZILAT_OK);
  CHECK(q.re * 2 - q.im * 1 + r.re == 7);
  CHECK(q.re * 1 + q.im * 2 + r.im == 3);
  CHECK(2 * (r.re * r.re + r.im * r.im) <= 5);
  CHECK(zilat_divmod({1, 0}, {0, 0}, &q, &r) == ZILAT_ERR_DOMAIN);

  REQUIRE(zilat_gcd({5, 0}, {3, 4}, &out) == ZILAT_OK);
  CHECK(out.re == 2);
  CHECK(out.im == 1);
  CHECK(zilat_gcd({0, 0}, {0, 0}, &out) == ZILAT_ERR_DOMAIN);
}

TEST_CASE("ring handles") {
  Ring ring({2, 2});
  REQUIRE(ring.h != nullptr);
  const zilat_gint a = zilat_ring_alpha(ring.h);
  CHECK(a.re == 2);
  CHECK(a.im == 2);
  CHECK(zilat_ring_order(ring.h) == 8);
  CHECK(zilat_ring_d1(ring.h) == 2);
  CHECK(zilat_ring_d2(ring.h) == 4);

  for (int64_t idx = 0; idx < 8; ++idx) {
    const zilat_gint res = zilat_ring_residue(ring.h, idx);
    CHECK(zilat_ring_index_of(ring.h, res) == idx);
    const zilat_gint red = zilat_ring_reduce(ring.h, res);
    CHECK(red.re == res.re);
    CHECK(red.im == res.im);
  }
  CHECK(zilat_ring_index_of(ring.h, {4, 4}) == 0);
  CHECK(zilat_ring_order(nullptr) == -1);
  CHECK(zilat_ring_index_of(ring.h, {0, 0}) == 0);
  CHECK(zilat_ring_residue(ring.h, 99).re == 0);  // out of range -> error value
  CHECK(zilat_ring_new({1, 0}) == nullptr);
  CHECK(std::strlen(zilat_last_error()) > 0);
  CHECK(zilat_ring_new({0, 0}) == nullptr);
  zilat_ring_free(nullptr);  // no-op
}

TEST_CASE("scheme handles: coords") {
  Ring ring({2, 2});
  SchemeH s(ring.h, "coords");
  REQUIRE(s.h != nullptr);
  CHECK(zilat_scheme_points(s.h) == 8);
  CHECK(zilat_scheme_classes(s.h) == 4);
  CHECK(zilat_scheme_valency(s.h, 0) == 1);
  CHECK(zilat_scheme_valency(s.h, 1) == 4);
  CHECK(zilat_scheme_valency(s.h, 2) == 1);
  CHECK(zilat_scheme_valency(s.h, 3) == 2);
  CHECK(zilat_scheme_valency(s.h, 4) == -1);
  CHECK(zilat_scheme_p(s.h, 1, 1, 2) == 4);
  CHECK(zilat_scheme_p(s.h, 3, 3, 2) == 2);
  CHECK(zilat_scheme_p(s.h, 0, 0, 0) == 1);
  CHECK(zilat_scheme_p(s.h, 9, 0, 0) == -1);
  CHECK(zilat_scheme_rel(s.h, 0, 0) == 0);
  CHECK(zilat_scheme_rel(s.h, 0, 2) == 2);
  CHECK(zilat_scheme_rel(s.h, 0, 99) == -1);
  CHECK(zilat_scheme_is_primitive(s.h) == 0);
  CHECK(zilat_scheme_is_primitive(nullptr) == -1);
}

TEST_CASE("scheme handles: gfp ordering and failures") {
  Ring r13({3, 2});
  SchemeH gfp(r13.h, "gfp");
  REQUIRE(gfp.h != nullptr);
  CHECK(zilat_scheme_points(gfp.h) == 13);
  CHECK(zilat_scheme_classes(gfp.h) == 4);
  // row zero of the relation table in carrier order
  const int expect[13] = {0, 1, 3, 3, 2, 1, 2, 2, 1, 2, 3, 3, 1};
  for (int64_t g = 0; g < 13; ++g) CHECK(zilat_scheme_rel(gfp.h, 0, g) == expect[g]);
  CHECK(zilat_scheme_is_primitive(gfp.h) == 1);

  Ring r8({2, 2});
  CHECK(zilat_scheme_new(r8.h, "gfp") == nullptr);  // order 8 not prime
  CHECK(zilat_scheme_new(r13.h, "weird") == nullptr);
  CHECK(zilat_scheme_new(nullptr, "coords") == nullptr);
  CHECK(zilat_scheme_new(r13.h, nullptr) == nullptr);
}

TEST_CASE("render_factor") {
  const std::string text = take(zilat_render_factor({13, 0}, "text"));
  CHECK(contains(text, "2+3i"));
  CHECK(contains(text, "3+2i"));
  const std::string js = take(zilat_render_factor({13, 0}, "json"));
  CHECK(contains(js, "\"schema_version\": 1"));
  CHECK(zilat_render_factor({0, 0}, "text") == nullptr);
  CHECK(zilat_render_factor({13, 0}, "yaml") == nullptr);
}

TEST_CASE("render_ring") {
  Ring ring({2, 2});
  const std::string text = take(zilat_render_ring(ring.h, "text"));
  CHECK(contains(text, "d1"));
  CHECK(contains(text, "8"));
  CHECK(take(zilat_render_ring(ring.h, "json")).find("\"order\": 8") != std::string::npos);
  CHECK(zilat_render_ring(nullptr, "text") == nullptr);
}

TEST_CASE("render_scheme modes") {
  Ring ring({2, 2});
  SchemeH s(ring.h, "coords");
  CHECK(contains(take(zilat_render_scheme(s.h, "summary", "text")), "[0,1,2,1|3,1,3,1]"));
  CHECK(contains(take(zilat_render_scheme(s.h, "vector", "text")), "[0,1,2,1|3,1,3,1]"));
  CHECK(contains(take(zilat_render_scheme(s.h, "matrices", "text")), "A1"));
  CHECK(contains(take(zilat_render_scheme(s.h, "pmatrix", "text")), "mult"));
  CHECK(contains(take(zilat_render_scheme(s.h, "tensor", "text")), "p_ij^k"));
  const std::string verify = take(zilat_render_scheme(s.h, "verify", "text"));
  CHECK(contains(verify, "result: PASS"));
  CHECK(contains(verify, "primitive = no"));
  CHECK(contains(take(zilat_render_scheme(s.h, "refined", "text")), "R1 <- {S1, S4}"));
  CHECK(contains(take(zilat_render_scheme(s.h, "summary", "json")), "\"schema_version\": 1"));
  CHECK(zilat_render_scheme(s.h, "bogus", "text") == nullptr);
  CHECK(zilat_render_scheme(s.h, "summary", "bogus") == nullptr);
  CHECK(zilat_render_scheme(nullptr, "summary", "text") == nullptr);
}

TEST_CASE("scheme matrix csv") {
  Ring ring({2, 2});
  SchemeH s(ring.h, "coords");
  const std::string csv = take(zilat_scheme_matrix_csv(s.h, 0));
  CHECK(csv.substr(0, 15) == "1,0,0,0,0,0,0,0");
  CHECK(zilat_scheme_matrix_csv(s.h, 9) == nullptr);
}

TEST_CASE("render_quotient family") {
  Ring ring({2, 2});
  const std::string over = take(zilat_render_quotient_overview(ring.h, "text"));
  CHECK(contains(over, "{0,2}"));
  CHECK(contains(over, "{0,2,3}"));

  const std::string q = take(zilat_render_quotient(ring.h, "0,2", "summary", "text"));
  CHECK(contains(q, "[0,1,2,1]"));
  const std::string qv = take(zilat_render_quotient(ring.h, "0,2", "vector", "text"));
  CHECK(qv == "[0,1,2,1]\n");
  // zero_tilde may use Gaussian-integer members instead of class indices
  const std::string qg = take(zilat_render_quotient(ring.h, "0,2+0i", "vector", "text"));
  CHECK(qg == "[0,1,2,1]\n");
  CHECK(zilat_render_quotient(ring.h, "0,1", "summary", "text") == nullptr);  // not closed
  CHECK(zilat_render_quotient(ring.h, "", "summary", "text") == nullptr);
  CHECK(zilat_render_quotient(ring.h, "0,2", "bogus", "text") == nullptr);
}

TEST_CASE("render_chain") {
  const std::string text = take(zilat_render_chain({2, 2}, "text"));
  CHECK(contains(text, "2+2i"));
  CHECK(contains(text, "1+i"));
  const std::string js = take(zilat_render_chain({5, 12}, "json"));
  CHECK(contains(js, "\"clean\""));
  CHECK(zilat_render_chain({1, 0}, "text") == nullptr);
}

TEST_CASE("render_tiles and svg") {
  CHECK(contains(take(zilat_render_tiles({3, 2}, "classify", "text")), "SPLIT_PRIME"));
  CHECK(contains(take(zilat_render_tiles({5, 12}, "clean", "text")), "clean"));
  CHECK(contains(take(zilat_render_tiles({1, 1}, "reps", "text")), "0, i"));
  CHECK(contains(take(zilat_render_tiles({2, 2}, "summary", "text")), "COMPOSITE"));
  CHECK(zilat_render_tiles({2, 2}, "bogus", "text") == nullptr);
  CHECK(zilat_render_tiles({1, 0}, "classify", "text") == nullptr);

  const std::string svg = take(zilat_render_svg({2, 2}, 0));
  CHECK(svg.substr(0, 4) == "<svg");
  CHECK(zilat_render_svg({50, 0}, 0) == nullptr);  // norm 2500 over the cap
}

TEST_CASE("render_code") {
  const std::string table = take(zilat_render_code(13, "3+2i", "table", "text"));
  CHECK(contains(table, "4 -> -1+i"));
  CHECK(contains(table, "11 -> -2"));
  const std::string auto_pi = take(zilat_render_code(13, nullptr, "table", "text"));
  CHECK(contains(auto_pi, "4 -> -1+i"));
  const std::string inert = take(zilat_render_code(7, nullptr, "table", "text"));
  CHECK(contains(inert, "32 -> -3-3i"));
  const std::string dist = take(zilat_render_code(5, nullptr, "distances", "text"));
  CHECK(contains(dist, "weight"));
  CHECK(zilat_render_code(9, nullptr, "table", "text") == nullptr);
  CHECK(zilat_render_code(2, nullptr, "table", "text") == nullptr);
  CHECK(zilat_render_code(7, "3+2i", "table", "text") == nullptr);   // pi given for inert p
  CHECK(zilat_render_code(13, "2+2i", "table", "text") == nullptr);  // wrong norm
  CHECK(zilat_render_code(13, nullptr, "bogus", "text") == nullptr);
}

TEST_CASE("render_sweep") {
  const std::string text = take(zilat_render_sweep(30, "axioms", "text"));
  CHECK(contains(text, "result: PASS"));
  CHECK(contains(text, "failures = 0"));
  const std::string js = take(zilat_render_sweep(20, "all", "json"));
  CHECK(contains(js, "\"schema_version\": 1"));
  CHECK(contains(js, "\"rows\""));
  CHECK(zilat_render_sweep(1000, "axioms", "text") == nullptr);
  CHECK(zilat_render_sweep(1, "axioms", "text") == nullptr);
  CHECK(zilat_render_sweep(30, "bogus", "text") == nullptr);
}
