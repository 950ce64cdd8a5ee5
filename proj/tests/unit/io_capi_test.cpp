// Copyright 2026 The psb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include <json.hpp>
#include <memory>
#include <string>

#include "psb/error.hpp"
#include "psb/io.hpp"
#include "psb/psb.h"
#include "psb/topology.hpp"
#include "../support/generators.hpp"

using namespace psb;

namespace {

std::string take(char* s)
{
  std::string out = s ? s : "";
  psb_string_free(s);
  return out;
}

} // namespace

TEST_CASE("json round trips")
{
  psbtest::Rng rng(91);
  for (int t = 0; t < 30; ++t) {
    const auto colors = rng.between(2, 4);
    const auto size = static_cast<Point>(rng.between(1, 5));
    const auto gem = from_tuple(psbtest::random_tuple(rng, size, colors), size);
    CHECK(gem_from_json(gem_to_json(gem)) == gem);

    const Point a = rng.between(0, size), b = rng.between(0, size);
    const auto s = forget_labels(gem, a, b);
    CHECK(bordism_from_json(bordism_to_json(s)) == s);

    const auto cx = build_complex(gem);
    const auto back = complex_from_json(complex_to_json(cx));
    CHECK(f_vector(back) == f_vector(cx));
    CHECK(back.signs() == cx.signs());
    CHECK(is_isomorphic(back, cx));

    const auto xi = psbtest::random_state(rng, std::vector<std::size_t>(colors, 2));
    const auto xi2 = state_from_json(state_to_json(xi));
    CHECK(xi2.dims() == xi.dims());
    for (std::size_t v = 0; v < xi.total_dim(); ++v)
      CHECK(std::abs(xi2[v] - xi[v]) < 1e-12);

    const auto m = rho_bar(psbtest::random_tuple(rng, 2, colors), 1, 1, xi);
    CHECK(max_abs_diff(matrix_from_json(matrix_to_json(m)), m) < 1e-12);
  }
}

TEST_CASE("json errors")
{
  CHECK_THROWS_AS(gem_from_json("{"), ParseError);
  CHECK_THROWS_AS(gem_from_json("[1, 2]"), ParseError);
  CHECK_THROWS_AS(state_from_json(R"({"dims": [2], "coefficients": "x"})"), ParseError);
  // Well-formed but not a bijection.
  const auto bad = nlohmann::json::parse(gem_to_json(from_tuple(parse_tuple("(1 2); e"))));
  auto broken = bad;
  broken["matchings"][0] = {1, 1};
  CHECK_THROWS_AS(gem_from_json(broken.dump()), Error);
}

TEST_CASE("dot export and complex formatting")
{
  const auto dot = gem_to_dot(from_tuple(parse_tuple("(1 2); e")));
  CHECK_THAT(dot, Catch::Matchers::StartsWith("graph"));
  CHECK_THAT(dot, Catch::Matchers::ContainsSubstring("p1"));
  CHECK_THAT(dot, Catch::Matchers::ContainsSubstring("m2"));
  CHECK(format_complex({1, 0}) == "1.000000000000 + 0.000000000000i");
  CHECK(format_complex({0.5, -0.25}) == "0.500000000000 - 0.250000000000i");
}

TEST_CASE("C API: tuples and errors")
{
  CHECK(std::string(psb_version()).size() > 0);
  psb_tuple* g = nullptr;
  REQUIRE(psb_tuple_parse("(1 2); e", &g) == PSB_OK);
  CHECK(psb_tuple_colors(g) == 2);
  CHECK(psb_tuple_degree(g) == 2);
  char* text = nullptr;
  REQUIRE(psb_tuple_format(g, &text) == PSB_OK);
  CHECK(take(text) == "(1 2); e");

  psb_tuple* bad = nullptr;
  CHECK(psb_tuple_parse("(1 2", &bad) == PSB_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK_THAT(std::string(psb_last_error()), Catch::Matchers::ContainsSubstring("unterminated"));
  CHECK(psb_tuple_parse(nullptr, &bad) == PSB_ERR_ARGUMENT);

  psb_tuple* p = nullptr;
  REQUIRE(psb_tuple_product(g, g, 0, 0, 0, &p) == PSB_OK);
  psb_tuple* star = nullptr;
  REQUIRE(psb_tuple_involution(g, &star) == PSB_OK);
  psb_tuple_free(star);
  psb_tuple_free(p);

  psb_tuple* three = nullptr;
  REQUIRE(psb_tuple_parse("e; e; e", &three) == PSB_OK);
  CHECK(psb_tuple_product(g, three, 0, 0, 0, &p) == PSB_ERR_STRUCTURE);
  psb_tuple_free(three);
  psb_tuple_free(g);
}

TEST_CASE("C API: bordisms, complexes and representations")
{
  psb_tuple* g = nullptr;
  REQUIRE(psb_tuple_parse("(1 2); (2 3); e", &g) == PSB_OK);

  psb_bordism* s = nullptr;
  REQUIRE(psb_bordism_from_tuple(g, 1, 1, &s) == PSB_OK);
  CHECK(psb_bordism_source(s) == 1);
  CHECK(psb_bordism_target(s) == 1);
  psb_bordism* id = nullptr;
  REQUIRE(psb_bordism_identity(2, 1, &id) == PSB_OK);
  psb_bordism* sid = nullptr;
  REQUIRE(psb_bordism_compose(s, id, &sid) == PSB_OK);
  int equal = 0;
  REQUIRE(psb_bordism_equal(s, sid, &equal) == PSB_OK);
  CHECK(equal == 1);
  char* hex = nullptr;
  REQUIRE(psb_bordism_canonical_hex(s, &hex) == PSB_OK);
  CHECK(take(hex).rfind("000000020000000100000001", 0) == 0);
  psb_bordism* wrong = nullptr;
  psb_bordism* id2 = nullptr;
  REQUIRE(psb_bordism_identity(2, 2, &id2) == PSB_OK);
  CHECK(psb_bordism_compose(s, id2, &wrong) == PSB_ERR_STRUCTURE);

  psb_gem* gem = nullptr;
  REQUIRE(psb_gem_from_tuple(g, 0, &gem) == PSB_OK);
  CHECK(psb_gem_dimension(gem) == 2);
  CHECK(psb_gem_size(gem) == 3);
  psb_complex* cx = nullptr;
  REQUIRE(psb_complex_from_gem(gem, &cx) == PSB_OK);
  std::size_t counts[4] = {};
  std::size_t n = 0;
  REQUIRE(psb_complex_f_vector(cx, counts, 4, &n) == PSB_OK);
  CHECK(n == 3);
  CHECK(counts[2] == 6);
  int flag = 0;
  REQUIRE(psb_complex_is_pseudomanifold(cx, &flag) == PSB_OK);
  CHECK(flag == 1);
  REQUIRE(psb_complex_is_normal(cx, &flag) == PSB_OK);
  CHECK(flag == 1);
  char* report = nullptr;
  REQUIRE(psb_complex_report(cx, &report) == PSB_OK);
  CHECK_THAT(take(report), Catch::Matchers::ContainsSubstring("normal: yes"));

  const std::size_t dims[3] = {2, 2, 2};
  psb_state* xi = nullptr;
  REQUIRE(psb_state_uniform(dims, 3, &xi) == PSB_OK);
  double re = 0, im = 0, re2 = 0, im2 = 0;
  REQUIRE(psb_spherical_direct(g, xi, &re, &im) == PSB_OK);
  REQUIRE(psb_spherical_combinatorial(gem, xi, 0, &re2, &im2) == PSB_OK);
  CHECK(re == Catch::Approx(re2).margin(1e-12));
  CHECK(im == Catch::Approx(im2).margin(1e-12));

  psb_matrix* m = nullptr;
  REQUIRE(psb_rho_bar(g, 1, 1, xi, 0, &m) == PSB_OK);
  psb_matrix* mb = nullptr;
  REQUIRE(psb_rho_bar_bordism(s, xi, 0, &mb) == PSB_OK);
  REQUIRE(psb_matrix_rows(m) == 8);
  REQUIRE(psb_matrix_cols(mb) == 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      REQUIRE(psb_matrix_entry(m, i, j, &re, &im) == PSB_OK);
      REQUIRE(psb_matrix_entry(mb, i, j, &re2, &im2) == PSB_OK);
      CHECK(re == Catch::Approx(re2).margin(1e-12));
      CHECK(im == Catch::Approx(im2).margin(1e-12));
    }
  CHECK(psb_matrix_entry(m, 8, 0, &re, &im) == PSB_ERR_ARGUMENT);
  psb_matrix* big = nullptr;
  CHECK(psb_rho_bar(g, 3, 0, xi, 100, &big) == PSB_ERR_CAP);

  const double coeffs[2] = {0, 0};
  const std::size_t one[2] = {1, 1};
  psb_state* zero = nullptr;
  CHECK(psb_state_create(one, 2, coeffs, nullptr, &zero) == PSB_ERR_STRUCTURE);

  psb_matrix_free(mb);
  psb_matrix_free(m);
  psb_state_free(xi);
  psb_complex_free(cx);
  psb_gem_free(gem);
  psb_bordism_free(id2);
  psb_bordism_free(sid);
  psb_bordism_free(id);
  psb_bordism_free(s);
  psb_tuple_free(g);
}
