#include <doctest.h>

#include <algorithm>
#include <random>

#include "gld/errors.hpp"
#include "gld/module.hpp"
#include "gld/parser.hpp"
#include "helpers.hpp"

using namespace gld;
using gld::testing::cyclic;
using gld::testing::make;

namespace {

Polynomial P(const std::string& s, int m, int d) { return parse_polynomial(s, RingSignature{m, d}); }

int dim(const BigradedPresentation& g, BiDegree deg) { return piece(g, deg).dim(); }

}  // namespace

TEST_CASE("polynomial arithmetic") {
  CHECK((P("t1 + t2", 0, 2) * P("t1 - t2", 0, 2)) == P("t1^2 - t2^2", 0, 2));
  CHECK((P("x1*t1", 1, 1) + Polynomial(RingSignature{1, 1})) == P("x1*t1", 1, 1));
  CHECK((P("1/2*t1", 1, 1) * P("2/3*t1", 1, 1)) == P("1/3*t1^2", 1, 1));
  CHECK(P("(x1 + t1)^2 - x1^2 - 2*x1*t1", 1, 1) == P("t1^2", 1, 1));
  CHECK(P("4/6", 0, 1).constant_term() == Rational(2, 3));
  CHECK_THROWS_AS(P("t1", 0, 1) + P("t1", 1, 1), InputError);
}

TEST_CASE("parser errors carry columns") {
  try {
    P("t1^", 1, 1);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 4);
  }
  CHECK_THROWS_AS(P("2t1", 1, 1), ParseError);
  CHECK_THROWS_AS(P("t2", 1, 1), ParseError);
  CHECK_THROWS_AS(P("x1 +", 1, 1), ParseError);
  CHECK_THROWS_AS(P("1/0", 1, 1), ParseError);
}

TEST_CASE("non-bihomogeneous relations name the offending monomials") {
  try {
    make(1, 1, {{0, 0}}, {{"x1 + t1^2"}});
    FAIL("expected an input error");
  } catch (const InputError& e) {
    std::string msg = e.what();
    CHECK(msg.find("x1") != std::string::npos);
    CHECK(msg.find("t1^2") != std::string::npos);
  }
}

TEST_CASE("shift") {
  auto s0 = cyclic(0, 1, {});
  CHECK(shift(s0, 0) == s0);
  CHECK(dim(shift(s0, 1), {0, -1}) == 1);
  CHECK(dim(shift(s0, 1), {0, -2}) == 0);

  std::mt19937 rng(7);
  for (int it = 0; it < 10; ++it) {
    auto g = gld::testing::random_presentation(rng);
    for (int a : {-2, 0, 1})
      for (int b : {-1, 2}) {
        auto lhs = shift(shift(g, a), b);
        auto rhs = shift(g, a + b);
        for (const auto& deg : Window{0, 2, -3, 3}.points()) {
          CHECK(dim(lhs, deg) == dim(rhs, deg));
          CHECK(dim(shift(g, a), deg) == dim(g, {deg.x, a + deg.t}));
        }
      }
  }
}

TEST_CASE("reverse") {
  auto g = cyclic(1, 1, {"t1"});
  CHECK(reverse(g).relations().entry(0, 0) == P("-t1", 1, 1));
  CHECK(dim(reverse(g), {0, 0}) == dim(g, {0, 0}));

  // Not bihomogeneous, so only the substitution itself is checked.
  CHECK(P("x1*t2 - t1*0 + t2^2", 1, 2).reversed() == P("-x1*t2 + t2^2", 1, 2));
  auto h = make(1, 2, {{0, 0}}, {{"x1*t2 - x1*t1"}, {"t2^2 + t1*t2"}});
  // Relations are ordered by degree: (0,2) before (1,1).
  CHECK(reverse(h).relations().entry(0, 0) == P("t2^2 + t1*t2", 1, 2));
  CHECK(reverse(h).relations().entry(0, 1) == P("-x1*t2 + x1*t1", 1, 2));

  std::mt19937 rng(11);
  for (int it = 0; it < 20; ++it) {
    auto r = gld::testing::random_presentation(rng);
    CHECK(reverse(reverse(r)) == r);
    for (const auto& deg : Window{0, 3, 0, 3}.points()) CHECK(dim(reverse(r), deg) == dim(r, deg));
  }
}

TEST_CASE("degree pieces") {
  auto s = cyclic(1, 1, {});
  for (int a = -1; a <= 3; ++a)
    for (int b = -1; b <= 3; ++b) CHECK(dim(s, {a, b}) == (a >= 0 && b >= 0 ? 1 : 0));

  // S/(x1): surviving monomials have no x-factor.
  auto sx = cyclic(1, 1, {"x1"});
  for (int a = 0; a <= 3; ++a)
    for (int b = -1; b <= 4; ++b) {
      int expected = 0;
      for (const auto& mono : monomials_of_degree(RingSignature{1, 1}, {a, b}))
        if (mono[0] == 0) ++expected;
      CHECK(dim(sx, {a, b}) == expected);
    }

  auto st = cyclic(0, 2, {"t1", "t2"});
  CHECK(dim(st, {0, 0}) == 1);
  CHECK(dim(st, {0, 1}) == 0);

  // Free module of rank 2 in degree (1,1) over m=d=2: 2 + 2*... pieces.
  auto f = BigradedPresentation::free(RingSignature{2, 2}, {{0, 0}, {1, 0}});
  CHECK(dim(f, {1, 1}) == 4 + 2);
}

TEST_CASE("piece dimensions do not depend on relation order") {
  std::mt19937 rng(3);
  for (int it = 0; it < 20; ++it) {
    auto g = gld::testing::random_presentation(rng);
    std::vector<int> perm(g.num_relations());
    for (int i = 0; i < g.num_relations(); ++i) perm[i] = g.num_relations() - 1 - i;
    auto h = g.with_relation_order(perm);
    for (const auto& deg : Window{0, 3, 0, 3}.points()) CHECK(dim(g, deg) == dim(h, deg));
  }
}

TEST_CASE("presentation order is canonical") {
  auto a = make(1, 1, {{0, 1}, {0, 0}}, {{"0", "t1"}, {"x1", "0"}});
  auto b = make(1, 1, {{0, 0}, {0, 1}}, {{"0", "x1"}, {"t1", "0"}});
  CHECK(a == b);
}

TEST_CASE("t-slices") {
  auto sx = cyclic(1, 1, {"x1"});
  auto slice = t_slice(sx, 0, minimal_slice_cutoff(sx));
  CHECK(slice.signature() == RingSignature{1, 0});
  CHECK(slice == cyclic(1, 0, {"x1"}));

  auto st = cyclic(1, 1, {"t1"});
  auto s1 = t_slice(st, 1, 5);
  for (int a = 0; a <= 4; ++a) CHECK(dim(s1, {a, 0}) == 0);

  auto s = cyclic(1, 1, {});
  for (int k = 0; k <= 3; ++k) {
    auto sk = t_slice(s, k, 0);
    CHECK(sk.num_generators() == 1);
    CHECK(sk.num_relations() == 0);
  }
  CHECK(t_slice(s, -1, 0).num_generators() == 0);

  CHECK_THROWS_AS(t_slice(sx, 0, 0), CutoffError);

  std::mt19937 rng(5);
  for (int it = 0; it < 20; ++it) {
    auto g = gld::testing::random_presentation(rng);
    int cutoff = minimal_slice_cutoff(g);
    for (int k = -1; k <= 3; ++k) {
      auto sl = t_slice(g, k, cutoff);
      for (int a = 0; a <= 4; ++a) CHECK(dim(sl, {a, 0}) == dim(g, {a, k}));
    }
  }
}

TEST_CASE("direct sums and summands") {
  auto a = cyclic(1, 1, {"x1"});
  auto b = cyclic(1, 1, {"t1"});
  auto s = direct_sum(a, b);
  for (const auto& deg : Window{0, 2, 0, 2}.points()) CHECK(dim(s, deg) == dim(a, deg) + dim(b, deg));
  auto parts = split_summands(s);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == a);
  CHECK(parts[1] == b);
}

TEST_CASE("windows") {
  auto w = parse_window("0:2,-1:3");
  CHECK(w.x_lo == 0);
  CHECK(w.x_hi == 2);
  CHECK(w.t_lo == -1);
  CHECK(w.t_hi == 3);
  CHECK(w.points().size() == 15);
  CHECK(w.to_string() == "0:2,-1:3");
  CHECK_THROWS_AS(parse_window("0:2"), InputError);
  CHECK_THROWS_AS(parse_window("3:2,0:1"), InputError);
  auto dw = default_window(cyclic(1, 1, {"x1"}));
  CHECK(dw.t_lo == -3);
  CHECK(dw.t_hi == 3);
  CHECK(dw.x_lo == 0);
  CHECK(dw.x_hi == 5);
}
