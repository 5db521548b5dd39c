#include <doctest.h>

#include <random>

#include "gld/derham.hpp"
#include "gld/errors.hpp"
#include "gld/homology.hpp"
#include "helpers.hpp"

using namespace gld;
using gld::testing::cyclic;
using gld::testing::make;

namespace {

BigradedPresentation free_s(int m, int d) { return make(m, d, {{0, 0}}, {}); }

bool all_pass(const std::vector<CheckRecord>& rs) {
  bool ok = true;
  for (const auto& r : rs) {
    INFO(r.check_id, " ", r.bidegree ? to_string(*r.bidegree) : std::string("-"), " ", r.note);
    CHECK(r.pass);
    ok = ok && r.pass;
  }
  return ok;
}

}  // namespace

TEST_CASE("DR of the polynomial ring resolves the top form") {
  for (int m = 0; m <= 1; ++m)
    for (int d = 1; d <= 3; ++d) {
      DRComplex dr(free_s(m, d));
      for (int a = 0; a <= (m == 0 ? 0 : 2); ++a)
        for (int k = -d - 3; k <= 2; ++k) {
          auto h = dr.cohomology({a, k});
          REQUIRE(h.size() == static_cast<std::size_t>(d + 1));
          for (int j = 0; j < d; ++j) CHECK(h[j] == 0);
          CHECK(h[d] == (k == -d ? 1 : 0));
        }
    }
}

TEST_CASE("DR slices: small complexes") {
  auto s1 = free_s(0, 1);
  FiniteComplex c = DRComplex(s1).slice({0, -1});
  CHECK(c.dims == std::vector<int>{0, 1});
  c = DRComplex(s1).slice({0, 0});
  CHECK(c.dims == std::vector<int>{1, 1});
  CHECK(rank(c.diffs[0]) == 1);

  auto zero = BigradedPresentation::zero(RingSignature{1, 2});
  auto z = DRComplex(zero).slice({0, 0});
  CHECK(z.dims == std::vector<int>{0, 0, 0});

  auto s2 = free_s(0, 2);
  c = DRComplex(s2).slice({0, 0});
  CHECK(c.dims == std::vector<int>{1, 4, 3});
  CHECK(c.is_complex());
}

TEST_CASE("DR of S/(t) and S/(x)") {
  auto st = cyclic(1, 1, {"t1"});
  for (int a = 0; a <= 2; ++a)
    for (int k = -3; k <= 3; ++k) {
      CHECK(dr_cohomology(st, -1, {a, k}) == (k == 0 ? 1 : 0));
      CHECK(dr_cohomology(st, 0, {a, k}) == (k == -1 ? 1 : 0));
    }
  auto sx = cyclic(1, 1, {"x1"});
  for (int a = 0; a <= 2; ++a)
    for (int k = -3; k <= 3; ++k) {
      CHECK(dr_cohomology(sx, -1, {a, k}) == 0);
      CHECK(dr_cohomology(sx, 0, {a, k}) == (a == 0 && k == -1 ? 1 : 0));
    }
  CHECK_THROWS_AS(dr_cohomology(sx, 1, {0, 0}), InputError);
}

TEST_CASE("DR slices agree with the piece-level construction") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = gld::testing::random_presentation(rng);
    DRComplex dr(g);
    for (int k = -2; k <= 2; ++k)
      for (int a = 0; a <= 2; ++a) {
        FiniteComplex c = dr.slice({a, k});
        CHECK(c.is_complex());
        CHECK(c.cohomology_dims() == gr_dr_slice_cohomology(g, {a, k}));
      }
  }
}

TEST_CASE("DR is additive over direct sums") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = gld::testing::random_presentation(rng, 1, 2);
    auto h = gld::testing::random_presentation(rng, 1, 2);
    DRComplex a(g), b(h), s(direct_sum(g, h));
    for (int k = -3; k <= 2; ++k)
      for (int x = 0; x <= 2; ++x) {
        auto ha = a.cohomology({x, k}), hb = b.cohomology({x, k}), hs = s.cohomology({x, k});
        for (std::size_t j = 0; j < hs.size(); ++j) CHECK(hs[j] == ha[j] + hb[j]);
      }
  }
}

TEST_CASE("vanishing bound") {
  for (int d = 1; d <= 3; ++d) {
    auto r = verify_der3(free_s(1, d), Window{0, 2, -d - 2, d + 2});
    CHECK(all_pass(r.records));
    for (const auto& [a, b0] : r.b0) CHECK(b0 == -d + 1);
  }
  auto rx = verify_der3(cyclic(1, 1, {"x1"}), Window{0, 3, -3, 3});
  CHECK(all_pass(rx.records));
  CHECK(rx.b0.at(0) == 0);
  CHECK(rx.b0.at(1) == -3);
  auto rt = verify_der3(cyclic(1, 1, {"t1"}), Window{0, 3, -3, 3});
  CHECK(all_pass(rt.records));
  for (const auto& [a, b0] : rt.b0) CHECK(b0 == 1);

  // A window that stops short of the cohomology is widened.
  auto shifted = shift(cyclic(1, 1, {"t1"}), -5);
  auto rw = verify_der3(shifted, Window{0, 1, -2, 1});
  CHECK(all_pass(rw.records));
  CHECK(rw.b0.at(0) == 6);
}

TEST_CASE("vanishing bound on random presentations") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    auto g = gld::testing::random_presentation(rng);
    auto r = verify_der3(g, Window{0, 2, -2, 2});
    CHECK(all_pass(r.records));
    for (const auto& [a, b0] : r.b0) CHECK(b0 <= std::max(dr_exact_from(g), -2));
  }
}

TEST_CASE("duality against DR at the Euler level") {
  std::vector<BigradedPresentation> cm = {
      cyclic(1, 1, {"t1"}), cyclic(1, 1, {"x1"}), cyclic(2, 2, {"x1", "t2"}), cyclic(2, 2, {"x1", "x2"}),
      cyclic(2, 1, {"x1*t1 - x2*t1"}), cyclic(2, 1, {"x1^2 - x2^2"}),
  };
  for (const auto& g : cm) {
    REQUIRE(cm_check(g).cohen_macaulay);
    INFO(g.describe());
    all_pass(verify_der4_euler(g, Window{0, 3, -4, 3}));
  }
  CHECK_THROWS_AS(verify_der4_euler(free_s(1, 1), Window{0, 1, 0, 1}), PreconditionError);
}

TEST_CASE("lowest t-degree and the filtered range") {
  CHECK(lowest_t_degree(cyclic(1, 1, {"t1"})) == 0);
  CHECK(lowest_t_degree(shift(cyclic(1, 1, {"x1"}), 2)) == -2);
  CHECK(!lowest_t_degree(BigradedPresentation::zero(RingSignature{1, 1})));
  CHECK(!lowest_t_degree(cyclic(1, 1, {"1"})));

  auto st = cyclic(1, 1, {"t1"});
  auto r = verify_final_prop(st, 1, 0, Window{0, 3, -3, 4});
  CHECK(all_pass(r));
  CHECK(r.size() == 4 * 4);

  auto sx = cyclic(1, 1, {"x1"});
  r = verify_final_prop(sx, 1, 1, Window{0, 3, -3, 4});
  CHECK(all_pass(r));
  CHECK(r.size() == 4 * 5);
  CHECK_THROWS_AS(verify_final_prop(sx, 0, 1, Window{0, 3, -3, 4}), PreconditionError);

  auto z = verify_final_prop(BigradedPresentation::zero(RingSignature{1, 1}), 1, 0, Window{0, 1, 0, 1});
  REQUIRE(z.size() == 1);
  CHECK(z[0].check_id == "final_prop.vacuous");
}

TEST_CASE("E1 terms") {
  Window w{0, 3, -3, 3};
  auto sx = cyclic(1, 1, {"x1"});
  E1Table ex = e1_table(sx, 2, w);
  CHECK(ex.x_offset == -1);
  CHECK(all_pass(verify_e1(sx, ex, w)));

  auto st = cyclic(1, 1, {"t1"});
  E1Table et = e1_table(st, 1, w);
  CHECK(all_pass(verify_e1(st, et, w)));
  CHECK(!et.dims.empty());
  for (const auto& [key, v] : et.dims) CHECK(std::get<1>(key) == 0);
  CHECK_THROWS_AS(e1_table(st, 2, w), PreconditionError);

  // The E1 side agrees with the der4 side through self-duality.
  auto c = cyclic(2, 2, {"x1", "t2"});
  auto scan = selfdual_scan(c, -3, 5, Window{0, 3, -3, 3});
  REQUIRE(!scan.matching.empty());
  E1Table ec = e1_table(c, scan.matching.front(), w);
  CHECK(all_pass(verify_e1(c, ec, w)));
}
