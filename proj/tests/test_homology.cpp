#include <doctest.h>

#include <random>

#include "gld/errors.hpp"
#include "gld/homology.hpp"
#include "helpers.hpp"

using namespace gld;
using gld::testing::cyclic;
using gld::testing::make;

namespace {

int dim(const BigradedPresentation& g, BiDegree deg) { return piece(g, deg).dim(); }

bool same_dims(const BigradedPresentation& a, const BigradedPresentation& b, const Window& w) {
  ModuleBasis ma(a), mb(b);
  for (const auto& deg : w.points())
    if (ma.dim(deg) != mb.dim(deg)) return false;
  return true;
}

}  // namespace

TEST_CASE("Ext over S: worked examples") {
  auto st = cyclic(1, 1, {"t1"});
  CHECK(ext_S(st, 1).module == st);
  CHECK(ext_S(st, 0).module.num_generators() == 0);

  auto sx = cyclic(1, 1, {"x1"});
  auto e = ext_S(sx, 1).module;
  CHECK(e == shift_x(shift(sx, -1), -1));
  CHECK(e.generators().shifts[0] == BiDegree{-1, 1});

  auto s = cyclic(1, 1, {});
  auto e0 = ext_S(s, 0).module;
  CHECK(e0 == BigradedPresentation::free(RingSignature{1, 1}, {{0, 1}}));
  for (int q = 1; q <= 3; ++q) CHECK(ext_S(s, q).module.num_generators() == 0);

  auto f = BigradedPresentation::free(RingSignature{1, 2}, {{0, 0}, {1, 2}});
  CHECK(ext_S(f, 0).module == BigradedPresentation::free(RingSignature{1, 2}, {{-1, 0}, {0, 2}}));
  CHECK(ext_S(f, 0, 3).module == BigradedPresentation::free(RingSignature{1, 2}, {{2, 0}, {3, 2}}));
}

TEST_CASE("Cohen-Macaulay test") {
  CHECK(cm_check(cyclic(1, 1, {"x1"})).cohen_macaulay);
  CHECK(cm_check(cyclic(1, 1, {"t1"})).cohen_macaulay);
  auto bad = cm_check(cyclic(1, 1, {"x1", "t1"}));
  CHECK_FALSE(bad.cohen_macaulay);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->first == 2);
  CHECK(bad.witness->second == BiDegree{-1, 0});
  CHECK(cm_check(cyclic(2, 2, {"x1", "t2"})).cohen_macaulay);
  CHECK_FALSE(cm_check(cyclic(1, 1, {})).cohen_macaulay);
  CHECK_THROWS_AS(cm_dual(cyclic(1, 1, {"x1", "t1"})), PreconditionError);
}

TEST_CASE("CM duals and biduality") {
  Window w{-2, 3, -3, 3};
  for (const auto& g : {cyclic(1, 1, {"t1"}), cyclic(1, 1, {"x1"}), cyclic(2, 2, {"x1", "t2"}),
                        cyclic(1, 1, {"x1*t1"}), cyclic(2, 1, {"x1*t1 - x2*t1"})}) {
    REQUIRE(cm_check(g).cohen_macaulay);
    auto dual = cm_dual(g);
    REQUIRE(cm_check(dual).cohen_macaulay);
    CHECK(same_dims(cm_dual(dual), g, w));
    // Reversal commutes with the dual.
    CHECK(same_dims(cm_dual(reverse(g)), reverse(dual), w));
  }
  CHECK(cm_dual(cyclic(1, 1, {"t1"})) == cyclic(1, 1, {"t1"}));
}

TEST_CASE("Ext does not depend on the resolution") {
  std::vector<BigradedPresentation> corpus = {
      cyclic(1, 1, {}),        cyclic(1, 1, {"t1"}),           cyclic(1, 1, {"x1"}),
      cyclic(2, 2, {"x1", "t2"}), direct_sum(cyclic(1, 1, {"x1", "t1"}), cyclic(1, 1, {})),
  };
  std::mt19937 rng(41);
  for (int i = 0; i < 20; ++i) corpus.push_back(gld::testing::random_presentation(rng));
  Window w{-3, 3, -3, 3};
  for (const auto& g : corpus) {
    const int n = g.signature().nvars();
    auto schreyer = free_resolution(g, n + 1);
    auto minimal = minimalize(schreyer);
    BiDegree omega = omega_s(g.signature());
    for (int q = 0; q <= n; ++q) {
      auto es = ext_from_resolution(schreyer, q, omega);
      auto em = ext_from_resolution(minimal, q, omega);
      ModuleBasis bs(es), bm(em);
      for (const auto& deg : w.points()) {
        int direct = ext_piece_dim(minimal, q, omega, deg);
        CHECK(bs.dim(deg) == direct);
        CHECK(bm.dim(deg) == direct);
        CHECK(ext_piece_dim(schreyer, q, omega, deg) == direct);
      }
    }
  }
}

TEST_CASE("graded dual: worked examples") {
  Window w{0, 3, -3, 3};
  auto st = cyclic(1, 1, {"t1"});
  auto d0 = graded_dual(st, 0, w);
  for (const auto& deg : w.points()) CHECK(d0.get(0, deg) == (deg.t == 0 ? 1 : 0));

  auto dual_x = cm_dual(cyclic(1, 1, {"x1"}));
  auto dx0 = graded_dual(dual_x, 0, w);
  CHECK(dx0.entries().empty());
  auto dx1 = graded_dual(dual_x, 1, w);
  for (const auto& deg : w.points()) CHECK(dx1.get(1, deg) == (deg.t <= -1 && deg.x == 0 ? 1 : 0));

  // Free A-module slices: Hom_A(A(-a), A) = A(a).
  auto s = cyclic(1, 1, {});
  auto ds = graded_dual(shift_x(s, -2), 0, Window{0, 4, -1, 0});
  CHECK(ds.get(0, {2, 0}) == 1);
  CHECK(ds.get(0, {1, 0}) == 0);
}

TEST_CASE("graded dual vanishes above the base dimension") {
  std::mt19937 rng(43);
  for (int it = 0; it < 15; ++it) {
    auto g = gld::testing::random_presentation(rng);
    const int m = g.signature().x_vars;
    for (int k = -1; k <= 2; ++k) {
      auto slice = trim(t_slice(g, k, minimal_slice_cutoff(g)));
      CHECK(ext_A(slice, m + 1).num_generators() == 0);
    }
  }
}

TEST_CASE("self-duality scan") {
  Window w{0, 4, -3, 3};
  auto st = selfdual_scan(cyclic(1, 1, {"t1"}), -3, 5, w);
  CHECK(st.matching == std::vector<int>{1});
  auto sx = selfdual_scan(cyclic(1, 1, {"x1"}), -3, 5, w);
  CHECK(sx.matching == std::vector<int>{2});
  CHECK(sx.fits[2 + 3].x_offset == -1);

  auto sum = selfdual_scan(direct_sum(cyclic(1, 1, {"t1"}), cyclic(1, 1, {"x1"})), -3, 5, w);
  CHECK(sum.matching.empty());
  REQUIRE(sum.summand_matching.size() == 2);
  CHECK(sum.summand_matching[0] == std::vector<int>{1});
  CHECK(sum.summand_matching[1] == std::vector<int>{2});
}
