#include <doctest.h>

#include <random>

#include "gld/cech.hpp"
#include "gld/errors.hpp"
#include "helpers.hpp"

using namespace gld;
using gld::testing::cyclic;
using gld::testing::make;

namespace {

long binom(long n, long k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigradedPresentation free_s(int m, int d) { return make(m, d, {{0, 0}}, {}); }

}  // namespace

TEST_CASE("index sets") {
  CHECK(index_sets(3, 0) == std::vector<std::vector<int>>{{}});
  CHECK(index_sets(3, 2) == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(index_sets(2, 3).empty());
}

TEST_CASE("top local cohomology of the polynomial ring") {
  for (int d = 1; d <= 3; ++d) {
    CechCalculator c(free_s(0, d), 1, 256);
    for (int k = -d - 4; k <= 2; ++k) {
      auto h = c.local_cohomology({0, k}).dims;
      REQUIRE(h.size() == static_cast<std::size_t>(d + 1));
      CHECK(h[d] == binom(-k - 1, d - 1));
      for (int i = 0; i < d; ++i) CHECK(h[i] == 0);
    }
  }
}

TEST_CASE("local cohomology of S/(x) and S/(t)") {
  auto sx = cyclic(1, 1, {"x1"});
  for (int k = -4; k <= 2; ++k) {
    CHECK(local_cohomology(sx, 0, {0, k}, 1).dim == 0);
    CHECK(local_cohomology(sx, 1, {0, k}, 1).dim == (k <= -1 ? 1 : 0));
    CHECK(local_cohomology(sx, 1, {1, k}, 1).dim == 0);
  }
  auto st = cyclic(1, 1, {"t1"});
  CHECK(local_cohomology(st, 0, {0, 0}, 1).dim == 1);
  CHECK(local_cohomology(st, 0, {2, 0}, 1).dim == 1);
  CHECK(local_cohomology(st, 0, {0, 1}, 1).dim == 0);
  for (int k = -3; k <= 2; ++k) CHECK(local_cohomology(st, 1, {0, k}, 1).dim == 0);
}

TEST_CASE("sections over the complement") {
  auto s1 = free_s(0, 1);
  for (int k = -3; k <= 3; ++k) CHECK(gamma_star(s1, 0, {0, k}, 1).dim == 1);
  auto s2 = free_s(0, 2);
  for (int k = -3; k <= 3; ++k) CHECK(gamma_star(s2, 0, {0, k}, 1).dim == std::max(0, k + 1));
  CHECK(gamma_star(s2, 1, {0, -2}, 1).dim == 1);
  CHECK(gamma_star(s2, 1, {0, -1}, 1).dim == 0);
  CHECK(gamma_star(s2, 2, {0, -2}, 1).dim == 0);
}

TEST_CASE("cap beyond the limit is a cutoff error") {
  CechCalculator c(free_s(0, 1), 1, 4);
  CHECK(c.exact_cap(-10) == 10);
  CHECK_THROWS_AS(c.local_cohomology({0, -10}), CutoffError);
  CHECK(c.local_cohomology({0, -3}).dims[1] == 1);
}

TEST_CASE("truncated complexes agree with literal Laurent complexes") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    auto g = gld::testing::random_presentation(rng);
    ModuleBasis mb(g);
    for (int cap = 1; cap <= 2; ++cap)
      for (int k = -2; k <= 1; ++k)
        for (int a = 0; a <= 1; ++a)
          for (bool aug : {true, false}) {
            FiniteComplex c = cech_slice(mb, {a, k}, cap, aug);
            CHECK(c.is_complex());
            CHECK(c.cohomology_dims() == literal_cech_cohomology(g, {a, k}, cap, aug));
          }
  }
}

TEST_CASE("kernel of the augmentation is the torsion") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = gld::testing::random_presentation(rng);
    CechCalculator c(g, 1, 256);
    for (int k = -1; k <= 2; ++k)
      for (int a = 0; a <= 2; ++a) {
        Prop1Values v = c.prop1({a, k});
        CHECK(v.kernel == v.torsion);
        CHECK(torsion_dim(g, {a, k}, v.cap) == v.torsion);
        CHECK(v.h[0] == v.kernel);
      }
  }
}

TEST_CASE("four-term sequence on examples and random presentations") {
  std::vector<BigradedPresentation> cases = {
      free_s(1, 1), free_s(2, 2), cyclic(1, 1, {"x1"}), cyclic(1, 1, {"t1"}), cyclic(2, 2, {"x1", "t2"}),
      cyclic(2, 2, {"x1*t1 - x2*t2"}), direct_sum(cyclic(1, 1, {"x1", "t1"}), free_s(1, 1)),
  };
  std::mt19937 rng(2024);
  for (int i = 0; i < 25; ++i) cases.push_back(gld::testing::random_presentation(rng));
  for (const auto& g : cases) {
    CechCalculator c(g, 1, 256);
    for (const auto& r : verify_prop1(c, Window{0, 2, -2, 2})) {
      INFO(g.describe(), " ", r.check_id, " ", to_string(*r.bidegree));
      CHECK(r.pass);
    }
  }
}

TEST_CASE("stabilized cap is at least the exact cap") {
  auto g = cyclic(2, 2, {"x1*t1 - x2*t2"});
  CechCalculator c(g, 1, 256);
  for (int k = -4; k <= 1; ++k) CHECK(c.local_cohomology({1, k}).cap >= c.exact_cap(k));
}
