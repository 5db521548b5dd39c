#pragma once

#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <vector>

#include "gld/groebner.hpp"
#include "gld/linalg.hpp"
#include "gld/module.hpp"
#include "gld/report.hpp"

namespace gld {

long binomial(long n, long k);

/// Koszul-type de Rham complex [G -> Ω¹⊗G(1) -> ... -> Ω^d⊗G(d)][d].
/// Position p = -d..0 is stored at index p + d; in bidegree (a, k) its term
/// is Λ^{p+d} ⊗ G_{(a, k+p+d)}, with Λ bases ordered lexicographically and
/// e_J ⊗ g ↦ Σ_{i∉J} (-1)^{#{j∈J : j<i}} e_{J∪i} ⊗ t_i g.
class DRComplex {
 public:
  explicit DRComplex(const BigradedPresentation& g);

  const BigradedPresentation& presentation() const { return g_; }
  const ModuleBasis& basis() const { return *mb_; }
  FiniteComplex slice(BiDegree deg) const;
  /// dim H^p at deg, index p + d.
  std::vector<int> cohomology(BiDegree deg) const;

 private:
  BigradedPresentation g_;
  std::unique_ptr<ModuleBasis> mb_;
};

DRComplex dr_complex(const BigradedPresentation& g);
/// dim H^j(DR(G))_deg for -d <= j <= 0.
int dr_cohomology(const BigradedPresentation& g, int j, BiDegree deg);
/// Cohomology of the degree-k slice [G_k -> Ω¹⊗G_{k+1} -> ...] built from
/// degree pieces and relation images (no normal forms), index p + d.
std::vector<int> gr_dr_slice_cohomology(const BigradedPresentation& g, BiDegree deg);

/// t-degree from which DR(G) is exact: Koszul cohomology is Tor^S(A, G), so
/// it lives in t-degrees below (max t-shift of a minimal resolution) - d + 1.
int dr_exact_from(const BigradedPresentation& g);

struct Der3Result {
  std::map<int, int> b0;  // x-degree -> first t-degree of permanent vanishing
  std::vector<CheckRecord> records;
};
/// Per x-degree of the window, the bound B0 above which every H^j(DR(G))
/// vanishes. The scan runs past the window up to dr_exact_from and widens
/// if cohomology is still present at its end.
Der3Result verify_der3(const BigradedPresentation& g, const Window& w);

/// Σ_{p,q} (-1)^{p+q} C(d,p+d) dim D^q(Ĝ)_{(a,k+p+d)} = Σ_j (-1)^j dim H^j(DR(G))_{(a,k)}.
/// Throws PreconditionError unless G is CM.
std::vector<CheckRecord> verify_der4_euler(const BigradedPresentation& g, const Window& w);

/// Smallest k with G_k != 0, or nullopt for G = 0.
std::optional<int> lowest_t_degree(const BigradedPresentation& g);
/// Checks that the slice at every k >= m_bound - n in the window is exact.
/// Throws PreconditionError if some G_k with k <= -m_bound is nonzero.
std::vector<CheckRecord> verify_final_prop(const BigradedPresentation& g, int m_bound, int n, const Window& w);

/// E1^{p,q} dimensions in bidegree (a, k): C(d,p+d) dim Ext^q_A(G_{-w-k-p}, A)
/// read at x-degree a + x_offset, where x_offset is the fitted self-duality
/// offset.
struct E1Table {
  int weight = 0;
  int x_offset = 0;
  std::map<std::tuple<int, int, BiDegree>, long> dims;  // (p, q, (a,k))
};
/// Throws PreconditionError if Ĝ is not G^r(d-w) over the window.
E1Table e1_table(const BigradedPresentation& g, int w, const Window& window);
/// Euler identity Σ (-1)^{p+q} dim E1^{p,q} = Σ_j (-1)^j dim H^j(DR(G)) per bidegree.
std::vector<CheckRecord> verify_e1(const BigradedPresentation& g, const E1Table& e1, const Window& window);

}  // namespace gld
