#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gld/groebner.hpp"
#include "gld/module.hpp"

namespace gld {

/// Hom(F, omega) for a free module: generator i gets degree omega - shift_i.
FreeModule dual_module(const FreeModule& f, BiDegree omega);
/// Transpose of phi : F -> G as a map G^* -> F^*.
ModuleMap dual_map(const ModuleMap& phi, BiDegree omega);

/// Ext^q(G, omega) from a free resolution of G, re-presented through
/// syzygies and trimmed. omega is the degree of the generator of the rank-one
/// dualizing module.
BigradedPresentation ext_from_resolution(const FreeResolution& r, int q, BiDegree omega);
/// dim Ext^q(G, omega)_deg as cohomology of the Hom complex pieces.
int ext_piece_dim(const FreeResolution& r, int q, BiDegree omega, BiDegree deg);

/// Generator degree of omega_S = S(-d) twisted by omega_x.
inline BiDegree omega_s(const RingSignature& sig, int omega_x = 0) { return {omega_x, sig.t_vars}; }

struct ExtResult {
  int q = 0;
  BigradedPresentation module;
};

/// Ext^q_S(G, omega_S) computed from the minimal resolution.
ExtResult ext_S(const BigradedPresentation& g, int q, int omega_x = 0);
/// All nonzero-index candidates 0..(length of the minimal resolution).
std::vector<ExtResult> ext_all(const BigradedPresentation& g, int omega_x = 0);

struct CMResult {
  bool cohen_macaulay = false;
  /// First nonvanishing Ext^q with q != d: (q, lowest generator degree).
  std::optional<std::pair<int, BiDegree>> witness;
};

/// Exact test: Ext^q_S(G, omega_S) = 0 for every q != d.
CMResult cm_check(const BigradedPresentation& g);
/// Ĝ = Ext^d_S(G, omega_S). Throws PreconditionError if G is not CM.
BigradedPresentation cm_dual(const BigradedPresentation& g, int omega_x = 0);

/// Dimensions of D^i(G)_{(a,k)} = Ext^i_A(G_{-k}, A)_a.
class DualTable {
 public:
  int get(int i, BiDegree deg) const;
  void set(int i, BiDegree deg, int dim) { dims_[{i, deg}] = dim; }
  const std::map<std::pair<int, BiDegree>, int>& entries() const { return dims_; }

 private:
  std::map<std::pair<int, BiDegree>, int> dims_;
};

/// Ext^i_A(M, A) for a module over A = Q[x] (signature (m, 0)).
BigradedPresentation ext_A(const BigradedPresentation& m, int i);

/// D^i(G) for i = 0..m over the window.
DualTable graded_dual_table(const BigradedPresentation& g, const Window& w);
/// D^i(G) for one i over the window.
DualTable graded_dual(const BigradedPresentation& g, int i, const Window& w);

/// Dimension tables of a over the window equal those of b shifted by
/// x_offset in x-degree: dim a_{(x,t)} = dim b_{(x - x_offset, t)}.
int table_mismatches(const BigradedPresentation& a, const BigradedPresentation& b, int x_offset, const Window& w);

struct WeightFit {
  int weight = 0;
  int x_offset = 0;
  int mismatches = 0;
};

struct SelfDualScan {
  std::vector<WeightFit> fits;       // one per scanned weight, best offset
  std::vector<int> matching;         // weights with zero mismatches
  std::vector<std::vector<int>> summand_matching;  // per direct summand, when split
  std::vector<WeightFit> summand_best;             // best fit per summand
};

/// Compares Ĝ with G^r(d - w) for every w in [w_lo, w_hi], allowing an
/// x-degree offset. Requires G to be CM.
SelfDualScan selfdual_scan(const BigradedPresentation& g, int w_lo, int w_hi, const Window& window,
                           int omega_x = 0);
/// Best x-offset for one weight.
WeightFit selfdual_fit(const BigradedPresentation& g, const BigradedPresentation& dual, int w, const Window& window);

}  // namespace gld
