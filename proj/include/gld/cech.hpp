#pragma once

#include <memory>
#include <vector>

#include "gld/groebner.hpp"
#include "gld/linalg.hpp"
#include "gld/module.hpp"
#include "gld/report.hpp"

namespace gld {

/// Index sets of {0..d-1} of the given size, lexicographic.
std::vector<std::vector<int>> index_sets(int d, int size);

/// Truncated Čech complex on the cover {t_i != 0} at one bidegree with
/// denominator cap N. The term for I is identified with G_{(a, k + N|I|)}
/// (g / t_I^N); the map to J = I + {j} is multiplication by t_j^N with sign
/// (-1)^(position of j in J). The augmented complex starts with G itself at
/// position 0.
FiniteComplex cech_slice(const ModuleBasis& mb, BiDegree deg, int cap, bool augmented);

/// The same complex built literally from Laurent monomials (t-exponents
/// >= -N on I) and relation images, without normal forms. Returns the
/// cohomology dimensions.
std::vector<int> literal_cech_cohomology(const BigradedPresentation& g, BiDegree deg, int cap, bool augmented);

/// dim of the t-power torsion of G at deg detected by cap N: the kernel of
/// multiplication by every t-monomial of degree d(N-1)+1, computed on degree
/// pieces.
int torsion_dim(const BigradedPresentation& g, BiDegree deg, int cap);
/// The same kernel computed on normal-form bases.
int torsion_dim(const ModuleBasis& mb, BiDegree deg, int cap);

struct StableCohomology {
  std::vector<int> dims;
  int cap = 0;  // the N at which dims agree with N+1 through an isomorphism
};

struct Prop1Values {
  int g = 0;          // dim G
  int gamma = 0;      // dim Γ_* = R^0
  int kernel = 0;     // dim ker(G -> C^0)
  int cokernel = 0;   // dim coker(G -> Γ_*)
  int torsion = 0;    // t-torsion oracle
  std::vector<int> h;  // H^0..H^d
  std::vector<int> r;  // R^0..R^{d-1}
  int cap = 0;
};

/// Local cohomology along the zero section and Γ_* for one presentation.
///
/// Every evaluation starts at max(cap, N0(deg)), where N0 is the degree from
/// which the truncated complexes of every free module in a minimal
/// resolution are exact in the right degrees, and is certified by equal
/// dimensions at N and N+1 with the transition map (multiplication by t_I)
/// inducing an isomorphism. Failing certificates double N up to max_cap,
/// then throw CutoffError.
class CechCalculator {
 public:
  CechCalculator(const BigradedPresentation& g, int cap, int max_cap);

  const BigradedPresentation& presentation() const { return g_; }
  const ModuleBasis& basis() const { return *mb_; }
  /// Smallest N from which truncation is exact at this t-degree.
  int exact_cap(int t_degree) const;

  StableCohomology local_cohomology(BiDegree deg) const;
  StableCohomology gamma_star(BiDegree deg) const;
  Prop1Values prop1(BiDegree deg) const;

 private:
  StableCohomology stable(BiDegree deg, bool augmented) const;

  BigradedPresentation g_;
  std::unique_ptr<ModuleBasis> mb_;
  int cap_;
  int max_cap_;
  int max_res_shift_ = 0;
};

/// dim H^i_X(G)_deg.
struct CohomologyDim {
  int dim = 0;
  bool stabilized = false;
  int cap = 0;
};
CohomologyDim local_cohomology(const BigradedPresentation& g, int i, BiDegree deg, int cap, int max_cap = 256);
/// dim R^q Γ_*(G)_deg.
CohomologyDim gamma_star(const BigradedPresentation& g, int q, BiDegree deg, int cap, int max_cap = 256);

/// Four-term sequence 0 -> H^0 -> G -> Γ_* -> H^1 -> 0 and H^i = R^{i-1}Γ_*
/// for i >= 2, per bidegree, plus the Euler identity.
std::vector<CheckRecord> verify_prop1(const CechCalculator& c, const Window& w);

}  // namespace gld
