#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "gld/linalg.hpp"
#include "gld/module.hpp"

namespace gld {

/// One term c * mono * e_pos of a free-module element.
struct ModTerm {
  int pos;
  Monomial mono;
  Rational coef;
};

/// Free-module element as terms sorted decreasingly in some ModuleOrder.
using ModVec = std::vector<ModTerm>;

/// Module monomial order.
///
/// Base case: position over term, positions compared by a priority list,
/// monomials by the block order. Induced (Schreyer) case: every position
/// carries a frame, the image of its leading term in the base module plus the
/// chain of indices through the intermediate modules; terms compare by their
/// base images first and then by the chains (smaller index wins).
class ModuleOrder {
 public:
  struct Frame {
    int base = 0;
    Monomial lead;
    std::vector<int> chain;
  };

  ModuleOrder() = default;
  /// POT; priority[i] is the i-th most significant position. Empty means
  /// 0, 1, 2, ...
  static ModuleOrder pot(RingSignature sig, int rank, const std::vector<int>& priority = {});
  /// Order induced on a module whose basis maps to the given frames.
  ModuleOrder induced(std::vector<Frame> frames) const;

  const RingSignature& signature() const { return sig_; }
  /// <0, 0, >0.
  int compare(int pa, const Monomial& a, int pb, const Monomial& b) const;
  int compare(const ModTerm& a, const ModTerm& b) const { return compare(a.pos, a.mono, b.pos, b.mono); }
  const Frame& frame(int pos) const { return frames_[pos]; }
  bool is_induced() const { return !frames_.empty(); }

 private:
  RingSignature sig_;
  std::vector<int> rank_;  // base position -> rank (0 most significant)
  std::vector<Frame> frames_;
};

ModVec to_modvec(const std::vector<Polynomial>& column, const ModuleOrder& order);
std::vector<Polynomial> to_column(const ModVec& v, int rank, RingSignature sig);
void sort_modvec(ModVec& v, const ModuleOrder& order);

/// v - c * mono * w; both sorted in order.
ModVec sub_multiple(const ModVec& v, const Rational& c, const Monomial& mono, const ModVec& w,
                    const ModuleOrder& order);

/// Gröbner basis of a submodule of a free module: monic elements, sorted by
/// decreasing leading term.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(FreeModule ambient, ModuleOrder order, std::vector<ModVec> elements);

  const FreeModule& ambient() const { return ambient_; }
  const ModuleOrder& order() const { return order_; }
  const std::vector<ModVec>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  /// Bidegree of element i.
  BiDegree degree(int i) const;

  /// Index of an element whose leading term divides (pos, mono), or -1.
  int find_divisor(int pos, const Monomial& mono) const;
  /// Full normal form.
  ModVec reduce(ModVec v) const;
  /// Division with quotient tracking: v = sum q_l * g_l + remainder. Each
  /// quotient entry is (l, mono, coef).
  ModVec divide(ModVec v, std::vector<ModTerm>& quotients) const;
  bool contains(const ModVec& v) const { return reduce(v).empty(); }

  /// Elements as columns of a map from a free module with the element
  /// degrees.
  ModuleMap as_map() const;

 private:
  FreeModule ambient_;
  ModuleOrder order_;
  std::vector<ModVec> elements_;
  std::vector<std::vector<int>> by_pos_;
};

/// Reduced Gröbner basis of the span of the given columns. Normal selection
/// strategy (smallest pair bidegree first) with the chain criterion.
GroebnerBasis buchberger(const FreeModule& ambient, const std::vector<std::vector<Polynomial>>& columns,
                         const ModuleOrder& order);

/// Syzygies of a Gröbner basis by Schreyer's construction: one column
/// m_ji e_i / lc_i - m_ij e_j / lc_j - (quotients) per pair with minimal
/// leading term. Source degrees are the pair degrees.
ModuleMap syzygies(const GroebnerBasis& gb);

/// Generators of the kernel of a map of free modules.
ModuleMap kernel(const ModuleMap& m);

/// maps[i] : F_{i+1} -> F_i.
struct FreeResolution {
  std::vector<FreeModule> modules;
  std::vector<ModuleMap> maps;

  int length() const { return static_cast<int>(maps.size()); }
  /// F_i, or the zero module beyond the end.
  FreeModule module(int i) const;
};

/// Schreyer resolution. The first map is a Gröbner basis of the relations
/// (POT order with the given generator priority); later maps are Schreyer
/// syzygies. Terminates after at most m + d + 1 maps.
FreeResolution free_resolution(const BigradedPresentation& g, int length, const std::vector<int>& priority = {});
/// Cancels unit entries until none remain.
FreeResolution minimalize(const FreeResolution& r);
/// Minimal presentation: cancels unit entries of the relation matrix. A
/// trimmed presentation presents the zero module iff it has no generators.
BigradedPresentation trim(const BigradedPresentation& g);

/// (stage, shift) -> rank.
using BettiTable = std::map<std::pair<int, BiDegree>, int>;
BettiTable betti_table(const FreeResolution& r);

/// Every composite of consecutive maps is zero.
bool composites_vanish(const FreeResolution& r);
/// Exactness at F_1, F_2, ... and coker(F_1 -> F_0) = G, checked on degree
/// pieces in the window. Returns the first failing (stage, bidegree) or
/// nullopt.
std::optional<std::pair<int, BiDegree>> exactness_failure(const BigradedPresentation& g, const FreeResolution& r,
                                                          const Window& w);

/// Normal-form model of a presented module: Gröbner basis of the relations,
/// standard monomials per bidegree, and coordinates of arbitrary
/// (generator, monomial) pairs. Thread-safe; results are cached.
class ModuleBasis {
 public:
  explicit ModuleBasis(const BigradedPresentation& g);

  const BigradedPresentation& presentation() const { return g_; }
  const GroebnerBasis& groebner() const { return gb_; }
  int dim(BiDegree deg) const;
  /// Standard monomials of the bidegree.
  std::vector<std::pair<int, Monomial>> basis(BiDegree deg) const;
  /// Coordinates of mono * e_gen in the standard basis of its bidegree.
  SparseVec coords(int gen, const Monomial& mono) const;
  /// Matrix of multiplication by a monomial from bidegree deg to
  /// deg + degree(mono).
  SparseMatrix multiplication(BiDegree deg, const Monomial& mono) const;

 private:
  struct Piece {
    std::vector<std::pair<int, Monomial>> basis;
    std::map<std::pair<int, Monomial>, int> index;
  };
  const Piece& piece_locked(BiDegree deg) const;
  const ModVec& nf_locked(int gen, const Monomial& mono) const;

  BigradedPresentation g_;
  GroebnerBasis gb_;
  mutable std::mutex mu_;
  mutable std::map<BiDegree, std::unique_ptr<Piece>> pieces_;
  mutable std::map<std::pair<int, Monomial>, std::unique_ptr<ModVec>> nf_;
};

}  // namespace gld
