#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gld/linalg.hpp"
#include "gld/polynomial.hpp"

namespace gld {

/// Free bigraded module with basis elements e_i of degree shifts[i]
/// (so e_i spans a copy of S(-shifts[i])).
struct FreeModule {
  RingSignature sig;
  std::vector<BiDegree> shifts;

  int rank() const { return static_cast<int>(shifts.size()); }
  bool operator==(const FreeModule&) const = default;
};

/// Bihomogeneous map of free modules. Entry (i, j) has bidegree
/// source.shifts[j] - target.shifts[i] or is zero.
class ModuleMap {
 public:
  ModuleMap() = default;
  /// columns[j][i] is entry (i, j). Throws InputError on a degree violation.
  ModuleMap(FreeModule source, FreeModule target, std::vector<std::vector<Polynomial>> columns);
  static ModuleMap zero(FreeModule source, FreeModule target);

  const FreeModule& source() const { return source_; }
  const FreeModule& target() const { return target_; }
  int rows() const { return target_.rank(); }
  int cols() const { return source_.rank(); }
  const Polynomial& entry(int row, int col) const { return columns_[col][row]; }
  const std::vector<Polynomial>& column(int col) const { return columns_[col]; }
  const std::vector<std::vector<Polynomial>>& columns() const { return columns_; }

  /// after ∘ this.
  ModuleMap then(const ModuleMap& after) const;
  bool is_zero() const;
  ModuleMap reversed() const;
  bool operator==(const ModuleMap& o) const;

 private:
  FreeModule source_;
  FreeModule target_;
  std::vector<std::vector<Polynomial>> columns_;
};

/// The module coker(relations : F1 -> F0) over S = Q[x1..xm, t1..td].
class BigradedPresentation {
 public:
  BigradedPresentation() = default;
  /// Canonicalizes generator and relation order (by degree, then input order).
  BigradedPresentation(FreeModule generators, ModuleMap relations);

  static BigradedPresentation free(RingSignature sig, std::vector<BiDegree> shifts);
  /// Relation columns with inferred degrees; zero columns are dropped.
  /// Throws InputError naming the offending monomial pair if a column is not
  /// bihomogeneous.
  static BigradedPresentation from_columns(RingSignature sig, std::vector<BiDegree> generator_shifts,
                                           std::vector<std::vector<Polynomial>> columns);
  static BigradedPresentation zero(RingSignature sig) { return free(sig, {}); }

  const RingSignature& signature() const { return generators_.sig; }
  const FreeModule& generators() const { return generators_; }
  const ModuleMap& relations() const { return relations_; }
  int num_generators() const { return generators_.rank(); }
  int num_relations() const { return relations_.cols(); }

  /// Relation columns permuted (no re-canonicalization).
  BigradedPresentation with_relation_order(const std::vector<int>& perm) const;

  bool operator==(const BigradedPresentation& o) const;
  std::string describe() const;

 private:
  FreeModule generators_;
  ModuleMap relations_;
};

/// G(m) with G(m)_k = G_{m+k}.
BigradedPresentation shift(const BigradedPresentation& g, int m);
/// Shifts x-degrees: generator degrees increase by s.
BigradedPresentation shift_x(const BigradedPresentation& g, int s);
/// G^r: substitutes t_i -> -t_i in every relation.
BigradedPresentation reverse(const BigradedPresentation& g);
BigradedPresentation direct_sum(const BigradedPresentation& a, const BigradedPresentation& b);
/// Splits into direct summands along connected components of the
/// generator/relation incidence graph.
std::vector<BigradedPresentation> split_summands(const BigradedPresentation& g);

/// One bidegree of G: spanning set of F0 in that degree and the image of
/// the relations.
struct DegreePiece {
  BiDegree bidegree;
  std::vector<std::pair<int, Monomial>> basis;  // (generator, monomial)
  SparseMatrix quotient_matrix;                 // columns span the relation image
  int dim() const;
};

DegreePiece piece(const BigradedPresentation& g, BiDegree deg);

/// Degree piece of a free module: basis (generator, monomial) pairs.
std::vector<std::pair<int, Monomial>> free_piece_basis(const FreeModule& f, BiDegree deg);
/// Matrix of a map restricted to one source bidegree, in the free-piece
/// bases of source and target.
SparseMatrix map_piece_matrix(const ModuleMap& m, BiDegree deg);

/// G_k as a graded module over A = Q[x1..xm]: generators are
/// (generator, t-monomial) pairs, relations are t-monomial multiples of the
/// relation columns. Throws CutoffError if an induced relation has x-degree
/// above x_cutoff.
BigradedPresentation t_slice(const BigradedPresentation& g, int k, int x_cutoff);
/// Smallest cutoff accepted by t_slice.
int minimal_slice_cutoff(const BigradedPresentation& g);

/// Rectangular range of bidegrees (inclusive).
struct Window {
  int x_lo = 0, x_hi = 0;
  int t_lo = 0, t_hi = 0;

  bool contains(BiDegree d) const { return d.x >= x_lo && d.x <= x_hi && d.t >= t_lo && d.t <= t_hi; }
  std::vector<BiDegree> points() const;
  std::string to_string() const;
};

/// Parses "a0:a1,b0:b1" (x-range, t-range).
Window parse_window(const std::string& text);

/// Default verification window: t from (min shift - d - 2) to
/// (max shift + d + 2), x from 0 to (max relation x-degree + 4).
Window default_window(const BigradedPresentation& g);

}  // namespace gld
