#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "gld/polynomial.hpp"

namespace gld {

/// Sparse vector over Q: (index, value) pairs sorted by index, no zeros.
using SparseVec = std::vector<std::pair<int, Rational>>;

/// v + c*w.
SparseVec axpy(const SparseVec& v, const Rational& c, const SparseVec& w);

/// Column-oriented sparse matrix.
struct SparseMatrix {
  int rows = 0;
  std::vector<SparseVec> cols;

  int num_cols() const { return static_cast<int>(cols.size()); }
  /// Columns of *this followed by the columns of other (same row count).
  SparseMatrix concat(const SparseMatrix& other) const;
  /// Applies the matrix to a coefficient vector indexed by column.
  SparseVec apply(const SparseVec& x) const;
};

/// Incremental row echelon form: vectors are inserted one at a time and
/// reduced against existing pivots (lowest index first).
class Echelon {
 public:
  explicit Echelon(bool track_combinations = false) : track_(track_combinations) {}

  /// Returns true if v is independent of everything inserted so far. When
  /// tracking, a dependent insert records the relation among inputs.
  bool insert(SparseVec v);
  /// Reduces v against the current pivots without inserting it.
  SparseVec reduce(SparseVec v) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  int inserted() const { return inserted_; }
  /// For each dependent insert i: coefficients c (over input indices) with
  /// sum_j c_j v_j = 0 and c_i = 1.
  const std::vector<SparseVec>& relations() const { return relations_; }

 private:
  bool track_;
  int inserted_ = 0;
  std::unordered_map<int, std::size_t> pivot_row_;
  std::vector<SparseVec> rows_;
  std::vector<SparseVec> combos_;
  std::vector<SparseVec> relations_;
};

int rank(const SparseMatrix& m);
/// Basis of {x : m x = 0}, vectors indexed by column.
std::vector<SparseVec> nullspace(const SparseMatrix& m);

/// Cohomology of a finite complex of finite-dimensional spaces
/// V_0 -> V_1 -> ... given by matrices d_p : V_p -> V_{p+1}.
struct FiniteComplex {
  std::vector<int> dims;             // dim V_p
  std::vector<SparseMatrix> diffs;   // diffs[p] : V_p -> V_{p+1}, size dims.size()-1

  int length() const { return static_cast<int>(dims.size()); }
  /// dim H^p.
  std::vector<int> cohomology_dims() const;
  /// d_{p+1} * d_p == 0 for all p.
  bool is_complex() const;
};

}  // namespace gld

namespace gld {

/// Cohomology of a complex of quotient spaces V_p = W_p / R_p, where the
/// maps f_p : W_p -> W_{p+1} carry R_p into R_{p+1}. relations[p] has
/// dims[p] rows.
std::vector<int> quotient_complex_cohomology(const std::vector<int>& dims, const std::vector<SparseMatrix>& relations,
                                             const std::vector<SparseMatrix>& maps);
/// Rank of the map W -> W' / R' induced by f.
int induced_rank(const SparseMatrix& f, const SparseMatrix& target_relations);

}  // namespace gld
