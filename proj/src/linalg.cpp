#include "gld/linalg.hpp"

#include <cassert>

namespace gld {

SparseVec axpy(const SparseVec& v, const Rational& c, const SparseVec& w) {
  if (c == 0) return v;
  SparseVec r;
  r.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      r.push_back(v[i++]);
    } else if (i == v.size() || w[j].first < v[i].first) {
      r.emplace_back(w[j].first, c * w[j].second);
      ++j;
    } else {
      Rational s = v[i].second + c * w[j].second;
      if (s != 0) r.emplace_back(v[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return r;
}

SparseMatrix SparseMatrix::concat(const SparseMatrix& other) const {
  assert(rows == other.rows);
  SparseMatrix r{rows, cols};
  r.cols.insert(r.cols.end(), other.cols.begin(), other.cols.end());
  return r;
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
  SparseVec r;
  for (const auto& [j, c] : x) r = axpy(r, c, cols[j]);
  return r;
}

SparseVec Echelon::reduce(SparseVec v) const {
  std::size_t k = 0;
  while (k < v.size()) {
    auto it = pivot_row_.find(v[k].first);
    if (it == pivot_row_.end()) {
      ++k;
      continue;
    }
    Rational c = -v[k].second;
    v = axpy(v, c, rows_[it->second]);
  }
  return v;
}

bool Echelon::insert(SparseVec v) {
  SparseVec combo;
  const int id = inserted_++;
  if (track_) combo.emplace_back(id, Rational(1));
  // Reduce the leading entry until it hits a free pivot position.
  for (;;) {
    if (v.empty()) {
      if (track_) relations_.push_back(std::move(combo));
      return false;
    }
    auto it = pivot_row_.find(v.front().first);
    if (it == pivot_row_.end()) break;
    Rational c = -v.front().second;
    v = axpy(v, c, rows_[it->second]);
    if (track_) combo = axpy(combo, c, combos_[it->second]);
  }
  Rational inv = 1 / v.front().second;
  for (auto& e : v) e.second *= inv;
  if (track_) {
    for (auto& e : combo) e.second *= inv;
    combos_.push_back(std::move(combo));
  }
  pivot_row_.emplace(v.front().first, rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

int rank(const SparseMatrix& m) {
  Echelon e;
  for (const auto& c : m.cols) e.insert(c);
  return e.rank();
}

std::vector<SparseVec> nullspace(const SparseMatrix& m) {
  Echelon e(true);
  for (const auto& c : m.cols) e.insert(c);
  return e.relations();
}

std::vector<int> FiniteComplex::cohomology_dims() const {
  std::vector<int> ranks(diffs.size());
  for (std::size_t p = 0; p < diffs.size(); ++p) ranks[p] = rank(diffs[p]);
  std::vector<int> h(dims.size());
  for (std::size_t p = 0; p < dims.size(); ++p) {
    int out = p < diffs.size() ? ranks[p] : 0;
    int in = p > 0 ? ranks[p - 1] : 0;
    h[p] = dims[p] - out - in;
  }
  return h;
}

bool FiniteComplex::is_complex() const {
  for (std::size_t p = 0; p + 1 < diffs.size(); ++p) {
    for (const auto& c : diffs[p].cols) {
      if (!diffs[p + 1].apply(c).empty()) return false;
    }
  }
  return true;
}

}  // namespace gld

namespace gld {

int induced_rank(const SparseMatrix& f, const SparseMatrix& target_relations) {
  Echelon e;
  for (const auto& c : target_relations.cols) e.insert(c);
  const int base = e.rank();
  for (const auto& c : f.cols) e.insert(c);
  return e.rank() - base;
}

std::vector<int> quotient_complex_cohomology(const std::vector<int>& dims, const std::vector<SparseMatrix>& relations,
                                             const std::vector<SparseMatrix>& maps) {
  const std::size_t n = dims.size();
  std::vector<int> out_rank(n, 0);
  for (std::size_t p = 0; p + 1 < n; ++p) out_rank[p] = induced_rank(maps[p], relations[p + 1]);
  std::vector<int> h(n);
  for (std::size_t p = 0; p < n; ++p) {
    int v = dims[p] - rank(relations[p]);
    h[p] = v - out_rank[p] - (p > 0 ? out_rank[p - 1] : 0);
  }
  return h;
}

}  // namespace gld
