#include "gld/cech.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "gld/errors.hpp"

namespace gld {

std::vector<std::vector<int>> index_sets(int d, int size) {
  std::vector<std::vector<int>> out;
  if (size < 0 || size > d) return out;
  std::vector<int> cur(size);
  for (int i = 0; i < size; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    int i = size - 1;
    while (i >= 0 && cur[i] == d - size + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < size; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

struct Layout {
  std::vector<std::vector<std::vector<int>>> sets;  // per position
  std::vector<std::vector<int>> offsets;            // per position, per set
  std::vector<int> dims;                            // per position
  std::vector<std::map<std::vector<int>, int>> where;
};

Layout layout(int d, bool augmented, const std::function<int(const std::vector<int>&)>& term_dim) {
  Layout l;
  for (int size = augmented ? 0 : 1; size <= d; ++size) {
    auto sets = index_sets(d, size);
    std::vector<int> offs;
    std::map<std::vector<int>, int> where;
    int total = 0;
    for (std::size_t s = 0; s < sets.size(); ++s) {
      offs.push_back(total);
      where[sets[s]] = static_cast<int>(s);
      total += term_dim(sets[s]);
    }
    l.sets.push_back(std::move(sets));
    l.offsets.push_back(std::move(offs));
    l.dims.push_back(total);
    l.where.push_back(std::move(where));
  }
  return l;
}

/// Extensions J = I + {j} with the Čech sign (-1)^(position of j in J).
std::vector<std::tuple<int, std::vector<int>, int>> extensions(const std::vector<int>& set, int d) {
  std::vector<std::tuple<int, std::vector<int>, int>> out;
  for (int j = 0; j < d; ++j) {
    if (std::find(set.begin(), set.end(), j) != set.end()) continue;
    std::vector<int> big = set;
    big.push_back(j);
    std::sort(big.begin(), big.end());
    int pos = static_cast<int>(std::find(big.begin(), big.end(), j) - big.begin());
    out.emplace_back(j, std::move(big), pos % 2 == 0 ? 1 : -1);
  }
  return out;
}

void sort_columns(SparseMatrix& m) {
  for (auto& c : m.cols) {
    std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec merged;
    for (auto& e : c) {
      if (!merged.empty() && merged.back().first == e.first) {
        merged.back().second += e.second;
        if (merged.back().second == 0) merged.pop_back();
      } else if (e.second != 0) {
        merged.push_back(std::move(e));
      }
    }
    c = std::move(merged);
  }
}

Monomial t_power(const RingSignature& sig, const std::vector<int>& vars, int power) {
  Monomial m = Monomial::one(sig.nvars());
  for (int v : vars) m[sig.x_vars + v] += power;
  return m;
}

/// Block-diagonal matrix of multiplication by t_I from cap N to cap N+1.
std::vector<SparseMatrix> transition(const ModuleBasis& mb, BiDegree deg, int cap, bool augmented) {
  const RingSignature& sig = mb.presentation().signature();
  const int d = sig.t_vars;
  auto dim_at = [&](int c) {
    return [&, c](const std::vector<int>& set) {
      return mb.dim({deg.x, deg.t + c * static_cast<int>(set.size())});
    };
  };
  Layout src = layout(d, augmented, dim_at(cap));
  Layout tgt = layout(d, augmented, dim_at(cap + 1));
  std::vector<SparseMatrix> out;
  for (std::size_t p = 0; p < src.sets.size(); ++p) {
    SparseMatrix m{tgt.dims[p], {}};
    for (std::size_t s = 0; s < src.sets[p].size(); ++s) {
      const auto& set = src.sets[p][s];
      BiDegree from{deg.x, deg.t + cap * static_cast<int>(set.size())};
      SparseMatrix block = mb.multiplication(from, t_power(sig, set, 1));
      for (auto& col : block.cols) {
        for (auto& e : col) e.first += tgt.offsets[p][s];
        m.cols.push_back(std::move(col));
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

bool transition_is_iso(const FiniteComplex& c0, const FiniteComplex& c1, const std::vector<SparseMatrix>& f,
                       const std::vector<int>& h) {
  for (int p = 0; p < c0.length(); ++p) {
    std::vector<SparseVec> cycles;
    if (p < c0.length() - 1) {
      cycles = nullspace(c0.diffs[p]);
    } else {
      for (int i = 0; i < c0.dims[p]; ++i) cycles.push_back({{i, Rational(1)}});
    }
    SparseMatrix image{c1.dims[p], {}};
    for (const auto& z : cycles) image.cols.push_back(f[p].apply(z));
    SparseMatrix boundaries{c1.dims[p], {}};
    if (p > 0) boundaries = c1.diffs[p - 1];
    if (induced_rank(image, boundaries) != h[p]) return false;
  }
  return true;
}

}  // namespace

FiniteComplex cech_slice(const ModuleBasis& mb, BiDegree deg, int cap, bool augmented) {
  const RingSignature& sig = mb.presentation().signature();
  const int d = sig.t_vars;
  Layout l = layout(d, augmented, [&](const std::vector<int>& set) {
    return mb.dim({deg.x, deg.t + cap * static_cast<int>(set.size())});
  });
  FiniteComplex c;
  c.dims = l.dims;
  for (std::size_t p = 0; p + 1 < l.sets.size(); ++p) {
    SparseMatrix m{l.dims[p + 1], std::vector<SparseVec>(l.dims[p])};
    for (std::size_t s = 0; s < l.sets[p].size(); ++s) {
      const auto& set = l.sets[p][s];
      BiDegree from{deg.x, deg.t + cap * static_cast<int>(set.size())};
      for (const auto& [j, big, sign] : extensions(set, d)) {
        SparseMatrix block = mb.multiplication(from, t_power(sig, {j}, cap));
        int row_off = l.offsets[p + 1][l.where[p + 1].at(big)];
        for (int col = 0; col < block.num_cols(); ++col)
          for (const auto& [r, v] : block.cols[col])
            m.cols[l.offsets[p][s] + col].emplace_back(row_off + r, sign > 0 ? v : Rational(-v));
      }
    }
    sort_columns(m);
    c.diffs.push_back(std::move(m));
  }
  return c;
}

std::vector<int> literal_cech_cohomology(const BigradedPresentation& g, BiDegree deg, int cap, bool augmented) {
  const RingSignature sig = g.signature();
  const int d = sig.t_vars;
  const int m = sig.x_vars;
  using Key = std::pair<int, Monomial>;

  auto laurent = [&](BiDegree target, const std::vector<int>& set) {
    std::vector<Monomial> out;
    for (const auto& mono : monomials_of_degree(sig, {target.x, target.t + cap * static_cast<int>(set.size())})) {
      Monomial l = mono;
      for (int v : set) l[m + v] -= cap;
      out.push_back(std::move(l));
    }
    return out;
  };

  struct Term {
    std::vector<Key> basis;
    std::map<Key, int> index;
    SparseMatrix relations;
  };
  auto build = [&](const std::vector<int>& set) {
    Term t;
    for (int i = 0; i < g.num_generators(); ++i)
      for (auto& mono : laurent(deg - g.generators().shifts[i], set)) {
        t.index.emplace(Key(i, mono), static_cast<int>(t.basis.size()));
        t.basis.emplace_back(i, std::move(mono));
      }
    t.relations.rows = static_cast<int>(t.basis.size());
    const ModuleMap& rel = g.relations();
    for (int j = 0; j < rel.cols(); ++j) {
      for (const auto& nu : laurent(deg - rel.source().shifts[j], set)) {
        SparseVec col;
        for (int i = 0; i < rel.rows(); ++i)
          for (const auto& [mono, c] : rel.entry(i, j).terms()) col.emplace_back(t.index.at(Key(i, mono * nu)), c);
        t.relations.cols.push_back(std::move(col));
      }
    }
    sort_columns(t.relations);
    return t;
  };

  std::vector<std::vector<Term>> terms;
  std::vector<std::vector<std::vector<int>>> sets;
  for (int size = augmented ? 0 : 1; size <= d; ++size) {
    sets.push_back(index_sets(d, size));
    std::vector<Term> ts;
    for (const auto& s : sets.back()) ts.push_back(build(s));
    terms.push_back(std::move(ts));
  }
  const int n = static_cast<int>(terms.size());
  std::vector<int> dims(n, 0);
  std::vector<std::vector<int>> offsets(n);
  std::vector<SparseMatrix> relations(n);
  for (int p = 0; p < n; ++p) {
    for (const auto& t : terms[p]) {
      offsets[p].push_back(dims[p]);
      dims[p] += static_cast<int>(t.basis.size());
    }
    relations[p].rows = dims[p];
    for (std::size_t s = 0; s < terms[p].size(); ++s)
      for (auto col : terms[p][s].relations.cols) {
        for (auto& e : col) e.first += offsets[p][s];
        relations[p].cols.push_back(std::move(col));
      }
  }
  std::vector<SparseMatrix> maps;
  for (int p = 0; p + 1 < n; ++p) {
    SparseMatrix f{dims[p + 1], std::vector<SparseVec>(dims[p])};
    for (std::size_t s = 0; s < sets[p].size(); ++s) {
      for (const auto& [j, big, sign] : extensions(sets[p][s], d)) {
        auto it = std::find(sets[p + 1].begin(), sets[p + 1].end(), big);
        std::size_t bs = it - sets[p + 1].begin();
        const Term& target = terms[p + 1][bs];
        const Term& source = terms[p][s];
        for (std::size_t b = 0; b < source.basis.size(); ++b)
          f.cols[offsets[p][s] + b].emplace_back(offsets[p + 1][bs] + target.index.at(source.basis[b]),
                                                 Rational(sign));
      }
    }
    sort_columns(f);
    maps.push_back(std::move(f));
  }
  return quotient_complex_cohomology(dims, relations, maps);
}

int torsion_dim(const BigradedPresentation& g, BiDegree deg, int cap) {
  const RingSignature sig = g.signature();
  const int d = sig.t_vars;
  DegreePiece src = piece(g, deg);
  if (d == 0) return src.dim();
  const int power = d * (cap - 1) + 1;
  DegreePiece tgt = piece(g, deg + BiDegree{0, power});
  std::map<std::pair<int, Monomial>, int> index;
  for (std::size_t i = 0; i < tgt.basis.size(); ++i) index.emplace(tgt.basis[i], static_cast<int>(i));
  const auto& taus = t_monomials(sig, power);
  const int block = static_cast<int>(tgt.basis.size());
  SparseMatrix f{block * static_cast<int>(taus.size()), {}};
  SparseMatrix rel{f.rows, {}};
  for (std::size_t t = 0; t < taus.size(); ++t)
    for (auto col : tgt.quotient_matrix.cols) {
      for (auto& e : col) e.first += static_cast<int>(t) * block;
      rel.cols.push_back(std::move(col));
    }
  for (const auto& [gen, mono] : src.basis) {
    SparseVec col;
    for (std::size_t t = 0; t < taus.size(); ++t)
      col.emplace_back(static_cast<int>(t) * block + index.at({gen, mono * taus[t]}), Rational(1));
    f.cols.push_back(std::move(col));
  }
  return src.dim() - induced_rank(f, rel);
}

int torsion_dim(const ModuleBasis& mb, BiDegree deg, int cap) {
  const RingSignature& sig = mb.presentation().signature();
  const int d = sig.t_vars;
  const int dim = mb.dim(deg);
  if (d == 0 || dim == 0) return dim;
  const int power = d * (cap - 1) + 1;
  const int block = mb.dim(deg + BiDegree{0, power});
  const auto& taus = t_monomials(sig, power);
  SparseMatrix f{block * static_cast<int>(taus.size()), std::vector<SparseVec>(dim)};
  for (std::size_t t = 0; t < taus.size(); ++t) {
    SparseMatrix m = mb.multiplication(deg, taus[t]);
    for (int c = 0; c < dim; ++c)
      for (const auto& [r, v] : m.cols[c]) f.cols[c].emplace_back(static_cast<int>(t) * block + r, v);
  }
  return dim - rank(f);
}

// ---------------------------------------------------------------------------
// CechCalculator

CechCalculator::CechCalculator(const BigradedPresentation& g, int cap, int max_cap)
    : g_(g), mb_(std::make_unique<ModuleBasis>(g)), cap_(std::max(cap, 1)), max_cap_(max_cap) {
  FreeResolution r = minimalize(free_resolution(g, g.signature().nvars() + 1));
  bool any = false;
  for (const auto& f : r.modules)
    for (const auto& s : f.shifts) {
      max_res_shift_ = any ? std::max(max_res_shift_, s.t) : s.t;
      any = true;
    }
}

int CechCalculator::exact_cap(int t_degree) const {
  return std::max(1, -t_degree + max_res_shift_ - g_.signature().t_vars + 1);
}

StableCohomology CechCalculator::stable(BiDegree deg, bool augmented) const {
  int n = std::max(cap_, exact_cap(deg.t));
  for (;;) {
    if (n > max_cap_)
      throw CutoffError("Čech cohomology at " + to_string(deg) + " not certified up to max cap " +
                        std::to_string(max_cap_) + " (next cap " + std::to_string(n) + ")");
    FiniteComplex c0 = cech_slice(*mb_, deg, n, augmented);
    FiniteComplex c1 = cech_slice(*mb_, deg, n + 1, augmented);
    std::vector<int> h0 = c0.cohomology_dims();
    if (h0 == c1.cohomology_dims() && transition_is_iso(c0, c1, transition(*mb_, deg, n, augmented), h0))
      return {h0, n};
    n *= 2;
  }
}

StableCohomology CechCalculator::local_cohomology(BiDegree deg) const { return stable(deg, true); }

StableCohomology CechCalculator::gamma_star(BiDegree deg) const { return stable(deg, false); }

Prop1Values CechCalculator::prop1(BiDegree deg) const {
  StableCohomology aug = stable(deg, true);
  StableCohomology non = stable(deg, false);
  const int n = std::max(aug.cap, non.cap);
  FiniteComplex ca = cech_slice(*mb_, deg, n, true);
  FiniteComplex cn = cech_slice(*mb_, deg, n, false);
  Prop1Values v;
  v.cap = n;
  v.h = ca.cohomology_dims();
  v.r = cn.cohomology_dims();
  v.g = ca.dims[0];
  int eps = ca.diffs.empty() ? 0 : rank(ca.diffs[0]);
  v.kernel = v.g - eps;
  v.gamma = v.r.empty() ? 0 : v.r[0];
  v.cokernel = v.gamma - eps;
  v.torsion = torsion_dim(*mb_, deg, n);
  return v;
}

CohomologyDim local_cohomology(const BigradedPresentation& g, int i, BiDegree deg, int cap, int max_cap) {
  if (i < 0 || i > g.signature().t_vars) throw InputError("local cohomology index out of range");
  CechCalculator c(g, cap, max_cap);
  StableCohomology s = c.local_cohomology(deg);
  return {s.dims[i], true, s.cap};
}

CohomologyDim gamma_star(const BigradedPresentation& g, int q, BiDegree deg, int cap, int max_cap) {
  if (q < 0) throw InputError("negative index");
  if (q >= g.signature().t_vars) return {0, true, cap};
  CechCalculator c(g, cap, max_cap);
  StableCohomology s = c.gamma_star(deg);
  return {s.dims[q], true, s.cap};
}

std::vector<CheckRecord> verify_prop1(const CechCalculator& c, const Window& w) {
  std::vector<CheckRecord> out;
  const int d = c.presentation().signature().t_vars;
  for (const auto& deg : w.points()) {
    Prop1Values v = c.prop1(deg);
    std::string cap = "cap " + std::to_string(v.cap);
    out.push_back(compare_record("prop1.h0_kernel", deg, {v.kernel}, {v.torsion}, cap));
    out.push_back(compare_record("prop1.h1_cokernel", deg, {v.cokernel}, {v.h.size() > 1 ? v.h[1] : 0}, cap));
    for (int i = 2; i <= d; ++i)
      out.push_back(compare_record("prop1.h" + std::to_string(i), deg, {v.h[i]}, {v.r[i - 1]}, cap));
    out.push_back(compare_record("prop1.euler", deg, {v.g - v.gamma}, {v.torsion - (v.h.size() > 1 ? v.h[1] : 0)},
                                 cap));
    if (!v.h.empty() && v.h[0] != v.kernel)
      out.push_back(compare_record("prop1.h0_augmented", deg, {v.h[0]}, {v.kernel}, cap));
  }
  return out;
}

}  // namespace gld
