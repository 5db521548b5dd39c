#include "gld/module.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "gld/errors.hpp"

namespace gld {

namespace {

struct GenMono {
  int gen;
  Monomial mono;
  bool operator==(const GenMono&) const = default;
};

struct GenMonoHash {
  std::size_t operator()(const GenMono& k) const { return k.mono.hash() * 31 + static_cast<std::size_t>(k.gen); }
};

using PieceIndex = std::unordered_map<GenMono, int, GenMonoHash>;

PieceIndex index_basis(const std::vector<std::pair<int, Monomial>>& basis) {
  PieceIndex idx;
  idx.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(GenMono{basis[i].first, basis[i].second}, static_cast<int>(i));
  return idx;
}

SparseVec sorted_vec(std::vector<std::pair<int, Rational>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& e : entries) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
      if (out.back().second == 0) out.pop_back();
    } else if (e.second != 0) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ModuleMap

ModuleMap::ModuleMap(FreeModule source, FreeModule target, std::vector<std::vector<Polynomial>> columns)
    : source_(std::move(source)), target_(std::move(target)), columns_(std::move(columns)) {
  if (source_.sig != target_.sig) throw InputError("module map between modules over different rings");
  if (static_cast<int>(columns_.size()) != source_.rank())
    throw InputError("module map has " + std::to_string(columns_.size()) + " columns, source rank " +
                     std::to_string(source_.rank()));
  for (int j = 0; j < source_.rank(); ++j) {
    auto& col = columns_[j];
    if (static_cast<int>(col.size()) != target_.rank())
      throw InputError("module map column " + std::to_string(j) + " has wrong length");
    for (int i = 0; i < target_.rank(); ++i) {
      Polynomial& p = col[i];
      if (p.signature() != source_.sig) {
        if (p.is_zero()) p = Polynomial(source_.sig);
        else throw InputError("module map entry over a different ring");
      }
      if (p.is_zero()) continue;
      BiDegree want = source_.shifts[j] - target_.shifts[i];
      for (const auto& [m, c] : p.terms()) {
        if (m.degree(source_.sig) != want)
          throw InputError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") term " +
                           format_monomial(m, source_.sig) + " has bidegree " + to_string(m.degree(source_.sig)) +
                           ", expected " + to_string(want));
      }
    }
  }
}

ModuleMap ModuleMap::zero(FreeModule source, FreeModule target) {
  std::vector<std::vector<Polynomial>> cols(source.rank(),
                                            std::vector<Polynomial>(target.rank(), Polynomial(source.sig)));
  return ModuleMap(std::move(source), std::move(target), std::move(cols));
}

ModuleMap ModuleMap::then(const ModuleMap& after) const {
  if (after.source_ != target_) throw InputError("composition of incompatible module maps");
  std::vector<std::vector<Polynomial>> out(cols(), std::vector<Polynomial>(after.rows(), Polynomial(source_.sig)));
  for (int j = 0; j < cols(); ++j) {
    for (int k = 0; k < rows(); ++k) {
      const Polynomial& a = entry(k, j);
      if (a.is_zero()) continue;
      for (int i = 0; i < after.rows(); ++i) {
        const Polynomial& b = after.entry(i, k);
        if (b.is_zero()) continue;
        out[j][i] = out[j][i] + b * a;
      }
    }
  }
  return ModuleMap(source_, after.target_, std::move(out));
}

bool ModuleMap::is_zero() const {
  for (const auto& c : columns_)
    for (const auto& p : c)
      if (!p.is_zero()) return false;
  return true;
}

ModuleMap ModuleMap::reversed() const {
  auto cols = columns_;
  for (auto& c : cols)
    for (auto& p : c) p = p.reversed();
  return ModuleMap(source_, target_, std::move(cols));
}

bool ModuleMap::operator==(const ModuleMap& o) const {
  return source_ == o.source_ && target_ == o.target_ && columns_ == o.columns_;
}

// ---------------------------------------------------------------------------
// BigradedPresentation

BigradedPresentation::BigradedPresentation(FreeModule generators, ModuleMap relations) {
  if (relations.target() != generators) throw InputError("relation map does not land in the generators");
  const int r0 = generators.rank();
  const int r1 = relations.cols();
  std::vector<int> gp(r0), rp(r1);
  std::iota(gp.begin(), gp.end(), 0);
  std::iota(rp.begin(), rp.end(), 0);
  std::stable_sort(gp.begin(), gp.end(), [&](int a, int b) { return generators.shifts[a] < generators.shifts[b]; });
  const auto& src = relations.source().shifts;
  std::stable_sort(rp.begin(), rp.end(), [&](int a, int b) { return src[a] < src[b]; });

  FreeModule f0{generators.sig, {}};
  for (int i : gp) f0.shifts.push_back(generators.shifts[i]);
  FreeModule f1{generators.sig, {}};
  std::vector<std::vector<Polynomial>> cols;
  for (int j : rp) {
    f1.shifts.push_back(src[j]);
    std::vector<Polynomial> col;
    for (int i : gp) col.push_back(relations.entry(i, j));
    cols.push_back(std::move(col));
  }
  generators_ = f0;
  relations_ = ModuleMap(std::move(f1), std::move(f0), std::move(cols));
}

BigradedPresentation BigradedPresentation::free(RingSignature sig, std::vector<BiDegree> shifts) {
  FreeModule f0{sig, std::move(shifts)};
  return BigradedPresentation(f0, ModuleMap::zero(FreeModule{sig, {}}, f0));
}

BigradedPresentation BigradedPresentation::from_columns(RingSignature sig, std::vector<BiDegree> generator_shifts,
                                                        std::vector<std::vector<Polynomial>> columns) {
  FreeModule f0{sig, std::move(generator_shifts)};
  FreeModule f1{sig, {}};
  std::vector<std::vector<Polynomial>> kept;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    auto& col = columns[j];
    if (static_cast<int>(col.size()) != f0.rank())
      throw InputError("relation " + std::to_string(j) + " has " + std::to_string(col.size()) +
                       " entries, expected " + std::to_string(f0.rank()));
    bool have = false;
    BiDegree deg;
    int witness_row = -1;
    Monomial witness;
    for (int i = 0; i < f0.rank(); ++i) {
      const Polynomial& p = col[i];
      if (p.is_zero()) continue;
      for (const auto& [m, c] : p.terms()) {
        BiDegree total = m.degree(sig) + f0.shifts[i];
        if (!have) {
          have = true;
          deg = total;
          witness_row = i;
          witness = m;
        } else if (total != deg) {
          throw InputError("relation " + std::to_string(j) + " is not bihomogeneous: monomial " +
                           format_monomial(witness, sig) + " (entry " + std::to_string(witness_row) +
                           ", column bidegree " + to_string(deg) + ") vs monomial " + format_monomial(m, sig) +
                           " (entry " + std::to_string(i) + ", column bidegree " + to_string(total) + ")");
        }
      }
    }
    if (!have) continue;
    f1.shifts.push_back(deg);
    kept.push_back(std::move(col));
  }
  return BigradedPresentation(f0, ModuleMap(std::move(f1), f0, std::move(kept)));
}

BigradedPresentation BigradedPresentation::with_relation_order(const std::vector<int>& perm) const {
  BigradedPresentation out;
  FreeModule f1{signature(), {}};
  std::vector<std::vector<Polynomial>> cols;
  for (int j : perm) {
    f1.shifts.push_back(relations_.source().shifts[j]);
    cols.push_back(relations_.column(j));
  }
  out.generators_ = generators_;
  out.relations_ = ModuleMap(std::move(f1), generators_, std::move(cols));
  return out;
}

bool BigradedPresentation::operator==(const BigradedPresentation& o) const {
  return generators_ == o.generators_ && relations_ == o.relations_;
}

std::string BigradedPresentation::describe() const {
  std::ostringstream out;
  out << "ring " << to_string(signature()) << ", generators [";
  for (int i = 0; i < num_generators(); ++i) out << (i ? " " : "") << to_string(generators_.shifts[i]);
  out << "], relations [";
  for (int j = 0; j < num_relations(); ++j) {
    out << (j ? "; " : "") << "(";
    for (int i = 0; i < num_generators(); ++i) out << (i ? ", " : "") << relations_.entry(i, j).to_string();
    out << ")";
  }
  out << "]";
  return out.str();
}

// ---------------------------------------------------------------------------
// Functors

BigradedPresentation shift(const BigradedPresentation& g, int m) {
  FreeModule f0 = g.generators();
  for (auto& s : f0.shifts) s.t -= m;
  FreeModule f1 = g.relations().source();
  for (auto& s : f1.shifts) s.t -= m;
  return BigradedPresentation(f0, ModuleMap(f1, f0, g.relations().columns()));
}

BigradedPresentation shift_x(const BigradedPresentation& g, int s) {
  FreeModule f0 = g.generators();
  for (auto& d : f0.shifts) d.x += s;
  FreeModule f1 = g.relations().source();
  for (auto& d : f1.shifts) d.x += s;
  return BigradedPresentation(f0, ModuleMap(f1, f0, g.relations().columns()));
}

BigradedPresentation reverse(const BigradedPresentation& g) {
  return BigradedPresentation(g.generators(), g.relations().reversed());
}

BigradedPresentation direct_sum(const BigradedPresentation& a, const BigradedPresentation& b) {
  if (a.signature() != b.signature()) throw InputError("direct sum over different rings");
  RingSignature sig = a.signature();
  FreeModule f0{sig, a.generators().shifts};
  f0.shifts.insert(f0.shifts.end(), b.generators().shifts.begin(), b.generators().shifts.end());
  FreeModule f1{sig, a.relations().source().shifts};
  f1.shifts.insert(f1.shifts.end(), b.relations().source().shifts.begin(), b.relations().source().shifts.end());
  std::vector<std::vector<Polynomial>> cols;
  for (int j = 0; j < a.num_relations(); ++j) {
    auto col = a.relations().column(j);
    col.resize(f0.rank(), Polynomial(sig));
    cols.push_back(std::move(col));
  }
  for (int j = 0; j < b.num_relations(); ++j) {
    std::vector<Polynomial> col(a.num_generators(), Polynomial(sig));
    const auto& bc = b.relations().column(j);
    col.insert(col.end(), bc.begin(), bc.end());
    cols.push_back(std::move(col));
  }
  return BigradedPresentation(f0, ModuleMap(f1, f0, std::move(cols)));
}

std::vector<BigradedPresentation> split_summands(const BigradedPresentation& g) {
  const int n = g.num_generators();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int j = 0; j < g.num_relations(); ++j) {
    int first = -1;
    for (int i = 0; i < n; ++i) {
      if (g.relations().entry(i, j).is_zero()) continue;
      if (first < 0) first = i;
      else parent[find(i)] = find(first);
    }
  }
  std::map<int, std::vector<int>> comps;
  for (int i = 0; i < n; ++i) comps[find(i)].push_back(i);
  std::vector<BigradedPresentation> out;
  for (const auto& [root, gens] : comps) {
    std::vector<BiDegree> shifts;
    for (int i : gens) shifts.push_back(g.generators().shifts[i]);
    std::vector<std::vector<Polynomial>> cols;
    for (int j = 0; j < g.num_relations(); ++j) {
      if (g.relations().entry(gens[0], j).is_zero()) {
        bool touches = false;
        for (int i : gens) touches |= !g.relations().entry(i, j).is_zero();
        if (!touches) continue;
      }
      std::vector<Polynomial> col;
      for (int i : gens) col.push_back(g.relations().entry(i, j));
      cols.push_back(std::move(col));
    }
    out.push_back(BigradedPresentation::from_columns(g.signature(), shifts, std::move(cols)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Degree pieces

int DegreePiece::dim() const { return static_cast<int>(basis.size()) - rank(quotient_matrix); }

std::vector<std::pair<int, Monomial>> free_piece_basis(const FreeModule& f, BiDegree deg) {
  std::vector<std::pair<int, Monomial>> basis;
  for (int i = 0; i < f.rank(); ++i)
    for (const auto& m : monomials_of_degree(f.sig, deg - f.shifts[i])) basis.emplace_back(i, m);
  return basis;
}

SparseMatrix map_piece_matrix(const ModuleMap& m, BiDegree deg) {
  auto src = free_piece_basis(m.source(), deg);
  auto tgt = free_piece_basis(m.target(), deg);
  auto idx = index_basis(tgt);
  SparseMatrix out{static_cast<int>(tgt.size()), {}};
  for (const auto& [j, mono] : src) {
    std::vector<std::pair<int, Rational>> entries;
    for (int i = 0; i < m.rows(); ++i) {
      for (const auto& [tm, c] : m.entry(i, j).terms()) entries.emplace_back(idx.at(GenMono{i, tm * mono}), c);
    }
    out.cols.push_back(sorted_vec(std::move(entries)));
  }
  return out;
}

DegreePiece piece(const BigradedPresentation& g, BiDegree deg) {
  DegreePiece p;
  p.bidegree = deg;
  p.basis = free_piece_basis(g.generators(), deg);
  auto idx = index_basis(p.basis);
  p.quotient_matrix.rows = static_cast<int>(p.basis.size());
  const ModuleMap& rel = g.relations();
  for (int j = 0; j < rel.cols(); ++j) {
    for (const auto& nu : monomials_of_degree(g.signature(), deg - rel.source().shifts[j])) {
      std::vector<std::pair<int, Rational>> entries;
      for (int i = 0; i < rel.rows(); ++i)
        for (const auto& [tm, c] : rel.entry(i, j).terms()) entries.emplace_back(idx.at(GenMono{i, tm * nu}), c);
      p.quotient_matrix.cols.push_back(sorted_vec(std::move(entries)));
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// t-slices

int minimal_slice_cutoff(const BigradedPresentation& g) {
  int c = 0;
  for (const auto& s : g.relations().source().shifts) c = std::max(c, s.x);
  return c;
}

BigradedPresentation t_slice(const BigradedPresentation& g, int k, int x_cutoff) {
  const RingSignature sig = g.signature();
  const RingSignature asig{sig.x_vars, 0};
  const int m = sig.x_vars;
  auto x_part = [&](const Monomial& mono) {
    return Monomial(std::vector<int>(mono.exponents().begin(), mono.exponents().begin() + m));
  };
  auto t_part = [&](const Monomial& mono) {
    std::vector<int> e(mono.exponents());
    std::fill(e.begin(), e.begin() + m, 0);
    return Monomial(std::move(e));
  };

  std::vector<BiDegree> shifts;
  PieceIndex gen_index;
  for (int i = 0; i < g.num_generators(); ++i) {
    BiDegree s = g.generators().shifts[i];
    if (s.t > k) continue;
    for (const auto& tau : t_monomials(sig, k - s.t)) {
      gen_index.emplace(GenMono{i, tau}, static_cast<int>(shifts.size()));
      shifts.push_back({s.x, 0});
    }
  }
  std::vector<std::vector<Polynomial>> cols;
  const ModuleMap& rel = g.relations();
  for (int j = 0; j < rel.cols(); ++j) {
    BiDegree c = rel.source().shifts[j];
    if (c.t > k) continue;
    if (c.x > x_cutoff)
      throw CutoffError("slice cutoff " + std::to_string(x_cutoff) + " below relation x-degree " +
                        std::to_string(c.x));
    for (const auto& tau : t_monomials(sig, k - c.t)) {
      std::vector<std::vector<Polynomial::Term>> acc(shifts.size());
      for (int i = 0; i < rel.rows(); ++i) {
        for (const auto& [mono, coef] : rel.entry(i, j).terms()) {
          int target = gen_index.at(GenMono{i, t_part(mono) * tau});
          acc[target].emplace_back(x_part(mono), coef);
        }
      }
      std::vector<Polynomial> col;
      col.reserve(shifts.size());
      for (auto& terms : acc) col.push_back(Polynomial::from_terms(asig, std::move(terms)));
      cols.push_back(std::move(col));
    }
  }
  return BigradedPresentation::from_columns(asig, std::move(shifts), std::move(cols));
}

// ---------------------------------------------------------------------------
// Windows

std::vector<BiDegree> Window::points() const {
  std::vector<BiDegree> out;
  for (int x = x_lo; x <= x_hi; ++x)
    for (int t = t_lo; t <= t_hi; ++t) out.push_back({x, t});
  return out;
}

std::string Window::to_string() const {
  return std::to_string(x_lo) + ":" + std::to_string(x_hi) + "," + std::to_string(t_lo) + ":" + std::to_string(t_hi);
}

Window parse_window(const std::string& text) {
  Window w;
  char c1, c2, c3;
  std::istringstream in(text);
  if (!(in >> w.x_lo >> c1 >> w.x_hi >> c2 >> w.t_lo >> c3 >> w.t_hi) || c1 != ':' || c2 != ',' || c3 != ':')
    throw InputError("window must look like a0:a1,b0:b1, got '" + text + "'");
  std::string rest;
  if (in >> rest) throw InputError("trailing characters in window '" + text + "'");
  if (w.x_lo > w.x_hi || w.t_lo > w.t_hi) throw InputError("empty window '" + text + "'");
  return w;
}

Window default_window(const BigradedPresentation& g) {
  const int d = g.signature().t_vars;
  Window w;
  std::vector<BiDegree> all = g.generators().shifts;
  const auto& rs = g.relations().source().shifts;
  all.insert(all.end(), rs.begin(), rs.end());
  if (all.empty()) {
    w = {0, 4, -d - 2, d + 2};
    return w;
  }
  int tmin = all[0].t, tmax = all[0].t, xmin = 0, xrel = 0;
  for (const auto& s : all) {
    tmin = std::min(tmin, s.t);
    tmax = std::max(tmax, s.t);
    xmin = std::min(xmin, s.x);
    xrel = std::max(xrel, s.x);
  }
  w.t_lo = tmin - d - 2;
  w.t_hi = tmax + d + 2;
  w.x_lo = xmin;
  w.x_hi = xrel + 4;
  return w;
}

}  // namespace gld
