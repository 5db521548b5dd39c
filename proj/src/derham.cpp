#include "gld/derham.hpp"

#include <algorithm>

#include "gld/cech.hpp"
#include "gld/errors.hpp"
#include "gld/homology.hpp"

namespace gld {

long binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

int sign_of(int p) { return p % 2 == 0 ? 1 : -1; }

struct Wedge {
  std::vector<std::vector<std::vector<int>>> sets;  // per size
  std::vector<std::map<std::vector<int>, int>> where;
};

Wedge wedge(int d) {
  Wedge w;
  for (int size = 0; size <= d; ++size) {
    w.sets.push_back(index_sets(d, size));
    std::map<std::vector<int>, int> where;
    for (std::size_t s = 0; s < w.sets.back().size(); ++s) where[w.sets.back()[s]] = static_cast<int>(s);
    w.where.push_back(std::move(where));
  }
  return w;
}

/// (J ∪ {i}, Koszul sign) for each i not in J.
std::vector<std::tuple<int, std::vector<int>, int>> wedge_with(const std::vector<int>& set, int d) {
  std::vector<std::tuple<int, std::vector<int>, int>> out;
  for (int i = 0; i < d; ++i) {
    if (std::find(set.begin(), set.end(), i) != set.end()) continue;
    int below = static_cast<int>(std::count_if(set.begin(), set.end(), [i](int j) { return j < i; }));
    std::vector<int> big = set;
    big.insert(big.begin() + below, i);
    out.emplace_back(i, std::move(big), sign_of(below));
  }
  return out;
}

void sort_entries(SparseMatrix& m) {
  for (auto& c : m.cols)
    std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

long euler(const std::vector<int>& h, int d) {
  long s = 0;
  for (int idx = 0; idx < static_cast<int>(h.size()); ++idx) s += sign_of(idx - d) * h[idx];
  return s;
}

}  // namespace

DRComplex::DRComplex(const BigradedPresentation& g) : g_(g), mb_(std::make_unique<ModuleBasis>(g)) {}

FiniteComplex DRComplex::slice(BiDegree deg) const {
  const RingSignature sig = g_.signature();
  const int d = sig.t_vars;
  Wedge wd = wedge(d);
  FiniteComplex c;
  std::vector<int> piece_dims;
  for (int size = 0; size <= d; ++size) {
    piece_dims.push_back(mb_->dim({deg.x, deg.t + size}));
    c.dims.push_back(static_cast<int>(wd.sets[size].size()) * piece_dims.back());
  }
  for (int size = 0; size < d; ++size) {
    SparseMatrix m{c.dims[size + 1], std::vector<SparseVec>(c.dims[size])};
    const int src = piece_dims[size];
    const int tgt = piece_dims[size + 1];
    for (std::size_t s = 0; s < wd.sets[size].size(); ++s) {
      for (const auto& [i, big, sign] : wedge_with(wd.sets[size][s], d)) {
        SparseMatrix block =
            mb_->multiplication({deg.x, deg.t + size}, Monomial::variable(sig.nvars(), sig.x_vars + i));
        const int row_off = wd.where[size + 1].at(big) * tgt;
        for (int col = 0; col < src; ++col)
          for (const auto& [r, v] : block.cols[col])
            m.cols[static_cast<int>(s) * src + col].emplace_back(row_off + r, sign > 0 ? v : Rational(-v));
      }
    }
    sort_entries(m);
    c.diffs.push_back(std::move(m));
  }
  return c;
}

std::vector<int> DRComplex::cohomology(BiDegree deg) const { return slice(deg).cohomology_dims(); }

DRComplex dr_complex(const BigradedPresentation& g) { return DRComplex(g); }

int dr_cohomology(const BigradedPresentation& g, int j, BiDegree deg) {
  const int d = g.signature().t_vars;
  if (j < -d || j > 0) throw InputError("de Rham degree must lie in [-d, 0]");
  return DRComplex(g).cohomology(deg)[j + d];
}

std::vector<int> gr_dr_slice_cohomology(const BigradedPresentation& g, BiDegree deg) {
  const RingSignature sig = g.signature();
  const int d = sig.t_vars;
  Wedge wd = wedge(d);
  std::vector<DegreePiece> pieces;
  std::vector<std::map<std::pair<int, Monomial>, int>> index(d + 1);
  std::vector<int> dims;
  std::vector<SparseMatrix> relations;
  for (int size = 0; size <= d; ++size) {
    pieces.push_back(piece(g, {deg.x, deg.t + size}));
    const DegreePiece& p = pieces.back();
    for (std::size_t b = 0; b < p.basis.size(); ++b) index[size].emplace(p.basis[b], static_cast<int>(b));
    const int block = static_cast<int>(p.basis.size());
    const int copies = static_cast<int>(wd.sets[size].size());
    dims.push_back(block * copies);
    SparseMatrix rel{dims.back(), {}};
    for (int s = 0; s < copies; ++s)
      for (auto col : p.quotient_matrix.cols) {
        for (auto& e : col) e.first += s * block;
        rel.cols.push_back(std::move(col));
      }
    relations.push_back(std::move(rel));
  }
  std::vector<SparseMatrix> maps;
  for (int size = 0; size < d; ++size) {
    const auto& src = pieces[size].basis;
    const int tgt = static_cast<int>(pieces[size + 1].basis.size());
    SparseMatrix f{dims[size + 1], std::vector<SparseVec>(dims[size])};
    for (std::size_t s = 0; s < wd.sets[size].size(); ++s)
      for (const auto& [i, big, sign] : wedge_with(wd.sets[size][s], d)) {
        Monomial ti = Monomial::variable(sig.nvars(), sig.x_vars + i);
        const int row_off = wd.where[size + 1].at(big) * tgt;
        for (std::size_t b = 0; b < src.size(); ++b)
          f.cols[s * src.size() + b].emplace_back(row_off + index[size + 1].at({src[b].first, src[b].second * ti}),
                                                  Rational(sign));
      }
    sort_entries(f);
    maps.push_back(std::move(f));
  }
  return quotient_complex_cohomology(dims, relations, maps);
}

int dr_exact_from(const BigradedPresentation& g) {
  FreeResolution r = minimalize(free_resolution(g, g.signature().nvars() + 1));
  std::optional<int> top;
  for (const auto& f : r.modules)
    for (const auto& s : f.shifts) top = top ? std::max(*top, s.t) : s.t;
  return top ? *top - g.signature().t_vars + 1 : 0;
}

Der3Result verify_der3(const BigradedPresentation& g, const Window& w) {
  Der3Result res;
  DRComplex dr(g);
  const int exact = dr_exact_from(g);
  const int step = std::max(4, w.t_hi - w.t_lo + 1);
  for (int a = w.x_lo; a <= w.x_hi; ++a) {
    std::map<int, long> total;
    int start = w.t_lo;
    int end = std::max(w.t_hi, exact);
    int last = w.t_lo - 1;
    for (int attempt = 0; attempt < 4; ++attempt) {
      for (int k = start; k <= end; ++k) {
        auto h = dr.cohomology({a, k});
        long sum = 0;
        for (int x : h) sum += x;
        total[k] = sum;
        if (sum != 0) last = k;
      }
      if (last < end) break;
      start = end + 1;
      end += step;
    }
    const int b0 = std::min(last + 1, end);
    res.b0[a] = last + 1;
    std::vector<long> lhs;
    for (int k = b0; k <= end; ++k) lhs.push_back(total[k]);
    std::string note = "B0 = " + std::to_string(last + 1) + "; scanned to t-degree " + std::to_string(end) +
                       "; resolution bound " + std::to_string(exact);
    res.records.push_back(
        compare_record("der3.vanishing", BiDegree{a, b0}, lhs, std::vector<long>(lhs.size(), 0), note));
  }
  return res;
}

std::vector<CheckRecord> verify_der4_euler(const BigradedPresentation& g, const Window& w) {
  const RingSignature sig = g.signature();
  const int d = sig.t_vars;
  BigradedPresentation dual = cm_dual(g);
  DualTable table = graded_dual_table(dual, Window{w.x_lo, w.x_hi, w.t_lo, w.t_hi + d});
  DRComplex dr(g);
  std::vector<CheckRecord> out;
  for (const auto& deg : w.points()) {
    long lhs = 0;
    for (int p = -d; p <= 0; ++p)
      for (int q = 0; q <= sig.x_vars; ++q)
        lhs += sign_of(p + q) * binomial(d, p + d) * table.get(q, {deg.x, deg.t + p + d});
    out.push_back(compare_record("der4.euler", deg, {lhs}, {euler(dr.cohomology(deg), d)}));
  }
  return out;
}

std::optional<int> lowest_t_degree(const BigradedPresentation& g) {
  if (g.num_generators() == 0) return std::nullopt;
  int lo = g.generators().shifts.front().t;
  int hi = lo;
  for (const auto& s : g.generators().shifts) {
    lo = std::min(lo, s.t);
    hi = std::max(hi, s.t);
  }
  const int cutoff = minimal_slice_cutoff(g);
  for (int k = lo; k <= hi; ++k)
    if (trim(t_slice(g, k, cutoff)).num_generators() > 0) return k;
  return std::nullopt;
}

std::vector<CheckRecord> verify_final_prop(const BigradedPresentation& g, int m_bound, int n, const Window& w) {
  std::vector<CheckRecord> out;
  auto low = lowest_t_degree(g);
  if (!low) {
    out.push_back(note_record("final_prop.vacuous", "zero module"));
    return out;
  }
  if (*low <= -m_bound)
    throw PreconditionError("G_k is nonzero at k = " + std::to_string(*low) + " <= -m_bound = " +
                            std::to_string(-m_bound));
  const int d = g.signature().t_vars;
  const int from = m_bound - n;
  DRComplex dr(g);
  for (const auto& deg : w.points()) {
    if (deg.t < from) continue;
    auto h = dr.cohomology(deg);
    out.push_back(compare_record("final_prop.exact", deg, std::vector<long>(h.begin(), h.end()),
                                 std::vector<long>(d + 1, 0), "k >= " + std::to_string(from)));
  }
  if (out.empty())
    out.push_back(note_record("final_prop.range", "no t-degree >= " + std::to_string(from) + " in window"));
  return out;
}

E1Table e1_table(const BigradedPresentation& g, int w, const Window& window) {
  const RingSignature sig = g.signature();
  const int d = sig.t_vars;
  BigradedPresentation dual = cm_dual(g);
  WeightFit fit = selfdual_fit(g, dual, w, window);
  if (fit.mismatches != 0)
    throw PreconditionError("dual module is not G^r(d - w) at w = " + std::to_string(w) + " (" +
                            std::to_string(fit.mismatches) + " mismatching bidegrees)");
  E1Table e1{w, fit.x_offset, {}};
  const int s = fit.x_offset;
  DualTable table =
      graded_dual_table(g, Window{window.x_lo + s, window.x_hi + s, w + window.t_lo - d, w + window.t_hi});
  for (const auto& deg : window.points())
    for (int p = -d; p <= 0; ++p)
      for (int q = 0; q <= sig.x_vars; ++q) {
        long v = binomial(d, p + d) * table.get(q, {deg.x + s, w + deg.t + p});
        if (v != 0) e1.dims[{p, q, deg}] = v;
      }
  return e1;
}

std::vector<CheckRecord> verify_e1(const BigradedPresentation& g, const E1Table& e1, const Window& window) {
  const int d = g.signature().t_vars;
  std::map<BiDegree, long> lhs;
  for (const auto& [key, v] : e1.dims) lhs[std::get<2>(key)] += sign_of(std::get<0>(key) + std::get<1>(key)) * v;
  DRComplex dr(g);
  std::vector<CheckRecord> out;
  for (const auto& deg : window.points())
    out.push_back(compare_record("e1.euler", deg, {lhs[deg]}, {euler(dr.cohomology(deg), d)},
                                 "w = " + std::to_string(e1.weight) + ", x offset " + std::to_string(e1.x_offset)));
  return out;
}

}  // namespace gld
