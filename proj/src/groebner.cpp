#include "gld/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "gld/errors.hpp"

namespace gld {

// ---------------------------------------------------------------------------
// Orders and vectors

ModuleOrder ModuleOrder::pot(RingSignature sig, int rank, const std::vector<int>& priority) {
  ModuleOrder o;
  o.sig_ = sig;
  o.rank_.assign(rank, 0);
  if (priority.empty()) {
    std::iota(o.rank_.begin(), o.rank_.end(), 0);
  } else {
    if (static_cast<int>(priority.size()) != rank) throw InputError("priority list has the wrong length");
    std::vector<bool> seen(rank, false);
    for (int i = 0; i < rank; ++i) {
      int p = priority[i];
      if (p < 0 || p >= rank || seen[p]) throw InputError("priority list is not a permutation");
      seen[p] = true;
      o.rank_[p] = i;
    }
  }
  return o;
}

ModuleOrder ModuleOrder::induced(std::vector<Frame> frames) const {
  ModuleOrder o;
  o.sig_ = sig_;
  o.rank_ = rank_;
  o.frames_ = std::move(frames);
  return o;
}

int ModuleOrder::compare(int pa, const Monomial& a, int pb, const Monomial& b) const {
  if (frames_.empty()) {
    if (pa != pb) return rank_[pa] < rank_[pb] ? 1 : -1;
    return compare_block_order(a, b, sig_);
  }
  if (pa == pb) return compare_block_order(a, b, sig_);
  const Frame& fa = frames_[pa];
  const Frame& fb = frames_[pb];
  if (fa.base != fb.base) return rank_[fa.base] < rank_[fb.base] ? 1 : -1;
  int c = compare_block_order(fa.lead * a, fb.lead * b, sig_);
  if (c != 0) return c;
  for (std::size_t l = 0; l < fa.chain.size() && l < fb.chain.size(); ++l)
    if (fa.chain[l] != fb.chain[l]) return fa.chain[l] < fb.chain[l] ? 1 : -1;
  return 0;
}

void sort_modvec(ModVec& v, const ModuleOrder& order) {
  std::sort(v.begin(), v.end(), [&](const ModTerm& a, const ModTerm& b) { return order.compare(a, b) > 0; });
  ModVec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().pos == t.pos && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  v = std::move(out);
}

ModVec to_modvec(const std::vector<Polynomial>& column, const ModuleOrder& order) {
  ModVec v;
  for (int i = 0; i < static_cast<int>(column.size()); ++i)
    for (const auto& [m, c] : column[i].terms()) v.push_back({i, m, c});
  sort_modvec(v, order);
  return v;
}

std::vector<Polynomial> to_column(const ModVec& v, int rank, RingSignature sig) {
  std::vector<std::vector<Polynomial::Term>> terms(rank);
  for (const auto& t : v) terms[t.pos].emplace_back(t.mono, t.coef);
  std::vector<Polynomial> col;
  col.reserve(rank);
  for (auto& ts : terms) col.push_back(Polynomial::from_terms(sig, std::move(ts)));
  return col;
}

ModVec sub_multiple(const ModVec& v, const Rational& c, const Monomial& mono, const ModVec& w,
                    const ModuleOrder& order) {
  ModVec r;
  r.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size()) {
      r.push_back(v[i++]);
      continue;
    }
    Monomial wm = w[j].mono * mono;
    int cmp = i == v.size() ? -1 : order.compare(v[i].pos, v[i].mono, w[j].pos, wm);
    if (cmp > 0) {
      r.push_back(v[i++]);
    } else if (cmp < 0) {
      r.push_back({w[j].pos, std::move(wm), -c * w[j].coef});
      ++j;
    } else {
      Rational s = v[i].coef - c * w[j].coef;
      if (s != 0) r.push_back({v[i].pos, v[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

namespace {

ModVec times_monomial(const ModVec& v, const Monomial& m) {
  ModVec r = v;
  for (auto& t : r) t.mono = t.mono * m;
  return r;
}

void make_monic(ModVec& v) {
  if (v.empty() || v.front().coef == 1) return;
  Rational inv = 1 / v.front().coef;
  for (auto& t : v) t.coef *= inv;
}

BiDegree term_degree(const FreeModule& f, int pos, const Monomial& m) { return m.degree(f.sig) + f.shifts[pos]; }

bool degree_less(BiDegree a, BiDegree b) {
  int ta = a.x + a.t, tb = b.x + b.t;
  if (ta != tb) return ta < tb;
  if (a.t != b.t) return a.t < b.t;
  return a.x < b.x;
}

}  // namespace

// ---------------------------------------------------------------------------
// GroebnerBasis

GroebnerBasis::GroebnerBasis(FreeModule ambient, ModuleOrder order, std::vector<ModVec> elements)
    : ambient_(std::move(ambient)), order_(std::move(order)), elements_(std::move(elements)) {
  by_pos_.assign(ambient_.rank(), {});
  for (int i = 0; i < size(); ++i) {
    if (elements_[i].empty()) throw std::logic_error("zero element in a Gröbner basis");
    by_pos_[elements_[i].front().pos].push_back(i);
  }
}

BiDegree GroebnerBasis::degree(int i) const {
  const ModTerm& t = elements_[i].front();
  return term_degree(ambient_, t.pos, t.mono);
}

int GroebnerBasis::find_divisor(int pos, const Monomial& mono) const {
  for (int l : by_pos_[pos])
    if (elements_[l].front().mono.divides(mono)) return l;
  return -1;
}

ModVec GroebnerBasis::reduce(ModVec v) const {
  std::vector<ModTerm> unused;
  return divide(std::move(v), unused);
}

ModVec GroebnerBasis::divide(ModVec v, std::vector<ModTerm>& quotients) const {
  std::size_t k = 0;
  while (k < v.size()) {
    int l = find_divisor(v[k].pos, v[k].mono);
    if (l < 0) {
      ++k;
      continue;
    }
    const ModVec& g = elements_[l];
    Monomial q = g.front().mono.quotient_of(v[k].mono);
    Rational c = v[k].coef / g.front().coef;
    quotients.push_back({l, q, c});
    v = sub_multiple(v, c, q, g, order_);
  }
  return v;
}

ModuleMap GroebnerBasis::as_map() const {
  FreeModule src{ambient_.sig, {}};
  std::vector<std::vector<Polynomial>> cols;
  for (int i = 0; i < size(); ++i) {
    src.shifts.push_back(degree(i));
    cols.push_back(to_column(elements_[i], ambient_.rank(), ambient_.sig));
  }
  return ModuleMap(std::move(src), ambient_, std::move(cols));
}

// ---------------------------------------------------------------------------
// Buchberger

namespace {

struct Task {
  int i = -1;  // input index when j < 0, else pair (i, j)
  int j = -1;
  BiDegree deg;
  int pos = 0;
  Monomial lcm;
};

}  // namespace

GroebnerBasis buchberger(const FreeModule& ambient, const std::vector<std::vector<Polynomial>>& columns,
                         const ModuleOrder& order) {
  std::vector<ModVec> inputs;
  for (const auto& c : columns) {
    if (static_cast<int>(c.size()) != ambient.rank()) throw InputError("column length does not match module rank");
    ModVec v = to_modvec(c, order);
    if (!v.empty()) inputs.push_back(std::move(v));
  }

  std::vector<ModVec> g;
  std::vector<std::vector<int>> by_pos(ambient.rank());
  std::vector<Task> tasks;
  std::set<std::pair<int, int>> pending;
  for (int i = 0; i < static_cast<int>(inputs.size()); ++i) {
    const ModTerm& lt = inputs[i].front();
    tasks.push_back({i, -1, term_degree(ambient, lt.pos, lt.mono), lt.pos, lt.mono});
  }

  auto task_less = [&](const Task& a, const Task& b) {
    if (a.deg != b.deg) return degree_less(a.deg, b.deg);
    bool ai = a.j < 0, bi = b.j < 0;
    if (ai != bi) return ai;
    int c = order.compare(a.pos, a.lcm, b.pos, b.lcm);
    if (c != 0) return c < 0;
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  };

  auto add_element = [&](ModVec v) {
    make_monic(v);
    int n = static_cast<int>(g.size());
    const ModTerm& lt = v.front();
    for (int i = 0; i < n; ++i) {
      const ModTerm& li = g[i].front();
      if (li.pos != lt.pos) continue;
      Monomial l = li.mono.lcm(lt.mono);
      tasks.push_back({i, n, term_degree(ambient, lt.pos, l), lt.pos, l});
      pending.emplace(i, n);
    }
    by_pos[lt.pos].push_back(n);
    g.push_back(std::move(v));
  };

  auto reduce_by = [&](ModVec v) {
    std::size_t k = 0;
    while (k < v.size()) {
      int l = -1;
      for (int c : by_pos[v[k].pos]) {
        if (g[c].front().mono.divides(v[k].mono)) {
          l = c;
          break;
        }
      }
      if (l < 0) {
        ++k;
        continue;
      }
      const ModVec& gl = g[l];
      v = sub_multiple(v, v[k].coef / gl.front().coef, gl.front().mono.quotient_of(v[k].mono), gl, order);
    }
    return v;
  };

  while (!tasks.empty()) {
    auto it = std::min_element(tasks.begin(), tasks.end(), task_less);
    Task t = *it;
    tasks.erase(it);
    ModVec h;
    if (t.j < 0) {
      h = inputs[t.i];
    } else {
      pending.erase({t.i, t.j});
      bool skip = false;
      for (int k = 0; k < static_cast<int>(g.size()) && !skip; ++k) {
        if (k == t.i || k == t.j) continue;
        const ModTerm& lk = g[k].front();
        if (lk.pos != t.pos || !lk.mono.divides(t.lcm)) continue;
        auto key = [](int a, int b) { return std::pair(std::min(a, b), std::max(a, b)); };
        if (!pending.count(key(t.i, k)) && !pending.count(key(t.j, k))) skip = true;
      }
      if (skip) continue;
      const ModVec& gi = g[t.i];
      const ModVec& gj = g[t.j];
      h = times_monomial(gi, gi.front().mono.quotient_of(t.lcm));
      h = sub_multiple(h, gi.front().coef / gj.front().coef, gj.front().mono.quotient_of(t.lcm), gj, order);
    }
    h = reduce_by(std::move(h));
    if (!h.empty()) add_element(std::move(h));
  }

  // Interreduce.
  std::vector<ModVec> minimal;
  for (int i = 0; i < static_cast<int>(g.size()); ++i) {
    const ModTerm& li = g[i].front();
    bool redundant = false;
    for (int j = 0; j < static_cast<int>(g.size()) && !redundant; ++j) {
      if (j == i) continue;
      const ModTerm& lj = g[j].front();
      if (lj.pos != li.pos || !lj.mono.divides(li.mono)) continue;
      if (lj.mono != li.mono || j < i) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  GroebnerBasis leads(ambient, order, minimal);
  std::vector<ModVec> reduced;
  for (const ModVec& v : minimal) {
    ModVec tail(v.begin() + 1, v.end());
    ModVec r{v.front()};
    for (auto& t : leads.reduce(std::move(tail))) r.push_back(std::move(t));
    make_monic(r);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const ModVec& a, const ModVec& b) { return order.compare(a.front(), b.front()) > 0; });
  return GroebnerBasis(ambient, order, std::move(reduced));
}

// ---------------------------------------------------------------------------
// Syzygies

namespace {

/// Schreyer syzygies of gb as a Gröbner basis for the induced order on the
/// module whose basis is gb's elements.
GroebnerBasis schreyer_step(const GroebnerBasis& gb) {
  const ModuleOrder& ord = gb.order();
  const auto& els = gb.elements();
  const int n = gb.size();
  std::vector<ModuleOrder::Frame> frames(n);
  FreeModule next{gb.ambient().sig, {}};
  for (int l = 0; l < n; ++l) {
    const ModTerm& lt = els[l].front();
    if (ord.is_induced()) {
      const auto& pf = ord.frame(lt.pos);
      frames[l].base = pf.base;
      frames[l].lead = pf.lead * lt.mono;
      frames[l].chain = pf.chain;
    } else {
      frames[l].base = lt.pos;
      frames[l].lead = lt.mono;
    }
    frames[l].chain.push_back(l);
    next.shifts.push_back(gb.degree(l));
  }
  ModuleOrder nord = ord.induced(std::move(frames));

  std::vector<ModVec> syz;
  for (int i = 0; i < n; ++i) {
    const ModTerm& li = els[i].front();
    std::vector<std::pair<int, Monomial>> cand;
    for (int j = i + 1; j < n; ++j) {
      const ModTerm& lj = els[j].front();
      if (lj.pos != li.pos) continue;
      cand.emplace_back(j, li.mono.quotient_of(li.mono.lcm(lj.mono)));
    }
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool keep = true;
      for (std::size_t b = 0; b < cand.size() && keep; ++b) {
        if (a == b || !cand[b].second.divides(cand[a].second)) continue;
        if (cand[b].second != cand[a].second || b < a) keep = false;
      }
      if (!keep) continue;
      const int j = cand[a].first;
      const ModVec& gi = els[i];
      const ModVec& gj = els[j];
      Monomial l = li.mono.lcm(gj.front().mono);
      Monomial mi = cand[a].second;
      Monomial mj = gj.front().mono.quotient_of(l);
      Rational ci = 1 / gi.front().coef;
      Rational cj = 1 / gj.front().coef;
      ModVec s = times_monomial(gi, mi);
      for (auto& t : s) t.coef *= ci;
      s = sub_multiple(s, cj, mj, gj, ord);
      std::vector<ModTerm> quot;
      ModVec rem = gb.divide(std::move(s), quot);
      if (!rem.empty()) throw std::logic_error("S-pair of a Gröbner basis did not reduce to zero");
      ModVec sigma{{i, mi, ci}, {j, mj, -cj}};
      for (auto& q : quot) sigma.push_back({q.pos, q.mono, -q.coef});
      sort_modvec(sigma, nord);
      syz.push_back(std::move(sigma));
    }
  }
  std::sort(syz.begin(), syz.end(),
            [&](const ModVec& a, const ModVec& b) { return nord.compare(a.front(), b.front()) > 0; });
  return GroebnerBasis(next, nord, std::move(syz));
}

/// Reorders elements by leading position, then by decreasing exponent of the
/// given variable.
GroebnerBasis sorted_by_variable(const GroebnerBasis& gb, int var) {
  std::vector<ModVec> els = gb.elements();
  std::stable_sort(els.begin(), els.end(), [&](const ModVec& a, const ModVec& b) {
    if (a.front().pos != b.front().pos) return a.front().pos < b.front().pos;
    if (var < 0) return false;
    return a.front().mono[var] > b.front().mono[var];
  });
  return GroebnerBasis(gb.ambient(), gb.order(), std::move(els));
}

}  // namespace

ModuleMap syzygies(const GroebnerBasis& gb) {
  GroebnerBasis s = schreyer_step(gb);
  FreeModule target = s.ambient();
  FreeModule src{target.sig, {}};
  std::vector<std::vector<Polynomial>> cols;
  for (int i = 0; i < s.size(); ++i) {
    src.shifts.push_back(s.degree(i));
    cols.push_back(to_column(s.elements()[i], target.rank(), target.sig));
  }
  return ModuleMap(std::move(src), std::move(target), std::move(cols));
}

ModuleMap kernel(const ModuleMap& m) {
  const RingSignature sig = m.source().sig;
  const int r = m.rows();
  const int s = m.cols();
  FreeModule ext{sig, m.target().shifts};
  ext.shifts.insert(ext.shifts.end(), m.source().shifts.begin(), m.source().shifts.end());
  std::vector<std::vector<Polynomial>> cols;
  for (int j = 0; j < s; ++j) {
    std::vector<Polynomial> c = m.column(j);
    c.resize(r + s, Polynomial(sig));
    c[r + j] = Polynomial::constant(sig, 1);
    cols.push_back(std::move(c));
  }
  GroebnerBasis gb = buchberger(ext, cols, ModuleOrder::pot(sig, r + s));
  FreeModule src{sig, {}};
  std::vector<std::vector<Polynomial>> out;
  for (int i = 0; i < gb.size(); ++i) {
    const ModVec& v = gb.elements()[i];
    if (v.front().pos < r) continue;
    ModVec shifted = v;
    for (auto& t : shifted) t.pos -= r;
    src.shifts.push_back(gb.degree(i));
    out.push_back(to_column(shifted, s, sig));
  }
  return ModuleMap(std::move(src), m.source(), std::move(out));
}

// ---------------------------------------------------------------------------
// Resolutions

FreeModule FreeResolution::module(int i) const {
  if (i >= 0 && i < static_cast<int>(modules.size())) return modules[i];
  RingSignature sig = modules.empty() ? RingSignature{} : modules.front().sig;
  return FreeModule{sig, {}};
}

FreeResolution free_resolution(const BigradedPresentation& g, int length, const std::vector<int>& priority) {
  if (length < 1) throw InputError("resolution length must be at least 1");
  FreeResolution r;
  const FreeModule& f0 = g.generators();
  r.modules.push_back(f0);
  GroebnerBasis cur = buchberger(f0, g.relations().columns(), ModuleOrder::pot(f0.sig, f0.rank(), priority));
  const int nvars = f0.sig.nvars();
  for (int level = 1; level <= length && cur.size() > 0; ++level) {
    cur = sorted_by_variable(cur, level - 1 < nvars ? level - 1 : -1);
    ModuleMap m = cur.as_map();
    r.modules.push_back(m.source());
    r.maps.push_back(std::move(m));
    if (level == length) break;
    cur = schreyer_step(cur);
  }
  return r;
}

namespace {

using Columns = std::vector<std::vector<Polynomial>>;

void erase_row(Columns& cols, int row) {
  for (auto& c : cols) c.erase(c.begin() + row);
}

/// Cancels the unit entry (row i, column j) inside one matrix.
void cancel_unit(Columns& m, int i, int j) {
  const Polynomial& unit = m[j][i];
  Rational inv = 1 / unit.constant_term();
  const std::vector<Polynomial> pivot = m[j];
  for (int c = 0; c < static_cast<int>(m.size()); ++c) {
    if (c == j || m[c][i].is_zero()) continue;
    Polynomial f = m[c][i].scaled(inv);
    for (int r = 0; r < static_cast<int>(m[c].size()); ++r) {
      if (r == i || pivot[r].is_zero()) continue;
      m[c][r] = m[c][r] - pivot[r] * f;
    }
  }
  m.erase(m.begin() + j);
  erase_row(m, i);
}

std::optional<std::pair<int, int>> find_unit(const Columns& m) {
  for (int j = 0; j < static_cast<int>(m.size()); ++j)
    for (int i = 0; i < static_cast<int>(m[j].size()); ++i)
      if (m[j][i].is_unit()) return std::pair(i, j);
  return std::nullopt;
}

}  // namespace

FreeResolution minimalize(const FreeResolution& r) {
  std::vector<FreeModule> mods = r.modules;
  std::vector<Columns> mats;
  for (const auto& m : r.maps) mats.push_back(m.columns());
  for (bool changed = true; changed;) {
    changed = false;
    for (int k = 0; k < static_cast<int>(mats.size()); ++k) {
      auto u = find_unit(mats[k]);
      if (!u) continue;
      auto [i, j] = *u;
      cancel_unit(mats[k], i, j);
      if (k > 0) mats[k - 1].erase(mats[k - 1].begin() + i);
      if (k + 1 < static_cast<int>(mats.size())) erase_row(mats[k + 1], j);
      mods[k].shifts.erase(mods[k].shifts.begin() + i);
      mods[k + 1].shifts.erase(mods[k + 1].shifts.begin() + j);
      changed = true;
      break;
    }
  }
  FreeResolution out;
  out.modules.push_back(mods[0]);
  for (std::size_t k = 0; k < mats.size(); ++k) {
    if (mods[k + 1].rank() == 0) break;
    out.modules.push_back(mods[k + 1]);
    out.maps.emplace_back(mods[k + 1], mods[k], mats[k]);
  }
  return out;
}

BigradedPresentation trim(const BigradedPresentation& g) {
  FreeModule f0 = g.generators();
  FreeModule f1 = g.relations().source();
  Columns m = g.relations().columns();
  while (auto u = find_unit(m)) {
    auto [i, j] = *u;
    cancel_unit(m, i, j);
    f0.shifts.erase(f0.shifts.begin() + i);
    f1.shifts.erase(f1.shifts.begin() + j);
  }
  FreeModule kept{f0.sig, {}};
  Columns cols;
  for (int j = 0; j < static_cast<int>(m.size()); ++j) {
    bool zero = std::all_of(m[j].begin(), m[j].end(), [](const Polynomial& p) { return p.is_zero(); });
    if (zero) continue;
    kept.shifts.push_back(f1.shifts[j]);
    cols.push_back(std::move(m[j]));
  }
  return BigradedPresentation(f0, ModuleMap(kept, f0, std::move(cols)));
}

BettiTable betti_table(const FreeResolution& r) {
  BettiTable t;
  for (int i = 0; i < static_cast<int>(r.modules.size()); ++i)
    for (const auto& s : r.modules[i].shifts) ++t[{i, s}];
  return t;
}

bool composites_vanish(const FreeResolution& r) {
  for (std::size_t k = 0; k + 1 < r.maps.size(); ++k)
    if (!r.maps[k + 1].then(r.maps[k]).is_zero()) return false;
  return true;
}

std::optional<std::pair<int, BiDegree>> exactness_failure(const BigradedPresentation& g, const FreeResolution& r,
                                                          const Window& w) {
  for (const BiDegree& deg : w.points()) {
    std::vector<int> ranks;
    for (const auto& m : r.maps) ranks.push_back(rank(map_piece_matrix(m, deg)));
    ranks.push_back(0);
    int f0 = static_cast<int>(free_piece_basis(r.modules[0], deg).size());
    if (piece(g, deg).dim() != f0 - ranks[0]) return std::pair(0, deg);
    for (int i = 1; i < static_cast<int>(r.modules.size()); ++i) {
      int fi = static_cast<int>(free_piece_basis(r.modules[i], deg).size());
      if (ranks[i] + ranks[i - 1] != fi) return std::pair(i, deg);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// ModuleBasis

ModuleBasis::ModuleBasis(const BigradedPresentation& g)
    : g_(g),
      gb_(buchberger(g.generators(), g.relations().columns(),
                     ModuleOrder::pot(g.signature(), g.num_generators()))) {}

const ModuleBasis::Piece& ModuleBasis::piece_locked(BiDegree deg) const {
  auto it = pieces_.find(deg);
  if (it != pieces_.end()) return *it->second;
  auto p = std::make_unique<Piece>();
  const FreeModule& f = g_.generators();
  for (int i = 0; i < f.rank(); ++i) {
    for (const auto& m : monomials_of_degree(f.sig, deg - f.shifts[i])) {
      if (gb_.find_divisor(i, m) >= 0) continue;
      p->index.emplace(std::pair(i, m), static_cast<int>(p->basis.size()));
      p->basis.emplace_back(i, m);
    }
  }
  return *pieces_.emplace(deg, std::move(p)).first->second;
}

const ModVec& ModuleBasis::nf_locked(int gen, const Monomial& mono) const {
  auto key = std::pair(gen, mono);
  auto it = nf_.find(key);
  if (it != nf_.end()) return *it->second;
  auto out = std::make_unique<ModVec>();
  int l = gb_.find_divisor(gen, mono);
  if (l < 0) {
    out->push_back({gen, mono, Rational(1)});
  } else {
    const ModVec& g = gb_.elements()[l];
    Monomial q = g.front().mono.quotient_of(mono);
    ModVec acc;
    for (std::size_t k = 1; k < g.size(); ++k) {
      const ModVec& sub = nf_locked(g[k].pos, g[k].mono * q);
      for (const auto& t : sub) acc.push_back({t.pos, t.mono, -g[k].coef * t.coef});
    }
    sort_modvec(acc, gb_.order());
    *out = std::move(acc);
  }
  return *nf_.emplace(std::move(key), std::move(out)).first->second;
}

int ModuleBasis::dim(BiDegree deg) const {
  std::lock_guard lock(mu_);
  return static_cast<int>(piece_locked(deg).basis.size());
}

std::vector<std::pair<int, Monomial>> ModuleBasis::basis(BiDegree deg) const {
  std::lock_guard lock(mu_);
  return piece_locked(deg).basis;
}

SparseVec ModuleBasis::coords(int gen, const Monomial& mono) const {
  std::lock_guard lock(mu_);
  const ModVec& nf = nf_locked(gen, mono);
  SparseVec out;
  if (nf.empty()) return out;
  const Piece& p = piece_locked(term_degree(g_.generators(), gen, mono));
  for (const auto& t : nf) out.emplace_back(p.index.at(std::pair(t.pos, t.mono)), t.coef);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

SparseMatrix ModuleBasis::multiplication(BiDegree deg, const Monomial& mono) const {
  std::lock_guard lock(mu_);
  const BiDegree target = deg + mono.degree(g_.signature());
  std::vector<std::pair<int, Monomial>> src = piece_locked(deg).basis;
  const Piece& tp = piece_locked(target);
  SparseMatrix m{static_cast<int>(tp.basis.size()), {}};
  for (const auto& [gen, mu] : src) {
    const ModVec& nf = nf_locked(gen, mu * mono);
    SparseVec col;
    for (const auto& t : nf) col.emplace_back(tp.index.at(std::pair(t.pos, t.mono)), t.coef);
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    m.cols.push_back(std::move(col));
  }
  return m;
}

}  // namespace gld
