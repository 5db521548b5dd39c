#include "gld/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

#include "gld/errors.hpp"

namespace gld {

namespace {

BigradedPresentation make_presentation(const FreeModule& gens, const FreeModule& rel_src,
                                       std::vector<std::vector<Polynomial>> cols) {
  FreeModule src{gens.sig, {}};
  std::vector<std::vector<Polynomial>> kept;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    bool zero = std::all_of(cols[j].begin(), cols[j].end(), [](const Polynomial& p) { return p.is_zero(); });
    if (zero) continue;
    src.shifts.push_back(rel_src.shifts[j]);
    kept.push_back(std::move(cols[j]));
  }
  return BigradedPresentation(gens, ModuleMap(std::move(src), gens, std::move(kept)));
}

ModuleMap identity_map(const FreeModule& f) {
  std::vector<std::vector<Polynomial>> cols(f.rank(), std::vector<Polynomial>(f.rank(), Polynomial(f.sig)));
  for (int i = 0; i < f.rank(); ++i) cols[i][i] = Polynomial::constant(f.sig, 1);
  return ModuleMap(f, f, std::move(cols));
}

FreeResolution minimal_resolution(const BigradedPresentation& g) {
  return minimalize(free_resolution(g, g.signature().nvars() + 1));
}

}  // namespace

FreeModule dual_module(const FreeModule& f, BiDegree omega) {
  FreeModule out{f.sig, {}};
  for (const auto& s : f.shifts) out.shifts.push_back(omega - s);
  return out;
}

ModuleMap dual_map(const ModuleMap& phi, BiDegree omega) {
  FreeModule src = dual_module(phi.target(), omega);
  FreeModule tgt = dual_module(phi.source(), omega);
  std::vector<std::vector<Polynomial>> cols(src.rank(), std::vector<Polynomial>(tgt.rank()));
  for (int r = 0; r < phi.rows(); ++r)
    for (int c = 0; c < phi.cols(); ++c) cols[r][c] = phi.entry(r, c);
  return ModuleMap(std::move(src), std::move(tgt), std::move(cols));
}

BigradedPresentation ext_from_resolution(const FreeResolution& r, int q, BiDegree omega) {
  const FreeModule fq = r.module(q);
  const RingSignature sig = r.modules.front().sig;
  if (fq.rank() == 0) return BigradedPresentation::zero(sig);
  const FreeModule fq_star = dual_module(fq, omega);

  const bool has_out = q < r.length();
  ModuleMap z = has_out ? kernel(dual_map(r.maps[q], omega)) : identity_map(fq_star);
  const FreeModule& z0 = z.source();
  if (z0.rank() == 0) return BigradedPresentation::zero(sig);

  if (q == 0) return make_presentation(z0, FreeModule{sig, {}}, {});
  ModuleMap in = dual_map(r.maps[q - 1], omega);
  if (!has_out) return trim(make_presentation(z0, in.source(), in.columns()));

  // Preimage of im(in) under z: first coordinates of the kernel of [z | in].
  FreeModule both{sig, z0.shifts};
  both.shifts.insert(both.shifts.end(), in.source().shifts.begin(), in.source().shifts.end());
  std::vector<std::vector<Polynomial>> cols = z.columns();
  for (const auto& c : in.columns()) cols.push_back(c);
  ModuleMap joint(both, fq_star, std::move(cols));
  ModuleMap k = kernel(joint);
  std::vector<std::vector<Polynomial>> rel;
  for (const auto& c : k.columns()) rel.emplace_back(c.begin(), c.begin() + z0.rank());
  return trim(make_presentation(z0, k.source(), std::move(rel)));
}

int ext_piece_dim(const FreeResolution& r, int q, BiDegree omega, BiDegree deg) {
  const FreeModule fq = r.module(q);
  int dim = static_cast<int>(free_piece_basis(dual_module(fq, omega), deg).size());
  if (dim == 0) return 0;
  if (q < r.length()) dim -= rank(map_piece_matrix(dual_map(r.maps[q], omega), deg));
  if (q >= 1 && q - 1 < r.length()) dim -= rank(map_piece_matrix(dual_map(r.maps[q - 1], omega), deg));
  return dim;
}

ExtResult ext_S(const BigradedPresentation& g, int q, int omega_x) {
  if (q < 0) throw InputError("Ext index must be non-negative");
  FreeResolution r = minimal_resolution(g);
  return {q, ext_from_resolution(r, q, omega_s(g.signature(), omega_x))};
}

std::vector<ExtResult> ext_all(const BigradedPresentation& g, int omega_x) {
  FreeResolution r = minimal_resolution(g);
  std::vector<ExtResult> out;
  for (int q = 0; q <= g.signature().nvars(); ++q)
    out.push_back({q, ext_from_resolution(r, q, omega_s(g.signature(), omega_x))});
  return out;
}

CMResult cm_check(const BigradedPresentation& g) {
  CMResult res;
  const int d = g.signature().t_vars;
  for (const auto& e : ext_all(g)) {
    if (e.q == d || e.module.num_generators() == 0) continue;
    res.witness = std::pair(e.q, e.module.generators().shifts.front());
    return res;
  }
  res.cohen_macaulay = true;
  return res;
}

BigradedPresentation cm_dual(const BigradedPresentation& g, int omega_x) {
  CMResult cm = cm_check(g);
  if (!cm.cohen_macaulay)
    throw PreconditionError("module is not Cohen-Macaulay: Ext^" + std::to_string(cm.witness->first) +
                            " is nonzero, generated in degree " + to_string(cm.witness->second));
  return ext_S(g, g.signature().t_vars, omega_x).module;
}

int DualTable::get(int i, BiDegree deg) const {
  auto it = dims_.find({i, deg});
  return it == dims_.end() ? 0 : it->second;
}

BigradedPresentation ext_A(const BigradedPresentation& m, int i) {
  if (m.signature().t_vars != 0) throw InputError("ext_A expects a module over the base ring");
  if (m.num_generators() == 0) return m;
  return ext_from_resolution(minimal_resolution(m), i, {0, 0});
}

DualTable graded_dual_table(const BigradedPresentation& g, const Window& w) {
  DualTable table;
  const int m = g.signature().x_vars;
  const int cutoff = minimal_slice_cutoff(g);
  for (int k = w.t_lo; k <= w.t_hi; ++k) {
    BigradedPresentation slice = trim(t_slice(g, -k, cutoff));
    if (slice.num_generators() == 0) continue;
    FreeResolution r = minimal_resolution(slice);
    for (int i = 0; i <= m; ++i) {
      BigradedPresentation e = ext_from_resolution(r, i, {0, 0});
      if (e.num_generators() == 0) continue;
      ModuleBasis mb(e);
      for (int a = w.x_lo; a <= w.x_hi; ++a) {
        int dim = mb.dim({a, 0});
        if (dim != 0) table.set(i, {a, k}, dim);
      }
    }
  }
  return table;
}

DualTable graded_dual(const BigradedPresentation& g, int i, const Window& w) {
  DualTable all = graded_dual_table(g, w);
  DualTable out;
  for (const auto& [key, dim] : all.entries())
    if (key.first == i) out.set(i, key.second, dim);
  return out;
}

namespace {

int mismatches(const ModuleBasis& a, const ModuleBasis& b, int x_offset, const Window& w) {
  int n = 0;
  for (const auto& deg : w.points())
    if (a.dim(deg) != b.dim({deg.x - x_offset, deg.t})) ++n;
  return n;
}

/// Window enlarged to contain every generator degree of g.
Window covering_window(const BigradedPresentation& g, const Window& w) {
  Window c = w;
  for (const auto& s : g.generators().shifts) {
    c.x_lo = std::min(c.x_lo, s.x);
    c.x_hi = std::max(c.x_hi, s.x + 2);
    c.t_lo = std::min(c.t_lo, s.t);
    c.t_hi = std::max(c.t_hi, s.t + 2);
  }
  return c;
}

WeightFit best_fit(const ModuleBasis& dual, const BigradedPresentation& g, int w, const Window& cmp) {
  const int d = g.signature().t_vars;
  ModuleBasis target(shift(reverse(g), d - w));
  const int span = cmp.x_hi - cmp.x_lo + 2;
  WeightFit best{w, 0, -1};
  for (int s = 0; s <= span; ++s) {
    for (int sigma : {s, -s}) {
      int mm = mismatches(dual, target, sigma, cmp);
      if (best.mismatches < 0 || mm < best.mismatches) best = {w, sigma, mm};
      if (s == 0) break;
    }
    if (best.mismatches == 0) break;
  }
  return best;
}

}  // namespace

int table_mismatches(const BigradedPresentation& a, const BigradedPresentation& b, int x_offset, const Window& w) {
  return mismatches(ModuleBasis(a), ModuleBasis(b), x_offset, w);
}

WeightFit selfdual_fit(const BigradedPresentation& g, const BigradedPresentation& dual, int w, const Window& window) {
  return best_fit(ModuleBasis(dual), g, w, covering_window(dual, window));
}

SelfDualScan selfdual_scan(const BigradedPresentation& g, int w_lo, int w_hi, const Window& window, int omega_x) {
  if (w_lo > w_hi) throw InputError("empty weight range");
  SelfDualScan scan;
  BigradedPresentation dual = cm_dual(g, omega_x);
  ModuleBasis mb(dual);
  Window cmp = covering_window(dual, window);
  for (int w = w_lo; w <= w_hi; ++w) {
    WeightFit f = best_fit(mb, g, w, cmp);
    scan.fits.push_back(f);
    if (f.mismatches == 0) scan.matching.push_back(w);
  }
  auto parts = split_summands(g);
  if (parts.size() > 1) {
    for (const auto& part : parts) {
      std::vector<int> match;
      WeightFit best{0, 0, -1};
      if (cm_check(part).cohen_macaulay) {
        BigradedPresentation pd = cm_dual(part, omega_x);
        ModuleBasis pmb(pd);
        Window pcmp = covering_window(pd, window);
        for (int w = w_lo; w <= w_hi; ++w) {
          WeightFit f = best_fit(pmb, part, w, pcmp);
          if (f.mismatches == 0) match.push_back(w);
          if (best.mismatches < 0 || f.mismatches < best.mismatches) best = f;
        }
      }
      scan.summand_matching.push_back(std::move(match));
      scan.summand_best.push_back(best);
    }
  }
  return scan;
}

}  // namespace gld
