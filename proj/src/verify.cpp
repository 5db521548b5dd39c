#include "gld/verify.hpp"

#include <sstream>

#include "gld/cech.hpp"
#include "gld/derham.hpp"
#include "gld/errors.hpp"
#include "gld/groebner.hpp"
#include "gld/homology.hpp"

namespace gld {

using nlohmann::json;

namespace {

int sign_of(int p) { return p % 2 == 0 ? 1 : -1; }

std::string list(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string skipped(const std::string& why) { return "skipped: " + why; }

void add_selfdual(VerificationReport& rep, const BigradedPresentation& g, const Window& w, int w_lo, int w_hi) {
  SelfDualScan scan = selfdual_scan(g, w_lo, w_hi, w);
  rep.add(note_record("selfdual.scan", "matching weights " + list(scan.matching)));
  for (const auto& f : scan.fits)
    rep.add(note_record("selfdual.fit", "w=" + std::to_string(f.weight) + " x_offset=" + std::to_string(f.x_offset) +
                                            " mismatches=" + std::to_string(f.mismatches)));
  for (std::size_t s = 0; s < scan.summand_matching.size(); ++s)
    rep.add(note_record("selfdual.summand", "summand " + std::to_string(s) + " matching weights " +
                                                list(scan.summand_matching[s])));
}

}  // namespace

DualityDims duality_dims(const BigradedPresentation& g, BiDegree deg, int cap, int max_cap) {
  CechCalculator cc(g, cap, max_cap);
  Prop1Values v = cc.prop1(deg);
  DualTable table = graded_dual_table(cm_dual(g), Window{deg.x, deg.x, deg.t, deg.t});
  DualityDims out;
  out.g = v.g;
  out.gamma = v.gamma;
  out.h.assign(v.h.begin(), v.h.end());
  out.r.assign(v.r.begin(), v.r.end());
  for (int i = 0; i <= g.signature().x_vars; ++i) out.D.push_back(table.get(i, deg));
  return out;
}

VerificationReport verify_duality(const BigradedPresentation& g, const Window& w, int cap, int max_cap, int w_lo,
                                  int w_hi) {
  VerificationReport rep;
  rep.command = "verify-duality";
  rep.window = w;
  rep.cap = cap;
  const int m = g.signature().x_vars;
  const int d = g.signature().t_vars;
  CMResult cm = cm_check(g);
  rep.add(note_record("cm_check", cm.cohen_macaulay ? "Cohen-Macaulay"
                                                    : "not Cohen-Macaulay: Ext^" + std::to_string(cm.witness->first) +
                                                          " nonzero, generator degree " +
                                                          to_string(cm.witness->second)));
  CechCalculator cc(g, cap, max_cap);
  if (cm.cohen_macaulay && m == d) {
    DualTable table = graded_dual_table(cm_dual(g), w);
    for (const auto& deg : w.points()) {
      Prop1Values v = cc.prop1(deg);
      long d0 = table.get(0, deg), d1 = table.get(1, deg);
      std::string note = "cap " + std::to_string(v.cap);
      rep.add(compare_record("duality.i", deg, {d0}, {v.h[0]}, note));
      rep.add(compare_record("duality.ii", deg, {d1}, {v.h.size() > 1 ? v.h[1] : 0}, note));
      for (int i = 2; i <= d; ++i) {
        rep.add(compare_record("duality.iii.h" + std::to_string(i), deg, {table.get(i, deg)}, {v.h[i]}, note));
        rep.add(compare_record("duality.iii.r" + std::to_string(i), deg, {v.h[i]}, {v.r[i - 1]}, note));
      }
      rep.add(compare_record("duality.iv", deg, {v.g - v.gamma}, {d0 - d1},
                             "G=" + std::to_string(v.g) + " gamma=" + std::to_string(v.gamma) + " D0=" +
                                 std::to_string(d0) + " D1=" + std::to_string(d1)));
    }
  } else {
    if (cm.cohen_macaulay)
      rep.add(note_record("duality.cm", skipped("base and fiber ranks differ; Euler identity used")));
    std::vector<DualTable> tables;
    for (const auto& e : ext_all(g)) tables.push_back(graded_dual_table(e.module, w));
    for (const auto& deg : w.points()) {
      long lhs = 0;
      for (std::size_t e = 0; e < tables.size(); ++e)
        for (int p = 0; p <= m; ++p) lhs += sign_of(p + static_cast<int>(e)) * tables[e].get(p, deg);
      StableCohomology h = cc.local_cohomology(deg);
      long rhs = 0;
      for (int j = -d; j <= 0; ++j) rhs += sign_of(j) * h.dims[d + j];
      rep.add(compare_record("duality.euler", deg, {lhs}, {rhs}, "cap " + std::to_string(h.cap)));
    }
  }
  if (cm.cohen_macaulay)
    add_selfdual(rep, g, w, w_lo, w_hi);
  else
    rep.add(note_record("selfdual.scan", skipped("not Cohen-Macaulay")));
  return rep;
}

VerificationReport verify_derham(const BigradedPresentation& g, const Window& w, std::optional<int> weight) {
  VerificationReport rep;
  rep.command = "verify-derham";
  rep.window = w;
  const int d = g.signature().t_vars;
  rep.append(verify_der3(g, w).records);
  const bool cm = cm_check(g).cohen_macaulay;
  if (cm)
    rep.append(verify_der4_euler(g, w));
  else
    rep.add(note_record("der4.euler", skipped("not Cohen-Macaulay")));

  std::string reason;
  if (!weight)
    reason = "no weight given";
  else if (!cm)
    reason = "refused: not Cohen-Macaulay";
  else if (WeightFit f = selfdual_fit(g, cm_dual(g), *weight, w); f.mismatches != 0)
    reason = "refused: dual is not G^r(d-w) at w=" + std::to_string(*weight) + " (" + std::to_string(f.mismatches) +
             " mismatching bidegrees)";
  if (!reason.empty()) {
    rep.add(note_record("final_prop", skipped(reason)));
    rep.add(note_record("e1.euler", skipped(reason)));
    return rep;
  }
  auto low = lowest_t_degree(g);
  if (!low) {
    rep.add(note_record("final_prop.vacuous", "zero module"));
  } else {
    const int m_bound = 1 - *low;
    const int n = *weight - d;
    rep.add(note_record("final_prop.bound", "m_bound=" + std::to_string(m_bound) + " n=" + std::to_string(n)));
    rep.append(verify_final_prop(g, m_bound, n, w));
  }
  rep.append(verify_e1(g, e1_table(g, *weight, w), w));
  return rep;
}

namespace {

json dims_table(const BigradedPresentation& g, const Window& w) {
  ModuleBasis mb(g);
  json t = json::array();
  for (const auto& deg : w.points()) t.push_back({{"x", deg.x}, {"t", deg.t}, {"dim", mb.dim(deg)}});
  return t;
}

std::string grid(const Window& w, const std::function<long(BiDegree)>& f) {
  std::ostringstream out;
  out << "t\\x";
  for (int a = w.x_lo; a <= w.x_hi; ++a) out << '\t' << a;
  out << '\n';
  for (int k = w.t_lo; k <= w.t_hi; ++k) {
    out << k;
    for (int a = w.x_lo; a <= w.x_hi; ++a) out << '\t' << f({a, k});
    out << '\n';
  }
  return out.str();
}

std::pair<int, int> weight_range(const ModuleFile& file, const CommandOptions& opts) {
  if (opts.weight_range) return *opts.weight_range;
  if (opts.weight) return {*opts.weight, *opts.weight};
  if (file.weight_hint) return {*file.weight_hint, *file.weight_hint};
  return {-3, 5};
}

CommandResult from_report(VerificationReport rep, const ModuleFile& file) {
  rep.input_digest = file.digest;
  CommandResult res;
  res.doc = to_json(rep);
  res.text = render_text(rep);
  res.exit_code = rep.overall() ? 0 : 1;
  return res;
}

json betti_json(const BettiTable& b) {
  json out = json::array();
  for (const auto& [key, rank] : b)
    out.push_back({{"stage", key.first}, {"x_shift", key.second.x}, {"t_shift", key.second.t}, {"rank", rank}});
  return out;
}

}  // namespace

CommandResult run_command(const std::string& command, const ModuleFile& file, const CommandOptions& opts) {
  const BigradedPresentation& g = file.presentation;
  const Window w = opts.window ? *opts.window : default_window(g);
  const int cap = opts.cap ? *opts.cap : 1;
  if (cap < 1) throw InputError("--cap must be at least 1");
  const int max_cap = std::max(opts.max_cap, cap);
  const int nvars = g.signature().nvars();
  const int d = g.signature().t_vars;

  CommandResult res;
  json& doc = res.doc;
  doc["command"] = command;
  doc["input_digest"] = file.digest;

  if (command == "hilbert") {
    doc["window"] = to_json(w);
    doc["table"] = dims_table(g, w);
    ModuleBasis mb(g);
    res.text = grid(w, [&](BiDegree deg) { return mb.dim(deg); });
  } else if (command == "resolve") {
    FreeResolution r = free_resolution(g, nvars + 1);
    if (!opts.schreyer) r = minimalize(r);
    doc["minimal"] = !opts.schreyer;
    doc["length"] = r.length();
    doc["betti"] = betti_json(betti_table(r));
    std::ostringstream out;
    for (const auto& [key, rank] : betti_table(r))
      out << "F" << key.first << "  " << to_string(key.second) << "  rank " << rank << '\n';
    res.text = out.str();
  } else if (command == "ext") {
    FreeResolution r = free_resolution(g, nvars + 1);
    if (!opts.schreyer) r = minimalize(r);
    doc["window"] = to_json(w);
    doc["ext"] = json::array();
    std::ostringstream out;
    for (int q = 0; q <= nvars; ++q) {
      if (opts.index && *opts.index != q) continue;
      BigradedPresentation e = ext_from_resolution(r, q, omega_s(g.signature()));
      doc["ext"].push_back({{"q", q}, {"module", json::parse(to_module_json(e))}, {"table", dims_table(e, w)}});
      ModuleBasis mb(e);
      out << "Ext^" << q << ": " << e.describe() << '\n' << grid(w, [&](BiDegree deg) { return mb.dim(deg); });
    }
    if (opts.index && (*opts.index < 0 || *opts.index > nvars))
      throw InputError("--index must lie in [0, " + std::to_string(nvars) + "] for ext");
    res.text = out.str();
  } else if (command == "cm-check") {
    CMResult cm = cm_check(g);
    doc["cohen_macaulay"] = cm.cohen_macaulay;
    doc["witness"] = cm.witness ? json{{"q", cm.witness->first}, {"degree", to_json(cm.witness->second)}} : json(nullptr);
    res.text = cm.cohen_macaulay ? "Cohen-Macaulay\n"
                                 : "not Cohen-Macaulay: Ext^" + std::to_string(cm.witness->first) +
                                       " nonzero, generator degree " + to_string(cm.witness->second) + "\n";
  } else if (command == "localcoh") {
    if (opts.index && (*opts.index < 0 || *opts.index > d))
      throw InputError("--index must lie in [0, " + std::to_string(d) + "] for localcoh");
    CechCalculator cc(g, cap, max_cap);
    VerificationReport rep;
    rep.command = command;
    rep.window = w;
    rep.cap = cap;
    rep.append(verify_prop1(cc, w));
    json table = json::array();
    std::map<std::pair<int, BiDegree>, long> dims;
    for (const auto& deg : w.points()) {
      StableCohomology h = cc.local_cohomology(deg);
      for (int i = 0; i <= d; ++i) {
        if (opts.index && *opts.index != i) continue;
        dims[{i, deg}] = h.dims[i];
        table.push_back({{"i", i}, {"x", deg.x}, {"t", deg.t}, {"dim", h.dims[i]}, {"cap", h.cap}});
      }
    }
    res = from_report(rep, file);
    res.doc["table"] = std::move(table);
    std::string text;
    for (int i = 0; i <= d; ++i) {
      if (opts.index && *opts.index != i) continue;
      text += "H^" + std::to_string(i) + "\n" + grid(w, [&](BiDegree deg) { return dims.at({i, deg}); });
    }
    res.text = text + res.text;
    return res;
  } else if (command == "verify-duality") {
    auto [lo, hi] = weight_range(file, opts);
    return from_report(verify_duality(g, w, cap, max_cap, lo, hi), file);
  } else if (command == "verify-derham") {
    std::optional<int> weight = opts.weight ? opts.weight : file.weight_hint;
    return from_report(verify_derham(g, w, weight), file);
  } else if (command == "selfdual-scan") {
    auto [lo, hi] = weight_range(file, opts);
    SelfDualScan scan = selfdual_scan(g, lo, hi, w);
    doc["window"] = to_json(w);
    doc["fits"] = json::array();
    for (const auto& f : scan.fits)
      doc["fits"].push_back({{"weight", f.weight}, {"x_offset", f.x_offset}, {"mismatches", f.mismatches}});
    doc["matching"] = scan.matching;
    doc["summand_matching"] = scan.summand_matching;
    std::ostringstream out;
    for (const auto& f : scan.fits)
      out << "w=" << f.weight << "  x_offset " << f.x_offset << "  mismatches " << f.mismatches << '\n';
    out << "matching weights " << list(scan.matching) << '\n';
    for (std::size_t s = 0; s < scan.summand_matching.size(); ++s)
      out << "summand " << s << " matching weights " << list(scan.summand_matching[s]) << '\n';
    res.text = out.str();
  } else {
    throw InputError("unknown command " + command);
  }
  return res;
}

}  // namespace gld
