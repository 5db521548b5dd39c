#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "gld/module.hpp"
#include "gld/module_file.hpp"
#include "gld/report.hpp"

namespace gld {

/// Per-bidegree dimensions behind the CM duality checks.
struct DualityDims {
  long g = 0, gamma = 0;
  std::vector<long> h;  // H^0..H^d
  std::vector<long> r;  // R^0..R^{d-1}
  std::vector<long> D;  // D^0(Ĝ)..D^m(Ĝ)
};

/// CM path: (i) D(Ĝ) = H^0, (ii) D^1(Ĝ) = H^1, (iii) D^i(Ĝ) = H^i = R^{i-1}Γ_*
/// for 2 <= i <= d, (iv) dim G - dim Γ_* = dim D(Ĝ) - dim D^1(Ĝ). Other
/// modules (or m != d) get the Euler identity
/// Σ_{p,e} (-1)^{p+e} dim D^p(Ext^e_S(G, ω_S)) = Σ_j (-1)^j dim H^{d+j}_X(G).
/// Finally a self-duality scan over [w_lo, w_hi] is reported.
VerificationReport verify_duality(const BigradedPresentation& g, const Window& w, int cap, int max_cap, int w_lo,
                                  int w_hi);
/// The dimension tuple used by the CM checks at one bidegree.
DualityDims duality_dims(const BigradedPresentation& g, BiDegree deg, int cap, int max_cap = 256);

/// der3 always; der4 if CM; final_prop and E1 if a weight is given, G is CM
/// and self-dual at that weight. Skipped checks appear as passing records
/// whose note starts with "skipped:".
VerificationReport verify_derham(const BigradedPresentation& g, const Window& w, std::optional<int> weight);

struct CommandOptions {
  std::optional<Window> window;
  std::optional<int> cap;
  int max_cap = 256;
  std::optional<int> weight;
  std::optional<std::pair<int, int>> weight_range;
  std::optional<int> index;
  bool schreyer = false;
};

struct CommandResult {
  nlohmann::json doc;
  std::string text;
  int exit_code = 0;
};

/// Runs one CLI command (hilbert, resolve, ext, cm-check, localcoh,
/// verify-duality, verify-derham, selfdual-scan). Errors propagate as
/// InputError, CutoffError or PreconditionError.
CommandResult run_command(const std::string& command, const ModuleFile& file, const CommandOptions& opts);

}  // namespace gld
