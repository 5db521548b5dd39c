#pragma once

#include <random>
#include <string>
#include <vector>

#include "gld/module.hpp"
#include "gld/parser.hpp"

namespace gld::testing {

/// Presentation from generator shifts and relation columns given as strings.
inline BigradedPresentation make(int m, int d, std::vector<BiDegree> shifts,
                                 const std::vector<std::vector<std::string>>& relations) {
  RingSignature sig{m, d};
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& c : relations) {
    std::vector<Polynomial> col;
    for (const auto& s : c) col.push_back(parse_polynomial(s, sig));
    cols.push_back(std::move(col));
  }
  return BigradedPresentation::from_columns(sig, std::move(shifts), std::move(cols));
}

/// S/(f) with one generator in degree (0,0).
inline BigradedPresentation cyclic(int m, int d, const std::vector<std::string>& gens) {
  std::vector<std::vector<std::string>> rel;
  for (const auto& g : gens) rel.push_back({g});
  return make(m, d, {{0, 0}}, rel);
}

/// Random bihomogeneous presentation: m, d in {1,2} unless fixed, at most
/// three generators and three relations, entry degrees at most three, small
/// integer coefficients.
inline BigradedPresentation random_presentation(std::mt19937& rng, int m = 0, int d = 0) {
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  if (m == 0) m = uni(1, 2);
  if (d == 0) d = uni(1, 2);
  RingSignature sig{m, d};
  int ngen = uni(1, 3);
  int nrel = uni(1, 3);
  std::vector<BiDegree> shifts;
  for (int i = 0; i < ngen; ++i) shifts.push_back({uni(0, 1), uni(0, 1)});
  std::vector<std::vector<Polynomial>> cols;
  for (int j = 0; j < nrel; ++j) {
    // Column degree chosen so that every entry has degree at most 3.
    BiDegree col{uni(0, 2), uni(0, 2)};
    for (const auto& s : shifts) {
      col.x = std::max(col.x, s.x);
      col.t = std::max(col.t, s.t);
    }
    std::vector<Polynomial> column;
    for (int i = 0; i < ngen; ++i) {
      BiDegree e = col - shifts[i];
      std::vector<Polynomial::Term> terms;
      if (e.x + e.t <= 3 && uni(0, 3) != 0) {
        for (const auto& mono : monomials_of_degree(sig, e)) {
          if (uni(0, 2) == 0) continue;
          int c = uni(-3, 3);
          if (c != 0) terms.emplace_back(mono, Rational(c));
        }
      }
      column.push_back(Polynomial::from_terms(sig, std::move(terms)));
    }
    cols.push_back(std::move(column));
  }
  return BigradedPresentation::from_columns(sig, std::move(shifts), std::move(cols));
}

inline Window small_window(const BigradedPresentation& g, int x_hi = 3, int t_lo = -1, int t_hi = 4) {
  (void)g;
  return Window{0, x_hi, t_lo, t_hi};
}

}  // namespace gld::testing
