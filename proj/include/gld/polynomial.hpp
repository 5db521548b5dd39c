#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace gld {

/// Exact rational coefficients. mpq_class keeps numerator/denominator reduced
/// with a positive denominator once canonicalized.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& q);

/// Number of base variables x1..xm and fiber variables t1..td.
struct RingSignature {
  int x_vars = 0;
  int t_vars = 0;

  int nvars() const { return x_vars + t_vars; }
  auto operator<=>(const RingSignature&) const = default;
};

std::string to_string(const RingSignature& sig);

/// (x-degree, t-degree). The t-degree is the primary grading; the x-degree
/// keeps every bigraded piece finite-dimensional.
struct BiDegree {
  int x = 0;
  int t = 0;

  auto operator<=>(const BiDegree&) const = default;
  BiDegree operator+(const BiDegree& o) const { return {x + o.x, t + o.t}; }
  BiDegree operator-(const BiDegree& o) const { return {x - o.x, t - o.t}; }
  BiDegree operator-() const { return {-x, -t}; }
};

std::string to_string(const BiDegree& d);

/// Exponent vector, x-variables first then t-variables. Negative t-exponents
/// are only produced inside localizations.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {}
  static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial variable(int nvars, int index, int power = 1);

  int size() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[i]; }
  int& operator[](int i) { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }

  BiDegree degree(const RingSignature& sig) const;
  int total_degree() const;
  bool is_one() const;

  Monomial operator*(const Monomial& o) const;
  /// True if this divides o (componentwise <=).
  bool divides(const Monomial& o) const;
  /// o / this; caller guarantees divisibility.
  Monomial quotient_of(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;

  bool operator==(const Monomial& o) const = default;
  /// Plain lexicographic comparison of exponent vectors; used only for
  /// container ordering, never as a term order.
  bool operator<(const Monomial& o) const { return e_ < o.e_; }

  std::size_t hash() const;

 private:
  std::vector<int> e_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Block order: t-variables in graded reverse lex dominate, ties broken by
/// graded reverse lex on the x-variables. Returns <0, 0, >0.
int compare_block_order(const Monomial& a, const Monomial& b, const RingSignature& sig);

std::string format_monomial(const Monomial& m, const RingSignature& sig);

/// All monomials of the given bidegree (non-negative exponents), in
/// decreasing block order. Empty when either component is negative.
const std::vector<Monomial>& monomials_of_degree(const RingSignature& sig, BiDegree deg);

/// Monomials of t-degree k in the t-variables only (x-exponents zero), in
/// decreasing block order.
const std::vector<Monomial>& t_monomials(const RingSignature& sig, int k);

/// Sparse polynomial; terms are kept in decreasing block order with no zero
/// coefficients.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(RingSignature sig) : sig_(sig) {}
  static Polynomial constant(RingSignature sig, const Rational& c);
  static Polynomial monomial(RingSignature sig, Monomial m, const Rational& c = 1);
  /// Builds from arbitrary (possibly repeated, unsorted) terms.
  static Polynomial from_terms(RingSignature sig, std::vector<Term> terms);

  const RingSignature& signature() const { return sig_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Nonzero constant (a unit of the polynomial ring).
  bool is_unit() const;
  /// Coefficient of the monomial 1, or zero.
  Rational constant_term() const;

  /// Bidegree shared by all terms; false if zero or mixed.
  bool is_bihomogeneous() const;
  BiDegree bidegree() const;  // requires !is_zero(); degree of the leading term

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c = 1) const;
  /// Substitutes t_i -> -t_i.
  Polynomial reversed() const;

  bool operator==(const Polynomial& o) const;
  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& o) const;

  RingSignature sig_;
  std::vector<Term> terms_;
};

}  // namespace gld
