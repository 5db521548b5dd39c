#include "gld/polynomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "gld/errors.hpp"

namespace gld {

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const RingSignature& sig) {
  return "(m=" + std::to_string(sig.x_vars) + ", d=" + std::to_string(sig.t_vars) + ")";
}

std::string to_string(const BiDegree& d) {
  return "(" + std::to_string(d.x) + "," + std::to_string(d.t) + ")";
}

Monomial Monomial::variable(int nvars, int index, int power) {
  Monomial m = one(nvars);
  m.e_[index] = power;
  return m;
}

BiDegree Monomial::degree(const RingSignature& sig) const {
  BiDegree d;
  for (int i = 0; i < sig.x_vars; ++i) d.x += e_[i];
  for (int i = sig.x_vars; i < sig.nvars(); ++i) d.t += e_[i];
  return d;
}

int Monomial::total_degree() const {
  int s = 0;
  for (int v : e_) s += v;
  return s;
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  std::vector<int> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
  return Monomial(std::move(r));
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  std::vector<int> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r[i] = o.e_[i] - e_[i];
  return Monomial(std::move(r));
}

Monomial Monomial::lcm(const Monomial& o) const {
  std::vector<int> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r[i] = std::max(e_[i], o.e_[i]);
  return Monomial(std::move(r));
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (int v : e_) {
    h ^= static_cast<std::size_t>(v + 0x9e3779b9);
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

// Graded reverse lex on the index range [lo, hi).
int grevlex(const Monomial& a, const Monomial& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int compare_block_order(const Monomial& a, const Monomial& b, const RingSignature& sig) {
  int c = grevlex(a, b, sig.x_vars, sig.nvars());
  if (c != 0) return c;
  return grevlex(a, b, 0, sig.x_vars);
}

std::string format_monomial(const Monomial& m, const RingSignature& sig) {
  std::string out;
  for (int i = 0; i < sig.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += i < sig.x_vars ? "x" + std::to_string(i + 1) : "t" + std::to_string(i - sig.x_vars + 1);
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = total; v >= 0; --v) {
    cur.push_back(v);
    compositions(total - v, parts - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> all_compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (total < 0) return out;
  std::vector<int> cur;
  compositions(total, parts, cur, out);
  return out;
}

struct DegreeKey {
  RingSignature sig;
  BiDegree deg;
  auto operator<=>(const DegreeKey&) const = default;
};

}  // namespace

const std::vector<Monomial>& monomials_of_degree(const RingSignature& sig, BiDegree deg) {
  static std::mutex mu;
  static std::map<DegreeKey, std::vector<Monomial>> cache;
  std::lock_guard lock(mu);
  DegreeKey key{sig, deg};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Monomial> out;
  if (deg.x >= 0 && deg.t >= 0) {
    auto xs = all_compositions(deg.x, sig.x_vars);
    auto ts = all_compositions(deg.t, sig.t_vars);
    for (const auto& tx : ts) {
      for (const auto& xx : xs) {
        std::vector<int> e(xx);
        e.insert(e.end(), tx.begin(), tx.end());
        out.emplace_back(std::move(e));
      }
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
      return compare_block_order(a, b, sig) > 0;
    });
  }
  return cache.emplace(key, std::move(out)).first->second;
}

const std::vector<Monomial>& t_monomials(const RingSignature& sig, int k) {
  RingSignature tsig{0, sig.t_vars};
  static std::mutex mu;
  static std::map<DegreeKey, std::vector<Monomial>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(DegreeKey{sig, {0, k}});
    if (it != cache.end()) return it->second;
  }
  std::vector<Monomial> out;
  for (const auto& tm : monomials_of_degree(tsig, {0, k})) {
    std::vector<int> e(sig.x_vars, 0);
    e.insert(e.end(), tm.exponents().begin(), tm.exponents().end());
    out.emplace_back(std::move(e));
  }
  std::lock_guard lock(mu);
  return cache.emplace(DegreeKey{sig, {0, k}}, std::move(out)).first->second;
}

Polynomial Polynomial::constant(RingSignature sig, const Rational& c) {
  return monomial(sig, Monomial::one(sig.nvars()), c);
}

Polynomial Polynomial::monomial(RingSignature sig, Monomial m, const Rational& c) {
  Polynomial p(sig);
  if (c != 0) p.terms_.emplace_back(std::move(m), c);
  return p;
}

Polynomial Polynomial::from_terms(RingSignature sig, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return compare_block_order(a.first, b.first, sig) > 0;
  });
  Polynomial p(sig);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_unit() const { return terms_.size() == 1 && terms_[0].first.is_one(); }

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return 0;
}

bool Polynomial::is_bihomogeneous() const {
  if (terms_.empty()) return false;
  BiDegree d = terms_[0].first.degree(sig_);
  for (const auto& t : terms_)
    if (t.first.degree(sig_) != d) return false;
  return true;
}

BiDegree Polynomial::bidegree() const { return terms_.at(0).first.degree(sig_); }

void Polynomial::check_compatible(const Polynomial& o) const {
  if (sig_ != o.sig_)
    throw InputError("ring signature mismatch: " + gld::to_string(sig_) + " vs " + gld::to_string(o.sig_));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(sig_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c;
    if (i == terms_.size()) c = -1;
    else if (j == o.terms_.size()) c = 1;
    else c = compare_block_order(terms_[i].first, o.terms_[j].first, sig_);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].second + o.terms_[j].second;
      if (s != 0) r.terms_.emplace_back(terms_[i].first, s);
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(sig_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  Polynomial r(sig_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order of terms.
  for (const auto& t : terms_) r.terms_.emplace_back(t.first * m, t.second * c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc.emplace_back(a.first * b.first, a.second * b.second);
  return from_terms(sig_, std::move(acc));
}

Polynomial Polynomial::reversed() const {
  Polynomial r(sig_);
  r.terms_ = terms_;
  for (auto& t : r.terms_) {
    if (t.first.degree(sig_).t % 2 != 0) t.second = -t.second;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return sig_ == o.sig_ && terms_ == o.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << "*";
      out << format_monomial(m, sig_);
    }
  }
  return out.str();
}

}  // namespace gld
