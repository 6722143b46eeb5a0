#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "voas/rational.hpp"

namespace voas {

/// Handle to an interned variable name.
struct Var {
  std::uint32_t id = 0;
  friend auto operator<=>(const Var&, const Var&) = default;
};

namespace detail {
class VarRegistry {
 public:
  static VarRegistry& instance() {
    static VarRegistry r;
    return r;
  }
  Var intern(std::string_view name) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ids_.find(std::string(name));
    if (it != ids_.end()) return Var{it->second};
    auto id = static_cast<std::uint32_t>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(std::string(name), id);
    return Var{id};
  }
  const std::string& name(Var v) {
    std::lock_guard<std::mutex> lock(mu_);
    if (v.id >= names_.size()) throw std::out_of_range("unknown variable id");
    return names_[v.id];
  }

 private:
  std::mutex mu_;
  std::deque<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> ids_;
};
}  // namespace detail

inline Var var(std::string_view name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  return detail::VarRegistry::instance().intern(name);
}
inline const std::string& var_name(Var v) { return detail::VarRegistry::instance().name(v); }

/// Sparse monomial: sorted (variable, positive exponent) pairs.
class Monomial {
 public:
  using Entry = std::pair<std::uint32_t, int>;

  Monomial() = default;
  static Monomial of(Var v, int e = 1) {
    if (e < 0) throw std::invalid_argument("negative monomial exponent");
    Monomial m;
    if (e > 0) m.e_.push_back({v.id, e});
    return m;
  }
  static Monomial from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end());
    Monomial m;
    for (auto& [v, e] : entries) {
      if (e < 0) throw std::invalid_argument("negative monomial exponent");
      if (e == 0) continue;
      if (!m.e_.empty() && m.e_.back().first == v)
        m.e_.back().second += e;
      else
        m.e_.push_back({v, e});
    }
    return m;
  }

  const std::vector<Entry>& entries() const { return e_; }
  bool is_one() const { return e_.empty(); }
  int degree(Var v) const {
    for (auto& [id, e] : e_)
      if (id == v.id) return e;
    return 0;
  }
  int total_degree() const {
    int d = 0;
    for (auto& p : e_) d += p.second;
    return d;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    r.e_.reserve(e_.size() + o.e_.size());
    std::size_t i = 0, j = 0;
    while (i < e_.size() || j < o.e_.size()) {
      if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first))
        r.e_.push_back(e_[i++]);
      else if (i == e_.size() || o.e_[j].first < e_[i].first)
        r.e_.push_back(o.e_[j++]);
      else {
        r.e_.push_back({e_[i].first, e_[i].second + o.e_[j].second});
        ++i, ++j;
      }
    }
    return r;
  }

  /// this / o when o divides this.
  std::optional<Monomial> divide(const Monomial& o) const {
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < e_.size() || j < o.e_.size()) {
      if (j == o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first))
        r.e_.push_back(e_[i++]);
      else if (i == e_.size() || o.e_[j].first < e_[i].first)
        return std::nullopt;
      else {
        int d = e_[i].second - o.e_[j].second;
        if (d < 0) return std::nullopt;
        if (d > 0) r.e_.push_back({e_[i].first, d});
        ++i, ++j;
      }
    }
    return r;
  }

  Monomial without(Var v) const {
    Monomial r;
    for (auto& p : e_)
      if (p.first != v.id) r.e_.push_back(p);
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string str() const {
    if (e_.empty()) return "1";
    std::string s;
    for (auto& [id, e] : e_) {
      if (!s.empty()) s += "*";
      s += var_name(Var{id});
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  std::vector<Entry> e_;
};

/// Lexicographic order, larger first; variables with smaller ids dominate.
struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const auto& x = a.entries();
    const auto& y = b.entries();
    std::size_t i = 0;
    for (; i < x.size() && i < y.size(); ++i) {
      if (x[i].first != y[i].first) return x[i].first < y[i].first;
      if (x[i].second != y[i].second) return x[i].second > y[i].second;
    }
    return i < x.size() && i == y.size();
  }
};

/// Sparse multivariate polynomial with rational coefficients.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, MonomialGreater>;

  Polynomial() = default;
  Polynomial(const Rational& c) {
    if (sgn(c) != 0) t_.emplace(Monomial(), c);
  }
  Polynomial(long c) : Polynomial(Rational(c)) {}
  Polynomial(Var v) { t_.emplace(Monomial::of(v), Rational(1)); }
  static Polynomial term(const Monomial& m, const Rational& c) {
    Polynomial p;
    if (sgn(c) != 0) p.t_.emplace(m, c);
    return p;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }
  Rational constant_term() const {
    auto it = t_.find(Monomial());
    return it == t_.end() ? Rational(0) : it->second;
  }
  const Monomial& leading_monomial() const { return t_.begin()->first; }
  const Rational& leading_coefficient() const { return t_.begin()->second; }

  void add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (sgn(it->second) == 0) t_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (auto& [m, c] : o.t_) add_term(m, Rational(-c));
    return *this;
  }
  Polynomial& operator*=(const Rational& c) {
    if (sgn(c) == 0) {
      t_.clear();
      return *this;
    }
    for (auto& kv : t_) kv.second *= c;
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& kv : a.t_) kv.second = -kv.second;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    if (a.is_zero() || b.is_zero()) return r;
    for (auto& [ma, ca] : a.t_)
      for (auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial r(1), b = *this;
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  /// Total order used for keys: term by term in monomial order, then coefficients.
  friend bool operator<(const Polynomial& a, const Polynomial& b) {
    MonomialGreater gt;
    auto i = a.t_.begin();
    auto j = b.t_.begin();
    for (; i != a.t_.end() && j != b.t_.end(); ++i, ++j) {
      if (gt(i->first, j->first)) return true;
      if (gt(j->first, i->first)) return false;
      if (i->second != j->second) return i->second < j->second;
    }
    return i == a.t_.end() && j != b.t_.end();
  }

  int degree(Var v) const {
    int d = 0;
    for (auto& [m, c] : t_) d = std::max(d, m.degree(v));
    return d;
  }
  bool depends_on(Var v) const {
    for (auto& [m, c] : t_)
      if (m.degree(v) > 0) return true;
    return false;
  }
  std::set<Var> variables() const {
    std::set<Var> s;
    for (auto& [m, c] : t_)
      for (auto& [id, e] : m.entries()) s.insert(Var{id});
    return s;
  }

  /// Coefficients of v^0, v^1, ... as polynomials in the other variables.
  std::vector<Polynomial> coefficients_in(Var v) const {
    std::vector<Polynomial> out(static_cast<std::size_t>(degree(v)) + 1);
    for (auto& [m, c] : t_) out[static_cast<std::size_t>(m.degree(v))].add_term(m.without(v), c);
    return out;
  }

  Polynomial derivative(Var v) const {
    Polynomial r;
    for (auto& [m, c] : t_) {
      int d = m.degree(v);
      if (d == 0) continue;
      std::vector<Monomial::Entry> e = m.without(v).entries();
      e.push_back({v.id, d - 1});
      r.add_term(Monomial::from_entries(std::move(e)), c * d);
    }
    return r;
  }

  Polynomial substitute(Var v, const Polynomial& g) const {
    auto cs = coefficients_in(v);
    Polynomial r;
    for (std::size_t k = cs.size(); k-- > 0;) r = r * g + cs[k];
    return r;
  }

  /// Monic rescaling; returns the leading coefficient that was divided out.
  Rational make_monic() {
    if (t_.empty()) throw std::domain_error("cannot normalise the zero polynomial");
    Rational lc = leading_coefficient();
    Rational inv = Rational(1) / lc;
    for (auto& kv : t_) kv.second *= inv;
    return lc;
  }

  /// Exact quotient this / d, or nullopt if d does not divide this.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    Polynomial rem = *this, q;
    const Monomial& lm = d.leading_monomial();
    Rational lc = d.leading_coefficient();
    while (!rem.is_zero()) {
      auto mq = rem.leading_monomial().divide(lm);
      if (!mq) return std::nullopt;
      Rational c = rem.leading_coefficient() / lc;
      q.add_term(*mq, c);
      for (auto& [m, cd] : d.t_) rem.add_term(*mq * m, Rational(-c * cd));
    }
    return q;
  }

  template <class T, class Lookup>
  T evaluate_with(Lookup&& value_of) const {
    T acc = from_rational<T>(Rational(0));
    std::map<std::pair<std::uint32_t, int>, T> powers;
    for (auto& [m, c] : t_) {
      T term = from_rational<T>(c);
      for (auto& [id, e] : m.entries()) {
        auto key = std::make_pair(id, e);
        auto it = powers.find(key);
        if (it == powers.end()) {
          T base = value_of(Var{id});
          T p = from_rational<T>(Rational(1));
          for (int k = 0; k < e; ++k) p = p * base;
          it = powers.emplace(key, p).first;
        }
        term = term * it->second;
      }
      acc = acc + term;
    }
    return acc;
  }

  template <class T>
  T evaluate(const std::map<Var, T>& values) const {
    return evaluate_with<T>([&](Var v) -> T {
      auto it = values.find(v);
      if (it == values.end()) throw std::invalid_argument("no value for variable " + var_name(v));
      return it->second;
    });
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : t_) {
      Rational a = abs(c);
      if (!first) os << (sgn(c) < 0 ? " - " : " + ");
      else if (sgn(c) < 0) os << "-";
      first = false;
      if (m.is_one())
        os << a.get_str();
      else if (a == 1)
        os << m.str();
      else
        os << a.get_str() << "*" << m.str();
    }
    return os.str();
  }

 private:
  Terms t_;
};

}  // namespace voas
