#pragma once

#include <map>
#include <random>
#include <set>
#include <string>

#include "voas/polynomial.hpp"

namespace voas {

/// Quotient of a polynomial by a product of monic polynomial factors.
///
/// The denominator is kept factored, so sums only multiply by the missing
/// factors and never expand a common denominator from scratch.
class RationalFunction {
 public:
  using Factors = std::map<Polynomial, int>;

  RationalFunction() = default;
  RationalFunction(const Polynomial& p) : num_(p) {}
  RationalFunction(const Rational& c) : num_(c) {}
  RationalFunction(long c) : num_(Rational(c)) {}
  RationalFunction(Var v) : num_(v) {}

  /// num / prod(f^e); factors are normalised, constants folded into num.
  static RationalFunction from_factors(Polynomial num, const Factors& den) {
    RationalFunction r;
    r.num_ = std::move(num);
    for (auto& [f, e] : den) r.mul_factor(f, -e);
    if (r.num_.is_zero()) r.den_.clear();
    return r;
  }

  /// f^e for a polynomial f, e of either sign.
  static RationalFunction power_of(const Polynomial& f, int e) {
    RationalFunction r(Rational(1));
    r.mul_factor(f, e);
    return r;
  }

  const Polynomial& numerator() const { return num_; }
  const Factors& denominator_factors() const { return den_; }
  Polynomial denominator() const {
    Polynomial d(1);
    for (auto& [f, e] : den_) d *= f.pow(e);
    return d;
  }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }

  std::set<Var> variables() const {
    auto s = num_.variables();
    for (auto& [f, e] : den_) {
      auto t = f.variables();
      s.insert(t.begin(), t.end());
    }
    return s;
  }
  bool depends_on(Var v) const {
    if (num_.depends_on(v)) return true;
    for (auto& [f, e] : den_)
      if (f.depends_on(v)) return true;
    return false;
  }

  RationalFunction& operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
      num_ += o.num_;
      if (num_.is_zero()) den_.clear();
      return *this;
    }
    Factors common = den_;
    for (auto& [f, e] : o.den_) {
      auto& slot = common[f];
      slot = std::max(slot, e);
    }
    Polynomial a = num_ * missing(den_, common);
    Polynomial b = o.num_ * missing(o.den_, common);
    num_ = a + b;
    den_ = std::move(common);
    if (num_.is_zero()) den_.clear();
    return *this;
  }
  RationalFunction& operator-=(const RationalFunction& o) { return *this += -o; }
  RationalFunction& operator*=(const RationalFunction& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RationalFunction();
    num_ *= o.num_;
    for (auto& [f, e] : o.den_) den_[f] += e;
    return *this;
  }
  RationalFunction& operator*=(const Rational& c) {
    num_ *= c;
    if (num_.is_zero()) den_.clear();
    return *this;
  }
  RationalFunction& operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw std::domain_error("division by the zero rational function");
    if (is_zero()) return *this;
    for (auto& [f, e] : o.den_) {
      // multiplying by f^e first cancels f in our own denominator
      int k = 0;
      if (auto it = den_.find(f); it != den_.end()) {
        k = std::min(it->second, e);
        if ((it->second -= k) == 0) den_.erase(it);
      }
      if (e > k) num_ *= f.pow(e - k);
    }
    mul_factor(o.num_, -1);
    return *this;
  }

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator*(RationalFunction a, const Rational& c) { return a *= c; }
  friend RationalFunction operator*(const Rational& c, RationalFunction a) { return a *= c; }
  friend RationalFunction operator-(RationalFunction a) {
    a.num_ = -a.num_;
    return a;
  }

  RationalFunction pow(int e) const {
    if (e < 0) {
      if (is_zero()) throw std::domain_error("zero raised to a negative power");
      RationalFunction inv = RationalFunction(Rational(1)) / *this;
      return inv.pow(-e);
    }
    RationalFunction r;
    r.num_ = num_.pow(e);
    if (!r.num_.is_zero())
      for (auto& [f, k] : den_) r.den_[f] = k * e;
    return r;
  }

  RationalFunction derivative(Var v) const {
    Factors dep;
    Factors rest;
    for (auto& [f, e] : den_) (f.depends_on(v) ? dep : rest)[f] = e;
    if (dep.empty()) return from_factors(num_.derivative(v), den_);
    // d(n / prod F^e) = (n' prod F - n sum e F' prod_{G != F} G) / prod F^{e+1}
    Polynomial prod(1);
    for (auto& [f, e] : dep) prod *= f;
    Polynomial top = num_.derivative(v) * prod;
    for (auto& [f, e] : dep) {
      Polynomial others(1);
      for (auto& [g, k] : dep)
        if (!(g == f)) others *= g;
      top -= num_ * f.derivative(v) * others * Rational(e);
    }
    Factors den = rest;
    for (auto& [f, e] : dep) den[f] = e + 1;
    return from_factors(std::move(top), den);
  }

  RationalFunction derivative(Var v, int k) const {
    RationalFunction r = *this;
    for (int i = 0; i < k; ++i) r = r.derivative(v);
    return r;
  }

  /// Substitutes v := g everywhere.
  RationalFunction substitute(Var v, const RationalFunction& g) const {
    if (!depends_on(v)) return *this;
    RationalFunction top = horner(num_, v, g);
    for (auto& [f, e] : den_) {
      if (!f.depends_on(v)) {
        top *= power_of(f, -e);
        continue;
      }
      RationalFunction fg = horner(f, v, g);
      if (fg.is_zero()) throw std::domain_error("substitution makes a denominator vanish");
      top /= fg.pow(e);
    }
    return top;
  }

  /// Cancels denominator factors that divide the numerator.
  RationalFunction& reduce() {
    for (auto it = den_.begin(); it != den_.end();) {
      while (it->second > 0) {
        auto q = num_.divide_exact(it->first);
        if (!q) break;
        num_ = std::move(*q);
        --it->second;
      }
      if (it->second == 0)
        it = den_.erase(it);
      else
        ++it;
    }
    return *this;
  }

  template <class T, class Lookup>
  T evaluate_with(Lookup&& value_of) const {
    T n = num_.evaluate_with<T>(value_of);
    T d = from_rational<T>(Rational(1));
    for (auto& [f, e] : den_) {
      T fv = f.template evaluate_with<T>(value_of);
      if (is_zero_value(fv)) throw std::domain_error("evaluation at a pole");
      for (int k = 0; k < e; ++k) d = d * fv;
    }
    return n / d;
  }

  template <class T>
  T evaluate(const std::map<Var, T>& values) const {
    return evaluate_with<T>([&](Var v) -> T {
      auto it = values.find(v);
      if (it == values.end()) throw std::invalid_argument("no value for variable " + var_name(v));
      return it->second;
    });
  }

  /// Exact equality; a random-point evaluation screens out most mismatches first.
  bool equals(const RationalFunction& o) const {
    if (num_ == o.num_ && den_ == o.den_) return true;
    auto vars = variables();
    auto ov = o.variables();
    vars.insert(ov.begin(), ov.end());
    std::mt19937_64 rng(0x5eedULL + vars.size());
    std::uniform_int_distribution<long> dist(-97, 97);
    for (int attempt = 0; attempt < 4; ++attempt) {
      std::map<Var, Rational> pt;
      for (Var v : vars) pt[v] = frac(dist(rng), 1 + std::abs(dist(rng)));
      try {
        if (evaluate(pt) != o.evaluate(pt)) return false;
        break;
      } catch (const std::domain_error&) {
      }
    }
    return (*this - o).is_zero();
  }

  std::string str() const {
    if (den_.empty()) return num_.str();
    std::string s = "(" + num_.str() + ")/(";
    bool first = true;
    for (auto& [f, e] : den_) {
      if (!first) s += "*";
      first = false;
      s += "(" + f.str() + ")";
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s + ")";
  }

 private:
  static Polynomial missing(const Factors& have, const Factors& want) {
    Polynomial m(1);
    for (auto& [f, e] : want) {
      auto it = have.find(f);
      int d = e - (it == have.end() ? 0 : it->second);
      if (d > 0) m *= f.pow(d);
    }
    return m;
  }

  static RationalFunction horner(const Polynomial& p, Var v, const RationalFunction& g) {
    auto cs = p.coefficients_in(v);
    RationalFunction r;
    for (std::size_t k = cs.size(); k-- > 0;) r = r * g + RationalFunction(cs[k]);
    return r;
  }

  /// Multiplies by f^e (e of either sign) keeping the factored invariant.
  void mul_factor(Polynomial f, int e) {
    if (e == 0) return;
    if (f.is_zero()) {
      if (e < 0) throw std::domain_error("zero denominator factor");
      num_ = Polynomial();
      den_.clear();
      return;
    }
    if (f.is_constant()) {
      num_ *= power(f.constant_term(), e);
      return;
    }
    Rational lc = f.make_monic();
    num_ *= power(lc, e);
    if (e > 0) {
      auto it = den_.find(f);
      if (it != den_.end()) {
        int k = std::min(e, it->second);
        it->second -= k;
        e -= k;
        if (it->second == 0) den_.erase(it);
      }
      if (e > 0) num_ *= f.pow(e);
    } else {
      den_[f] += -e;
    }
  }

  Polynomial num_;
  Factors den_;
};

inline bool is_zero_value(const RationalFunction& f) { return f.is_zero(); }
inline RationalFunction power(const RationalFunction& f, long e) { return f.pow(static_cast<int>(e)); }

template <>
inline RationalFunction from_rational<RationalFunction>(const Rational& q) { return RationalFunction(q); }

}  // namespace voas
