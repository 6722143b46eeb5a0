#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "voas/rational.hpp"

namespace voas {

/// Multivariate series in s_1..s_g with s_a^2 = rho_a, truncated at a total
/// half-order (exponents are stored in half units of rho).
///
/// Exponents may be negative; products then only stay exact to the extent
/// that the factors were computed far enough beyond the cutoff.
template <class C>
class TruncatedSeries {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, C>;

  TruncatedSeries() = default;
  TruncatedSeries(std::size_t nvars, int half_cutoff) : n_(nvars), cut_(half_cutoff) {}
  static TruncatedSeries with_rho_cutoff(std::size_t nvars, int w) { return TruncatedSeries(nvars, 2 * w); }
  static TruncatedSeries constant(std::size_t nvars, int half_cutoff, const C& c) {
    TruncatedSeries s(nvars, half_cutoff);
    s.add_term(Exponents(nvars, 0), c);
    return s;
  }
  static TruncatedSeries monomial(std::size_t nvars, int half_cutoff, Exponents e, const C& c) {
    TruncatedSeries s(nvars, half_cutoff);
    s.add_term(std::move(e), c);
    return s;
  }

  std::size_t nvars() const { return n_; }
  int half_cutoff() const { return cut_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  static int order(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

  void add_term(Exponents e, const C& c) {
    if (e.size() != n_) throw std::invalid_argument("exponent vector has the wrong length");
    if (order(e) > cut_ || is_zero_value(c)) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(std::move(e), c);
    } else {
      it->second = it->second + c;
      if (is_zero_value(it->second)) t_.erase(it);
    }
  }

  C coeff(const Exponents& e) const {
    if (order(e) > cut_) throw std::out_of_range("coefficient beyond the series cutoff");
    auto it = t_.find(e);
    return it == t_.end() ? C() : it->second;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check_compatible(o);
    for (auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check_compatible(o);
    for (auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator-(TruncatedSeries a) {
    for (auto& kv : a.t_) kv.second = -kv.second;
    return a;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_compatible(b);
    TruncatedSeries r(a.n_, a.cut_);
    for (auto& [ea, ca] : a.t_) {
      int oa = order(ea);
      for (auto& [eb, cb] : b.t_) {
        if (oa + order(eb) > a.cut_) continue;
        Exponents e(a.n_);
        for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(std::move(e), ca * cb);
      }
    }
    return r;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }
  friend TruncatedSeries operator*(TruncatedSeries a, const C& c) {
    if (is_zero_value(c)) return TruncatedSeries(a.n_, a.cut_);
    for (auto& kv : a.t_) kv.second = kv.second * c;
    a.prune();
    return a;
  }
  friend TruncatedSeries operator*(const C& c, TruncatedSeries a) { return std::move(a) * c; }

  /// Multiplies by s^shift (half units).
  TruncatedSeries shifted(const Exponents& shift) const {
    TruncatedSeries r(n_, cut_);
    for (auto& [e, c] : t_) {
      Exponents f(n_);
      for (std::size_t i = 0; i < n_; ++i) f[i] = e[i] + shift[i];
      r.add_term(std::move(f), c);
    }
    return r;
  }

  TruncatedSeries truncated(int half_cutoff) const {
    TruncatedSeries r(n_, half_cutoff);
    for (auto& [e, c] : t_) r.add_term(e, c);
    return r;
  }

  /// rho_a := 0; negative powers of rho_a are rejected.
  TruncatedSeries set_zero(std::size_t a) const {
    TruncatedSeries r(n_, cut_);
    for (auto& [e, c] : t_) {
      if (e.at(a) < 0) throw std::domain_error("series has a pole in the variable being set to zero");
      if (e[a] == 0) r.add_term(e, c);
    }
    return r;
  }

  /// Removes variable a, which must no longer occur.
  TruncatedSeries drop_variable(std::size_t a) const {
    TruncatedSeries r(n_ - 1, cut_);
    for (auto& [e, c] : t_) {
      if (e.at(a) != 0) throw std::domain_error("dropping a variable that still occurs");
      Exponents f = e;
      f.erase(f.begin() + static_cast<long>(a));
      r.add_term(std::move(f), c);
    }
    return r;
  }

  template <class D, class F>
  TruncatedSeries<D> map(F&& f) const {
    TruncatedSeries<D> r(n_, cut_);
    for (auto& [e, c] : t_) r.add_term(e, f(c));
    return r;
  }

  /// Applies f to every coefficient, keeping exponents.
  template <class F>
  TruncatedSeries transform(F&& f) const {
    return map<C>(std::forward<F>(f));
  }

  /// Monomial key in rho units, e.g. "rho1^2*rho2^(3/2)"; the constant term is "".
  static std::string key(const Exponents& e, const std::vector<std::string>& names = {}) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += names.empty() ? "rho" + std::to_string(i + 1) : names[i];
      if (e[i] % 2 == 0) {
        if (e[i] != 2) s += "^" + std::to_string(e[i] / 2);
      } else {
        s += "^(" + std::to_string(e[i]) + "/2)";
      }
    }
    return s;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.n_ == b.n_ && a.cut_ == b.cut_ && a.t_ == b.t_;
  }

 private:
  void check_compatible(const TruncatedSeries& o) const {
    if (n_ != o.n_) throw std::invalid_argument("series over different numbers of variables");
    if (cut_ != o.cut_) throw std::invalid_argument("series with mismatched cutoffs");
  }
  void prune() {
    for (auto it = t_.begin(); it != t_.end();)
      if (is_zero_value(it->second))
        it = t_.erase(it);
      else
        ++it;
  }

  std::size_t n_ = 0;
  int cut_ = 0;
  Terms t_;
};

}  // namespace voas
