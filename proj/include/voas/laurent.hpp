#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "voas/rational_function.hpp"

namespace voas {

/// Expansion point: a finite expression (possibly a constant) or infinity.
struct Center {
  std::optional<RationalFunction> point;  // empty means infinity
  static Center at(const RationalFunction& p) { return Center{p}; }
  static Center infinity() { return Center{std::nullopt}; }
  bool is_infinity() const { return !point.has_value(); }
};

/// Truncated Laurent series in the local parameter t = x - c (or t = 1/x at
/// infinity); coefficients may depend on the remaining variables.
struct LaurentSeries {
  Var variable;
  Center center;
  int order = 0;  // coefficients known for exponents <= order
  std::map<int, RationalFunction> coeffs;

  RationalFunction coeff(int k) const {
    if (k > order) throw std::out_of_range("coefficient beyond the series order");
    auto it = coeffs.find(k);
    return it == coeffs.end() ? RationalFunction() : it->second;
  }
};

namespace detail {
inline Var local_parameter() { return var("_t"); }

/// Power series in t of 1/u^e, u = sum c_k t^k with c_0 != 0, to degree n.
inline std::vector<RationalFunction> inverse_power_series(const std::vector<Polynomial>& c, int e, int n) {
  std::vector<RationalFunction> inv(static_cast<std::size_t>(n) + 1);
  RationalFunction c0inv = RationalFunction(Rational(1)) / RationalFunction(c[0]);
  inv[0] = c0inv;
  for (int j = 1; j <= n; ++j) {
    RationalFunction s;
    for (int i = 1; i <= j && i < static_cast<int>(c.size()); ++i)
      if (!c[static_cast<std::size_t>(i)].is_zero()) s += RationalFunction(c[static_cast<std::size_t>(i)]) * inv[static_cast<std::size_t>(j - i)];
    inv[static_cast<std::size_t>(j)] = -(s * c0inv);
  }
  std::vector<RationalFunction> out(static_cast<std::size_t>(n) + 1);
  out[0] = RationalFunction(Rational(1));
  for (int k = 0; k < e; ++k) {
    std::vector<RationalFunction> next(static_cast<std::size_t>(n) + 1);
    for (int a = 0; a <= n; ++a) {
      if (out[static_cast<std::size_t>(a)].is_zero()) continue;
      for (int b = 0; a + b <= n; ++b)
        if (!inv[static_cast<std::size_t>(b)].is_zero())
          next[static_cast<std::size_t>(a + b)] += out[static_cast<std::size_t>(a)] * inv[static_cast<std::size_t>(b)];
    }
    out = std::move(next);
  }
  return out;
}
}  // namespace detail

/// Laurent expansion of f in x about the given center through t^order.
inline LaurentSeries laurent_expand(const RationalFunction& f, Var x, const Center& c, int order) {
  Var t = detail::local_parameter();
  if (f.depends_on(t)) throw std::invalid_argument("reserved variable _t appears in the input");
  RationalFunction g;
  if (c.is_infinity()) {
    g = f.substitute(x, RationalFunction(Rational(1)) / RationalFunction(t));
  } else {
    if (c.point->depends_on(x)) throw std::invalid_argument("expansion center depends on the expansion variable");
    g = f.substitute(x, *c.point + RationalFunction(t));
  }
  LaurentSeries out{x, c, order, {}};
  if (g.is_zero()) return out;

  struct Piece {
    std::vector<Polynomial> unit;
    int e;
  };
  std::vector<Piece> pieces;
  int pole = 0;
  for (auto& [fac, e] : g.denominator_factors()) {
    auto cs = fac.coefficients_in(t);
    std::size_t k0 = 0;
    while (cs[k0].is_zero()) ++k0;
    pole += static_cast<int>(k0) * e;
    pieces.push_back({std::vector<Polynomial>(cs.begin() + static_cast<long>(k0), cs.end()), e});
  }
  int n = order + pole;
  if (n < 0) return out;
  std::vector<RationalFunction> acc(static_cast<std::size_t>(n) + 1);
  auto top = g.numerator().coefficients_in(t);
  for (std::size_t k = 0; k < top.size() && static_cast<int>(k) <= n; ++k) acc[k] = RationalFunction(top[k]);
  for (auto& p : pieces) {
    auto s = detail::inverse_power_series(p.unit, p.e, n);
    std::vector<RationalFunction> next(static_cast<std::size_t>(n) + 1);
    for (int a = 0; a <= n; ++a) {
      if (acc[static_cast<std::size_t>(a)].is_zero()) continue;
      for (int b = 0; a + b <= n; ++b)
        if (!s[static_cast<std::size_t>(b)].is_zero())
          next[static_cast<std::size_t>(a + b)] += acc[static_cast<std::size_t>(a)] * s[static_cast<std::size_t>(b)];
    }
    acc = std::move(next);
  }
  for (int j = 0; j <= n; ++j) {
    auto& cj = acc[static_cast<std::size_t>(j)];
    if (!cj.is_zero()) out.coeffs.emplace(j - pole, cj.reduce());
  }
  return out;
}

/// Coefficient of t^{-k-1} in the expansion about the center.
inline RationalFunction formal_residue(const RationalFunction& f, Var x, const Center& c, int k = 0) {
  return laurent_expand(f, x, c, -k - 1).coeff(-k - 1);
}

}  // namespace voas
