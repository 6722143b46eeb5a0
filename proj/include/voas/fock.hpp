#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "voas/rational.hpp"

namespace voas {

/// Non-increasing list of positive parts; the empty partition is the vacuum.
using Partition = std::vector<int>;

inline int partition_weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline Partition normalize_partition(Partition p) {
  for (int x : p)
    if (x <= 0) throw std::invalid_argument("partition parts must be positive");
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

/// All partitions of n, in reverse lexicographic order.
inline const std::vector<Partition>& partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("negative weight");
  static std::mutex mu;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return cache.emplace(n, std::move(out)).first->second;
}

/// Finite linear combination of Fock basis states a(-l1)...a(-lr)|0>.
class FockVector {
 public:
  using Terms = std::map<Partition, Rational>;

  FockVector() = default;
  static FockVector vacuum() { return basis({}); }
  static FockVector basis(const Partition& p, const Rational& c = Rational(1)) {
    FockVector v;
    v.add(normalize_partition(p), c);
    return v;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add(const Partition& p, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = t_.try_emplace(p, c);
    if (!fresh) {
      it->second += c;
      if (sgn(it->second) == 0) t_.erase(it);
    }
  }
  Rational coeff(const Partition& p) const {
    auto it = t_.find(normalize_partition(p));
    return it == t_.end() ? Rational(0) : it->second;
  }

  std::optional<int> weight() const {
    if (t_.empty()) return std::nullopt;
    int w = partition_weight(t_.begin()->first);
    for (auto& [p, c] : t_)
      if (partition_weight(p) != w) return std::nullopt;
    return w;
  }
  bool is_homogeneous() const { return t_.empty() || weight().has_value(); }
  int max_weight() const {
    int w = 0;
    for (auto& [p, c] : t_) w = std::max(w, partition_weight(p));
    return w;
  }
  FockVector component(int w) const {
    FockVector r;
    for (auto& [p, c] : t_)
      if (partition_weight(p) == w) r.t_.emplace(p, c);
    return r;
  }

  FockVector& operator+=(const FockVector& o) {
    for (auto& [p, c] : o.t_) add(p, c);
    return *this;
  }
  FockVector& operator-=(const FockVector& o) {
    for (auto& [p, c] : o.t_) add(p, Rational(-c));
    return *this;
  }
  FockVector& operator*=(const Rational& c) {
    if (sgn(c) == 0) t_.clear();
    for (auto& kv : t_) kv.second *= c;
    return *this;
  }
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Rational& c, FockVector a) { return a *= c; }
  friend FockVector operator*(FockVector a, const Rational& c) { return a *= c; }
  friend bool operator==(const FockVector&, const FockVector&) = default;

  std::string str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto& [p, c] : t_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.get_str() + ")";
      for (int x : p) s += "a(-" + std::to_string(x) + ")";
      s += "|0>";
    }
    return s;
  }

 private:
  Terms t_;
};

inline std::ostream& operator<<(std::ostream& os, const FockVector& v) { return os << v.str(); }

/// The state a(-1)|0>.
inline FockVector heisenberg_generator() { return FockVector::basis({1}); }

/// The conformal vector (1/2) a(-1)^2 |0>.
inline FockVector conformal_vector() { return FockVector::basis({1, 1}, Rational(1, 2)); }

inline Rational central_charge() { return Rational(1); }

/// a(n) acting on a Fock vector.
inline FockVector heisenberg_mode(int n, const FockVector& v) {
  FockVector r;
  if (n == 0) return r;
  for (auto& [p, c] : v.terms()) {
    if (n < 0) {
      Partition q = p;
      q.insert(std::upper_bound(q.begin(), q.end(), -n, std::greater<>()), -n);
      r.add(q, c);
    } else {
      auto lo = std::lower_bound(p.begin(), p.end(), n, std::greater<>());
      auto hi = std::upper_bound(p.begin(), p.end(), n, std::greater<>());
      long mult = hi - lo;
      if (mult == 0) continue;
      Partition q = p;
      q.erase(q.begin() + (lo - p.begin()));
      r.add(q, c * n * mult);
    }
  }
  return r;
}

namespace detail {

/// u(m) v for a basis state u, using Y(u, z) = :prod_i d^(k_i) a(z):, k_i = part_i - 1.
inline FockVector basis_vertex_mode(const Partition& u, long m, const FockVector& v) {
  FockVector out;
  if (v.is_zero()) return out;
  if (u.empty()) {
    if (m == -1) out = v;
    return out;
  }
  const long total = m + 1 - partition_weight(u);  // sum of the mode indices n_i
  const int r = static_cast<int>(u.size());
  const int vmax = v.max_weight();
  std::vector<long> modes(static_cast<std::size_t>(r));

  // Annihilators (n > 0) act first; their total is bounded by the weight of v.
  std::function<void(int, long, long)> assign = [&](int i, long ann_sum, long cre_sum) {
    if (i == r) {
      if (ann_sum + cre_sum != total) return;
      Rational coeff(1);
      for (int j = 0; j < r; ++j) coeff *= binomial(-modes[static_cast<std::size_t>(j)] - 1, u[static_cast<std::size_t>(j)] - 1);
      if (sgn(coeff) == 0) return;
      FockVector w = v;
      for (int j = 0; j < r && !w.is_zero(); ++j)
        if (modes[static_cast<std::size_t>(j)] > 0) w = heisenberg_mode(static_cast<int>(modes[static_cast<std::size_t>(j)]), w);
      for (int j = 0; j < r && !w.is_zero(); ++j)
        if (modes[static_cast<std::size_t>(j)] < 0) w = heisenberg_mode(static_cast<int>(modes[static_cast<std::size_t>(j)]), w);
      out += coeff * w;
      return;
    }
    const int rem = r - i - 1;
    auto feasible = [&](long ann, long cre) {
      long rest = total - ann - cre;
      return rem == 0 ? rest == 0 : rest <= static_cast<long>(vmax) - ann;
    };
    for (long n = 1; ann_sum + n <= vmax; ++n) {
      if (!feasible(ann_sum + n, cre_sum)) continue;
      modes[static_cast<std::size_t>(i)] = n;
      assign(i + 1, ann_sum + n, cre_sum);
    }
    for (long n = -1; n >= total - cre_sum - vmax; --n) {
      if (!feasible(ann_sum, cre_sum + n)) continue;
      modes[static_cast<std::size_t>(i)] = n;
      assign(i + 1, ann_sum, cre_sum + n);
    }
  };
  assign(0, 0, 0);
  return out;
}

}  // namespace detail

/// The vertex-operator mode u(m) applied to v.
inline FockVector vertex_mode(const FockVector& u, long m, const FockVector& v) {
  FockVector out;
  for (auto& [p, c] : u.terms()) out += c * detail::basis_vertex_mode(p, m, v);
  return out;
}

/// L(n) = omega(n+1).
inline FockVector virasoro_mode(int n, const FockVector& v) { return vertex_mode(conformal_vector(), n + 1, v); }

/// L(-1)^i v / i!.
inline FockVector translation_divided(int i, const FockVector& v) {
  FockVector w = v;
  for (int k = 1; k <= i; ++k) w = Rational(1, k) * virasoro_mode(-1, w);
  return w;
}

inline bool is_quasiprimary(const FockVector& v) { return virasoro_mode(1, v).is_zero(); }

/// Squared norm of a basis state in the unscaled pairing: (-1)^r prod(l_i) prod(m_k!).
inline Rational basis_norm(const Partition& p) {
  Rational r((p.size() % 2) ? -1 : 1);
  for (int x : p) r *= x;
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    r *= factorial(static_cast<long>(j - i));
    i = j;
  }
  return r;
}

/// Bilinear form <u, v>_rho, with <u, v>_rho = rho^{-N} <u, v>_1 on weight N.
inline Rational pairing(const FockVector& u, const FockVector& v, const Rational& rho = Rational(1)) {
  if (sgn(rho) == 0) throw std::domain_error("pairing parameter must be nonzero");
  Rational s(0);
  for (auto& [p, c] : u.terms()) {
    auto it = v.terms().find(p);
    if (it == v.terms().end()) continue;
    s += c * it->second * basis_norm(p) * power(rho, -partition_weight(p));
  }
  return s;
}

struct DualBasisEntry {
  FockVector b;
  FockVector bbar;  // dual for <,>_1
  FockVector bminus;  // dual for <,>_rho, equal to rho^{wt b} bbar
};

inline std::vector<FockVector> basis_states(int k) {
  std::vector<FockVector> out;
  for (auto& p : partitions_of(k)) out.push_back(FockVector::basis(p));
  return out;
}

/// Gram matrix of <,>_rho restricted to weight k.
inline std::vector<std::vector<Rational>> gram_matrix(int k, const Rational& rho = Rational(1)) {
  auto b = basis_states(k);
  std::vector<std::vector<Rational>> g(b.size(), std::vector<Rational>(b.size()));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) g[i][j] = pairing(b[i], b[j], rho);
  return g;
}

/// Inverse of a square rational matrix by exact Gauss-Jordan elimination.
inline std::vector<std::vector<Rational>> invert_matrix(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = Rational(1) / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= d;
      inv[col][j] *= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

/// Basis of weight k with its duals for <,>_1 and <,>_rho.
inline std::vector<DualBasisEntry> dual_basis(int k, const Rational& rho = Rational(1)) {
  if (sgn(rho) == 0) throw std::domain_error("pairing parameter must be nonzero");
  auto b = basis_states(k);
  auto ginv = invert_matrix(gram_matrix(k));
  std::vector<DualBasisEntry> out;
  for (std::size_t i = 0; i < b.size(); ++i) {
    FockVector bar;
    for (std::size_t j = 0; j < b.size(); ++j) bar += ginv[j][i] * b[j];
    out.push_back({b[i], bar, power(rho, k) * bar});
  }
  return out;
}

/// Basis of the quasi-primary states of weight k (the kernel of L(1)), in reduced echelon form.
inline std::vector<FockVector> quasiprimary_basis(int k) {
  if (k < 0) throw std::invalid_argument("negative weight");
  auto src = basis_states(k);
  auto parts = k > 0 ? partitions_of(k - 1) : std::vector<Partition>{};
  const std::size_t n = src.size();
  // rows: coefficients of L(1) b_j on the weight k-1 basis
  std::vector<std::vector<Rational>> m(parts.size(), std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    FockVector img = virasoro_mode(1, src[j]);
    for (std::size_t i = 0; i < parts.size(); ++i) m[i][j] = img.coeff(parts[i]);
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && sgn(m[piv][col]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    Rational d = Rational(1) / m[row][col];
    for (auto& x : m[row]) x *= d;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c < n; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<FockVector> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    FockVector v = src[free];
    for (std::size_t r = 0; r < pivots.size(); ++r) v -= m[r][free] * src[pivots[r]];
    out.push_back(v);
  }
  return out;
}

/// exp(sum_{k>0} (k+1) beta_k L(k)) beta_0^{L(0)} v.
inline FockVector coordinate_change(const std::vector<Rational>& beta, const FockVector& v) {
  if (beta.empty() || sgn(beta[0]) == 0) throw std::invalid_argument("coordinate change needs nonzero beta_0");
  FockVector scaled;
  for (auto& [p, c] : v.terms()) scaled.add(p, c * power(beta[0], partition_weight(p)));
  auto apply_x = [&](const FockVector& w) {
    FockVector r;
    for (std::size_t k = 1; k < beta.size(); ++k)
      if (sgn(beta[k]) != 0 && static_cast<int>(k) <= w.max_weight())
        r += (beta[k] * static_cast<long>(k + 1)) * virasoro_mode(static_cast<int>(k), w);
    return r;
  };
  FockVector out = scaled, term = scaled;
  for (int j = 1; !term.is_zero(); ++j) {
    term = Rational(1, j) * apply_x(term);
    out += term;
  }
  return out;
}

/// Beta list of the product g1 g2 of two coordinate changes, through beta_K.
///
/// Each beta list encodes g = exp(sum (k+1) beta_k l_k) beta_0^{l_0} with
/// l_k = -z^{k+1} d/dz acting on power series; the product is read off from
/// g1 g2 applied to z.
inline std::vector<Rational> compose_coordinate_changes(const std::vector<Rational>& beta1,
                                                        const std::vector<Rational>& beta2, int K) {
  // series f = sum_{p>=1} f[p] z^p stored densely up to z^{K+1}
  using Series = std::vector<Rational>;
  const int top = K + 1;
  auto act = [&](const std::vector<Rational>& beta, Series f) {
    // beta_0^{l_0}: z^p -> beta_0^{-p} z^p
    for (int p = 1; p <= top; ++p) f[static_cast<std::size_t>(p)] *= power(beta[0], -p);
    auto x = [&](const Series& s) {
      Series r(static_cast<std::size_t>(top) + 1);
      for (std::size_t k = 1; k < beta.size(); ++k)
        for (int p = 1; p + static_cast<int>(k) <= top; ++p)
          r[static_cast<std::size_t>(p) + k] -= beta[k] * static_cast<long>(k + 1) * p * s[static_cast<std::size_t>(p)];
      return r;
    };
    Series out = f, term = f;
    for (int j = 1; j <= top; ++j) {
      term = x(term);
      for (auto& t : term) t /= j;
      for (int p = 0; p <= top; ++p) out[static_cast<std::size_t>(p)] += term[static_cast<std::size_t>(p)];
    }
    return out;
  };
  auto pad = [&](std::vector<Rational> b) {
    b.resize(static_cast<std::size_t>(K) + 1);
    return b;
  };
  auto b1 = pad(beta1), b2 = pad(beta2);
  Series z(static_cast<std::size_t>(top) + 1);
  z[1] = 1;
  Series target = act(b1, act(b2, z));
  std::vector<Rational> beta(static_cast<std::size_t>(K) + 1);
  beta[0] = Rational(1) / target[1];
  for (int k = 1; k <= K; ++k) {
    beta[static_cast<std::size_t>(k)] = 0;
    Series trial = act(beta, z);
    // first-order dependence on beta_k of the z^{k+1} coefficient
    Rational slope = Rational(-(k + 1)) / beta[0];
    beta[static_cast<std::size_t>(k)] = (target[static_cast<std::size_t>(k) + 1] - trial[static_cast<std::size_t>(k) + 1]) / slope;
  }
  return beta;
}

}  // namespace voas
