#pragma once

#include <map>
#include <optional>
#include <vector>

#include "voas/fock.hpp"
#include "voas/laurent.hpp"

namespace voas {

/// A state placed at a point; the point is a polynomial (usually one variable).
struct Insertion {
  FockVector state;
  Polynomial point;
};

struct CorrelationForm {
  RationalFunction value;
  std::vector<std::optional<int>> weights;
};

inline std::vector<std::optional<int>> insertion_weights(const std::vector<Insertion>& ins) {
  std::vector<std::optional<int>> w;
  for (auto& i : ins) w.push_back(i.state.weight());
  return w;
}

namespace detail {

/// Accumulates free-boson Wick contractions for a fixed list of points.
///
/// Each contraction of d^(p)a(x_i) with d^(q)a(x_j), i < j, contributes
/// (-1)^p (p+q+1)!/(p! q!) (x_i - x_j)^{-(p+q+2)}.
class WickAccumulator {
 public:
  explicit WickAccumulator(std::vector<Polynomial> points) : pts_(std::move(points)) {
    const std::size_t n = pts_.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Polynomial d = pts_[i] - pts_[j];
        if (d.is_zero()) throw std::invalid_argument("coincident insertion points");
        diffs_.push_back(std::move(d));
      }
  }

  std::size_t size() const { return pts_.size(); }

  /// Adds c * <Y(p_1, x_1) ... Y(p_n, x_n)> for basis partitions p_k.
  void add(const std::vector<const Partition*>& parts, const Rational& c) {
    if (sgn(c) == 0) return;
    legs_.clear();
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (int part : *parts[i]) legs_.push_back({static_cast<int>(i), part - 1});
    if (legs_.size() % 2) return;
    used_.assign(legs_.size(), false);
    pattern_.assign(diffs_.size(), 0);
    match(c);
  }

  /// Adds c * <Y(s_1, x_1) ... Y(s_n, x_n)> for arbitrary Fock vectors.
  void add_states(const std::vector<const FockVector*>& states, const Rational& c) {
    std::vector<const Partition*> parts(states.size());
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t k, Rational coeff) {
      if (k == states.size()) {
        add(parts, coeff);
        return;
      }
      for (auto& [p, a] : states[k]->terms()) {
        parts[k] = &p;
        rec(k + 1, coeff * a);
      }
    };
    rec(0, c);
  }

  void merge(const WickAccumulator& o) {
    for (auto& [pat, c] : o.acc_) bump(pat, c);
  }

  bool empty() const { return acc_.empty(); }

  /// The accumulated sum at numeric point values (one per point, same order).
  template <class T>
  T evaluate(const std::vector<T>& x) const {
    if (x.size() != pts_.size()) throw std::invalid_argument("wrong number of point values");
    T total = from_rational<T>(Rational(0));
    if (acc_.empty()) return total;
    std::vector<T> inv_d;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j) {
        T d = x[i] - x[j];
        if (is_zero_value(d)) throw std::domain_error("coincident insertion points");
        inv_d.push_back(from_rational<T>(Rational(1)) / d);
      }
    for (auto& [pat, c] : acc_) {
      T t = from_rational<T>(c);
      for (std::size_t k = 0; k < pat.size(); ++k)
        if (pat[k]) t = t * power(inv_d[k], pat[k]);
      total = total + t;
    }
    return total;
  }

  RationalFunction result() const {
    if (acc_.empty()) return RationalFunction();
    std::vector<int> top(diffs_.size(), 0);
    for (auto& [pat, c] : acc_)
      for (std::size_t k = 0; k < pat.size(); ++k) top[k] = std::max(top[k], pat[k]);
    std::vector<std::map<int, Polynomial>> pows(diffs_.size());
    auto dpow = [&](std::size_t k, int e) -> const Polynomial& {
      auto it = pows[k].find(e);
      if (it == pows[k].end()) it = pows[k].emplace(e, diffs_[k].pow(e)).first;
      return it->second;
    };
    Polynomial num;
    for (auto& [pat, c] : acc_) {
      Polynomial t(c);
      for (std::size_t k = 0; k < pat.size(); ++k)
        if (top[k] - pat[k] > 0) t *= dpow(k, top[k] - pat[k]);
      num += t;
    }
    RationalFunction r(num);
    for (std::size_t k = 0; k < diffs_.size(); ++k)
      if (top[k] > 0) r *= RationalFunction::power_of(diffs_[k], -top[k]);
    return r;
  }

 private:
  struct Leg {
    int ins;
    int k;
  };

  std::size_t pair_index(int i, int j) const {
    const std::size_t n = pts_.size();
    auto a = static_cast<std::size_t>(i), b = static_cast<std::size_t>(j);
    return a * n - a * (a + 1) / 2 + (b - a - 1);
  }

  void bump(const std::vector<int>& pat, const Rational& c) {
    auto [it, fresh] = acc_.try_emplace(pat, c);
    if (!fresh) {
      it->second += c;
      if (sgn(it->second) == 0) acc_.erase(it);
    }
  }

  void match(const Rational& c) {
    std::size_t a = 0;
    while (a < legs_.size() && used_[a]) ++a;
    if (a == legs_.size()) {
      bump(pattern_, c);
      return;
    }
    used_[a] = true;
    for (std::size_t b = a + 1; b < legs_.size(); ++b) {
      if (used_[b] || legs_[b].ins == legs_[a].ins) continue;
      int p = legs_[a].k, q = legs_[b].k;
      Rational w = factorial(p + q + 1) / (factorial(p) * factorial(q));
      if (p % 2) w = -w;
      std::size_t idx = pair_index(legs_[a].ins, legs_[b].ins);
      used_[b] = true;
      pattern_[idx] += p + q + 2;
      match(c * w);
      pattern_[idx] -= p + q + 2;
      used_[b] = false;
    }
    used_[a] = false;
  }

  std::vector<Polynomial> pts_;
  std::vector<Polynomial> diffs_;
  std::vector<Leg> legs_;
  std::vector<bool> used_;
  std::vector<int> pattern_;
  std::map<std::vector<int>, Rational> acc_;
};

}  // namespace detail

/// Genus-zero correlation function <1, Y(v_1, y_1) ... Y(v_n, y_n) 1> as a rational function.
inline CorrelationForm npoint0(const std::vector<Insertion>& ins) {
  std::vector<Polynomial> pts;
  std::vector<const FockVector*> states;
  for (auto& i : ins) {
    pts.push_back(i.point);
    states.push_back(&i.state);
  }
  detail::WickAccumulator acc(pts);
  acc.add_states(states, Rational(1));
  return {acc.result(), insertion_weights(ins)};
}

/// The genus-zero correlation function evaluated at the given point values.
template <class T>
T npoint0_at(const std::vector<FockVector>& states, const std::vector<T>& x) {
  std::vector<Polynomial> pts;
  for (std::size_t k = 0; k < states.size(); ++k) pts.push_back(Polynomial(var("_x" + std::to_string(k + 1))));
  std::vector<const FockVector*> ptr;
  for (auto& s : states) ptr.push_back(&s);
  detail::WickAccumulator acc(pts);
  acc.add_states(ptr, Rational(1));
  return acc.template evaluate<T>(x);
}

/// Vacuum coefficient of v_1(m_1) ... v_n(m_n) 1, computed in the mode algebra.
inline Rational mode_correlator(const std::vector<FockVector>& states, const std::vector<long>& modes) {
  if (states.size() != modes.size()) throw std::invalid_argument("states and modes differ in length");
  FockVector w = FockVector::vacuum();
  for (std::size_t k = states.size(); k-- > 0;) w = vertex_mode(states[k], modes[k], w);
  return w.coeff({});
}

/// Moebius map z -> (a z + b)/(c z + d) with rational entries.
struct Mobius {
  Rational a, b, c, d;
  Rational det() const { return a * d - b * c; }
  RationalFunction apply(const RationalFunction& z) const {
    return (RationalFunction(a) * z + RationalFunction(b)) / (RationalFunction(c) * z + RationalFunction(d));
  }
};

/// Right-hand side of Moebius invariance:
/// Z(v, y) = Z(v~, gamma y), v~_k = gamma'(y_k)^{wt v_k} exp(-(c (c y_k + d)/det) L(1)) v_k.
inline CorrelationForm mobius_apply0(const std::vector<Insertion>& ins, const Mobius& g) {
  if (sgn(g.det()) == 0) throw std::invalid_argument("degenerate Moebius map");
  const std::size_t n = ins.size();
  // terms (j_1..j_n): prod_k coeff_k(j_k) * Z(L(1)^{j_k} v_k / j_k!, gamma y_k)
  std::vector<std::vector<FockVector>> lowered(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!ins[k].state.is_homogeneous()) throw std::invalid_argument("Moebius action needs homogeneous states");
    FockVector w = ins[k].state;
    for (int j = 0; !w.is_zero(); ++j) {
      lowered[k].push_back(w);
      w = Rational(1, j + 1) * virasoro_mode(1, w);
    }
  }
  std::vector<RationalFunction> images(n), prefactor(n), shift(n);
  for (std::size_t k = 0; k < n; ++k) {
    RationalFunction y(ins[k].point);
    RationalFunction cyd = RationalFunction(g.c) * y + RationalFunction(g.d);
    images[k] = g.apply(y);
    prefactor[k] = RationalFunction(g.det()) / cyd.pow(2);
    shift[k] = -(RationalFunction(g.c) * cyd) * Rational(Rational(1) / g.det());
  }
  std::vector<Var> fresh;
  std::vector<Polynomial> pts;
  for (std::size_t k = 0; k < n; ++k) {
    fresh.push_back(var("_p" + std::to_string(k + 1)));
    pts.push_back(Polynomial(fresh.back()));
  }
  RationalFunction total;
  std::vector<std::size_t> js(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) {
      std::vector<Insertion> tmp;
      RationalFunction coeff(Rational(1));
      for (std::size_t i = 0; i < n; ++i) {
        tmp.push_back({lowered[i][js[i]], pts[i]});
        coeff *= shift[i].pow(static_cast<int>(js[i]));
        coeff *= prefactor[i].pow(*ins[i].state.weight());
      }
      RationalFunction z = npoint0(tmp).value;
      for (std::size_t i = 0; i < n; ++i) z = z.substitute(fresh[i], images[i]);
      total += coeff * z;
      return;
    }
    for (std::size_t j = 0; j < lowered[k].size(); ++j) {
      js[k] = j;
      rec(k + 1);
    }
  };
  if (n == 0) return {npoint0({}).value, {}};
  rec(0);
  total.reduce();
  return {total, insertion_weights(ins)};
}

/// Kernel data for the genus-zero reduction:
/// pi_N(z, y) = 1/(z - y) - sum_r Q_r(y)/(z - A_r), Q_r the Lagrange basis on the points A.
struct ReductionKernel {
  int N = 1;
  std::vector<Rational> A;
  std::vector<std::vector<Rational>> q;  // Q_r(y) = sum_l q[r][l] y^l

  /// (1/j!) d^j Q_r evaluated at y.
  RationalFunction lagrange_derivative(std::size_t r, int j, const RationalFunction& y) const {
    RationalFunction s;
    for (std::size_t l = static_cast<std::size_t>(j); l < q[r].size(); ++l)
      if (sgn(q[r][l]) != 0) s += RationalFunction(q[r][l] * binomial(static_cast<long>(l), j)) * y.pow(static_cast<int>(l) - j);
    return s;
  }

  /// f_{N,i,j}(z, y) = (1/i!)(1/j!) d_z^i d_y^j pi_N(z, y), in closed form.
  RationalFunction coefficient(int i, int j, const RationalFunction& z, const RationalFunction& y) const {
    Rational sign = (i % 2) ? Rational(-1) : Rational(1);
    RationalFunction r = RationalFunction(sign * binomial(i + j, i)) * (z - y).pow(-1 - i - j);
    for (std::size_t s = 0; s < A.size(); ++s)
      r -= RationalFunction(sign) * (z - RationalFunction(A[s])).pow(-1 - i) * lagrange_derivative(s, j, y);
    return r;
  }

  RationalFunction pi(const RationalFunction& z, const RationalFunction& y) const { return coefficient(0, 0, z, y); }
};

inline ReductionKernel make_kernel(int N, const std::vector<Rational>& A) {
  if (N < 1) throw std::invalid_argument("kernel weight must be positive");
  if (static_cast<int>(A.size()) != 2 * N - 1) throw std::invalid_argument("kernel needs 2N-1 points");
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = i + 1; j < A.size(); ++j)
      if (A[i] == A[j]) throw std::invalid_argument("kernel points must be distinct");
  ReductionKernel k{N, A, {}};
  for (std::size_t r = 0; r < A.size(); ++r) {
    std::vector<Rational> poly{Rational(1)};
    for (std::size_t l = 0; l < A.size(); ++l) {
      if (l == r) continue;
      Rational inv = Rational(1) / (A[r] - A[l]);
      std::vector<Rational> next(poly.size() + 1);
      for (std::size_t t = 0; t < poly.size(); ++t) {
        next[t + 1] += poly[t] * inv;
        next[t] -= poly[t] * A[l] * inv;
      }
      poly = std::move(next);
    }
    k.q.push_back(std::move(poly));
  }
  return k;
}

inline int quasiprimary_weight(const FockVector& u) {
  auto w = u.weight();
  if (!w || *w < 1) throw std::invalid_argument("reduction needs a homogeneous state of positive weight");
  if (!is_quasiprimary(u)) throw std::invalid_argument("reduction needs a quasi-primary state");
  return *w;
}

/// Sum_k sum_j f_{N,i,j}(z, y_k) Z(...; u(j) v_k, y_k; ...).
inline CorrelationForm zhu_reduce0(const FockVector& u, int i, const Polynomial& z, const std::vector<Insertion>& ins,
                                   const ReductionKernel& kernel) {
  int N = quasiprimary_weight(u);
  if (N != kernel.N) throw std::invalid_argument("kernel weight does not match the inserted state");
  RationalFunction zr(z), total;
  for (std::size_t k = 0; k < ins.size(); ++k) {
    int jmax = N + ins[k].state.max_weight() - 1;
    for (int j = 0; j <= jmax; ++j) {
      FockVector uv = vertex_mode(u, j, ins[k].state);
      if (uv.is_zero()) continue;
      auto mod = ins;
      mod[k].state = uv;
      RationalFunction zf = npoint0(mod).value;
      if (zf.is_zero()) continue;
      total += kernel.coefficient(i, j, zr, RationalFunction(ins[k].point)) * zf;
    }
  }
  std::vector<std::optional<int>> w{N + i};
  auto rest = insertion_weights(ins);
  w.insert(w.end(), rest.begin(), rest.end());
  return {total, w};
}

/// Z(L(-1)^i u / i!, z; v, y), the left side of the reduction.
inline CorrelationForm zhu_lhs0(const FockVector& u, int i, const Polynomial& z, const std::vector<Insertion>& ins) {
  std::vector<Insertion> full{{translation_divided(i, u), z}};
  full.insert(full.end(), ins.begin(), ins.end());
  return npoint0(full);
}

/// sum_k sum_l (1/l!) d^l p(y_k) Z(...; u(l) v_k, y_k; ...); vanishes for deg p <= 2N-2.
inline RationalFunction ward0_check(const FockVector& u, const std::vector<Rational>& p, const std::vector<Insertion>& ins) {
  int N = quasiprimary_weight(u);
  int deg = -1;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (sgn(p[i]) != 0) deg = static_cast<int>(i);
  if (deg > 2 * N - 2) throw std::invalid_argument("Ward polynomial degree exceeds 2N-2");
  RationalFunction total;
  for (std::size_t k = 0; k < ins.size(); ++k) {
    RationalFunction y(ins[k].point);
    for (int l = 0; l <= deg; ++l) {
      RationalFunction dp;
      for (int i = l; i <= deg; ++i)
        if (sgn(p[static_cast<std::size_t>(i)]) != 0)
          dp += RationalFunction(p[static_cast<std::size_t>(i)] * binomial(i, l)) * y.pow(i - l);
      if (dp.is_zero()) continue;
      FockVector uv = vertex_mode(u, l, ins[k].state);
      if (uv.is_zero()) continue;
      auto mod = ins;
      mod[k].state = uv;
      total += dp * npoint0(mod).value;
    }
  }
  return total;
}

/// The coboundary delta(u, z) applied to the genus-zero n-point function of ins.
inline CorrelationForm coboundary0(const FockVector& u, const Polynomial& z, const std::vector<Insertion>& ins,
                                   const ReductionKernel& kernel) {
  return zhu_reduce0(u, 0, z, ins, kernel);
}

struct ChainDiagnostic {
  RationalFunction first;   // delta(u1, z1) F
  RationalFunction second;  // delta(u2, z2) delta(u1, z1) F
  RationalFunction direct;  // Z(u2, z2; u1, z1; v, y)
  std::vector<RationalFunction> ward_residuals;  // Ward combinations for u2 on the (n+1)-point data
};

/// Applies two coboundaries in turn and reports the Ward combinations that must vanish.
inline ChainDiagnostic coboundary_chain0(const FockVector& u1, const Polynomial& z1, const FockVector& u2,
                                         const Polynomial& z2, const std::vector<Insertion>& ins,
                                         const ReductionKernel& k1, const ReductionKernel& k2) {
  ChainDiagnostic d;
  d.first = coboundary0(u1, z1, ins, k1).value;
  std::vector<Insertion> ext{{u1, z1}};
  ext.insert(ext.end(), ins.begin(), ins.end());
  d.second = coboundary0(u2, z2, ext, k2).value;
  std::vector<Insertion> full{{u2, z2}};
  full.insert(full.end(), ext.begin(), ext.end());
  d.direct = npoint0(full).value;
  int N2 = quasiprimary_weight(u2);
  for (int deg = 0; deg <= 2 * N2 - 2; ++deg) {
    std::vector<Rational> p(static_cast<std::size_t>(deg) + 1);
    p.back() = 1;
    d.ward_residuals.push_back(ward0_check(u2, p, ext));
  }
  return d;
}

}  // namespace voas
