#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <map>
#include <mutex>

#include "voas/parallel.hpp"
#include "voas/sewing.hpp"

namespace voas {

/// Formal series in rho_1..rho_g (stored in sigma = rho^{1/2} half units)
/// with rational-function coefficients in the w, y, z variables.
using GenusGFunction = TruncatedSeries<RationalFunction>;

/// Names of the formal handle variables.  Handle label L has centres w<L> and w-<L>.
struct FormalHandles {
  std::vector<int> labels;

  static FormalHandles standard(int g) {
    if (g < 0) throw std::invalid_argument("negative genus");
    FormalHandles h;
    for (int a = 1; a <= g; ++a) h.labels.push_back(a);
    return h;
  }
  int genus() const { return static_cast<int>(labels.size()); }
  Var w(int a) const {
    if (a == 0 || std::abs(a) > genus()) throw std::out_of_range("handle index out of range");
    int label = labels[static_cast<std::size_t>(std::abs(a) - 1)];
    return var((a > 0 ? "w" : "w-") + std::to_string(label));
  }
  /// The configuration with handle a (1-based) removed.
  FormalHandles without(int a) const {
    FormalHandles h = *this;
    h.labels.erase(h.labels.begin() + (a - 1));
    return h;
  }
};

namespace detail {

inline const std::vector<DualBasisEntry>& cached_dual_basis(int k) {
  static std::mutex mu;
  static std::map<int, std::vector<DualBasisEntry>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, dual_basis(k)).first;
  return it->second;
}

struct HandleState {
  int handle;  // 1-based
  int weight;
  const DualBasisEntry* entry;
};

/// Calls fn(states) for every choice of one basis state per handle with total weight <= W.
inline void for_each_handle_tuple(int g, int W, const std::function<void(const std::vector<HandleState>&)>& fn) {
  std::vector<HandleState> cur;
  std::function<void(int, int)> rec = [&](int a, int budget) {
    if (a > g) {
      fn(cur);
      return;
    }
    for (int k = 0; k <= budget; ++k)
      for (auto& e : cached_dual_basis(k)) {
        cur.push_back({a, k, &e});
        rec(a + 1, budget - k);
        cur.pop_back();
      }
  };
  rec(1, W);
}

inline std::vector<std::vector<HandleState>> handle_tuples(int g, int W) {
  std::vector<std::vector<HandleState>> out;
  for_each_handle_tuple(g, W, [&](const std::vector<HandleState>& t) { out.push_back(t); });
  return out;
}

inline std::vector<int> exponents_of(const std::vector<HandleState>& t, std::size_t g) {
  std::vector<int> e(g, 0);
  for (auto& s : t) e[static_cast<std::size_t>(s.handle - 1)] = 2 * s.weight;
  return e;
}

/// b at w_a and its dual at w_{-a} for each handle, appended after the given insertions.
inline std::vector<Insertion> with_handles(const FormalHandles& h, const std::vector<Insertion>& ins, const std::vector<HandleState>& t) {
  std::vector<Insertion> out = ins;
  for (auto& s : t) {
    out.push_back({s.entry->b, Polynomial(h.w(s.handle))});
    out.push_back({s.entry->bbar, Polynomial(h.w(-s.handle))});
  }
  return out;
}

inline Var point_variable(const Polynomial& p) {
  auto vs = p.variables();
  if (vs.size() != 1 || !(Polynomial(*vs.begin()) == p)) throw std::invalid_argument("insertion point must be a single variable");
  return *vs.begin();
}

inline RationalFunction eval_poly(const std::vector<Rational>& p, const RationalFunction& x, int derivative = 0) {
  // (1/d!) d^d p at x
  RationalFunction s;
  for (std::size_t i = static_cast<std::size_t>(derivative); i < p.size(); ++i)
    if (sgn(p[i]) != 0) s += RationalFunction(p[i] * binomial(static_cast<long>(i), derivative)) * x.pow(static_cast<int>(i) - derivative);
  return s;
}

inline int poly_degree(const std::vector<Rational>& p) {
  int d = -1;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (sgn(p[i]) != 0) d = static_cast<int>(i);
  return d;
}

}  // namespace detail

/// Sum over handle basis tuples of the genus-zero function with b at w_a and
/// rho_a^{wt b} bbar at w_{-a}, truncated at rho-order W.
inline GenusGFunction npoint_g(const FormalHandles& h, const std::vector<Insertion>& ins, int W) {
  if (W < 0) throw std::invalid_argument("negative weight cutoff");
  const std::size_t g = static_cast<std::size_t>(h.genus());
  GenusGFunction out = GenusGFunction::with_rho_cutoff(g, W);
  auto tuples = detail::handle_tuples(h.genus(), W);
  std::vector<RationalFunction> values(tuples.size());
  parallel_for(tuples.size(), [&](std::size_t k) { values[k] = npoint0(detail::with_handles(h, ins, tuples[k])).value; });
  for (std::size_t k = 0; k < tuples.size(); ++k) out.add_term(detail::exponents_of(tuples[k], g), values[k]);
  return out;
}

inline GenusGFunction partition_g(const FormalHandles& h, int W) { return npoint_g(h, {}, W); }

/// Attaches handles one at a time in the given order (default 1..g) and then
/// evaluates; the insertion order of the basis pairs follows the attachment order.
inline GenusGFunction level_raise(const FormalHandles& h, const std::vector<Insertion>& ins, int W, std::vector<int> order = {}) {
  if (W < 0) throw std::invalid_argument("negative weight cutoff");
  const int g = h.genus();
  if (order.empty())
    for (int a = 1; a <= g; ++a) order.push_back(a);
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expect(static_cast<std::size_t>(g));
    std::iota(expect.begin(), expect.end(), 1);
    if (sorted != expect) throw std::invalid_argument("handle order must be a permutation of 1..g");
  }
  struct Partial {
    std::vector<int> e;
    std::vector<Insertion> ins;
  };
  std::vector<Partial> cur{{std::vector<int>(static_cast<std::size_t>(g), 0), ins}};
  for (int a : order) {
    std::vector<Partial> next;
    for (auto& p : cur) {
      int used = 0;
      for (int x : p.e) used += x / 2;
      for (int k = 0; k <= W - used; ++k)
        for (auto& d : detail::cached_dual_basis(k)) {
          Partial q = p;
          q.e[static_cast<std::size_t>(a - 1)] = 2 * k;
          q.ins.push_back({d.b, Polynomial(h.w(a))});
          q.ins.push_back({d.bbar, Polynomial(h.w(-a))});
          next.push_back(std::move(q));
        }
    }
    cur = std::move(next);
  }
  GenusGFunction out = GenusGFunction::with_rho_cutoff(static_cast<std::size_t>(g), W);
  for (auto& p : cur) out.add_term(p.e, npoint0(p.ins).value);
  return out;
}

/// rho_a := 0 followed by removal of the handle variable.
inline GenusGFunction degenerate(const GenusGFunction& f, int a) {
  return f.set_zero(static_cast<std::size_t>(a - 1)).drop_variable(static_cast<std::size_t>(a - 1));
}

/// Res_a^l: sum over tuples with u(l) applied to the state at w_a (a signed).
inline GenusGFunction residue_g(const FormalHandles& h, const FockVector& u, int l, int a, const std::vector<Insertion>& ins, int W) {
  int N = quasiprimary_weight(u);
  if (l < 0 || l > 2 * N - 2) throw std::out_of_range("residue index out of range");
  if (a == 0 || std::abs(a) > h.genus()) throw std::out_of_range("handle index out of range");
  const std::size_t g = static_cast<std::size_t>(h.genus());
  GenusGFunction out = GenusGFunction::with_rho_cutoff(g, W);
  const std::size_t pos = ins.size() + 2 * static_cast<std::size_t>(std::abs(a) - 1) + (a < 0 ? 1 : 0);
  auto tuples = detail::handle_tuples(h.genus(), W);
  std::vector<RationalFunction> values(tuples.size());
  parallel_for(tuples.size(), [&](std::size_t k) {
    auto full = detail::with_handles(h, ins, tuples[k]);
    full[pos].state = vertex_mode(u, l, full[pos].state);
    if (!full[pos].state.is_zero()) values[k] = npoint0(full).value;
  });
  for (std::size_t k = 0; k < tuples.size(); ++k) out.add_term(detail::exponents_of(tuples[k], g), values[k]);
  return out;
}

namespace detail {

/// Pointwise tuple sum: for each handle tuple, edit(states) may modify the
/// state list (returning false to skip) before the correlator is evaluated.
template <class T, class Edit>
TruncatedSeries<T> tuple_sum_at(const FormalHandles& h, const std::vector<Insertion>& ins, int W, const std::map<Var, T>& point,
                                Edit&& edit) {
  if (W < 0) throw std::invalid_argument("negative weight cutoff");
  const std::size_t g = static_cast<std::size_t>(h.genus());
  std::vector<T> x;
  for (auto& i : ins) x.push_back(i.point.template evaluate<T>(point));
  for (int a = 1; a <= h.genus(); ++a) {
    x.push_back(point.at(h.w(a)));
    x.push_back(point.at(h.w(-a)));
  }
  auto tuples = handle_tuples(h.genus(), W);
  std::vector<T> values(tuples.size(), from_rational<T>(Rational(0)));
  parallel_for(tuples.size(), [&](std::size_t k) {
    std::vector<FockVector> st;
    for (auto& i : ins) st.push_back(i.state);
    for (auto& hs : tuples[k]) {
      st.push_back(hs.entry->b);
      st.push_back(hs.entry->bbar);
    }
    if (edit(st)) values[k] = npoint0_at<T>(st, x);
  });
  TruncatedSeries<T> out = TruncatedSeries<T>::with_rho_cutoff(g, W);
  for (std::size_t k = 0; k < tuples.size(); ++k) out.add_term(exponents_of(tuples[k], g), values[k]);
  return out;
}

}  // namespace detail

/// npoint_g with every coefficient evaluated at the given point values (w's and insertion variables).
template <class T>
TruncatedSeries<T> npoint_g_at(const FormalHandles& h, const std::vector<Insertion>& ins, int W, const std::map<Var, T>& point) {
  return detail::tuple_sum_at<T>(h, ins, W, point, [](std::vector<FockVector>&) { return true; });
}

/// residue_g evaluated at the given point values.
template <class T>
TruncatedSeries<T> residue_g_at(const FormalHandles& h, const FockVector& u, int l, int a, const std::vector<Insertion>& ins, int W,
                                const std::map<Var, T>& point) {
  int N = quasiprimary_weight(u);
  if (l < 0 || l > 2 * N - 2) throw std::out_of_range("residue index out of range");
  if (a == 0 || std::abs(a) > h.genus()) throw std::out_of_range("handle index out of range");
  const std::size_t pos = ins.size() + 2 * static_cast<std::size_t>(std::abs(a) - 1) + (a < 0 ? 1 : 0);
  return detail::tuple_sum_at<T>(h, ins, W, point, [&](std::vector<FockVector>& st) {
    st[pos] = vertex_mode(u, l, st[pos]);
    return !st[pos].is_zero();
  });
}

/// Sum of a numeric series at the given rho values.
inline Complex sum_at_rho(const TruncatedSeries<Complex>& f, const std::vector<Complex>& rho) {
  Complex s(0);
  for (auto& [e, c] : f.terms()) {
    Complex m = c;
    for (std::size_t a = 0; a < e.size(); ++a) {
      if (e[a] % 2) throw std::domain_error("half-integer rho power in a genus-g function");
      m *= power(rho[a], e[a] / 2);
    }
    s += m;
  }
  return s;
}

/// The Moebius-generator residual D^p_y F + sum_k (1/2) p''(y_k) F(..., L(1) v_k, ...), p of degree <= 2.
inline GenusGFunction mobius_check_g(const FormalHandles& h, const std::vector<Rational>& p, const std::vector<Insertion>& ins, int W) {
  if (detail::poly_degree(p) > 2) throw std::invalid_argument("Moebius generator needs deg p <= 2");
  const int g = h.genus();
  GenusGFunction F = npoint_g(h, ins, W);
  GenusGFunction out = GenusGFunction::with_rho_cutoff(static_cast<std::size_t>(g), W);
  std::vector<Var> ys;
  std::vector<int> wts;
  for (auto& i : ins) {
    ys.push_back(detail::point_variable(i.point));
    auto w = i.state.weight();
    if (!w) throw std::invalid_argument("Moebius check needs homogeneous insertions");
    wts.push_back(*w);
  }
  for (auto& [e, c] : F.terms()) {
    RationalFunction acc;
    for (int a = 1; a <= g; ++a)
      for (int s : {a, -a}) {
        RationalFunction wa(h.w(s));
        acc += detail::eval_poly(p, wa) * c.derivative(h.w(s));
        acc += detail::eval_poly(p, wa, 1) * c * frac(e[static_cast<std::size_t>(a - 1)], 2);
        // (1/2) p''(w_s) rho_a d/dw_{-s} raises the rho_a order by one
        RationalFunction cross = detail::eval_poly(p, wa, 2) * c.derivative(h.w(-s));
        if (!cross.is_zero()) {
          auto e2 = e;
          e2[static_cast<std::size_t>(a - 1)] += 2;
          out.add_term(e2, cross);
        }
      }
    for (std::size_t k = 0; k < ins.size(); ++k) {
      RationalFunction y(ys[k]);
      acc += detail::eval_poly(p, y) * c.derivative(ys[k]);
      acc += detail::eval_poly(p, y, 1) * c * Rational(wts[k]);
    }
    out.add_term(e, acc);
  }
  for (std::size_t k = 0; k < ins.size(); ++k) {
    RationalFunction half_pp = detail::eval_poly(p, RationalFunction(ys[k]), 2);
    if (half_pp.is_zero()) continue;
    FockVector l1 = virasoro_mode(1, ins[k].state);
    if (l1.is_zero()) continue;
    auto mod = ins;
    mod[k].state = l1;
    GenusGFunction Fl1 = npoint_g(h, mod, W);
    for (auto& [e, c] : Fl1.terms()) out.add_term(e, half_pp * c);
  }
  return out;
}

/// p_a^l = (-1)^{N+1} rho_a^{N-1-l} (1/(2N-2-l)!) p^{(2N-2-l)}(w_{-a}) - (1/l!) p^{(l)}(w_a):
/// returns the two rational coefficients; the first carries rho_a^{N-1-l}.
inline std::pair<RationalFunction, RationalFunction> ward_coefficients(const FormalHandles& h, const std::vector<Rational>& p, int N,
                                                                       int a, int l) {
  Rational sign((N % 2) ? 1 : -1);
  return {detail::eval_poly(p, RationalFunction(h.w(-a)), 2 * N - 2 - l) * sign, -detail::eval_poly(p, RationalFunction(h.w(a)), l)};
}

/// sum_a sum_l p_a^l Res_a^l F - sum_k sum_l (1/l!) p^{(l)}(y_k) F(..., u(l) v_k, ...), through rho-order W.
inline GenusGFunction ward_g_check(const FormalHandles& h, const FockVector& u, const std::vector<Rational>& p,
                                   const std::vector<Insertion>& ins, int W) {
  int N = quasiprimary_weight(u);
  if (detail::poly_degree(p) > 2 * N - 2) throw std::invalid_argument("Ward polynomial degree exceeds 2N-2");
  const int g = h.genus();
  const int Wres = W + N - 1;  // rho^{N-1-l} can lower the order by N-1
  GenusGFunction out = GenusGFunction::with_rho_cutoff(static_cast<std::size_t>(g), Wres);
  for (int a = 1; a <= g; ++a)
    for (int l = 0; l <= 2 * N - 2; ++l) {
      auto [shifted_coef, plain_coef] = ward_coefficients(h, p, N, a, l);
      if (shifted_coef.is_zero() && plain_coef.is_zero()) continue;
      GenusGFunction res = residue_g(h, u, l, a, ins, Wres);
      std::vector<int> shift(static_cast<std::size_t>(g), 0);
      shift[static_cast<std::size_t>(a - 1)] = 2 * (N - 1 - l);
      if (!shifted_coef.is_zero()) out += res.shifted(shift) * shifted_coef;
      if (!plain_coef.is_zero()) out += res * plain_coef;
    }
  out = out.truncated(2 * W);
  for (std::size_t k = 0; k < ins.size(); ++k) {
    RationalFunction y(ins[k].point);
    for (int l = 0; l <= 2 * N - 2; ++l) {
      RationalFunction dp = detail::eval_poly(p, y, l);
      if (dp.is_zero()) continue;
      FockVector uv = vertex_mode(u, l, ins[k].state);
      if (uv.is_zero()) continue;
      auto mod = ins;
      mod[k].state = uv;
      out -= npoint_g(h, mod, W) * dp;
    }
  }
  return out;
}

/// Coefficients evaluated at a rational point.
inline TruncatedSeries<Rational> evaluate_series(const GenusGFunction& f, const std::map<Var, Rational>& point) {
  return f.map<Rational>([&](const RationalFunction& c) { return c.evaluate<Rational>(point); });
}

/// Numeric value at given rho values.
inline Complex evaluate_series(const GenusGFunction& f, const std::map<Var, Complex>& point, const std::vector<Complex>& rho) {
  Complex s(0);
  for (auto& [e, c] : f.terms()) {
    Complex m = c.evaluate<Complex>(point);
    for (std::size_t a = 0; a < e.size(); ++a) {
      if (e[a] % 2) throw std::domain_error("half-integer rho power in a genus-g function");
      m *= power(rho[a], e[a] / 2);
    }
    s += m;
  }
  return s;
}

/// Rational sample data for the exact (sewing-series) form of the genus-g reduction.
struct ZhuSample {
  std::map<Var, Rational> point;  // values for w_{+-a} and all insertion variables
  Rational z;
  std::vector<Rational> A;  // kernel points, away from the handle discs
};

struct ZhuGReport {
  TruncatedSeries<Rational> lhs, rhs;
  bool exact_match = false;
};

/// Z^{(g)}(L(-1)^i u / i!, z; v, y)
inline GenusGFunction zhu_lhs_g(const FormalHandles& h, const FockVector& u, int i, const Polynomial& z, const std::vector<Insertion>& ins,
                                int W) {
  std::vector<Insertion> full{{translation_divided(i, u), z}};
  full.insert(full.end(), ins.begin(), ins.end());
  return npoint_g(h, full, W);
}

/// Right side of the genus-g reduction with Psi and Theta taken as exact
/// rho-series from the sewing formulas, evaluated at the sample point.
inline TruncatedSeries<Rational> zhu_rhs_g(const FormalHandles& h, const FockVector& u, int i, const std::vector<Insertion>& ins, int W,
                                           const ZhuSample& s) {
  const int N = quasiprimary_weight(u);
  const int g = h.genus();
  const int half = 2 * W + 2 * N - 2;
  ExactSchottkyConfig cfg;
  for (int a = 1; a <= g; ++a) cfg.handles.push_back({s.point.at(h.w(a)), s.point.at(h.w(-a)), Rational(0)});
  const int modes = std::max(2 * N + W, half + 1);
  SewingSystem<SeriesSigma<Rational>> sew(cfg, BersKernelT<Rational>(N, s.A), SeriesSigma<Rational>{static_cast<std::size_t>(g), half},
                                          modes);
  const int K = half / (2 * N);
  TruncatedSeries<Rational> out(static_cast<std::size_t>(g), half);
  for (int a = 1; a <= g; ++a)
    for (int l = 0; l <= 2 * N - 2; ++l) {
      auto res = residue_g_at<Rational>(h, u, l, a, ins, W + N - 1, s.point);
      if (res.is_zero()) continue;
      out += sew.theta(a, l, s.z, i, K) * res;
    }
  for (std::size_t k = 0; k < ins.size(); ++k) {
    Rational y = s.point.at(detail::point_variable(ins[k].point));
    int jmax = N + ins[k].state.max_weight() - 1;
    for (int j = 0; j <= jmax; ++j) {
      FockVector uv = vertex_mode(u, j, ins[k].state);
      if (uv.is_zero()) continue;
      auto mod = ins;
      mod[k].state = uv;
      auto f = npoint_g_at<Rational>(h, mod, W, s.point).truncated(half);
      if (f.is_zero()) continue;
      out += sew.psi(s.z, y, i, j, K) * f;
    }
  }
  return out.truncated(2 * W);
}

inline ZhuGReport zhu_check_g(const FormalHandles& h, const FockVector& u, int i, const std::vector<Insertion>& ins, int W,
                              const ZhuSample& s) {
  ZhuGReport r;
  Var zv = var("z");
  auto pt = s.point;
  pt[zv] = s.z;
  std::vector<Insertion> full{{translation_divided(i, u), Polynomial(zv)}};
  full.insert(full.end(), ins.begin(), ins.end());
  r.lhs = npoint_g_at<Rational>(h, full, W, pt);
  r.rhs = zhu_rhs_g(h, u, i, ins, W, s);
  r.exact_match = r.lhs == r.rhs;
  return r;
}

/// Numeric sample for the Poincare-series form of the reduction.
struct ZhuNumericSample {
  SchottkyConfig config;
  std::map<Var, Complex> point;  // insertion variables (w values come from config)
  Complex z;
  std::vector<Complex> A;
  int max_word_len = 6;
};

struct ZhuNumericReport {
  Complex lhs, rhs;
  double relative_error = 0;
  double tail = 0;
};

/// LHS and RHS of the reduction (i = 0) at numeric rho, with Psi and Theta from the Poincare series.
inline ZhuNumericReport zhu_check_g_numeric(const FormalHandles& h, const FockVector& u, const std::vector<Insertion>& ins, int W,
                                            const ZhuNumericSample& s) {
  const int N = quasiprimary_weight(u);
  const int g = h.genus();
  if (s.config.genus() != g) throw std::invalid_argument("sample genus does not match the handles");
  validate(s.config);
  auto pt = s.point;
  std::vector<Complex> rho;
  for (int a = 1; a <= g; ++a) {
    pt[h.w(a)] = s.config.w(a);
    pt[h.w(-a)] = s.config.w(-a);
    rho.push_back(s.config.rho(a));
  }
  Var zv = var("z");
  auto ptz = pt;
  ptz[zv] = s.z;
  ZhuNumericReport r;
  std::vector<Insertion> full{{u, Polynomial(zv)}};
  full.insert(full.end(), ins.begin(), ins.end());
  r.lhs = sum_at_rho(npoint_g_at<Complex>(h, full, W, ptz), rho);
  BersKernel k(N, s.A);
  auto words = group_words(s.config, s.max_word_len);
  r.rhs = 0;
  for (int a = 1; a <= g; ++a) {
    auto ex = theta_extract(k, s.config, words, a, s.z);
    for (int l = 0; l <= 2 * N - 2; ++l) {
      auto res = residue_g_at<Complex>(h, u, l, a, ins, W + N - 1, pt);
      if (res.is_zero()) continue;
      r.rhs += ex.theta[static_cast<std::size_t>(l)] * sum_at_rho(res, rho);
    }
  }
  for (std::size_t kk = 0; kk < ins.size(); ++kk) {
    Complex y = pt.at(detail::point_variable(ins[kk].point));
    int jmax = N + ins[kk].state.max_weight() - 1;
    for (int j = 0; j <= jmax; ++j) {
      FockVector uv = vertex_mode(u, j, ins[kk].state);
      if (uv.is_zero()) continue;
      auto mod = ins;
      mod[kk].state = uv;
      auto psi = psi_poincare(k, s.config, words, s.z, y, j);
      r.tail = std::max(r.tail, psi.tail);
      r.rhs += psi.value * sum_at_rho(npoint_g_at<Complex>(h, mod, W, pt), rho);
    }
  }
  r.relative_error = std::abs(r.lhs - r.rhs) / std::max(std::abs(r.lhs), 1e-300);
  return r;
}

/// delta(u, z) applied to the genus-g n-point data: the reduction right side.
inline TruncatedSeries<Rational> coboundary_g(const FormalHandles& h, const FockVector& u, const std::vector<Insertion>& ins, int W,
                                              const ZhuSample& s) {
  return zhu_rhs_g(h, u, 0, ins, W, s);
}

struct ChainDiagnosticG {
  TruncatedSeries<Rational> first;   // delta(u1, z1) F
  TruncatedSeries<Rational> second;  // delta(u2, z2) applied to the (n+1)-point data
  TruncatedSeries<Rational> direct;  // Z(u2, z2; u1, z1; v, y)
  std::vector<TruncatedSeries<Rational>> ward_residuals;
};

/// Two coboundaries in turn; z1 is taken from s.point at variable z1, z2 from s.z.
inline ChainDiagnosticG coboundary_chain_g(const FormalHandles& h, const FockVector& u1, const Polynomial& z1, const FockVector& u2,
                                           const std::vector<Insertion>& ins, int W, const ZhuSample& s) {
  ChainDiagnosticG d;
  ZhuSample s1 = s;
  s1.z = s.point.at(detail::point_variable(z1));
  d.first = coboundary_g(h, u1, ins, W, s1);
  std::vector<Insertion> ext{{u1, z1}};
  ext.insert(ext.end(), ins.begin(), ins.end());
  d.second = coboundary_g(h, u2, ext, W, s);
  Var zv = var("z");
  auto pt = s.point;
  pt[zv] = s.z;
  std::vector<Insertion> full{{u2, Polynomial(zv)}};
  full.insert(full.end(), ext.begin(), ext.end());
  d.direct = npoint_g_at<Rational>(h, full, W, pt);
  int N2 = quasiprimary_weight(u2);
  for (int deg = 0; deg <= 2 * N2 - 2; ++deg) {
    std::vector<Rational> p(static_cast<std::size_t>(deg) + 1);
    p.back() = 1;
    d.ward_residuals.push_back(evaluate_series(ward_g_check(h, u2, p, ext, W), s.point));
  }
  return d;
}

}  // namespace voas
