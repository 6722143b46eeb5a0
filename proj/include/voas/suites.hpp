#pragma once

#include <functional>
#include <optional>
#include <random>

#include "voas/genus_g.hpp"
#include "voas/io.hpp"

namespace voas {

struct CheckResult {
  std::string check;
  double residual_norm = 0;  // exact checks: number of failing cases
  double tolerance = 0;
  bool pass = false;
};

struct SuiteOptions {
  std::optional<SchottkyConfig> config;  // numeric geometry; a default genus-2 one otherwise
  unsigned seed = 1;
};

inline Json to_json(const CheckResult& c) {
  return {{"check", c.check}, {"residual_norm", format_double(c.residual_norm)}, {"tolerance", format_double(c.tolerance)}, {"pass", c.pass}};
}

namespace suite_detail {

inline CheckResult exact(std::string name, int failures) { return {std::move(name), double(failures), 0.0, failures == 0}; }
inline CheckResult numeric(std::string name, double residual, double tol) { return {std::move(name), residual, tol, residual < tol}; }

inline FockVector A() { return heisenberg_generator(); }
inline FockVector W() { return conformal_vector(); }
inline Polynomial P(const std::string& n) { return Polynomial(var(n)); }
inline std::string name_of(const FockVector& u) { return u == A() ? "a" : (u == W() ? "omega" : u.str()); }

/// Lists of basis states with total weight <= max_weight and 1..max_n insertions at y1, y2, ...
inline std::vector<std::vector<Insertion>> insertion_lists(int max_weight, int max_n, const std::vector<FockVector>& pool) {
  std::vector<std::vector<Insertion>> out;
  std::vector<std::size_t> idx;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (!idx.empty()) {
      std::vector<Insertion> ins;
      for (std::size_t k = 0; k < idx.size(); ++k) ins.push_back({pool[idx[k]], P("y" + std::to_string(k + 1))});
      out.push_back(ins);
    }
    if (static_cast<int>(idx.size()) == max_n) return;
    for (std::size_t j = from; j < pool.size(); ++j) {
      int w = *pool[j].weight();
      if (w > left) continue;
      idx.push_back(j);
      rec(j, left - w);
      idx.pop_back();
    }
  };
  rec(0, max_weight);
  return out;
}

inline std::vector<FockVector> basis_pool(int max_weight) {
  std::vector<FockVector> pool;
  for (int k = 1; k <= max_weight; ++k)
    for (auto& b : basis_states(k)) pool.push_back(b);
  return pool;
}

inline std::vector<FockVector> states_up_to(int w) {
  std::vector<FockVector> out;
  for (int k = 0; k <= w; ++k)
    for (auto& b : basis_states(k)) out.push_back(b);
  return out;
}

inline std::vector<Rational> monomial(int d) {
  std::vector<Rational> p(static_cast<std::size_t>(d) + 1);
  p.back() = 1;
  return p;
}

inline SchottkyConfig default_numeric() {
  SchottkyConfig cfg;
  cfg.handles = {{Complex(1, 0), Complex(-1, 0), Complex(6e-5, 3e-5)}, {Complex(0.4, 1.5), Complex(-0.5, -1.2), Complex(-5e-5, 4e-5)}};
  cfg.max_word_len = 6;
  return cfg;
}

/// Kernel points away from the default handle discs.
inline std::vector<Complex> outer_points() { return {Complex(0.1, 0.2), Complex(3, 0.5), Complex(-2.5, 0.7)}; }

inline double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

inline bool series_zero(const GenusGFunction& f) {
  for (auto& [e, c] : f.terms())
    if (!c.is_zero()) return false;
  return true;
}

inline bool series_same(const GenusGFunction& a, const GenusGFunction& b) { return series_zero(a - b); }

/// Rational sample point for genus-g exact checks.
inline ZhuSample rational_sample(int g, int t) {
  auto h = FormalHandles::standard(g);
  ZhuSample s;
  s.point[h.w(1)] = Rational(1);
  s.point[h.w(-1)] = Rational(-1);
  if (g >= 2) {
    s.point[h.w(2)] = Rational(17, 5) + frac(t, 7);
    s.point[h.w(-2)] = Rational(-7, 2) - frac(t, 11);
  }
  for (int a = 3; a <= g; ++a) {
    s.point[h.w(a)] = Rational(5 * a) + frac(t, 3);
    s.point[h.w(-a)] = Rational(-5 * a) - frac(t, 5);
  }
  s.point[var("y1")] = Rational(-2, 3) + frac(t, 13);
  s.point[var("y2")] = Rational(9, 4) + frac(t, 17);
  s.z = Rational(5, 2) - frac(t, 19);
  s.A = {Rational(1, 10), Rational(13, 3), Rational(-9, 4)};
  return s;
}

}  // namespace suite_detail

// ---- genus zero ----

inline std::vector<CheckResult> suite_zhu0(const SuiteOptions&) {
  using namespace suite_detail;
  std::vector<CheckResult> out;
  auto lists = insertion_lists(4, 3, basis_pool(4));
  for (auto& [u, pts] : std::vector<std::pair<FockVector, std::vector<Rational>>>{{A(), {Rational(0)}}, {W(), {0, 1, 2}}}) {
    auto k = make_kernel(*u.weight(), pts);
    for (int i = 0; i <= 2; ++i) {
      int bad = 0;
      for (auto& ins : lists)
        if (!zhu_lhs0(u, i, P("z"), ins).value.equals(zhu_reduce0(u, i, P("z"), ins, k).value)) ++bad;
      out.push_back(exact("zhu0/u=" + name_of(u) + "/i=" + std::to_string(i), bad));
    }
  }
  return out;
}

inline std::vector<CheckResult> suite_ward0(const SuiteOptions&) {
  using namespace suite_detail;
  std::vector<CheckResult> out;
  auto lists = insertion_lists(4, 3, basis_pool(4));
  for (auto& u : {A(), W()}) {
    int N = *u.weight();
    for (int d = 0; d <= 2 * N - 2; ++d) {
      int bad = 0;
      for (auto& ins : lists)
        if (!ward0_check(u, monomial(d), ins).is_zero()) ++bad;
      out.push_back(exact("ward0/u=" + name_of(u) + "/p=y^" + std::to_string(d), bad));
    }
  }
  return out;
}

inline std::vector<CheckResult> suite_kernel_independence(const SuiteOptions&) {
  using namespace suite_detail;
  std::vector<CheckResult> out;
  auto lists = insertion_lists(4, 3, basis_pool(4));
  struct Case {
    FockVector u;
    std::vector<Rational> s1, s2;
  };
  for (auto& c : {Case{W(), {0, 1, 2}, {-1, 3, 7}}, Case{A(), {0}, {-1}}}) {
    auto k1 = make_kernel(*c.u.weight(), c.s1), k2 = make_kernel(*c.u.weight(), c.s2);
    int bad = 0;
    for (int i = 0; i <= 2; ++i)
      for (auto& ins : lists)
        if (!zhu_reduce0(c.u, i, P("z"), ins, k1).value.equals(zhu_reduce0(c.u, i, P("z"), ins, k2).value)) ++bad;
    out.push_back(exact("kernel-independence/u=" + name_of(c.u), bad));
  }
  return out;
}

inline std::vector<CheckResult> suite_mobius0(const SuiteOptions& o) {
  using namespace suite_detail;
  std::vector<FockVector> qp;
  for (int k = 1; k <= 4; ++k)
    for (auto& v : quasiprimary_basis(k)) qp.push_back(v);
  auto forms = insertion_lists(4, 4, qp);
  std::mt19937 rng(o.seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  std::vector<CheckResult> out;
  int maps = 0, bad = 0;
  while (maps < 20) {
    Mobius g{frac(num(rng), den(rng)), frac(num(rng), den(rng)), frac(num(rng), den(rng)), frac(num(rng), den(rng))};
    if (sgn(g.det()) == 0) continue;
    ++maps;
    for (auto& f : forms)
      if (!mobius_apply0(f, g).value.equals(npoint0(f).value)) ++bad;
  }
  out.push_back(exact("mobius0/quasiprimary-forms=" + std::to_string(forms.size()) + "/maps=20", bad));
  return out;
}

inline std::vector<CheckResult> suite_chain(const SuiteOptions&) {
  using namespace suite_detail;
  std::vector<CheckResult> out;
  {
    auto k1 = make_kernel(1, {Rational(2)});
    auto k2 = make_kernel(2, {Rational(-1), Rational(3), Rational(1, 2)});
    std::vector<Insertion> d = {{A(), P("y1")}, {W(), P("y2")}};
    auto c = coboundary_chain0(A(), P("z1"), W(), P("z2"), d, k1, k2);
    std::vector<Insertion> ext{{A(), P("z1")}};
    ext.insert(ext.end(), d.begin(), d.end());
    int bad = !c.first.equals(npoint0(ext).value) + !c.second.equals(c.direct);
    for (auto& r : c.ward_residuals) bad += !r.is_zero();
    out.push_back(exact("chain/genus0", bad));
  }
  {
    auto h = FormalHandles::standard(1);
    auto s = rational_sample(1, 0);
    auto d = coboundary_chain_g(h, W(), P("y2"), W(), {{A(), P("y1")}}, 1, s);
    auto pt = s.point;
    int bad = !(d.first == npoint_g_at<Rational>(h, {{W(), P("y2")}, {A(), P("y1")}}, 1, pt)) + !(d.second == d.direct);
    for (auto& r : d.ward_residuals) bad += !r.is_zero();
    out.push_back(exact("chain/genus1", bad));
  }
  return out;
}

// ---- sewing ----

inline std::vector<CheckResult> suite_atilde(const SuiteOptions&) {
  using namespace suite_detail;
  std::vector<CheckResult> out;
  const int M = 6;
  for (int N : {1, 2}) {
    SchottkyConfigT<RationalFunction> cfg;
    cfg.handles = {{RationalFunction(var("w1")), RationalFunction(var("w-1")), RationalFunction(Rational(0))},
                   {RationalFunction(var("w2")), RationalFunction(var("w-2")), RationalFunction(Rational(0))}};
    std::vector<RationalFunction> Apts;
    for (int r = 0; r < 2 * N - 1; ++r) Apts.push_back(RationalFunction(frac(3 * r - 2, r + 1)));
    SewingSystem<SeriesSigma<RationalFunction>> s(cfg, BersKernelT<RationalFunction>(N, Apts), SeriesSigma<RationalFunction>{2, 64}, M);
    auto AD = multiply(s.A_matrix(M, M + 2 * N - 1), s.D_matrix(M + 2 * N - 1, M), s.policy().zero());
    auto At = s.Atilde_matrix();
    int bad = (AD.rows != At.rows || AD.cols != At.cols) ? 1 : 0;
    if (!bad)
      for (std::size_t i = 0; i < At.rows; ++i)
        for (std::size_t j = 0; j < At.cols; ++j) {
          auto d = AD(i, j) - At(i, j);
          for (auto& [e, c] : d.terms())
            if (!c.is_zero()) {
              ++bad;
              break;
            }
        }
    out.push_back(exact("atilde/N=" + std::to_string(N) + "/M=6", bad));
  }
  return out;
}

inline std::vector<CheckResult> suite_psi_crosscheck(const SuiteOptions& o) {
  using namespace suite_detail;
  auto cfg = o.config.value_or(default_numeric());
  cfg.max_word_len = 6;
  const int N = 2;
  auto Aout = outer_points();
  BersKernel k(N, Aout);
  auto words = group_words(cfg, 6);
  auto s = make_numeric_sewing(cfg, Aout, N, 8);
  std::mt19937 rng(o.seed);
  std::uniform_real_distribution<double> u(-2.5, 2.5);
  double worst = 0;
  int pairs = 0, tries = 0;
  while (pairs < 10 && tries < 10000) {
    ++tries;
    Complex z(u(rng), u(rng)), y(u(rng), u(rng));
    bool ok = std::abs(z - y) > 0.2;
    for (int a = 1; a <= cfg.genus(); ++a)
      for (int sa : {a, -a}) ok = ok && std::abs(z - cfg.w(sa)) > 0.2 && std::abs(y - cfg.w(sa)) > 0.2;
    for (auto& p : Aout) ok = ok && std::abs(z - p) > 0.2;
    if (!ok) continue;
    worst = std::max(worst, rel(s.psi(z, y, 0, 0, 8), psi_poincare(k, cfg, words, z, y).value));
    ++pairs;
  }
  std::vector<CheckResult> out;
  out.push_back(numeric("psi-crosscheck/pairs=" + std::to_string(pairs) + "/L=6/K=8", pairs == 10 ? worst : 1.0, 1e-6));
  return out;
}

inline std::vector<CheckResult> suite_theta_rank(const SuiteOptions& o) {
  using namespace suite_detail;
  auto cfg = o.config.value_or(default_numeric());
  const int N = 2, g = cfg.genus();
  BersKernel k(N, default_limit_points(cfg, N));
  auto words = group_words(cfg, 6);
  const int cols = g * (2 * N - 1);
  Eigen::MatrixXcd M(2 * cols, cols);
  for (int s = 0; s < 2 * cols; ++s) {
    Complex z = std::polar(2.5 + 0.1 * s, 0.7 * s + 0.1);
    int c = 0;
    for (int a = 1; a <= g; ++a) {
      auto ex = theta_extract(k, cfg, words, a, z);
      for (int l = 0; l < 2 * N - 1; ++l) M(s, c++) = ex.theta[static_cast<std::size_t>(l)];
    }
  }
  auto r = numeric_rank(M);
  int expected = (g - 1) * (2 * N - 1);
  std::vector<CheckResult> out;
  out.push_back(exact("theta-rank/rank=" + std::to_string(r.rank) + "/expected=" + std::to_string(expected), r.rank == expected ? 0 : 1));
  // reported as 1/gap so that smaller is better
  out.push_back({"theta-rank/singular-gap", 1.0 / r.gap, 1e-3, r.gap >= 1e3});
  return out;
}

inline std::vector<CheckResult> suite_theta_consistency(const SuiteOptions& o) {
  using namespace suite_detail;
  auto cfg = o.config.value_or(default_numeric());
  const int N = 2;
  BersKernel k(N, outer_points());
  auto words = group_words(cfg, 6);
  auto s = make_numeric_sewing(cfg, outer_points(), N, 8);
  double worst = 0;
  for (int t = 0; t < 8; ++t) {
    Complex z = std::polar(1.9 + 0.15 * t, 0.8 * t + 0.3);
    for (int a = 1; a <= cfg.genus(); ++a) {
      auto ex = theta_extract(k, cfg, words, a, z);
      for (int l = 0; l <= 2 * N - 2; ++l) worst = std::max(worst, rel(s.theta(a, l, z, 0, 8), ex.theta[static_cast<std::size_t>(l)]));
    }
  }
  return {numeric("theta-consistency/samples=8", worst, 1e-5)};
}

// ---- genus g ----

inline std::vector<CheckResult> suite_mobius_g_partition(const SuiteOptions& o) {
  using namespace suite_detail;
  std::vector<std::pair<int, int>> cases{{1, 3}, {2, 2}};
  if (o.config) cases = {{o.config->genus(), o.config->genus() <= 1 ? 3 : (o.config->genus() == 2 ? 2 : 1)}};
  std::vector<CheckResult> out;
  for (auto [g, Wc] : cases)
    for (int d = 0; d <= 2; ++d) {
      int bad = series_zero(mobius_check_g(FormalHandles::standard(g), monomial(d), {}, Wc)) ? 0 : 1;
      out.push_back(exact("mobius-g-partition/g=" + std::to_string(g) + "/W=" + std::to_string(Wc) + "/p=w^" + std::to_string(d), bad));
    }
  return out;
}

inline std::vector<CheckResult> suite_mobius_g_npoint(const SuiteOptions&) {
  using namespace suite_detail;
  struct Case {
    int g, W;
    std::vector<Insertion> ins;
    std::string label;
  };
  std::vector<Case> cases{{1, 2, {{FockVector::basis({2}), P("y1")}, {A(), P("y2")}}, "g=1/a(-2)1,a"},
                          {1, 1, {{W(), P("y1")}, {A(), P("y2")}, {A(), P("y3")}}, "g=1/omega,a,a"},
                          {2, 1, {{A(), P("y1")}, {A(), P("y2")}}, "g=2/a,a"}};
  std::vector<CheckResult> out;
  for (auto& c : cases) {
    int bad = 0;
    for (int d = 0; d <= 2; ++d) bad += !series_zero(mobius_check_g(FormalHandles::standard(c.g), monomial(d), c.ins, c.W));
    out.push_back(exact("mobius-g-npoint/" + c.label, bad));
  }
  return out;
}

inline std::vector<CheckResult> suite_degeneration(const SuiteOptions&) {
  using namespace suite_detail;
  std::vector<CheckResult> out;
  auto h2 = FormalHandles::standard(2);
  std::vector<std::pair<std::string, std::vector<Insertion>>> cases{
      {"partition", {}}, {"omega", {{W(), P("y1")}}}, {"a,a", {{A(), P("y1")}, {A(), P("y2")}}}};
  for (auto& [label, ins] : cases) {
    int bad = 0;
    for (int Wc = 0; Wc <= 2; ++Wc) {
      auto F2 = npoint_g(h2, ins, Wc);
      for (int a = 1; a <= 2; ++a) {
        auto h1 = h2.without(a);
        auto F1 = npoint_g(h1, ins, Wc);
        bad += !series_same(degenerate(F2, a), F1);
        bad += !series_same(degenerate(F1, 1), npoint_g(h1.without(1), ins, Wc));
      }
    }
    out.push_back(exact("degeneration/" + label + "/W<=2", bad));
  }
  return out;
}

inline std::vector<CheckResult> suite_ward_g(const SuiteOptions&) {
  using namespace suite_detail;
  auto h = FormalHandles::standard(1);
  std::vector<CheckResult> out;
  std::vector<std::pair<std::string, std::vector<Insertion>>> data{
      {"n=0", {}}, {"n=1/a", {{A(), P("y1")}}}, {"n=1/omega", {{W(), P("y1")}}}, {"n=1/a(-2)1", {{FockVector::basis({2}), P("y1")}}}};
  for (auto& u : {A(), W()}) {
    int N = *u.weight();
    for (auto& [label, ins] : data) {
      int bad = 0;
      for (int d = 0; d <= 2 * N - 2; ++d) bad += !series_zero(ward_g_check(h, u, monomial(d), ins, 2));
      out.push_back(exact("ward-g/g=1/W=2/u=" + name_of(u) + "/" + label, bad));
    }
  }
  return out;
}

inline std::vector<CheckResult> suite_zhu_g(const SuiteOptions& o) {
  using namespace suite_detail;
  std::vector<CheckResult> out;
  auto h = FormalHandles::standard(2);
  const FockVector u = W();
  {
    // exact in rho: sewing series for Psi and Theta, rational points, two kernel point sets
    int bad = 0, indep = 0;
    std::vector<std::vector<Insertion>> data{{}, {{A(), P("y1")}}, {{W(), P("y1")}}};
    for (int t = 0; t < 5; ++t) {
      auto s = rational_sample(2, t);
      auto s2 = s;
      s2.A = {Rational(-13, 2), Rational(5), Rational(29, 7)};
      for (auto& ins : data)
        for (int i = 0; i <= 1; ++i) {
          auto r = zhu_check_g(h, u, i, ins, 1, s);
          bad += !r.exact_match;
          indep += !(r.rhs == zhu_rhs_g(h, u, i, ins, 1, s2));
        }
    }
    out.push_back(exact("zhu-g/exact-coefficients/g=2/N=2/W=1/points=5", bad));
    out.push_back(exact("zhu-g/exact-A-independence/points=5", indep));
  }
  {
    // Poincare-series Psi and Theta at numeric rho
    ZhuNumericSample s;
    s.config = o.config.value_or(default_numeric());
    if (s.config.genus() != 2) throw ConfigError("zhu-g needs a genus-2 config");
    std::vector<std::vector<Complex>> Asets{default_limit_points(s.config, 2), outer_points()};
    std::vector<Insertion> ins{{W(), P("y1")}};
    double worst = 0, worst_indep = 0;
    for (int t = 0; t < 5; ++t) {
      s.z = std::polar(1.9 + 0.2 * t, 0.9 * t + 0.2);
      s.point[var("y1")] = std::polar(2.2 - 0.1 * t, 0.9 * t + 2.0);
      std::vector<Complex> rhs;
      for (auto& As : Asets) {
        s.A = As;
        auto r = zhu_check_g_numeric(h, u, ins, 1, s);
        worst = std::max(worst, r.relative_error);
        rhs.push_back(r.rhs);
      }
      worst_indep = std::max(worst_indep, rel(rhs[1], rhs[0]));
    }
    out.push_back(numeric("zhu-g/poincare/points=5", worst, 1e-5));
    out.push_back(numeric("zhu-g/poincare-A-independence/points=5", worst_indep, 1e-5));
  }
  return out;
}

// ---- VOA axioms ----

inline std::vector<CheckResult> suite_fock(const SuiteOptions&) {
  using namespace suite_detail;
  std::vector<CheckResult> out;
  auto all = states_up_to(5);
  {
    int bad = 0;
    for (auto& v : all) bad += !(virasoro_mode(0, v) == Rational(*v.weight()) * v);
    out.push_back(exact("fock/grading/wt<=5", bad));
  }
  {
    int bad = 0;
    for (auto& v : all) {
      bad += !(vertex_mode(v, -1, FockVector::vacuum()) == v);
      for (int n = 0; n <= 5; ++n) bad += !vertex_mode(v, n, FockVector::vacuum()).is_zero();
    }
    out.push_back(exact("fock/creativity/wt<=5", bad));
  }
  {
    int bad = 0;
    for (auto& v : all)
      for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n) {
          FockVector lhs = virasoro_mode(m, virasoro_mode(n, v)) - virasoro_mode(n, virasoro_mode(m, v));
          FockVector rhs = Rational(m - n) * virasoro_mode(m + n, v);
          if (m + n == 0) rhs += frac(m * m * m - m, 12) * central_charge() * v;
          bad += !(lhs == rhs);
        }
    bad += !(central_charge() == Rational(1));
    out.push_back(exact("fock/virasoro-bracket/C=1/wt<=5", bad));
  }
  {
    int bad = 0;
    for (Rational rho : {Rational(1), Rational(-2, 5)})
      for (auto& [u, N] : std::vector<std::pair<FockVector, int>>{{A(), 1}, {W(), 2}})
        for (int m = -3; m <= 4; ++m)
          for (auto& w : all)
            for (auto& v : all) {
              Rational lhs = pairing(vertex_mode(u, m, w), v, rho);
              Rational rhs = pairing(w, vertex_mode(u, 2 * N - 2 - m, v), rho) * power(rho, m + 1 - N) * ((N % 2) ? -1 : 1);
              bad += lhs != rhs;
            }
    out.push_back(exact("fock/pairing-adjoint/wt<=5", bad));
  }
  {
    const int K = 5;
    std::vector<std::vector<Rational>> betas = {
        {Rational(2), Rational(1, 3), Rational(-1, 2), Rational(1, 5)},
        {Rational(-1, 3), Rational(2), Rational(1, 7), Rational(0), Rational(3)},
        {Rational(1), Rational(0), Rational(1)},
    };
    int bad = 0;
    for (auto& b1 : betas)
      for (auto& b2 : betas) {
        auto b12 = compose_coordinate_changes(b1, b2, K);
        for (auto& v : all) bad += !(coordinate_change(b12, v) == coordinate_change(b1, coordinate_change(b2, v)));
      }
    out.push_back(exact("fock/coordinate-change-multiplicativity/wt<=5", bad));
  }
  return out;
}

using Suite = std::function<std::vector<CheckResult>(const SuiteOptions&)>;

inline const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> s{
      {"fock", suite_fock},
      {"zhu0", suite_zhu0},
      {"ward0", suite_ward0},
      {"kernel-independence", suite_kernel_independence},
      {"mobius0", suite_mobius0},
      {"chain", suite_chain},
      {"atilde", suite_atilde},
      {"psi-crosscheck", suite_psi_crosscheck},
      {"theta-rank", suite_theta_rank},
      {"theta-consistency", suite_theta_consistency},
      {"mobius-g-partition", suite_mobius_g_partition},
      {"mobius-g-npoint", suite_mobius_g_npoint},
      {"degeneration", suite_degeneration},
      {"ward-g", suite_ward_g},
      {"zhu-g", suite_zhu_g},
  };
  return s;
}

inline const Suite* find_suite(const std::string& name) {
  for (auto& [n, f] : suites())
    if (n == name) return &f;
  return nullptr;
}

}  // namespace voas
