#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "voas/genus_zero.hpp"

namespace voas {

/// Sewing data of one handle: (z' - w_minus)(z - w_plus) = rho.
template <class F>
struct HandleT {
  F w_plus, w_minus, rho;
};

template <class F>
struct SchottkyConfigT {
  std::vector<HandleT<F>> handles;
  int max_word_len = 6;
  int genus() const { return static_cast<int>(handles.size()); }

  /// w_a for a signed handle index a in {+-1, ..., +-g}.
  const F& w(int a) const {
    if (a == 0 || std::abs(a) > genus()) throw std::out_of_range("handle index out of range");
    return a > 0 ? handles[static_cast<std::size_t>(a - 1)].w_plus : handles[static_cast<std::size_t>(-a - 1)].w_minus;
  }
  const F& rho(int a) const { return handles.at(static_cast<std::size_t>(std::abs(a) - 1)).rho; }
};

using Handle = HandleT<Complex>;
using SchottkyConfig = SchottkyConfigT<Complex>;
using ExactHandle = HandleT<Rational>;
using ExactSchottkyConfig = SchottkyConfigT<Rational>;

/// Complex Moebius map with det normalised to 1.  Derivatives use 1/(cz+d)^2
/// directly: for long words ad - bc is lost to cancellation.
struct MobiusC {
  Complex a{1}, b{0}, c{0}, d{1};

  static MobiusC from(Complex a, Complex b, Complex c, Complex d) {
    Complex det = a * d - b * c;
    if (det == Complex(0)) throw std::invalid_argument("degenerate Moebius map");
    Complex s = std::sqrt(det);
    return {a / s, b / s, c / s, d / s};
  }
  Complex apply(Complex z) const { return (a * z + b) / (c * z + d); }
  Complex derivative(Complex z) const {
    Complex t = c * z + d;
    return Complex(1) / (t * t);
  }
  MobiusC operator*(const MobiusC& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  MobiusC inverse() const { return {d, -b, -c, a}; }
  Complex det() const { return a * d - b * c; }
};

/// z -> w_minus + rho/(z - w_plus), exact matrix (det = -rho).
inline Mobius schottky_generator(const ExactHandle& h) {
  if (sgn(h.rho) == 0) throw std::invalid_argument("degenerate handle: rho = 0");
  return Mobius{h.w_minus, Rational(h.rho - h.w_minus * h.w_plus), Rational(1), Rational(-h.w_plus)};
}

/// Numeric generator normalised to det 1.
inline MobiusC schottky_generator(const Handle& h) {
  if (h.rho == Complex(0)) throw std::invalid_argument("degenerate handle: rho = 0");
  return MobiusC::from(h.w_minus, h.rho - h.w_minus * h.w_plus, Complex(1), -h.w_plus);
}

/// Rejects configurations whose isometric discs |z - w_{+-a}| <= |rho_a|^{1/2} overlap.
inline void validate(const SchottkyConfig& cfg) {
  if (cfg.genus() < 1) throw std::invalid_argument("genus must be at least 1");
  if (cfg.max_word_len < 0) throw std::invalid_argument("negative word length");
  std::vector<std::pair<Complex, double>> discs;
  for (auto& h : cfg.handles) {
    if (h.rho == Complex(0)) throw std::invalid_argument("degenerate handle: rho = 0");
    double r = std::sqrt(std::abs(h.rho));
    discs.push_back({h.w_plus, r});
    discs.push_back({h.w_minus, r});
  }
  for (std::size_t i = 0; i < discs.size(); ++i)
    for (std::size_t j = i + 1; j < discs.size(); ++j)
      if (std::abs(discs[i].first - discs[j].first) <= discs[i].second + discs[j].second)
        throw std::invalid_argument("Schottky discs overlap; rho too large for these centres");
}

struct GroupWord {
  std::vector<int> letters;  // +-a for gamma_a^{+-1}
  MobiusC map;
};

inline std::size_t expected_word_count(int g, int L) {
  std::size_t total = 1, shell = static_cast<std::size_t>(2 * g);
  for (int k = 1; k <= L; ++k) {
    total += shell;
    shell *= static_cast<std::size_t>(2 * g - 1);
  }
  return total;
}

/// All reduced words of length <= L, shortest first.
inline std::vector<GroupWord> group_words(const SchottkyConfig& cfg, int L) {
  if (L < 0) throw std::invalid_argument("negative word length");
  std::vector<MobiusC> gens;  // slot 2(a-1) = gamma_a, 2(a-1)+1 = gamma_a^{-1}
  for (auto& h : cfg.handles) {
    MobiusC m = schottky_generator(h);
    gens.push_back(m);
    gens.push_back(m.inverse());
  }
  auto gen = [&](int letter) -> const MobiusC& {
    return gens[static_cast<std::size_t>(2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0))];
  };
  std::vector<GroupWord> out{{{}, MobiusC{}}};
  std::size_t shell_begin = 0;
  for (int len = 1; len <= L; ++len) {
    std::size_t shell_end = out.size();
    for (std::size_t i = shell_begin; i < shell_end; ++i)
      for (int a = 1; a <= cfg.genus(); ++a)
        for (int letter : {a, -a}) {
          if (!out[i].letters.empty() && out[i].letters.back() == -letter) continue;
          GroupWord w = out[i];
          w.letters.push_back(letter);
          w.map = w.map * gen(letter);
          out.push_back(std::move(w));
        }
    shell_begin = shell_end;
  }
  return out;
}

/// Attracting fixed point of a loxodromic map.
inline Complex attracting_fixed_point(const MobiusC& m) {
  // c z^2 + (d - a) z - b = 0
  Complex disc = std::sqrt((m.d - m.a) * (m.d - m.a) + 4.0 * m.b * m.c);
  Complex z1 = (m.a - m.d + disc) / (2.0 * m.c), z2 = (m.a - m.d - disc) / (2.0 * m.c);
  return std::abs(m.derivative(z1)) < std::abs(m.derivative(z2)) ? z1 : z2;
}

/// 2N-1 distinct limit points: attracting fixed points of gamma_1, ..., gamma_g, gamma_1^{-1}, ...
inline std::vector<Complex> default_limit_points(const SchottkyConfig& cfg, int N) {
  std::vector<MobiusC> cands;
  for (auto& h : cfg.handles) cands.push_back(schottky_generator(h));
  for (auto& h : cfg.handles) cands.push_back(schottky_generator(h).inverse());
  for (auto& w : group_words(cfg, 2))
    if (w.letters.size() == 2) cands.push_back(w.map);
  std::vector<Complex> pts;
  for (auto& m : cands) {
    if (static_cast<int>(pts.size()) == 2 * N - 1) break;
    Complex p = attracting_fixed_point(m);
    bool fresh = true;
    for (auto& q : pts) fresh = fresh && std::abs(p - q) > 1e-12;
    if (fresh) pts.push_back(p);
  }
  if (static_cast<int>(pts.size()) < 2 * N - 1) throw std::invalid_argument("not enough distinct limit points");
  return pts;
}

/// Lagrange basis coefficients q[r][l] on the nodes A (any field).
template <class F>
std::vector<std::vector<F>> lagrange_coefficients(const std::vector<F>& A) {
  std::vector<std::vector<F>> q;
  for (std::size_t r = 0; r < A.size(); ++r) {
    std::vector<F> poly{from_rational<F>(Rational(1))};
    for (std::size_t l = 0; l < A.size(); ++l) {
      if (l == r) continue;
      F inv = from_rational<F>(Rational(1)) / (A[r] - A[l]);
      std::vector<F> next(poly.size() + 1, from_rational<F>(Rational(0)));
      for (std::size_t t = 0; t < poly.size(); ++t) {
        next[t + 1] = next[t + 1] + poly[t] * inv;
        next[t] = next[t] - poly[t] * A[l] * inv;
      }
      poly = std::move(next);
    }
    q.push_back(std::move(poly));
  }
  return q;
}

/// The rational kernel pi_N(z, y) = 1/(z - y) prod_l (y - A_l)/(z - A_l) over a field F.
template <class F>
struct BersKernelT {
  int N = 2;
  std::vector<F> A;
  std::vector<std::vector<F>> q;

  BersKernelT() = default;
  BersKernelT(int n, std::vector<F> pts) : N(n), A(std::move(pts)) {
    if (N < 1) throw std::invalid_argument("kernel weight must be positive");
    if (static_cast<int>(A.size()) != 2 * N - 1) throw std::invalid_argument("kernel needs 2N-1 points");
    for (std::size_t i = 0; i < A.size(); ++i)
      for (std::size_t j = i + 1; j < A.size(); ++j)
        if (is_zero_value(F(A[i] - A[j]))) throw std::invalid_argument("kernel points must be distinct");
    q = lagrange_coefficients(A);
  }

  static F ipow(const F& x, int e) { return power(x, e); }

  /// (1/j!) d^j Q_r(y)
  F lagrange_derivative(std::size_t r, int j, const F& y) const {
    F s = from_rational<F>(Rational(0));
    for (std::size_t l = static_cast<std::size_t>(j); l < q[r].size(); ++l)
      s = s + q[r][l] * from_rational<F>(binomial(static_cast<long>(l), j)) * ipow(y, static_cast<int>(l) - j);
    return s;
  }

  /// Polynomial part -(1/i!)(1/j!) d_z^i d_y^j sum_r Q_r(y)/(z - A_r).
  F regular_part(int i, int j, const F& z, const F& y) const {
    std::vector<F> offsets;
    for (auto& a : A) offsets.push_back(z - a);
    return regular_part_offsets(i, j, offsets, y);
  }

  /// As regular_part, with the differences z - A_r supplied by the caller.
  F regular_part_offsets(int i, int j, const std::vector<F>& offsets, const F& y) const {
    F s = from_rational<F>(Rational(0));
    F sign = from_rational<F>(Rational((i % 2) ? -1 : 1));
    for (std::size_t r = 0; r < A.size(); ++r) {
      const F& zr = offsets[r];
      if (is_zero_value(zr)) throw std::domain_error("kernel evaluated at a limit point");
      s = s - sign * ipow(zr, -1 - i) * lagrange_derivative(r, j, y);
    }
    return s;
  }

  /// Singular part (1/i!)(1/j!) d_z^i d_y^j 1/(z - y).
  static F singular_part(int i, int j, const F& z, const F& y) {
    F zy = z - y;
    if (is_zero_value(zy)) throw std::domain_error("kernel evaluated on the diagonal");
    return from_rational<F>(Rational((i % 2) ? -1 : 1) * binomial(i + j, i)) * ipow(zy, -1 - i - j);
  }

  F derivative(int i, int j, const F& z, const F& y) const { return singular_part(i, j, z, y) + regular_part(i, j, z, y); }
  F operator()(const F& z, const F& y) const { return derivative(0, 0, z, y); }
};

using BersKernel = BersKernelT<Complex>;

inline Complex pi_g(const BersKernel& k, Complex z, Complex y) { return k(z, y); }

struct PoincareValue {
  Complex value;
  double tail = 0;  // sum of |terms| in the outermost shell
  std::vector<double> shells;
};

namespace detail {

inline const MobiusC& letter_map(const std::vector<MobiusC>& gens, int letter) {
  return gens[static_cast<std::size_t>(2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0))];
}

/// gamma^{-1} p, skipping letters that fix p: limit points are repelling for
/// the inverse letters, so applying them would only amplify rounding.
inline Complex pull_back(const std::vector<MobiusC>& gens, const GroupWord& w, Complex p) {
  for (int letter : w.letters) {
    const MobiusC& inv = letter_map(gens, -letter);
    Complex q = inv.apply(p);
    if (std::abs(q - p) <= 1e-13 * (1 + std::abs(p))) continue;
    p = q;
  }
  return p;
}

}  // namespace detail

/// Partial Poincare sum sum_gamma (1/j!) d_y^j pi(gamma z, y) gamma'(z)^N over the given words.
inline PoincareValue psi_poincare(const BersKernel& k, const SchottkyConfig& cfg, const std::vector<GroupWord>& words, Complex z,
                                  Complex y, int j = 0) {
  if (k.N < 2) throw std::invalid_argument("Poincare series needs N >= 2");
  std::vector<MobiusC> gens;
  for (auto& h : cfg.handles) {
    gens.push_back(schottky_generator(h));
    gens.push_back(gens.back().inverse());
  }
  PoincareValue out{Complex(0), 0, {}};
  std::vector<Complex> offsets(k.A.size());
  for (auto& w : words) {
    std::size_t len = w.letters.size();
    if (out.shells.size() <= len) out.shells.resize(len + 1, 0.0);
    const MobiusC& m = w.map;
    Complex gz = m.apply(z), cz = m.c * z + m.d;
    // gamma z - A_r = (z - gamma^{-1} A_r)/((c z + d)(c gamma^{-1} A_r + d))
    for (std::size_t r = 0; r < k.A.size(); ++r) {
      Complex u = detail::pull_back(gens, w, k.A[r]);
      offsets[r] = (z - u) / (cz * (m.c * u + m.d));
    }
    Complex t = (BersKernel::singular_part(0, j, gz, y) + k.regular_part_offsets(0, j, offsets, y)) * power(m.derivative(z), k.N);
    out.value += t;
    out.shells[len] += std::abs(t);
  }
  out.tail = out.shells.empty() ? 0.0 : out.shells.back();
  return out;
}

struct ThetaExtraction {
  std::vector<Complex> theta;  // Theta^l(z), l = 0..2N-2
  double holdout_residual = 0;  // relative misfit of chi at a held-out sample
  double condition = 0;
};

/// chi[gamma_a](z, y) = Psi(z, gamma_a y) gamma_a'(y)^{1-N} - Psi(z, y).
inline Complex quasi_period(const BersKernel& k, const SchottkyConfig& cfg, const std::vector<GroupWord>& words, const MobiusC& gen,
                            Complex z, Complex y) {
  Complex gy = gen.apply(y);
  return psi_poincare(k, cfg, words, z, gy).value * power(gen.derivative(y), 1 - k.N) - psi_poincare(k, cfg, words, z, y).value;
}

/// Reads Theta_{N,a}^l(z) off chi[gamma_a](z, y) = -sum_l Theta^l(z) (y - w_a)^l.
inline ThetaExtraction theta_extract(const BersKernel& k, const SchottkyConfig& cfg, const std::vector<GroupWord>& words, int a,
                                     Complex z, double radius = 0) {
  if (a < 1 || a > cfg.genus()) throw std::out_of_range("handle index out of range");
  const int n = 2 * k.N - 1;
  const Handle& h = cfg.handles[static_cast<std::size_t>(a - 1)];
  if (radius <= 0) radius = 3.0 * std::sqrt(std::abs(h.rho));
  MobiusC gen = schottky_generator(h);
  Eigen::MatrixXcd V(n, n);
  Eigen::VectorXcd rhs(n);
  const double pi = std::acos(-1.0);
  for (int s = 0; s < n; ++s) {
    Complex t = std::polar(1.0, 2 * pi * (s + 0.25) / n);
    for (int l = 0; l < n; ++l) V(s, l) = power(t, l);
    rhs(s) = quasi_period(k, cfg, words, gen, z, h.w_plus + radius * t);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(V);
  auto sv = svd.singularValues();
  ThetaExtraction out;
  out.condition = sv(0) / sv(n - 1);
  if (out.condition > 1e8) throw std::domain_error("ill-conditioned Vandermonde system; spread the y samples");
  Eigen::VectorXcd c = V.colPivHouseholderQr().solve(rhs);
  for (int l = 0; l < n; ++l) out.theta.push_back(-c(l) / std::pow(radius, l));
  Complex t = std::polar(1.0, 2 * pi * 0.6 / n);
  Complex y = h.w_plus + radius * t;
  Complex direct = quasi_period(k, cfg, words, gen, z, y), fit(0);
  for (int l = 0; l < n; ++l) fit -= out.theta[static_cast<std::size_t>(l)] * power(radius * t, l);
  out.holdout_residual = std::abs(direct - fit) / std::max(std::abs(direct), 1e-300);
  return out;
}

struct RankReport {
  std::vector<double> singular_values;
  int rank = 0;
  double gap = 0;  // s_rank / s_{rank+1}
};

/// Numeric rank of a sample matrix (columns normalised), cut at the largest singular-value gap.
inline RankReport numeric_rank(Eigen::MatrixXcd M) {
  for (int c = 0; c < M.cols(); ++c) {
    double nrm = M.col(c).norm();
    if (nrm > 0) M.col(c) /= nrm;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  auto sv = svd.singularValues();
  RankReport r;
  for (int i = 0; i < sv.size(); ++i) r.singular_values.push_back(sv(i));
  r.rank = static_cast<int>(sv.size());
  r.gap = 0;
  for (int i = 0; i + 1 < sv.size(); ++i) {
    double g = sv(i + 1) > 0 ? sv(i) / sv(i + 1) : HUGE_VAL;
    if (g > r.gap) {
      r.gap = g;
      r.rank = i + 1;
    }
  }
  return r;
}

}  // namespace voas
