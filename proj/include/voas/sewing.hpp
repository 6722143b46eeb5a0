#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <vector>

#include "voas/schottky.hpp"
#include "voas/truncated_series.hpp"

namespace voas {

/// Entries carry explicit factors sigma_a^k with sigma_a^2 = rho_a.  The two
/// policies below either evaluate sigma numerically or keep it as a formal
/// series variable.
template <class F>
struct NumericSigma {
  using Field = F;
  using Entry = F;
  std::vector<F> sigma;  // one per handle

  Entry lift(const F& c, int handle, int k) const { return c * power(sigma.at(static_cast<std::size_t>(handle - 1)), k); }
  Entry lift(const F& c, int h1, int k1, int h2, int k2) const { return lift(lift(c, h1, k1), h2, k2); }
  Entry constant(const F& c) const { return c; }
  Entry zero() const { return from_rational<F>(Rational(0)); }
  Entry shift(const Entry& e, int handle, int k) const { return lift(e, handle, k); }
};

template <class F>
struct SeriesSigma {
  using Field = F;
  using Entry = TruncatedSeries<F>;
  std::size_t genus = 1;
  int half_cutoff = 0;

  Entry lift(const F& c, int handle, int k) const {
    std::vector<int> e(genus, 0);
    e.at(static_cast<std::size_t>(handle - 1)) += k;
    return Entry::monomial(genus, half_cutoff, e, c);
  }
  Entry lift(const F& c, int h1, int k1, int h2, int k2) const {
    std::vector<int> e(genus, 0);
    e.at(static_cast<std::size_t>(h1 - 1)) += k1;
    e.at(static_cast<std::size_t>(h2 - 1)) += k2;
    return Entry::monomial(genus, half_cutoff, e, c);
  }
  Entry constant(const F& c) const { return Entry::constant(genus, half_cutoff, c); }
  Entry zero() const { return Entry(genus, half_cutoff); }
  Entry shift(const Entry& e, int handle, int k) const {
    std::vector<int> s(genus, 0);
    s.at(static_cast<std::size_t>(handle - 1)) = k;
    return e.shifted(s);
  }
};

template <class E>
struct DenseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<E> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c, const E& zero) : rows(r), cols(c), data(r * c, zero) {}
  E& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const E& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

template <class C>
bool is_zero_entry(const TruncatedSeries<C>& s) { return s.is_zero(); }
template <class T>
bool is_zero_entry(const T& x) { return is_zero_value(x); }

template <class E>
DenseMatrix<E> multiply(const DenseMatrix<E>& a, const DenseMatrix<E>& b, const E& zero) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shapes do not match");
  DenseMatrix<E> r(a.rows, b.cols, zero);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (is_zero_entry(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        if (!is_zero_entry(b(k, j))) r(i, j) = r(i, j) + a(i, k) * b(k, j);
    }
  return r;
}

/// Block index of a signed handle: +a -> 2(a-1), -a -> 2(a-1)+1.
inline std::size_t handle_slot(int a) { return static_cast<std::size_t>(2 * (std::abs(a) - 1) + (a < 0 ? 1 : 0)); }
inline int slot_handle(std::size_t s) { return (s % 2 == 0) ? static_cast<int>(s / 2 + 1) : -static_cast<int>(s / 2 + 1); }

/// The sewing moment matrices A, D, A~ and the vectors L, R built on a
/// genus-zero kernel, and Psi / Theta obtained from the Neumann series of
/// (I - A~)^{-1}.
template <class Policy>
class SewingSystem {
 public:
  using F = typename Policy::Field;
  using E = typename Policy::Entry;

  SewingSystem(SchottkyConfigT<F> cfg, BersKernelT<F> kernel, Policy policy, int modes)
      : cfg_(std::move(cfg)), k_(std::move(kernel)), pol_(std::move(policy)), M_(modes) {
    if (M_ < 1) throw std::invalid_argument("mode cutoff must be positive");
    if (cfg_.genus() < 1) throw std::invalid_argument("genus must be at least 1");
  }

  int N() const { return k_.N; }
  int modes() const { return M_; }
  int genus() const { return cfg_.genus(); }
  std::size_t dim(int modes) const { return static_cast<std::size_t>(2 * genus() * modes); }
  const Policy& policy() const { return pol_; }
  const BersKernelT<F>& kernel() const { return k_; }

  F sign_N() const { return from_rational<F>(Rational((N() % 2) ? -1 : 1)); }

  // raw coefficients, sigma factors stripped
  F L_coef(int b, int n, int i, const F& z) const { return k_.derivative(i, n, z, cfg_.w(b)); }
  F R_coef(int a, int m, int j, const F& y) const { return sign_N() * k_.derivative(m, j, cfg_.w(-a), y); }
  F A_coef(int a, int b, int m, int n) const {
    const F& x = cfg_.w(-a);
    if (b == -a) return sign_N() * k_.regular_part(m, n, x, x);
    return sign_N() * k_.derivative(m, n, x, cfg_.w(b));
  }
  F Atilde_coef(int a, int b, int m, int n) const {
    if (b == -a) return from_rational<F>(Rational(0));
    const int N2 = 2 * N();
    Rational c = binomial(m + n + N2 - 1, m) * (((m + N()) % 2) ? -1 : 1);
    return from_rational<F>(c) * power(F(cfg_.w(-a) - cfg_.w(b)), -(m + n + N2));
  }

  E L(int b, int n, int i, const F& z) const { return pol_.lift(L_coef(b, n, i, z), std::abs(b), n); }
  E LD(int b, int n, int i, const F& z) const { return pol_.lift(L_coef(b, n + 2 * N() - 1, i, z), std::abs(b), n + 2 * N() - 1); }
  E R(int a, int m, int j, const F& y) const { return pol_.lift(R_coef(a, m, j, y), std::abs(a), m + 1); }
  E A(int a, int b, int m, int n) const { return pol_.lift(A_coef(a, b, m, n), std::abs(a), m + 1, std::abs(b), n); }
  E Atilde(int a, int b, int m, int n) const {
    return pol_.lift(Atilde_coef(a, b, m, n), std::abs(a), m + 1, std::abs(b), n + 2 * N() - 1);
  }

  /// A with row modes 0..rows-1 and column modes 0..cols-1 per handle slot.
  DenseMatrix<E> A_matrix(int row_modes, int col_modes) const {
    if (col_modes < 2 * N() - 1) throw std::invalid_argument("A needs at least 2N-1 column modes");
    DenseMatrix<E> out(dim(row_modes), dim(col_modes), pol_.zero());
    for_blocks(row_modes, col_modes, [&](int a, int m, int b, int n, std::size_t i, std::size_t j) { out(i, j) = A(a, b, m, n); });
    return out;
  }
  /// D_{ab}^{mn} = delta_{m, n+2N-1} delta_{ab}.
  DenseMatrix<E> D_matrix(int row_modes, int col_modes) const {
    DenseMatrix<E> out(dim(row_modes), dim(col_modes), pol_.zero());
    for_blocks(row_modes, col_modes, [&](int a, int m, int b, int n, std::size_t i, std::size_t j) {
      if (a == b && m == n + 2 * N() - 1) out(i, j) = pol_.constant(from_rational<F>(Rational(1)));
    });
    return out;
  }
  DenseMatrix<E> Atilde_matrix() const {
    DenseMatrix<E> out(dim(M_), dim(M_), pol_.zero());
    for_blocks(M_, M_, [&](int a, int m, int b, int n, std::size_t i, std::size_t j) { out(i, j) = Atilde(a, b, m, n); });
    return out;
  }

  std::vector<E> LD_row(int i, const F& z) const {
    std::vector<E> v(dim(M_), pol_.zero());
    for (std::size_t s = 0; s < static_cast<std::size_t>(2 * genus()); ++s)
      for (int n = 0; n < M_; ++n) v[s * static_cast<std::size_t>(M_) + static_cast<std::size_t>(n)] = LD(slot_handle(s), n, i, z);
    return v;
  }

  /// sum_{k=0}^{K} v A~^k
  std::vector<E> neumann_row(std::vector<E> v, int K) const {
    DenseMatrix<E> At = Atilde_matrix();
    std::vector<E> acc = v;
    for (int k = 1; k <= K; ++k) {
      std::vector<E> next(v.size(), pol_.zero());
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (is_zero_entry(v[i])) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
          if (!is_zero_entry(At(i, j))) next[j] = next[j] + v[i] * At(i, j);
      }
      v = std::move(next);
      for (std::size_t i = 0; i < v.size(); ++i) acc[i] = acc[i] + v[i];
    }
    return acc;
  }

  /// (1/i!)(1/j!) d_z^i d_y^j Psi(z, y) = Pi + LD (I - A~)^{-1} R, Neumann series cut at K.
  E psi(const F& z, const F& y, int i, int j, int K) const {
    E out = pol_.constant(k_.derivative(i, j, z, y));
    auto S = neumann_row(LD_row(i, z), K);
    for (std::size_t s = 0; s < static_cast<std::size_t>(2 * genus()); ++s)
      for (int m = 0; m < M_; ++m) {
        const E& c = S[s * static_cast<std::size_t>(M_) + static_cast<std::size_t>(m)];
        if (!is_zero_entry(c)) out = out + c * R(slot_handle(s), m, j, y);
      }
    return out;
  }

  /// rho_a^{-l/2} [L + LD (I - A~)^{-1} A]_a^l
  E theta_half(const std::vector<E>& S, int a, int l, int i, const F& z) const {
    E out = L(a, l, i, z);
    for (std::size_t s = 0; s < static_cast<std::size_t>(2 * genus()); ++s)
      for (int m = 0; m < M_; ++m) {
        const E& c = S[s * static_cast<std::size_t>(M_) + static_cast<std::size_t>(m)];
        if (!is_zero_entry(c)) out = out + c * A(slot_handle(s), a, m, l);
      }
    return pol_.shift(out, std::abs(a), -l);
  }

  /// (1/i!) d_z^i Theta_{N,a}^l(z) for a = 1..g, l = 0..2N-2.
  E theta(int a, int l, const F& z, int i, int K) const {
    if (a < 1 || a > genus()) throw std::out_of_range("handle index out of range");
    if (l < 0 || l > 2 * N() - 2) throw std::out_of_range("Theta index out of range");
    auto S = neumann_row(LD_row(i, z), K);
    E lead = theta_half(S, a, l, i, z);
    E tail = theta_half(S, -a, 2 * N() - 2 - l, i, z);
    tail = pol_.shift(tail, a, 2 * (N() - 1 - l));
    return (N() % 2) ? lead - tail : lead + tail;
  }

 private:
  template <class Fn>
  void for_blocks(int row_modes, int col_modes, Fn&& fn) const {
    for (std::size_t sa = 0; sa < static_cast<std::size_t>(2 * genus()); ++sa)
      for (int m = 0; m < row_modes; ++m)
        for (std::size_t sb = 0; sb < static_cast<std::size_t>(2 * genus()); ++sb)
          for (int n = 0; n < col_modes; ++n)
            fn(slot_handle(sa), m, slot_handle(sb), n, sa * static_cast<std::size_t>(row_modes) + static_cast<std::size_t>(m),
               sb * static_cast<std::size_t>(col_modes) + static_cast<std::size_t>(n));
  }

  SchottkyConfigT<F> cfg_;
  BersKernelT<F> k_;
  Policy pol_;
  int M_;
};

using NumericSewing = SewingSystem<NumericSigma<Complex>>;

inline NumericSewing make_numeric_sewing(const SchottkyConfig& cfg, const std::vector<Complex>& A, int N, int modes) {
  NumericSigma<Complex> pol;
  for (auto& h : cfg.handles) pol.sigma.push_back(std::sqrt(h.rho));
  return NumericSewing(cfg, BersKernel(N, A), pol, modes);
}

inline Eigen::MatrixXcd to_eigen(const DenseMatrix<Complex>& m) {
  Eigen::MatrixXcd out(static_cast<long>(m.rows), static_cast<long>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out(static_cast<long>(i), static_cast<long>(j)) = m(i, j);
  return out;
}

/// Power-iteration estimate of the spectral radius.
inline double spectral_radius(const Eigen::MatrixXcd& m, int steps = 50) {
  if (m.rows() == 0) return 0;
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(m.rows());
  for (long i = 0; i < v.size(); ++i) v(i) += Complex(0.01 * static_cast<double>(i), 0.003 * static_cast<double>(i * i % 7));
  v.normalize();
  double est = 0;
  for (int s = 0; s < steps; ++s) {
    Eigen::VectorXcd w = m * v;
    est = w.norm();
    if (est == 0) return 0;
    v = w / est;
  }
  return est;
}

struct NeumannResult {
  Eigen::MatrixXcd inverse;
  double spectral_radius = 0;
  double residual = 0;  // || (I - A~) S - I ||_F
};

/// Truncated Neumann inverse sum_{k<=K} A~^k, refused when the spectral radius is >= max_radius.
inline NeumannResult neumann_inverse(const Eigen::MatrixXcd& At, int K, double max_radius = 0.9) {
  NeumannResult r;
  r.spectral_radius = spectral_radius(At);
  if (r.spectral_radius >= max_radius)
    throw std::domain_error("spectral radius of A~ too large for a Neumann series");
  Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(At.rows(), At.cols());
  Eigen::MatrixXcd term = I;
  r.inverse = I;
  for (int k = 1; k <= K; ++k) {
    term = term * At;
    r.inverse += term;
  }
  r.residual = ((I - At) * r.inverse - I).norm();
  return r;
}

}  // namespace voas
