#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "voas/schottky.hpp"

using namespace voas;

namespace {

SchottkyConfig genus_two() {
  SchottkyConfig cfg;
  cfg.handles = {{Complex(1, 0), Complex(-1, 0), Complex(6e-5, 3e-5)}, {Complex(0.4, 1.5), Complex(-0.5, -1.2), Complex(-5e-5, 4e-5)}};
  cfg.max_word_len = 6;
  return cfg;
}

}  // namespace

TEST(Schottky, GeneratorSolvesSewingRelation) {
  ExactHandle h{Rational(1), Rational(-1), Rational(1, 4)};
  Mobius g = schottky_generator(h);
  // gamma(z) = -1 + (1/4)/(z - 1); gamma(infinity) = a/c = -1
  EXPECT_EQ(g.a / g.c, Rational(-1));
  for (Rational z : {Rational(3), Rational(-2, 7), Rational(5, 2)}) {
    Rational gz = (g.a * z + g.b) / (g.c * z + g.d);
    EXPECT_EQ(gz, Rational(-1) + Rational(1, 4) / (z - 1));
    EXPECT_EQ((gz - h.w_minus) * (z - h.w_plus), h.rho);
  }
  EXPECT_NE(g.det(), Rational(0));
  EXPECT_THROW(schottky_generator(ExactHandle{1, -1, 0}), std::invalid_argument);

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int t = 0; t < 10; ++t) {
    Handle hn{Complex(u(rng), u(rng)), Complex(u(rng) + 3, u(rng)), Complex(u(rng), u(rng)) * 1e-2};
    MobiusC m = schottky_generator(hn);
    EXPECT_NEAR(std::abs(m.det() - Complex(1)), 0, 1e-12);
    Complex z(0.3 * t - 1, 0.7);
    EXPECT_NEAR(std::abs((m.apply(z) - hn.w_minus) * (z - hn.w_plus) - hn.rho), 0, 1e-13);
  }
}

TEST(Schottky, SymmetricFixedPoints) {
  // w_a = -w_{-a}: the fixed points satisfy z^2 = w^2 + rho, checked against gamma directly.
  Handle h{Complex(2, 0), Complex(-2, 0), Complex(0.3, 0.1)};
  MobiusC m = schottky_generator(h);
  Complex p = attracting_fixed_point(m);
  EXPECT_NEAR(std::abs(m.apply(p) - p), 0, 1e-12);
  EXPECT_NEAR(std::abs(p * p - (h.w_plus * h.w_plus + h.rho)), 0, 1e-12);
  EXPECT_LT(std::abs(m.derivative(p)), 1);
}

TEST(Schottky, ValidationRejectsOverlappingDiscs) {
  SchottkyConfig ok = genus_two();
  EXPECT_NO_THROW(validate(ok));
  SchottkyConfig bad = ok;
  bad.handles[0].rho = Complex(1.5, 0);
  EXPECT_THROW(validate(bad), std::invalid_argument);
  bad = ok;
  bad.handles[1].rho = Complex(0);
  EXPECT_THROW(validate(bad), std::invalid_argument);
}

TEST(Schottky, WordCounts) {
  for (int g = 1; g <= 3; ++g) {
    SchottkyConfig cfg;
    for (int a = 0; a < g; ++a) cfg.handles.push_back({Complex(3.0 * a, 0), Complex(3.0 * a + 1, 0), Complex(0.01, 0)});
    for (int L = 0; L <= 5; ++L) {
      auto words = group_words(cfg, L);
      EXPECT_EQ(words.size(), expected_word_count(g, L));
      std::set<std::vector<int>> seen;
      for (auto& w : words) {
        EXPECT_TRUE(seen.insert(w.letters).second);
        for (std::size_t i = 1; i < w.letters.size(); ++i) EXPECT_NE(w.letters[i], -w.letters[i - 1]);
      }
    }
  }
  auto cfg = genus_two();
  EXPECT_EQ(group_words(cfg, 0).size(), 1u);
  auto l1 = group_words(cfg, 1);
  EXPECT_EQ(std::count_if(l1.begin(), l1.end(), [](auto& w) { return w.letters.size() == 1; }), 4);
  EXPECT_EQ(group_words(cfg, 2).size(), 17u);
}

TEST(Kernel, MobiusInvariance) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-9, 9);
  int tried = 0;
  while (tried < 20) {
    Complex a(d(rng), 0), b(d(rng), 0), c(d(rng), 0), e(d(rng), 0);
    if (std::abs(a * e - b * c) < 0.5) continue;
    MobiusC g = MobiusC::from(a, b, c, e);
    std::vector<Complex> A = {Complex(0.3, 0.1), Complex(-1.2, 0.4), Complex(2.1, -0.6)};
    Complex z(0.7, 0.25), y(-0.4, 0.9);
    std::vector<Complex> gA;
    for (auto& p : A) gA.push_back(g.apply(p));
    BersKernel k(2, A), gk(2, gA);
    Complex lhs = gk(g.apply(z), g.apply(y)) * power(g.derivative(z), 2) * power(g.derivative(y), -1);
    EXPECT_NEAR(std::abs(lhs - k(z, y)) / std::abs(k(z, y)), 0, 1e-12);
    ++tried;
  }
  BersKernel k1(1, {Complex(0)});
  Complex z(0.4, 0.2), y(1.3, -0.5);
  EXPECT_NEAR(std::abs(k1(z, y) - y / ((z - y) * z)), 0, 1e-14);
  EXPECT_THROW(k1(y, y), std::domain_error);
  EXPECT_THROW(BersKernel(2, {Complex(1), Complex(1), Complex(2)}), std::invalid_argument);
}

TEST(Poincare, IdentityTermAndShells) {
  auto cfg = genus_two();
  BersKernel k(2, default_limit_points(cfg, 2));
  Complex z(0.3, -0.4), y(-0.2, 0.6);
  auto id = psi_poincare(k, cfg, group_words(cfg, 0), z, y);
  EXPECT_NEAR(std::abs(id.value - k(z, y)), 0, 1e-14);
  auto full = psi_poincare(k, cfg, group_words(cfg, 6), z, y);
  EXPECT_LT(full.tail, 1e-20);
  for (std::size_t L = 2; L + 1 < full.shells.size(); ++L) EXPECT_LT(full.shells[L + 1], full.shells[L]);
  EXPECT_THROW(psi_poincare(BersKernel(1, {Complex(0)}), cfg, group_words(cfg, 1), z, y), std::invalid_argument);
}

TEST(Poincare, ResidueOneAtDiagonal) {
  auto cfg = genus_two();
  BersKernel k(2, default_limit_points(cfg, 2));
  auto words = group_words(cfg, 6);
  Complex z(0.3, -0.4);
  for (Complex dir : {Complex(1, 0), Complex(0, 1), Complex(-0.6, -0.8)}) {
    // Laurent fit (z - y) Psi = 1 + c1 eps + ... at three radii, extrapolated to eps = 0
    std::vector<double> h = {1e-3, 5e-4, 2.5e-4};
    std::vector<Complex> f;
    for (double r : h) {
      Complex y = z + r * dir;
      f.push_back((z - y) * psi_poincare(k, cfg, words, z, y).value);
    }
    // Richardson extrapolation on a quadratic
    Complex r1 = 2.0 * f[1] - f[0], r2 = 2.0 * f[2] - f[1];
    Complex lim = (4.0 * r2 - r1) / 3.0;
    EXPECT_NEAR(std::abs(lim - Complex(1)), 0, 1e-8);
  }
}

TEST(Poincare, NDifferentialInZ) {
  auto cfg = genus_two();
  BersKernel k(2, default_limit_points(cfg, 2));
  auto words = group_words(cfg, 6);
  Complex y(-0.2, 0.6);
  for (int a = 0; a < 2; ++a) {
    MobiusC g = schottky_generator(cfg.handles[static_cast<std::size_t>(a)]);
    for (Complex z : {Complex(0.3, -0.4), Complex(2.5, 0.2), Complex(-1.7, 2.2)}) {
      Complex lhs = psi_poincare(k, cfg, words, g.apply(z), y).value * power(g.derivative(z), 2);
      Complex rhs = psi_poincare(k, cfg, words, z, y).value;
      EXPECT_NEAR(std::abs(lhs - rhs) / std::abs(rhs), 0, 1e-10);
    }
  }
}

TEST(Theta, ExtractionIsPolynomialInY) {
  auto cfg = genus_two();
  BersKernel k(2, default_limit_points(cfg, 2));
  auto words = group_words(cfg, 6);
  for (Complex z : {Complex(0.3, -0.4), Complex(2.5, 0.2)})
    for (int a = 1; a <= 2; ++a) {
      auto ex = theta_extract(k, cfg, words, a, z);
      ASSERT_EQ(ex.theta.size(), 3u);
      EXPECT_LT(ex.holdout_residual, 1e-6);
    }
}

TEST(Theta, RankOfGenusTwoQuadraticForms) {
  auto cfg = genus_two();
  BersKernel k(2, default_limit_points(cfg, 2));
  auto words = group_words(cfg, 6);
  Eigen::MatrixXcd M(12, 6);
  for (int s = 0; s < 12; ++s) {
    Complex z = std::polar(2.5 + 0.1 * s, 0.7 * s + 0.1);
    int c = 0;
    for (int a = 1; a <= 2; ++a) {
      auto ex = theta_extract(k, cfg, words, a, z);
      for (int l = 0; l < 3; ++l) M(s, c++) = ex.theta[static_cast<std::size_t>(l)];
    }
  }
  auto r = numeric_rank(M);
  EXPECT_EQ(r.rank, 3);
  EXPECT_GE(r.gap, 1e3);
}
