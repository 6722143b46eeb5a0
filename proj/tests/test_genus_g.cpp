#include <gtest/gtest.h>

#include "voas/genus_g.hpp"

using namespace voas;

namespace {

FockVector A() { return heisenberg_generator(); }
FockVector W() { return conformal_vector(); }
RationalFunction R(Var v) { return RationalFunction(v); }
RationalFunction inv(const RationalFunction& f) { return RationalFunction(Rational(1)) / f; }
Polynomial Y(int k) { return Polynomial(var("y" + std::to_string(k))); }

bool same(const GenusGFunction& a, const GenusGFunction& b) {
  auto d = a - b;
  for (auto& [e, c] : d.terms())
    if (!c.equals(RationalFunction())) return false;
  return true;
}

std::vector<int> rho_pow(std::initializer_list<int> orders) {
  std::vector<int> e;
  for (int o : orders) e.push_back(2 * o);
  return e;
}

ZhuSample sample(int g, int t) {
  auto h = FormalHandles::standard(g);
  ZhuSample s;
  s.point[h.w(1)] = Rational(1);
  s.point[h.w(-1)] = Rational(-1);
  if (g >= 2) {
    s.point[h.w(2)] = Rational(17, 5) + frac(t, 7);
    s.point[h.w(-2)] = Rational(-7, 2) - frac(t, 11);
  }
  s.point[var("y1")] = Rational(-2, 3) + frac(t, 13);
  s.point[var("y2")] = Rational(9, 4) + frac(t, 17);
  s.z = Rational(5, 2) - frac(t, 19);
  s.A = {Rational(1, 10), Rational(13, 3), Rational(-9, 4)};
  return s;
}

SchottkyConfig numeric_genus_two() {
  SchottkyConfig cfg;
  cfg.handles = {{Complex(1, 0), Complex(-1, 0), Complex(6e-5, 3e-5)}, {Complex(0.4, 1.5), Complex(-0.5, -1.2), Complex(-5e-5, 4e-5)}};
  cfg.max_word_len = 6;
  return cfg;
}

}  // namespace

TEST(PartitionG, LowOrderCoefficients) {
  auto h = FormalHandles::standard(1);
  auto Z = partition_g(h, 2);
  RationalFunction d = R(h.w(1)) - R(h.w(-1));
  EXPECT_TRUE(Z.coeff(rho_pow({0})).equals(RationalFunction(Rational(1))));
  EXPECT_TRUE(Z.coeff(rho_pow({1})).equals(-inv(d).pow(2)));
  // weight 2: a(-2)1 and a(-1)^2 1, traced against their duals
  EXPECT_TRUE(Z.coeff(rho_pow({2})).equals(RationalFunction(Rational(4)) * inv(d).pow(4)));
  EXPECT_EQ(partition_g(FormalHandles::standard(3), 0).terms().size(), 1u);
  EXPECT_THROW(partition_g(h, -1), std::invalid_argument);
}

TEST(NPointG, ReducesToPartition) {
  auto h = FormalHandles::standard(2);
  EXPECT_TRUE(same(npoint_g(h, {}, 2), partition_g(h, 2)));
  EXPECT_TRUE(same(npoint_g(h, {{FockVector::vacuum(), Y(1)}}, 2), partition_g(h, 2)));
  auto one = npoint_g(FormalHandles::standard(1), {{A(), Y(1)}}, 2);
  EXPECT_TRUE(one.is_zero());
  EXPECT_THROW(npoint_g(h, {{A(), Polynomial(h.w(1))}, {A(), Y(1)}}, 1), std::invalid_argument);
}

TEST(LevelRaise, OrderingsAgree) {
  auto h0 = FormalHandles::standard(0);
  auto base = level_raise(h0, {}, 0);
  EXPECT_TRUE(base.coeff({}).equals(RationalFunction(Rational(1))));
  auto h1 = FormalHandles::standard(1);
  EXPECT_TRUE(same(level_raise(h1, {}, 0), partition_g(h1, 0)));

  auto h2 = FormalHandles::standard(2);
  auto f12 = level_raise(h2, {}, 2, {1, 2});
  auto f21 = level_raise(h2, {}, 2, {2, 1});
  EXPECT_TRUE(same(f12, f21));
  EXPECT_TRUE(same(f12, partition_g(h2, 2)));
  std::vector<Insertion> ins{{W(), Y(1)}};
  EXPECT_TRUE(same(level_raise(h2, ins, 1, {2, 1}), npoint_g(h2, ins, 1)));
  EXPECT_THROW(level_raise(h2, {}, 1, {1, 1}), std::invalid_argument);
}

TEST(Degeneration, TwoToOneToZero) {
  auto h2 = FormalHandles::standard(2);
  for (auto ins : std::vector<std::vector<Insertion>>{{}, {{W(), Y(1)}}, {{A(), Y(1)}, {A(), Y(2)}}}) {
    auto F2 = npoint_g(h2, ins, 2);
    for (int a = 1; a <= 2; ++a) {
      auto h1 = h2.without(a);
      auto F1 = npoint_g(h1, ins, 2);
      EXPECT_TRUE(same(degenerate(F2, a), F1));
      auto F0 = npoint_g(h1.without(1), ins, 2);
      EXPECT_TRUE(same(degenerate(F1, 1), F0));
    }
    auto lr = level_raise(h2, ins, 2, {2, 1});
    EXPECT_TRUE(same(degenerate(lr, 2), level_raise(h2.without(2), ins, 2)));
  }
}

TEST(ResidueG, Examples) {
  auto h = FormalHandles::standard(1);
  // omega(1) = L(0) on the handle state: weight times the partition coefficient
  auto Z = partition_g(h, 1);
  auto r = residue_g(h, W(), 1, 1, {}, 1);
  EXPECT_TRUE(r.coeff(rho_pow({1})).equals(Z.coeff(rho_pow({1}))));
  EXPECT_TRUE(r.coeff(rho_pow({0})).is_zero());
  EXPECT_TRUE(residue_g(h, A(), 0, 1, {}, 0).is_zero());
  EXPECT_THROW(residue_g(h, W(), 3, 1, {}, 1), std::out_of_range);
  EXPECT_THROW(residue_g(h, W(), 0, 2, {}, 1), std::out_of_range);

  // linearity in u over the weight-2 quasiprimaries {omega, a(-1)^2 1}
  auto h2 = FormalHandles::standard(2);
  FockVector q = FockVector::basis({1, 1});
  std::vector<Insertion> ins{{A(), Y(1)}};
  for (int l = 0; l <= 2; ++l)
    for (int a : {1, -2}) {
      auto lhs = residue_g(h2, W() * Rational(3) + q * Rational(-2, 5), l, a, ins, 1);
      auto rhs = residue_g(h2, W(), l, a, ins, 1) * RationalFunction(Rational(3)) + residue_g(h2, q, l, a, ins, 1) * RationalFunction(Rational(-2, 5));
      EXPECT_TRUE(same(lhs, rhs));
    }
}

TEST(MobiusG, PartitionFunctions) {
  std::vector<std::vector<Rational>> ps{{Rational(1)}, {Rational(0), Rational(1)}, {Rational(0), Rational(0), Rational(1)}};
  for (auto& p : ps) {
    auto r1 = mobius_check_g(FormalHandles::standard(1), p, {}, 3);
    auto r2 = mobius_check_g(FormalHandles::standard(2), p, {}, 2);
    for (auto& c : r1.terms()) EXPECT_TRUE(c.second.is_zero());
    for (auto& c : r2.terms()) EXPECT_TRUE(c.second.is_zero());
  }
  EXPECT_THROW(mobius_check_g(FormalHandles::standard(1), {0, 0, 0, 1}, {}, 1), std::invalid_argument);
}

TEST(MobiusG, NPointWithLOneCorrection) {
  auto h = FormalHandles::standard(1);
  std::vector<Rational> p{Rational(0), Rational(0), Rational(1)};
  // a(-2)1 is not quasiprimary: L(1) a(-2)1 = 2a
  FockVector v = FockVector::basis({2});
  ASSERT_FALSE(virasoro_mode(1, v).is_zero());
  std::vector<Insertion> ins{{v, Y(1)}, {A(), Y(2)}};
  EXPECT_TRUE(mobius_check_g(h, p, ins, 2).is_zero());
  auto three = mobius_check_g(h, p, {{W(), Y(1)}, {A(), Y(2)}, {A(), Y(3)}}, 1);
  for (auto& c : three.terms()) EXPECT_TRUE(c.second.is_zero());

  // the L(1) term is needed: it is nonzero on its own
  auto mod = ins;
  mod[0].state = virasoro_mode(1, v);
  EXPECT_FALSE(npoint_g(h, mod, 2).is_zero());
}

TEST(WardG, Vanishes) {
  auto h = FormalHandles::standard(1);
  for (auto& u : {A(), W()}) {
    int N = quasiprimary_weight(u);
    for (auto ins : std::vector<std::vector<Insertion>>{{}, {{A(), Y(1)}}, {{W(), Y(1)}}})
      for (int deg = 0; deg <= 2 * N - 2; ++deg) {
        std::vector<Rational> p(static_cast<std::size_t>(deg) + 1);
        p.back() = 1;
        auto r = ward_g_check(h, u, p, ins, 2);
        for (auto& c : r.terms()) EXPECT_TRUE(c.second.is_zero()) << "N=" << N << " deg=" << deg << " n=" << ins.size();
      }
  }
  EXPECT_TRUE(ward_g_check(h, W(), {Rational(1)}, {}, 0).is_zero());
  EXPECT_THROW(ward_g_check(h, A(), {0, 1}, {}, 1), std::invalid_argument);
  // linear in p
  auto h2 = FormalHandles::standard(2);
  std::vector<Insertion> ins{{A(), Y(1)}};
  auto mix = ward_g_check(h2, W(), {Rational(2), Rational(-1), Rational(3)}, ins, 1);
  auto parts = ward_g_check(h2, W(), {Rational(2)}, ins, 1) + ward_g_check(h2, W(), {Rational(0), Rational(-1)}, ins, 1) +
               ward_g_check(h2, W(), {Rational(0), Rational(0), Rational(3)}, ins, 1);
  EXPECT_TRUE(same(mix, parts));
  for (auto& c : mix.terms()) EXPECT_TRUE(c.second.is_zero());
}

TEST(ZhuG, ExactSeriesIdentity) {
  for (int g : {1, 2})
    for (int t = 0; t < 2; ++t) {
      auto h = FormalHandles::standard(g);
      auto s = sample(g, t);
      for (auto ins : std::vector<std::vector<Insertion>>{{}, {{A(), Y(1)}}, {{W(), Y(1)}}})
        for (int i = 0; i <= 1; ++i) {
          auto r = zhu_check_g(h, W(), i, ins, 1, s);
          EXPECT_TRUE(r.exact_match) << "g=" << g << " t=" << t << " n=" << ins.size() << " i=" << i;
        }
      auto r = zhu_check_g(h, A(), 0, {{A(), Y(1)}, {W(), Y(2)}}, 1, [&] {
        auto s1 = s;
        s1.A = {Rational(1, 10)};
        return s1;
      }());
      EXPECT_TRUE(r.exact_match);
    }
}

TEST(ZhuG, RhoZeroIsGenusZeroReduction) {
  auto h = FormalHandles::standard(2);
  auto s = sample(2, 0);
  std::vector<Insertion> ins{{A(), Y(1)}, {A(), Y(2)}};
  auto rhs = zhu_rhs_g(h, W(), 0, ins, 1, s);
  auto g0 = zhu_reduce0(W(), 0, Polynomial(var("z")), ins, make_kernel(2, s.A)).value;
  auto pt = s.point;
  pt[var("z")] = s.z;
  EXPECT_EQ(rhs.coeff({0, 0}), g0.evaluate(pt));
}

TEST(ZhuG, KernelChoiceIndependence) {
  auto h = FormalHandles::standard(2);
  auto s = sample(2, 1);
  auto s2 = s;
  s2.A = {Rational(-13, 2), Rational(5), Rational(29, 7)};
  std::vector<Insertion> ins{{W(), Y(1)}};
  EXPECT_EQ(zhu_rhs_g(h, W(), 0, ins, 1, s), zhu_rhs_g(h, W(), 0, ins, 1, s2));
}

TEST(ZhuG, PoincareSeriesNumeric) {
  auto h = FormalHandles::standard(2);
  ZhuNumericSample s;
  s.config = numeric_genus_two();
  std::vector<std::vector<Complex>> Asets{default_limit_points(s.config, 2), {Complex(0.1, 0.2), Complex(3, 0.5), Complex(-2.5, 0.7)}};
  std::vector<Insertion> ins{{W(), Y(1)}};
  for (int t = 0; t < 5; ++t) {
    s.z = std::polar(1.9 + 0.2 * t, 0.9 * t + 0.2);
    s.point[var("y1")] = std::polar(2.2 - 0.1 * t, 0.9 * t + 2.0);
    std::vector<Complex> rhs;
    for (auto& As : Asets) {
      s.A = As;
      auto r = zhu_check_g_numeric(h, W(), ins, 1, s);
      EXPECT_LT(r.relative_error, 1e-5) << "t=" << t;
      EXPECT_LT(r.tail, 1e-12);
      rhs.push_back(r.rhs);
    }
    EXPECT_LT(std::abs(rhs[0] - rhs[1]) / std::abs(rhs[0]), 1e-5);
  }
}

TEST(CoboundaryG, OmegaOnPartitionAndChain) {
  auto h = FormalHandles::standard(1);
  auto s = sample(1, 0);
  auto pt = s.point;
  pt[var("z")] = s.z;
  // delta(omega, z) on partition_g is the omega one-point function
  auto one = coboundary_g(h, W(), {}, 1, s);
  auto direct = evaluate_series(npoint_g(h, {{W(), Polynomial(var("z"))}}, 1), pt);
  EXPECT_EQ(one, direct);

  auto d = coboundary_chain_g(h, W(), Y(2), W(), {{A(), Y(1)}}, 1, s);
  EXPECT_EQ(d.first, evaluate_series(npoint_g(h, {{W(), Y(2)}, {A(), Y(1)}}, 1), pt));
  EXPECT_EQ(d.second, d.direct);
  ASSERT_EQ(d.ward_residuals.size(), 3u);
  for (auto& r : d.ward_residuals) EXPECT_TRUE(r.is_zero());
}

TEST(PointwiseG, MatchesSymbolicSeries) {
  auto h = FormalHandles::standard(2);
  auto s = sample(2, 1);
  std::vector<Insertion> ins{{A(), Y(1)}, {FockVector::basis({2}), Y(2)}};
  ASSERT_FALSE(npoint_g(h, ins, 1).is_zero());
  EXPECT_EQ(npoint_g_at<Rational>(h, ins, 2, s.point), evaluate_series(npoint_g(h, ins, 2), s.point));
  for (int a : {1, -1, 2, -2})
    for (int l = 0; l <= 2; ++l) EXPECT_EQ(residue_g_at<Rational>(h, W(), l, a, ins, 2, s.point), evaluate_series(residue_g(h, W(), l, a, ins, 2), s.point));

  std::map<Var, Complex> cp;
  for (auto& [v, q] : s.point) cp[v] = Complex(q.get_d(), 0.5 * q.get_d());
  std::vector<Complex> rho{Complex(1e-2, 2e-3), Complex(-3e-3, 1e-3)};
  Complex direct = evaluate_series(npoint_g(h, ins, 2), cp, rho);
  EXPECT_NEAR(std::abs(sum_at_rho(npoint_g_at<Complex>(h, ins, 2, cp), rho) - direct) / std::abs(direct), 0, 1e-12);
}
