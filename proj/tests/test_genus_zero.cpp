#include <gtest/gtest.h>

#include "voas/genus_zero.hpp"

using namespace voas;

namespace {

Polynomial P(const char* name) { return Polynomial(var(name)); }
RationalFunction R(const char* name) { return RationalFunction(var(name)); }
RationalFunction inv(const RationalFunction& f) { return RationalFunction(Rational(1)) / f; }

FockVector A() { return heisenberg_generator(); }
FockVector W() { return conformal_vector(); }
FockVector B(Partition p) { return FockVector::basis(p); }

// coefficient of prod y_k^{-m_k-1} in the expansion on |y_1| > ... > |y_n|
Rational nested_coefficient(RationalFunction f, const std::vector<Var>& ys, const std::vector<long>& ms) {
  for (std::size_t k = ys.size(); k-- > 0;) {
    int e = static_cast<int>(-ms[k] - 1);
    f = laurent_expand(f, ys[k], Center::at(RationalFunction(Rational(0))), e).coeff(e);
  }
  if (!f.is_constant()) throw std::logic_error("non-constant nested coefficient");
  return f.numerator().constant_term();
}

}  // namespace

TEST(NPoint0, ElementaryValues) {
  auto two = npoint0({{A(), P("y1")}, {A(), P("y2")}});
  EXPECT_TRUE(two.value.equals(inv(R("y1") - R("y2")).pow(2)));
  auto three = npoint0({{A(), P("y1")}, {A(), P("y2")}, {W(), P("y3")}});
  EXPECT_TRUE(three.value.equals(inv((R("y1") - R("y3")) * (R("y2") - R("y3"))).pow(2)));
  ASSERT_EQ(three.weights.size(), 3u);
  EXPECT_EQ(*three.weights[2], 2);
  auto tt = npoint0({{W(), P("y1")}, {W(), P("y2")}});
  EXPECT_TRUE(tt.value.equals(RationalFunction(Rational(1, 2)) * inv(R("y1") - R("y2")).pow(4)));
  EXPECT_TRUE(npoint0({{A(), P("y1")}}).value.is_zero());
  EXPECT_TRUE(npoint0({}).value.equals(RationalFunction(Rational(1))));
  EXPECT_THROW(npoint0({{A(), P("y1")}, {A(), P("y1")}}), std::invalid_argument);
}

TEST(NPoint0, MatchesModeAlgebraExpansion) {
  std::vector<FockVector> pool = {A(), B({2}), B({1, 1}), W(), B({3}), B({2, 1}) + B({1, 1, 1})};
  std::vector<Var> ys = {var("y1"), var("y2"), var("y3")};
  int checked = 0;
  for (std::size_t a = 0; a < pool.size(); ++a)
    for (std::size_t b = 0; b < pool.size(); ++b) {
      // two points
      {
        auto f = npoint0({{pool[a], P("y1")}, {pool[b], P("y2")}}).value;
        for (long m1 = -3; m1 <= 4; ++m1) {
          long m2 = pool[a].max_weight() + pool[b].max_weight() - 2 - m1;
          if (!pool[a].is_homogeneous() || !pool[b].is_homogeneous()) continue;
          EXPECT_EQ(nested_coefficient(f, {ys[0], ys[1]}, {m1, m2}), mode_correlator({pool[a], pool[b]}, {m1, m2}));
          ++checked;
        }
      }
      for (std::size_t c = 0; c < 4; ++c) {
        std::vector<FockVector> st = {pool[a], pool[b], pool[c]};
        auto f = npoint0({{st[0], P("y1")}, {st[1], P("y2")}, {st[2], P("y3")}}).value;
        int wsum = st[0].max_weight() + st[1].max_weight() + st[2].max_weight();
        if (!st[0].is_homogeneous() || !st[1].is_homogeneous()) continue;
        for (long m1 = -2; m1 <= 3; ++m1)
          for (long m2 = -2; m2 <= 3; ++m2) {
            long m3 = wsum - 3 - m1 - m2;
            EXPECT_EQ(nested_coefficient(f, ys, {m1, m2, m3}), mode_correlator(st, {m1, m2, m3}));
            ++checked;
          }
      }
    }
  EXPECT_GT(checked, 100);
}

TEST(Mobius0, InvarianceForQuasiPrimaryAndGeneralStates) {
  std::vector<Mobius> maps = {{1, 3, 0, 1}, {2, 0, 0, 1}, {0, 1, -1, 0}, {1, 2, 3, 4}, {Rational(1, 2), -1, 5, 7}};
  std::vector<std::vector<Insertion>> cases = {
      {{A(), P("y1")}, {A(), P("y2")}},
      {{A(), P("y1")}, {A(), P("y2")}, {W(), P("y3")}},
      {{W(), P("y1")}, {W(), P("y2")}, {W(), P("y3")}},
      {{B({2}), P("y1")}, {A(), P("y2")}},
      {{B({3}), P("y1")}, {B({1, 1}), P("y2")}, {B({2}), P("y3")}},
  };
  for (auto& g : maps)
    for (auto& c : cases) EXPECT_TRUE(mobius_apply0(c, g).value.equals(npoint0(c).value));
  EXPECT_THROW(mobius_apply0(cases[0], Mobius{1, 2, 2, 4}), std::invalid_argument);
}

TEST(Kernel, ClosedFormCoefficientsMatchDerivatives) {
  for (int N : {1, 2, 3}) {
    std::vector<Rational> Apts;
    for (int r = 0; r < 2 * N - 1; ++r) Apts.push_back(frac(3 * r + 7, 2 + r));
    auto k = make_kernel(N, Apts);
    RationalFunction z = R("z"), y = R("y");
    RationalFunction pi = k.pi(z, y);
    // product form of the kernel
    RationalFunction prod = inv(z - y);
    for (auto& a : Apts) prod *= (y - RationalFunction(a)) / (z - RationalFunction(a));
    EXPECT_TRUE(pi.equals(prod));
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; j <= 2; ++j) {
        RationalFunction d = pi.derivative(var("z"), i).derivative(var("y"), j) * Rational(Rational(1) / (factorial(i) * factorial(j)));
        EXPECT_TRUE(k.coefficient(i, j, z, y).equals(d));
      }
  }
  EXPECT_THROW(make_kernel(2, {1, 2}), std::invalid_argument);
  EXPECT_THROW(make_kernel(2, {1, 1, 2}), std::invalid_argument);
}

TEST(Zhu0, ReductionReproducesCorrelators) {
  struct Case {
    FockVector u;
    std::vector<Rational> Apts;
  };
  std::vector<Case> us = {{A(), {Rational(5)}}, {A(), {Rational(-1, 3)}}, {W(), {1, -2, Rational(7, 2)}}, {W(), {0, 4, 9}}};
  std::vector<std::vector<Insertion>> data = {
      {{A(), P("y1")}},
      {{A(), P("y1")}, {A(), P("y2")}, {A(), P("y3")}},
      {{W(), P("y1")}, {A(), P("y2")}},
      {{B({2}), P("y1")}, {B({1, 1}), P("y2")}},
      {{W(), P("y1")}},
  };
  for (auto& c : us) {
    auto k = make_kernel(*c.u.weight(), c.Apts);
    for (auto& d : data)
      for (int i = 0; i <= 2; ++i) {
        auto rhs = zhu_reduce0(c.u, i, P("z"), d, k);
        auto lhs = zhu_lhs0(c.u, i, P("z"), d);
        EXPECT_TRUE(lhs.value.equals(rhs.value)) << c.u.str() << " i=" << i;
      }
  }
  EXPECT_THROW(zhu_reduce0(B({2}), 0, P("z"), data[0], make_kernel(2, {1, 2, 3})), std::invalid_argument);
}

TEST(Ward0, VanishesUpToDegreeTwoNMinusTwo) {
  std::vector<std::vector<Insertion>> data = {
      {{A(), P("y1")}, {A(), P("y2")}, {A(), P("y3")}},
      {{W(), P("y1")}, {B({2}), P("y2")}, {A(), P("y3")}},
      {{B({3}), P("y1")}, {B({2, 1}), P("y2")}},
  };
  for (auto& d : data) {
    EXPECT_TRUE(ward0_check(A(), {1}, d).is_zero());
    for (int deg = 0; deg <= 2; ++deg) {
      std::vector<Rational> p(static_cast<std::size_t>(deg) + 1, Rational(0));
      p.back() = frac(deg + 2, 3);
      EXPECT_TRUE(ward0_check(W(), p, d).is_zero()) << deg;
    }
  }
  EXPECT_THROW(ward0_check(A(), {0, 1}, data[0]), std::invalid_argument);
  EXPECT_THROW(ward0_check(W(), {0, 0, 0, 1}, data[0]), std::invalid_argument);
}

TEST(Coboundary0, ChainConsistency) {
  auto k1 = make_kernel(1, {Rational(2)});
  auto k2 = make_kernel(2, {Rational(-1), Rational(3), Rational(1, 2)});
  EXPECT_TRUE(coboundary0(A(), P("z"), {}, k1).value.is_zero());
  std::vector<Insertion> d = {{A(), P("y1")}, {W(), P("y2")}};
  auto chain = coboundary_chain0(A(), P("z1"), W(), P("z2"), d, k1, k2);
  std::vector<Insertion> ext{{A(), P("z1")}};
  ext.insert(ext.end(), d.begin(), d.end());
  EXPECT_TRUE(chain.first.equals(npoint0(ext).value));
  EXPECT_TRUE(chain.second.equals(chain.direct));
  ASSERT_EQ(chain.ward_residuals.size(), 3u);
  for (auto& r : chain.ward_residuals) EXPECT_TRUE(r.is_zero());
}
