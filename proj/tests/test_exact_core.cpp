#include <gtest/gtest.h>

#include "voas/laurent.hpp"
#include "voas/serialize.hpp"

using namespace voas;

namespace {
RationalFunction rf(Var v) { return RationalFunction(v); }
RationalFunction inv(const RationalFunction& f) { return RationalFunction(Rational(1)) / f; }
}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-7")), "-7");
  EXPECT_EQ(parse_rational("-0.125"), Rational(-1, 8));
  EXPECT_EQ(parse_rational("2.5"), Rational(5, 2));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_EQ(binomial(-3, 2), Rational(6));
  EXPECT_EQ(binomial(5, 2), Rational(10));
  EXPECT_EQ(power(Rational(2, 3), -2), Rational(9, 4));
}

TEST(Polynomial, ArithmeticAndDivision) {
  Var x = var("x"), y = var("y");
  Polynomial p = (Polynomial(x) - Polynomial(y)) * (Polynomial(x) + Polynomial(y));
  Polynomial q = Polynomial(x) * Polynomial(x) - Polynomial(y) * Polynomial(y);
  EXPECT_EQ(p, q);
  auto d = q.divide_exact(Polynomial(x) - Polynomial(y));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(*d, Polynomial(x) + Polynomial(y));
  EXPECT_FALSE(q.divide_exact(Polynomial(x) + Polynomial(2)).has_value());
  EXPECT_EQ(q.derivative(x), Polynomial(x) * Rational(2));
  EXPECT_EQ(q.substitute(y, Polynomial(x)), Polynomial());
  EXPECT_EQ(q.evaluate(std::map<Var, Rational>{{x, Rational(3)}, {y, Rational(1)}}), Rational(8));
}

TEST(RationalFunction, CancellationToZero) {
  Var x = var("x"), y = var("y");
  RationalFunction a = inv(rf(x) - rf(y));
  RationalFunction b = inv(rf(y) - rf(x));
  EXPECT_TRUE((a + b).is_zero());
  EXPECT_TRUE(a.equals(-b));
  EXPECT_FALSE(a.equals(b));
}

TEST(RationalFunction, DerivativeMatchesClosedForm) {
  Var z = var("z"), y = var("y");
  RationalFunction f = inv(rf(z) - rf(y));
  RationalFunction d2 = f.derivative(z, 2);
  EXPECT_TRUE(d2.equals(RationalFunction(Rational(2)) * inv(rf(z) - rf(y)).pow(3)));
  RationalFunction g = (rf(z) * rf(z) + RationalFunction(Rational(1))) / (rf(z) - rf(y)).pow(2);
  // quotient rule against finite evaluation of the product form
  RationalFunction manual = RationalFunction(Rational(2)) * rf(z) / (rf(z) - rf(y)).pow(2) -
                            RationalFunction(Rational(2)) * (rf(z) * rf(z) + RationalFunction(Rational(1))) / (rf(z) - rf(y)).pow(3);
  EXPECT_TRUE(g.derivative(z).equals(manual));
}

TEST(RationalFunction, DivisionCancelsSharedFactors) {
  Var x = var("x");
  RationalFunction q = inv(rf(x) + RationalFunction(Rational(1))) / (rf(x) * inv(rf(x) + RationalFunction(Rational(1))));
  EXPECT_TRUE(q.equals(inv(rf(x))));
  EXPECT_EQ(q.denominator_factors().size(), 1u);
  EXPECT_EQ(q.numerator(), Polynomial(1));
}

TEST(RationalFunction, MobiusSubstitution) {
  Var y = var("y"), w = var("w");
  RationalFunction f = inv(rf(y) - rf(w));
  RationalFunction g = (RationalFunction(Rational(2)) * rf(y) + RationalFunction(Rational(1))) /
                       (rf(y) + RationalFunction(Rational(3)));
  RationalFunction s = f.substitute(y, g);
  std::map<Var, Rational> pt{{y, Rational(1, 7)}, {w, Rational(5, 3)}};
  Rational gv = g.evaluate(pt);
  EXPECT_EQ(s.evaluate(pt), Rational(1) / (gv - Rational(5, 3)));
  EXPECT_THROW(inv(rf(y) - rf(w)).evaluate(std::map<Var, Rational>{{y, 1}, {w, 1}}), std::domain_error);
  EXPECT_NEAR(f.evaluate(std::map<Var, Complex>{{y, Complex(0, 1)}, {w, Complex(1, 0)}}).real(), -0.5, 1e-15);
}

TEST(RationalFunction, Reduce) {
  Var x = var("x"), y = var("y");
  RationalFunction f = (rf(x) * rf(x) - rf(y) * rf(y)) / (rf(x) - rf(y));
  f.reduce();
  EXPECT_TRUE(f.is_polynomial());
  EXPECT_EQ(f.numerator(), Polynomial(x) + Polynomial(y));
}

TEST(Laurent, GeometricExpansion) {
  Var z = var("z"), y = var("y");
  auto s = laurent_expand(inv(rf(z) - rf(y)), y, Center::at(RationalFunction(Rational(0))), 2);
  EXPECT_TRUE(s.coeff(0).equals(inv(rf(z))));
  EXPECT_TRUE(s.coeff(1).equals(inv(rf(z)).pow(2)));
  EXPECT_TRUE(s.coeff(2).equals(inv(rf(z)).pow(3)));
  EXPECT_TRUE(s.coeff(-1).is_zero());
  EXPECT_THROW(s.coeff(3), std::out_of_range);
}

TEST(Laurent, ResiduesAtMovingAndInfinitePoints) {
  Var z = var("z"), y = var("y");
  // z^2/(z-y)^3 has residue 1 at z = y
  RationalFunction f = rf(z) * rf(z) * inv(rf(z) - rf(y)).pow(3);
  EXPECT_TRUE(formal_residue(f, z, Center::at(rf(y))).equals(RationalFunction(Rational(1))));
  // k-th residue picks the t^{-k-1} coefficient: t^{-2} coefficient is 2y
  EXPECT_TRUE(formal_residue(f, z, Center::at(rf(y)), 1).equals(RationalFunction(Rational(2)) * rf(y)));
  auto inf = laurent_expand(inv(rf(z) - rf(y)), z, Center::infinity(), 3);
  EXPECT_TRUE(inf.coeff(1).equals(RationalFunction(Rational(1))));
  EXPECT_TRUE(inf.coeff(2).equals(rf(y)));
  EXPECT_TRUE(inf.coeff(0).is_zero());
}

TEST(TruncatedSeries, ArithmeticAndCutoffs) {
  using S = TruncatedSeries<Rational>;
  S a = S::with_rho_cutoff(2, 2);
  a.add_term({0, 0}, 1);
  a.add_term({2, 0}, 3);
  a.add_term({1, 1}, Rational(1, 2));
  S b = a * a;
  EXPECT_EQ(b.coeff({2, 0}), Rational(6));
  EXPECT_EQ(b.coeff({4, 0}), Rational(9));
  EXPECT_EQ(b.coeff({2, 2}), Rational(1, 4));
  EXPECT_THROW(b.coeff({3, 2}), std::out_of_range);
  EXPECT_THROW(a + S::with_rho_cutoff(2, 3), std::invalid_argument);
  S z = b.set_zero(1);
  EXPECT_EQ(z.coeff({2, 2}), Rational(0));
  EXPECT_EQ(z.drop_variable(1).coeff({4}), Rational(9));
  EXPECT_EQ(S::key({3, 2}), "rho1^(3/2)*rho2");
}

TEST(Serialize, RoundTripIsExact) {
  Var x = var("x"), y = var("y");
  RationalFunction f = (rf(x) * Rational(3, 4) + RationalFunction(Rational(1))) / ((rf(x) - rf(y)).pow(2) * (rf(y) + RationalFunction(Rational(2))));
  std::string once = to_json(f).dump();
  std::string twice = to_json(rational_function_from_json(Json::parse(once))).dump();
  EXPECT_EQ(once, twice);
  EXPECT_TRUE(rational_function_from_json(Json::parse(once)).equals(f));

  TruncatedSeries<Rational> s(2, 4);
  s.add_term({0, 0}, 1);
  s.add_term({1, 3}, Rational(-2, 9));
  s.add_term({2, 2}, 5);
  std::string e1 = series_envelope(s).dump();
  EXPECT_EQ(series_envelope(rational_series_from_json(Json::parse(e1))).dump(), e1);
  EXPECT_EQ(rational_series_from_json(Json::parse(e1)), s);
}
