#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include <nlohmann/json.hpp>

#include "dcp/term_algebra.hpp"

using dcp::FunctionExpr;
using dcp::Rational;
using dcp::RawTerm;

namespace {

double raw_value(const RawTerm& t, double x1, double x2) {
  const double r = std::hypot(x1, x2);
  return dcp::to_double(t.coeff) * std::pow(x1, t.a) * std::pow(x2, t.b) * std::pow(r, t.c) *
         std::exp(-dcp::to_double(t.s) * r);
}

std::vector<RawTerm> random_raw(std::mt19937_64& rng, int count) {
  std::uniform_int_distribution<int> exp(0, 5), rpow(-3, 3), num(-9, 9), den(1, 4);
  std::vector<RawTerm> out;
  for (int i = 0; i < count; ++i) {
    out.push_back({dcp::make_rational(num(rng), den(rng)), exp(rng), exp(rng), rpow(rng), dcp::make_rational(exp(rng) % 3, 2)});
  }
  return out;
}

}  // namespace

TEST(TermAlgebra, ReducesOddPowersOfX2) {
  const FunctionExpr f = dcp::normalize({{Rational(1), 0, 3, -2, Rational(0)}});
  const FunctionExpr expected = dcp::normalize({{Rational(1), 0, 1, 0, Rational(0)}, {Rational(-1), 2, 1, -2, Rational(0)}});
  EXPECT_EQ(f, expected);
  for (const auto& [key, coeff] : f.terms()) EXPECT_LE(key.eps, 1);
}

TEST(TermAlgebra, CancellationGivesZero) {
  // x2^2 + x1^2 - r^2 = 0
  const FunctionExpr f = dcp::normalize({{Rational(1), 0, 2, 0, Rational(0)},
                                         {Rational(1), 2, 0, 0, Rational(0)},
                                         {Rational(-1), 0, 0, 2, Rational(0)}});
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(f.max_abs_coeff(), Rational(0));
}

TEST(TermAlgebra, EvaluatesAtAPoint) {
  const FunctionExpr f = FunctionExpr::monomial(Rational(1), 1, 1, -1, Rational(1));
  EXPECT_NEAR(dcp::evaluate(f, 3.0, 4.0), 2.4 * std::exp(-5.0), 1e-15);
  EXPECT_NEAR(dcp::evaluate_prefactor(f, 3.0, 4.0), 2.4, 1e-15);
}

TEST(TermAlgebra, NegativeRadialPowerAtOriginThrows) {
  EXPECT_THROW(dcp::evaluate(FunctionExpr::monomial(Rational(1), 0, 0, -1), 0.0, 0.0), std::domain_error);
  EXPECT_DOUBLE_EQ(dcp::evaluate(FunctionExpr::constant(Rational(2)), 0.0, 0.0), 2.0);
}

TEST(TermAlgebra, CanonicalFormPreservesValues) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto raw = random_raw(rng, 6);
    const FunctionExpr f = dcp::normalize(raw);
    const double x1 = coord(rng), x2 = coord(rng);
    double expected = 0.0, scale = 0.0;
    for (const auto& t : raw) {
      expected += raw_value(t, x1, x2);
      scale += std::abs(raw_value(t, x1, x2));
    }
    EXPECT_NEAR(dcp::evaluate(f, x1, x2), expected, 1e-12 * (1.0 + scale));
  }
}

TEST(TermAlgebra, CanonicalFormIsOrderIndependent) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    auto raw = random_raw(rng, 8);
    const FunctionExpr f = dcp::normalize(raw);
    std::shuffle(raw.begin(), raw.end(), rng);
    EXPECT_EQ(dcp::normalize(raw), f);
  }
}

TEST(TermAlgebra, RingLaws) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const FunctionExpr f = dcp::normalize(random_raw(rng, 4));
    const FunctionExpr g = dcp::normalize(random_raw(rng, 4));
    const FunctionExpr h = dcp::normalize(random_raw(rng, 3));
    EXPECT_EQ(f + g, g + f);
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ(dcp::multiply(f, g), dcp::multiply(g, f));
    EXPECT_EQ(dcp::multiply(f, g + h), dcp::multiply(f, g) + dcp::multiply(f, h));
    EXPECT_EQ(dcp::multiply(dcp::multiply(f, g), h), dcp::multiply(f, dcp::multiply(g, h)));
    EXPECT_EQ(Rational(3) * f, f + f + f);
    EXPECT_EQ(-f, Rational(-1) * f);
  }
}

TEST(TermAlgebra, DilationAndReflectionMatchPointwise) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> coord(-1.5, 1.5);
  const Rational lambda(3, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const FunctionExpr f = dcp::normalize(random_raw(rng, 5));
    const double x1 = coord(rng), x2 = coord(rng);
    const double tol = 1e-10 * (1.0 + std::abs(dcp::evaluate(f, 1.5 * x1, 1.5 * x2)));
    EXPECT_NEAR(dcp::evaluate(dcp::dilate(f, lambda), x1, x2), dcp::evaluate(f, 1.5 * x1, 1.5 * x2), tol);
    EXPECT_NEAR(dcp::evaluate(dcp::reflect(f, 1), x1, x2), dcp::evaluate(f, -x1, x2), 1e-10 * (1 + std::abs(dcp::evaluate(f, x1, x2))));
    EXPECT_NEAR(dcp::evaluate(dcp::reflect(f, 2), x1, x2), dcp::evaluate(f, x1, -x2), 1e-10 * (1 + std::abs(dcp::evaluate(f, x1, x2))));
    EXPECT_EQ(dcp::reflect(dcp::reflect(f, 1), 1), f);
    EXPECT_EQ(dcp::reflect(dcp::reflect(f, 1), 2), dcp::reflect(dcp::reflect(f, 2), 1));
  }
  EXPECT_THROW(dcp::dilate(FunctionExpr::constant(Rational(1)), Rational(0)), std::invalid_argument);
}

TEST(TermAlgebra, JsonRoundTrip) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const FunctionExpr f = dcp::normalize(random_raw(rng, 5));
    const nlohmann::json j = f;
    EXPECT_EQ(j.get<FunctionExpr>(), f);
  }
  const nlohmann::json j = FunctionExpr::monomial(Rational(1, 2), 1, 0, -1, Rational(3));
  EXPECT_EQ(j["terms"][0]["coeff"], "1/2");
  EXPECT_EQ(j["terms"][0]["s"], "3/1");
}
