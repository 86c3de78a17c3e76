#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dcp/orthopoly.hpp"

using dcp::Rational;

namespace {

// Generalized binomial coefficient C(x, k) for rational x.
Rational binom(const Rational& x, int k) {
  Rational out(1);
  for (int i = 0; i < k; ++i) out = out * (x - i) / (i + 1);
  return out;
}

// P_k^{(a,b)}(x) = sum_s C(k+a, k-s) C(k+b, s) ((x-1)/2)^s ((x+1)/2)^(k-s)
Rational jacobi_sum(int k, const Rational& a, const Rational& b, const Rational& x) {
  Rational out(0);
  for (int s = 0; s <= k; ++s) {
    out += binom(k + a, k - s) * binom(k + b, s) * dcp::pow((x - 1) / 2, s) * dcp::pow((x + 1) / 2, k - s);
  }
  return out;
}

// L_l^{(a)}(x) = sum_i (-1)^i C(l+a, l-i) x^i / i!
Rational laguerre_sum(int l, const Rational& a, const Rational& x) {
  Rational out(0), fact(1);
  for (int i = 0; i <= l; ++i) {
    if (i > 0) fact *= i;
    out += (i % 2 ? -1 : 1) * binom(l + a, l - i) * dcp::pow(x, i) / fact;
  }
  return out;
}

}  // namespace

TEST(OrthoPoly, JacobiMatchesExplicitSum) {
  const Rational params[][2] = {{Rational(-1, 2), Rational(-1, 2)}, {Rational(-1, 4), Rational(1, 4)},
                                {Rational(3, 2), Rational(5, 2)}, {Rational(0), Rational(2)}};
  for (const auto& ab : params) {
    for (int k = 0; k <= 7; ++k) {
      const auto p = dcp::jacobi_coeffs(k, ab[0], ab[1]);
      EXPECT_EQ(p.coeffs.size(), static_cast<std::size_t>(k + 1));
      for (const Rational& x : {Rational(-1), Rational(1, 3), Rational(2), Rational(-5, 7)}) {
        EXPECT_EQ(dcp::evaluate_exact(p, x), jacobi_sum(k, ab[0], ab[1], x)) << k;
      }
    }
  }
}

TEST(OrthoPoly, JacobiDegreeOne) {
  const Rational a(1, 3), b(2, 5);
  const auto p = dcp::jacobi_coeffs(1, a, b);
  EXPECT_EQ(p.coeffs[0], (a - b) / 2);
  EXPECT_EQ(p.coeffs[1], (a + b + 2) / 2);
}

TEST(OrthoPoly, JacobiReflectionSymmetry) {
  const Rational a(1, 4), b(7, 4);
  for (int k = 0; k <= 6; ++k) {
    const auto p = dcp::jacobi_coeffs(k, a, b);
    const auto q = dcp::jacobi_coeffs(k, b, a);
    for (int i = 0; i <= k; ++i) EXPECT_EQ(p.coeffs[i], (((k + i) % 2) ? -1 : 1) * q.coeffs[i]);
  }
}

TEST(OrthoPoly, LegendreReduction) {
  // P_2 = (3x^2 - 1)/2, P_3 = (5x^3 - 3x)/2
  const auto p2 = dcp::jacobi_coeffs(2, Rational(0), Rational(0));
  EXPECT_EQ(p2.coeffs, (std::vector<Rational>{Rational(-1, 2), Rational(0), Rational(3, 2)}));
  const auto p3 = dcp::jacobi_coeffs(3, Rational(0), Rational(0));
  EXPECT_EQ(p3.coeffs, (std::vector<Rational>{Rational(0), Rational(-3, 2), Rational(0), Rational(5, 2)}));
}

TEST(OrthoPoly, LaguerreMatchesExplicitSum) {
  for (const Rational& a : {Rational(0), Rational(1, 2), Rational(4), Rational(-1, 3)}) {
    for (int l = 0; l <= 7; ++l) {
      const auto p = dcp::laguerre_coeffs(l, a);
      for (const Rational& x : {Rational(0), Rational(1, 2), Rational(3), Rational(11, 4)}) {
        EXPECT_EQ(dcp::evaluate_exact(p, x), laguerre_sum(l, a, x));
      }
    }
  }
  const auto l1 = dcp::laguerre_coeffs(1, Rational(3, 2));
  EXPECT_EQ(l1.coeffs, (std::vector<Rational>{Rational(5, 2), Rational(-1)}));
}

TEST(OrthoPoly, RejectsBadParameters) {
  EXPECT_THROW(dcp::jacobi_coeffs(2, Rational(-1), Rational(0)), std::invalid_argument);
  EXPECT_THROW(dcp::laguerre_coeffs(-1, Rational(0)), std::invalid_argument);
  EXPECT_THROW(dcp::gauss_jacobi(0.0, 0.0, 0), std::invalid_argument);
  EXPECT_THROW(dcp::gauss_laguerre(-1.0, 3), std::invalid_argument);
}

TEST(OrthoPoly, FloatRecurrenceAgreesWithExactCoefficients) {
  for (int k = 0; k <= 8; ++k) {
    const auto p = dcp::jacobi_coeffs(k, Rational(-1, 4), Rational(1, 4));
    const auto q = dcp::laguerre_coeffs(k, Rational(5, 2));
    for (double x : {-0.9, -0.2, 0.3, 0.95}) {
      EXPECT_NEAR(dcp::jacobi_value(k, -0.25, 0.25, x), dcp::evaluate(p, x), 1e-12);
      EXPECT_NEAR(dcp::laguerre_value(k, 2.5, 4 * x + 4), dcp::evaluate(q, 4 * x + 4), 1e-9);
    }
  }
}

TEST(OrthoPoly, LogGamma) {
  EXPECT_NEAR(dcp::log_gamma(1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::exp(dcp::log_gamma(0.5)) / std::sqrt(M_PI), 1.0, 1e-13);
  EXPECT_NEAR(std::exp(dcp::log_gamma(6.0)) / 120.0, 1.0, 1e-13);
  EXPECT_THROW(dcp::log_gamma(0.0), std::domain_error);
}

TEST(OrthoPoly, GaussJacobiIntegratesMoments) {
  // int (1-t)^a (1+t)^b (1+t)^j dt = 2^{a+b+j+1} B(a+1, b+j+1)
  for (auto [a, b] : {std::pair{-0.5, -0.5}, {-0.25, 0.25}, {1.5, 0.0}, {0.5, 2.5}}) {
    for (int order : {1, 3, 6, 10}) {
      const auto rule = dcp::gauss_jacobi(a, b, order);
      for (int j = 0; j <= 2 * order - 1; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * std::pow(1 + rule.nodes[i], j);
        const double exact = std::exp((a + b + j + 1) * std::log(2.0) + std::lgamma(a + 1) +
                                      std::lgamma(b + j + 1) - std::lgamma(a + b + j + 2));
        EXPECT_NEAR(sum / exact, 1.0, 1e-12) << a << ' ' << b << ' ' << order << ' ' << j;
      }
    }
  }
}

TEST(OrthoPoly, GaussLaguerreIntegratesMoments) {
  for (double a : {0.0, 1.0, 2.5, 7.0}) {
    for (int order : {1, 4, 8, 12}) {
      const auto rule = dcp::gauss_laguerre(a, order);
      for (int j = 0; j <= 2 * order - 1; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], j);
        EXPECT_NEAR(sum / std::exp(std::lgamma(a + j + 1)), 1.0, 1e-12) << a << ' ' << order << ' ' << j;
      }
    }
  }
}

TEST(OrthoPoly, RuleShape) {
  const auto rule = dcp::gauss_jacobi(0.25, -0.25, 9);
  ASSERT_EQ(rule.nodes.size(), 9u);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    EXPECT_GT(rule.weights[i], 0.0);
    EXPECT_GT(rule.nodes[i], -1.0);
    EXPECT_LT(rule.nodes[i], 1.0);
    if (i) {
      EXPECT_LT(rule.nodes[i - 1], rule.nodes[i]);
    }
  }
}
