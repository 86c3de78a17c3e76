#pragma once

// Classical orthogonal polynomials with exact coefficients, and Gauss rules
// for their weights built from the recurrence (Golub-Welsch).

#include <vector>

#include "dcp/rational.hpp"

namespace dcp {

enum class PolynomialFamily { jacobi, laguerre };

struct PolynomialCoeffs {
  PolynomialFamily family = PolynomialFamily::jacobi;
  Rational a;  // alpha parameter
  Rational b;  // beta parameter (Jacobi only)
  int degree = 0;
  std::vector<Rational> coeffs;  // monomial basis, constant term first
};

/// P_k^{(a,b)} via the three-term recurrence; a, b > -1.
PolynomialCoeffs jacobi_coeffs(int k, const Rational& a, const Rational& b);

/// L_l^{(a)} via the three-term recurrence; a > -1.
PolynomialCoeffs laguerre_coeffs(int l, const Rational& a);

Rational evaluate_exact(const PolynomialCoeffs& p, const Rational& x);
/// Horner in double precision.
double evaluate(const PolynomialCoeffs& p, double x);

/// Float values by the three-term recurrence, stable where the monomial
/// expansion suffers cancellation.
double jacobi_value(int k, double a, double b, double x);
double laguerre_value(int l, double a, double x);

/// log Gamma(x) for x > 0; throws std::domain_error otherwise.
double log_gamma(double x);

enum class QuadratureKind { gauss_jacobi, gauss_laguerre };

struct QuadratureRule {
  QuadratureKind kind = QuadratureKind::gauss_jacobi;
  double a = 0.0;
  double b = 0.0;
  int order = 0;
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // positive
};

/// Weight (1 - t)^a (1 + t)^b on [-1, 1].
QuadratureRule gauss_jacobi(double a, double b, int order);
/// Weight t^a e^{-t} on [0, inf).
QuadratureRule gauss_laguerre(double a, int order);

/// Total mass of the weight function.
double jacobi_weight_mass(double a, double b);
double laguerre_weight_mass(double a);

}  // namespace dcp
