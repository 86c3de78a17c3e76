#include "dcp/orthopoly.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace dcp {

namespace {

using Coeffs = std::vector<Rational>;

// p = (u x + v) q - w s, all in the monomial basis.
Coeffs three_term(const Rational& u, const Rational& v, const Coeffs& q, const Rational& w,
                  const Coeffs& s) {
  Coeffs p(q.size() + 1, Rational(0));
  for (std::size_t i = 0; i < q.size(); ++i) {
    p[i + 1] += u * q[i];
    p[i] += v * q[i];
  }
  for (std::size_t i = 0; i < s.size(); ++i) p[i] -= w * s[i];
  return p;
}

void require_parameter(const Rational& a, const char* what) {
  if (a <= -1) throw std::invalid_argument(std::string(what) + " parameter must exceed -1");
}

}  // namespace

PolynomialCoeffs jacobi_coeffs(int k, const Rational& a, const Rational& b) {
  if (k < 0) throw std::invalid_argument("polynomial degree must be nonnegative");
  require_parameter(a, "Jacobi alpha");
  require_parameter(b, "Jacobi beta");

  Coeffs prev{Rational(1)};
  Coeffs curr{Rational(a - b) / 2, Rational(a + b + 2) / 2};
  if (k == 0) curr = prev;
  // 2m(m+a+b)(2m+a+b-2) P_m =
  //   (2m+a+b-1)[(2m+a+b)(2m+a+b-2) x + a^2 - b^2] P_{m-1} - 2(m+a-1)(m+b-1)(2m+a+b) P_{m-2}
  for (int m = 2; m <= k; ++m) {
    const Rational t = 2 * m + a + b;
    const Rational denom = 2 * m * (m + a + b) * (t - 2);
    const Rational u = (t - 1) * t * (t - 2) / denom;
    const Rational v = (t - 1) * (a * a - b * b) / denom;
    const Rational w = 2 * (m + a - 1) * (m + b - 1) * t / denom;
    Coeffs next = three_term(u, v, curr, w, prev);
    prev = std::move(curr);
    curr = std::move(next);
  }
  return PolynomialCoeffs{PolynomialFamily::jacobi, a, b, k, std::move(curr)};
}

PolynomialCoeffs laguerre_coeffs(int l, const Rational& a) {
  if (l < 0) throw std::invalid_argument("polynomial degree must be nonnegative");
  require_parameter(a, "Laguerre");

  Coeffs prev{Rational(1)};
  Coeffs curr{Rational(1 + a), Rational(-1)};
  if (l == 0) curr = prev;
  // m L_m = (2m - 1 + a - x) L_{m-1} - (m - 1 + a) L_{m-2}
  for (int m = 2; m <= l; ++m) {
    const Rational u = Rational(-1, m);
    const Rational v = Rational(2 * m - 1 + a) / m;
    const Rational w = Rational(m - 1 + a) / m;
    Coeffs next = three_term(u, v, curr, w, prev);
    prev = std::move(curr);
    curr = std::move(next);
  }
  return PolynomialCoeffs{PolynomialFamily::laguerre, a, Rational(0), l, std::move(curr)};
}

Rational evaluate_exact(const PolynomialCoeffs& p, const Rational& x) {
  Rational acc(0);
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double evaluate(const PolynomialCoeffs& p, double x) {
  double acc = 0.0;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

double jacobi_value(int k, double a, double b, double x) {
  if (k < 0) throw std::invalid_argument("polynomial degree must be nonnegative");
  double prev = 1.0;
  if (k == 0) return prev;
  double curr = (a - b) / 2.0 + (a + b + 2.0) / 2.0 * x;
  for (int m = 2; m <= k; ++m) {
    const double t = 2.0 * m + a + b;
    const double denom = 2.0 * m * (m + a + b) * (t - 2.0);
    const double next = ((t - 1.0) * (t * (t - 2.0) * x + a * a - b * b) * curr -
                         2.0 * (m + a - 1.0) * (m + b - 1.0) * t * prev) /
                        denom;
    prev = curr;
    curr = next;
  }
  return curr;
}

double laguerre_value(int l, double a, double x) {
  if (l < 0) throw std::invalid_argument("polynomial degree must be nonnegative");
  double prev = 1.0;
  if (l == 0) return prev;
  double curr = 1.0 + a - x;
  for (int m = 2; m <= l; ++m) {
    const double next = ((2.0 * m - 1.0 + a - x) * curr - (m - 1.0 + a) * prev) / m;
    prev = curr;
    curr = next;
  }
  return curr;
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma requires a positive argument");
  return std::lgamma(x);
}

double jacobi_weight_mass(double a, double b) {
  return std::exp((a + b + 1.0) * std::log(2.0) + log_gamma(a + 1.0) + log_gamma(b + 1.0) -
                  log_gamma(a + b + 2.0));
}

double laguerre_weight_mass(double a) { return std::exp(log_gamma(a + 1.0)); }

namespace {

QuadratureRule golub_welsch(QuadratureRule rule, const Eigen::VectorXd& diag,
                            const Eigen::VectorXd& offdiag, double mass) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, offdiag, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("tridiagonal eigenproblem did not converge");
  }
  const auto n = diag.size();
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const double v0 = solver.eigenvectors()(0, i);
    rule.nodes[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    rule.weights[static_cast<std::size_t>(i)] = mass * v0 * v0;
  }
  return rule;
}

void require_order(int order) {
  if (order < 1) throw std::invalid_argument("quadrature order must be positive");
}

}  // namespace

QuadratureRule gauss_jacobi(double a, double b, int order) {
  require_order(order);
  if (!(a > -1.0) || !(b > -1.0)) throw std::invalid_argument("Jacobi parameters must exceed -1");

  Eigen::VectorXd diag(order);
  Eigen::VectorXd offdiag(order > 1 ? order - 1 : 0);
  diag(0) = (b - a) / (a + b + 2.0);
  for (int k = 1; k < order; ++k) {
    const double t = 2.0 * k + a + b;
    diag(k) = (b * b - a * a) / (t * (t + 2.0));
    double beta_k;
    if (k == 1) {
      beta_k = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b));
    } else {
      beta_k = 4.0 * k * (k + a) * (k + b) * (k + a + b) / (t * t * (t + 1.0) * (t - 1.0));
    }
    offdiag(k - 1) = std::sqrt(beta_k);
  }
  return golub_welsch(QuadratureRule{QuadratureKind::gauss_jacobi, a, b, order, {}, {}}, diag, offdiag,
                      jacobi_weight_mass(a, b));
}

QuadratureRule gauss_laguerre(double a, int order) {
  require_order(order);
  if (!(a > -1.0)) throw std::invalid_argument("Laguerre parameter must exceed -1");

  Eigen::VectorXd diag(order);
  Eigen::VectorXd offdiag(order > 1 ? order - 1 : 0);
  for (int k = 0; k < order; ++k) diag(k) = 2.0 * k + a + 1.0;
  for (int k = 1; k < order; ++k) offdiag(k - 1) = std::sqrt(k * (k + a));
  return golub_welsch(QuadratureRule{QuadratureKind::gauss_laguerre, a, 0.0, order, {}, {}}, diag, offdiag,
                      laguerre_weight_mass(a));
}

}  // namespace dcp
