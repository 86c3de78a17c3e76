#pragma once

#include "dcp/operators.hpp"
#include "dcp/spectra.hpp"
#include "dcp/term_algebra.hpp"

namespace dcp {

/// Homogeneous polynomial h = r^{2n} Phi / eta of degree 2n:
///   x1^e1 x2^e2 sum_j c_j (x2^2 - x1^2)^j (r^2)^(k - j),
/// with c_j the coefficients of P_k^{(mu1 - 1/2 + e1, mu2 - 1/2 + e2)} in
/// t = -cos(2 phi) and k = n - (e1 + e2)/2.
FunctionExpr angular_harmonic(const QuantumNumbers& qn, const ModelParams& params);

/// exp(-beta r/2) (beta r)^{2n} L_l^{(4n + 2mu1 + 2mu2)}(beta r), unnormalized.
FunctionExpr radial_factor(const QuantumNumbers& qn, const ModelParams& params);

/// Closed-form angular normalization eta (double precision).
double angular_norm_constant(const QuantumNumbers& qn, const ModelParams& params);
/// Closed-form radial normalization xi (double precision).
double radial_norm_constant(const QuantumNumbers& qn, const ModelParams& params);

struct WavefunctionBundle {
  QuantumNumbers qn;
  ModelParams params;
  /// radial_factor * angular_harmonic / r^{2n}; single rate beta/2, no negative r powers.
  FunctionExpr exact_unnormalized;
  /// eta * xi from the closed forms.
  double norm_constant = 0.0;
  /// 1 / sqrt(<exact, exact>) by quadrature.
  double forced_norm = 0.0;
  Rational energy;
  Rational beta;

  /// Normalized value, using the quadrature-forced normalization.
  double evaluate(double x1, double x2) const;
  /// forced_norm / norm_constant; 1 when the closed forms are exact.
  double norm_ratio() const { return forced_norm / norm_constant; }
  /// Exact expression scaled by norm_constant, as a float-coefficient evaluator.
  double evaluate_closed_form(double x1, double x2) const;
};

WavefunctionBundle full_wavefunction(const QuantumNumbers& qn, const ModelParams& params);

/// Quadrature order 0 selects the default: (max integrand degree)/2 + 4.
/// An explicit order below the polynomial exactness requirement throws
/// std::invalid_argument.

/// Full scalar product with measure |x1|^{2mu1} |x2|^{2mu2} r dr dphi.
/// Throws std::domain_error when a pair of rates does not decay.
double inner_product(const FunctionExpr& f, const FunctionExpr& g, const ModelParams& params,
                     int quad_order = 0);
double inner_product(const WavefunctionBundle& f, const WavefunctionBundle& g, int quad_order = 0);

/// Angular scalar product on the unit circle with weight |cos|^{2mu1} |sin|^{2mu2}.
/// Functions of different reflection parity return exactly 0.
double angular_inner_product(const FunctionExpr& f, const FunctionExpr& g, const ModelParams& params,
                             int quad_order = 0);

/// Radial scalar product with weight r^{2mu1 + 2mu2 + 1}; f and g must depend on r only.
double radial_inner_product(const FunctionExpr& f, const FunctionExpr& g, const ModelParams& params,
                            int quad_order = 0);

}  // namespace dcp
