#pragma once

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dcp/operators.hpp"
#include "dcp/rational.hpp"

namespace dcp {

/// (l, n, e1, e2) with n stored as two_n. (R1, R2) act as (1 - 2 e1, 1 - 2 e2).
struct QuantumNumbers {
  int l = 0;
  int two_n = 0;
  int e1 = 0;
  int e2 = 0;

  /// two_n has the parity of e1 + e2 and two_n >= e1 + e2; throws std::invalid_argument.
  void validate() const;

  Rational n() const { return make_rational(two_n, 2); }
  /// Principal level N = l + 2n.
  int level() const { return l + two_n; }
  /// Eigenvalue of R1 R2.
  int sector() const { return (e1 + e2) % 2 == 0 ? 1 : -1; }
  /// Degree of the Jacobi factor, n - (e1 + e2)/2.
  int jacobi_degree() const { return (two_n - e1 - e2) / 2; }

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

struct SpectralData {
  Rational kappa;          // l + 2n + mu1 + mu2 + 1/2
  Rational energy;         // -alpha^2 / (2 kappa^2)
  Rational beta;           // 2|alpha| / kappa = sqrt(-8 energy)
  Rational nu;             // 2n + mu1 + mu2 + 1/2
  Rational l0_eigenvalue;  // kappa
  Rational j3_squared;
};

Rational kappa(const ModelParams& params, const QuantumNumbers& qn);
Rational energy(const ModelParams& params, const QuantumNumbers& qn);
Rational beta(const ModelParams& params, const QuantumNumbers& qn);
Rational nu(const ModelParams& params, const QuantumNumbers& qn);
Rational l0_eigenvalue(const ModelParams& params, const QuantumNumbers& qn);

/// Square of the Dunkl angular momentum eigenvalue: 4n(n + mu1 + mu2) when
/// R1R2 = +1 and 4(n + mu1)(n + mu2) when R1R2 = -1. The eigenvalues
/// themselves are +-sqrt of this, except the single zero at n = 0.
Rational j3_eigenvalue_squared(const ModelParams& params, const QuantumNumbers& qn);
bool j3_eigenvalue_is_paired(const ModelParams& params, const QuantumNumbers& qn);

/// Polar separation constant m^2 = 4n(n + mu1 + mu2), both sectors.
Rational separation_constant(const ModelParams& params, const QuantumNumbers& qn);

SpectralData spectral_data(const ModelParams& params, const QuantumNumbers& qn);

/// All states with l + 2n = level, ordered by two_n then (e1, e2).
std::vector<QuantumNumbers> enumerate_level(int level);

void to_json(nlohmann::json& j, const QuantumNumbers& qn);
void from_json(const nlohmann::json& j, QuantumNumbers& qn);

/// Spectrum record: l, two_n, e1, e2, kappa, energy, beta, j3_sq.
nlohmann::json spectrum_record(const ModelParams& params, const QuantumNumbers& qn);

}  // namespace dcp
