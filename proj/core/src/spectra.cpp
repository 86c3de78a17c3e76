#include "dcp/spectra.hpp"

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace dcp {

void QuantumNumbers::validate() const {
  if (l < 0) throw std::invalid_argument("l must be nonnegative");
  if (e1 < 0 || e1 > 1 || e2 < 0 || e2 > 1) throw std::invalid_argument("e1, e2 must be 0 or 1");
  if (two_n < 0) throw std::invalid_argument("two_n must be nonnegative");
  if ((two_n - e1 - e2) % 2 != 0) {
    throw std::invalid_argument("n must be an integer when e1 + e2 is even and a half-integer otherwise");
  }
  if (two_n < e1 + e2) throw std::invalid_argument("two_n must be at least e1 + e2");
}

namespace {

void check(const ModelParams& params, const QuantumNumbers& qn) {
  params.validate();
  qn.validate();
}

}  // namespace

Rational kappa(const ModelParams& params, const QuantumNumbers& qn) {
  check(params, qn);
  return Rational(qn.l) + Rational(qn.two_n) + params.mu() + Rational(1, 2);
}

Rational energy(const ModelParams& params, const QuantumNumbers& qn) {
  params.require_bound_state();
  const Rational k = kappa(params, qn);
  return -(params.alpha * params.alpha) / (2 * k * k);
}

Rational beta(const ModelParams& params, const QuantumNumbers& qn) {
  params.require_bound_state();
  return 2 * abs(params.alpha) / kappa(params, qn);
}

Rational nu(const ModelParams& params, const QuantumNumbers& qn) {
  check(params, qn);
  return Rational(qn.two_n) + params.mu() + Rational(1, 2);
}

Rational l0_eigenvalue(const ModelParams& params, const QuantumNumbers& qn) { return kappa(params, qn); }

Rational j3_eigenvalue_squared(const ModelParams& params, const QuantumNumbers& qn) {
  check(params, qn);
  const Rational n = qn.n();
  if (qn.sector() == 1) return 4 * n * (n + params.mu());
  return 4 * (n + params.mu1) * (n + params.mu2);
}

bool j3_eigenvalue_is_paired(const ModelParams& params, const QuantumNumbers& qn) {
  return j3_eigenvalue_squared(params, qn) != 0;
}

Rational separation_constant(const ModelParams& params, const QuantumNumbers& qn) {
  check(params, qn);
  const Rational n = qn.n();
  return 4 * n * (n + params.mu());
}

SpectralData spectral_data(const ModelParams& params, const QuantumNumbers& qn) {
  SpectralData d;
  d.kappa = kappa(params, qn);
  d.energy = energy(params, qn);
  d.beta = beta(params, qn);
  d.nu = nu(params, qn);
  d.l0_eigenvalue = d.kappa;
  d.j3_squared = j3_eigenvalue_squared(params, qn);
  return d;
}

std::vector<QuantumNumbers> enumerate_level(int level) {
  if (level < 0) throw std::invalid_argument("level must be nonnegative");
  std::vector<QuantumNumbers> states;
  for (int two_n = 0; two_n <= level; ++two_n) {
    const int l = level - two_n;
    if (two_n == 0) {
      states.push_back({l, 0, 0, 0});
    } else if (two_n % 2 == 0) {
      states.push_back({l, two_n, 0, 0});
      states.push_back({l, two_n, 1, 1});
    } else {
      states.push_back({l, two_n, 1, 0});
      states.push_back({l, two_n, 0, 1});
    }
  }
  return states;
}

void to_json(nlohmann::json& j, const QuantumNumbers& qn) {
  j = nlohmann::json{{"l", qn.l}, {"two_n", qn.two_n}, {"e1", qn.e1}, {"e2", qn.e2}};
}

void from_json(const nlohmann::json& j, QuantumNumbers& qn) {
  qn.l = j.at("l").get<int>();
  qn.two_n = j.at("two_n").get<int>();
  qn.e1 = j.at("e1").get<int>();
  qn.e2 = j.at("e2").get<int>();
  qn.validate();
}

nlohmann::json spectrum_record(const ModelParams& params, const QuantumNumbers& qn) {
  const SpectralData d = spectral_data(params, qn);
  nlohmann::json j = qn;
  j["kappa"] = to_string(d.kappa);
  j["energy"] = to_string(d.energy);
  j["beta"] = to_string(d.beta);
  j["j3_sq"] = to_string(d.j3_squared);
  return j;
}

}  // namespace dcp
