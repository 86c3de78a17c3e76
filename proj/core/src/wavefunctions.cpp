#include "dcp/wavefunctions.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "dcp/orthopoly.hpp"

namespace dcp {

FunctionExpr angular_harmonic(const QuantumNumbers& qn, const ModelParams& params) {
  params.validate();
  qn.validate();
  const int k = qn.jacobi_degree();
  const auto jacobi =
      jacobi_coeffs(k, params.mu1 - Rational(1, 2) + qn.e1, params.mu2 - Rational(1, 2) + qn.e2);

  ExprBuilder b;
  for (int j = 0; j <= k; ++j) {
    const Rational& cj = jacobi.coeffs[static_cast<std::size_t>(j)];
    if (cj == 0) continue;
    // (x2^2 - x1^2)^j = sum_i C(j,i) (-1)^i x1^{2i} x2^{2(j-i)}
    mpz_class binom = 1;
    for (int i = 0; i <= j; ++i) {
      const Rational term = (i % 2 == 0 ? cj : Rational(-cj)) * binom;
      b.add(term, qn.e1 + 2 * i, qn.e2 + 2 * (j - i), 2 * (k - j), Rational(0));
      binom = binom * (j - i) / (i + 1);
    }
  }
  return std::move(b).build();
}

FunctionExpr radial_factor(const QuantumNumbers& qn, const ModelParams& params) {
  params.require_bound_state();
  qn.validate();
  const Rational bt = beta(params, qn);
  const auto laguerre = laguerre_coeffs(qn.l, Rational(2 * qn.two_n) + 2 * params.mu());
  const Rational rate = bt / 2;
  ExprBuilder b;
  for (int j = 0; j <= qn.l; ++j) {
    const Rational& cj = laguerre.coeffs[static_cast<std::size_t>(j)];
    b.add(cj * pow(bt, qn.two_n + j), 0, 0, qn.two_n + j, rate);
  }
  return std::move(b).build();
}

double angular_norm_constant(const QuantumNumbers& qn, const ModelParams& params) {
  params.validate();
  qn.validate();
  const double n = qn.two_n / 2.0;
  const double mu1 = to_double(params.mu1);
  const double mu2 = to_double(params.mu2);
  const double mu = mu1 + mu2;
  const double e_sum = qn.e1 + qn.e2;
  const double e_diff = qn.e1 - qn.e2;

  // ((2n + mu)/2) Gamma(n + mu + (e1+e2)/2); at n = mu = 0 the product tends to 1/2.
  double log_front;
  if (qn.two_n == 0 && params.mu() == 0) {
    log_front = std::log(0.5);
  } else {
    log_front = std::log((2.0 * n + mu) / 2.0) + log_gamma(n + mu + e_sum / 2.0);
  }
  const double log_eta_sq = log_front + log_gamma(qn.jacobi_degree() + 1.0) -
                            log_gamma(n + mu1 + (1.0 + e_diff) / 2.0) -
                            log_gamma(n + mu2 + (1.0 - e_diff) / 2.0);
  return std::exp(0.5 * log_eta_sq);
}

double radial_norm_constant(const QuantumNumbers& qn, const ModelParams& params) {
  params.require_bound_state();
  qn.validate();
  const double mu = to_double(params.mu());
  const double l = qn.l;
  const double four_n = 2.0 * qn.two_n;
  const double bt = to_double(beta(params, qn));
  const double log_xi_sq = log_gamma(l + 1.0) - log_gamma(l + four_n + 2.0 * mu + 1.0) +
                           (2.0 * mu + 2.0) * std::log(bt) - std::log(2.0 * l + four_n + 2.0 * mu + 1.0);
  return std::exp(0.5 * log_xi_sq);
}

double WavefunctionBundle::evaluate(double x1, double x2) const {
  return forced_norm * dcp::evaluate(exact_unnormalized, x1, x2);
}

double WavefunctionBundle::evaluate_closed_form(double x1, double x2) const {
  return norm_constant * dcp::evaluate(exact_unnormalized, x1, x2);
}

WavefunctionBundle full_wavefunction(const QuantumNumbers& qn, const ModelParams& params) {
  params.require_bound_state();
  qn.validate();
  WavefunctionBundle w;
  w.qn = qn;
  w.params = params;
  w.energy = energy(params, qn);
  w.beta = beta(params, qn);

  const FunctionExpr product = multiply(radial_factor(qn, params), angular_harmonic(qn, params));
  // Divide by r^{2n}: every term of the radial factor carries at least r^{2n}.
  ExprBuilder b;
  for (const auto& [key, coeff] : product.terms()) {
    b.add(coeff, key.a, key.eps, key.c - qn.two_n, key.s);
  }
  w.exact_unnormalized = std::move(b).build();
  for (const auto& [key, coeff] : w.exact_unnormalized.terms()) {
    if (key.c < 0) throw std::logic_error("wavefunction acquired a negative power of r");
  }

  w.norm_constant = angular_norm_constant(qn, params) * radial_norm_constant(qn, params);
  w.forced_norm = 1.0 / std::sqrt(inner_product(w.exact_unnormalized, w.exact_unnormalized, params));
  return w;
}

namespace {

struct DegreeProfile {
  int max_r = INT_MIN;    // max of a + eps + c
  int min_r = INT_MAX;
  int max_angle = 0;      // max of a + eps
  std::set<std::pair<int, int>> parities;  // (a mod 2, eps)
};

DegreeProfile profile(const FunctionExpr& f) {
  DegreeProfile p;
  for (const auto& [key, coeff] : f.terms()) {
    const int d = key.a + key.eps + key.c;
    p.max_r = std::max(p.max_r, d);
    p.min_r = std::min(p.min_r, d);
    p.max_angle = std::max(p.max_angle, key.a + key.eps);
    p.parities.emplace(key.a % 2, key.eps);
  }
  return p;
}

bool parity_disjoint(const DegreeProfile& p, const DegreeProfile& q) {
  for (const auto& par : p.parities) {
    if (q.parities.contains(par)) return false;
  }
  return true;
}

std::map<Rational, FunctionExpr> split_by_rate(const FunctionExpr& f) {
  std::map<Rational, ExprBuilder> builders;
  for (const auto& [key, coeff] : f.terms()) builders[key.s].add(coeff, key.a, key.eps, key.c, key.s);
  std::map<Rational, FunctionExpr> out;
  for (auto& [s, b] : builders) out.emplace(s, std::move(b).build());
  return out;
}

int resolve_order(int requested, int required, int degree) {
  const int order = requested > 0 ? requested : std::max(degree, 0) / 2 + 4;
  if (order < required) {
    throw std::invalid_argument("quadrature order " + std::to_string(order) +
                                " is below the exactness requirement " + std::to_string(required));
  }
  return order;
}

// Gauss rule for an integrand polynomial of degree `degree` needs (degree + 1)/2 nodes.
int required_nodes(int degree) { return std::max(1, (degree + 2) / 2); }

// Quadrant nodes for the angular weight |cos|^{2mu1}|sin|^{2mu2} dphi on [0, 2pi):
// with t = -cos 2phi each quadrant maps onto [-1, 1] with weight
// 2^{-(mu1+mu2+1)} (1-t)^{mu1-1/2} (1+t)^{mu2-1/2}.
struct AngularNode {
  double cos_phi;
  double sin_phi;
  double weight;
};

std::vector<AngularNode> angular_nodes(const ModelParams& params, int order) {
  const double mu1 = to_double(params.mu1);
  const double mu2 = to_double(params.mu2);
  const auto rule = gauss_jacobi(mu1 - 0.5, mu2 - 0.5, order);
  const double scale = std::exp2(-(mu1 + mu2 + 1.0));
  std::vector<AngularNode> nodes;
  nodes.reserve(rule.nodes.size() * 4);
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const double t = rule.nodes[k];
    const double c = std::sqrt((1.0 - t) / 2.0);
    const double s = std::sqrt((1.0 + t) / 2.0);
    for (const double sc : {1.0, -1.0}) {
      for (const double ss : {1.0, -1.0}) nodes.push_back({sc * c, ss * s, scale * rule.weights[k]});
    }
  }
  return nodes;
}

int angular_degree(const DegreeProfile& p, const DegreeProfile& q) {
  // cos^A sin^B with A + B even is a polynomial of degree (A + B)/2 in t.
  return (p.max_angle + q.max_angle) / 2;
}

}  // namespace

double inner_product(const FunctionExpr& f, const FunctionExpr& g, const ModelParams& params,
                     int quad_order) {
  params.validate();
  if (f.is_zero() || g.is_zero()) return 0.0;
  const DegreeProfile pf = profile(f);
  const DegreeProfile pg = profile(g);
  if (parity_disjoint(pf, pg)) return 0.0;

  const double two_mu = 2.0 * to_double(params.mu());
  const int radial_deg = pf.max_r + pg.max_r;
  if (pf.min_r + pg.min_r + two_mu + 2.0 <= 0.0) {
    throw std::domain_error("integrand is not integrable at the origin");
  }
  const int ang_deg = angular_degree(pf, pg);
  const int required = std::max(radial_deg >= 0 ? required_nodes(radial_deg) : 1, required_nodes(ang_deg));
  const int order = resolve_order(quad_order, required, std::max(radial_deg, ang_deg));

  const auto angles = angular_nodes(params, order);
  const auto radial = gauss_laguerre(two_mu + 1.0, order);

  double total = 0.0;
  for (const auto& [sf, fpart] : split_by_rate(f)) {
    for (const auto& [sg, gpart] : split_by_rate(g)) {
      const double rate = to_double(sf + sg);
      if (!(rate > 0.0)) throw std::domain_error("combined exponential rate must be positive");
      double acc = 0.0;
      for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
        const double r = radial.nodes[i] / rate;
        double ang = 0.0;
        for (const auto& node : angles) {
          const double x1 = r * node.cos_phi;
          const double x2 = r * node.sin_phi;
          ang += node.weight * evaluate_prefactor(fpart, x1, x2) * evaluate_prefactor(gpart, x1, x2);
        }
        acc += radial.weights[i] * ang;
      }
      total += acc * std::pow(rate, -(two_mu + 2.0));
    }
  }
  return total;
}

double inner_product(const WavefunctionBundle& f, const WavefunctionBundle& g, int quad_order) {
  return f.forced_norm * g.forced_norm *
         inner_product(f.exact_unnormalized, g.exact_unnormalized, f.params, quad_order);
}

double angular_inner_product(const FunctionExpr& f, const FunctionExpr& g, const ModelParams& params,
                             int quad_order) {
  params.validate();
  if (f.is_zero() || g.is_zero()) return 0.0;
  const DegreeProfile pf = profile(f);
  const DegreeProfile pg = profile(g);
  if (parity_disjoint(pf, pg)) return 0.0;
  const int ang_deg = angular_degree(pf, pg);
  const int order = resolve_order(quad_order, required_nodes(ang_deg), ang_deg);
  double total = 0.0;
  for (const auto& node : angular_nodes(params, order)) {
    total += node.weight * evaluate(f, node.cos_phi, node.sin_phi) * evaluate(g, node.cos_phi, node.sin_phi);
  }
  return total;
}

double radial_inner_product(const FunctionExpr& f, const FunctionExpr& g, const ModelParams& params,
                            int quad_order) {
  params.validate();
  for (const FunctionExpr* h : {&f, &g}) {
    for (const auto& [key, coeff] : h->terms()) {
      if (key.a != 0 || key.eps != 0) throw std::invalid_argument("radial scalar product needs functions of r only");
    }
  }
  if (f.is_zero() || g.is_zero()) return 0.0;
  const DegreeProfile pf = profile(f);
  const DegreeProfile pg = profile(g);
  const double two_mu = 2.0 * to_double(params.mu());
  if (pf.min_r + pg.min_r + two_mu + 2.0 <= 0.0) {
    throw std::domain_error("integrand is not integrable at the origin");
  }
  const int radial_deg = pf.max_r + pg.max_r;
  const int order = resolve_order(quad_order, radial_deg >= 0 ? required_nodes(radial_deg) : 1, radial_deg);
  const auto radial = gauss_laguerre(two_mu + 1.0, order);

  double total = 0.0;
  for (const auto& [sf, fpart] : split_by_rate(f)) {
    for (const auto& [sg, gpart] : split_by_rate(g)) {
      const double rate = to_double(sf + sg);
      if (!(rate > 0.0)) throw std::domain_error("combined exponential rate must be positive");
      double acc = 0.0;
      for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
        const double r = radial.nodes[i] / rate;
        acc += radial.weights[i] * evaluate_prefactor(fpart, r, 0.0) * evaluate_prefactor(gpart, r, 0.0);
      }
      total += acc * std::pow(rate, -(two_mu + 2.0));
    }
  }
  return total;
}

}  // namespace dcp
