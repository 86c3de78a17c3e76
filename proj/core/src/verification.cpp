#include "dcp/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

#include "dcp/orthopoly.hpp"
#include "dcp/wavefunctions.hpp"

namespace dcp {

unsigned worker_count() {
  if (const char* env = std::getenv("DCP_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

using Clock = std::chrono::steady_clock;

// Runs fn(i) for i in [0, n) on up to worker_count() threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const std::size_t threads = std::min<std::size_t>(worker_count(), n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += threads) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

struct Input {
  FunctionExpr f;
  nlohmann::json label;
  Rational value;  // per-input scalar: kappa, energy or eigenvalue
};

struct Relation {
  std::string name;
  std::function<FunctionExpr(const Input&)> residual;
};

Relation operator_relation(std::string name, Operator op) {
  return {std::move(name), [op = std::move(op)](const Input& in) { return op.apply(in.f); }};
}

struct Outcome {
  std::vector<RelationResult> relations;
  nlohmann::json witness;
  Rational max_residual{0};
  bool passed = true;
};

void run_exact(const std::vector<Relation>& relations, const std::vector<Input>& inputs, Outcome& out) {
  for (const auto& rel : relations) {
    std::vector<Rational> sizes(inputs.size());
    parallel_for(inputs.size(), [&](std::size_t i) { sizes[i] = rel.residual(inputs[i]).max_abs_coeff(); });

    RelationResult result{rel.name, Exactness::exact, true, {}, std::nullopt};
    Rational worst(0);
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (sizes[i] > worst) worst = sizes[i];
      if (sizes[i] != 0 && result.passed) {
        result.passed = false;
        if (out.witness.is_null()) {
          out.witness = {{"relation", rel.name},
                         {"input", inputs[i].label},
                         {"image", rel.residual(inputs[i])}};
        }
      }
    }
    result.residual = to_string(worst);
    if (worst > out.max_residual) out.max_residual = worst;
    out.passed = out.passed && result.passed;
    out.relations.push_back(std::move(result));
  }
}

std::vector<Input> family_inputs(const TestFamily& family) {
  std::vector<Input> inputs;
  inputs.reserve(family.members.size());
  for (const auto& f : family.members) inputs.push_back({f, f, Rational(0)});
  return inputs;
}

std::vector<QuantumNumbers> harmonics_up_to(int two_n_max) {
  std::vector<QuantumNumbers> out;
  for (int two_n = 0; two_n <= two_n_max; ++two_n) {
    for (int e1 = 0; e1 <= 1; ++e1) {
      for (int e2 = 0; e2 <= 1; ++e2) {
        const QuantumNumbers qn{0, two_n, e1, e2};
        if ((two_n - e1 - e2) % 2 == 0 && two_n >= e1 + e2) out.push_back(qn);
      }
    }
  }
  return out;
}

nlohmann::json state_label(const QuantumNumbers& qn) { return qn; }

CheckReport finish(std::string name, const ModelParams& params, nlohmann::json family, Outcome outcome,
                   Clock::time_point start) {
  CheckReport report;
  report.name = std::move(name);
  report.params = params;
  report.passed = outcome.passed;
  report.exactness = Exactness::exact;
  report.residual = to_string(outcome.max_residual);
  report.witness = std::move(outcome.witness);
  report.family = std::move(family);
  report.relations = std::move(outcome.relations);
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return report;
}

}  // namespace

nlohmann::json TestFamily::describe() const {
  return {{"canonical", canonical_count},
          {"random", random_count},
          {"seed", seed},
          {"definition",
           "canonical: a<=6, eps in {0,1}, c in [-4,4], s in {0,1/2,1}; random: a<=10, eps in {0,1}, "
           "|c|<=6, s in {0,1/3,1/2,1,3/2,2}, coeff p/q with 1<=|p|,q<=9"}};
}

TestFamily default_test_family(std::uint64_t seed, int random_count) {
  TestFamily family;
  family.seed = seed;
  const std::vector<Rational> rates{Rational(0), Rational(1, 2), Rational(1)};
  for (const auto& s : rates) {
    for (int a = 0; a <= 6; ++a) {
      for (int eps = 0; eps <= 1; ++eps) {
        for (int c = -4; c <= 4; ++c) family.members.push_back(FunctionExpr::monomial(Rational(1), a, eps, c, s));
      }
    }
  }
  family.canonical_count = static_cast<int>(family.members.size());

  std::mt19937_64 rng(seed);
  const std::vector<Rational> random_rates{Rational(0), Rational(1, 3), Rational(1, 2),
                                           Rational(1), Rational(3, 2), Rational(2)};
  auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int i = 0; i < random_count; ++i) {
    const int a = uniform(0, 10);
    const int eps = uniform(0, 1);
    const int c = uniform(-6, 6);
    const Rational& s = random_rates[static_cast<std::size_t>(uniform(0, 5))];
    int p = uniform(1, 9);
    if (uniform(0, 1) == 1) p = -p;
    const int q = uniform(1, 9);
    family.members.push_back(FunctionExpr::monomial(make_rational(p, q), a, eps, c, s));
  }
  family.random_count = random_count;
  return family;
}

CheckReport check_so21(const ModelParams& params, const TestFamily& family, bool mutate) {
  const auto start = Clock::now();
  const DunklCoulombOperators ops(params);
  const Operator L0 = mutate ? ops.L0 + Rational(1) : ops.L0;
  const std::vector<Relation> relations{
      operator_relation("[L0,L+] - L+", commutator(L0, ops.Lplus) - ops.Lplus),
      operator_relation("[L0,L-] + L-", commutator(L0, ops.Lminus) + ops.Lminus),
      operator_relation("[L+,L-] + 2 L0", commutator(ops.Lplus, ops.Lminus) + Rational(2) * L0),
  };
  Outcome out;
  run_exact(relations, family_inputs(family), out);
  return finish("so21", params, family.describe(), std::move(out), start);
}

CheckReport check_casimir(const ModelParams& params, const TestFamily& family, bool mutate) {
  const auto start = Clock::now();
  const DunklCoulombOperators ops(params);
  const Operator refl = params.mu1 * ops.R1 + params.mu2 * ops.R2;
  const Rational shift = mutate ? Rational(3, 4) : Rational(-1, 4);
  const Operator j_form = -(ops.Jcal * ops.Jcal) + refl * refl + Operator::scalar(shift);

  Outcome out;
  run_exact({operator_relation("C - (-Jcal^2 + (mu1 R1 + mu2 R2)^2 - 1/4)", ops.casimir_so21 - j_form)},
            family_inputs(family), out);

  // On each harmonic the Casimir is nu(nu - 1) with nu = 2n + mu1 + mu2 + 1/2.
  std::vector<Input> harmonics;
  for (const auto& qn : harmonics_up_to(4)) {
    const Rational v = nu(params, qn);
    harmonics.push_back({angular_harmonic(qn, params), state_label(qn), v * (v - 1)});
  }
  const Operator C = ops.casimir_so21;
  run_exact({{"C h - nu(nu-1) h", [C](const Input& in) { return C.apply(in.f) - in.value * in.f; }}},
            harmonics, out);

  auto family_json = family.describe();
  family_json["harmonics_two_n_max"] = 4;
  return finish("casimir", params, std::move(family_json), std::move(out), start);
}

CheckReport check_constants_of_motion(const ModelParams& params, const TestFamily& family, bool mutate) {
  const auto start = Clock::now();
  const DunklCoulombOperators ops(params);
  const Operator A1 = mutate ? ops.A1 - (Rational(1) / params.alpha) * (ops.D1 * ops.R1) : ops.A1;
  const Operator& H = ops.hamiltonian;
  const std::vector<Relation> relations{
      operator_relation("[H,Jcal]", commutator(H, ops.Jcal)),
      operator_relation("[H,A1]", commutator(H, A1)),
      operator_relation("[H,A2]", commutator(H, ops.A2)),
      operator_relation("[H,R1]", commutator(H, ops.R1)),
      operator_relation("[H,R2]", commutator(H, ops.R2)),
  };
  Outcome out;
  run_exact(relations, family_inputs(family), out);
  return finish("constants_of_motion", params, family.describe(), std::move(out), start);
}

CheckReport check_invariance_algebra(const ModelParams& params, const TestFamily& family, bool mutate) {
  const auto start = Clock::now();
  const DunklCoulombOperators ops(params);
  const Operator& H = ops.hamiltonian;
  const Operator& J = ops.Jcal;
  const Operator& A1 = ops.A1;
  const Operator& A2 = ops.A2;
  const Rational alpha_sq = params.alpha * params.alpha;
  const Operator Q =
      mutate ? ops.Q - (Rational(2) / alpha_sq) * (H * ops.R1 * ops.R2) : ops.Q;
  const Rational q_slope = (2 * params.mu1 * params.mu1 + 2 * params.mu2 * params.mu2 + Rational(1, 2)) / alpha_sq;
  const Operator one;

  const std::vector<Relation> relations{
      operator_relation("[A1,A2] + (2/alpha^2) H Jcal", commutator(A1, A2) + (Rational(2) / alpha_sq) * (H * J)),
      operator_relation("[A1,Jcal] - A2 (1 + 2 mu1 R1)",
                        commutator(A1, J) - A2 * (one + (2 * params.mu1) * ops.R1)),
      operator_relation("[Jcal,A2] - A1 (1 + 2 mu2 R2)",
                        commutator(J, A2) - A1 * (one + (2 * params.mu2) * ops.R2)),
      operator_relation("{Jcal,R1}", anticommutator(J, ops.R1)),
      operator_relation("{Jcal,R2}", anticommutator(J, ops.R2)),
      operator_relation("{A1,R1}", anticommutator(A1, ops.R1)),
      operator_relation("[A1,R2]", commutator(A1, ops.R2)),
      operator_relation("{A2,R2}", anticommutator(A2, ops.R2)),
      operator_relation("[A2,R1]", commutator(A2, ops.R1)),
      operator_relation("[R1,R2]", commutator(ops.R1, ops.R2)),
      operator_relation("Q - (H/alpha^2)(2mu1^2 + 2mu2^2 + 1/2) - 1", Q - q_slope * H - Rational(1)),
  };
  Outcome out;
  run_exact(relations, family_inputs(family), out);

  auto family_json = family.describe();
  if (params.alpha < 0) {
    // Q on the ground state: (E/alpha^2)(2mu1^2 + 2mu2^2 + 1/2) + 1.
    const QuantumNumbers ground{0, 0, 0, 0};
    const auto psi = full_wavefunction(ground, params);
    const Rational q_value = q_slope * psi.energy + 1;
    run_exact({{"Q Psi_0 - q Psi_0", [Q](const Input& in) { return Q.apply(in.f) - in.value * in.f; }}},
              {{psi.exact_unnormalized, state_label(ground), q_value}}, out);
    family_json["ground_state"] = true;
  }
  return finish("invariance_algebra", params, std::move(family_json), std::move(out), start);
}

CheckReport check_su2_deformation(const ModelParams& params, int max_level, bool mutate) {
  params.require_bound_state();
  const auto start = Clock::now();
  const DunklCoulombOperators ops(params);
  const Operator& H = ops.hamiltonian;
  const Operator& J = ops.Jcal;
  const Operator& A1 = ops.A1;
  const Operator& A2 = ops.A2;
  const Operator& R1 = ops.R1;
  const Operator& R2 = ops.R2;
  const Operator one;
  const Operator def1 = one + (2 * params.mu1) * R1;
  const Operator def2 = one + (2 * params.mu2) * R2;
  const Operator reflection_mix = params.mu1 * R1 + params.mu2 * R2 + (2 * params.mu1 * params.mu2) * (R1 * R2);
  const Rational casimir_shift = params.mu1 * params.mu1 + params.mu2 * params.mu2 + Rational(1, 4);

  std::vector<Input> inputs;
  for (int level = 0; level <= max_level; ++level) {
    for (const auto& qn : enumerate_level(level)) {
      // sqrt(alpha^2 / (-2E)) = kappa on this eigenspace.
      Rational k = kappa(params, qn);
      if (mutate) k += 1;
      inputs.push_back({full_wavefunction(qn, params).exact_unnormalized, state_label(qn), k});
    }
  }
  // Energies are looked up through the label so that relations stay pure.
  auto energy_of = [params](const Input& in) { return energy(params, in.label.get<QuantumNumbers>()); };

  const Operator A1A2 = commutator(A1, A2);
  const Operator A2J = commutator(A2, J);
  const Operator JA1 = commutator(J, A1);
  const Operator A_sq = A1 * A1 + A2 * A2;
  const Operator J_sq = J * J;
  const std::vector<Relation> relations{
      {"H Psi - E Psi", [H, energy_of](const Input& in) { return H.apply(in.f) - energy_of(in) * in.f; }},
      {"[J1,J2] - i J3: kappa^2 [A1,A2] - Jcal",
       [A1A2, J](const Input& in) { return (in.value * in.value) * A1A2.apply(in.f) - J.apply(in.f); }},
      {"[J2,J3] - i J1 (1 + 2 mu2 R2): kappa [A2,Jcal] + kappa A1 (1 + 2 mu2 R2)",
       [A2J, A1, def2](const Input& in) { return in.value * (A2J.apply(in.f) + A1.apply(def2.apply(in.f))); }},
      {"[J3,J1] - i J2 (1 + 2 mu1 R1): kappa [Jcal,A1] + kappa A2 (1 + 2 mu1 R1)",
       [JA1, A2, def1](const Input& in) { return in.value * (JA1.apply(in.f) + A2.apply(def1.apply(in.f))); }},
      {"{J1,R1}", [op = anticommutator(A1, R1)](const Input& in) { return in.value * op.apply(in.f); }},
      {"{J2,R2}", [op = anticommutator(A2, R2)](const Input& in) { return in.value * op.apply(in.f); }},
      {"[J1,R2]", [op = commutator(A1, R2)](const Input& in) { return in.value * op.apply(in.f); }},
      {"[J2,R1]", [op = commutator(A2, R1)](const Input& in) { return in.value * op.apply(in.f); }},
      {"{J3,R1}", [op = anticommutator(J, R1)](const Input& in) { return op.apply(in.f); }},
      {"{J3,R2}", [op = anticommutator(J, R2)](const Input& in) { return op.apply(in.f); }},
      {"J1^2 + J2^2 + J3^2 + mu1 R1 + mu2 R2 + 2 mu1 mu2 R1 R2 - (kappa^2 - mu1^2 - mu2^2 - 1/4)",
       [A_sq, J_sq, reflection_mix, casimir_shift](const Input& in) {
         const Rational k_sq = in.value * in.value;
         return k_sq * A_sq.apply(in.f) - J_sq.apply(in.f) + reflection_mix.apply(in.f) -
                (k_sq - casimir_shift) * in.f;
       }},
  };
  Outcome out;
  run_exact(relations, inputs, out);
  return finish("su2", params, {{"levels", max_level}, {"states", inputs.size()}}, std::move(out), start);
}

CheckReport check_eigenfunctions(const ModelParams& params, int l_max, int two_n_max, bool mutate) {
  params.require_bound_state();
  const auto start = Clock::now();
  const DunklCoulombOperators ops(params);
  std::vector<Input> inputs;
  for (int l = 0; l <= l_max; ++l) {
    for (const auto& h : harmonics_up_to(two_n_max)) {
      const QuantumNumbers qn{l, h.two_n, h.e1, h.e2};
      Rational e = energy(params, qn);
      if (mutate) e += 1;
      inputs.push_back({full_wavefunction(qn, params).exact_unnormalized, state_label(qn), e});
    }
  }
  const Operator H = ops.hamiltonian;
  Outcome out;
  run_exact({{"H Psi - E Psi", [H](const Input& in) { return H.apply(in.f) - in.value * in.f; }}}, inputs, out);
  return finish("eigenfunctions", params,
                {{"l_max", l_max}, {"two_n_max", two_n_max}, {"states", inputs.size()}}, std::move(out), start);
}

CheckReport check_separation(const ModelParams& params, int two_n_max, int l_max, bool mutate) {
  params.validate();
  const auto start = Clock::now();
  const DunklCoulombOperators ops(params);
  const Operator J_sq = ops.Jcal * ops.Jcal;

  // Jcal^2 = -J3^2 = -(2 B_phi + 2 mu1 mu2 (1 - R1R2)) and B_phi h = (m^2/2) h.
  std::vector<Input> harmonics;
  for (const auto& qn : harmonics_up_to(two_n_max)) {
    Rational m_sq = separation_constant(params, qn);
    if (mutate) m_sq += 1;
    const Rational shift = 2 * params.mu1 * params.mu2 * (1 - qn.sector());
    harmonics.push_back({angular_harmonic(qn, params), state_label(qn), m_sq + shift});
  }
  Outcome out;
  run_exact({{"Jcal^2 h + (m^2 + 2 mu1 mu2 (1 - R1R2)) h",
              [J_sq](const Input& in) { return J_sq.apply(in.f) + in.value * in.f; }}},
            harmonics, out);

  CheckReport report = finish("separation", params, {{"harmonics_two_n_max", two_n_max}}, std::move(out), start);
  if (params.alpha >= 0) return report;

  // Radial equation (A_r - E + m^2/(2 r^2)) R = 0 by central differences.
  const double mu = to_double(params.mu());
  const double alpha = to_double(params.alpha);
  const double h = radial_fd_step;
  constexpr int points = 200;
  double worst = 0.0;
  nlohmann::json worst_at;
  for (int l = 0; l <= l_max; ++l) {
    for (const auto& hq : harmonics_up_to(std::min(two_n_max, 4))) {
      const QuantumNumbers qn{l, hq.two_n, hq.e1, hq.e2};
      const double e = to_double(energy(params, qn));
      const double bt = to_double(beta(params, qn));
      const double laguerre_a = 2.0 * qn.two_n + 2.0 * mu;
      double m_sq = to_double(separation_constant(params, qn));
      if (mutate) m_sq += 1.0;
      auto R = [&](double r) {
        const double x = bt * r;
        return std::exp(-x / 2.0) * std::pow(x, qn.two_n) * laguerre_value(qn.l, laguerre_a, x);
      };
      for (int i = 0; i < points; ++i) {
        const double r = 0.1 * std::pow(200.0, static_cast<double>(i) / (points - 1));
        const double f0 = R(r);
        const double fp = R(r + h);
        const double fm = R(r - h);
        const double d1 = (fp - fm) / (2.0 * h);
        const double d2 = (fp - 2.0 * f0 + fm) / (h * h);
        const double terms[] = {-0.5 * d2, -(1.0 + 2.0 * mu) / (2.0 * r) * d1, alpha / r * f0, -e * f0,
                                m_sq / (2.0 * r * r) * f0};
        double residual = 0.0;
        double scale = 0.0;
        for (const double t : terms) {
          residual += t;
          scale += std::abs(t);
        }
        if (scale == 0.0) continue;
        const double rel = std::abs(residual) / scale;
        if (rel > worst) {
          worst = rel;
          worst_at = {{"state", qn}, {"r", r}};
        }
      }
    }
  }
  RelationResult fd{"(A_r - E + m^2/(2r^2)) R [finite differences, relative]", Exactness::floating,
                    worst <= radial_fd_tolerance, worst, radial_fd_tolerance};
  report.relations.push_back(fd);
  report.exactness = Exactness::floating;
  report.residual = worst;
  report.tolerance = radial_fd_tolerance;
  if (!fd.passed && report.witness.is_null()) {
    report.witness = {{"relation", fd.name}, {"input", worst_at}};
  }
  report.passed = report.passed && fd.passed;
  report.family["radial_l_max"] = l_max;
  report.family["radial_two_n_max"] = std::min(two_n_max, 4);
  report.family["radial_grid"] = {{"r_min", 0.1}, {"r_max", 20.0}, {"points", points}, {"step", h}};
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return report;
}

CheckReport check_harmonic(const ModelParams& params, int two_n_max, bool mutate) {
  const auto start = Clock::now();
  ModelParams shifted = params;
  if (mutate) shifted.mu1 += 1;
  const Operator lap = DunklCoulombOperators(shifted).laplacian;
  std::vector<Input> harmonics;
  for (const auto& qn : harmonics_up_to(two_n_max)) {
    harmonics.push_back({angular_harmonic(qn, params), state_label(qn), Rational(0)});
  }
  Outcome out;
  run_exact({operator_relation("laplacian h", lap)}, harmonics, out);
  return finish("harmonic", params, {{"harmonics_two_n_max", two_n_max}}, std::move(out), start);
}

const std::vector<std::string_view>& check_names() {
  static const std::vector<std::string_view> names{
      "so21", "casimir", "constants_of_motion", "invariance_algebra",
      "su2",  "eigenfunctions", "separation", "harmonic"};
  return names;
}

std::vector<ModelParams> default_parameter_grid() {
  return {{Rational(0), Rational(0), Rational(-1)},
          {Rational(1, 4), Rational(3, 4), Rational(-1)},
          {Rational(1), Rational(2), Rational(-1)}};
}

std::vector<CheckReport> run_suite(const std::vector<ModelParams>& params_list, const SuiteConfig& config) {
  const auto& names = check_names();
  auto known = [&names](const std::string& n) { return std::find(names.begin(), names.end(), n) != names.end(); };
  for (const auto& s : config.suites) {
    if (!known(s)) throw std::invalid_argument("unknown suite: '" + s + "'");
  }
  if (config.mutate && !known(*config.mutate)) {
    throw std::invalid_argument("unknown mutation: '" + *config.mutate + "'");
  }
  auto selected = [&config](std::string_view n) {
    return config.suites.empty() ||
           std::find(config.suites.begin(), config.suites.end(), n) != config.suites.end();
  };
  auto mutated = [&config](std::string_view n) { return config.mutate && *config.mutate == n; };

  std::vector<CheckReport> reports;
  if (params_list.empty()) return reports;
  const TestFamily family = default_test_family(config.seed);

  for (const auto& params : params_list) {
    params.validate();
    const bool bound = params.alpha < 0;
    for (const auto name : names) {
      if (!selected(name)) continue;
      const bool m = mutated(name);
      if (name == "so21") reports.push_back(check_so21(params, family, m));
      else if (name == "casimir") reports.push_back(check_casimir(params, family, m));
      else if (name == "constants_of_motion") reports.push_back(check_constants_of_motion(params, family, m));
      else if (name == "invariance_algebra") reports.push_back(check_invariance_algebra(params, family, m));
      else if (name == "su2" && bound) reports.push_back(check_su2_deformation(params, config.su2_max_level, m));
      else if (name == "eigenfunctions" && bound)
        reports.push_back(check_eigenfunctions(params, config.eigen_l_max, config.eigen_two_n_max, m));
      else if (name == "separation")
        reports.push_back(check_separation(params, config.harmonic_two_n_max, config.eigen_l_max, m));
      else if (name == "harmonic") reports.push_back(check_harmonic(params, config.harmonic_two_n_max, m));
    }
  }
  return reports;
}

void to_json(nlohmann::json& j, const CheckReport& report) {
  auto relations = nlohmann::json::array();
  for (const auto& rel : report.relations) {
    nlohmann::json r{{"name", rel.name},
                     {"status", rel.passed ? "pass" : "fail"},
                     {"exactness", rel.exactness == Exactness::exact ? "exact" : "float"},
                     {"residual", rel.residual}};
    if (rel.tolerance) r["tolerance"] = *rel.tolerance;
    relations.push_back(std::move(r));
  }
  j = nlohmann::json{{"name", report.name},
                     {"params",
                      {{"mu1", to_string(report.params.mu1)},
                       {"mu2", to_string(report.params.mu2)},
                       {"alpha", to_string(report.params.alpha)}}},
                     {"status", report.passed ? "pass" : "fail"},
                     {"exactness", report.exactness == Exactness::exact ? "exact" : "float"},
                     {"residual", report.residual},
                     {"witness", report.witness},
                     {"family", report.family},
                     {"relations", std::move(relations)},
                     {"elapsed_ms", report.elapsed_ms}};
  if (report.tolerance) j["tolerance"] = *report.tolerance;
}

}  // namespace dcp
