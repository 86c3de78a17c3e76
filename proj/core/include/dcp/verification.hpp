#pragma once

// Every identity of the model as an executable check. Operator identities
// are tested extensionally: the residual operator is applied to a finite
// family of canonical terms and every image must be exactly zero.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dcp/operators.hpp"
#include "dcp/spectra.hpp"
#include "dcp/term_algebra.hpp"

namespace dcp {

enum class Exactness { exact, floating };

struct RelationResult {
  std::string name;
  Exactness exactness = Exactness::exact;
  bool passed = true;
  nlohmann::json residual;  // "p/q" for exact relations, a number otherwise
  std::optional<double> tolerance;
};

struct CheckReport {
  std::string name;
  ModelParams params;
  bool passed = true;
  Exactness exactness = Exactness::exact;
  /// Exact: largest |coeff| over all residual images ("p/q"). Float: max residual.
  nlohmann::json residual;
  std::optional<double> tolerance;
  /// First failing relation, input and residual image; null when passed.
  nlohmann::json witness;
  nlohmann::json family;
  std::vector<RelationResult> relations;
  std::int64_t elapsed_ms = 0;
};

void to_json(nlohmann::json& j, const CheckReport& report);

struct TestFamily {
  std::vector<FunctionExpr> members;
  int canonical_count = 0;
  int random_count = 0;
  std::uint64_t seed = 0;

  nlohmann::json describe() const;
};

inline constexpr std::uint64_t default_seed = 20140;

/// All terms with a <= 6, eps in {0,1}, c in [-4, 4], s in {0, 1/2, 1},
/// plus `random_count` seeded single terms with a <= 10, |c| <= 6.
TestFamily default_test_family(std::uint64_t seed = default_seed, int random_count = 50);

/// Each check applies its documented single-coefficient mutation when
/// `mutate` is set, and must then fail:
///   so21                 L0 -> L0 + 1
///   casimir              -1/4 -> 3/4 in the J-form of the Casimir
///   constants_of_motion  mu1 -> mu1 + 1 in the D1 R1 term of A1
///   invariance_algebra   2 mu1 mu2 -> 2 mu1 mu2 + 1 in Q
///   su2                  kappa -> kappa + 1
///   eigenfunctions       E -> E + 1
///   separation           m^2 -> m^2 + 1
///   harmonic             mu1 -> mu1 + 1 in the Dunkl Laplacian
CheckReport check_so21(const ModelParams& params, const TestFamily& family, bool mutate = false);
CheckReport check_casimir(const ModelParams& params, const TestFamily& family, bool mutate = false);
CheckReport check_constants_of_motion(const ModelParams& params, const TestFamily& family,
                                      bool mutate = false);
/// Bracket relations, reflection (anti)commutators and the Q-H relation.
CheckReport check_invariance_algebra(const ModelParams& params, const TestFamily& family,
                                     bool mutate = false);
/// kappa-renormalized relations on every eigenfunction of levels 0..max_level.
CheckReport check_su2_deformation(const ModelParams& params, int max_level, bool mutate = false);
/// H Psi - E Psi = 0 for l <= l_max, two_n <= two_n_max, all sectors.
CheckReport check_eigenfunctions(const ModelParams& params, int l_max, int two_n_max, bool mutate = false);
/// Angular identity for all harmonics with two_n <= two_n_max; radial ODE by
/// finite differences for l <= l_max, two_n <= min(two_n_max, 4).
CheckReport check_separation(const ModelParams& params, int two_n_max, int l_max, bool mutate = false);
/// Dunkl Laplacian annihilates every harmonic with two_n <= two_n_max.
CheckReport check_harmonic(const ModelParams& params, int two_n_max, bool mutate = false);

const std::vector<std::string_view>& check_names();

struct SuiteConfig {
  std::uint64_t seed = default_seed;
  std::vector<std::string> suites;  // empty: all checks
  std::optional<std::string> mutate;
  int su2_max_level = 3;
  int eigen_l_max = 3;
  int eigen_two_n_max = 4;
  int harmonic_two_n_max = 8;
};

/// The three parameter sets used throughout: (0,0), (1/4,3/4), (1,2), alpha = -1.
std::vector<ModelParams> default_parameter_grid();

/// Runs the selected checks for each parameter set, in a fixed order.
/// State-based checks are skipped when alpha >= 0. Throws
/// std::invalid_argument for unknown suite or mutation names.
std::vector<CheckReport> run_suite(const std::vector<ModelParams>& params_list, const SuiteConfig& config);

/// Worker threads for parallel checks: DCP_THREADS if set and positive,
/// otherwise the hardware concurrency.
unsigned worker_count();

/// Fixed residual tolerance of the radial finite-difference check.
inline constexpr double radial_fd_tolerance = 1e-5;
inline constexpr double radial_fd_step = 1e-4;

}  // namespace dcp
