#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "dcp/verification.hpp"

using dcp::ModelParams;
using dcp::Rational;

namespace {

const ModelParams quarter{Rational(1, 4), Rational(3, 4), Rational(-1)};

const dcp::TestFamily& family() {
  static const dcp::TestFamily f = dcp::default_test_family();
  return f;
}

nlohmann::json strip_timing(const std::vector<dcp::CheckReport>& reports) {
  nlohmann::json j = reports;
  for (auto& r : j) r.erase("elapsed_ms");
  return j;
}

}  // namespace

TEST(Verification, DefaultFamilySize) {
  EXPECT_GE(family().canonical_count, 200);
  EXPECT_EQ(family().random_count, 50);
  EXPECT_EQ(family().members.size(), static_cast<std::size_t>(family().canonical_count + family().random_count));
  EXPECT_EQ(dcp::default_test_family().members, family().members);
}

TEST(Verification, ExactChecksPassAndMutationsFail) {
  using Check = dcp::CheckReport (*)(const ModelParams&, const dcp::TestFamily&, bool);
  for (Check check : {Check(&dcp::check_so21), Check(&dcp::check_casimir), Check(&dcp::check_constants_of_motion),
                      Check(&dcp::check_invariance_algebra)}) {
    const auto good = check(quarter, family(), false);
    EXPECT_TRUE(good.passed) << good.name;
    EXPECT_EQ(good.residual, "0/1") << good.name;
    EXPECT_TRUE(good.witness.is_null());
    const auto bad = check(quarter, family(), true);
    EXPECT_FALSE(bad.passed) << bad.name;
    ASSERT_TRUE(bad.witness.is_object());
    EXPECT_TRUE(bad.witness.contains("input"));
    EXPECT_TRUE(bad.witness.contains("image"));
  }
}

TEST(Verification, WitnessIsReproducible) {
  const auto bad = dcp::check_so21(quarter, family(), true);
  const auto input = bad.witness.at("input").get<dcp::FunctionExpr>();
  const auto image = bad.witness.at("image").get<dcp::FunctionExpr>();
  EXPECT_FALSE(image.is_zero());
  EXPECT_FALSE(input.is_zero());
}

TEST(Verification, StateChecks) {
  EXPECT_TRUE(dcp::check_su2_deformation(quarter, 2).passed);
  EXPECT_FALSE(dcp::check_su2_deformation(quarter, 2, true).passed);
  EXPECT_TRUE(dcp::check_eigenfunctions(quarter, 2, 3).passed);
  EXPECT_FALSE(dcp::check_eigenfunctions(quarter, 2, 3, true).passed);
  const auto sep = dcp::check_separation(quarter, 6, 3);
  EXPECT_TRUE(sep.passed);
  EXPECT_EQ(nlohmann::json(sep)["exactness"], "float");
  EXPECT_FALSE(dcp::check_separation(quarter, 6, 3, true).passed);
  EXPECT_TRUE(dcp::check_harmonic(quarter, 6).passed);
  EXPECT_FALSE(dcp::check_harmonic(quarter, 6, true).passed);
}

TEST(Verification, ReportSchema) {
  const nlohmann::json j = dcp::check_harmonic(quarter, 4);
  for (const char* key : {"name", "params", "status", "exactness", "residual", "witness", "elapsed_ms"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["params"]["mu1"], "1/4");
}

TEST(Verification, SuiteIsDeterministic) {
  dcp::SuiteConfig config;
  config.suites = {"harmonic", "separation"};
  const auto a = dcp::run_suite(dcp::default_parameter_grid(), config);
  const auto b = dcp::run_suite(dcp::default_parameter_grid(), config);
  ASSERT_EQ(a.size(), 6u);
  EXPECT_EQ(strip_timing(a).dump(), strip_timing(b).dump());
}

TEST(Verification, SeedDoesNotChangeExactStatus) {
  dcp::SuiteConfig config;
  config.suites = {"so21"};
  config.seed = 99;
  for (const auto& r : dcp::run_suite({quarter}, config)) EXPECT_TRUE(r.passed);
}

TEST(Verification, SuiteEdgeCases) {
  EXPECT_TRUE(dcp::run_suite({}, {}).empty());
  dcp::SuiteConfig bad;
  bad.suites = {"nope"};
  EXPECT_THROW(dcp::run_suite({quarter}, bad), std::invalid_argument);
  dcp::SuiteConfig bad_mutation;
  bad_mutation.mutate = "nope";
  EXPECT_THROW(dcp::run_suite({quarter}, bad_mutation), std::invalid_argument);
  dcp::SuiteConfig all;
  all.suites = {"su2", "eigenfunctions", "so21"};
  const auto repulsive = dcp::run_suite({ModelParams{Rational(0), Rational(0), Rational(1)}}, all);
  ASSERT_EQ(repulsive.size(), 1u);
  EXPECT_EQ(repulsive[0].name, "so21");
}
