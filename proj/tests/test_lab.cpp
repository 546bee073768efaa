#include <gtest/gtest.h>

#include "pcp/lab.hpp"

namespace {

using namespace pcp;

LabConfig cfg_for(const std::string& suite, size_t trials = 6, uint64_t seed = 777) {
  LabConfig cfg;
  cfg.suite = suite;
  cfg.trials = trials;
  cfg.seed = seed;
  return cfg;
}

TEST(RandomAction, DeterministicGivenSeed) {
  TwistedPartialAction a = random_action(12345, 4, 4);
  TwistedPartialAction b = random_action(12345, 4, 4);
  EXPECT_EQ(a.support, b.support);
  EXPECT_EQ(a.dim(), b.dim());
  for (GElem g : a.support) {
    EXPECT_TRUE(vec_eq(a.one(g), b.one(g)));
    EXPECT_EQ(a.alpha.at(g), b.alpha.at(g));
  }
}

TEST(RandomAction, BoundsRespected) {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    TwistedPartialAction a = random_action(seed, 2, 2);
    EXPECT_LE(a.dim(), 2u);
    EXPECT_LE(a.group.order(), 2u);
  }
}

TEST(RandomAction, AlwaysValid) {
  // the full 1000-seed construction-validity run lives with the acceptance
  // oracle; this keeps a fast slice in the unit suite
  for (uint64_t seed = 100; seed < 400; ++seed)
    EXPECT_TRUE(validate_action(random_action(seed, 4, 4)).ok()) << "seed " << seed;
}

TEST(Suites, NoUnexpectedRefutations) {
  for (const auto& suite : lab_suites()) {
    auto findings = run_suite(cfg_for(suite));
    EXPECT_EQ(count_refuted(findings), 0u) << "suite " << suite;
    EXPECT_FALSE(findings.empty()) << "suite " << suite;
  }
}

TEST(Suites, DeterministicGivenSeed) {
  for (const auto& suite : {"semisimple", "subgroup", "maschke"}) {
    auto a = run_suite(cfg_for(suite, 4, 2024));
    auto b = run_suite(cfg_for(suite, 4, 2024));
    ASSERT_EQ(a.size(), b.size());
    for (size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].fingerprint, b[i].fingerprint);
      EXPECT_EQ(a[i].verdict, b[i].verdict);
      EXPECT_EQ(a[i].witness, b[i].witness);
    }
  }
}

TEST(Suites, SeedChangesInstances) {
  auto a = run_suite(cfg_for("semisimple", 4, 1));
  auto b = run_suite(cfg_for("semisimple", 4, 2));
  bool any_diff = false;
  for (size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (a[i].fingerprint != b[i].fingerprint) any_diff = true;
  EXPECT_TRUE(any_diff);
}

TEST(Suites, ArtinianEmitsCounterexampleFinding) {
  auto findings = run_suite(cfg_for("artinian", 1));
  bool seen = false;
  for (const auto& f : findings)
    if (f.fingerprint == "fixture=two-idempotents-Z" && f.verdict == "confirmed" &&
        f.witness.find("dim=4") != std::string::npos)
      seen = true;
  EXPECT_TRUE(seen);
}

TEST(Suites, SemisimpleControlHasRadicalOne) {
  auto findings = run_suite(cfg_for("semisimple", 2));
  bool seen = false;
  for (const auto& f : findings)
    if (f.fingerprint == "control=GF(2)[C2]" && f.verdict == "confirmed" &&
        f.witness.find("radical dim = 1") != std::string::npos)
      seen = true;
  EXPECT_TRUE(seen);
}

TEST(Suites, MaschkeSurfacesPartialSupportObservation) {
  auto findings = run_suite(cfg_for("maschke", 10, 4));
  bool seen = false;
  for (const auto& f : findings)
    if (f.fingerprint == "observation=partial-support") seen = true;
  EXPECT_TRUE(seen);
}

TEST(Suites, DegenerateInsteadOfCrashOnBadField) {
  // characteristic divides |G| for some sampled groups: those trials must be
  // degenerate, never a crash or a refutation
  LabConfig cfg = cfg_for("semisimple", 8);
  cfg.field = FieldSpec::prime_field(2);
  auto findings = run_suite(cfg);
  EXPECT_EQ(count_refuted(findings), 0u);
}

TEST(Suites, UnknownSuiteRejected) {
  EXPECT_THROW(run_suite(cfg_for("nonsense")), std::runtime_error);
}

TEST(Suites, BadBoundsRejected) {
  LabConfig cfg = cfg_for("artinian");
  cfg.max_dim = 0;
  EXPECT_THROW(run_suite(cfg), std::runtime_error);
  cfg.max_dim = 40;
  EXPECT_THROW(run_suite(cfg), std::runtime_error);
}

TEST(QuotientIsoCheck, DetectsNonInvariant) {
  auto a = fixtures::two_idempotents_z(FieldSpec::rationals());
  EXPECT_THROW(quotient_iso_check(a, {unit_vec(2, 0, FieldSpec::rationals())}),
               std::runtime_error);
}

}  // namespace
