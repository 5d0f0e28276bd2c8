#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "beliefkit/errors.hpp"
#include "beliefkit/evaluation.hpp"
#include "beliefkit/transform.hpp"
#include "support/test_support.hpp"

using namespace beliefkit;
using namespace testsupport;

namespace {

MassFunction example1() {
  return make_mass(4, {{0b0001, 0.16},
                       {0b0010, 0.14},
                       {0b0100, 0.01},
                       {0b1000, 0.02},
                       {0b0011, 0.20},
                       {0b0101, 0.09},
                       {0b1001, 0.04},
                       {0b0110, 0.04},
                       {0b1010, 0.02},
                       {0b1100, 0.01},
                       {0b0111, 0.10},
                       {0b1011, 0.03},
                       {0b1101, 0.03},
                       {0b1110, 0.03},
                       {0b1111, 0.08}});
}

MassFunction sweep_mass(int a_size) {
  auto frame = FrameOfDiscernment::with_default_labels(10);
  std::map<FocalSet, double> entries;
  entries[FocalSet(0b0000011100)] += 0.15;  // {e3,e4,e5}
  entries[FocalSet(0b0000100000)] += 0.05;  // {e6}
  entries[frame.full_set()] += 0.10;
  entries[FocalSet((1u << a_size) - 1)] += 0.70;  // A grows from {e1}
  return MassFunction(frame, std::move(entries));
}

}  // namespace

TEST_CASE("probabilistic information content") {
  CHECK(pic(make_pmf({1.0 / 3, 1.0 / 3, 1.0 / 3})) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(pic(make_pmf({1.0, 0.0, 0.0})) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(pic(fcpt(example1())) - 0.2039) < 5e-4);

  SUBCASE("pic plus entropy is exactly one") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
      auto frame = FrameOfDiscernment::with_default_labels(2 + static_cast<int>(rng.bounded(5)));
      ProbabilityMassFunction p = random_pmf(frame, rng);
      CHECK(pic(p) + normalized_entropy(p) == 1.0);
      CHECK(pic(p) >= 0.0);
      CHECK(pic(p) <= 1.0);
    }
  }
  SUBCASE("single-element frame rejected") {
    CHECK_THROWS_AS(pic(make_pmf({1.0})), std::invalid_argument);
  }
}

TEST_CASE("jousselme distance") {
  MassFunction m = example1();
  CHECK(jousselme_distance(m, m) == 0.0);
  CHECK(std::abs(jousselme_distance(m, betp(m).to_mass()) - 0.2462) < 5e-4);
  CHECK(std::abs(jousselme_distance(m, fcpt(m).to_mass()) - 0.2590) < 5e-4);

  SUBCASE("metric axioms on random triples") {
    for (int n = 2; n <= 5; ++n) {
      auto frame = FrameOfDiscernment::with_default_labels(n);
      SplitMix64 rng(40 + static_cast<std::uint64_t>(n));
      for (int trial = 0; trial < 60; ++trial) {
        MassFunction a = random_mass(frame, rng);
        MassFunction b = random_mass(frame, rng);
        MassFunction c = random_mass(frame, rng);
        const double ab = jousselme_distance(a, b);
        const double ba = jousselme_distance(b, a);
        const double ac = jousselme_distance(a, c);
        const double cb = jousselme_distance(c, b);
        CHECK(std::abs(ab - ba) < 1e-12);
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0 + 1e-12);
        CHECK(ab <= ac + cb + 1e-9);
        CHECK(jousselme_distance(a, a) < 1e-12);
      }
    }
  }
  SUBCASE("frame mismatch") {
    CHECK_THROWS_AS(jousselme_distance(m, make_mass(2, {{0b11, 1.0}})),
                    FrameMismatchError);
  }
}

TEST_CASE("correlation coefficient") {
  MassFunction m = example1();
  CHECK(correlation_coefficient(m, m) == doctest::Approx(1.0).epsilon(1e-12));

  SUBCASE("ten-element sweep endpoints match the reference values") {
    MassFunction tight = sweep_mass(1);
    CHECK(std::abs(correlation_coefficient(tight, fcpt(tight).to_mass()) - 0.9714) < 1e-3);
    MassFunction broad = sweep_mass(10);
    CHECK(std::abs(correlation_coefficient(broad, betp(broad).to_mass()) - 0.3772) < 1e-3);
  }
  SUBCASE("symmetry on random pairs") {
    auto frame = FrameOfDiscernment::with_default_labels(4);
    SplitMix64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
      MassFunction a = random_mass(frame, rng);
      MassFunction b = random_mass(frame, rng);
      const double r = correlation_coefficient(a, b);
      CHECK(std::abs(r - correlation_coefficient(b, a)) < 1e-12);
      CHECK(r > 0.0);
      CHECK(r <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("joint criterion over the reference method set") {
  MassFunction m = example1();
  std::vector<std::pair<std::string, ProbabilityMassFunction>> methods;
  methods.emplace_back("pnpl", pnpl(m));
  methods.emplace_back("cuzzp", cuzzp(m));
  methods.emplace_back("betp", betp(m));
  methods.emplace_back("prapl", prapl(m));
  methods.emplace_back("dsmp0", dsmp(m, 0.0));
  methods.emplace_back("dsmp0.001", dsmp(m, 0.001));
  methods.emplace_back("fcp", fcpt(m));
  auto alphas = uniform_alpha_grid(11);
  EvaluationReport report = evaluate_methods(m, methods, alphas);

  auto find = [&](const std::string& name) -> const MethodEvaluation& {
    for (const auto& entry : report.methods) {
      if (entry.method == name) return entry;
    }
    FAIL("method not found: ", name);
    return report.methods.front();
  };

  SUBCASE("normalized information indexes") {
    CHECK(std::abs(find("pnpl").pic_index - 1.0000) < 5e-4);
    CHECK(std::abs(find("cuzzp").pic_index - 0.8974) < 5e-4);
    CHECK(std::abs(find("betp").pic_index - 0.8446) < 5e-4);
    CHECK(std::abs(find("prapl").pic_index - 0.8131) < 5e-4);
    CHECK(std::abs(find("dsmp0").pic_index - 0.0000) < 5e-4);
    CHECK(std::abs(find("fcp").pic_index - 0.4122) < 5e-4);
  }
  SUBCASE("alpha endpoints recover the bare indexes") {
    for (const auto& entry : report.methods) {
      CHECK(entry.c_joint.front() == doctest::Approx(entry.pic_index).epsilon(1e-12));
      CHECK(entry.c_joint.back() == doctest::Approx(entry.distance_index).epsilon(1e-12));
    }
  }
  SUBCASE("the causality transform wins on the mean joint score") {
    const double fcp_mean = find("fcp").c_joint_mean;
    for (const auto& entry : report.methods) {
      if (entry.method == "fcp") continue;
      CHECK(fcp_mean < entry.c_joint_mean);
    }
  }
  SUBCASE("entropy-index variant swaps the alpha weighting") {
    EvaluationReport other =
        evaluate_methods(m, methods, alphas, BiCriteriaVariant::entropy_index);
    for (std::size_t i = 0; i < other.methods.size(); ++i) {
      CHECK(other.methods[i].c_joint.front() ==
            doctest::Approx(report.methods[i].c_joint.back()).epsilon(1e-12));
      CHECK(other.methods[i].c_joint.back() ==
            doctest::Approx(report.methods[i].c_joint.front()).epsilon(1e-12));
    }
  }
  SUBCASE("duplicating a method does not move the others' indexes") {
    auto extended = methods;
    extended.emplace_back("betp-copy", betp(m));
    EvaluationReport again = evaluate_methods(m, extended, alphas);
    for (const auto& entry : report.methods) {
      for (const auto& redo : again.methods) {
        if (redo.method == entry.method) {
          CHECK(std::abs(redo.pic_index - entry.pic_index) < 1e-12);
          CHECK(std::abs(redo.distance_index - entry.distance_index) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("degenerate normalization maps every index to zero") {
  MassFunction m = example1();
  std::vector<std::pair<std::string, ProbabilityMassFunction>> methods;
  methods.emplace_back("a", betp(m));
  methods.emplace_back("b", betp(m));
  auto alphas = uniform_alpha_grid(3);
  EvaluationReport report = evaluate_methods(m, methods, alphas);
  for (const auto& entry : report.methods) {
    CHECK(entry.pic_index == 0.0);
    CHECK(entry.distance_index == 0.0);
    CHECK(entry.c_joint_mean == 0.0);
  }
}

TEST_CASE("report CSV layout") {
  MassFunction m = example1();
  std::vector<std::pair<std::string, ProbabilityMassFunction>> methods;
  methods.emplace_back("betp", betp(m));
  methods.emplace_back("fcp", fcpt(m));
  EvaluationReport report = evaluate_methods(m, methods, uniform_alpha_grid(11));
  std::string csv = report_to_csv(report);
  CHECK(csv.find("method,pic,d,r,pic_index,d_index,c_alpha_0.00") == 0);
  CHECK(csv.find("\nbetp,") != std::string::npos);
  CHECK(csv.find("\nfcp,") != std::string::npos);
  // 4-decimal default formatting
  CHECK(csv.find("0.0926") != std::string::npos);

  CHECK_THROWS_AS(
      evaluate_methods(m, std::span<const std::pair<std::string, ProbabilityMassFunction>>(
                              methods.data(), 1),
                       uniform_alpha_grid(11)),
      std::invalid_argument);
}
