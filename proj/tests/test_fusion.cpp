#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "beliefkit/errors.hpp"
#include "beliefkit/fusion.hpp"
#include "support/test_support.hpp"

using namespace beliefkit;
using namespace testsupport;

namespace {

void check_pmf(const ProbabilityMassFunction& got, std::vector<double> expected,
               double tol = 1e-3) {
  REQUIRE(static_cast<std::size_t>(got.size()) == expected.size());
  for (int e = 0; e < got.size(); ++e) {
    CHECK(std::abs(got.prob(e) - expected[static_cast<std::size_t>(e)]) < tol);
  }
}

}  // namespace

TEST_CASE("pairwise rule worked values") {
  auto p1 = make_pmf({0.9, 0.09, 0.01});
  auto p2 = make_pmf({0.01, 0.14, 0.85});
  check_pmf(fcpt_pcr_pair(p1, p2), {0.5046, 0.0531, 0.4423});

  auto p3 = make_pmf({0.5, 0.25, 0.25});
  check_pmf(fcpt_pcr_pair(p3, p3), {0.5658, 0.2171, 0.2171});

  SUBCASE("conflict shrinks the middle element below both inputs") {
    ProbabilityMassFunction fused = fcpt_pcr_pair(p1, p2);
    CHECK(fused.prob(1) < std::min(p1.prob(1), p2.prob(1)));
  }
  SUBCASE("frame mismatch") {
    CHECK_THROWS_AS(fcpt_pcr_pair(p1, make_pmf({0.5, 0.5})), FrameMismatchError);
  }
}

TEST_CASE("pairwise rule is commutative but not associative") {
  SUBCASE("commutativity on random pairs") {
    for (int n = 2; n <= 5; ++n) {
      auto frame = FrameOfDiscernment::with_default_labels(n);
      SplitMix64 rng(60 + static_cast<std::uint64_t>(n));
      for (int trial = 0; trial < 125; ++trial) {
        ProbabilityMassFunction a = random_pmf(frame, rng);
        ProbabilityMassFunction b = random_pmf(frame, rng);
        CHECK(max_abs_diff(fcpt_pcr_pair(a, b), fcpt_pcr_pair(b, a)) < 1e-12);
      }
    }
  }
  SUBCASE("regression witness for non-associativity") {
    auto p1 = make_pmf({0.9, 0.09, 0.01});
    auto p2 = make_pmf({0.01, 0.14, 0.85});
    auto p3 = make_pmf({0.5, 0.25, 0.25});
    ProbabilityMassFunction left = fcpt_pcr_pair(fcpt_pcr_pair(p1, p2), p3);
    ProbabilityMassFunction right = fcpt_pcr_pair(p1, fcpt_pcr_pair(p2, p3));
    CHECK(max_abs_diff(left, right) > 1e-6);
    // observed gap is large, ~0.085 on the first element
    CHECK(max_abs_diff(left, right) > 0.05);
  }
}

TEST_CASE("iterated self-fusion") {
  auto p = make_pmf({0.5, 0.25, 0.25});

  SUBCASE("trajectory shape") {
    FusionTrajectory traj = iterate_self_fusion(p, 15);
    CHECK(traj.steps() == 15);
    CHECK(traj.states.size() == 16);
    CHECK(max_abs_diff(traj.states.front(), p) == 0.0);
    for (const auto& state : traj.states) {
      double sum = 0.0;
      for (int e = 0; e < state.size(); ++e) sum += state.prob(e);
      CHECK(std::abs(sum - 1.0) < 1e-9);
    }
  }
  SUBCASE("bounded amplification toward ~0.7016") {
    FusionTrajectory traj = iterate_self_fusion(p, 50);
    double previous = traj.states.front().prob(0);
    for (std::size_t i = 1; i < traj.states.size(); ++i) {
      CHECK(traj.states[i].prob(0) >= previous - 1e-12);
      previous = traj.states[i].prob(0);
    }
    CHECK(std::abs(traj.states[50].prob(0) - 0.7016) < 1e-3);
    CHECK(traj.states[50].prob(0) < 1.0 - 1e-6);
  }
  SUBCASE("dempster comparison hits the ceiling") {
    FusionTrajectory traj = iterate_self_fusion(p, 15, PairwiseRule::drc);
    CHECK(traj.states[15].prob(0) > 0.999);
  }
  SUBCASE("uniform distribution is a fixed point") {
    auto uniform = make_pmf({1.0 / 3, 1.0 / 3, 1.0 / 3});
    FusionTrajectory traj = iterate_self_fusion(uniform, 5);
    for (const auto& state : traj.states) {
      CHECK(max_abs_diff(state, uniform) < 1e-12);
    }
  }
  SUBCASE("step count must be positive") {
    CHECK_THROWS_AS(iterate_self_fusion(p, 0), std::invalid_argument);
  }
}

TEST_CASE("bounded amplification across leader weights") {
  // p(A) from 0.34 to 1.0: the 50-step value stays strictly below 1 while the
  // dempster trajectory escapes past 0.999.
  for (double lead : {0.34, 0.4, 0.5, 0.6, 0.8, 0.95}) {
    auto p = make_pmf({lead, (1.0 - lead) / 2, (1.0 - lead) / 2});
    FusionTrajectory ours = iterate_self_fusion(p, 50);
    double previous = ours.states.front().prob(0);
    for (std::size_t i = 1; i < ours.states.size(); ++i) {
      CHECK(ours.states[i].prob(0) >= previous - 1e-12);
      previous = ours.states[i].prob(0);
    }
    CHECK(ours.states[50].prob(0) < 1.0 - 1e-6);
    FusionTrajectory dempster = iterate_self_fusion(p, 50, PairwiseRule::drc);
    CHECK(dempster.states[50].prob(0) > dempster.states[0].prob(0));
    // the winner-take-all drift rate is (p / ((1-p)/2))^steps, so the hard
    // ceiling check only holds once the lead is clear of 1/3
    if (lead >= 0.4) CHECK(dempster.states[50].prob(0) > 0.999);
  }
  // degenerate leader: fixed point at certainty
  auto certain = make_pmf({1.0, 0.0, 0.0});
  FusionTrajectory fixed = iterate_self_fusion(certain, 5);
  CHECK(fixed.states[5].prob(0) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("multi-source fusion") {
  SUBCASE("single input returns itself") {
    auto p = make_pmf({0.6, 0.3, 0.1});
    std::vector<ProbabilityMassFunction> one{p};
    CHECK(max_abs_diff(fcpt_pcr_multi(one), p) < 1e-12);
  }
  SUBCASE("two identical inputs equal one pairwise fusion") {
    auto p = make_pmf({0.5, 0.25, 0.25});
    std::vector<ProbabilityMassFunction> two{p, p};
    CHECK(max_abs_diff(fcpt_pcr_multi(two), fcpt_pcr_pair(p, p)) < 1e-12);
  }
  SUBCASE("input order does not matter") {
    auto frame = FrameOfDiscernment::with_default_labels(4);
    SplitMix64 rng(88);
    std::vector<ProbabilityMassFunction> sources;
    for (int i = 0; i < 5; ++i) sources.push_back(random_pmf(frame, rng));
    ProbabilityMassFunction forward = fcpt_pcr_multi(sources);
    std::vector<ProbabilityMassFunction> reversed(sources.rbegin(), sources.rend());
    CHECK(max_abs_diff(forward, fcpt_pcr_multi(reversed)) < 1e-12);
  }
  SUBCASE("empty input is rejected") {
    std::vector<ProbabilityMassFunction> none;
    CHECK_THROWS_AS(fcpt_pcr_multi(none), std::invalid_argument);
  }
}

TEST_CASE("transformation ablation inside the two-step rule") {
  auto p1 = make_pmf({0.9, 0.09, 0.01});
  auto p2 = make_pmf({0.01, 0.14, 0.85});
  auto p3 = make_pmf({0.5, 0.25, 0.25});

  SUBCASE("fcp slot reproduces the pairwise rule by definition") {
    CHECK(max_abs_diff(ablation_pair(p1, p2, AblationTransform::fcp),
                       fcpt_pcr_pair(p1, p2)) == 0.0);
  }
  SUBCASE("conflict pair across the transform slots") {
    check_pmf(ablation_pair(p1, p2, AblationTransform::betp), {0.4550, 0.1150, 0.4300});
    check_pmf(ablation_pair(p1, p2, AblationTransform::pnpl), {0.4574, 0.1104, 0.4323});
    check_pmf(ablation_pair(p1, p2, AblationTransform::cuzzp), {0.4550, 0.1150, 0.4300});
    check_pmf(ablation_pair(p1, p2, AblationTransform::dsmp0), {0.4554, 0.1331, 0.4115});
  }
  SUBCASE("self-fusion pair across the transform slots") {
    check_pmf(ablation_pair(p3, p3, AblationTransform::betp), {0.5, 0.25, 0.25});
    check_pmf(ablation_pair(p3, p3, AblationTransform::pnpl), {0.4615, 0.2692, 0.2692});
    check_pmf(ablation_pair(p3, p3, AblationTransform::cuzzp), {0.5, 0.25, 0.25});
    check_pmf(ablation_pair(p3, p3, AblationTransform::dsmp0), {0.65, 0.175, 0.175});
  }
  SUBCASE("disjunctive-then-transform output: pignistic equals cuzzolin here") {
    // every focal of a two-distribution union has at most two elements, which
    // collapses the cuzzolin share to the even split
    auto frame = FrameOfDiscernment::with_default_labels(3);
    SplitMix64 rng(91);
    for (int trial = 0; trial < 50; ++trial) {
      ProbabilityMassFunction a = random_pmf(frame, rng);
      ProbabilityMassFunction b = random_pmf(frame, rng);
      CHECK(max_abs_diff(ablation_pair(a, b, AblationTransform::betp),
                         ablation_pair(a, b, AblationTransform::cuzzp)) < 1e-12);
    }
  }
  SUBCASE("tag parsing") {
    CHECK(parse_ablation_transform("betp") == AblationTransform::betp);
    CHECK(parse_ablation_transform("dsmp0") == AblationTransform::dsmp0);
    CHECK_THROWS_AS(parse_ablation_transform("nope"), std::invalid_argument);
  }
}
