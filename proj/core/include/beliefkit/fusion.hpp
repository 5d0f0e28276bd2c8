#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "beliefkit/mass_function.hpp"

namespace beliefkit {

/// Probability combination: disjunctive combination of the two distributions
/// lifted to singleton masses, then the full-causality transformation back to
/// a distribution. Commutative, deliberately not associative; iterated
/// self-fusion amplifies a leading element toward a limit strictly below 1.
ProbabilityMassFunction fcpt_pcr_pair(const ProbabilityMassFunction& p1,
                                      const ProbabilityMassFunction& p2);

enum class PairwiseRule { fcpt_pcr, drc };

/// States visited when fusing `fixed` into the running distribution
/// `steps` times; states[0] is the starting distribution.
struct FusionTrajectory {
  std::vector<ProbabilityMassFunction> states;
  int steps() const { return static_cast<int>(states.size()) - 1; }
};

FusionTrajectory iterate_self_fusion(const ProbabilityMassFunction& p, int steps,
                                     PairwiseRule rule = PairwiseRule::fcpt_pcr);

/// Multi-source fusion: arithmetic mean of the inputs, then count-1 pairwise
/// fusions of the running value with that fixed mean. Order-free; a single
/// input is returned unchanged.
ProbabilityMassFunction fcpt_pcr_multi(std::span<const ProbabilityMassFunction> sources);

/// Transformation slot for the two-step rule's ablation.
enum class AblationTransform { fcp, betp, pnpl, dsmp0, cuzzp };

AblationTransform parse_ablation_transform(std::string_view name);
std::string_view ablation_transform_name(AblationTransform t);

/// Disjunctive combination followed by the named transformation.
ProbabilityMassFunction ablation_pair(const ProbabilityMassFunction& p1,
                                      const ProbabilityMassFunction& p2,
                                      AblationTransform transform);

}  // namespace beliefkit
