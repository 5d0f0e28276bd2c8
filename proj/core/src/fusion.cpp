#include "beliefkit/fusion.hpp"

#include <stdexcept>

#include "beliefkit/combination.hpp"
#include "beliefkit/errors.hpp"
#include "beliefkit/transform.hpp"

namespace beliefkit {

namespace {

void check_same_frame(const ProbabilityMassFunction& p1,
                      const ProbabilityMassFunction& p2) {
  if (!(p1.frame() == p2.frame())) {
    throw FrameMismatchError("fusion operands live on different frames");
  }
}

}  // namespace

ProbabilityMassFunction fcpt_pcr_pair(const ProbabilityMassFunction& p1,
                                      const ProbabilityMassFunction& p2) {
  check_same_frame(p1, p2);
  return fcpt(dcr(p1.to_mass(), p2.to_mass()));
}

FusionTrajectory iterate_self_fusion(const ProbabilityMassFunction& p, int steps,
                                     PairwiseRule rule) {
  if (steps < 1) throw std::invalid_argument("iterate_self_fusion needs steps >= 1");
  FusionTrajectory trajectory;
  trajectory.states.reserve(static_cast<std::size_t>(steps) + 1);
  trajectory.states.push_back(p);
  ProbabilityMassFunction current = p;
  for (int i = 0; i < steps; ++i) {
    switch (rule) {
      case PairwiseRule::fcpt_pcr:
        current = fcpt_pcr_pair(current, p);
        break;
      case PairwiseRule::drc:
        current = ProbabilityMassFunction::from_mass(
            drc(current.to_mass(), p.to_mass()));
        break;
    }
    trajectory.states.push_back(current);
  }
  return trajectory;
}

ProbabilityMassFunction fcpt_pcr_multi(
    std::span<const ProbabilityMassFunction> sources) {
  if (sources.empty()) {
    throw std::invalid_argument("fcpt_pcr_multi needs at least one distribution");
  }
  for (const auto& p : sources) check_same_frame(sources.front(), p);

  std::vector<double> mean(static_cast<std::size_t>(sources.front().size()), 0.0);
  for (const auto& p : sources) {
    for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += p.probs()[i];
  }
  for (double& v : mean) v /= static_cast<double>(sources.size());

  ProbabilityMassFunction average(sources.front().frame(), std::move(mean));
  ProbabilityMassFunction result = average;
  for (std::size_t i = 1; i < sources.size(); ++i) {
    result = fcpt_pcr_pair(result, average);
  }
  return result;
}

AblationTransform parse_ablation_transform(std::string_view name) {
  if (name == "fcp") return AblationTransform::fcp;
  if (name == "betp") return AblationTransform::betp;
  if (name == "pnpl") return AblationTransform::pnpl;
  if (name == "dsmp0") return AblationTransform::dsmp0;
  if (name == "cuzzp") return AblationTransform::cuzzp;
  throw std::invalid_argument("unknown ablation transform '" + std::string(name) +
                              "' (expected fcp|betp|pnpl|dsmp0|cuzzp)");
}

std::string_view ablation_transform_name(AblationTransform t) {
  switch (t) {
    case AblationTransform::fcp: return "fcp";
    case AblationTransform::betp: return "betp";
    case AblationTransform::pnpl: return "pnpl";
    case AblationTransform::dsmp0: return "dsmp0";
    case AblationTransform::cuzzp: return "cuzzp";
  }
  return "?";
}

ProbabilityMassFunction ablation_pair(const ProbabilityMassFunction& p1,
                                      const ProbabilityMassFunction& p2,
                                      AblationTransform transform) {
  check_same_frame(p1, p2);
  MassFunction joined = dcr(p1.to_mass(), p2.to_mass());
  switch (transform) {
    case AblationTransform::fcp: return fcpt(joined);
    case AblationTransform::betp: return betp(joined);
    case AblationTransform::pnpl: return pnpl(joined);
    case AblationTransform::dsmp0: return dsmp(joined, 0.0);
    case AblationTransform::cuzzp: return cuzzp(joined);
  }
  throw std::invalid_argument("unknown ablation transform");
}

}  // namespace beliefkit
