#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "beliefkit/mass_function.hpp"

namespace beliefkit {

/// Weights used by one evolution step of the generalized transformation
/// model: all weight sits on subsets of a single cardinality and sums to 1.
/// Zero-weight subsets may be listed explicitly; they receive nothing.
struct LayerDistribution {
  int target_cardinality = 0;
  std::map<FocalSet, double> weights;
};

struct TransformResult {
  ProbabilityMassFunction pmf;
  std::string method;
  std::vector<MassFunction> trace;  // mass after each evolution step
};

/// Pignistic transformation. The only transformation here that accepts
/// subnormal input (it renormalizes by 1 - m(empty)); throws when
/// m(empty) = 1.
ProbabilityMassFunction betp(const MassFunction& m);

/// Normalized singleton plausibility.
ProbabilityMassFunction pnpl(const MassFunction& m);

/// PraPl(x) = Bel(x) + Pl(x) (1 - sum Bel) / sum Pl over singletons.
ProbabilityMassFunction prapl(const MassFunction& m);

/// DSmP_eps: each multi-element focal is split over its elements in
/// proportion to their singleton mass plus eps. With eps = 0 and no singleton
/// mass inside a focal, that focal is split evenly (the eps -> 0 limit).
ProbabilityMassFunction dsmp(const MassFunction& m, double epsilon);

/// Cuzzolin's intersection probability: the non-singleton mass is shared in
/// proportion to Pl(x) - m(x).
ProbabilityMassFunction cuzzp(const MassFunction& m);

/// Full-causality transformation: walk the evolution network top-down and
/// split every node's mass among its children in proportion to their
/// full-causality values, recomputed from the evolving mass at each layer.
/// Output satisfies p-consistency and stays inside [Bel, Pl] per element.
ProbabilityMassFunction fcpt(const MassFunction& m);
TransformResult fcpt_traced(const MassFunction& m);

/// Supplies the layer weights for step t of the generalized model; the
/// current evolving mass is passed so providers can adapt dynamically.
using LayerProvider =
    std::function<LayerDistribution(int level, const MassFunction& current)>;

/// Generalized transformation model: n-1 ordered partial-Dempster steps, one
/// per layer, using the provider's weights. Step t must target cardinality
/// n-t. Throws RedistributionError when mass sits above a layer whose weights
/// give it nowhere to go.
TransformResult gptm(const MassFunction& m, const LayerProvider& provider);

/// Even weights per layer; gptm with this provider equals betp.
LayerProvider uniform_layer_provider();
/// Weights proportional to the full-causality values of the evolving mass;
/// gptm with this provider equals fcpt.
LayerProvider fc_layer_provider();

struct ConsistencyReport {
  bool p_consistent = false;    // bayesian input reproduced exactly
  bool ulb_consistent = false;  // Bel(x) <= p(x) <= Pl(x) for every element
};

ConsistencyReport consistency_checks(const MassFunction& m,
                                     const ProbabilityMassFunction& pmf);

}  // namespace beliefkit
