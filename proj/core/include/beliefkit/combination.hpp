#pragma once

#include <span>

#include "beliefkit/mass_function.hpp"

namespace beliefkit {

/// Source quality used by the evidential combination rule. The discount
/// constant is 1 / (1 + weight - reliability).
struct ReliabilityWeight {
  double reliability = 1.0;
  double weight = 1.0;
};

/// Conjunctive rule: m(F) = sum over G n H = F of m1(G) m2(H). The result may
/// carry mass on the empty set (subnormal). Commutative and associative, and
/// its commonality function is the pointwise product Q1 * Q2.
MassFunction ccr(const MassFunction& m1, const MassFunction& m2);

/// Mass the conjunctive rule sends to the empty set: K in [0,1].
double conflict_coefficient(const MassFunction& m1, const MassFunction& m2);

/// Dempster's rule: conjunctive combination with the conflict normalized out.
/// Throws TotalConflictError when K = 1.
MassFunction drc(const MassFunction& m1, const MassFunction& m2);

/// Disjunctive rule: m(F) = sum over G u H = F of m1(G) m2(H). Its
/// implicability function is the pointwise product b1 * b2.
MassFunction dcr(const MassFunction& m1, const MassFunction& m2);

/// Evidential combination rule with reliability/weight discounting. The
/// residual 1 - r_i is parked on the full set before combining; the combined
/// output is normalized over nonempty sets, which makes r = w = 1 coincide
/// with Dempster's rule exactly.
MassFunction ecr(const MassFunction& m1, const MassFunction& m2,
                 ReliabilityWeight rw1, ReliabilityWeight rw2);

/// Ordered layered redistribution: every focal H of m that strictly contains
/// at least one focal of layer_dist hands its whole mass to those subsets in
/// proportion to their layer weights; all other focals keep their mass.
/// layer_dist must be concentrated on a single cardinality.
MassFunction partial_drc(const MassFunction& layer_dist, const MassFunction& m);

/// Murphy-style fusion: focal-wise arithmetic mean of the inputs, then
/// count-1 Dempster self-combinations of the mean.
MassFunction murphy_combine(std::span<const MassFunction> sources);

}  // namespace beliefkit
