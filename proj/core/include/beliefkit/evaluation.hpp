#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "beliefkit/mass_function.hpp"

namespace beliefkit {

/// Probabilistic information content: 1 - normalized Shannon entropy, in
/// [0,1], with 0 log 0 = 0. Needs at least two elements.
double pic(const ProbabilityMassFunction& p);

/// Normalized Shannon entropy; pic() is defined as 1 minus this, so the two
/// always sum to exactly 1.
double normalized_entropy(const ProbabilityMassFunction& p);

/// Jousselme distance sqrt(0.5 (v1-v2)^T D (v1-v2)) with the Jaccard kernel
/// D(F,G) = |F n G| / |F u G| over nonempty subsets. A metric on normal mass
/// functions, in [0,1].
double jousselme_distance(const MassFunction& m1, const MassFunction& m2);

/// Jaccard-kernel correlation r = c(m1,m2) / sqrt(c(m1,m1) c(m2,m2)),
/// in (0,1], equal to 1 on identical inputs.
double correlation_coefficient(const MassFunction& m1, const MassFunction& m2);

/// Which index carries the alpha weight in the joint criterion:
///   pic_index  (default): C = alpha d' + (1-alpha) PIC'
///   entropy_index:        C = alpha E'_N + (1-alpha) d'
/// The two indexes are min-max normalized over the compared method set; a
/// degenerate normalization (all methods tie) maps the index to 0.
enum class BiCriteriaVariant { pic_index, entropy_index };

struct MethodEvaluation {
  std::string method;
  ProbabilityMassFunction pmf;
  double pic = 0.0;
  double entropy = 0.0;
  double distance = 0.0;     // to the reference mass
  double correlation = 0.0;  // to the reference mass
  double pic_index = 0.0;    // PIC'
  double distance_index = 0.0;  // d'
  std::vector<double> c_joint;  // one per alpha sample
  double c_joint_mean = 0.0;
};

struct EvaluationReport {
  std::vector<double> alphas;
  BiCriteriaVariant variant = BiCriteriaVariant::pic_index;
  std::vector<MethodEvaluation> methods;
};

/// Evaluates candidate transformations of one reference mass function under
/// the joint criterion. Needs at least two candidates so the min-max
/// normalizations are defined.
EvaluationReport evaluate_methods(
    const MassFunction& reference,
    std::span<const std::pair<std::string, ProbabilityMassFunction>> candidates,
    std::span<const double> alphas,
    BiCriteriaVariant variant = BiCriteriaVariant::pic_index);

/// count uniform samples of alpha in [0,1] (default grid: 11 values).
std::vector<double> uniform_alpha_grid(int count = 11);

/// CSV: method, PIC, d, r, PIC', d', C_joint at each alpha, mean.
std::string report_to_csv(const EvaluationReport& report, int precision = 4);

}  // namespace beliefkit
