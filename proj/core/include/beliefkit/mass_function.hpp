#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "beliefkit/frame.hpp"

namespace beliefkit {

/// Normalization tolerance applied when constructing mass functions and PMFs.
inline constexpr double kNormalizationTol = 1e-9;

enum class MassForm { normal, subnormal, invalid };

struct ValidationVerdict {
  MassForm form = MassForm::invalid;
  std::string detail;  // failing invariant when invalid, empty otherwise
};

enum class SpecialKind { vacuous, bayesian, consonant, general };

/// Basic probability assignment over one frame: a sparse map from focal sets
/// to mass. Construction enforces mass in [0,1] and sum 1 (tolerance 1e-9);
/// mass on the empty set is allowed (subnormal form) since combination rules
/// produce it, but most operations require normal input. Immutable once
/// built, safe to share across threads.
class MassFunction {
 public:
  /// Zero-mass entries are dropped; throws std::invalid_argument when the
  /// entries do not form a valid (normal or subnormal) mass function.
  MassFunction(FrameOfDiscernment frame, std::map<FocalSet, double> masses);

  static MassFunction vacuous(const FrameOfDiscernment& frame);

  const FrameOfDiscernment& frame() const { return frame_; }
  /// Focal elements in ascending bitmask order.
  const std::map<FocalSet, double>& masses() const { return masses_; }
  double mass(FocalSet set) const;
  double empty_set_mass() const { return mass(FocalSet::empty_set()); }
  bool is_normal() const;

  /// Dense power-set vector, indexed by subset bitmask (size 2^n).
  std::vector<double> dense() const;

 private:
  FrameOfDiscernment frame_;
  std::map<FocalSet, double> masses_;
};

/// Checks candidate entries without constructing a MassFunction; reports
/// normal/subnormal/invalid plus the first failing invariant.
ValidationVerdict validate(const FrameOfDiscernment& frame,
                           const std::map<FocalSet, double>& masses);
ValidationVerdict validate(const MassFunction& m);

/// vacuous / bayesian / consonant / general. Requires a normal mass function.
SpecialKind classify_special(const MassFunction& m);

/// Normalized per-element probability distribution (the Bayesian view).
class ProbabilityMassFunction {
 public:
  /// Throws std::invalid_argument unless every entry is in [0,1] and the
  /// entries sum to 1 within tolerance.
  ProbabilityMassFunction(FrameOfDiscernment frame, std::vector<double> probs);

  static ProbabilityMassFunction uniform(const FrameOfDiscernment& frame);
  /// Lifts a bayesian mass function; throws if m has non-singleton focals.
  static ProbabilityMassFunction from_mass(const MassFunction& m);

  const FrameOfDiscernment& frame() const { return frame_; }
  const std::vector<double>& probs() const { return probs_; }
  double prob(int element) const { return probs_[static_cast<std::size_t>(element)]; }
  int size() const { return static_cast<int>(probs_.size()); }

  /// Bayesian mass function with one singleton focal per positive entry.
  MassFunction to_mass() const;

 private:
  FrameOfDiscernment frame_;
  std::vector<double> probs_;
};

struct BeliefInterval {
  double lower = 0.0;  // Bel
  double upper = 0.0;  // Pl
};

// Belief functions. All accept subnormal input and throw FrameMismatchError
// when m and the query live on different frames (queries take a raw FocalSet,
// so the mismatch check is on set bits vs. frame width at the call sites that
// combine two mass functions).
double bel(const MassFunction& m, FocalSet f);
double pl(const MassFunction& m, FocalSet f);
double q_fn(const MassFunction& m, FocalSet f);
/// b(F) = m(empty) + Bel(F), i.e. the subset sum including the empty set.
double b_fn(const MassFunction& m, FocalSet f);
/// Full causality: FC(F) = b(F) + q(F) - m(F), the total mass on subsets
/// comparable with F under inclusion.
double fc(const MassFunction& m, FocalSet f);
BeliefInterval belief_interval(const MassFunction& m, FocalSet f);

// Dense transforms over the full power set (index = subset bitmask).
std::vector<double> q_vector(const MassFunction& m);
std::vector<double> b_vector(const MassFunction& m);
std::vector<double> fc_vector(const MassFunction& m);

/// Moebius inversions. Input spans are indexed over the full power set
/// (size 2^n); recovered masses that are negative beyond tolerance raise
/// InversionError.
MassFunction mass_from_q(const FrameOfDiscernment& frame, std::span<const double> qvec);
MassFunction mass_from_b(const FrameOfDiscernment& frame, std::span<const double> bvec);

/// Inverts the full-causality vector by solving the comparability system over
/// nonempty subsets. Supported up to n = 10 (dense solve); throws
/// InversionError for larger frames or if the system is singular for this n.
MassFunction mass_from_fc(const FrameOfDiscernment& frame, std::span<const double> fcvec);

namespace detail {

/// In-place subset-sum zeta transform: out[s] = sum over g subseteq s of v[g].
void subset_sum_in_place(std::vector<double>& v, int n);
/// In-place superset-sum zeta transform: out[s] = sum over g superseteq s.
void superset_sum_in_place(std::vector<double>& v, int n);
/// Inverse of subset_sum_in_place.
void subset_sum_invert_in_place(std::vector<double>& v, int n);
/// Inverse of superset_sum_in_place.
void superset_sum_invert_in_place(std::vector<double>& v, int n);

}  // namespace detail

}  // namespace beliefkit
