#include "beliefkit/mass_function.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "beliefkit/errors.hpp"

namespace beliefkit {

namespace {

// Dust below which solver/inversion residue is treated as exact zero.
constexpr double kDust = 1e-12;

void check_in_frame(const FrameOfDiscernment& frame, FocalSet f) {
  if (f.bits() >= frame.subset_count()) {
    throw FrameMismatchError("focal set does not fit the frame (bits " +
                             std::to_string(f.bits()) + ", n=" +
                             std::to_string(frame.size()) + ")");
  }
}

std::map<FocalSet, double> clean_entries(std::map<FocalSet, double> masses) {
  for (auto it = masses.begin(); it != masses.end();) {
    if (it->second <= 0.0) {
      it = masses.erase(it);  // validated: anything <= 0 here is dust
    } else {
      ++it;
    }
  }
  return masses;
}

}  // namespace

ValidationVerdict validate(const FrameOfDiscernment& frame,
                           const std::map<FocalSet, double>& masses) {
  double sum = 0.0;
  for (const auto& [set, mass] : masses) {
    if (set.bits() >= frame.subset_count()) {
      return {MassForm::invalid,
              "focal set out of frame: bits " + std::to_string(set.bits())};
    }
    if (!std::isfinite(mass)) {
      return {MassForm::invalid, "non-finite mass on " + frame.set_label(set)};
    }
    if (mass < -kNormalizationTol || mass > 1.0 + kNormalizationTol) {
      return {MassForm::invalid, "mass out of [0,1] on " + frame.set_label(set) +
                                     ": " + std::to_string(mass)};
    }
    sum += mass;
  }
  if (std::abs(sum - 1.0) > kNormalizationTol) {
    return {MassForm::invalid, "masses sum to " + std::to_string(sum)};
  }
  auto it = masses.find(FocalSet::empty_set());
  if (it != masses.end() && it->second > kNormalizationTol) {
    return {MassForm::subnormal, ""};
  }
  return {MassForm::normal, ""};
}

ValidationVerdict validate(const MassFunction& m) {
  return validate(m.frame(), m.masses());
}

MassFunction::MassFunction(FrameOfDiscernment frame, std::map<FocalSet, double> masses)
    : frame_(std::move(frame)) {
  ValidationVerdict verdict = validate(frame_, masses);
  if (verdict.form == MassForm::invalid) {
    throw std::invalid_argument("invalid mass function: " + verdict.detail);
  }
  masses_ = clean_entries(std::move(masses));
}

MassFunction MassFunction::vacuous(const FrameOfDiscernment& frame) {
  return MassFunction(frame, {{frame.full_set(), 1.0}});
}

double MassFunction::mass(FocalSet set) const {
  auto it = masses_.find(set);
  return it == masses_.end() ? 0.0 : it->second;
}

bool MassFunction::is_normal() const {
  return masses_.find(FocalSet::empty_set()) == masses_.end();
}

std::vector<double> MassFunction::dense() const {
  std::vector<double> v(frame_.subset_count(), 0.0);
  for (const auto& [set, mass] : masses_) v[set.bits()] = mass;
  return v;
}

SpecialKind classify_special(const MassFunction& m) {
  if (!m.is_normal()) {
    throw std::invalid_argument("classify_special requires a normal mass function");
  }
  const auto& masses = m.masses();
  if (masses.size() == 1 && masses.begin()->first == m.frame().full_set()) {
    return SpecialKind::vacuous;
  }
  bool all_singletons = true;
  for (const auto& [set, mass] : masses) {
    if (set.cardinality() != 1) {
      all_singletons = false;
      break;
    }
  }
  if (all_singletons) return SpecialKind::bayesian;

  // Consonant iff the focal elements form a chain under inclusion.
  std::vector<FocalSet> focals;
  focals.reserve(masses.size());
  for (const auto& [set, mass] : masses) focals.push_back(set);
  std::sort(focals.begin(), focals.end(), [](FocalSet a, FocalSet b) {
    return a.cardinality() < b.cardinality();
  });
  bool chain = true;
  for (std::size_t i = 0; i + 1 < focals.size(); ++i) {
    if (!focals[i].subset_of(focals[i + 1])) {
      chain = false;
      break;
    }
  }
  return chain ? SpecialKind::consonant : SpecialKind::general;
}

double bel(const MassFunction& m, FocalSet f) {
  check_in_frame(m.frame(), f);
  double sum = 0.0;
  for (const auto& [g, mass] : m.masses()) {
    if (!g.empty() && g.subset_of(f)) sum += mass;
  }
  return sum;
}

double pl(const MassFunction& m, FocalSet f) {
  check_in_frame(m.frame(), f);
  double sum = 0.0;
  for (const auto& [g, mass] : m.masses()) {
    if (g.intersects(f)) sum += mass;
  }
  return sum;
}

double q_fn(const MassFunction& m, FocalSet f) {
  check_in_frame(m.frame(), f);
  double sum = 0.0;
  for (const auto& [g, mass] : m.masses()) {
    if (f.subset_of(g)) sum += mass;
  }
  return sum;
}

double b_fn(const MassFunction& m, FocalSet f) {
  check_in_frame(m.frame(), f);
  double sum = 0.0;
  for (const auto& [g, mass] : m.masses()) {
    if (g.subset_of(f)) sum += mass;
  }
  return sum;
}

double fc(const MassFunction& m, FocalSet f) {
  // FC(F) = b(F) + q(F) - m(F): every focal comparable with F counts once.
  check_in_frame(m.frame(), f);
  double sum = 0.0;
  for (const auto& [g, mass] : m.masses()) {
    if (g.subset_of(f) || f.subset_of(g)) sum += mass;
  }
  return sum;
}

BeliefInterval belief_interval(const MassFunction& m, FocalSet f) {
  return {bel(m, f), pl(m, f)};
}

namespace detail {

void subset_sum_in_place(std::vector<double>& v, int n) {
  const std::size_t size = v.size();
  for (int i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t s = 0; s < size; ++s) {
      if (s & bit) v[s] += v[s ^ bit];
    }
  }
}

void superset_sum_in_place(std::vector<double>& v, int n) {
  const std::size_t size = v.size();
  for (int i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t s = 0; s < size; ++s) {
      if (!(s & bit)) v[s] += v[s | bit];
    }
  }
}

void subset_sum_invert_in_place(std::vector<double>& v, int n) {
  const std::size_t size = v.size();
  for (int i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t s = 0; s < size; ++s) {
      if (s & bit) v[s] -= v[s ^ bit];
    }
  }
}

void superset_sum_invert_in_place(std::vector<double>& v, int n) {
  const std::size_t size = v.size();
  for (int i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t s = 0; s < size; ++s) {
      if (!(s & bit)) v[s] -= v[s | bit];
    }
  }
}

}  // namespace detail

std::vector<double> q_vector(const MassFunction& m) {
  std::vector<double> v = m.dense();
  detail::superset_sum_in_place(v, m.frame().size());
  return v;
}

std::vector<double> b_vector(const MassFunction& m) {
  std::vector<double> v = m.dense();
  detail::subset_sum_in_place(v, m.frame().size());
  return v;
}

std::vector<double> fc_vector(const MassFunction& m) {
  std::vector<double> sub = m.dense();
  std::vector<double> sup = sub;
  const std::vector<double> raw = sub;
  detail::subset_sum_in_place(sub, m.frame().size());
  detail::superset_sum_in_place(sup, m.frame().size());
  for (std::size_t s = 0; s < sub.size(); ++s) sub[s] += sup[s] - raw[s];
  return sub;
}

namespace {

MassFunction mass_from_recovered(const FrameOfDiscernment& frame,
                                 std::vector<double> recovered,
                                 const char* what) {
  std::map<FocalSet, double> masses;
  for (std::size_t s = 0; s < recovered.size(); ++s) {
    double v = recovered[s];
    if (std::abs(v) < kDust) continue;
    if (v < -kNormalizationTol) {
      throw InversionError(std::string(what) + ": recovered negative mass " +
                           std::to_string(v) + " on subset " + std::to_string(s));
    }
    if (v > 0.0) masses[FocalSet(static_cast<std::uint32_t>(s))] = v;
  }
  try {
    return MassFunction(frame, std::move(masses));
  } catch (const std::invalid_argument& e) {
    throw InversionError(std::string(what) + ": inconsistent input vector (" +
                         e.what() + ")");
  }
}

void check_vector_size(const FrameOfDiscernment& frame, std::size_t got,
                       const char* what) {
  if (got != frame.subset_count()) {
    throw std::invalid_argument(std::string(what) + ": expected vector of size " +
                                std::to_string(frame.subset_count()) + ", got " +
                                std::to_string(got));
  }
}

}  // namespace

MassFunction mass_from_q(const FrameOfDiscernment& frame, std::span<const double> qvec) {
  check_vector_size(frame, qvec.size(), "mass_from_q");
  std::vector<double> v(qvec.begin(), qvec.end());
  detail::superset_sum_invert_in_place(v, frame.size());
  return mass_from_recovered(frame, std::move(v), "mass_from_q");
}

MassFunction mass_from_b(const FrameOfDiscernment& frame, std::span<const double> bvec) {
  check_vector_size(frame, bvec.size(), "mass_from_b");
  std::vector<double> v(bvec.begin(), bvec.end());
  detail::subset_sum_invert_in_place(v, frame.size());
  return mass_from_recovered(frame, std::move(v), "mass_from_b");
}

MassFunction mass_from_fc(const FrameOfDiscernment& frame, std::span<const double> fcvec) {
  check_vector_size(frame, fcvec.size(), "mass_from_fc");
  const int n = frame.size();
  if (n > 10) {
    throw InversionError(
        "mass_from_fc: dense comparability solve supported up to n=10, got n=" +
        std::to_string(n));
  }
  const std::uint32_t count = frame.subset_count() - 1;  // nonempty subsets

  Eigen::MatrixXd comparability(count, count);
  for (std::uint32_t f = 1; f <= count; ++f) {
    for (std::uint32_t g = 1; g <= count; ++g) {
      const bool related = (f & g) == f || (f & g) == g;  // f subseteq g or g subseteq f
      comparability(f - 1, g - 1) = related ? 1.0 : 0.0;
    }
  }
  Eigen::VectorXd rhs(count);
  for (std::uint32_t f = 1; f <= count; ++f) rhs(f - 1) = fcvec[f];

  Eigen::FullPivLU<Eigen::MatrixXd> lu(comparability);
  if (!lu.isInvertible()) {
    throw InversionError("mass_from_fc: comparability matrix singular for n=" +
                         std::to_string(n));
  }
  Eigen::VectorXd solution = lu.solve(rhs);

  std::vector<double> recovered(frame.subset_count(), 0.0);
  for (std::uint32_t f = 1; f <= count; ++f) recovered[f] = solution(f - 1);
  return mass_from_recovered(frame, std::move(recovered), "mass_from_fc");
}

ProbabilityMassFunction::ProbabilityMassFunction(FrameOfDiscernment frame,
                                                 std::vector<double> probs)
    : frame_(std::move(frame)), probs_(std::move(probs)) {
  if (static_cast<int>(probs_.size()) != frame_.size()) {
    throw std::invalid_argument("pmf size " + std::to_string(probs_.size()) +
                                " does not match frame size " +
                                std::to_string(frame_.size()));
  }
  double sum = 0.0;
  for (double& p : probs_) {
    if (!std::isfinite(p) || p < -kNormalizationTol || p > 1.0 + kNormalizationTol) {
      throw std::invalid_argument("pmf entry out of [0,1]: " + std::to_string(p));
    }
    if (p < 0.0) p = 0.0;  // clamp tolerated dust
    sum += p;
  }
  if (std::abs(sum - 1.0) > kNormalizationTol) {
    throw std::invalid_argument("pmf entries sum to " + std::to_string(sum));
  }
}

ProbabilityMassFunction ProbabilityMassFunction::uniform(const FrameOfDiscernment& frame) {
  return ProbabilityMassFunction(
      frame, std::vector<double>(static_cast<std::size_t>(frame.size()),
                                 1.0 / frame.size()));
}

ProbabilityMassFunction ProbabilityMassFunction::from_mass(const MassFunction& m) {
  std::vector<double> probs(static_cast<std::size_t>(m.frame().size()), 0.0);
  for (const auto& [set, mass] : m.masses()) {
    if (set.cardinality() != 1) {
      throw std::invalid_argument("from_mass requires a bayesian mass function, found " +
                                  m.frame().set_label(set));
    }
    probs[static_cast<std::size_t>(set.elements().front())] = mass;
  }
  return ProbabilityMassFunction(m.frame(), std::move(probs));
}

MassFunction ProbabilityMassFunction::to_mass() const {
  std::map<FocalSet, double> masses;
  for (int i = 0; i < size(); ++i) {
    if (probs_[static_cast<std::size_t>(i)] > 0.0) {
      masses[FocalSet::singleton(i)] = probs_[static_cast<std::size_t>(i)];
    }
  }
  return MassFunction(frame_, std::move(masses));
}

}  // namespace beliefkit
