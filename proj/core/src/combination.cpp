#include "beliefkit/combination.hpp"

#include <cmath>
#include <stdexcept>

#include "beliefkit/errors.hpp"

namespace beliefkit {

namespace {

void check_same_frame(const MassFunction& m1, const MassFunction& m2) {
  if (!(m1.frame() == m2.frame())) {
    throw FrameMismatchError("combination operands live on different frames");
  }
}

}  // namespace

MassFunction ccr(const MassFunction& m1, const MassFunction& m2) {
  check_same_frame(m1, m2);
  std::map<FocalSet, double> out;
  for (const auto& [g, w1] : m1.masses()) {
    for (const auto& [h, w2] : m2.masses()) {
      out[g.intersect(h)] += w1 * w2;
    }
  }
  return MassFunction(m1.frame(), std::move(out));
}

double conflict_coefficient(const MassFunction& m1, const MassFunction& m2) {
  check_same_frame(m1, m2);
  double k = 0.0;
  for (const auto& [g, w1] : m1.masses()) {
    for (const auto& [h, w2] : m2.masses()) {
      if (!g.intersects(h)) k += w1 * w2;
    }
  }
  return k;
}

namespace {

// Shared by drc/ecr: drop the empty set and renormalize what is left.
MassFunction normalized_over_nonempty(const FrameOfDiscernment& frame,
                                      std::map<FocalSet, double> masses) {
  masses.erase(FocalSet::empty_set());
  double sum = 0.0;
  for (const auto& [set, mass] : masses) sum += mass;
  if (sum <= kNormalizationTol) {
    throw TotalConflictError("total conflict: no mass left on nonempty sets (K=1)");
  }
  for (auto& [set, mass] : masses) mass /= sum;
  return MassFunction(frame, std::move(masses));
}

}  // namespace

MassFunction drc(const MassFunction& m1, const MassFunction& m2) {
  MassFunction conj = ccr(m1, m2);
  return normalized_over_nonempty(m1.frame(), conj.masses());
}

MassFunction dcr(const MassFunction& m1, const MassFunction& m2) {
  check_same_frame(m1, m2);
  std::map<FocalSet, double> out;
  for (const auto& [g, w1] : m1.masses()) {
    for (const auto& [h, w2] : m2.masses()) {
      out[g.unite(h)] += w1 * w2;
    }
  }
  return MassFunction(m1.frame(), std::move(out));
}

namespace {

// Discounted mass: scale everything by c = 1/(1+w-r) and park c(1-r) of extra
// ignorance on the full set. Sums to 1 only when w = 1.
std::map<FocalSet, double> discounted(const MassFunction& m, ReliabilityWeight rw) {
  const double denom = 1.0 + rw.weight - rw.reliability;
  if (std::abs(denom) < 1e-15) {
    throw std::invalid_argument("ecr: 1 + w - r = 0, discount constant undefined");
  }
  const double c = 1.0 / denom;
  std::map<FocalSet, double> out;
  for (const auto& [set, mass] : m.masses()) {
    if (set.empty()) continue;
    out[set] = c * mass;
  }
  out[m.frame().full_set()] += c * (1.0 - rw.reliability);
  return out;
}

}  // namespace

MassFunction ecr(const MassFunction& m1, const MassFunction& m2,
                 ReliabilityWeight rw1, ReliabilityWeight rw2) {
  check_same_frame(m1, m2);
  std::map<FocalSet, double> d1 = discounted(m1, rw1);
  std::map<FocalSet, double> d2 = discounted(m2, rw2);

  std::map<FocalSet, double> out;
  for (const auto& [set, mass] : d1) out[set] += (1.0 - rw2.reliability) * mass;
  for (const auto& [set, mass] : d2) out[set] += (1.0 - rw1.reliability) * mass;
  for (const auto& [g, w1] : d1) {
    for (const auto& [h, w2] : d2) {
      out[g.intersect(h)] += w1 * w2;
    }
  }
  return normalized_over_nonempty(m1.frame(), std::move(out));
}

MassFunction partial_drc(const MassFunction& layer_dist, const MassFunction& m) {
  check_same_frame(layer_dist, m);
  int level = -1;
  for (const auto& [set, mass] : layer_dist.masses()) {
    if (level == -1) level = set.cardinality();
    if (set.cardinality() != level || set.empty()) {
      throw std::invalid_argument(
          "partial_drc: layer distribution must sit on one nonempty cardinality");
    }
  }

  std::map<FocalSet, double> out;
  for (const auto& [h, mass_h] : m.masses()) {
    double denom = 0.0;
    for (const auto& [g, w] : layer_dist.masses()) {
      if (g.strict_subset_of(h)) denom += w;
    }
    if (denom <= 0.0) {
      out[h] += mass_h;  // nothing below H in the layer: mass stays put
      continue;
    }
    for (const auto& [g, w] : layer_dist.masses()) {
      if (g.strict_subset_of(h)) out[g] += mass_h * w / denom;
    }
  }
  return MassFunction(m.frame(), std::move(out));
}

MassFunction murphy_combine(std::span<const MassFunction> sources) {
  if (sources.empty()) {
    throw std::invalid_argument("murphy_combine needs at least one mass function");
  }
  for (const auto& m : sources) check_same_frame(sources.front(), m);

  std::map<FocalSet, double> mean;
  for (const auto& m : sources) {
    for (const auto& [set, mass] : m.masses()) mean[set] += mass;
  }
  for (auto& [set, mass] : mean) mass /= static_cast<double>(sources.size());

  MassFunction averaged(sources.front().frame(), std::move(mean));
  MassFunction result = averaged;
  for (std::size_t i = 1; i < sources.size(); ++i) {
    result = drc(result, averaged);
  }
  return result;
}

}  // namespace beliefkit
