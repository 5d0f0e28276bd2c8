#include "beliefkit/transform.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "beliefkit/combination.hpp"
#include "beliefkit/errors.hpp"

namespace beliefkit {

namespace {

// Dense evolution is O(n 2^n) per layer; beyond this the memory and time
// budget is no longer sensible for a decision-layer computation.
constexpr int kMaxTransformElements = 20;

void require_normal(const MassFunction& m, const char* op) {
  if (!m.is_normal()) {
    throw std::invalid_argument(std::string(op) +
                                " requires a normal mass function (m(empty)=0)");
  }
}

void require_transform_size(const MassFunction& m, const char* op) {
  if (m.frame().size() > kMaxTransformElements) {
    throw std::invalid_argument(std::string(op) + " supports frames up to n=" +
                                std::to_string(kMaxTransformElements));
  }
}

ProbabilityMassFunction pmf_from(const FrameOfDiscernment& frame,
                                 std::vector<double> probs) {
  return ProbabilityMassFunction(frame, std::move(probs));
}

}  // namespace

ProbabilityMassFunction betp(const MassFunction& m) {
  const int n = m.frame().size();
  const double empty_mass = m.empty_set_mass();
  if (empty_mass >= 1.0 - kNormalizationTol) {
    throw std::invalid_argument("betp: all mass on the empty set");
  }
  std::vector<double> probs(static_cast<std::size_t>(n), 0.0);
  for (const auto& [set, mass] : m.masses()) {
    if (set.empty()) continue;
    const double share = mass / set.cardinality();
    for (int e : set.elements()) probs[static_cast<std::size_t>(e)] += share;
  }
  for (double& p : probs) p /= 1.0 - empty_mass;
  return pmf_from(m.frame(), std::move(probs));
}

ProbabilityMassFunction pnpl(const MassFunction& m) {
  require_normal(m, "pnpl");
  const int n = m.frame().size();
  std::vector<double> probs(static_cast<std::size_t>(n), 0.0);
  double total = 0.0;
  for (int e = 0; e < n; ++e) {
    probs[static_cast<std::size_t>(e)] = pl(m, FocalSet::singleton(e));
    total += probs[static_cast<std::size_t>(e)];
  }
  if (total <= 0.0) {
    throw std::invalid_argument("pnpl: all singleton plausibilities are zero");
  }
  for (double& p : probs) p /= total;
  return pmf_from(m.frame(), std::move(probs));
}

ProbabilityMassFunction prapl(const MassFunction& m) {
  require_normal(m, "prapl");
  const int n = m.frame().size();
  std::vector<double> bels(static_cast<std::size_t>(n), 0.0);
  std::vector<double> pls(static_cast<std::size_t>(n), 0.0);
  double bel_sum = 0.0;
  double pl_sum = 0.0;
  for (int e = 0; e < n; ++e) {
    bels[static_cast<std::size_t>(e)] = bel(m, FocalSet::singleton(e));
    pls[static_cast<std::size_t>(e)] = pl(m, FocalSet::singleton(e));
    bel_sum += bels[static_cast<std::size_t>(e)];
    pl_sum += pls[static_cast<std::size_t>(e)];
  }
  if (pl_sum <= 0.0) {
    throw std::invalid_argument("prapl: all singleton plausibilities are zero");
  }
  std::vector<double> probs(static_cast<std::size_t>(n), 0.0);
  for (int e = 0; e < n; ++e) {
    probs[static_cast<std::size_t>(e)] =
        bels[static_cast<std::size_t>(e)] +
        pls[static_cast<std::size_t>(e)] * (1.0 - bel_sum) / pl_sum;
  }
  return pmf_from(m.frame(), std::move(probs));
}

ProbabilityMassFunction dsmp(const MassFunction& m, double epsilon) {
  require_normal(m, "dsmp");
  if (epsilon < 0.0) {
    throw std::invalid_argument("dsmp: epsilon must be nonnegative");
  }
  const int n = m.frame().size();
  std::vector<double> probs(static_cast<std::size_t>(n), 0.0);
  for (int e = 0; e < n; ++e) {
    probs[static_cast<std::size_t>(e)] = m.mass(FocalSet::singleton(e));
  }
  for (const auto& [set, mass] : m.masses()) {
    if (set.cardinality() < 2) continue;
    double interior = 0.0;
    for (int e : set.elements()) interior += m.mass(FocalSet::singleton(e));
    const double denom = interior + set.cardinality() * epsilon;
    if (denom <= 0.0) {
      // eps = 0 with no singleton support inside: the eps -> 0 limit splits evenly.
      const double share = mass / set.cardinality();
      for (int e : set.elements()) probs[static_cast<std::size_t>(e)] += share;
      continue;
    }
    for (int e : set.elements()) {
      const double numer = m.mass(FocalSet::singleton(e)) + epsilon;
      probs[static_cast<std::size_t>(e)] += mass * numer / denom;
    }
  }
  return pmf_from(m.frame(), std::move(probs));
}

ProbabilityMassFunction cuzzp(const MassFunction& m) {
  require_normal(m, "cuzzp");
  const int n = m.frame().size();
  std::vector<double> singleton_mass(static_cast<std::size_t>(n), 0.0);
  std::vector<double> slack(static_cast<std::size_t>(n), 0.0);  // Pl(x) - m(x)
  double multi_mass = 0.0;
  double slack_sum = 0.0;
  for (int e = 0; e < n; ++e) {
    singleton_mass[static_cast<std::size_t>(e)] = m.mass(FocalSet::singleton(e));
    slack[static_cast<std::size_t>(e)] =
        pl(m, FocalSet::singleton(e)) - singleton_mass[static_cast<std::size_t>(e)];
    slack_sum += slack[static_cast<std::size_t>(e)];
  }
  for (const auto& [set, mass] : m.masses()) {
    if (set.cardinality() > 1) multi_mass += mass;
  }
  std::vector<double> probs = singleton_mass;
  if (multi_mass > 0.0 && slack_sum > 0.0) {
    for (int e = 0; e < n; ++e) {
      probs[static_cast<std::size_t>(e)] +=
          multi_mass * slack[static_cast<std::size_t>(e)] / slack_sum;
    }
  }
  return pmf_from(m.frame(), std::move(probs));
}

namespace {

// One top-down evolution pass over the dense power-set vector. Splits the
// mass of every subset of cardinality `layer_card` among its one-element-
// removed children in proportion to the children's full-causality values,
// which are recomputed from the state the layer started with.
void evolve_layer(std::vector<double>& v, int n, int layer_card) {
  std::vector<double> sub = v;
  std::vector<double> sup = v;
  detail::subset_sum_in_place(sub, n);
  detail::superset_sum_in_place(sup, n);
  const std::vector<double> frozen = v;
  auto fc_of = [&](std::uint32_t s) { return sub[s] + sup[s] - frozen[s]; };

  const std::uint32_t size = std::uint32_t{1} << n;
  for (std::uint32_t s = 1; s < size; ++s) {
    if (std::popcount(s) != layer_card || v[s] <= 0.0) continue;
    const double moving = v[s];
    v[s] = 0.0;
    double total = 0.0;
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      total += fc_of(s ^ (rest & -rest));
    }
    if (total > 0.0) {
      for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
        const std::uint32_t child = s ^ (rest & -rest);
        v[child] += moving * fc_of(child) / total;
      }
    } else {
      // All-zero causality cannot happen while the parent holds mass (each
      // child's commonality already counts it); even split keeps this total.
      const double share = moving / std::popcount(s);
      for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
        v[s ^ (rest & -rest)] += share;
      }
    }
  }
}

MassFunction mass_from_dense(const FrameOfDiscernment& frame,
                             const std::vector<double>& v) {
  std::map<FocalSet, double> masses;
  for (std::uint32_t s = 0; s < v.size(); ++s) {
    if (v[s] > 0.0) masses[FocalSet(s)] = v[s];
  }
  return MassFunction(frame, std::move(masses));
}

ProbabilityMassFunction run_fcpt(const MassFunction& m,
                                 std::vector<MassFunction>* trace) {
  require_normal(m, "fcpt");
  require_transform_size(m, "fcpt");
  const int n = m.frame().size();
  std::vector<double> v = m.dense();
  for (int layer = 1; layer <= n - 1; ++layer) {
    evolve_layer(v, n, n - layer + 1);
    if (trace != nullptr) trace->push_back(mass_from_dense(m.frame(), v));
  }
  std::vector<double> probs(static_cast<std::size_t>(n), 0.0);
  for (int e = 0; e < n; ++e) {
    probs[static_cast<std::size_t>(e)] = v[std::uint32_t{1} << e];
  }
  return ProbabilityMassFunction(m.frame(), std::move(probs));
}

}  // namespace

ProbabilityMassFunction fcpt(const MassFunction& m) { return run_fcpt(m, nullptr); }

TransformResult fcpt_traced(const MassFunction& m) {
  std::vector<MassFunction> trace;
  ProbabilityMassFunction pmf = run_fcpt(m, &trace);
  return {std::move(pmf), "fcp", std::move(trace)};
}

TransformResult gptm(const MassFunction& m, const LayerProvider& provider) {
  require_normal(m, "gptm");
  require_transform_size(m, "gptm");
  const int n = m.frame().size();

  MassFunction current = m;
  std::vector<MassFunction> trace;
  for (int level = 1; level <= n - 1; ++level) {
    const int target = n - level;
    LayerDistribution dist = provider(level, current);
    if (dist.target_cardinality != target) {
      throw std::invalid_argument("gptm: level " + std::to_string(level) +
                                  " must target cardinality " + std::to_string(target));
    }
    double weight_sum = 0.0;
    std::map<FocalSet, double> positive;
    for (const auto& [set, w] : dist.weights) {
      if (set.cardinality() != target || w < 0.0) {
        throw std::invalid_argument("gptm: malformed layer distribution at level " +
                                    std::to_string(level));
      }
      weight_sum += w;
      if (w > 0.0) positive[set] = w;
    }
    if (std::abs(weight_sum - 1.0) > kNormalizationTol) {
      throw std::invalid_argument("gptm: layer weights sum to " +
                                  std::to_string(weight_sum));
    }
    // Mass above the target layer must have a positive-weight subset to
    // evolve into, otherwise it would be stranded.
    for (const auto& [h, mass] : current.masses()) {
      if (h.cardinality() <= target) continue;
      bool reachable = false;
      for (const auto& [g, w] : positive) {
        if (g.strict_subset_of(h)) {
          reachable = true;
          break;
        }
      }
      if (!reachable) {
        throw RedistributionError("gptm: mass on " + m.frame().set_label(h) +
                                  " has no positive-weight subset at cardinality " +
                                  std::to_string(target));
      }
    }
    MassFunction layer(m.frame(), std::move(positive));
    current = partial_drc(layer, current);
    trace.push_back(current);
  }
  return {ProbabilityMassFunction::from_mass(current), "gptm", std::move(trace)};
}

LayerProvider uniform_layer_provider() {
  return [](int level, const MassFunction& current) {
    const int n = current.frame().size();
    const int target = n - level;
    LayerDistribution dist;
    dist.target_cardinality = target;
    std::vector<FocalSet> sets;
    for (std::uint32_t s = 1; s < current.frame().subset_count(); ++s) {
      if (std::popcount(s) == target) sets.push_back(FocalSet(s));
    }
    for (FocalSet s : sets) {
      dist.weights[s] = 1.0 / static_cast<double>(sets.size());
    }
    return dist;
  };
}

LayerProvider fc_layer_provider() {
  return [](int level, const MassFunction& current) {
    const int n = current.frame().size();
    const int target = n - level;
    LayerDistribution dist;
    dist.target_cardinality = target;
    std::vector<double> fcv = fc_vector(current);
    std::vector<FocalSet> sets;
    double total = 0.0;
    for (std::uint32_t s = 1; s < current.frame().subset_count(); ++s) {
      if (std::popcount(s) != target) continue;
      sets.push_back(FocalSet(s));
      total += fcv[s];
    }
    for (FocalSet s : sets) {
      dist.weights[s] = total > 0.0 ? fcv[s.bits()] / total
                                    : 1.0 / static_cast<double>(sets.size());
    }
    return dist;
  };
}

ConsistencyReport consistency_checks(const MassFunction& m,
                                     const ProbabilityMassFunction& pmf) {
  if (!(m.frame() == pmf.frame())) {
    throw FrameMismatchError("consistency_checks operands on different frames");
  }
  ConsistencyReport report;

  report.p_consistent = true;
  if (m.is_normal() && classify_special(m) == SpecialKind::bayesian) {
    ProbabilityMassFunction lifted = ProbabilityMassFunction::from_mass(m);
    for (int e = 0; e < pmf.size(); ++e) {
      if (std::abs(lifted.prob(e) - pmf.prob(e)) > kNormalizationTol) {
        report.p_consistent = false;
        break;
      }
    }
  }

  report.ulb_consistent = true;
  for (int e = 0; e < pmf.size(); ++e) {
    const FocalSet single = FocalSet::singleton(e);
    const double lower = bel(m, single);
    const double upper = pl(m, single);
    if (pmf.prob(e) < lower - kNormalizationTol ||
        pmf.prob(e) > upper + kNormalizationTol) {
      report.ulb_consistent = false;
      break;
    }
  }
  return report;
}

}  // namespace beliefkit
