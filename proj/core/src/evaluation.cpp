#include "beliefkit/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "beliefkit/errors.hpp"
#include "beliefkit/io.hpp"

namespace beliefkit {

double normalized_entropy(const ProbabilityMassFunction& p) {
  const int n = p.size();
  if (n < 2) {
    throw std::invalid_argument("entropy undefined for a single-element frame");
  }
  double h = 0.0;
  for (double v : p.probs()) {
    if (v > 0.0) h -= v * std::log(v);
  }
  return h / std::log(static_cast<double>(n));
}

double pic(const ProbabilityMassFunction& p) { return 1.0 - normalized_entropy(p); }

namespace {

void check_same_frame(const MassFunction& m1, const MassFunction& m2,
                      const char* op) {
  if (!(m1.frame() == m2.frame())) {
    throw FrameMismatchError(std::string(op) + ": operands on different frames");
  }
}

double jaccard(FocalSet f, FocalSet g) {
  const int inter = f.intersect(g).cardinality();
  const int uni = f.unite(g).cardinality();
  return uni == 0 ? 0.0 : static_cast<double>(inter) / uni;
}

}  // namespace

double jousselme_distance(const MassFunction& m1, const MassFunction& m2) {
  check_same_frame(m1, m2, "jousselme_distance");
  if (!m1.is_normal() || !m2.is_normal()) {
    throw std::invalid_argument("jousselme_distance requires normal mass functions");
  }
  // The difference vector is nonzero only on focal elements of either input,
  // so the quadratic form runs over that sparse support.
  std::map<FocalSet, double> diff;
  for (const auto& [set, mass] : m1.masses()) diff[set] += mass;
  for (const auto& [set, mass] : m2.masses()) diff[set] -= mass;

  double quad = 0.0;
  for (const auto& [f, df] : diff) {
    for (const auto& [g, dg] : diff) {
      quad += df * dg * jaccard(f, g);
    }
  }
  return std::sqrt(0.5 * std::max(quad, 0.0));
}

double correlation_coefficient(const MassFunction& m1, const MassFunction& m2) {
  check_same_frame(m1, m2, "correlation_coefficient");
  if (!m1.is_normal() || !m2.is_normal()) {
    throw std::invalid_argument(
        "correlation_coefficient requires normal mass functions");
  }
  auto cross = [](const MassFunction& a, const MassFunction& b) {
    double c = 0.0;
    for (const auto& [f, wf] : a.masses()) {
      for (const auto& [g, wg] : b.masses()) {
        c += wf * wg * jaccard(f, g);
      }
    }
    return c;
  };
  const double c11 = cross(m1, m1);
  const double c22 = cross(m2, m2);
  if (c11 <= 0.0 || c22 <= 0.0) {
    throw std::invalid_argument("correlation_coefficient: zero self-correlation");
  }
  return cross(m1, m2) / std::sqrt(c11 * c22);
}

EvaluationReport evaluate_methods(
    const MassFunction& reference,
    std::span<const std::pair<std::string, ProbabilityMassFunction>> candidates,
    std::span<const double> alphas, BiCriteriaVariant variant) {
  if (candidates.size() < 2) {
    throw std::invalid_argument(
        "evaluate_methods needs at least two candidates for min-max indexes");
  }
  EvaluationReport report;
  report.alphas.assign(alphas.begin(), alphas.end());
  report.variant = variant;

  for (const auto& [name, pmf] : candidates) {
    MethodEvaluation entry{name, pmf, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, {}, 0.0};
    entry.entropy = normalized_entropy(pmf);
    entry.pic = 1.0 - entry.entropy;
    MassFunction lifted = pmf.to_mass();
    entry.distance = jousselme_distance(reference, lifted);
    entry.correlation = correlation_coefficient(reference, lifted);
    report.methods.push_back(std::move(entry));
  }

  auto min_max = [&](auto getter) {
    double lo = getter(report.methods.front());
    double hi = lo;
    for (const auto& m : report.methods) {
      lo = std::min(lo, getter(m));
      hi = std::max(hi, getter(m));
    }
    return std::pair<double, double>{lo, hi};
  };
  const auto [pic_lo, pic_hi] = min_max([](const MethodEvaluation& m) { return m.pic; });
  const auto [d_lo, d_hi] = min_max([](const MethodEvaluation& m) { return m.distance; });
  const double pic_range = pic_hi - pic_lo;
  const double d_range = d_hi - d_lo;

  for (auto& m : report.methods) {
    // Ties carry no discrimination: a degenerate index is 0 for everyone.
    m.pic_index = pic_range > 0.0 ? (pic_hi - m.pic) / pic_range : 0.0;
    m.distance_index = d_range > 0.0 ? (m.distance - d_lo) / d_range : 0.0;
    m.c_joint.reserve(report.alphas.size());
    double sum = 0.0;
    for (double alpha : report.alphas) {
      const double c = variant == BiCriteriaVariant::pic_index
                           ? alpha * m.distance_index + (1.0 - alpha) * m.pic_index
                           : alpha * m.pic_index + (1.0 - alpha) * m.distance_index;
      m.c_joint.push_back(c);
      sum += c;
    }
    m.c_joint_mean = report.alphas.empty() ? 0.0 : sum / report.alphas.size();
  }
  return report;
}

std::vector<double> uniform_alpha_grid(int count) {
  if (count < 2) throw std::invalid_argument("alpha grid needs at least two samples");
  std::vector<double> alphas;
  alphas.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    alphas.push_back(static_cast<double>(i) / (count - 1));
  }
  return alphas;
}

std::string report_to_csv(const EvaluationReport& report, int precision) {
  std::string out = "method,pic,d,r,pic_index,d_index";
  for (double alpha : report.alphas) {
    out += ",c_alpha_" + format_fixed(alpha, 2);
  }
  out += ",c_mean\n";
  for (const auto& m : report.methods) {
    out += m.method;
    out += ',' + format_fixed(m.pic, precision);
    out += ',' + format_fixed(m.distance, precision);
    out += ',' + format_fixed(m.correlation, precision);
    out += ',' + format_fixed(m.pic_index, precision);
    out += ',' + format_fixed(m.distance_index, precision);
    for (double c : m.c_joint) out += ',' + format_fixed(c, precision);
    out += ',' + format_fixed(m.c_joint_mean, precision);
    out += '\n';
  }
  return out;
}

}  // namespace beliefkit
