#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "beliefkit/mass_function.hpp"

namespace beliefkit {

struct Dataset {
  std::vector<std::vector<double>> features;  // [sample][feature]
  std::vector<int> labels;                    // class index per sample
  std::vector<std::string> class_names;       // index -> original label text

  std::size_t sample_count() const { return features.size(); }
  std::size_t feature_count() const {
    return features.empty() ? 0 : features.front().size();
  }
  std::size_t class_count() const { return class_names.size(); }
};

/// Loads a plain numeric CSV (comma separator, '.' decimal point, optional
/// header row). label_column selects the class column by header name or by
/// 0-based index; classes are numbered in order of first appearance and row
/// order is preserved. Throws ParseError with row/column coordinates.
Dataset load_csv(const std::filesystem::path& path, const std::string& label_column);

/// Per-(class, feature) Gaussian likelihoods with a standard-deviation floor
/// so zero-variance cells stay usable.
class GaussianFeatureModel {
 public:
  GaussianFeatureModel(FrameOfDiscernment class_frame, int feature_count);

  const FrameOfDiscernment& class_frame() const { return class_frame_; }
  int class_count() const { return class_frame_.size(); }
  int feature_count() const { return feature_count_; }

  double mean(int cls, int feature) const;
  double sigma(int cls, int feature) const;
  double density(int cls, int feature, double x) const;

  void set(int cls, int feature, double mean, double sigma);

 private:
  FrameOfDiscernment class_frame_;
  int feature_count_;
  std::vector<double> means_;   // [cls * feature_count + feature]
  std::vector<double> sigmas_;
};

/// Fits per-class, per-feature mean and unbiased standard deviation over the
/// given rows (all rows when omitted). Sigma is clamped from below by
/// 1e-6 times the feature's overall standard deviation in the fold. Every
/// class must contribute at least two rows.
GaussianFeatureModel fit(const Dataset& data, std::span<const std::size_t> rows);
GaussianFeatureModel fit(const Dataset& data);

/// Per-feature class distribution: normalized Gaussian densities at x, or the
/// uniform distribution when every density underflows to zero.
ProbabilityMassFunction feature_pmf(double x, const GaussianFeatureModel& model,
                                    int feature);

enum class FusionMethod { drc, murphy, fcpt_pcr };

FusionMethod parse_fusion_method(std::string_view name);
std::string_view fusion_method_name(FusionMethod method);

/// Fuses the per-feature distributions with the named method and returns the
/// argmax class (lowest index wins ties). drc and murphy are feature-order
/// free; fcpt_pcr folds the features left to right (the pairwise rule is not
/// associative, so feature order is part of this contract). A Dempster fusion
/// that hits total conflict classifies via the uniform distribution and
/// reports it through conflict_fallback.
int classify(std::span<const double> sample, const GaussianFeatureModel& model,
             FusionMethod method, bool* conflict_fallback = nullptr);

struct CrossValReport {
  FusionMethod method = FusionMethod::drc;
  int k = 0;
  int repeats = 0;
  std::uint64_t seed = 0;
  std::vector<double> accuracies;  // one per repeat
  double mean_accuracy = 0.0;
  double stddev = 0.0;  // sample standard deviation over repeats
  std::size_t conflict_fallbacks = 0;
};

/// Repeated stratified k-fold cross-validation. Folds are dealt per class
/// from a per-repeat deterministic shuffle, so results are bit-identical for
/// a fixed seed. Throws when a class is too small to keep two training
/// samples in every fold.
CrossValReport cross_validate(const Dataset& data, int k, int repeats,
                              FusionMethod method, std::uint64_t seed);

}  // namespace beliefkit
