#include "beliefkit/classifier.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "beliefkit/combination.hpp"
#include "beliefkit/errors.hpp"
#include "beliefkit/fusion.hpp"
#include "beliefkit/io.hpp"
#include "beliefkit/random.hpp"

namespace beliefkit {

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (start <= line.size()) {
    std::size_t end = line.find(',', start);
    if (end == std::string::npos) end = line.size();
    std::string cell = line.substr(start, end - start);
    while (!cell.empty() && (cell.back() == '\r' || std::isspace(static_cast<unsigned char>(cell.back())))) {
      cell.pop_back();
    }
    while (!cell.empty() && std::isspace(static_cast<unsigned char>(cell.front()))) {
      cell.erase(cell.begin());
    }
    cells.push_back(std::move(cell));
    if (end == line.size()) break;
    start = end + 1;
  }
  return cells;
}

bool parse_number(const std::string& cell, double& out) {
  if (cell.empty()) return false;
  char* end = nullptr;
  errno = 0;
  out = std::strtod(cell.c_str(), &end);
  return end == cell.c_str() + cell.size() && errno != ERANGE;
}

// Class labels become frame labels; strip characters the frame reserves.
std::string sanitize_label(const std::string& raw, std::size_t index) {
  std::string out;
  for (char c : raw) {
    if (c == '+' || c == ':' || c == '#' || std::isspace(static_cast<unsigned char>(c))) {
      out += '-';
    } else {
      out += c;
    }
  }
  if (out.empty()) out = "class" + std::to_string(index);
  return out;
}

}  // namespace

Dataset load_csv(const std::filesystem::path& path, const std::string& label_column) {
  std::istringstream in(read_file(path));
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    rows.push_back(split_csv_row(line));
  }
  if (rows.empty()) throw ParseError(path.string() + ": no data rows");

  const std::size_t columns = rows.front().size();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != columns) {
      throw ParseError(path.string() + ": row " + std::to_string(r + 1) + " has " +
                       std::to_string(rows[r].size()) + " cells, expected " +
                       std::to_string(columns));
    }
  }

  // Header detection: a first row with any non-numeric cell is a header.
  bool has_header = false;
  for (const auto& cell : rows.front()) {
    double ignored;
    if (!parse_number(cell, ignored)) {
      has_header = true;
      break;
    }
  }

  std::size_t label_index = columns;
  double numeric_spec;
  if (parse_number(label_column, numeric_spec) &&
      numeric_spec == std::floor(numeric_spec) && numeric_spec >= 0) {
    label_index = static_cast<std::size_t>(numeric_spec);
  } else if (has_header) {
    for (std::size_t c = 0; c < columns; ++c) {
      if (rows.front()[c] == label_column) {
        label_index = c;
        break;
      }
    }
  }
  if (label_index >= columns) {
    throw ParseError(path.string() + ": label column '" + label_column +
                     "' not found (" + std::to_string(columns) + " columns)");
  }

  Dataset data;
  std::unordered_map<std::string, int> class_index;
  const std::size_t first_data_row = has_header ? 1 : 0;
  if (first_data_row >= rows.size()) {
    throw ParseError(path.string() + ": header but no data rows");
  }
  for (std::size_t r = first_data_row; r < rows.size(); ++r) {
    std::vector<double> feature_row;
    feature_row.reserve(columns - 1);
    for (std::size_t c = 0; c < columns; ++c) {
      if (c == label_index) continue;
      double value;
      if (!parse_number(rows[r][c], value)) {
        throw ParseError(path.string() + ": row " + std::to_string(r + 1) +
                         " column " + std::to_string(c + 1) +
                         ": non-numeric feature '" + rows[r][c] + "'");
      }
      feature_row.push_back(value);
    }
    const std::string& label = rows[r][label_index];
    auto [it, inserted] =
        class_index.emplace(label, static_cast<int>(data.class_names.size()));
    if (inserted) data.class_names.push_back(label);
    data.labels.push_back(it->second);
    data.features.push_back(std::move(feature_row));
  }
  if (data.class_count() < 2) {
    throw ParseError(path.string() + ": need at least two classes, found " +
                     std::to_string(data.class_count()));
  }
  return data;
}

GaussianFeatureModel::GaussianFeatureModel(FrameOfDiscernment class_frame,
                                           int feature_count)
    : class_frame_(std::move(class_frame)),
      feature_count_(feature_count),
      means_(static_cast<std::size_t>(class_frame_.size()) * feature_count, 0.0),
      sigmas_(static_cast<std::size_t>(class_frame_.size()) * feature_count, 1.0) {}

double GaussianFeatureModel::mean(int cls, int feature) const {
  return means_[static_cast<std::size_t>(cls) * feature_count_ + feature];
}

double GaussianFeatureModel::sigma(int cls, int feature) const {
  return sigmas_[static_cast<std::size_t>(cls) * feature_count_ + feature];
}

void GaussianFeatureModel::set(int cls, int feature, double mean, double sigma) {
  means_[static_cast<std::size_t>(cls) * feature_count_ + feature] = mean;
  sigmas_[static_cast<std::size_t>(cls) * feature_count_ + feature] = sigma;
}

double GaussianFeatureModel::density(int cls, int feature, double x) const {
  const double s = sigma(cls, feature);
  const double z = (x - mean(cls, feature)) / s;
  return std::exp(-0.5 * z * z) / (s * std::numbers::sqrt2 * std::sqrt(std::numbers::pi));
}

GaussianFeatureModel fit(const Dataset& data, std::span<const std::size_t> rows) {
  if (data.class_count() < 2) {
    throw std::invalid_argument("fit: dataset needs at least two classes");
  }
  const int classes = static_cast<int>(data.class_count());
  const int features = static_cast<int>(data.feature_count());

  std::vector<std::size_t> per_class(static_cast<std::size_t>(classes), 0);
  for (std::size_t row : rows) per_class[static_cast<std::size_t>(data.labels[row])]++;
  for (int c = 0; c < classes; ++c) {
    if (per_class[static_cast<std::size_t>(c)] < 2) {
      throw std::invalid_argument("fit: class '" + data.class_names[static_cast<std::size_t>(c)] +
                                  "' has fewer than 2 training samples");
    }
  }

  std::vector<std::string> labels;
  labels.reserve(data.class_names.size());
  for (std::size_t i = 0; i < data.class_names.size(); ++i) {
    labels.push_back(sanitize_label(data.class_names[i], i));
  }
  GaussianFeatureModel model(FrameOfDiscernment(std::move(labels)), features);

  for (int j = 0; j < features; ++j) {
    // Whole-fold spread sets the floor that guards zero-variance cells.
    double fold_sum = 0.0;
    for (std::size_t row : rows) fold_sum += data.features[row][static_cast<std::size_t>(j)];
    const double fold_mean = fold_sum / static_cast<double>(rows.size());
    double fold_ss = 0.0;
    for (std::size_t row : rows) {
      const double d = data.features[row][static_cast<std::size_t>(j)] - fold_mean;
      fold_ss += d * d;
    }
    const double fold_std =
        rows.size() > 1 ? std::sqrt(fold_ss / static_cast<double>(rows.size() - 1)) : 0.0;
    const double sigma_floor = std::max(1e-6 * fold_std, 1e-12);

    for (int c = 0; c < classes; ++c) {
      double sum = 0.0;
      std::size_t count = 0;
      for (std::size_t row : rows) {
        if (data.labels[row] != c) continue;
        sum += data.features[row][static_cast<std::size_t>(j)];
        ++count;
      }
      const double mean = sum / static_cast<double>(count);
      double ss = 0.0;
      for (std::size_t row : rows) {
        if (data.labels[row] != c) continue;
        const double d = data.features[row][static_cast<std::size_t>(j)] - mean;
        ss += d * d;
      }
      const double sigma = std::sqrt(ss / static_cast<double>(count - 1));
      model.set(c, j, mean, std::max(sigma, sigma_floor));
    }
  }
  return model;
}

GaussianFeatureModel fit(const Dataset& data) {
  std::vector<std::size_t> rows(data.sample_count());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return fit(data, rows);
}

ProbabilityMassFunction feature_pmf(double x, const GaussianFeatureModel& model,
                                    int feature) {
  std::vector<double> probs(static_cast<std::size_t>(model.class_count()), 0.0);
  double total = 0.0;
  for (int c = 0; c < model.class_count(); ++c) {
    probs[static_cast<std::size_t>(c)] = model.density(c, feature, x);
    total += probs[static_cast<std::size_t>(c)];
  }
  if (total <= 0.0) {
    return ProbabilityMassFunction::uniform(model.class_frame());
  }
  for (double& p : probs) p /= total;
  return ProbabilityMassFunction(model.class_frame(), std::move(probs));
}

FusionMethod parse_fusion_method(std::string_view name) {
  if (name == "drc") return FusionMethod::drc;
  if (name == "murphy") return FusionMethod::murphy;
  if (name == "fcpt-pcr" || name == "fcpt_pcr") return FusionMethod::fcpt_pcr;
  throw std::invalid_argument("unknown fusion method '" + std::string(name) +
                              "' (expected drc|murphy|fcpt-pcr)");
}

std::string_view fusion_method_name(FusionMethod method) {
  switch (method) {
    case FusionMethod::drc: return "drc";
    case FusionMethod::murphy: return "murphy";
    case FusionMethod::fcpt_pcr: return "fcpt-pcr";
  }
  return "?";
}

int classify(std::span<const double> sample, const GaussianFeatureModel& model,
             FusionMethod method, bool* conflict_fallback) {
  if (static_cast<int>(sample.size()) != model.feature_count()) {
    throw std::invalid_argument("classify: sample has " + std::to_string(sample.size()) +
                                " features, model expects " +
                                std::to_string(model.feature_count()));
  }
  if (conflict_fallback != nullptr) *conflict_fallback = false;

  std::vector<ProbabilityMassFunction> pmfs;
  pmfs.reserve(sample.size());
  for (int j = 0; j < model.feature_count(); ++j) {
    pmfs.push_back(feature_pmf(sample[static_cast<std::size_t>(j)], model, j));
  }

  ProbabilityMassFunction fused = ProbabilityMassFunction::uniform(model.class_frame());
  switch (method) {
    case FusionMethod::drc: {
      try {
        MassFunction acc = pmfs.front().to_mass();
        for (std::size_t j = 1; j < pmfs.size(); ++j) {
          acc = drc(acc, pmfs[j].to_mass());
        }
        fused = ProbabilityMassFunction::from_mass(acc);
      } catch (const TotalConflictError&) {
        if (conflict_fallback != nullptr) *conflict_fallback = true;
      }
      break;
    }
    case FusionMethod::murphy: {
      std::vector<MassFunction> lifted;
      lifted.reserve(pmfs.size());
      for (const auto& p : pmfs) lifted.push_back(p.to_mass());
      fused = ProbabilityMassFunction::from_mass(murphy_combine(lifted));
      break;
    }
    case FusionMethod::fcpt_pcr: {
      // Left-to-right pairwise fold. The mean-then-refuse procedure used for
      // standalone multi-source fusion collapses to the same argmax as the
      // Murphy fold here, which erases the rule's discriminative edge; the
      // sequential fold is what separates it (and feature order becomes part
      // of the contract, since the rule is not associative).
      ProbabilityMassFunction acc = pmfs.front();
      for (std::size_t j = 1; j < pmfs.size(); ++j) {
        acc = fcpt_pcr_pair(acc, pmfs[j]);
      }
      fused = acc;
      break;
    }
  }

  int best = 0;
  for (int c = 1; c < fused.size(); ++c) {
    if (fused.prob(c) > fused.prob(best)) best = c;
  }
  return best;
}

CrossValReport cross_validate(const Dataset& data, int k, int repeats,
                              FusionMethod method, std::uint64_t seed) {
  const std::size_t n = data.sample_count();
  if (k < 2 || static_cast<std::size_t>(k) > n) {
    throw std::invalid_argument("cross_validate: k must be in [2, sample count]");
  }
  if (repeats < 1) throw std::invalid_argument("cross_validate: repeats >= 1");

  std::vector<std::vector<std::size_t>> by_class(data.class_count());
  for (std::size_t i = 0; i < n; ++i) {
    by_class[static_cast<std::size_t>(data.labels[i])].push_back(i);
  }
  for (std::size_t c = 0; c < by_class.size(); ++c) {
    const std::size_t total = by_class[c].size();
    const std::size_t largest_fold = (total + static_cast<std::size_t>(k) - 1) / k;
    if (total < largest_fold + 2) {
      throw std::invalid_argument("cross_validate: class '" + data.class_names[c] +
                                  "' too small to keep 2 training samples at k=" +
                                  std::to_string(k));
    }
  }

  CrossValReport report;
  report.method = method;
  report.k = k;
  report.repeats = repeats;
  report.seed = seed;
  report.accuracies.reserve(static_cast<std::size_t>(repeats));

  std::vector<int> fold_of(n, 0);
  for (int rep = 0; rep < repeats; ++rep) {
    SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(rep)));
    for (auto class_rows : by_class) {
      shuffle(class_rows, rng);
      for (std::size_t i = 0; i < class_rows.size(); ++i) {
        fold_of[class_rows[i]] = static_cast<int>(i % static_cast<std::size_t>(k));
      }
    }

    std::size_t correct = 0;
    for (int fold = 0; fold < k; ++fold) {
      std::vector<std::size_t> train_rows;
      std::vector<std::size_t> test_rows;
      train_rows.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        (fold_of[i] == fold ? test_rows : train_rows).push_back(i);
      }
      if (test_rows.empty()) continue;
      GaussianFeatureModel model = fit(data, train_rows);
      for (std::size_t row : test_rows) {
        bool fallback = false;
        const int predicted = classify(data.features[row], model, method, &fallback);
        if (fallback) ++report.conflict_fallbacks;
        if (predicted == data.labels[row]) ++correct;
      }
    }
    report.accuracies.push_back(static_cast<double>(correct) / static_cast<double>(n));
  }

  double sum = 0.0;
  for (double a : report.accuracies) sum += a;
  report.mean_accuracy = sum / static_cast<double>(repeats);
  double ss = 0.0;
  for (double a : report.accuracies) {
    const double d = a - report.mean_accuracy;
    ss += d * d;
  }
  report.stddev = repeats > 1 ? std::sqrt(ss / static_cast<double>(repeats - 1)) : 0.0;
  return report;
}

}  // namespace beliefkit
