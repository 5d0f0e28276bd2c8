#include "beliefkit/frame.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "beliefkit/errors.hpp"

namespace beliefkit {

namespace {

bool label_ok(const std::string& label) {
  if (label.empty()) return false;
  for (char c : label) {
    if (c == '+' || c == ':' || c == '#' || std::isspace(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

}  // namespace

FrameOfDiscernment::FrameOfDiscernment(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw std::invalid_argument("frame needs at least one element");
  }
  if (static_cast<int>(labels_.size()) > kMaxElements) {
    throw std::invalid_argument("frame exceeds " + std::to_string(kMaxElements) +
                                " elements (" + std::to_string(labels_.size()) + ")");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels_) {
    if (!label_ok(label)) {
      throw std::invalid_argument("bad element label '" + label +
                                  "' (empty or contains whitespace/'+'/':'/'#')");
    }
    if (!seen.insert(label).second) {
      throw std::invalid_argument("duplicate element label '" + label + "'");
    }
  }
}

FrameOfDiscernment FrameOfDiscernment::with_default_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) {
    if (n <= 26) {
      labels.push_back(std::string(1, static_cast<char>('A' + i)));
    } else {
      labels.push_back("e" + std::to_string(i + 1));
    }
  }
  return FrameOfDiscernment(std::move(labels));
}

std::optional<int> FrameOfDiscernment::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::string FrameOfDiscernment::set_label(FocalSet set) const {
  if (set.empty()) return "_";
  std::string out;
  for (int e : set.elements()) {
    if (!out.empty()) out += '+';
    out += labels_[static_cast<std::size_t>(e)];
  }
  return out;
}

FocalSet FrameOfDiscernment::parse_set_label(std::string_view text) const {
  if (text == "_") return FocalSet::empty_set();
  std::uint32_t bits = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('+', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(start, end - start);
    auto idx = index_of(part);
    if (!idx) {
      throw ParseError("unknown element label '" + std::string(part) + "'");
    }
    bits |= std::uint32_t{1} << *idx;
    if (end == text.size()) break;
    start = end + 1;
  }
  return FocalSet(bits);
}

}  // namespace beliefkit
