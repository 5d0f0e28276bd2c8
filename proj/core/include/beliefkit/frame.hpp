#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace beliefkit {

/// A subset of a frame's elements, encoded as a bitmask over element indices.
/// Value type; it does not know its frame, so callers pass the frame size to
/// operations that need the universe (complement, children, ...).
class FocalSet {
 public:
  constexpr FocalSet() = default;
  explicit constexpr FocalSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr FocalSet empty_set() { return FocalSet(0); }
  static constexpr FocalSet singleton(int element) {
    return FocalSet(std::uint32_t{1} << element);
  }
  static constexpr FocalSet full(int n) {
    return n == 0 ? FocalSet(0) : FocalSet((std::uint32_t{1} << n) - 1);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int cardinality() const { return std::popcount(bits_); }

  constexpr bool contains(int element) const {
    return (bits_ >> element) & 1u;
  }
  constexpr bool subset_of(FocalSet other) const {
    return (bits_ & other.bits_) == bits_;
  }
  constexpr bool strict_subset_of(FocalSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool superset_of(FocalSet other) const {
    return other.subset_of(*this);
  }
  constexpr bool intersects(FocalSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr FocalSet intersect(FocalSet other) const {
    return FocalSet(bits_ & other.bits_);
  }
  constexpr FocalSet unite(FocalSet other) const {
    return FocalSet(bits_ | other.bits_);
  }
  constexpr FocalSet minus(FocalSet other) const {
    return FocalSet(bits_ & ~other.bits_);
  }
  constexpr FocalSet complement_in(int n) const {
    return FocalSet(full(n).bits() & ~bits_);
  }
  constexpr FocalSet without_element(int element) const {
    return FocalSet(bits_ & ~(std::uint32_t{1} << element));
  }

  /// Indices of the contained elements, ascending.
  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(cardinality());
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  auto operator<=>(const FocalSet&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Finite frame of discernment: an ordered list of distinct element labels.
/// Frames are small (at most 24 elements) so power-set walks stay tractable;
/// larger frames are rejected at construction.
class FrameOfDiscernment {
 public:
  static constexpr int kMaxElements = 24;

  /// Throws std::invalid_argument on empty/duplicate labels, labels containing
  /// reserved characters (whitespace, '+', ':', '#'), or more than 24 labels.
  explicit FrameOfDiscernment(std::vector<std::string> labels);

  /// Frame with generated labels: A..Z style for n <= 26-compatible sizes,
  /// used by CLI paths where only the element count is known.
  static FrameOfDiscernment with_default_labels(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  std::optional<int> index_of(std::string_view label) const;

  FocalSet full_set() const { return FocalSet::full(size()); }
  std::uint32_t subset_count() const { return std::uint32_t{1} << size(); }

  /// Human-readable subset label: element labels joined by '+', "_" for the
  /// empty set. Matches the mass-function text format.
  std::string set_label(FocalSet set) const;

  /// Parses a set label produced by set_label(); throws ParseError on unknown
  /// element labels.
  FocalSet parse_set_label(std::string_view text) const;

  bool operator==(const FrameOfDiscernment& other) const {
    return labels_ == other.labels_;
  }

 private:
  std::vector<std::string> labels_;
};

}  // namespace beliefkit
