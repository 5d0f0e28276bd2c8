#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "beliefkit/mass_function.hpp"

namespace beliefkit {

/// Layered DAG over the nonempty subsets of a frame. Layer l (1-based) holds
/// the subsets of cardinality n-l+1, so layer 1 is {full set} and layer n the
/// singletons. Edges drop exactly one element and are computed on demand;
/// only the layer structure is stored. Immutable after build.
class BeliefEvolutionNetwork {
 public:
  static BeliefEvolutionNetwork build(const FrameOfDiscernment& frame);

  const FrameOfDiscernment& frame() const { return frame_; }
  int layer_count() const { return static_cast<int>(layers_.size()); }
  /// Nodes of layer l (1-based), ascending bitmask.
  std::span<const FocalSet> layer(int l) const;
  std::size_t node_count() const;

 private:
  explicit BeliefEvolutionNetwork(FrameOfDiscernment frame);

  FrameOfDiscernment frame_;
  std::vector<std::vector<FocalSet>> layers_;
};

/// Subsets reached by removing exactly one element; throws
/// std::invalid_argument for the empty set.
std::vector<FocalSet> children(FocalSet f);

/// Supersets reached by adding exactly one element of the n-element universe.
std::vector<FocalSet> parents(FocalSet f, int n);

/// DOT digraph with nodes labeled "<set>\n<mass>" (plus an optional extra
/// annotation line per node) and one edge per parent->child pair. Node and
/// edge order is ascending bitmask, so equal inputs render byte-identically.
std::string export_dot(const BeliefEvolutionNetwork& ben, const MassFunction& m,
                       const std::map<FocalSet, std::string>* annotations = nullptr);

}  // namespace beliefkit
