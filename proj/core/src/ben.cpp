#include "beliefkit/ben.hpp"

#include <algorithm>
#include <stdexcept>

#include "beliefkit/errors.hpp"
#include "beliefkit/io.hpp"

namespace beliefkit {

BeliefEvolutionNetwork::BeliefEvolutionNetwork(FrameOfDiscernment frame)
    : frame_(std::move(frame)) {}

BeliefEvolutionNetwork BeliefEvolutionNetwork::build(const FrameOfDiscernment& frame) {
  BeliefEvolutionNetwork ben(frame);
  const int n = frame.size();
  ben.layers_.resize(static_cast<std::size_t>(n));
  for (std::uint32_t bits = 1; bits < frame.subset_count(); ++bits) {
    FocalSet set(bits);
    const int layer = n - set.cardinality();  // 0-based: layer l-1 holds card n-l+1
    ben.layers_[static_cast<std::size_t>(layer)].push_back(set);
  }
  return ben;
}

std::span<const FocalSet> BeliefEvolutionNetwork::layer(int l) const {
  if (l < 1 || l > layer_count()) {
    throw std::invalid_argument("layer index " + std::to_string(l) +
                                " out of range 1.." + std::to_string(layer_count()));
  }
  return layers_[static_cast<std::size_t>(l - 1)];
}

std::size_t BeliefEvolutionNetwork::node_count() const {
  std::size_t total = 0;
  for (const auto& layer : layers_) total += layer.size();
  return total;
}

std::vector<FocalSet> children(FocalSet f) {
  if (f.empty()) {
    throw std::invalid_argument("the empty set has no children in the network");
  }
  std::vector<FocalSet> out;
  out.reserve(static_cast<std::size_t>(f.cardinality()));
  for (int e : f.elements()) out.push_back(f.without_element(e));
  return out;
}

std::vector<FocalSet> parents(FocalSet f, int n) {
  if (f.empty()) {
    throw std::invalid_argument("the empty set does not appear in the network");
  }
  std::vector<FocalSet> out;
  for (int e = 0; e < n; ++e) {
    if (!f.contains(e)) out.push_back(f.unite(FocalSet::singleton(e)));
  }
  return out;
}

std::string export_dot(const BeliefEvolutionNetwork& ben, const MassFunction& m,
                       const std::map<FocalSet, std::string>* annotations) {
  if (!(m.frame() == ben.frame())) {
    throw FrameMismatchError("mass function frame does not match the network frame");
  }
  const auto& frame = ben.frame();

  std::string out;
  out += "digraph ben {\n";
  out += "  rankdir=TB;\n";
  out += "  node [shape=box, fontname=\"monospace\"];\n";
  for (int l = 1; l <= ben.layer_count(); ++l) {
    out += "  { rank=same;";
    for (FocalSet node : ben.layer(l)) {
      out += " \"" + frame.set_label(node) + "\";";
    }
    out += " }\n";
  }
  for (std::uint32_t bits = 1; bits < frame.subset_count(); ++bits) {
    FocalSet node(bits);
    std::string label =
        frame.set_label(node) + "\\n" + format_significant(m.mass(node), 6);
    if (annotations != nullptr) {
      auto it = annotations->find(node);
      if (it != annotations->end()) label += "\\n" + it->second;
    }
    out += "  \"" + frame.set_label(node) + "\" [label=\"" + label + "\"];\n";
  }
  for (std::uint32_t bits = 1; bits < frame.subset_count(); ++bits) {
    FocalSet node(bits);
    if (node.cardinality() < 2) continue;
    for (FocalSet child : children(node)) {
      out += "  \"" + frame.set_label(node) + "\" -> \"" + frame.set_label(child) +
             "\";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace beliefkit
