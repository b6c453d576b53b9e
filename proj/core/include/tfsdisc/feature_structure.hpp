#pragma once

// Totally well-typed feature structures.
//
// A FeatureStructure is a rooted acyclic graph. Every node carries a type and
// exactly the features appropriate for that type; re-entrancy is expressed by
// several arcs pointing at the same node. Structures are immutable and always
// stored in canonical form: nodes are numbered in depth-first preorder with
// arcs visited in feature-name order, so two structures are isomorphic iff
// they compare equal.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tfsdisc/type_system.hpp"

namespace tfsdisc {

namespace detail {
class Workspace;
}

using NodeId = std::uint32_t;

/// A sequence of features addressing a node from the root. The empty path is
/// the root. Paths order lexicographically by feature name.
struct Path {
  std::vector<FeatureId> features;

  bool empty() const { return features.empty(); }
  std::size_t size() const { return features.size(); }
  Path extended(FeatureId f) const {
    Path p = *this;
    p.features.push_back(f);
    return p;
  }
  bool is_prefix_of(const Path& other) const;

  friend auto operator<=>(const Path&, const Path&) = default;
  friend bool operator==(const Path&, const Path&) = default;
};

/// Formats a path as `F|G|H`; the empty path prints as `*`.
std::string to_string(const TypeHierarchy& h, const Path& p);

/// Parses `F|G|H` (or `*` for the root). Throws Error on unknown features.
Path parse_path(const TypeHierarchy& h, std::string_view text);

class FeatureStructure {
 public:
  struct Arc {
    FeatureId feature;
    NodeId target;
    friend bool operator==(const Arc&, const Arc&) = default;
  };

  struct Node {
    TypeId type;
    std::vector<Arc> arcs;  // sorted by feature
    friend bool operator==(const Node&, const Node&) = default;
  };

  static constexpr NodeId kRoot = 0;

  std::size_t size() const { return nodes_.size(); }
  const Node& node(NodeId n) const { return nodes_[n]; }
  std::span<const Node> nodes() const { return nodes_; }

  TypeId type() const { return nodes_[kRoot].type; }
  TypeId type(NodeId n) const { return nodes_[n].type; }

  std::optional<NodeId> follow(NodeId from, FeatureId f) const;
  std::optional<NodeId> walk(const Path& p) const;

  /// Substructure rooted at the node `p` addresses.
  std::optional<FeatureStructure> at(const Path& p) const;

  /// Every path of the structure (through shared nodes too) with the node it
  /// reaches, in lexicographic path order. The root path comes first.
  std::vector<std::pair<Path, NodeId>> paths() const;

  /// Number of arcs pointing at each node.
  std::vector<std::uint32_t> in_degrees() const;

  /// Isomorphism test (structures are canonical).
  friend bool operator==(const FeatureStructure&, const FeatureStructure&) = default;

 private:
  friend class detail::Workspace;
  FeatureStructure() = default;
  explicit FeatureStructure(std::vector<Node> nodes) : nodes_(std::move(nodes)) {}

  std::vector<Node> nodes_;
};

/// Most general totally well-typed structure of type `t`.
FeatureStructure mgsat(const TypeHierarchy& h, TypeId t);

/// Most general structure at least as specific as both inputs, or nullopt
/// when they are inconsistent (a type clash or a cycle).
std::optional<FeatureStructure> unify(const TypeHierarchy& h, const FeatureStructure& a,
                                      const FeatureStructure& b);

/// True iff `general` carries no information absent from `specific`: a
/// root-preserving arc-preserving map from general's nodes into specific's
/// nodes exists that never makes types more general.
bool subsumes(const TypeHierarchy& h, const FeatureStructure& general,
              const FeatureStructure& specific);

/// True iff `general` subsumes `specific` and not vice versa.
bool strictly_subsumes(const TypeHierarchy& h, const FeatureStructure& general,
                       const FeatureStructure& specific);

/// Parses an AVM: `FS ::= TAG? '[' TYPE (FEAT ':' FS)* ']'`. Omitted features
/// are filled with the most general value of their range; a feature on a type
/// that does not carry it specializes the type. Throws ParseError.
FeatureStructure parse_avm(const TypeHierarchy& h, std::string_view text);

/// Canonical single-line text form: features in name order, shared nodes
/// tagged #1, #2, ... in order of first occurrence.
std::string print_avm(const TypeHierarchy& h, const FeatureStructure& fs);

}  // namespace tfsdisc
