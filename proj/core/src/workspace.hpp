#pragma once

#include <optional>
#include <vector>

#include "tfsdisc/atoms.hpp"
#include "tfsdisc/feature_structure.hpp"

namespace tfsdisc::detail {

// Union-find scratch area for building and unifying structures. Nodes are
// equivalence classes; merging two classes joins their types, merges their
// arcs pairwise and fills any features the joined type newly requires.
// Once a merge fails the workspace stays failed.
class Workspace {
 public:
  using Index = std::uint32_t;

  explicit Workspace(const TypeHierarchy& h) : h_(h) {}

  bool failed() const { return failed_; }

  Index add(const FeatureStructure& fs);
  Index add_mgsat(TypeId t);

  bool merge(Index a, Index b);
  bool constrain(Index n, TypeId t);

  // Value of `f` at `n`, specializing n's type so that it carries `f`.
  std::optional<Index> walk(Index n, FeatureId f);
  std::optional<Index> walk(Index n, const Path& p);

  TypeId type_of(Index n) { return type_[find(n)]; }

  // Canonical structure rooted at `n`, or nullopt if failed or cyclic.
  std::optional<FeatureStructure> extract(Index n);

 private:
  struct Arc {
    FeatureId feature;
    Index target;
  };

  Index find(Index n);
  Index fresh(TypeId t);
  bool fill(Index rep, std::vector<std::pair<Index, Index>>& pending);

  const TypeHierarchy& h_;
  std::vector<Index> parent_;
  std::vector<TypeId> type_;
  std::vector<std::vector<Arc>> arcs_;
  bool failed_ = false;
};

// Adds one atom's constraint at `root`; false once the workspace has failed.
bool apply_atom(Workspace& ws, Workspace::Index root, const AtomicConstraint& atom);

}  // namespace tfsdisc::detail
