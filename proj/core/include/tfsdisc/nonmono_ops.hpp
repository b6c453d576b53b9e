#pragma once

// Generalization, most specific common denominator (MSCD) and credulous
// priority union over typed feature structures.

#include <cstddef>
#include <vector>

#include "tfsdisc/atoms.hpp"
#include "tfsdisc/feature_structure.hpp"

namespace tfsdisc {

/// Alternative results of a non-deterministic operation: duplicate-free up to
/// isomorphism, pairwise incomparable under subsumption, and ordered by
/// canonical AVM text.
using ResultSet = std::vector<FeatureStructure>;

struct SearchOptions {
  /// Largest atom set the subset search will enumerate; LimitError beyond.
  std::size_t max_atoms = 24;
};

/// Most specific structure subsuming both inputs. Paths present in both
/// inputs keep the generalization of their types; a path equation survives
/// when it holds in both inputs.
FeatureStructure generalize(const TypeHierarchy& h, const FeatureStructure& a,
                            const FeatureStructure& b);

/// Priority union: the target is strict, the source defeasible. Returns
/// unify(target, S') for every maximal subset S' of the source's atoms that
/// is consistent with the target.
ResultSet punion(const TypeHierarchy& h, const FeatureStructure& target,
                 const FeatureStructure& source, const SearchOptions& options = {});

/// Generalization of all credulous priority-union results.
FeatureStructure skeptical_punion(const TypeHierarchy& h, const FeatureStructure& target,
                                  const FeatureStructure& source,
                                  const SearchOptions& options = {});

/// Every maximal generalization of `c1` that still unifies with `s2`.
/// Unlike priority union, an atom that clashes may survive in weakened form
/// (with a more general type), so like/hate keeps emot_att.
ResultSet mscd(const TypeHierarchy& h, const FeatureStructure& c1,
               const FeatureStructure& s2, const SearchOptions& options = {});

/// Atoms of `fs` together with every weakening of its typed atoms: for each
/// path, each supertype of the path's type still more specific than what
/// the arc range gives. The search space of mscd.
AtomSet weakened_atoms(const TypeHierarchy& h, const FeatureStructure& fs);

/// Maximal subsets (as bit masks over `atoms`) that are consistent with
/// `target`, found largest first. Exposed for tests and benchmarks.
std::vector<std::uint64_t> maximal_consistent_subsets(const TypeHierarchy& h,
                                                      const FeatureStructure& target,
                                                      const AtomSet& atoms,
                                                      const SearchOptions& options = {});

/// Removes isomorphic duplicates and every result that is strictly more
/// general than another one, then sorts by canonical text.
ResultSet normalize_results(const TypeHierarchy& h, std::vector<FeatureStructure> results);

}  // namespace tfsdisc
