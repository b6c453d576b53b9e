#include "tfsdisc/nonmono_ops.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "tfsdisc/error.hpp"
#include "workspace.hpp"

namespace tfsdisc {

namespace {

using Mask = std::uint64_t;

// unify(target, reassemble(atoms in mask)) without building the
// intermediate structure.
std::optional<FeatureStructure> unify_with_atoms(const TypeHierarchy& h,
                                                 const FeatureStructure& target,
                                                 const AtomSet& atoms, Mask mask) {
  detail::Workspace ws(h);
  const auto root = ws.add(target);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if ((mask >> i) & 1u) {
      if (!detail::apply_atom(ws, root, atoms[i])) return std::nullopt;
    }
  }
  return ws.extract(root);
}

std::vector<AtomicConstraint> select(const AtomSet& atoms, Mask mask) {
  std::vector<AtomicConstraint> out;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if ((mask >> i) & 1u) out.push_back(atoms[i]);
  }
  return out;
}

}  // namespace

FeatureStructure generalize(const TypeHierarchy& h, const FeatureStructure& a,
                            const FeatureStructure& b) {
  const auto pa = a.paths();
  const auto pb = b.paths();

  std::vector<AtomicConstraint> atoms;
  std::map<std::pair<NodeId, NodeId>, std::vector<const Path*>> classes;
  auto ia = pa.begin();
  auto ib = pb.begin();
  while (ia != pa.end() && ib != pb.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      const TypeId t = h.gen(a.type(ia->second), b.type(ib->second));
      atoms.push_back(ia->first.empty() ? AtomicConstraint::root_type(t)
                                        : AtomicConstraint::path_type(ia->first, t));
      classes[{ia->second, ib->second}].push_back(&ia->first);
      ++ia;
      ++ib;
    }
  }
  for (const auto& [nodes, paths] : classes) {
    for (std::size_t i = 1; i < paths.size(); ++i) {
      atoms.push_back(AtomicConstraint::path_eq(*paths.front(), *paths[i]));
    }
  }
  auto result = reassemble(h, atoms);
  if (!result) throw std::logic_error("generalization produced inconsistent atoms");
  return *result;
}

std::vector<std::uint64_t> maximal_consistent_subsets(const TypeHierarchy& h,
                                                      const FeatureStructure& target,
                                                      const AtomSet& atoms,
                                                      const SearchOptions& options) {
  const std::size_t limit = std::min<std::size_t>(options.max_atoms, 63);
  if (atoms.size() > limit) throw LimitError(atoms.size(), limit);

  auto consistent = [&](Mask mask) {
    return unify_with_atoms(h, target, atoms, mask).has_value();
  };

  // An atom that clashes with the target on its own rules out every superset.
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (consistent(Mask{1} << i)) live.push_back(i);
  }
  const std::size_t m = live.size();
  auto widen = [&](Mask local) {
    Mask mask = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if ((local >> j) & 1u) mask |= Mask{1} << live[j];
    }
    return mask;
  };

  const Mask all = m == 0 ? 0 : (m == 64 ? ~Mask{0} : (Mask{1} << m) - 1);
  if (consistent(widen(all))) return {widen(all)};

  // Breadth-first over subset size, largest first. A subset contained in an
  // accepted one cannot be maximal; once a whole level is covered, so are
  // all smaller levels.
  std::vector<Mask> accepted;
  for (std::size_t k = m; k-- > 0;) {
    bool tested = false;
    auto visit = [&](Mask local) {
      const Mask mask = widen(local);
      for (Mask a : accepted) {
        if ((mask & ~a) == 0) return;
      }
      tested = true;
      if (consistent(mask)) accepted.push_back(mask);
    };
    if (k == 0) {
      visit(0);
    } else {
      Mask local = (Mask{1} << k) - 1;
      while (local <= all) {
        visit(local);
        const Mask low = local & -local;
        const Mask ripple = local + low;
        if (ripple == 0) break;
        local = (((ripple ^ local) >> 2) / low) | ripple;
      }
    }
    if (!tested) break;
  }
  return accepted;
}

ResultSet normalize_results(const TypeHierarchy& h, std::vector<FeatureStructure> results) {
  std::vector<std::pair<std::string, FeatureStructure>> keyed;
  keyed.reserve(results.size());
  for (auto& r : results) keyed.emplace_back(print_avm(h, r), std::move(r));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& x, const auto& y) { return x.first == y.first; }),
              keyed.end());
  std::vector<bool> dominated(keyed.size(), false);
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    for (std::size_t j = 0; j < keyed.size() && !dominated[i]; ++j) {
      dominated[i] = i != j && strictly_subsumes(h, keyed[i].second, keyed[j].second);
    }
  }
  ResultSet out;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (!dominated[i]) out.push_back(std::move(keyed[i].second));
  }
  return out;
}

ResultSet punion(const TypeHierarchy& h, const FeatureStructure& target,
                 const FeatureStructure& source, const SearchOptions& options) {
  const AtomSet atoms = decompose(h, source);
  std::vector<FeatureStructure> results;
  for (Mask mask : maximal_consistent_subsets(h, target, atoms, options)) {
    results.push_back(*unify_with_atoms(h, target, atoms, mask));
  }
  return normalize_results(h, std::move(results));
}

FeatureStructure skeptical_punion(const TypeHierarchy& h, const FeatureStructure& target,
                                  const FeatureStructure& source,
                                  const SearchOptions& options) {
  const ResultSet credulous = punion(h, target, source, options);
  FeatureStructure acc = credulous.front();
  for (std::size_t i = 1; i < credulous.size(); ++i) acc = generalize(h, acc, credulous[i]);
  return acc;
}

AtomSet weakened_atoms(const TypeHierarchy& h, const FeatureStructure& fs) {
  AtomSet atoms;
  for (const auto& atom : decompose(h, fs)) {
    if (atom.kind == AtomicConstraint::Kind::kPathEq) atoms.push_back(atom);
  }
  for (const auto& [path, node] : fs.paths()) {
    const TypeId base = path.empty()
                            ? h.root()
                            : *h.range(h.intro(path.features.back()), path.features.back());
    for (TypeId t : h.supertypes(fs.type(node))) {
      if (t == base || !h.subsumes(base, t)) continue;
      atoms.push_back(path.empty() ? AtomicConstraint::root_type(t)
                                   : AtomicConstraint::path_type(path, t));
    }
  }
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

ResultSet mscd(const TypeHierarchy& h, const FeatureStructure& c1, const FeatureStructure& s2,
               const SearchOptions& options) {
  const AtomSet atoms = weakened_atoms(h, c1);
  std::vector<FeatureStructure> results;
  for (Mask mask : maximal_consistent_subsets(h, s2, atoms, options)) {
    results.push_back(*reassemble(h, select(atoms, mask)));
  }
  return normalize_results(h, std::move(results));
}

}  // namespace tfsdisc
