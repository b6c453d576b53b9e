#include "workspace.hpp"

#include <algorithm>
#include <unordered_map>

namespace tfsdisc::detail {

Workspace::Index Workspace::find(Index n) {
  Index root = n;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[n] != root) {
    const Index next = parent_[n];
    parent_[n] = root;
    n = next;
  }
  return root;
}

Workspace::Index Workspace::fresh(TypeId t) {
  const auto idx = static_cast<Index>(parent_.size());
  parent_.push_back(idx);
  type_.push_back(t);
  arcs_.emplace_back();
  return idx;
}

Workspace::Index Workspace::add_mgsat(TypeId t) {
  const Index idx = fresh(t);
  std::vector<Arc> arcs;
  for (const auto& a : h_.approp(t)) arcs.push_back({a.feature, add_mgsat(a.range)});
  arcs_[idx] = std::move(arcs);
  return idx;
}

Workspace::Index Workspace::add(const FeatureStructure& fs) {
  const auto base = static_cast<Index>(parent_.size());
  for (const auto& node : fs.nodes()) fresh(node.type);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    auto& arcs = arcs_[base + i];
    for (const auto& arc : fs.node(static_cast<NodeId>(i)).arcs) {
      arcs.push_back({arc.feature, base + arc.target});
    }
  }
  return base;
}

bool Workspace::fill(Index rep, std::vector<std::pair<Index, Index>>& pending) {
  const TypeId t = type_[rep];
  std::vector<Arc> arcs = arcs_[rep];
  std::vector<Arc> out;
  out.reserve(h_.approp(t).size());
  auto it = arcs.begin();
  for (const auto& a : h_.approp(t)) {
    while (it != arcs.end() && it->feature < a.feature) ++it;
    if (it != arcs.end() && it->feature == a.feature) {
      out.push_back(*it);
      if (!h_.subsumes(a.range, type_[find(it->target)])) {
        pending.emplace_back(it->target, add_mgsat(a.range));
      }
    } else {
      out.push_back({a.feature, add_mgsat(a.range)});
    }
  }
  arcs_[rep] = std::move(out);
  return true;
}

bool Workspace::merge(Index a, Index b) {
  if (failed_) return false;
  std::vector<std::pair<Index, Index>> pending{{a, b}};
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    x = find(x);
    y = find(y);
    if (x == y) continue;
    const auto joined = h_.join(type_[x], type_[y]);
    if (!joined) {
      failed_ = true;
      return false;
    }
    if (arcs_[x].size() < arcs_[y].size()) std::swap(x, y);
    parent_[y] = x;

    std::vector<Arc> merged;
    const auto& ax = arcs_[x];
    const auto& ay = arcs_[y];
    std::size_t i = 0, j = 0;
    while (i < ax.size() || j < ay.size()) {
      if (j == ay.size() || (i < ax.size() && ax[i].feature < ay[j].feature)) {
        merged.push_back(ax[i++]);
      } else if (i == ax.size() || ay[j].feature < ax[i].feature) {
        merged.push_back(ay[j++]);
      } else {
        merged.push_back(ax[i]);
        pending.emplace_back(ax[i].target, ay[j].target);
        ++i;
        ++j;
      }
    }
    arcs_[x] = std::move(merged);
    arcs_[y].clear();
    const bool specialized = *joined != type_[x] || *joined != type_[y];
    type_[x] = *joined;
    if (specialized) fill(x, pending);
  }
  return true;
}

bool Workspace::constrain(Index n, TypeId t) {
  if (failed_) return false;
  if (h_.subsumes(t, type_[find(n)])) return true;
  return merge(n, add_mgsat(t));
}

std::optional<Workspace::Index> Workspace::walk(Index n, FeatureId f) {
  if (!constrain(n, h_.intro(f))) return std::nullopt;
  const Index rep = find(n);
  for (const auto& arc : arcs_[rep]) {
    if (arc.feature == f) return arc.target;
  }
  return std::nullopt;
}

std::optional<Workspace::Index> Workspace::walk(Index n, const Path& p) {
  Index cur = n;
  for (FeatureId f : p.features) {
    auto next = walk(cur, f);
    if (!next) return std::nullopt;
    cur = *next;
  }
  return cur;
}

std::optional<FeatureStructure> Workspace::extract(Index n) {
  if (failed_) return std::nullopt;
  enum : std::uint8_t { kActive = 1, kDone = 2 };
  std::unordered_map<Index, std::pair<std::uint8_t, NodeId>> seen;
  std::vector<FeatureStructure::Node> nodes;
  bool cyclic = false;

  auto visit = [&](auto& self, Index rep) -> NodeId {
    auto it = seen.find(rep);
    if (it != seen.end()) {
      if (it->second.first == kActive) cyclic = true;
      return it->second.second;
    }
    const auto id = static_cast<NodeId>(nodes.size());
    seen.emplace(rep, std::make_pair(std::uint8_t{kActive}, id));
    nodes.push_back({type_[rep], {}});
    const std::vector<Arc> arcs = arcs_[rep];
    for (const auto& arc : arcs) {
      const NodeId child = self(self, find(arc.target));
      if (cyclic) return id;
      nodes[id].arcs.push_back({arc.feature, child});
    }
    seen[rep].first = kDone;
    return id;
  };
  visit(visit, find(n));
  if (cyclic) return std::nullopt;
  return FeatureStructure(std::move(nodes));
}

}  // namespace tfsdisc::detail
