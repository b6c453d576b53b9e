#include "tfsdisc/feature_structure.hpp"

#include <algorithm>

#include "tfsdisc/error.hpp"
#include "workspace.hpp"

namespace tfsdisc {

bool Path::is_prefix_of(const Path& other) const {
  return features.size() <= other.features.size() &&
         std::equal(features.begin(), features.end(), other.features.begin());
}

std::string to_string(const TypeHierarchy& h, const Path& p) {
  if (p.empty()) return "*";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += '|';
    out += h.name(p.features[i]);
  }
  return out;
}

Path parse_path(const TypeHierarchy& h, std::string_view text) {
  Path p;
  if (text == "*") return p;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto bar = text.find('|', start);
    const auto piece = text.substr(start, bar == std::string_view::npos ? bar : bar - start);
    auto f = h.find_feature(piece);
    if (!f) throw Error("unknown feature '" + std::string(piece) + "'");
    p.features.push_back(*f);
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return p;
}

std::optional<NodeId> FeatureStructure::follow(NodeId from, FeatureId f) const {
  for (const auto& arc : nodes_[from].arcs) {
    if (arc.feature == f) return arc.target;
  }
  return std::nullopt;
}

std::optional<NodeId> FeatureStructure::walk(const Path& p) const {
  NodeId cur = kRoot;
  for (FeatureId f : p.features) {
    auto next = follow(cur, f);
    if (!next) return std::nullopt;
    cur = *next;
  }
  return cur;
}

std::optional<FeatureStructure> FeatureStructure::at(const Path& p) const {
  auto n = walk(p);
  if (!n) return std::nullopt;
  if (*n == kRoot) return *this;
  std::vector<Node> nodes;
  std::vector<NodeId> remap(nodes_.size(), static_cast<NodeId>(-1));
  auto visit = [&](auto& self, NodeId src) -> NodeId {
    if (remap[src] != static_cast<NodeId>(-1)) return remap[src];
    const auto id = static_cast<NodeId>(nodes.size());
    remap[src] = id;
    nodes.push_back({nodes_[src].type, {}});
    for (const auto& arc : nodes_[src].arcs) {
      const NodeId child = self(self, arc.target);
      nodes[id].arcs.push_back({arc.feature, child});
    }
    return id;
  };
  visit(visit, *n);
  return FeatureStructure(std::move(nodes));
}

std::vector<std::pair<Path, NodeId>> FeatureStructure::paths() const {
  std::vector<std::pair<Path, NodeId>> out;
  Path cur;
  auto visit = [&](auto& self, NodeId n) -> void {
    out.emplace_back(cur, n);
    for (const auto& arc : nodes_[n].arcs) {
      cur.features.push_back(arc.feature);
      self(self, arc.target);
      cur.features.pop_back();
    }
  };
  visit(visit, kRoot);
  return out;
}

std::vector<std::uint32_t> FeatureStructure::in_degrees() const {
  std::vector<std::uint32_t> deg(nodes_.size(), 0);
  for (const auto& node : nodes_) {
    for (const auto& arc : node.arcs) ++deg[arc.target];
  }
  return deg;
}

FeatureStructure mgsat(const TypeHierarchy& h, TypeId t) {
  detail::Workspace ws(h);
  return *ws.extract(ws.add_mgsat(t));
}

std::optional<FeatureStructure> unify(const TypeHierarchy& h, const FeatureStructure& a,
                                      const FeatureStructure& b) {
  detail::Workspace ws(h);
  const auto ra = ws.add(a);
  const auto rb = ws.add(b);
  if (!ws.merge(ra, rb)) return std::nullopt;
  return ws.extract(ra);
}

bool subsumes(const TypeHierarchy& h, const FeatureStructure& general,
              const FeatureStructure& specific) {
  constexpr NodeId kUnset = static_cast<NodeId>(-1);
  std::vector<NodeId> image(general.size(), kUnset);
  std::vector<NodeId> stack{FeatureStructure::kRoot};
  image[FeatureStructure::kRoot] = FeatureStructure::kRoot;
  while (!stack.empty()) {
    const NodeId g = stack.back();
    stack.pop_back();
    const NodeId s = image[g];
    if (!h.subsumes(general.type(g), specific.type(s))) return false;
    for (const auto& arc : general.node(g).arcs) {
      const auto target = specific.follow(s, arc.feature);
      if (!target) return false;
      if (image[arc.target] == kUnset) {
        image[arc.target] = *target;
        stack.push_back(arc.target);
      } else if (image[arc.target] != *target) {
        return false;
      }
    }
  }
  return true;
}

bool strictly_subsumes(const TypeHierarchy& h, const FeatureStructure& general,
                       const FeatureStructure& specific) {
  return subsumes(h, general, specific) && !subsumes(h, specific, general);
}

}  // namespace tfsdisc
