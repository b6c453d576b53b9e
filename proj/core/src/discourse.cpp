#include "tfsdisc/discourse.hpp"

#include <algorithm>
#include <map>

#include "tfsdisc/atoms.hpp"
#include "tfsdisc/error.hpp"

namespace tfsdisc {

const char* to_string(Connective c) {
  switch (c) {
    case Connective::kNone: return "none";
    case Connective::kAnd: return "and";
    case Connective::kOr: return "or";
    case Connective::kBut: return "but";
  }
  return "none";
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::kLeaf: return "leaf";
    case Relation::kList: return "list";
    case Relation::kContrast: return "contrast";
  }
  return "leaf";
}

std::optional<Connective> parse_connective(std::string_view text) {
  if (text == "none") return Connective::kNone;
  if (text == "and") return Connective::kAnd;
  if (text == "or") return Connective::kOr;
  if (text == "but") return Connective::kBut;
  return std::nullopt;
}

std::vector<Relation> RelationSet::members() const {
  std::vector<Relation> out;
  for (Relation r : {Relation::kLeaf, Relation::kList, Relation::kContrast}) {
    if (contains(r)) out.push_back(r);
  }
  return out;
}

Relation RelationSet::primary() const {
  auto m = members();
  return m.empty() ? Relation::kLeaf : m.front();
}

bool characteristic_gen(const TypeHierarchy& h, const FeatureStructure& schema) {
  if (schema.type() == h.root()) return false;
  const auto atoms = decompose(h, schema);
  return std::any_of(atoms.begin(), atoms.end(), [](const AtomicConstraint& a) {
    return a.kind == AtomicConstraint::Kind::kPathType;
  });
}

bool permissive_characteristic_gen(const TypeHierarchy&, const FeatureStructure&) {
  return true;
}

RelationSet connective_relation(Connective c) {
  switch (c) {
    case Connective::kAnd:
    case Connective::kOr:
      return {Relation::kList};
    case Connective::kBut:
      return {Relation::kContrast};
    case Connective::kNone:
      break;
  }
  return {Relation::kList, Relation::kContrast};
}

namespace {

// What a constituent contributes to the common ground of its mother.
const FeatureStructure& ground(const DiscourseNode& node) {
  return node.is_leaf() ? node.consem : *node.schema;
}

std::vector<FeatureStructure> schemas_for(const TypeHierarchy& h, const DiscourseNode& left,
                                          const FeatureStructure& resolved_right,
                                          const FeatureStructure& unresolved_right,
                                          const DiscourseOptions& options) {
  if (options.schema_mode == SchemaMode::kMscd) {
    return mscd(h, ground(left), unresolved_right, options.search);
  }
  return {generalize(h, ground(left), resolved_right)};
}

std::string content_key(const TypeHierarchy& h, const DiscourseNode& node) {
  if (node.is_leaf()) return "(" + node.clause + " " + print_avm(h, node.consem) + ")";
  return "(" + content_key(h, *node.children[0]) + " " + content_key(h, *node.children[1]) +
         " " + print_avm(h, node.consem) + " " + print_avm(h, *node.schema) + ")";
}

}  // namespace

std::vector<Combination> combine(const TypeHierarchy& h, Relation rel,
                                 const DiscourseNode& left, const FeatureStructure& right_sem,
                                 const DiscourseOptions& options) {
  // List and contrast resolve and compute common ground the same way; the
  // relation only matters for which connectives license the node.
  (void)rel;
  std::vector<Combination> out;
  for (const auto& resolved : punion(h, right_sem, left.consem, options.search)) {
    for (auto& schema : schemas_for(h, left, resolved, right_sem, options)) {
      if (options.predicate(h, schema)) out.push_back({resolved, std::move(schema)});
    }
  }
  return out;
}

std::vector<Combination> combine(const TypeHierarchy& h, Relation rel,
                                 const DiscourseNode& left, const DiscourseNode& right,
                                 const DiscourseOptions& options) {
  if (right.is_leaf()) return combine(h, rel, left, *right.sem, options);
  std::vector<Combination> out;
  for (auto& schema : schemas_for(h, left, *right.schema, *right.schema, options)) {
    if (options.predicate(h, schema)) out.push_back({right.consem, std::move(schema)});
  }
  return out;
}

NodePtr make_leaf(const DCU& dcu, std::size_t position) {
  return std::make_shared<const DiscourseNode>(DiscourseNode{
      .relations = {Relation::kLeaf},
      .children = {},
      .first = position,
      .last = position,
      .clause = dcu.id,
      .sem = dcu.sem,
      .consem = dcu.sem,
      .schema = std::nullopt,
  });
}

std::string shape(const DiscourseNode& node) {
  if (node.is_leaf()) return node.clause;
  std::string rels;
  for (Relation r : node.relations.members()) {
    if (!rels.empty()) rels += '|';
    rels += to_string(r);
  }
  return rels + "(" + shape(*node.children[0]) + ", " + shape(*node.children[1]) + ")";
}

std::vector<Reading> parse_discourse(const TypeHierarchy& h, const std::vector<DCU>& dcus,
                                     const DiscourseOptions& options) {
  const std::size_t n = dcus.size();
  if (n == 0) throw Error("a discourse needs at least one clause");

  std::vector<std::vector<std::vector<NodePtr>>> chart(n, std::vector<std::vector<NodePtr>>(n));
  for (std::size_t i = 0; i < n; ++i) chart[i][i].push_back(make_leaf(dcus[i], i));

  for (std::size_t len = 2; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      const std::size_t j = i + len - 1;
      // Content key -> node; relations of identical combinations are merged.
      std::map<std::string, DiscourseNode> cell;
      for (std::size_t k = i; k < j; ++k) {
        const RelationSet licensed = connective_relation(dcus[k + 1].connective);
        for (const auto& left : chart[i][k]) {
          for (const auto& right : chart[k + 1][j]) {
            for (Relation rel : licensed.members()) {
              for (auto& combo : combine(h, rel, *left, *right, options)) {
                NodePtr resolved_right = right;
                if (right->is_leaf()) {
                  auto leaf = *right;
                  leaf.consem = combo.consem;
                  resolved_right = std::make_shared<const DiscourseNode>(std::move(leaf));
                }
                DiscourseNode node{
                    .relations = {rel},
                    .children = {left, resolved_right},
                    .first = i,
                    .last = j,
                    .clause = {},
                    .sem = std::nullopt,
                    .consem = std::move(combo.consem),
                    .schema = std::move(combo.schema),
                };
                auto key = content_key(h, node);
                auto it = cell.find(key);
                if (it == cell.end()) {
                  cell.emplace(std::move(key), std::move(node));
                } else {
                  it->second.relations.insert(rel);
                }
              }
            }
          }
        }
      }
      for (auto& [key, node] : cell) {
        chart[i][j].push_back(std::make_shared<const DiscourseNode>(std::move(node)));
      }
    }
  }

  std::vector<std::pair<std::string, NodePtr>> ordered;
  for (const auto& node : chart[0][n - 1]) {
    ordered.emplace_back(shape(*node) + " " + content_key(h, *node), node);
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Reading> readings;
  int id = 0;
  for (auto& [key, node] : ordered) {
    auto root = *node;
    root.reading_id = ++id;
    auto tree = std::make_shared<const DiscourseNode>(std::move(root));
    readings.push_back(Reading{tree, tree->consem, tree->schema});
  }
  return readings;
}

namespace {

std::vector<NodePtr> expand_node(const NodePtr& node) {
  if (node->is_leaf()) return {node};
  std::vector<NodePtr> out;
  for (const auto& l : expand_node(node->children[0])) {
    for (const auto& r : expand_node(node->children[1])) {
      for (Relation rel : node->relations.members()) {
        auto copy = *node;
        copy.relations = {rel};
        copy.children = {l, r};
        out.push_back(std::make_shared<const DiscourseNode>(std::move(copy)));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Reading> expand_relations(const std::vector<Reading>& readings) {
  std::vector<Reading> out;
  int id = 0;
  for (const auto& reading : readings) {
    for (const auto& tree : expand_node(reading.tree)) {
      auto root = *tree;
      root.reading_id = ++id;
      auto ptr = std::make_shared<const DiscourseNode>(std::move(root));
      out.push_back(Reading{ptr, ptr->consem, ptr->schema});
    }
  }
  return out;
}

std::vector<CascadeReading> resolve_cascade(const TypeHierarchy& h,
                                            const std::vector<DCU>& dcus,
                                            const SearchOptions& options) {
  if (dcus.empty()) throw Error("a cascade needs at least one clause");

  std::vector<ResultSet> per_clause{{dcus.front().sem}};
  for (std::size_t i = 1; i < dcus.size(); ++i) {
    std::map<std::string, FeatureStructure> antecedents;
    for (const auto& earlier : per_clause) {
      for (const auto& fs : earlier) antecedents.emplace(print_avm(h, fs), fs);
    }
    std::map<std::string, FeatureStructure> resolved;
    for (const auto& [text, antecedent] : antecedents) {
      for (auto& r : punion(h, dcus[i].sem, antecedent, options)) {
        resolved.emplace(print_avm(h, r), std::move(r));
      }
    }
    ResultSet results;
    for (auto& [text, fs] : resolved) results.push_back(std::move(fs));
    per_clause.push_back(std::move(results));
  }

  std::vector<CascadeReading> readings{{}};
  for (const auto& choices : per_clause) {
    std::vector<CascadeReading> next;
    for (const auto& partial : readings) {
      for (const auto& fs : choices) {
        auto extended = partial;
        extended.consems.push_back(fs);
        next.push_back(std::move(extended));
      }
    }
    readings = std::move(next);
  }
  return readings;
}

}  // namespace tfsdisc
