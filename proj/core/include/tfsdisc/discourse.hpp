#pragma once

// Discourse grammar over clause units.
//
// Adjacent spans combine into binary list or contrast nodes. Combining
// resolves the right clause against the left one by priority union (the
// clause is strict, its left context defeasible) and records the common
// ground of the daughters as the node's schema, computed by generalization
// over the resolved forms.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tfsdisc/feature_structure.hpp"
#include "tfsdisc/nonmono_ops.hpp"

namespace tfsdisc {

enum class Connective : std::uint8_t { kNone, kAnd, kOr, kBut };
enum class Relation : std::uint8_t { kLeaf, kList, kContrast };

const char* to_string(Connective c);
const char* to_string(Relation r);
std::optional<Connective> parse_connective(std::string_view text);

/// Set of list/contrast relations, as a bit mask over Relation values.
class RelationSet {
 public:
  RelationSet() = default;
  RelationSet(std::initializer_list<Relation> rels) {
    for (Relation r : rels) insert(r);
  }
  void insert(Relation r) { bits_ |= bit(r); }
  bool contains(Relation r) const { return (bits_ & bit(r)) != 0; }
  bool empty() const { return bits_ == 0; }
  std::vector<Relation> members() const;
  /// First member in enum order (list before contrast).
  Relation primary() const;
  friend bool operator==(RelationSet, RelationSet) = default;

 private:
  static std::uint8_t bit(Relation r) { return static_cast<std::uint8_t>(1u << static_cast<int>(r)); }
  std::uint8_t bits_ = 0;
};

/// A clause: key into the lexicon, pre-resolved semantics, and the
/// connective attaching it to its left context.
struct DCU {
  std::string id;
  FeatureStructure sem;
  Connective connective = Connective::kNone;
};

struct DiscourseNode;
using NodePtr = std::shared_ptr<const DiscourseNode>;

struct DiscourseNode {
  /// kLeaf for clauses; otherwise every relation licensed for this
  /// combination that yields the same content.
  RelationSet relations;
  std::vector<NodePtr> children;  // empty for leaves, two otherwise
  std::size_t first = 0;          // clause span, inclusive
  std::size_t last = 0;
  std::string clause;                    // leaves only
  std::optional<FeatureStructure> sem;   // leaves only: unresolved semantics
  FeatureStructure consem;  // leaves: resolved in context; nodes: rightmost clause's
  std::optional<FeatureStructure> schema;  // common ground; absent on leaves
  int reading_id = 0;

  bool is_leaf() const { return children.empty(); }
  Relation relation() const { return is_leaf() ? Relation::kLeaf : relations.primary(); }
};

struct Reading {
  NodePtr tree;
  FeatureStructure root_consem;
  std::optional<FeatureStructure> root_schema;
};

/// How a node's schema is computed.
enum class SchemaMode : std::uint8_t {
  kGeneralization,  // generalize the daughters' resolved common ground
  kMscd,            // most specific common denominator of left ground and right sem
};

/// Decides whether a schema is informative enough to license a node.
using CharacteristicPredicate =
    std::function<bool(const TypeHierarchy&, const FeatureStructure&)>;

/// Default policy: the schema's root type is more specific than the
/// hierarchy root and at least one path carries an informative type.
bool characteristic_gen(const TypeHierarchy& h, const FeatureStructure& schema);

/// Always true; reproduces combinations without any informativeness test.
bool permissive_characteristic_gen(const TypeHierarchy& h, const FeatureStructure& schema);

struct DiscourseOptions {
  SchemaMode schema_mode = SchemaMode::kGeneralization;
  CharacteristicPredicate predicate = characteristic_gen;
  SearchOptions search;
};

/// and/or license list, but licenses contrast, an absent connective both.
RelationSet connective_relation(Connective c);

struct Combination {
  FeatureStructure consem;
  FeatureStructure schema;
};

/// Combines a left constituent with a following clause. One combination per
/// priority-union result, filtered by the characteristic predicate.
std::vector<Combination> combine(const TypeHierarchy& h, Relation rel,
                                 const DiscourseNode& left, const FeatureStructure& right_sem,
                                 const DiscourseOptions& options = {});

/// Combines a left constituent with an already-built right constituent. The
/// right side's clauses are resolved already; the schema generalizes the
/// left ground with the right schema.
std::vector<Combination> combine(const TypeHierarchy& h, Relation rel,
                                 const DiscourseNode& left, const DiscourseNode& right,
                                 const DiscourseOptions& options = {});

NodePtr make_leaf(const DCU& dcu, std::size_t position);

/// All readings of a clause sequence: every binary bracketing whose nodes
/// combine under a relation the right daughter's leading connective
/// licenses, one reading per distinct resolution. Readings that differ only
/// in relation labels are merged into one tree whose nodes list every
/// licensed relation.
std::vector<Reading> parse_discourse(const TypeHierarchy& h, const std::vector<DCU>& dcus,
                                     const DiscourseOptions& options = {});

/// Splits merged relation labels so each tree carries one relation per node.
std::vector<Reading> expand_relations(const std::vector<Reading>& readings);

/// Bracketed shape with relations and clause ids, e.g.
/// `list(a, contrast(b, c))`. Merged labels print as `list|contrast`.
std::string shape(const DiscourseNode& node);

/// Readings of a chain of elliptical clauses. Each clause after the first is
/// resolved against every resolved form of every earlier clause; a reading
/// picks one resolved form per clause.
struct CascadeReading {
  std::vector<FeatureStructure> consems;  // one per clause, in order
};

std::vector<CascadeReading> resolve_cascade(const TypeHierarchy& h,
                                            const std::vector<DCU>& dcus,
                                            const SearchOptions& options = {});

}  // namespace tfsdisc
