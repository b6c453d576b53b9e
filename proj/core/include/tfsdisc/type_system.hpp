#pragma once

// Type hierarchy with appropriateness conditions.
//
// A hierarchy is a finite partial order of types with a unique most general
// type (the root). Every feature is introduced by exactly one type and is
// appropriate for that type and all of its subtypes, with a fixed range type.
// Compilation precomputes, for every pair of types, the most specific common
// supertype (generalization) and the most general common subtype (join), and
// rejects hierarchies where either is not unique.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tfsdisc {

struct TypeId {
  std::uint32_t value = 0;
  friend auto operator<=>(TypeId, TypeId) = default;
};

struct FeatureId {
  std::uint32_t value = 0;
  friend auto operator<=>(FeatureId, FeatureId) = default;
};

/// One declared type: its immediate supertypes and the features it introduces.
struct TypeDecl {
  struct Intro {
    std::string feature;
    std::string range;
  };

  std::string name;
  std::vector<std::string> parents;
  std::vector<Intro> intro;
};

/// A feature appropriate for some type, with its value range.
struct Appropriate {
  FeatureId feature;
  TypeId range;
};

class TypeHierarchy {
 public:
  /// Validates and compiles a declaration set. The result does not depend on
  /// declaration order. Throws HierarchyError naming the offending types or
  /// features.
  static TypeHierarchy compile(std::vector<TypeDecl> decls);

  std::size_t type_count() const { return type_names_.size(); }
  std::size_t feature_count() const { return feature_names_.size(); }

  TypeId root() const { return root_; }

  const std::string& name(TypeId t) const { return type_names_[t.value]; }
  const std::string& name(FeatureId f) const { return feature_names_[f.value]; }

  std::optional<TypeId> find_type(std::string_view name) const;
  /// Feature lookup is case-insensitive; names are stored upper-cased.
  std::optional<FeatureId> find_feature(std::string_view name) const;

  /// True iff `specific` is `general` or one of its subtypes.
  bool subsumes(TypeId general, TypeId specific) const;

  /// Most specific type subsuming both (always defined).
  TypeId gen(TypeId a, TypeId b) const { return TypeId{gen_[index(a, b)]}; }

  /// Most general common subtype, or nullopt when the types are inconsistent.
  std::optional<TypeId> join(TypeId a, TypeId b) const {
    const std::uint32_t j = join_[index(a, b)];
    if (j == kNoType) return std::nullopt;
    return TypeId{j};
  }

  /// All features appropriate for `t` (inherited ones included), sorted by
  /// feature name.
  std::span<const Appropriate> approp(TypeId t) const { return approp_[t.value]; }

  std::optional<TypeId> range(TypeId t, FeatureId f) const;

  /// The unique type introducing `f`.
  TypeId intro(FeatureId f) const { return intro_[f.value]; }

  /// Proper and improper supertypes of `t`, most specific first.
  std::vector<TypeId> supertypes(TypeId t) const;

  /// Number of unordered type pairs in the generalization table.
  std::size_t gen_table_size() const {
    return type_count() * (type_count() + 1) / 2;
  }

  /// Prints `gen(a, b) = c` for every a <= b, sorted by (a, b) name.
  void dump_gen_table(std::ostream& out) const;

 private:
  static constexpr std::uint32_t kNoType = 0xffffffffu;

  std::size_t index(TypeId a, TypeId b) const {
    return static_cast<std::size_t>(a.value) * type_count() + b.value;
  }

  std::vector<std::string> type_names_;
  std::vector<std::string> feature_names_;
  TypeId root_;
  std::vector<char> below_;  // below_[index(a,b)] != 0 iff b subsumes a
  std::vector<std::uint32_t> gen_;
  std::vector<std::uint32_t> join_;
  std::vector<std::vector<Appropriate>> approp_;
  std::vector<TypeId> intro_;
};

/// Parses the hierarchy language:
///
///     # comment
///     bot sub [event, entity].
///     agentive intro [agent:human].
///
/// Every identifier mentioned in a `sub` list or on the left of a clause is a
/// declared type. Throws ParseError.
std::vector<TypeDecl> parse_type_decls(std::string_view text);

/// parse_type_decls followed by compile.
TypeHierarchy load_hierarchy(std::string_view text);

}  // namespace tfsdisc
