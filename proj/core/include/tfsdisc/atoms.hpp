#pragma once

// Atomic constraints: the minimal pieces a feature structure decomposes into.
//
//   (*/like)                              root type
//   (PATIENT/brother)|(BROTHER-OF/jessy)  typed path (intermediate types are
//                                         those the path itself implies)
//   AGENT = PATIENT|BROTHER-OF            path equation
//
// Typing atoms are per path, not per node: a shared node with an informative
// type yields one typed-path atom for each path reaching it, so dropping an
// equation can keep the value on either path independently.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tfsdisc/feature_structure.hpp"

namespace tfsdisc {

struct AtomicConstraint {
  enum class Kind : std::uint8_t { kRootType, kPathType, kPathEq };

  Kind kind = Kind::kRootType;
  Path path;   // typed path, or left side of an equation
  TypeId type;  // root or terminus type; unused for equations
  Path other;  // right side of an equation

  static AtomicConstraint root_type(TypeId t) { return {Kind::kRootType, {}, t, {}}; }
  static AtomicConstraint path_type(Path p, TypeId t) {
    return {Kind::kPathType, std::move(p), t, {}};
  }
  /// Orders the two sides so the lexicographically smaller path is on the left.
  static AtomicConstraint path_eq(Path a, Path b);

  /// Root types first, then typed paths by path, then equations by left path.
  friend auto operator<=>(const AtomicConstraint&, const AtomicConstraint&) = default;
  friend bool operator==(const AtomicConstraint&, const AtomicConstraint&) = default;
};

using AtomSet = std::vector<AtomicConstraint>;  // sorted, duplicate-free

/// Canonical atom set of a structure. The root contributes an atom when its
/// type is more specific than the hierarchy root; a path contributes a typed
/// atom when its type is more specific than its arc range together with the
/// introducing types of every longer atom running through it; every node
/// reached by several paths contributes one equation per non-least path.
AtomSet decompose(const TypeHierarchy& h, const FeatureStructure& fs);

/// Unification of the atoms' expansions, starting from the most general
/// structure of the hierarchy root. nullopt when the atoms are inconsistent.
std::optional<FeatureStructure> reassemble(const TypeHierarchy& h,
                                           const std::vector<AtomicConstraint>& atoms);

/// The structure a single atom stands for.
std::optional<FeatureStructure> expand(const TypeHierarchy& h, const AtomicConstraint& atom);

/// Atom in the notation shown at the top of this header.
std::string print_atom(const TypeHierarchy& h, const AtomicConstraint& atom);

/// Parses a sequence of atoms in print_atom notation, separated by
/// whitespace. Intermediate chain types must match the types the path
/// implies. Throws ParseError.
AtomSet parse_atoms(const TypeHierarchy& h, std::string_view text);

}  // namespace tfsdisc
