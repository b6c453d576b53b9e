#pragma once

// Randomized algebraic laws, shared by the property tests and the acceptance
// runner. Each law draws `cases` inputs from a seeded MicroGen.

#include <cstdint>
#include <string>
#include <vector>

#include "tfsdisc/type_system.hpp"

namespace tfsdisc::testing {

struct LawReport {
  std::string name;
  int cases = 0;
  int failed = 0;
  std::vector<std::string> examples;  // first few failures

  bool ok() const { return failed == 0 && cases > 0; }
  std::string summary() const;
};

LawReport unify_laws(const TypeHierarchy& h, std::uint64_t seed, int cases);
LawReport subsumption_laws(const TypeHierarchy& h, std::uint64_t seed, int cases);
LawReport decompose_laws(const TypeHierarchy& h, std::uint64_t seed, int cases);
LawReport punion_contracts(const TypeHierarchy& h, std::uint64_t seed, int cases);
LawReport punion_brute_force(const TypeHierarchy& h, std::uint64_t seed, int cases);
LawReport punion_via_mscd(const TypeHierarchy& h, std::uint64_t seed, int cases);
LawReport mscd_contracts(const TypeHierarchy& h, std::uint64_t seed, int cases);
LawReport generalize_laws(const TypeHierarchy& h, std::uint64_t seed, int cases);

/// Distinct structures among `cases` draws; guards against a degenerate
/// generator.
std::size_t generator_variety(const TypeHierarchy& h, std::uint64_t seed, int cases);

}  // namespace tfsdisc::testing
