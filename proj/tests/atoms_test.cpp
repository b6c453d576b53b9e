#include "tfsdisc/atoms.hpp"

#include <gtest/gtest.h>

#include "support/events.hpp"
#include "tfsdisc/error.hpp"

namespace tfsdisc {
namespace {

using testing::avm;
using testing::fixture;
using testing::fixture_text;
using testing::events;
using testing::print;
using testing::prints;

using Strings = std::vector<std::string>;

TEST(Decompose, DefaultInputOfStrictSloppyExample) {
  EXPECT_EQ(prints(decompose(events(), fixture("jessy_likes_brother.avm"))),
            (Strings{"(*/like)", "(AGENT/jessy)", "(PATIENT/brother)|(BROTHER-OF/jessy)",
                     "AGENT = PATIENT|BROTHER-OF"}));
}

TEST(Decompose, StrictInput) {
  EXPECT_EQ(prints(decompose(events(), fixture("so_does_hannah.avm"))),
            (Strings{"(*/agentive)", "(AGENT/hannah)"}));
}

TEST(Decompose, SimpleClause) {
  EXPECT_EQ(prints(decompose(events(), fixture("hannah_likes_beetles.avm"))),
            (Strings{"(*/like)", "(AGENT/hannah)", "(PATIENT/beetle)"}));
  EXPECT_EQ(prints(decompose(events(), fixture("hannah_likes_ants.avm"))),
            (Strings{"(*/like)", "(AGENT/hannah)", "(PATIENT/ant)"}));
  EXPECT_EQ(prints(decompose(events(), fixture("jessy_laughs.avm"))),
            (Strings{"(*/laugh)", "(AGENT/jessy)"}));
}

TEST(Decompose, MatchesAtomFixtures) {
  EXPECT_EQ(decompose(events(), fixture("jessy_likes_brother.avm")),
            parse_atoms(events(), fixture_text("jessy_likes_brother.atoms")));
  EXPECT_EQ(decompose(events(), fixture("hannah_likes_ants.avm")),
            parse_atoms(events(), fixture_text("hannah_likes_ants.atoms")));
  EXPECT_EQ(decompose(events(), fixture("jessy_laughs.avm")),
            parse_atoms(events(), fixture_text("jessy_laughs.atoms")));
}

TEST(Decompose, UninformativeStructures) {
  EXPECT_TRUE(decompose(events(), mgsat(events(), events().root())).empty());
  // Range-typed values carry no path atoms.
  EXPECT_EQ(prints(decompose(events(), fixture("atom_root.avm"))), Strings{"(*/like)"});
  EXPECT_EQ(prints(decompose(events(), fixture("gen_like_hate.avm"))), Strings{"(*/emot_att)"});
  EXPECT_EQ(prints(decompose(events(), fixture("mscd_like_hate.avm"))),
            (Strings{"(*/emot_att)", "(PATIENT/beetle)"}));
}

TEST(Decompose, TypeImpliedByLongerPathIsDropped) {
  // brother is implied by BROTHER-OF below it; the root type is always listed,
  // as (*/agentive) is next to (AGENT/hannah).
  EXPECT_EQ(prints(decompose(events(), avm("[plus-patient PATIENT:[brother BROTHER-OF:[jessy]]]"))),
            (Strings{"(*/plus-patient)", "(PATIENT/brother)|(BROTHER-OF/jessy)"}));
}

TEST(Expand, AtomsOfDefaultInput) {
  const auto atoms = decompose(events(), fixture("jessy_likes_brother.avm"));
  ASSERT_EQ(atoms.size(), 4u);
  // Sorted order: root type, AGENT, PATIENT path, equation.
  EXPECT_EQ(expand(events(), atoms[0]), fixture("atom_root.avm"));
  EXPECT_EQ(expand(events(), atoms[1]), fixture("atom_agent.avm"));
  EXPECT_EQ(expand(events(), atoms[2]), fixture("atom_patient.avm"));
  EXPECT_EQ(expand(events(), atoms[3]), fixture("atom_equation.avm"));
}

TEST(Reassemble, RoundTrip) {
  const auto atoms = parse_atoms(events(), fixture_text("jessy_likes_brother.atoms"));
  EXPECT_EQ(reassemble(events(), atoms), fixture("jessy_likes_brother.avm"));
  EXPECT_EQ(reassemble(events(), {}), mgsat(events(), events().root()));
}

TEST(Reassemble, StrictPlusD3D4GivesSloppyReading) {
  auto atoms = parse_atoms(events(), "AGENT = PATIENT|BROTHER-OF (*/like) (*/agentive) (AGENT/hannah)");
  EXPECT_EQ(reassemble(events(), atoms), fixture("sloppy_reading.avm"));
}

TEST(Reassemble, InconsistentAtoms) {
  auto atoms = parse_atoms(events(), "(AGENT/hannah) (AGENT/jessy)");
  EXPECT_FALSE(reassemble(events(), atoms).has_value());
}

TEST(ParseAtoms, Errors) {
  EXPECT_THROW(parse_atoms(events(), "(AGENT/nobody)"), ParseError);
  EXPECT_THROW(parse_atoms(events(), "(COLOR/red)"), ParseError);
  EXPECT_THROW(parse_atoms(events(), "(PATIENT/human)|(BROTHER-OF/jessy)"), ParseError);
  EXPECT_THROW(parse_atoms(events(), "AGENT = "), ParseError);
  EXPECT_THROW(parse_atoms(events(), "(*/like"), ParseError);
}

TEST(PathEq, OrdersSides) {
  const auto a = *events().find_feature("AGENT");
  const auto p = *events().find_feature("PATIENT");
  const auto eq = AtomicConstraint::path_eq(Path{{p}}, Path{{a}});
  EXPECT_EQ(eq.path, Path{{a}});
  EXPECT_EQ(eq.other, Path{{p}});
}

}  // namespace
}  // namespace tfsdisc
