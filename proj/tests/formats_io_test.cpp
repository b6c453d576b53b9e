#include "tfsdisc/formats_io.hpp"

#include <gtest/gtest.h>

#include "support/events.hpp"
#include "tfsdisc/error.hpp"

namespace tfsdisc {
namespace {

using testing::fixture;
using testing::events;
using testing::events_lexicon;

TEST(Lexicon, ClauseFixture) {
  const auto& lex = events_lexicon();
  EXPECT_GE(lex.size(), 10u);
  const auto* e = lex.find("hannah_likes_beetles");
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->gloss, "Hannah likes beetles.");
  EXPECT_EQ(e->sem, fixture("hannah_likes_beetles.avm"));
  EXPECT_EQ(lex.find("jessy_likes_her_brother")->sem, fixture("jessy_likes_brother.avm"));
  EXPECT_EQ(lex.find("nope"), nullptr);
}

TEST(Lexicon, EmptyAndCommentOnly) {
  EXPECT_TRUE(load_lexicon(events(), "").empty());
  EXPECT_TRUE(load_lexicon(events(), "# nothing here\n").empty());
}

TEST(Lexicon, GlossIsOptional) {
  auto lex = load_lexicon(events(), "x := [ant] .");
  ASSERT_EQ(lex.size(), 1u);
  EXPECT_EQ(lex.find("x")->gloss, "");
}

TEST(Lexicon, ErrorsAreAggregatedWithKeys) {
  const char* text =
      "good := [ant] .\n"
      "bad_type \"x\" := [like AGENT:[nobody]] .\n"
      "bad_feature := [like COLOR:[ant]] .\n"
      "also_good := [bee] .\n";
  try {
    load_lexicon(events(), text);
    FAIL();
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("2 bad entries"), std::string::npos) << msg;
    EXPECT_NE(msg.find("bad_type"), std::string::npos) << msg;
    EXPECT_NE(msg.find("nobody"), std::string::npos) << msg;
    EXPECT_NE(msg.find("bad_feature"), std::string::npos) << msg;
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Lexicon, DuplicateKey) {
  EXPECT_THROW(load_lexicon(events(), "a := [ant] . a := [bee] ."), ParseError);
}

TEST(Lexicon, MissingTerminator) {
  EXPECT_THROW(load_lexicon(events(), "a := [ant]"), ParseError);
  EXPECT_THROW(load_lexicon(events(), "a [ant] ."), ParseError);
}

TEST(Discourse, Clauses) {
  auto d = load_discourse(testing::fixture_text("vp_ellipsis.disc"));
  ASSERT_EQ(d.clauses.size(), 2u);
  EXPECT_EQ(d.clauses[0].key, "hannah_likes_beetles");
  EXPECT_EQ(d.clauses[1].key, "so_does_thomas");
  EXPECT_EQ(d.clauses[1].connective, Connective::kNone);
  EXPECT_EQ(d.hierarchy, "events.hier");
  EXPECT_EQ(d.lexicon, "clauses.lex");

  d = load_discourse(testing::fixture_text("ants_bees.disc"));
  ASSERT_EQ(d.clauses.size(), 3u);
  EXPECT_EQ(d.clauses[2].key, "jessy_hates_them");
  EXPECT_EQ(d.clauses[2].connective, Connective::kBut);
  EXPECT_EQ(d.clauses[2].line, 5u);
}

TEST(Discourse, QuotedPathsAndComments) {
  auto d = load_discourse("use hierarchy \"a b.hier\"; # types\n\n  k1 # first\nk2 @and\n");
  EXPECT_EQ(d.hierarchy, "a b.hier");
  ASSERT_EQ(d.clauses.size(), 2u);
  EXPECT_EQ(d.clauses[1].connective, Connective::kAnd);
}

TEST(Discourse, Errors) {
  EXPECT_THROW(load_discourse(""), ParseError);
  EXPECT_THROW(load_discourse("use hierarchy x.hier;\n"), ParseError);
  EXPECT_THROW(load_discourse("a\nb @because\n"), ParseError);
  EXPECT_THROW(load_discourse("a @and\n"), ParseError);
  EXPECT_THROW(load_discourse("use grammar x;\na\n"), ParseError);
  EXPECT_THROW(load_discourse("use lexicon x\na\n"), ParseError);
  EXPECT_THROW(load_discourse("a b\n"), ParseError);
  try {
    load_discourse("a\n\nb @so\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Discourse, FileResolvesRelativePaths) {
  auto d = load_discourse_file(testing::fixture_path("strict_sloppy.disc"));
  EXPECT_EQ(d.hierarchy, std::filesystem::path(testing::fixture_path("events.hier")));
  EXPECT_THROW(load_discourse_file(testing::fixture_path("missing.disc")), Error);
}

TEST(Discourse, DanglingKeysReportedAtResolve) {
  auto d = load_discourse("hannah_likes_beetles\nno_such_clause\n");
  try {
    resolve_clauses(d, events_lexicon());
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("no_such_clause (line 2)"), std::string::npos);
  }
}

TEST(ReadFile, MissingFile) { EXPECT_THROW(read_file("/nonexistent/file"), Error); }

}  // namespace
}  // namespace tfsdisc
