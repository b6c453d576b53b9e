#pragma once

// Lexicon and discourse files.
//
// Lexicon: one statement per entry, `#` comments.
//
//     hannah_likes_beetles "Hannah likes beetles." := [like AGENT:[hannah] PATIENT:[beetle]] .
//
// Discourse:
//
//     use hierarchy events.hier;
//     use lexicon clauses.lex;
//     hannah_likes_ants
//     thomas_likes_bees
//     jessy_hates_them @but
//
// Relative paths in `use` lines are resolved against the discourse file's
// directory by load_discourse_file.

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tfsdisc/discourse.hpp"
#include "tfsdisc/feature_structure.hpp"

namespace tfsdisc {

struct LexiconEntry {
  std::string key;
  std::string gloss;
  FeatureStructure sem;
};

class Lexicon {
 public:
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const LexiconEntry* find(std::string_view key) const;
  const std::map<std::string, LexiconEntry, std::less<>>& entries() const { return entries_; }

  void add(LexiconEntry entry);

 private:
  std::map<std::string, LexiconEntry, std::less<>> entries_;
};

/// Parses and type-checks every entry. Errors from all entries are collected
/// into one ParseError whose message lists each failing key.
Lexicon load_lexicon(const TypeHierarchy& h, std::string_view text);

struct DiscourseClause {
  std::string key;
  Connective connective = Connective::kNone;
  std::size_t line = 0;
};

struct DiscourseFile {
  std::filesystem::path hierarchy;
  std::filesystem::path lexicon;
  std::vector<DiscourseClause> clauses;
};

/// Syntactic validation only; keys are checked by resolve_clauses.
DiscourseFile load_discourse(std::string_view text);

/// Reads a discourse file and resolves its `use` paths relative to it.
DiscourseFile load_discourse_file(const std::filesystem::path& path);

/// Looks every clause up in the lexicon. Throws Error naming dangling keys.
std::vector<DCU> resolve_clauses(const DiscourseFile& discourse, const Lexicon& lexicon);

/// Whole-file read; throws Error when the file cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace tfsdisc
