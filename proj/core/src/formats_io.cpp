#include "tfsdisc/formats_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "avm_parser.hpp"
#include "lexer.hpp"
#include "tfsdisc/error.hpp"

namespace tfsdisc {

using detail::Lexer;
using detail::Tok;

const LexiconEntry* Lexicon::find(std::string_view key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

void Lexicon::add(LexiconEntry entry) {
  auto key = entry.key;
  if (!entries_.emplace(key, std::move(entry)).second) {
    throw Error("duplicate lexicon key '" + key + "'");
  }
}

Lexicon load_lexicon(const TypeHierarchy& h, std::string_view text) {
  Lexicon lexicon;
  std::vector<std::string> errors;
  std::size_t first_line = 0, first_column = 0;
  auto note = [&](const std::string& key, const ParseError& e) {
    if (errors.empty()) {
      first_line = e.line();
      first_column = e.column();
    }
    errors.push_back((key.empty() ? std::string("<entry>") : key) + ": " + e.what());
  };

  Lexer lex(text);
  while (!lex.at(Tok::kEnd)) {
    std::string key;
    try {
      auto key_tok = lex.expect(Tok::kIdent, "entry key");
      key = key_tok.text;
      std::string gloss;
      if (lex.at(Tok::kString)) gloss = lex.next().text;
      lex.expect(Tok::kAssign, "':='");
      auto sem = detail::parse_avm_from(h, lex);
      lex.expect(Tok::kDot, "'.' ending the entry");
      if (lexicon.find(key)) {
        Lexer::fail_at(key_tok, "duplicate lexicon key '" + key + "'");
      }
      lexicon.add({key, std::move(gloss), std::move(sem)});
    } catch (const ParseError& e) {
      note(key, e);
      // Resynchronize at the end of the statement.
      try {
        while (!lex.at(Tok::kEnd) && !lex.at(Tok::kDot)) lex.next();
        if (lex.at(Tok::kDot)) lex.next();
      } catch (const ParseError& fatal) {
        note(key, fatal);
        break;
      }
    }
  }
  if (!errors.empty()) {
    std::string msg = "lexicon has " + std::to_string(errors.size()) + " bad entr" +
                      (errors.size() == 1 ? "y" : "ies");
    for (const auto& e : errors) msg += "\n  " + e;
    throw ParseError(msg, first_line, first_column);
  }
  return lexicon;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_key(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  }
  return true;
}

}  // namespace

DiscourseFile load_discourse(std::string_view text) {
  DiscourseFile out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const auto hash = raw.find('#');
    std::string_view line = trim(raw.substr(0, hash));
    if (line.empty()) continue;
    const std::size_t col = static_cast<std::size_t>(line.data() - raw.data()) + 1;

    if (line.substr(0, 4) == "use " || line == "use") {
      std::string_view rest = trim(line.substr(3));
      if (rest.empty() || rest.back() != ';') {
        throw ParseError("'use' line must end with ';'", line_no, col);
      }
      rest = trim(rest.substr(0, rest.size() - 1));
      const auto space = rest.find_first_of(" \t");
      if (space == std::string_view::npos) {
        throw ParseError("expected 'use hierarchy <path>;' or 'use lexicon <path>;'", line_no,
                         col);
      }
      const std::string_view what = rest.substr(0, space);
      std::string_view path = trim(rest.substr(space));
      if (path.size() >= 2 && path.front() == '"' && path.back() == '"') {
        path = path.substr(1, path.size() - 2);
      }
      if (path.empty()) throw ParseError("missing path", line_no, col);
      if (what == "hierarchy") {
        out.hierarchy = std::string(path);
      } else if (what == "lexicon") {
        out.lexicon = std::string(path);
      } else {
        throw ParseError("unknown 'use' target '" + std::string(what) + "'", line_no, col);
      }
      continue;
    }

    DiscourseClause clause;
    clause.line = line_no;
    const auto at = line.find('@');
    const std::string_view key = trim(line.substr(0, at));
    if (!valid_key(key)) {
      throw ParseError("invalid clause key '" + std::string(key) + "'", line_no, col);
    }
    clause.key = std::string(key);
    if (at != std::string_view::npos) {
      const std::string_view conn = trim(line.substr(at + 1));
      auto c = parse_connective(conn);
      if (!c) {
        throw ParseError("unknown connective '" + std::string(conn) +
                             "' (expected and, or, but or none)",
                         line_no, col + at);
      }
      clause.connective = *c;
    }
    if (out.clauses.empty() && clause.connective != Connective::kNone) {
      throw ParseError("the first clause cannot carry a connective", line_no, col);
    }
    out.clauses.push_back(std::move(clause));
  }
  if (out.clauses.empty()) throw ParseError("discourse has no clauses", line_no, 1);
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

DiscourseFile load_discourse_file(const std::filesystem::path& path) {
  DiscourseFile d;
  try {
    d = load_discourse(read_file(path));
  } catch (const ParseError& e) {
    throw Error(path.string() + ":" + e.what());
  }
  const auto dir = path.parent_path();
  if (!d.hierarchy.empty() && d.hierarchy.is_relative()) d.hierarchy = dir / d.hierarchy;
  if (!d.lexicon.empty() && d.lexicon.is_relative()) d.lexicon = dir / d.lexicon;
  return d;
}

std::vector<DCU> resolve_clauses(const DiscourseFile& discourse, const Lexicon& lexicon) {
  std::vector<DCU> out;
  std::string missing;
  for (const auto& clause : discourse.clauses) {
    const auto* entry = lexicon.find(clause.key);
    if (!entry) {
      missing += (missing.empty() ? "" : ", ") + clause.key + " (line " +
                 std::to_string(clause.line) + ")";
      continue;
    }
    out.push_back(DCU{clause.key, entry->sem, clause.connective});
  }
  if (!missing.empty()) throw Error("unknown clause keys: " + missing);
  return out;
}

}  // namespace tfsdisc
