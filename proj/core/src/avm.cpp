#include <map>

#include "avm_parser.hpp"
#include "tfsdisc/error.hpp"
#include "tfsdisc/feature_structure.hpp"
#include "workspace.hpp"

namespace tfsdisc {

namespace {

using detail::Lexer;
using detail::Tok;
using detail::Workspace;

class AvmParser {
 public:
  AvmParser(const TypeHierarchy& h, Lexer& lex, Workspace& ws) : h_(h), lex_(lex), ws_(ws) {}

  Workspace::Index parse() {
    std::optional<std::string> tag;
    if (lex_.at(Tok::kTag)) {
      auto tok = lex_.next();
      if (tok.text.empty()) Lexer::fail_at(tok, "tag '#' must be followed by digits");
      tag = tok.text;
      if (!lex_.at(Tok::kLBracket)) {
        auto it = tags_.find(*tag);
        if (it == tags_.end()) {
          Lexer::fail_at(tok, "tag #" + *tag + " used before its definition");
        }
        return it->second;
      }
    }
    lex_.expect(Tok::kLBracket, "'[' or tag");
    auto type_tok = lex_.expect(Tok::kIdent, "type name");
    auto type = h_.find_type(type_tok.text);
    if (!type) Lexer::fail_at(type_tok, "unknown type '" + type_tok.text + "'");
    const auto node = ws_.add_mgsat(*type);
    if (tag) {
      auto [it, inserted] = tags_.emplace(*tag, node);
      if (!inserted && !ws_.merge(it->second, node)) {
        Lexer::fail_at(type_tok, "inconsistent redefinition of tag #" + *tag);
      }
    }
    while (!lex_.at(Tok::kRBracket)) {
      auto feat_tok = lex_.expect(Tok::kIdent, "feature name or ']'");
      auto feat = h_.find_feature(feat_tok.text);
      if (!feat) Lexer::fail_at(feat_tok, "unknown feature '" + feat_tok.text + "'");
      lex_.expect(Tok::kColon, "':'");
      const auto value = parse();
      auto slot = ws_.walk(node, *feat);
      if (!slot) {
        Lexer::fail_at(feat_tok, "feature " + h_.name(*feat) + " is not appropriate for type '" +
                                     type_tok.text + "'");
      }
      if (!ws_.merge(*slot, value)) {
        Lexer::fail_at(feat_tok, "value of " + h_.name(*feat) + " clashes with its range or " +
                                     "with other information");
      }
    }
    lex_.next();
    return node;
  }

 private:
  const TypeHierarchy& h_;
  Lexer& lex_;
  Workspace& ws_;
  std::map<std::string, Workspace::Index> tags_;
};

}  // namespace

namespace detail {

FeatureStructure parse_avm_from(const TypeHierarchy& h, Lexer& lex) {
  Workspace ws(h);
  const auto start = lex.peek();
  AvmParser parser(h, lex, ws);
  const auto root = parser.parse();
  auto fs = ws.extract(root);
  if (!fs) Lexer::fail_at(start, "structure is cyclic");
  return *fs;
}

}  // namespace detail

FeatureStructure parse_avm(const TypeHierarchy& h, std::string_view text) {
  Lexer lex(text);
  auto fs = detail::parse_avm_from(h, lex);
  if (!lex.at(Tok::kEnd)) lex.fail("unexpected text after structure");
  return fs;
}

std::string print_avm(const TypeHierarchy& h, const FeatureStructure& fs) {
  const auto indeg = fs.in_degrees();
  std::vector<int> tag(fs.size(), 0);
  int next_tag = 0;
  std::string out;
  auto visit = [&](auto& self, NodeId n) -> void {
    if (indeg[n] >= 2) {
      if (tag[n]) {
        out += '#' + std::to_string(tag[n]);
        return;
      }
      tag[n] = ++next_tag;
      out += '#' + std::to_string(tag[n]);
    }
    out += '[';
    out += h.name(fs.type(n));
    for (const auto& arc : fs.node(n).arcs) {
      out += ' ';
      out += h.name(arc.feature);
      out += ':';
      self(self, arc.target);
    }
    out += ']';
  };
  visit(visit, FeatureStructure::kRoot);
  return out;
}

}  // namespace tfsdisc
