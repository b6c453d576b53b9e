#include "tfsdisc/type_system.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <ostream>
#include <set>

#include "lexer.hpp"
#include "tfsdisc/error.hpp"

namespace tfsdisc {

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

bool valid_type_name(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::islower(static_cast<unsigned char>(c)) ||
           std::isdigit(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  });
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

}  // namespace

TypeHierarchy TypeHierarchy::compile(std::vector<TypeDecl> decls) {
  std::sort(decls.begin(), decls.end(),
            [](const TypeDecl& a, const TypeDecl& b) { return a.name < b.name; });
  for (std::size_t i = 1; i < decls.size(); ++i) {
    if (decls[i].name == decls[i - 1].name) {
      throw HierarchyError("type '" + decls[i].name + "' declared twice");
    }
  }
  if (decls.empty()) throw HierarchyError("empty type hierarchy");

  TypeHierarchy h;
  const std::size_t n = decls.size();
  std::map<std::string, std::uint32_t, std::less<>> ids;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!valid_type_name(decls[i].name)) {
      throw HierarchyError("invalid type name '" + decls[i].name + "'");
    }
    h.type_names_.push_back(decls[i].name);
    ids.emplace(decls[i].name, i);
  }

  auto lookup = [&](const std::string& name, const std::string& context) {
    auto it = ids.find(name);
    if (it == ids.end()) {
      throw HierarchyError("undeclared type '" + name + "' referenced by " + context);
    }
    return it->second;
  };

  std::vector<std::vector<std::uint32_t>> parents(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::set<std::uint32_t> seen;
    for (const auto& p : decls[i].parents) {
      const auto pid = lookup(p, "type '" + decls[i].name + "'");
      if (pid == i) throw HierarchyError("type '" + decls[i].name + "' is its own parent");
      if (seen.insert(pid).second) parents[i].push_back(pid);
    }
  }

  // Cycle detection and a topological order with parents first.
  std::vector<std::uint32_t> topo;
  {
    std::vector<int> state(n, 0);
    std::vector<std::uint32_t> stack;
    std::function<void(std::uint32_t)> visit = [&](std::uint32_t t) {
      if (state[t] == 2) return;
      if (state[t] == 1) {
        std::vector<std::string> cycle;
        auto it = std::find(stack.begin(), stack.end(), t);
        for (; it != stack.end(); ++it) cycle.push_back(h.type_names_[*it]);
        cycle.push_back(h.type_names_[t]);
        std::string msg = "cycle in type order: ";
        for (std::size_t k = 0; k < cycle.size(); ++k) {
          if (k) msg += " < ";
          msg += cycle[k];
        }
        throw HierarchyError(msg);
      }
      state[t] = 1;
      stack.push_back(t);
      for (auto p : parents[t]) visit(p);
      stack.pop_back();
      state[t] = 2;
      topo.push_back(t);
    };
    for (std::uint32_t t = 0; t < n; ++t) visit(t);
  }

  std::vector<std::string> roots;
  for (std::uint32_t t = 0; t < n; ++t) {
    if (parents[t].empty()) {
      roots.push_back(h.type_names_[t]);
      h.root_ = TypeId{t};
    }
  }
  if (roots.size() != 1) {
    throw HierarchyError("hierarchy must have exactly one most general type, found: " +
                         join_names(roots));
  }

  h.below_.assign(n * n, 0);
  for (auto t : topo) {
    h.below_[t * n + t] = 1;
    for (auto p : parents[t]) {
      for (std::size_t a = 0; a < n; ++a) {
        if (h.below_[p * n + a]) h.below_[t * n + a] = 1;
      }
    }
  }

  // Generalization and join tables.
  h.gen_.assign(n * n, kNoType);
  h.join_.assign(n * n, kNoType);
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a; b < n; ++b) {
      candidates.clear();
      for (std::uint32_t c = 0; c < n; ++c) {
        if (h.below_[a * n + c] && h.below_[b * n + c]) candidates.push_back(c);
      }
      std::vector<std::uint32_t> minimal;
      for (auto c : candidates) {
        bool is_min = true;
        for (auto d : candidates) {
          if (d != c && h.below_[d * n + c]) {
            is_min = false;
            break;
          }
        }
        if (is_min) minimal.push_back(c);
      }
      if (minimal.size() != 1) {
        std::vector<std::string> names;
        for (auto c : minimal) names.push_back(h.type_names_[c]);
        throw HierarchyError("types '" + h.type_names_[a] + "' and '" + h.type_names_[b] +
                             "' have no unique generalization: " + join_names(names));
      }
      h.gen_[a * n + b] = h.gen_[b * n + a] = minimal.front();

      candidates.clear();
      for (std::uint32_t d = 0; d < n; ++d) {
        if (h.below_[d * n + a] && h.below_[d * n + b]) candidates.push_back(d);
      }
      std::vector<std::uint32_t> maximal;
      for (auto d : candidates) {
        bool is_max = true;
        for (auto e : candidates) {
          if (e != d && h.below_[d * n + e]) {
            is_max = false;
            break;
          }
        }
        if (is_max) maximal.push_back(d);
      }
      if (maximal.size() > 1) {
        std::vector<std::string> names;
        for (auto d : maximal) names.push_back(h.type_names_[d]);
        throw HierarchyError("types '" + h.type_names_[a] + "' and '" + h.type_names_[b] +
                             "' have no unique join: " + join_names(names));
      }
      if (!maximal.empty()) h.join_[a * n + b] = h.join_[b * n + a] = maximal.front();
    }
  }

  // Feature introduction.
  struct FeatureInfo {
    std::uint32_t intro;
    std::uint32_t range;
  };
  std::map<std::string, FeatureInfo> features;
  for (std::uint32_t t = 0; t < n; ++t) {
    for (const auto& in : decls[t].intro) {
      const std::string fname = upper(in.feature);
      const auto range = lookup(in.range, "feature " + fname);
      auto [it, inserted] = features.emplace(fname, FeatureInfo{t, range});
      if (!inserted) {
        if (it->second.intro == t) {
          throw HierarchyError("feature " + fname + " introduced twice by '" +
                               h.type_names_[t] + "'");
        }
        throw HierarchyError("feature " + fname + " introduced by both '" +
                             h.type_names_[it->second.intro] + "' and '" +
                             h.type_names_[t] + "'");
      }
    }
  }
  std::vector<std::uint32_t> ranges;
  for (const auto& [fname, info] : features) {
    h.feature_names_.push_back(fname);
    h.intro_.push_back(TypeId{info.intro});
    ranges.push_back(info.range);
  }
  h.approp_.assign(n, {});
  for (std::uint32_t t = 0; t < n; ++t) {
    for (std::uint32_t f = 0; f < h.feature_names_.size(); ++f) {
      if (h.below_[t * n + h.intro_[f].value]) {
        h.approp_[t].push_back(Appropriate{FeatureId{f}, TypeId{ranges[f]}});
      }
    }
  }

  // Total well-typing needs mgsat(t) to be finite: no type may require,
  // through the ranges of its features, a structure of its own type.
  {
    std::vector<int> state(n, 0);
    std::vector<std::uint32_t> stack;
    std::function<void(std::uint32_t)> visit = [&](std::uint32_t t) {
      if (state[t] == 2) return;
      if (state[t] == 1) {
        std::string msg = "appropriateness recursion: ";
        auto it = std::find(stack.begin(), stack.end(), t);
        for (; it != stack.end(); ++it) msg += h.type_names_[*it] + " -> ";
        msg += h.type_names_[t];
        throw HierarchyError(msg);
      }
      state[t] = 1;
      stack.push_back(t);
      for (const auto& a : h.approp_[t]) visit(a.range.value);
      stack.pop_back();
      state[t] = 2;
    };
    for (std::uint32_t t = 0; t < n; ++t) visit(t);
  }

  return h;
}

std::optional<TypeId> TypeHierarchy::find_type(std::string_view name) const {
  auto it = std::lower_bound(type_names_.begin(), type_names_.end(), name);
  if (it == type_names_.end() || *it != name) return std::nullopt;
  return TypeId{static_cast<std::uint32_t>(it - type_names_.begin())};
}

std::optional<FeatureId> TypeHierarchy::find_feature(std::string_view name) const {
  const std::string key = upper(name);
  auto it = std::lower_bound(feature_names_.begin(), feature_names_.end(), key);
  if (it == feature_names_.end() || *it != key) return std::nullopt;
  return FeatureId{static_cast<std::uint32_t>(it - feature_names_.begin())};
}

bool TypeHierarchy::subsumes(TypeId general, TypeId specific) const {
  return below_[index(specific, general)] != 0;
}

std::optional<TypeId> TypeHierarchy::range(TypeId t, FeatureId f) const {
  for (const auto& a : approp_[t.value]) {
    if (a.feature == f) return a.range;
  }
  return std::nullopt;
}

std::vector<TypeId> TypeHierarchy::supertypes(TypeId t) const {
  std::vector<TypeId> out;
  for (std::uint32_t s = 0; s < type_count(); ++s) {
    if (below_[index(t, TypeId{s})]) out.push_back(TypeId{s});
  }
  // A type's supertypes are totally ordered only in tree hierarchies; sort by
  // the number of supertypes each has, which puts more specific types first.
  auto depth = [&](TypeId x) {
    std::size_t d = 0;
    for (std::uint32_t s = 0; s < type_count(); ++s) d += below_[index(x, TypeId{s})];
    return d;
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](TypeId a, TypeId b) { return depth(a) > depth(b); });
  return out;
}

void TypeHierarchy::dump_gen_table(std::ostream& out) const {
  // Type ids are assigned in name order, so id order is name order.
  for (std::uint32_t a = 0; a < type_count(); ++a) {
    for (std::uint32_t b = a; b < type_count(); ++b) {
      out << "gen(" << type_names_[a] << ", " << type_names_[b]
          << ") = " << type_names_[gen_[a * type_count() + b]] << '\n';
    }
  }
}

std::vector<TypeDecl> parse_type_decls(std::string_view text) {
  using detail::Tok;
  detail::Lexer lex(text);
  std::map<std::string, TypeDecl> decls;
  auto declare = [&](const std::string& name) -> TypeDecl& {
    auto& d = decls[name];
    d.name = name;
    return d;
  };
  auto type_name = [&]() {
    auto tok = lex.expect(Tok::kIdent, "type name");
    if (!valid_type_name(tok.text)) {
      detail::Lexer::fail_at(tok, "invalid type name '" + tok.text +
                                      "' (expected [a-z][a-z0-9_-]*)");
    }
    return tok.text;
  };

  while (!lex.at(Tok::kEnd)) {
    const std::string lhs = type_name();
    declare(lhs);
    auto kw = lex.expect(Tok::kIdent, "'sub' or 'intro'");
    lex.expect(Tok::kLBracket, "'['");
    if (kw.text == "sub") {
      while (!lex.at(Tok::kRBracket)) {
        const std::string child = type_name();
        auto& d = declare(child);
        if (std::find(d.parents.begin(), d.parents.end(), lhs) == d.parents.end()) {
          d.parents.push_back(lhs);
        }
        if (!lex.at(Tok::kRBracket)) lex.expect(Tok::kComma, "',' or ']'");
      }
    } else if (kw.text == "intro") {
      while (!lex.at(Tok::kRBracket)) {
        auto feat = lex.expect(Tok::kIdent, "feature name");
        lex.expect(Tok::kColon, "':'");
        const std::string range = type_name();
        declare(lhs).intro.push_back({feat.text, range});
        if (!lex.at(Tok::kRBracket)) lex.expect(Tok::kComma, "',' or ']'");
      }
    } else {
      detail::Lexer::fail_at(kw, "expected 'sub' or 'intro', found '" + kw.text + "'");
    }
    lex.expect(Tok::kRBracket, "']'");
    lex.expect(Tok::kDot, "'.'");
  }

  std::vector<TypeDecl> out;
  out.reserve(decls.size());
  for (auto& [name, d] : decls) out.push_back(std::move(d));
  return out;
}

TypeHierarchy load_hierarchy(std::string_view text) {
  return TypeHierarchy::compile(parse_type_decls(text));
}

}  // namespace tfsdisc
