#include "tfsdisc/atoms.hpp"

#include <algorithm>
#include <map>

#include "lexer.hpp"
#include "tfsdisc/error.hpp"
#include "workspace.hpp"

namespace tfsdisc {

namespace {

using detail::Lexer;
using detail::Tok;
using detail::Token;

TypeId feature_range(const TypeHierarchy& h, FeatureId f) {
  return *h.range(h.intro(f), f);
}

// Type the chain notation shows at position i of a typed path: the range of
// the feature leading there, specialized to carry the next feature.
TypeId implied_step_type(const TypeHierarchy& h, const Path& p, std::size_t i) {
  const TypeId range = feature_range(h, p.features[i]);
  return h.join(range, h.intro(p.features[i + 1])).value_or(range);
}

}  // namespace

AtomicConstraint AtomicConstraint::path_eq(Path a, Path b) {
  if (b < a) std::swap(a, b);
  return {Kind::kPathEq, std::move(a), TypeId{}, std::move(b)};
}

AtomSet decompose(const TypeHierarchy& h, const FeatureStructure& fs) {
  AtomSet atoms;
  const auto all = fs.paths();

  std::map<Path, TypeId> implied;
  for (const auto& [p, n] : all) {
    implied.emplace(p, p.empty() ? h.root() : feature_range(h, p.features.back()));
  }
  auto record = [&](const Path& q) {
    Path prefix;
    for (FeatureId f : q.features) {
      auto& t = implied.at(prefix);
      t = h.join(t, h.intro(f)).value_or(t);
      prefix.features.push_back(f);
    }
  };

  std::vector<std::vector<const Path*>> by_node(fs.size());
  for (const auto& [p, n] : all) by_node[n].push_back(&p);
  for (const auto& paths : by_node) {
    for (std::size_t i = 1; i < paths.size(); ++i) {
      atoms.push_back(AtomicConstraint::path_eq(*paths.front(), *paths[i]));
      record(*paths.front());
      record(*paths[i]);
    }
  }

  std::vector<const std::pair<Path, NodeId>*> order;
  for (const auto& entry : all) {
    if (!entry.first.empty()) order.push_back(&entry);
  }
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    return a->first.size() > b->first.size();
  });
  for (const auto* entry : order) {
    const TypeId t = fs.type(entry->second);
    if (t != implied.at(entry->first)) {
      atoms.push_back(AtomicConstraint::path_type(entry->first, t));
      record(entry->first);
    }
  }

  if (fs.type() != h.root()) atoms.push_back(AtomicConstraint::root_type(fs.type()));

  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

namespace detail {

bool apply_atom(Workspace& ws, Workspace::Index root, const AtomicConstraint& atom) {
  switch (atom.kind) {
    case AtomicConstraint::Kind::kRootType:
      return ws.constrain(root, atom.type);
    case AtomicConstraint::Kind::kPathType: {
      auto n = ws.walk(root, atom.path);
      return n && ws.constrain(*n, atom.type);
    }
    case AtomicConstraint::Kind::kPathEq: {
      auto a = ws.walk(root, atom.path);
      if (!a) return false;
      auto b = ws.walk(root, atom.other);
      return b && ws.merge(*a, *b);
    }
  }
  return false;
}

}  // namespace detail

std::optional<FeatureStructure> reassemble(const TypeHierarchy& h,
                                           const std::vector<AtomicConstraint>& atoms) {
  detail::Workspace ws(h);
  const auto root = ws.add_mgsat(h.root());
  for (const auto& atom : atoms) {
    if (!detail::apply_atom(ws, root, atom)) return std::nullopt;
  }
  return ws.extract(root);
}

std::optional<FeatureStructure> expand(const TypeHierarchy& h, const AtomicConstraint& atom) {
  return reassemble(h, {atom});
}

std::string print_atom(const TypeHierarchy& h, const AtomicConstraint& atom) {
  switch (atom.kind) {
    case AtomicConstraint::Kind::kRootType:
      return "(*/" + h.name(atom.type) + ")";
    case AtomicConstraint::Kind::kPathType: {
      if (atom.path.empty()) return "(*/" + h.name(atom.type) + ")";
      std::string out;
      for (std::size_t i = 0; i < atom.path.size(); ++i) {
        if (i) out += '|';
        const TypeId t =
            i + 1 == atom.path.size() ? atom.type : implied_step_type(h, atom.path, i);
        out += "(" + h.name(atom.path.features[i]) + "/" + h.name(t) + ")";
      }
      return out;
    }
    case AtomicConstraint::Kind::kPathEq:
      return to_string(h, atom.path) + " = " + to_string(h, atom.other);
  }
  return {};
}

AtomSet parse_atoms(const TypeHierarchy& h, std::string_view text) {
  Lexer lex(text);
  AtomSet atoms;

  auto feature = [&](const Token& tok) {
    auto f = h.find_feature(tok.text);
    if (!f) Lexer::fail_at(tok, "unknown feature '" + tok.text + "'");
    return *f;
  };
  auto type = [&]() {
    auto tok = lex.expect(Tok::kIdent, "type name");
    auto t = h.find_type(tok.text);
    if (!t) Lexer::fail_at(tok, "unknown type '" + tok.text + "'");
    return std::make_pair(*t, tok);
  };

  while (!lex.at(Tok::kEnd)) {
    if (lex.at(Tok::kLParen)) {
      lex.next();
      if (lex.at(Tok::kStar)) {
        lex.next();
        lex.expect(Tok::kSlash, "'/'");
        auto [t, tok] = type();
        lex.expect(Tok::kRParen, "')'");
        atoms.push_back(AtomicConstraint::root_type(t));
        continue;
      }
      Path path;
      std::vector<std::pair<TypeId, Token>> steps;
      while (true) {
        auto ftok = lex.expect(Tok::kIdent, "feature name");
        path.features.push_back(feature(ftok));
        lex.expect(Tok::kSlash, "'/'");
        steps.push_back(type());
        lex.expect(Tok::kRParen, "')'");
        if (!lex.at(Tok::kPipe)) break;
        lex.next();
        lex.expect(Tok::kLParen, "'('");
      }
      for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
        const TypeId expected = implied_step_type(h, path, i);
        if (steps[i].first != expected) {
          Lexer::fail_at(steps[i].second, "intermediate type '" + h.name(steps[i].first) +
                                              "' differs from the implied type '" +
                                              h.name(expected) + "'");
        }
      }
      atoms.push_back(AtomicConstraint::path_type(std::move(path), steps.back().first));
      continue;
    }
    auto read_path = [&]() {
      Path p;
      p.features.push_back(feature(lex.expect(Tok::kIdent, "atom")));
      while (lex.at(Tok::kPipe)) {
        lex.next();
        p.features.push_back(feature(lex.expect(Tok::kIdent, "feature name")));
      }
      return p;
    };
    Path left = read_path();
    lex.expect(Tok::kEquals, "'='");
    Path right = read_path();
    if (left == right) lex.fail("equation relates a path to itself");
    atoms.push_back(AtomicConstraint::path_eq(std::move(left), std::move(right)));
  }
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

}  // namespace tfsdisc
