#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

#include "tfsdisc/atoms.hpp"
#include "tfsdisc/discourse.hpp"
#include "tfsdisc/error.hpp"
#include "tfsdisc/formats_io.hpp"
#include "tfsdisc/nonmono_ops.hpp"

namespace tfsdisc::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kMaxAtomsCap = 63;

struct Globals {
  std::string hierarchy;
  std::string lexicon;
  bool json = false;
  bool timing = false;
  std::size_t max_atoms = SearchOptions{}.max_atoms;
};

struct Context {
  const Globals& g;
  std::ostream& out;
  std::ostream& err;

  SearchOptions search() const { return SearchOptions{g.max_atoms}; }
  void emit(const json& record) const { out << record.dump() << '\n'; }
};

TypeHierarchy load_hierarchy_file(const std::string& path) {
  if (path.empty()) throw Error("no hierarchy given (use --hierarchy)");
  try {
    return load_hierarchy(read_file(path));
  } catch (const ParseError& e) {
    throw Error(path + ":" + e.what());
  } catch (const HierarchyError& e) {
    throw Error(path + ": " + e.what());
  }
}

// An argument starting with '[' is an inline AVM, anything else a file.
FeatureStructure load_avm_arg(const TypeHierarchy& h, const std::string& arg) {
  const bool inline_avm = !arg.empty() && arg.front() == '[';
  try {
    return parse_avm(h, inline_avm ? arg : read_file(arg));
  } catch (const ParseError& e) {
    throw Error((inline_avm ? std::string("<inline>") : arg) + ":" + e.what());
  }
}

std::vector<std::string> atom_texts(const TypeHierarchy& h, const FeatureStructure& fs) {
  std::vector<std::string> out;
  for (const auto& a : decompose(h, fs)) out.push_back(print_atom(h, a));
  return out;
}

class Timer {
 public:
  Timer(const Context& ctx, std::string label)
      : ctx_(ctx), label_(std::move(label)), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    if (!ctx_.g.timing) return;
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                        std::chrono::steady_clock::now() - start_)
                        .count();
    ctx_.err << "time " << label_ << ": " << us << " us\n";
  }

 private:
  const Context& ctx_;
  std::string label_;
  std::chrono::steady_clock::time_point start_;
};

// check -------------------------------------------------------------------

int cmd_check(const Context& ctx, std::string path, bool dump) {
  if (path.empty()) path = ctx.g.hierarchy;
  const auto h = [&] {
    Timer t(ctx, "check");
    return load_hierarchy_file(path);
  }();
  if (ctx.g.json) {
    ctx.emit({{"op", "check"},
              {"types", h.type_count()},
              {"features", h.feature_count()},
              {"root", h.name(h.root())},
              {"gen_table", h.gen_table_size()}});
  } else {
    ctx.out << "types: " << h.type_count() << '\n'
            << "features: " << h.feature_count() << '\n'
            << "root: " << h.name(h.root()) << '\n'
            << "gen_table: " << h.gen_table_size() << " entries\n";
  }
  if (dump) h.dump_gen_table(ctx.out);
  return kOk;
}

// op ------------------------------------------------------------------------

int cmd_op(const Context& ctx, const std::string& op, const std::string& left,
           const std::string& right, bool count_only, bool with_atoms) {
  const auto h = load_hierarchy_file(ctx.g.hierarchy);
  const auto a = load_avm_arg(h, left);
  const auto b = load_avm_arg(h, right);

  ResultSet results;
  bool failed = false;
  {
    Timer t(ctx, op);
    if (op == "unify") {
      auto u = unify(h, a, b);
      failed = !u;
      if (u) results.push_back(std::move(*u));
    } else if (op == "gen") {
      results.push_back(generalize(h, a, b));
    } else if (op == "punion") {
      results = punion(h, a, b, ctx.search());
    } else if (op == "mscd") {
      results = mscd(h, a, b, ctx.search());
    } else {
      results.push_back(skeptical_punion(h, a, b, ctx.search()));
    }
  }

  if (count_only) {
    if (ctx.g.json) {
      ctx.emit({{"op", op}, {"count", results.size()}});
    } else {
      ctx.out << results.size() << '\n';
    }
    return kOk;
  }
  if (failed) {
    if (ctx.g.json) {
      ctx.emit({{"op", op}, {"index", 0}, {"avm", nullptr}, {"result", "FAIL"}});
    } else {
      ctx.out << "FAIL\n";
    }
    return kOk;
  }
  if (!ctx.g.json) {
    ctx.out << op << ": " << results.size() << (results.size() == 1 ? " result\n" : " results\n");
  }
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto text = print_avm(h, results[i]);
    if (ctx.g.json) {
      json record{{"op", op}, {"index", i + 1}, {"avm", text}};
      if (with_atoms) record["atoms"] = atom_texts(h, results[i]);
      ctx.emit(record);
      continue;
    }
    ctx.out << '[' << i + 1 << "] " << text << '\n';
    if (with_atoms) {
      for (const auto& atom : atom_texts(h, results[i])) ctx.out << "    " << atom << '\n';
    }
  }
  return kOk;
}

// decompose -----------------------------------------------------------------

int cmd_decompose(const Context& ctx, const std::string& arg) {
  const auto h = load_hierarchy_file(ctx.g.hierarchy);
  const auto fs = load_avm_arg(h, arg);
  const auto atoms = [&] {
    Timer t(ctx, "decompose");
    return atom_texts(h, fs);
  }();
  if (ctx.g.json) {
    ctx.emit({{"op", "decompose"}, {"index", 1}, {"avm", print_avm(h, fs)}, {"atoms", atoms}});
    return kOk;
  }
  ctx.out << print_avm(h, fs) << '\n'
          << atoms.size() << (atoms.size() == 1 ? " atom\n" : " atoms\n");
  for (const auto& a : atoms) ctx.out << "  " << a << '\n';
  return kOk;
}

// parse ---------------------------------------------------------------------

std::string relation_label(const DiscourseNode& n) {
  if (n.is_leaf()) return "leaf";
  std::string out;
  for (Relation r : n.relations.members()) {
    if (!out.empty()) out += '|';
    out += to_string(r);
  }
  return out;
}

json node_json(const TypeHierarchy& h, const DiscourseNode& n) {
  json j{{"relation", relation_label(n)}, {"first", n.first + 1}, {"last", n.last + 1}};
  if (n.is_leaf()) {
    j["clause"] = n.clause;
    j["sem"] = print_avm(h, *n.sem);
    j["consem"] = print_avm(h, n.consem);
    return j;
  }
  j["consem"] = print_avm(h, n.consem);
  j["schema"] = print_avm(h, *n.schema);
  j["children"] = json::array();
  for (const auto& c : n.children) j["children"].push_back(node_json(h, *c));
  return j;
}

void print_node(const TypeHierarchy& h, const DiscourseNode& n, int depth, std::ostream& out) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (n.is_leaf()) {
    out << pad << n.first + 1 << ' ' << n.clause << '\n'
        << pad << "  sem:    " << print_avm(h, *n.sem) << '\n'
        << pad << "  consem: " << print_avm(h, n.consem) << '\n';
    return;
  }
  out << pad << relation_label(n) << " [" << n.first + 1 << '-' << n.last + 1 << "]\n"
      << pad << "  consem: " << print_avm(h, n.consem) << '\n'
      << pad << "  schema: " << print_avm(h, *n.schema) << '\n';
  for (const auto& c : n.children) print_node(h, *c, depth + 1, out);
}

struct ParseFlags {
  bool all_trees = false;
  bool permissive = false;
  bool mscd_schema = false;
  bool cascade = false;
};

int cmd_parse(const Context& ctx, const std::string& path, const ParseFlags& flags) {
  const auto file = load_discourse_file(path);
  const std::string hier_path =
      !ctx.g.hierarchy.empty() ? ctx.g.hierarchy : file.hierarchy.string();
  const std::string lex_path = !ctx.g.lexicon.empty() ? ctx.g.lexicon : file.lexicon.string();
  if (lex_path.empty()) throw Error("no lexicon given (use --lexicon or a 'use lexicon' line)");
  const auto h = load_hierarchy_file(hier_path);
  const auto lexicon = [&] {
    try {
      return load_lexicon(h, read_file(lex_path));
    } catch (const ParseError& e) {
      throw Error(lex_path + ":" + e.what());
    }
  }();
  const auto dcus = resolve_clauses(file, lexicon);

  if (flags.cascade) {
    const auto readings = [&] {
      Timer t(ctx, "cascade");
      return resolve_cascade(h, dcus, ctx.search());
    }();
    for (std::size_t i = 0; i < readings.size(); ++i) {
      if (ctx.g.json) {
        json consems = json::array();
        for (std::size_t k = 0; k < dcus.size(); ++k) {
          consems.push_back({{"clause", dcus[k].id}, {"consem", print_avm(h, readings[i].consems[k])}});
        }
        ctx.emit({{"op", "cascade"}, {"index", i + 1}, {"clauses", consems}});
        continue;
      }
      ctx.out << "reading " << i + 1 << '\n';
      for (std::size_t k = 0; k < dcus.size(); ++k) {
        ctx.out << "  " << k + 1 << ' ' << dcus[k].id << ": "
                << print_avm(h, readings[i].consems[k]) << '\n';
      }
    }
    if (!ctx.g.json) ctx.out << readings.size() << " readings\n";
    return kOk;
  }

  DiscourseOptions options;
  options.search = ctx.search();
  if (flags.permissive) options.predicate = permissive_characteristic_gen;
  if (flags.mscd_schema) options.schema_mode = SchemaMode::kMscd;
  auto readings = [&] {
    Timer t(ctx, "parse");
    return parse_discourse(h, dcus, options);
  }();
  if (flags.all_trees) readings = expand_relations(readings);

  for (const auto& r : readings) {
    if (ctx.g.json) {
      json record{{"op", "parse"},
                  {"index", r.tree->reading_id},
                  {"tree", shape(*r.tree)},
                  {"avm", print_avm(h, r.root_consem)}};
      record["schema"] = r.root_schema ? json(print_avm(h, *r.root_schema)) : json(nullptr);
      record["root"] = node_json(h, *r.tree);
      ctx.emit(record);
      continue;
    }
    ctx.out << "reading " << r.tree->reading_id << ": " << shape(*r.tree) << '\n';
    print_node(h, *r.tree, 1, ctx.out);
  }
  if (!ctx.g.json) {
    ctx.out << readings.size() << (readings.size() == 1 ? " reading\n" : " readings\n");
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Typed feature structures, priority union and generalization for discourse",
               "tfsdisc"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--hierarchy", g.hierarchy, "Type hierarchy file");
  app.add_option("--lexicon", g.lexicon, "Lexicon file (parse only)");
  app.add_flag("--json", g.json, "Emit one JSON record per line");
  app.add_flag("--timing", g.timing, "Print timings on stderr");
  app.add_option("--max-atoms", g.max_atoms, "Atom ceiling for subset searches")
      ->check(CLI::Range(std::size_t{1}, kMaxAtomsCap));

  std::string check_path;
  bool dump = false;
  auto* check = app.add_subcommand("check", "Compile a hierarchy and report its tables");
  check->add_option("hierarchy", check_path, "Hierarchy file (defaults to --hierarchy)");
  check->add_flag("--dump", dump, "Print the generalization table");

  std::string op, left, right;
  bool count_only = false, with_atoms = false;
  auto* opc = app.add_subcommand("op", "Apply a binary operation to two AVMs");
  opc->add_option("operation", op, "unify | gen | punion | mscd | skeptical")
      ->required()
      ->check(CLI::IsMember({"unify", "gen", "punion", "mscd", "skeptical"}));
  opc->add_option("left", left, "Left AVM file or inline AVM (punion: target)")->required();
  opc->add_option("right", right, "Right AVM file or inline AVM (punion: source)")->required();
  opc->add_flag("--count-only", count_only, "Print only the number of results");
  opc->add_flag("--atoms", with_atoms, "Print each result's atomic decomposition");

  std::string avm_arg;
  auto* dec = app.add_subcommand("decompose", "Print the atomic decomposition of an AVM");
  dec->add_option("avm", avm_arg, "AVM file or inline AVM")->required();

  std::string disc_path;
  ParseFlags pflags;
  auto* parse = app.add_subcommand("parse", "Parse a discourse file");
  parse->add_option("discourse", disc_path, "Discourse file")->required();
  parse->add_flag("--all-trees", pflags.all_trees, "One tree per relation label choice");
  parse->add_flag("--permissive-schema", pflags.permissive,
                  "Accept every schema as characteristic");
  parse->add_flag("--mscd-schema", pflags.mscd_schema, "Compute schemas by MSCD");
  parse->add_flag("--cascade", pflags.cascade, "Resolve the clauses as an ellipsis cascade");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out, err_out;
    const int code = app.exit(e, help_out, err_out);
    out << help_out.str();
    err << err_out.str();
    return code == 0 ? kOk : kInputError;
  }

  const Context ctx{g, out, err};
  try {
    if (*check) return cmd_check(ctx, check_path, dump);
    if (*opc) return cmd_op(ctx, op, left, right, count_only, with_atoms);
    if (*dec) return cmd_decompose(ctx, avm_arg);
    return cmd_parse(ctx, disc_path, pflags);
  } catch (const LimitError& e) {
    err << "tfsdisc: " << e.what() << '\n';
    return kLimit;
  } catch (const Error& e) {
    err << "tfsdisc: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace tfsdisc::cli
