#include "laws.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "micro.hpp"
#include "tfsdisc/atoms.hpp"
#include "tfsdisc/nonmono_ops.hpp"

namespace tfsdisc::testing {

namespace {

class Recorder {
 public:
  Recorder(std::string name, const TypeHierarchy& h) : h_(h) { report_.name = std::move(name); }

  void begin_case(std::initializer_list<const FeatureStructure*> inputs) {
    ++report_.cases;
    context_.clear();
    for (const auto* fs : inputs) {
      if (!context_.empty()) context_ += " / ";
      context_ += print_avm(h_, *fs);
    }
    case_failed_ = false;
  }

  void check(bool ok, const char* what) {
    if (ok) return;
    if (!case_failed_) ++report_.failed;
    case_failed_ = true;
    if (report_.examples.size() < 5) report_.examples.push_back(std::string(what) + " on " + context_);
  }

  int done_cases() const { return report_.cases; }
  LawReport done() { return std::move(report_); }

 private:
  const TypeHierarchy& h_;
  LawReport report_;
  std::string context_;
  bool case_failed_ = false;
};

#define LAW(rec, cond) (rec).check((cond), #cond)

std::vector<std::string> texts(const TypeHierarchy& h, const std::vector<FeatureStructure>& fss) {
  std::vector<std::string> out;
  for (const auto& fs : fss) out.push_back(print_avm(h, fs));
  return out;
}

// Every subset of the source atoms, kept when consistent with the target and
// not contained in a larger consistent subset; results not strictly more
// general than another, as sorted canonical texts.
std::vector<std::string> brute_force_punion(const TypeHierarchy& h, const FeatureStructure& t,
                                            const FeatureStructure& s) {
  const AtomSet atoms = decompose(h, s);
  const std::size_t n = atoms.size();
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::optional<FeatureStructure>> result(subsets);
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    AtomSet subset;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (std::size_t{1} << k)) subset.push_back(atoms[k]);
    }
    if (auto r = reassemble(h, subset)) result[mask] = unify(h, t, *r);
  }
  std::vector<FeatureStructure> maximal;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    if (!result[mask]) continue;
    bool is_max = true;
    for (std::size_t k = 0; k < n && is_max; ++k) {
      const std::size_t bigger = mask | (std::size_t{1} << k);
      if (bigger != mask && result[bigger]) is_max = false;
    }
    if (is_max) maximal.push_back(*result[mask]);
  }
  std::set<std::string> kept;
  for (const auto& r : maximal) {
    bool dominated = false;
    for (const auto& other : maximal) dominated = dominated || strictly_subsumes(h, r, other);
    if (!dominated) kept.insert(print_avm(h, r));
  }
  return {kept.begin(), kept.end()};
}

}  // namespace

std::string LawReport::summary() const {
  std::string out = name + ": " + std::to_string(cases - failed) + "/" + std::to_string(cases) +
                    " cases hold";
  for (const auto& e : examples) out += "\n    " + e;
  return out;
}

std::size_t generator_variety(const TypeHierarchy& h, std::uint64_t seed, int cases) {
  MicroGen gen(h, seed);
  std::set<std::string> distinct;
  for (int i = 0; i < cases; ++i) distinct.insert(print_avm(h, gen.next()));
  return distinct.size();
}

LawReport unify_laws(const TypeHierarchy& h, std::uint64_t seed, int cases) {
  Recorder rec("unify lattice laws", h);
  MicroGen gen(h, seed);
  const auto top = mgsat(h, h.root());
  for (int i = 0; i < cases; ++i) {
    const auto a = gen.next(), b = gen.next(), c = gen.next();
    rec.begin_case({&a, &b, &c});
    LAW(rec, a.size() <= 6);
    LAW(rec, unify(h, a, a) == a);
    LAW(rec, unify(h, a, top) == a);
    const auto ab = unify(h, a, b);
    LAW(rec, ab == unify(h, b, a));
    if (ab) {
      LAW(rec, subsumes(h, a, *ab));
      LAW(rec, subsumes(h, b, *ab));
    }
    const auto bc = unify(h, b, c);
    std::optional<FeatureStructure> left, right;
    if (ab) left = unify(h, *ab, c);
    if (bc) right = unify(h, a, *bc);
    LAW(rec, left == right);
    if (subsumes(h, a, b)) LAW(rec, ab == b);
  }
  return rec.done();
}

LawReport subsumption_laws(const TypeHierarchy& h, std::uint64_t seed, int cases) {
  Recorder rec("subsumes preorder", h);
  MicroGen gen(h, seed);
  for (int i = 0; i < cases; ++i) {
    const auto a = gen.next(), x = gen.next(), y = gen.next();
    rec.begin_case({&a, &x, &y});
    LAW(rec, subsumes(h, a, a));
    LAW(rec, (subsumes(h, x, a) && subsumes(h, a, x)) == (a == x));
    // Chains a <= b <= c built by unification.
    const auto b = unify(h, a, x);
    if (!b) continue;
    const auto c = unify(h, *b, y);
    if (!c) continue;
    LAW(rec, subsumes(h, a, *b));
    LAW(rec, subsumes(h, *b, *c));
    LAW(rec, subsumes(h, a, *c));
    if (subsumes(h, *c, a)) LAW(rec, a == *c);
  }
  return rec.done();
}

LawReport decompose_laws(const TypeHierarchy& h, std::uint64_t seed, int cases) {
  Recorder rec("reassemble . decompose = id", h);
  MicroGen gen(h, seed);
  for (int i = 0; i < cases; ++i) {
    const auto a = gen.next();
    rec.begin_case({&a});
    const auto atoms = decompose(h, a);
    LAW(rec, std::is_sorted(atoms.begin(), atoms.end()));
    LAW(rec, std::adjacent_find(atoms.begin(), atoms.end()) == atoms.end());
    LAW(rec, reassemble(h, atoms) == a);
    std::string text;
    for (const auto& atom : atoms) {
      const auto e = expand(h, atom);
      LAW(rec, e.has_value() && subsumes(h, *e, a));
      text += print_atom(h, atom) + "\n";
    }
    LAW(rec, parse_atoms(h, text) == atoms);
  }
  return rec.done();
}

LawReport punion_contracts(const TypeHierarchy& h, std::uint64_t seed, int cases) {
  Recorder rec("punion contracts", h);
  MicroGen gen(h, seed);
  for (int i = 0; i < cases; ++i) {
    const auto t = gen.next(), s = gen.next();
    rec.begin_case({&t, &s});
    const auto results = punion(h, t, s);
    LAW(rec, !results.empty());
    for (std::size_t x = 0; x < results.size(); ++x) {
      LAW(rec, subsumes(h, t, results[x]));
      for (std::size_t y = 0; y < results.size(); ++y) {
        if (x != y) LAW(rec, !subsumes(h, results[x], results[y]));
      }
    }
    if (auto u = unify(h, t, s)) LAW(rec, results.size() == 1 && results[0] == *u);
    const auto self = punion(h, s, s);
    LAW(rec, self.size() == 1 && self[0] == s);
    const auto skeptical = skeptical_punion(h, t, s);
    LAW(rec, subsumes(h, t, skeptical));
    for (const auto& r : results) LAW(rec, subsumes(h, skeptical, r));
  }
  return rec.done();
}

LawReport punion_brute_force(const TypeHierarchy& h, std::uint64_t seed, int cases) {
  Recorder rec("punion = all-subsets oracle", h);
  MicroGen gen(h, seed);
  for (int drawn = 0; rec.done_cases() < cases && drawn < 50 * cases; ++drawn) {
    const auto t = gen.next(), s = gen.next();
    if (decompose(h, s).size() > 12) continue;
    rec.begin_case({&t, &s});
    LAW(rec, texts(h, punion(h, t, s)) == brute_force_punion(h, t, s));
  }
  return rec.done();
}

LawReport punion_via_mscd(const TypeHierarchy& h, std::uint64_t seed, int cases) {
  Recorder rec("punion(t,s) = unify(t, mscd(s,t))", h);
  MicroGen gen(h, seed);
  for (int i = 0; i < cases; ++i) {
    const auto t = gen.next(), s = gen.next();
    rec.begin_case({&t, &s});
    std::set<std::string> via_mscd;
    bool all_unify = true;
    for (const auto& m : mscd(h, s, t)) {
      if (auto u = unify(h, t, m)) {
        via_mscd.insert(print_avm(h, *u));
      } else {
        all_unify = false;
      }
    }
    LAW(rec, all_unify);
    LAW(rec, texts(h, punion(h, t, s)) ==
                 std::vector<std::string>(via_mscd.begin(), via_mscd.end()));
  }
  return rec.done();
}

LawReport mscd_contracts(const TypeHierarchy& h, std::uint64_t seed, int cases) {
  Recorder rec("mscd contracts", h);
  MicroGen gen(h, seed);
  for (int i = 0; i < cases; ++i) {
    const auto c1 = gen.next(), s2 = gen.next();
    rec.begin_case({&c1, &s2});
    const auto results = mscd(h, c1, s2);
    LAW(rec, !results.empty());
    const auto g = generalize(h, c1, s2);
    for (const auto& m : results) {
      LAW(rec, subsumes(h, m, c1));
      LAW(rec, unify(h, m, s2).has_value());
      LAW(rec, subsumes(h, g, m));
    }
    if (unify(h, c1, s2)) LAW(rec, results.size() == 1 && results[0] == c1);
  }
  return rec.done();
}

LawReport generalize_laws(const TypeHierarchy& h, std::uint64_t seed, int cases) {
  Recorder rec("generalize laws", h);
  MicroGen gen(h, seed);
  for (int i = 0; i < cases; ++i) {
    const auto a = gen.next(), b = gen.next(), c = gen.next();
    rec.begin_case({&a, &b, &c});
    const auto g = generalize(h, a, b);
    LAW(rec, g == generalize(h, b, a));
    LAW(rec, subsumes(h, g, a));
    LAW(rec, subsumes(h, g, b));
    LAW(rec, unify(h, g, a) == a);
    LAW(rec, generalize(h, a, a) == a);
    // Greatest lower bound: anything below both is below g.
    if (subsumes(h, c, a) && subsumes(h, c, b)) LAW(rec, subsumes(h, c, g));
    if (subsumes(h, a, b)) LAW(rec, g == a);
  }
  return rec.done();
}

}  // namespace tfsdisc::testing
