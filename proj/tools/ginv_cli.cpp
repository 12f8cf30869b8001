#include "ginv/catalog.hpp"
#include "ginv/classify.hpp"
#include "ginv/degree_cache.hpp"
#include "ginv/errors.hpp"
#include "ginv/group_data.hpp"
#include "ginv/group_ops.hpp"
#include "ginv/invariants.hpp"
#include "ginv/modular.hpp"
#include "ginv/tqft.hpp"
#include "ginv/verify.hpp"
#include "ginv/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

using namespace ginv;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCompute = 3;

struct Options {
  std::string format = "text";
  std::string cache_dir;
  std::string spec_text;
  std::string kind;
  uint64_t genus = 1;
  uint64_t prime = 0;
  std::string brauer_file;
  std::optional<uint64_t> tqft_genus;
  std::string word;
  std::string suite;
  uint64_t max_genus = 4;
  std::vector<std::string> groups;
  std::string groups_file;
  std::string threshold_shift;
  std::string normal_elt;

  bool json() const { return format == "json"; }
};

DegreeCache open_cache(const Options &o) {
  if (o.cache_dir.empty())
    return DegreeCache();
  return DegreeCache(std::filesystem::path(o.cache_dir));
}

void emit(const ordered_json &j) { std::cout << j.dump(2) << "\n"; }

Rational d_p_prime_of(const GroupData &d, uint64_t p) {
  if (!is_prime(p))
    throw ParseError("p must be prime");
  uint64_t kp = 0;
  for (uint64_t o : d.rep_orders)
    if (o % p != 0)
      ++kp;
  Integer coprime_part = d.order / p_part(d.order, p);
  return Rational(static_cast<unsigned long>(kp)) / Rational(coprime_part);
}

int run_degrees(const Options &o) {
  DegreeCache cache = open_cache(o);
  GroupData d = realize(parse_group_spec(o.spec_text), &cache);
  if (o.json()) {
    ordered_json j;
    j["label"] = d.label;
    j["order"] = d.order.get_str();
    ordered_json rows = ordered_json::array();
    for (const auto &[deg, mult] : d.degrees.entries)
      rows.push_back(ordered_json{{"degree", deg}, {"multiplicity", mult}});
    j["degrees"] = std::move(rows);
    j["linear_count"] = d.degrees.linear_count;
    emit(j);
    return kExitOk;
  }
  std::cout << "label " << d.label << "\n";
  std::cout << "order " << d.order.get_str() << "\n";
  std::cout << "degrees";
  for (const auto &[deg, mult] : d.degrees.entries)
    std::cout << " " << deg << "^" << mult;
  std::cout << "\n";
  std::cout << "linear " << d.degrees.linear_count << "\n";
  return kExitOk;
}

int run_classes(const Options &o) {
  DegreeCache cache = open_cache(o);
  GroupData d = realize(parse_group_spec(o.spec_text), &cache);
  // aggregate (class size, element order) -> count
  std::map<std::pair<uint64_t, uint64_t>, uint64_t> agg;
  for (std::size_t j = 0; j < d.class_count(); ++j)
    ++agg[{d.class_sizes[j], d.rep_orders[j]}];
  if (o.json()) {
    ordered_json j;
    j["label"] = d.label;
    j["order"] = d.order.get_str();
    j["class_count"] = d.class_count();
    ordered_json rows = ordered_json::array();
    for (const auto &[key, count] : agg)
      rows.push_back(ordered_json{{"size", key.first},
                                  {"element_order", key.second},
                                  {"count", count}});
    j["classes"] = std::move(rows);
    emit(j);
    return kExitOk;
  }
  std::cout << "label " << d.label << "\n";
  std::cout << "order " << d.order.get_str() << "\n";
  std::cout << "classes " << d.class_count() << "\n";
  for (const auto &[key, count] : agg)
    std::cout << "size " << key.first << " element_order " << key.second
              << " count " << count << "\n";
  return kExitOk;
}

int run_classify(const Options &o) {
  DegreeCache cache = open_cache(o);
  GroupData d = realize(parse_group_spec(o.spec_text), &cache);
  const StructureReport &s = d.structure;
  if (o.json()) {
    ordered_json j;
    j["label"] = d.label;
    j["order"] = d.order.get_str();
    j["abelian"] = s.abelian;
    j["nilpotent"] = s.nilpotent;
    j["supersolvable"] = s.supersolvable;
    j["solvable"] = s.solvable;
    ordered_json pc = ordered_json::object(), ps = ordered_json::object();
    for (const auto &[p, v] : s.p_closed)
      pc[std::to_string(p)] = v;
    for (const auto &[p, v] : s.p_solvable)
      ps[std::to_string(p)] = v;
    j["p_closed"] = std::move(pc);
    j["p_solvable"] = std::move(ps);
    j["witnesses"] = s.witnesses;
    emit(j);
    return kExitOk;
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "label " << d.label << "\n";
  std::cout << "order " << d.order.get_str() << "\n";
  std::cout << "abelian " << yn(s.abelian) << "\n";
  std::cout << "nilpotent " << yn(s.nilpotent) << "\n";
  std::cout << "supersolvable " << yn(s.supersolvable) << "\n";
  std::cout << "solvable " << yn(s.solvable) << "\n";
  for (const auto &[p, v] : s.p_closed)
    std::cout << "p_closed " << p << " " << yn(v) << "\n";
  for (const auto &[p, v] : s.p_solvable)
    std::cout << "p_solvable " << p << " " << yn(v) << "\n";
  for (const std::string &w : s.witnesses)
    std::cout << "witness " << w << "\n";
  return kExitOk;
}

int run_invariant(const Options &o) {
  DegreeCache cache = open_cache(o);
  GroupData d = realize(parse_group_spec(o.spec_text), &cache);
  Rational value;
  std::optional<QuadValue> alpha;
  if (o.kind == "Q") {
    value = invariant_Q(d.degrees, o.genus);
  } else if (o.kind == "q") {
    value = invariant_q(d.degrees, o.genus);
  } else if (o.kind == "qtilde") {
    value = invariant_q_tilde(d.class_sizes, d.order, o.genus);
  } else if (o.kind == "d") {
    value = invariant_d(d.class_count(), d.order);
  } else if (o.kind == "dpprime") {
    if (o.prime == 0)
      throw ParseError("--kind dpprime needs --prime");
    value = d_p_prime_of(d, o.prime);
  } else if (o.kind == "qhpprime") {
    uint64_t p = o.prime;
    if (!o.brauer_file.empty()) {
      std::ifstream in(o.brauer_file);
      if (!in)
        throw ParseError("cannot open " + o.brauer_file);
      BrauerData b = read_brauer_file(in);
      if (p == 0)
        p = b.prime;
      if (p != b.prime)
        throw ParseError("--prime disagrees with the degree file");
      value = invariant_q_p_prime(b, d.order, o.genus);
      if (p > 2)
        alpha = alpha_threshold(o.genus, p);
    } else {
      if (p == 0)
        throw ParseError("--kind qhpprime needs --prime");
      if (!is_prime(p))
        throw ParseError("p must be prime");
      if (o.genus != 1)
        throw ParseError("genus above 1 needs --brauer with degree data");
      value = d_p_prime_of(d, p);
    }
  } else {
    throw ParseError("unknown invariant kind: " + o.kind);
  }
  if (o.json()) {
    ordered_json j;
    j["label"] = d.label;
    j["kind"] = o.kind;
    if (o.kind != "d" && o.kind != "dpprime")
      j["genus"] = o.genus;
    if (o.prime)
      j["prime"] = o.prime;
    j["value"] = to_string(value);
    if (alpha) {
      int cmp = alpha->compare(value);
      j["alpha_threshold"] = alpha->to_string();
      j["comparison"] = cmp > 0 ? "above" : cmp < 0 ? "below" : "equal";
    }
    emit(j);
    return kExitOk;
  }
  std::cout << to_string(value) << "\n";
  if (alpha) {
    int cmp = alpha->compare(value);
    std::cout << "alpha_threshold " << alpha->to_string() << "\n";
    std::cout << "comparison "
              << (cmp > 0 ? "above" : cmp < 0 ? "below" : "equal") << "\n";
  }
  return kExitOk;
}

int run_tqft(const Options &o) {
  if (o.tqft_genus.has_value() == !o.word.empty())
    throw ParseError("give exactly one of --genus or --word");
  DegreeCache cache = open_cache(o);
  GroupData d = realize(parse_group_spec(o.spec_text), &cache);
  CobordismWord w = o.tqft_genus ? genus_word(*o.tqft_genus)
                                 : CobordismWord::parse(o.word);
  if (!w.closed())
    throw ParseError("word is not a closed cobordism");
  Rational value = evaluate_closed(w, d.degrees);
  if (o.json()) {
    ordered_json j;
    j["label"] = d.label;
    j["word"] = w.to_string();
    j["value"] = to_string(value);
    emit(j);
    return kExitOk;
  }
  std::cout << to_string(value) << "\n";
  return kExitOk;
}

int run_verify(const Options &o) {
  DegreeCache cache = open_cache(o);
  SuiteOptions opt;
  opt.max_genus = o.max_genus;
  opt.group_filter = o.groups;
  opt.cache = &cache;
  if (!o.threshold_shift.empty())
    opt.threshold_shift = rational_from_string(o.threshold_shift);
  std::vector<GroupSpec> catalog;
  if (!o.groups_file.empty()) {
    std::ifstream in(o.groups_file);
    if (!in)
      throw ParseError("cannot open " + o.groups_file);
    catalog = read_spec_file(in);
  } else {
    catalog = default_catalog();
  }
  VerificationReport report;
  if (o.suite == "theorems")
    report = suite_theorems(catalog, opt);
  else if (o.suite == "remarks")
    report = suite_remarks(opt);
  else if (o.suite == "lemmas")
    report = suite_lemmas(catalog, opt);
  else
    throw ParseError("unknown suite: " + o.suite);
  if (o.json())
    std::cout << report_to_json(report);
  else
    std::cout << report_to_text(report);
  return report.violations ? kExitViolation : kExitOk;
}

int run_explore(const Options &o) {
  DegreeCache cache = open_cache(o);
  GroupSpec spec = parse_group_spec(o.spec_text);
  PermGroup g = make_group(spec);
  Permutation x = Permutation::parse_cycles(o.normal_elt, g.degree());
  if (!g.contains(x))
    throw ParseError("element is not in the group");
  PermGroup n = normal_closure(g, {x}).group;
  FactorizationReport r = explore_factorization(g, n, spec.label(), &cache);
  if (o.json()) {
    ordered_json j;
    j["group"] = r.group_label;
    j["normal"] = r.normal_label;
    j["group_order"] = r.group_order.get_str();
    j["normal_order"] = r.normal_order.get_str();
    j["quotient_order"] = r.quotient_order.get_str();
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < r.genus.size(); ++i)
      rows.push_back(ordered_json{{"h", r.genus[i]},
                                  {"q_group", to_string(r.q_group[i])},
                                  {"q_normal", to_string(r.q_normal[i])},
                                  {"q_quotient", to_string(r.q_quotient[i])},
                                  {"holds", static_cast<bool>(r.holds[i])}});
    j["rows"] = std::move(rows);
    emit(j);
    return kExitOk;
  }
  std::cout << "group " << r.group_label << " order "
            << r.group_order.get_str() << "\n";
  std::cout << "normal order " << r.normal_order.get_str()
            << " quotient order " << r.quotient_order.get_str() << "\n";
  for (std::size_t i = 0; i < r.genus.size(); ++i)
    std::cout << "h=" << r.genus[i] << " q(G)=" << to_string(r.q_group[i])
              << " q(N)=" << to_string(r.q_normal[i])
              << " q(G/N)=" << to_string(r.q_quotient[i]) << " holds "
              << (r.holds[i] ? "yes" : "no") << "\n";
  return kExitOk;
}

int run_cache_stats(const Options &o) {
  DegreeCache cache = open_cache(o);
  if (o.json()) {
    emit(ordered_json{{"directory", cache.directory().string()},
                      {"entries", cache.entry_count()}});
    return kExitOk;
  }
  std::cout << "directory " << cache.directory().string() << "\n";
  std::cout << "entries " << cache.entry_count() << "\n";
  return kExitOk;
}

int run_cache_clear(const Options &o) {
  DegreeCache cache = open_cache(o);
  std::size_t before = cache.entry_count();
  cache.clear();
  if (o.json()) {
    emit(ordered_json{{"removed", before}});
    return kExitOk;
  }
  std::cout << "removed " << before << "\n";
  return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact genus-parameterized invariants of finite groups"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  Options o;
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache-dir", o.cache_dir, "degree cache directory");

  auto add_spec = [&](CLI::App *cmd) {
    cmd->add_option("spec", o.spec_text,
                    "group spec, e.g. family:A(5) or gens:4:(1 2),(3 4)")
        ->required();
  };

  CLI::App *degrees = app.add_subcommand("degrees", "character degrees");
  add_spec(degrees);

  CLI::App *classes = app.add_subcommand("classes", "conjugacy classes");
  add_spec(classes);

  CLI::App *classify = app.add_subcommand("classify", "structure predicates");
  add_spec(classify);

  CLI::App *invariant = app.add_subcommand("invariant", "exact invariants");
  invariant->add_option("--kind", o.kind, "Q, q, qtilde, d, dpprime, qhpprime")
      ->required()
      ->check(CLI::IsMember({"Q", "q", "qtilde", "d", "dpprime", "qhpprime"}));
  invariant->add_option("--genus", o.genus, "genus h (default 1)");
  invariant->add_option("--prime", o.prime, "prime p for the p' kinds");
  invariant->add_option("--brauer", o.brauer_file,
                        "modular degree data file for qhpprime");
  add_spec(invariant);

  CLI::App *tqft = app.add_subcommand("tqft", "evaluate a closed surface");
  auto *tg = tqft->add_option_function<uint64_t>(
      "--genus", [&](uint64_t h) { o.tqft_genus = h; }, "genus of the surface");
  tqft->add_option("--word", o.word, "cobordism word, e.g. cap,copants,pants,cup")
      ->excludes(tg);
  add_spec(tqft);

  CLI::App *verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite, "theorems, remarks or lemmas")
      ->required()
      ->check(CLI::IsMember({"theorems", "remarks", "lemmas"}));
  verify->add_option("--max-genus", o.max_genus, "largest genus to sweep");
  verify->add_option("--groups", o.groups, "restrict to these catalog labels")
      ->delimiter(',');
  verify->add_option("--groups-file", o.groups_file,
                     "read the group list from a spec file");
  verify->add_option("--threshold-shift", o.threshold_shift)->group("");

  CLI::App *explore =
      app.add_subcommand("explore", "factorization of q_h over a quotient");
  explore->add_option("--normal", o.normal_elt,
                      "element whose normal closure is N")
      ->required();
  add_spec(explore);

  CLI::App *cache = app.add_subcommand("cache", "degree cache administration");
  cache->require_subcommand(1);
  CLI::App *cache_clear = cache->add_subcommand("clear", "drop all entries");
  CLI::App *cache_stats = cache->add_subcommand("stats", "directory and size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (degrees->parsed())
      return run_degrees(o);
    if (classes->parsed())
      return run_classes(o);
    if (classify->parsed())
      return run_classify(o);
    if (invariant->parsed())
      return run_invariant(o);
    if (tqft->parsed())
      return run_tqft(o);
    if (verify->parsed())
      return run_verify(o);
    if (explore->parsed())
      return run_explore(o);
    if (cache_clear->parsed())
      return run_cache_clear(o);
    if (cache_stats->parsed())
      return run_cache_stats(o);
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCompute;
  }
  return kExitUsage;
}
