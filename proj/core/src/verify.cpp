#include "ginv/verify.hpp"

#include "ginv/errors.hpp"
#include "ginv/invariants.hpp"
#include "ginv/version.hpp"

#include <json.hpp>

#include <algorithm>
#include <cassert>
#include <chrono>
#include <ctime>
#include <map>

namespace ginv {

using ordered_json = nlohmann::ordered_json;

const char *verdict_name(Verdict v) {
  switch (v) {
  case Verdict::Consistent:
    return "consistent";
  case Verdict::ExtremalEquality:
    return "EXTREMAL_EQUALITY";
  case Verdict::Violation:
    return "VIOLATION";
  }
  return "?";
}

namespace {

Verdict verdict_from_name(const std::string &s) {
  if (s == "consistent")
    return Verdict::Consistent;
  if (s == "EXTREMAL_EQUALITY")
    return Verdict::ExtremalEquality;
  if (s == "VIOLATION")
    return Verdict::Violation;
  throw ParseError("unknown verdict: " + s);
}

std::string now_utc() {
  std::time_t t = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// One theorem-shaped comparison: strict hypothesis lhs > rhs.
CheckRow theorem_row(const std::string &theorem, const std::string &group,
                     uint64_t h, const Rational &lhs, const Rational &rhs,
                     bool conclusion) {
  CheckRow row;
  row.theorem = theorem;
  row.group = group;
  row.h = h;
  row.lhs = to_string(lhs);
  row.rhs = to_string(rhs);
  row.hypothesis = lhs > rhs;
  row.conclusion = conclusion;
  if (lhs == rhs)
    row.verdict = Verdict::ExtremalEquality;
  else if (row.hypothesis && !conclusion)
    row.verdict = Verdict::Violation;
  else
    row.verdict = Verdict::Consistent;
  return row;
}

// One asserted fact (remarks and lemma batteries).
CheckRow assertion_row(const std::string &id, const std::string &group,
                       uint64_t h, const std::string &lhs,
                       const std::string &rhs, bool holds) {
  CheckRow row;
  row.theorem = id;
  row.group = group;
  row.h = h;
  row.lhs = lhs;
  row.rhs = rhs;
  row.hypothesis = true;
  row.conclusion = holds;
  row.verdict = holds ? Verdict::Consistent : Verdict::Violation;
  return row;
}

VerificationReport assemble(const std::string &suite,
                            std::vector<CheckRow> rows) {
  std::sort(rows.begin(), rows.end(), [](const CheckRow &a, const CheckRow &b) {
    if (a.theorem != b.theorem)
      return a.theorem < b.theorem;
    if (a.group != b.group)
      return a.group < b.group;
    return a.h < b.h;
  });
  VerificationReport r;
  r.suite = suite;
  r.version = kVersion;
  r.timestamp = now_utc();
  r.results = std::move(rows);
  for (const CheckRow &row : r.results) {
    switch (row.verdict) {
    case Verdict::Consistent:
      ++r.consistent;
      break;
    case Verdict::ExtremalEquality:
      ++r.extremal;
      break;
    case Verdict::Violation:
      ++r.violations;
      break;
    }
  }
  return r;
}

std::vector<GroupSpec> filter_catalog(const std::vector<GroupSpec> &catalog,
                                      const std::vector<std::string> &labels) {
  if (labels.empty())
    return catalog;
  std::vector<GroupSpec> out;
  for (const GroupSpec &spec : catalog)
    if (std::find(labels.begin(), labels.end(), spec.label()) != labels.end())
      out.push_back(spec);
  if (out.empty())
    throw ParseError("group filter matches nothing in the catalog");
  return out;
}

Rational d_p_prime_from_data(const GroupData &d, uint64_t p) {
  uint64_t kp = 0;
  for (uint64_t o : d.rep_orders)
    if (o % p != 0)
      ++kp;
  Integer coprime_part = d.order / p_part(d.order, p);
  return Rational(static_cast<unsigned long>(kp)) / Rational(coprime_part);
}

std::vector<uint64_t> data_primes(const GroupData &d) {
  return prime_divisors(d.order);
}

GroupData realize_label(const std::string &label, const SuiteOptions &opt) {
  return realize(parse_group_spec("family:" + label), opt.cache);
}

} // namespace

VerificationReport suite_theorems(const std::vector<GroupSpec> &catalog,
                                  const SuiteOptions &opt) {
  std::vector<GroupSpec> specs = filter_catalog(catalog, opt.group_filter);
  GroupData ref_d8 = realize_label("D(8)", opt);
  GroupData ref_s3 = realize_label("S(3)", opt);
  GroupData ref_a4 = realize_label("A(4)", opt);
  GroupData ref_a5 = realize_label("A(5)", opt);
  const Rational &shift = opt.threshold_shift;

  std::vector<CheckRow> rows;
  for (const GroupSpec &spec : specs) {
    GroupData d = realize(spec, opt.cache);
    std::vector<uint64_t> primes = data_primes(d);
    for (uint64_t h = 1; h <= opt.max_genus; ++h) {
      Rational q = invariant_q(d.degrees, h);
      Rational qt = invariant_q_tilde(d.class_sizes, d.order, h);
      rows.push_back(theorem_row("1.1a", d.label, h, q,
                                 invariant_q(ref_d8.degrees, h) - shift,
                                 d.structure.abelian));
      rows.push_back(theorem_row("1.1b", d.label, h, q,
                                 invariant_q(ref_s3.degrees, h) - shift,
                                 d.structure.nilpotent));
      rows.push_back(theorem_row("1.1c", d.label, h, q,
                                 invariant_q(ref_a4.degrees, h) - shift,
                                 d.structure.supersolvable));
      rows.push_back(theorem_row("1.1d", d.label, h, q,
                                 invariant_q(ref_a5.degrees, h) - shift,
                                 d.structure.solvable));
      rows.push_back(theorem_row(
          "1.4a", d.label, h, qt,
          invariant_q_tilde(ref_d8.class_sizes, ref_d8.order, h) - shift,
          d.structure.abelian));
      rows.push_back(theorem_row(
          "1.4b", d.label, h, qt,
          invariant_q_tilde(ref_s3.class_sizes, ref_s3.order, h) - shift,
          d.structure.nilpotent));
      rows.push_back(theorem_row(
          "1.4c", d.label, h, qt,
          invariant_q_tilde(ref_a4.class_sizes, ref_a4.order, h) - shift,
          d.structure.supersolvable));
      rows.push_back(theorem_row(
          "1.4d", d.label, h, qt,
          invariant_q_tilde(ref_a5.class_sizes, ref_a5.order, h) - shift,
          d.structure.solvable));
      for (uint64_t p : primes) {
        rows.push_back(theorem_row("1.2", d.label + " p=" + std::to_string(p),
                                   h, q, gamma_threshold(h, p) - shift,
                                   d.structure.p_closed.at(p)));
        rows.push_back(theorem_row(
            "1.5", d.label + " p=" + std::to_string(p), h, qt,
            gamma_tilde_threshold(h, p) - shift, d.structure.p_closed.at(p)));
      }
    }
    // Brauer-side criterion at genus 1 against the tight 1/(p-1) bound.
    for (uint64_t p : primes) {
      if (p == 2)
        continue;
      Rational rhs = Rational(1) / Rational(static_cast<unsigned long>(p - 1));
      rows.push_back(theorem_row("1.3-genus1",
                                 d.label + " p=" + std::to_string(p), 1,
                                 d_p_prime_from_data(d, p), rhs - shift,
                                 d.structure.p_solvable.at(p)));
    }
  }
  return assemble("theorems", std::move(rows));
}

VerificationReport suite_remarks(const SuiteOptions &opt) {
  GroupData a5 = realize_label("A(5)", opt);
  GroupData d8 = realize_label("D(8)", opt);
  GroupData s6 = realize_label("S(6)", opt);
  GroupData pgl = realize_label("PGL2(9)", opt);
  GroupData e11 = realize_label("extraspecial+(11)", opt);
  GroupData e59 = realize_label("extraspecial+(59)", opt);

  auto q = [](const GroupData &g, uint64_t h) {
    return invariant_q(g.degrees, h);
  };
  auto qt = [](const GroupData &g, uint64_t h) {
    return invariant_q_tilde(g.class_sizes, g.order, h);
  };
  auto dd = [](const GroupData &g) {
    return invariant_d(g.class_count(), g.order);
  };

  std::vector<CheckRow> rows;
  // (i) equal commuting probability, separated at higher genus
  rows.push_back(assertion_row("remark1(i).d", "S(6) vs PGL2(9)", 1,
                               to_string(dd(s6)), to_string(dd(pgl)),
                               dd(s6) == dd(pgl)));
  for (uint64_t h = 2; h <= 3; ++h) {
    rows.push_back(assertion_row("remark1(i).q", "S(6) vs PGL2(9)", h,
                                 to_string(q(s6, h)), to_string(q(pgl, h)),
                                 q(s6, h) > q(pgl, h)));
    rows.push_back(assertion_row("remark1(i).qtilde", "S(6) vs PGL2(9)", h,
                                 to_string(qt(s6, h)), to_string(qt(pgl, h)),
                                 qt(s6, h) > qt(pgl, h)));
  }
  // (ii) genus crossing against the order-59^3 extraspecial group
  for (uint64_t h = 1; h <= 6; ++h) {
    bool want_bigger = h <= 3;
    bool holds = want_bigger ? q(a5, h) > q(e59, h) : q(a5, h) < q(e59, h);
    rows.push_back(assertion_row("remark1(ii).q",
                                 "A(5) vs extraspecial+(59)", h,
                                 to_string(q(a5, h)), to_string(q(e59, h)),
                                 holds));
  }
  // (iii) dual comparison at 11^3
  rows.push_back(assertion_row("remark1(iii).d", "A(5) vs extraspecial+(11)",
                               1, to_string(dd(a5)), to_string(dd(e11)),
                               dd(a5) < dd(e11)));
  for (uint64_t h = 2; h <= 8; ++h)
    rows.push_back(assertion_row("remark1(iii).qtilde",
                                 "A(5) vs extraspecial+(11)", h,
                                 to_string(qt(a5, h)), to_string(qt(e11, h)),
                                 qt(a5, h) > qt(e11, h)));
  // (iv) monotone convergence of q_h to 1/|G'|
  for (const GroupData *g : {&a5, &d8}) {
    Rational lim = limit_value(g->degrees);
    for (uint64_t h = 1; h <= 5; ++h) {
      Rational gap_h = abs(q(*g, h) - lim);
      Rational gap_next = abs(q(*g, h + 1) - lim);
      rows.push_back(assertion_row("remark1(iv).limit", g->label, h,
                                   to_string(gap_h), to_string(gap_next),
                                   gap_h > gap_next));
    }
  }
  return assemble("remarks", std::move(rows));
}

namespace {

// Lower central series termination (gamma_{i+1} = [gamma_i, G]).
bool lower_central_reaches_trivial(const PermGroup &g) {
  PermGroup cur = g;
  while (true) {
    std::vector<Permutation> comms;
    for (const Permutation &a : cur.generators())
      for (const Permutation &b : g.generators())
        comms.push_back(a.inverse() * b.inverse() * a * b);
    PermGroup next = normal_closure(g, comms).group;
    if (next.is_trivial())
      return true;
    if (next.order() == cur.order())
      return false;
    cur = next;
  }
}

} // namespace

VerificationReport suite_lemmas(const std::vector<GroupSpec> &catalog,
                                const SuiteOptions &opt) {
  std::vector<GroupSpec> specs = filter_catalog(catalog, opt.group_filter);
  std::vector<CheckRow> rows;

  std::vector<GroupData> all;
  for (const GroupSpec &spec : specs)
    all.push_back(realize(spec, opt.cache));

  for (const GroupData &d : all) {
    // scaling identity q_h = Q_h / |G|^{2h-1}
    {
      bool ok = true;
      uint64_t bad_h = 0;
      std::string lhs, rhs;
      for (uint64_t h = 0; h <= 5 && ok; ++h) {
        Rational a = invariant_q(d.degrees, h);
        Rational b = invariant_Q(d.degrees, h) /
                     pow_rational(Rational(d.order),
                                  2 * static_cast<long>(h) - 1);
        if (a != b) {
          ok = false;
          bad_h = h;
          lhs = to_string(a);
          rhs = to_string(b);
        }
      }
      rows.push_back(
          assertion_row("lemma:scaling_identity", d.label, bad_h, lhs, rhs, ok));
    }
    // monotone decrease in the genus
    {
      bool ok = true;
      uint64_t bad_h = 0;
      std::string lhs, rhs;
      for (uint64_t h = 0; h <= 5 && ok; ++h) {
        Rational a = invariant_q(d.degrees, h);
        Rational b = invariant_q(d.degrees, h + 1);
        Rational at = invariant_q_tilde(d.class_sizes, d.order, h);
        Rational bt = invariant_q_tilde(d.class_sizes, d.order, h + 1);
        if (a < b || at < bt) {
          ok = false;
          bad_h = h;
          lhs = a < b ? to_string(a) : to_string(at);
          rhs = a < b ? to_string(b) : to_string(bt);
        }
      }
      rows.push_back(assertion_row("lemma:genus_monotonicity", d.label, bad_h,
                                   lhs, rhs, ok));
    }
    // Lescot: d(G) > 1/4 forces |G'| <= 3/(4d-1)
    {
      Rational dv = invariant_d(d.class_count(), d.order);
      if (dv > Rational(1, 4)) {
        Rational derived_order =
            Rational(d.order) /
            Rational(static_cast<unsigned long>(d.degrees.linear_count));
        Rational bound = Rational(3) / (Rational(4) * dv - 1);
        rows.push_back(assertion_row("lemma:lescot_bound", d.label, 1,
                                     to_string(derived_order),
                                     to_string(bound),
                                     derived_order <= bound));
      }
    }
    // implication chain of the structure report
    {
      const StructureReport &s = d.structure;
      bool chain = (!s.abelian || s.nilpotent) &&
                   (!s.nilpotent || s.supersolvable) &&
                   (!s.supersolvable || s.solvable);
      bool all_closed = true;
      for (const auto &[p, closed] : s.p_closed)
        all_closed = all_closed && closed;
      if (all_closed)
        chain = chain && s.nilpotent;
      rows.push_back(assertion_row("lemma:implication_chain", d.label, 0, "",
                                   "", chain));
    }
  }

  // simple-group bound d(G) <= 1/(p+1)
  for (const GroupData &d : all) {
    static const char *simple_labels[] = {"A(5)", "A(6)", "PSL2(7)",
                                          "PSL2(11)", "PSL2(13)"};
    if (std::find_if(std::begin(simple_labels), std::end(simple_labels),
                     [&](const char *s) { return d.label == s; }) ==
        std::end(simple_labels))
      continue;
    Rational dv = invariant_d(d.class_count(), d.order);
    for (uint64_t p : prime_divisors(d.order)) {
      Rational bound =
          Rational(1) / Rational(static_cast<unsigned long>(p + 1));
      rows.push_back(assertion_row("lemma:simple_group_bound",
                                   d.label + " p=" + std::to_string(p), 1,
                                   to_string(dv), to_string(bound),
                                   dv <= bound));
    }
  }

  // subgroup monotonicity on Sylow and derived subgroups
  for (const GroupData &d : all) {
    if (!d.group || d.order < 2 || d.order > 720)
      continue;
    std::vector<std::pair<std::string, PermGroup>> subs;
    for (uint64_t p : prime_divisors(d.order))
      subs.emplace_back("sylow_" + std::to_string(p),
                        sylow_subgroup(*d.group, p).group);
    subs.emplace_back("derived", derived_subgroup(*d.group).group);
    for (const auto &[name, sub] : subs) {
      if (sub.order() == d.order)
        continue;
      GroupData hd = realize_group(d.label + ":" + name, sub, opt.cache);
      bool ok = true;
      uint64_t bad_h = 0;
      std::string lhs, rhs;
      for (uint64_t h = 1; h <= 4 && ok; ++h) {
        Rational qh = invariant_q(hd.degrees, h);
        Rational qg = invariant_q(d.degrees, h);
        if (qh < qg) {
          ok = false;
          bad_h = h;
          lhs = to_string(qh);
          rhs = to_string(qg);
        }
      }
      rows.push_back(assertion_row("lemma:subgroup_monotonicity",
                                   d.label + ":" + name, bad_h, lhs, rhs, ok));
    }
  }

  // quotient monotonicity for the dual invariant
  for (const GroupData &d : all) {
    if (!d.group || d.order < 2 || d.order > 200)
      continue;
    ClassTable t = conjugacy_classes(*d.group);
    std::vector<Integer> seen;
    for (std::size_t j = 1; j < t.size(); ++j) {
      PermGroup n = normal_closure(*d.group, {t.reps[j]}).group;
      if (n.order() == d.order)
        continue;
      if (std::find(seen.begin(), seen.end(), n.order()) != seen.end())
        continue; // one representative per occurring order is plenty
      seen.push_back(n.order());
      PermGroup quo = quotient(*d.group, n);
      ClassTable tq = conjugacy_classes(quo);
      bool ok = true;
      uint64_t bad_h = 0;
      std::string lhs, rhs;
      for (uint64_t h = 1; h <= 4 && ok; ++h) {
        Rational a = invariant_q_tilde(t.sizes, d.order, h);
        Rational b = invariant_q_tilde(tq.sizes, quo.order(), h);
        if (a > b) {
          ok = false;
          bad_h = h;
          lhs = to_string(a);
          rhs = to_string(b);
        }
      }
      rows.push_back(assertion_row(
          "lemma:quotient_monotonicity",
          d.label + "/N" + n.order().get_str(), bad_h, lhs, rhs, ok));
    }
  }

  // multiplicativity on direct products
  {
    static const std::pair<const char *, const char *> pairs[] = {
        {"S(3)", "S(3)"}, {"A(4)", "C(2)"}, {"D(8)", "C(3)"},
        {"C(6)", "C(4)"}, {"A(5)", "C(2)"}};
    for (const auto &[la, lb] : pairs) {
      GroupData a = realize_label(la, opt);
      GroupData b = realize_label(lb, opt);
      GroupSpec prod = parse_group_spec(std::string("family:direct(") + la +
                                        "," + lb + ")");
      GroupData ab = realize(prod, opt.cache);
      bool ok = true;
      uint64_t bad_h = 0;
      std::string lhs, rhs;
      for (uint64_t h = 1; h <= 4 && ok; ++h) {
        Rational left = invariant_q(ab.degrees, h);
        Rational right =
            invariant_q(a.degrees, h) * invariant_q(b.degrees, h);
        if (left != right) {
          ok = false;
          bad_h = h;
          lhs = to_string(left);
          rhs = to_string(right);
        }
      }
      rows.push_back(assertion_row("lemma:multiplicativity", ab.label, bad_h,
                                   lhs, rhs, ok));
    }
  }

  // nilpotency agrees with lower-central-series termination
  for (const GroupData &d : all) {
    if (!d.group || d.order > 100)
      continue;
    bool terminates = lower_central_reaches_trivial(*d.group);
    rows.push_back(assertion_row("lemma:lower_central_check", d.label, 0,
                                 terminates ? "terminates" : "stalls",
                                 d.structure.nilpotent ? "nilpotent"
                                                       : "not nilpotent",
                                 terminates == d.structure.nilpotent));
  }

  return assemble("lemmas", std::move(rows));
}

FactorizationReport explore_factorization(const PermGroup &g,
                                          const PermGroup &n,
                                          const std::string &group_label,
                                          const DegreeCache *cache) {
  if (!is_normal(g, n))
    throw ParseError("subgroup is not normal");
  FactorizationReport r;
  r.group_label = group_label;
  r.normal_label = "N(order " + n.order().get_str() + ")";
  r.group_order = g.order();
  r.normal_order = n.order();
  r.quotient_order = g.order() / n.order();
  PermGroup quo = quotient(g, n);
  DegreeMultiset dg =
      cache ? cached_character_degrees(g, *cache) : character_degrees(g);
  DegreeMultiset dn =
      cache ? cached_character_degrees(n, *cache) : character_degrees(n);
  DegreeMultiset dq =
      cache ? cached_character_degrees(quo, *cache) : character_degrees(quo);
  for (uint64_t h = 1; h <= 5; ++h) {
    r.genus.push_back(h);
    r.q_group.push_back(invariant_q(dg, h));
    r.q_normal.push_back(invariant_q(dn, h));
    r.q_quotient.push_back(invariant_q(dq, h));
    r.holds.push_back(r.q_group.back() <=
                      r.q_normal.back() * r.q_quotient.back());
  }
  return r;
}

std::string report_to_json(const VerificationReport &r) {
  ordered_json j;
  j["suite"] = r.suite;
  j["version"] = r.version;
  ordered_json results = ordered_json::array();
  for (const CheckRow &row : r.results) {
    ordered_json o;
    o["theorem"] = row.theorem;
    o["group"] = row.group;
    o["h"] = row.h;
    o["lhs"] = row.lhs;
    o["rhs"] = row.rhs;
    o["hypothesis"] = row.hypothesis;
    o["conclusion"] = row.conclusion;
    o["verdict"] = verdict_name(row.verdict);
    results.push_back(std::move(o));
  }
  j["results"] = std::move(results);
  j["summary"] = ordered_json{{"consistent", r.consistent},
                              {"extremal", r.extremal},
                              {"violations", r.violations}};
  return j.dump(2) + "\n";
}

VerificationReport report_from_json(const std::string &text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception &e) {
    throw ParseError(std::string("bad report JSON: ") + e.what());
  }
  VerificationReport r;
  try {
    r.suite = j.at("suite").get<std::string>();
    r.version = j.at("version").get<std::string>();
    for (const auto &o : j.at("results")) {
      CheckRow row;
      row.theorem = o.at("theorem").get<std::string>();
      row.group = o.at("group").get<std::string>();
      row.h = o.at("h").get<uint64_t>();
      row.lhs = o.at("lhs").get<std::string>();
      row.rhs = o.at("rhs").get<std::string>();
      row.hypothesis = o.at("hypothesis").get<bool>();
      row.conclusion = o.at("conclusion").get<bool>();
      row.verdict = verdict_from_name(o.at("verdict").get<std::string>());
      r.results.push_back(std::move(row));
    }
    r.consistent = j.at("summary").at("consistent").get<uint64_t>();
    r.extremal = j.at("summary").at("extremal").get<uint64_t>();
    r.violations = j.at("summary").at("violations").get<uint64_t>();
  } catch (const ordered_json::exception &e) {
    throw ParseError(std::string("bad report JSON: ") + e.what());
  }
  return r;
}

std::string report_to_text(const VerificationReport &r) {
  std::string out = "suite " + r.suite + " (version " + r.version + ", " +
                    r.timestamp + ")\n";
  for (const CheckRow &row : r.results) {
    out += "  [" + std::string(verdict_name(row.verdict)) + "] " +
           row.theorem + "  " + row.group;
    if (row.h)
      out += "  h=" + std::to_string(row.h);
    if (!row.lhs.empty())
      out += "  lhs=" + row.lhs + "  rhs=" + row.rhs;
    out += "\n";
  }
  out += "summary: " + std::to_string(r.consistent) + " consistent, " +
         std::to_string(r.extremal) + " extremal, " +
         std::to_string(r.violations) + " violations\n";
  return out;
}

} // namespace ginv
