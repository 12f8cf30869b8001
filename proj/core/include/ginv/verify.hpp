#pragma once

#include "ginv/catalog.hpp"
#include "ginv/degree_cache.hpp"
#include "ginv/group_data.hpp"
#include "ginv/rational.hpp"

#include <string>
#include <vector>

namespace ginv {

// VIOLATION iff the (strict) hypothesis holds and the conclusion fails;
// EXTREMAL_EQUALITY iff lhs equals the threshold exactly.
enum class Verdict { Consistent, ExtremalEquality, Violation };

const char *verdict_name(Verdict v);

struct CheckRow {
  std::string theorem; // "1.1a".."1.5", "remark1(i)".., "lemma:..."
  std::string group;
  uint64_t h = 0;
  std::string lhs;
  std::string rhs;
  bool hypothesis = false;
  bool conclusion = false;
  Verdict verdict = Verdict::Consistent;
};

struct VerificationReport {
  std::string suite;
  std::string version;
  std::string timestamp;
  std::vector<CheckRow> results;
  uint64_t consistent = 0;
  uint64_t extremal = 0;
  uint64_t violations = 0;
};

struct SuiteOptions {
  uint64_t max_genus = 4;
  std::vector<std::string> group_filter; // spec labels; empty = whole catalog
  // Test hook: subtracted from every theorem threshold, so a positive shift
  // must surface VIOLATION rows at the extremal groups.
  Rational threshold_shift = 0;
  const DegreeCache *cache = nullptr;
};

// Theorem sweep over a catalog: hypothesis inequalities are strict, equality
// at the threshold is reported as EXTREMAL_EQUALITY.  The p-parameterized
// criteria sweep the primes dividing each group order; the Brauer-side
// criterion runs at genus 1 only, against the 1/(p-1) bound, where it needs
// no Brauer degree data.
VerificationReport suite_theorems(const std::vector<GroupSpec> &catalog,
                                  const SuiteOptions &opt);

// Fixed comparisons between specific group pairs: equal commuting
// probability with separated higher invariants, the genus crossing against
// the order-59^3 extraspecial group, the dual-invariant comparison at 11^3,
// and monotone convergence of q_h to 1/|G'|.
VerificationReport suite_remarks(const SuiteOptions &opt);

// Property batteries: scaling identity, genus monotonicity, subgroup and
// quotient monotonicity, multiplicativity on direct products, the Lescot
// bound, the simple-group commuting-probability bound, the implication
// chain, and the lower-central-series cross-check.
VerificationReport suite_lemmas(const std::vector<GroupSpec> &catalog,
                                const SuiteOptions &opt);

// Informational only (open question): does q_h(G) <= q_h(N) q_h(G/N)?
struct FactorizationReport {
  std::string group_label;
  std::string normal_label;
  Integer group_order, normal_order, quotient_order;
  std::vector<uint64_t> genus;
  std::vector<Rational> q_group, q_normal, q_quotient;
  std::vector<bool> holds;
};

FactorizationReport explore_factorization(const PermGroup &g,
                                          const PermGroup &n,
                                          const std::string &group_label,
                                          const DegreeCache *cache = nullptr);

std::string report_to_json(const VerificationReport &r);
VerificationReport report_from_json(const std::string &text);
std::string report_to_text(const VerificationReport &r);

} // namespace ginv
