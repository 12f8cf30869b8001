#include "ginv/catalog.hpp"
#include "ginv/errors.hpp"
#include "ginv/group_ops.hpp"
#include "ginv/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ginv;

namespace {

SuiteOptions small_options() {
  SuiteOptions opt;
  opt.max_genus = 3;
  opt.group_filter = {"S(3)", "A(4)", "A(5)", "D(8)", "C(6)"};
  return opt;
}

bool has_row(const VerificationReport &r, const std::string &theorem,
             const std::string &group, uint64_t h, Verdict v) {
  return std::any_of(r.results.begin(), r.results.end(),
                     [&](const CheckRow &row) {
                       return row.theorem == theorem && row.group == group &&
                              row.h == h && row.verdict == v;
                     });
}

} // namespace

TEST_CASE("verdict names") {
  CHECK(std::string(verdict_name(Verdict::Consistent)) == "consistent");
  CHECK(std::string(verdict_name(Verdict::ExtremalEquality)) ==
        "EXTREMAL_EQUALITY");
  CHECK(std::string(verdict_name(Verdict::Violation)) == "VIOLATION");
}

TEST_CASE("theorem sweep on a small filter") {
  VerificationReport r = suite_theorems(default_catalog(), small_options());
  CHECK(r.suite == "theorems");
  CHECK(r.violations == 0);
  CHECK(r.consistent + r.extremal == r.results.size());
  CHECK(!r.results.empty());

  // the defining groups sit exactly on their own thresholds
  CHECK(has_row(r, "1.1b", "S(3)", 1, Verdict::ExtremalEquality));
  CHECK(has_row(r, "1.1b", "S(3)", 2, Verdict::ExtremalEquality));
  CHECK(has_row(r, "1.1c", "A(4)", 1, Verdict::ExtremalEquality));
  CHECK(has_row(r, "1.1d", "A(5)", 3, Verdict::ExtremalEquality));
  CHECK(has_row(r, "1.2", "S(3) p=2", 1, Verdict::ExtremalEquality));
  CHECK(has_row(r, "1.2", "A(4) p=3", 2, Verdict::ExtremalEquality));
  CHECK(has_row(r, "1.5", "A(4) p=3", 2, Verdict::ExtremalEquality));

  // p sweeps stay inside the primes dividing the order
  for (const CheckRow &row : r.results) {
    if (row.group.find("C(6) p=") != std::string::npos)
      CHECK((row.group == "C(6) p=2" || row.group == "C(6) p=3"));
    if (row.theorem == "1.3-genus1") {
      CHECK(row.h == 1);
      CHECK(row.group.find("p=2") == std::string::npos);
    }
  }

  // rows arrive sorted by (theorem, group, h)
  for (std::size_t i = 1; i < r.results.size(); ++i) {
    const CheckRow &a = r.results[i - 1];
    const CheckRow &b = r.results[i];
    CHECK(std::tie(a.theorem, a.group, a.h) <=
          std::tie(b.theorem, b.group, b.h));
  }
}

TEST_CASE("threshold shift forces violations") {
  SuiteOptions opt = small_options();
  opt.threshold_shift = Rational(1, 1000000);
  VerificationReport r = suite_theorems(default_catalog(), opt);
  // lowering every threshold flips the extremal equalities into strict
  // hypotheses whose conclusions still fail
  CHECK(r.violations > 0);
  CHECK(has_row(r, "1.1b", "S(3)", 1, Verdict::Violation));
}

TEST_CASE("filters that match nothing are an error") {
  SuiteOptions opt;
  opt.group_filter = {"Z(99)"};
  CHECK_THROWS_AS(suite_theorems(default_catalog(), opt), ParseError);
}

TEST_CASE("remark comparisons") {
  SuiteOptions opt;
  VerificationReport r = suite_remarks(opt);
  CHECK(r.suite == "remarks");
  CHECK(r.violations == 0);
  CHECK(!r.results.empty());
  // the order-720 pair shares its commuting probability
  CHECK(has_row(r, "remark1(i).d", "S(6) vs PGL2(9)", 1,
                Verdict::Consistent));
  bool saw_crossing = false;
  for (const CheckRow &row : r.results)
    if (row.theorem == "remark1(ii).q")
      saw_crossing = true;
  CHECK(saw_crossing);
}

TEST_CASE("lemma batteries on a small filter") {
  VerificationReport r = suite_lemmas(default_catalog(), small_options());
  CHECK(r.suite == "lemmas");
  CHECK(r.violations == 0);
  CHECK(!r.results.empty());
  const char *expected[] = {
      "lemma:scaling_identity",    "lemma:genus_monotonicity",
      "lemma:lescot_bound",        "lemma:implication_chain",
      "lemma:subgroup_monotonicity", "lemma:quotient_monotonicity",
      "lemma:multiplicativity",    "lemma:lower_central_check",
  };
  for (const char *id : expected) {
    bool found = std::any_of(
        r.results.begin(), r.results.end(),
        [&](const CheckRow &row) { return row.theorem == id; });
    CHECK_MESSAGE(found, id);
  }
}

TEST_CASE("report json roundtrip is byte identical") {
  VerificationReport r = suite_theorems(default_catalog(), small_options());
  std::string first = report_to_json(r);
  VerificationReport back = report_from_json(first);
  CHECK(report_to_json(back) == first);
  CHECK(back.suite == r.suite);
  CHECK(back.results.size() == r.results.size());
  CHECK(back.violations == r.violations);
  CHECK(back.extremal == r.extremal);
  // summary counters agree with the rows themselves
  uint64_t extremal = 0;
  for (const CheckRow &row : back.results)
    if (row.verdict == Verdict::ExtremalEquality)
      ++extremal;
  CHECK(extremal == back.extremal);
  // schema essentials
  CHECK(first.find("\"suite\"") != std::string::npos);
  CHECK(first.find("\"summary\"") != std::string::npos);
  CHECK(first.find("timestamp") == std::string::npos);
}

TEST_CASE("report json parse errors") {
  CHECK_THROWS_AS(report_from_json("not json"), ParseError);
  CHECK_THROWS_AS(report_from_json("{}"), ParseError);
  CHECK_THROWS_AS(report_from_json("{\"suite\":\"x\"}"), ParseError);
}

TEST_CASE("text report shape") {
  VerificationReport r = suite_theorems(default_catalog(), small_options());
  std::string text = report_to_text(r);
  CHECK(text.find("[consistent") != std::string::npos);
  CHECK(text.find("EXTREMAL_EQUALITY") != std::string::npos);
  CHECK(text.find("summary:") != std::string::npos);
  CHECK(text.find("0 violations") != std::string::npos);
}

TEST_CASE("factorization exploration") {
  PermGroup s3 = make_group(parse_group_spec("family:S(3)"));
  PermGroup a3 = make_group(parse_group_spec("gens:3:(1 2 3)"));
  FactorizationReport f = explore_factorization(s3, a3, "S(3)");
  CHECK(f.group_order == 6);
  CHECK(f.normal_order == 3);
  CHECK(f.quotient_order == 2);
  REQUIRE(f.genus.size() == f.holds.size());
  REQUIRE(!f.genus.empty());
  for (std::size_t i = 0; i < f.genus.size(); ++i) {
    CHECK(f.holds[i]);
    CHECK(f.q_group[i] <= f.q_normal[i] * f.q_quotient[i]);
  }

  // a non-normal subgroup is rejected
  PermGroup flip = make_group(parse_group_spec("gens:3:(1 2)"));
  CHECK_THROWS_AS(explore_factorization(s3, flip, "S(3)"), ParseError);
}
