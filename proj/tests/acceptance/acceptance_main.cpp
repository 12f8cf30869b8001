// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failures.  Every value check is exact; the timing budgets are asserted
// alongside the values.
#include "ginv/catalog.hpp"
#include "ginv/chartab.hpp"
#include "ginv/classify.hpp"
#include "ginv/degree_cache.hpp"
#include "ginv/group_data.hpp"
#include "ginv/group_ops.hpp"
#include "ginv/invariants.hpp"
#include "ginv/tqft.hpp"
#include "ginv/verify.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace ginv;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string &what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

PermGroup family(const std::string &text) {
  return make_group(parse_group_spec("family:" + text));
}

GroupData realize_family(const std::string &text, const DegreeCache &cache) {
  return realize(parse_group_spec("family:" + text), &cache);
}

std::vector<uint64_t> flat_degrees(const DegreeMultiset &d) {
  std::vector<uint64_t> out;
  for (auto [deg, mult] : d.entries)
    for (uint64_t i = 0; i < mult; ++i)
      out.push_back(deg);
  return out;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string &args) {
  std::string cmd = std::string(GINV_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE *pipe = ::popen(cmd.c_str(), "r");
  if (!pipe)
    return r;
  char buf[4096];
  std::size_t n;
  while ((n = ::fread(buf, 1, sizeof buf, pipe)) > 0)
    r.out.append(buf, n);
  int status = ::pclose(pipe);
  if (status != -1 && WIFEXITED(status))
    r.exit_code = WEXITSTATUS(status);
  return r;
}

} // namespace

int main() {
  DegreeCache cache; // GINV_CACHE_DIR or the default location
  int failures = 0;
  auto criterion = [&](int number, const char *title, double budget_seconds,
                       const std::function<void(Check &)> &body) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (const std::exception &e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double dt = seconds_since(t0);
    c.expect(dt < budget_seconds, "over time budget");
    std::printf("[%s] %d. %s (%.2fs, budget %.0fs)%s%s\n",
                c.ok ? "PASS" : "FAIL", number, title, dt, budget_seconds,
                c.detail.empty() ? "" : " -- ", c.detail.c_str());
    std::fflush(stdout);
    if (!c.ok)
      ++failures;
  };

  criterion(1, "character-degree oracle for the five reference groups", 5.0,
            [&](Check &c) {
              const std::pair<const char *, std::vector<uint64_t>> want[] = {
                  {"D(8)", {1, 1, 1, 1, 2}},
                  {"S(3)", {1, 1, 2}},
                  {"A(4)", {1, 1, 1, 3}},
                  {"A(5)", {1, 3, 3, 4, 5}},
                  {"SL2(5)", {1, 2, 2, 3, 3, 4, 4, 5, 6}},
              };
              for (const auto &[label, degs] : want) {
                auto t0 = std::chrono::steady_clock::now();
                DegreeMultiset d = character_degrees(family(label));
                c.expect(seconds_since(t0) < 1.0,
                         std::string(label) + " over 1s");
                c.expect(flat_degrees(d) == degs,
                         std::string(label) + " degrees differ");
              }
            });

  criterion(2, "exact reproduction of the pinned rational values", 5.0,
            [&](Check &c) {
              GroupData d8 = realize_family("D(8)", cache);
              GroupData s3 = realize_family("S(3)", cache);
              GroupData a4 = realize_family("A(4)", cache);
              GroupData a5 = realize_family("A(5)", cache);
              c.expect(invariant_q(d8.degrees, 1) == Rational(5, 8),
                       "q_1(D8)");
              c.expect(invariant_q(a5.degrees, 2) == Rational(4769, 216000),
                       "q_2(A5)");
              c.expect(invariant_q_tilde(a4.class_sizes, a4.order, 2) ==
                           Rational(11, 72),
                       "qtilde_2(A4)");
              c.expect(invariant_q_tilde(s3.class_sizes, s3.order, 2) ==
                           Rational(11, 36),
                       "qtilde_2(S3)");
              c.expect(invariant_d(a5.class_count(), a5.order) ==
                           Rational(1, 12),
                       "d(A5)");
              c.expect(invariant_d(a4.class_count(), a4.order) ==
                           Rational(1, 3),
                       "d(A4)");
              for (uint64_t p : {3ull, 5ull, 11ull, 59ull}) {
                GroupData e = realize_family(
                    "extraspecial+(" + std::to_string(p) + ")", cache);
                c.expect(invariant_d(e.class_count(), e.order) ==
                             Rational(p * p + p - 1) / Rational(p * p * p),
                         "d(E(" + std::to_string(p) + "^3))");
              }
            });

  criterion(3, "closed forms for q_h and qtilde_h, h in 1..6", 10.0,
            [&](Check &c) {
              PermGroup d8 = family("D(8)");
              PermGroup s3 = family("S(3)");
              PermGroup a4 = family("A(4)");
              DegreeMultiset dd8 = character_degrees(d8);
              DegreeMultiset ds3 = character_degrees(s3);
              DegreeMultiset da4 = character_degrees(a4);
              ClassTable td8 = conjugacy_classes(d8);
              ClassTable ts3 = conjugacy_classes(s3);
              ClassTable ta4 = conjugacy_classes(a4);
              for (uint64_t h = 1; h <= 6; ++h) {
                long e = 2 * static_cast<long>(h);
                long f = static_cast<long>(h);
                Rational half = Rational(1, 2);
                c.expect(invariant_q(dd8, h) ==
                             half * (1 + pow_rational(half, e)),
                         "q_h(D8)");
                c.expect(invariant_q(ds3, h) ==
                             Rational(1, 3) * (1 + pow_rational(half, e - 1)),
                         "q_h(S3)");
                c.expect(invariant_q(da4, h) ==
                             Rational(1, 4) *
                                 (1 + pow_rational(Rational(1, 3), e - 1)),
                         "q_h(A4)");
                c.expect(invariant_q_tilde(td8.sizes, d8.order(), h) ==
                             Rational(1, 4) *
                                 (1 + Rational(3) * pow_rational(half, f)),
                         "qtilde_h(D8)");
                c.expect(invariant_q_tilde(ts3.sizes, s3.order(), h) ==
                             Rational(1, 6) *
                                 (1 + pow_rational(half, f - 1) +
                                  pow_rational(Rational(1, 3), f - 1)),
                         "qtilde_h(S3)");
                c.expect(invariant_q_tilde(ta4.sizes, a4.order(), h) ==
                             Rational(1, 12) *
                                 (1 + pow_rational(Rational(1, 3), f - 1) +
                                  Rational(2) *
                                      pow_rational(Rational(1, 4), f - 1)),
                         "qtilde_h(A4)");
              }
            });

  criterion(4, "tightness of the p-closed threshold on Mersenne groups", 10.0,
            [&](Check &c) {
              const std::pair<uint64_t, uint64_t> cases[] = {
                  {2, 3}, {3, 7}, {5, 31}};
              for (auto [f, p] : cases) {
                PermGroup g =
                    family("frobenius_mersenne(" + std::to_string(f) + ")");
                DegreeMultiset d = character_degrees(g);
                for (uint64_t h = 1; h <= 4; ++h)
                  c.expect(invariant_q(d, h) ==
                               beta_threshold(h, p) /
                                   Rational(static_cast<unsigned long>(p + 1)),
                           "q_h at f=" + std::to_string(f));
                StructureReport s = classify_group(g);
                c.expect(!s.p_closed.at(p),
                         "f=" + std::to_string(f) + " must not be p-closed");
              }
            });

  criterion(5, "genus crossings and the equal-commuting-probability pair",
            60.0, [&](Check &c) {
              GroupData a5 = realize_family("A(5)", cache);
              GroupData e59 = realize_family("extraspecial+(59)", cache);
              GroupData e11 = realize_family("extraspecial+(11)", cache);
              GroupData s6 = realize_family("S(6)", cache);
              GroupData pgl = realize_family("PGL2(9)", cache);
              auto q = [](const GroupData &g, uint64_t h) {
                return invariant_q(g.degrees, h);
              };
              auto qt = [](const GroupData &g, uint64_t h) {
                return invariant_q_tilde(g.class_sizes, g.order, h);
              };
              for (uint64_t h = 1; h <= 3; ++h)
                c.expect(q(a5, h) > q(e59, h), "crossing below h=4");
              for (uint64_t h = 4; h <= 6; ++h)
                c.expect(q(a5, h) < q(e59, h), "crossing above h=4");
              for (uint64_t h = 2; h <= 8; ++h)
                c.expect(qt(a5, h) > qt(e11, h), "qtilde comparison");
              c.expect(invariant_d(a5.class_count(), a5.order) <
                           invariant_d(e11.class_count(), e11.order),
                       "d(A5) < d(E(11^3))");
              c.expect(invariant_d(s6.class_count(), s6.order) ==
                           invariant_d(pgl.class_count(), pgl.order),
                       "d agrees on the order-720 pair");
              for (uint64_t h = 2; h <= 3; ++h) {
                c.expect(q(s6, h) != q(pgl, h), "q separation");
                c.expect(qt(s6, h) != qt(pgl, h), "qtilde separation");
              }
            });

  criterion(6, "theorem sweep is clean and fails loudly when perturbed",
            300.0, [&](Check &c) {
              RunResult clean =
                  run_cli("--format json verify --suite theorems --max-genus 4");
              c.expect(clean.exit_code == 0, "clean sweep exit code");
              try {
                auto j = nlohmann::json::parse(clean.out);
                c.expect(j.at("summary").at("violations") == 0,
                         "violations reported");
                c.expect(!j.at("results").empty(), "empty report");
              } catch (const std::exception &) {
                c.expect(false, "report is not valid JSON");
              }
              RunResult forced = run_cli(
                  "verify --suite theorems --groups 'S(3)' --max-genus 2 "
                  "--threshold-shift 1/1000000 >/dev/null");
              c.expect(forced.exit_code == 1, "perturbed sweep must exit 1");
            });

  criterion(7, "surface evaluation equals the character sums", 120.0,
            [&](Check &c) {
              for (const GroupSpec &spec : default_catalog()) {
                Integer order = spec_order(spec);
                if (order <= 720) {
                  GroupData d = realize(spec, &cache);
                  for (uint64_t h = 0; h <= 4; ++h)
                    c.expect(evaluate_closed(genus_word(h), d.degrees) ==
                                 invariant_Q(d.degrees, h),
                             spec.label() + " genus " + std::to_string(h));
                }
                if (order <= 1000 && !uses_closed_form(spec)) {
                  PermGroup g = make_group(spec);
                  ClassTable t = conjugacy_classes(g);
                  ClassMatrices a = structure_constants(g, t);
                  CentralCharactersModL cc = central_characters(g, t);
                  FrobeniusAlgebraModL f = build_frobenius(t, cc, g.order());
                  c.expect(idempotents_orthogonal(f, a),
                           spec.label() + " orthogonality");
                  c.expect(idempotents_sum_to_identity(f),
                           spec.label() + " identity decomposition");
                  c.expect(linear_form_matches(f, a),
                           spec.label() + " trace form");
                }
              }
            });

  criterion(8, "genus-1 modular value on the projective linear family", 30.0,
            [&](Check &c) {
              for (uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
                PermGroup g = family("PSL2(" + std::to_string(p) + ")");
                ClassTable t = conjugacy_classes(g);
                c.expect(invariant_d_p_prime(t, g.order(), p) ==
                             Rational(1, p - 1),
                         "p=" + std::to_string(p));
              }
            });

  criterion(9, "lemma property batteries over the catalog", 120.0,
            [&](Check &c) {
              SuiteOptions opt;
              opt.cache = &cache;
              VerificationReport r = suite_lemmas(default_catalog(), opt);
              c.expect(r.violations == 0, "lemma violations");
              c.expect(!r.results.empty(), "empty lemma report");
            });

  std::printf("%d of 9 criteria passed\n", 9 - failures);
  return failures;
}
