#include "ginv/catalog.hpp"
#include "ginv/errors.hpp"
#include "ginv/group_ops.hpp"
#include "ginv/invariants.hpp"

#include <doctest.h>

#include <sstream>

using namespace ginv;

namespace {

PermGroup family(const std::string &text) {
  return make_group(parse_group_spec("family:" + text));
}

DegreeMultiset degrees_of(const std::string &label) {
  return character_degrees(family(label));
}

Rational q_of(const std::string &label, uint64_t h) {
  return invariant_q(degrees_of(label), h);
}

Rational q_tilde_of(const std::string &label, uint64_t h) {
  PermGroup g = family(label);
  ClassTable t = conjugacy_classes(g);
  return invariant_q_tilde(t.sizes, g.order(), h);
}

} // namespace

TEST_CASE("anchor values") {
  CHECK(q_of("D(8)", 1) == Rational(5, 8));
  CHECK(q_of("A(5)", 2) == Rational(4769, 216000));
  CHECK(q_of("S(3)", 2) == Rational(3, 8));
  CHECK(invariant_Q(degrees_of("S(3)"), 2) == 81);
  CHECK(q_tilde_of("A(4)", 2) == Rational(11, 72));
  CHECK(q_tilde_of("S(3)", 2) == Rational(11, 36));
}

TEST_CASE("genus zero and one specializations") {
  for (const char *label : {"S(3)", "D(8)", "A(4)", "A(5)"}) {
    PermGroup g = family(label);
    DegreeMultiset d = character_degrees(g);
    ClassTable t = conjugacy_classes(g);
    // sphere: 1/|G|; torus: the class count
    CHECK(invariant_Q(d, 0) == Rational(1) / Rational(g.order()));
    CHECK(invariant_Q(d, 1) == Rational(static_cast<unsigned long>(t.size())));
    // q_1 and the first dual value both equal k/|G|
    Rational dv = invariant_d(t.size(), g.order());
    CHECK(invariant_q(d, 1) == dv);
    CHECK(invariant_q_tilde(t.sizes, g.order(), 1) == dv);
  }
}

TEST_CASE("closed forms for the small anchor groups") {
  for (uint64_t h = 1; h <= 6; ++h) {
    long e = 2 * static_cast<long>(h);
    CHECK(q_of("D(8)", h) ==
          Rational(1, 2) * (1 + pow_rational(Rational(1, 2), e)));
    CHECK(q_of("S(3)", h) ==
          Rational(1, 3) * (1 + pow_rational(Rational(1, 2), e - 1)));
    CHECK(q_of("A(4)", h) ==
          Rational(1, 4) * (1 + pow_rational(Rational(1, 3), e - 1)));
    long f = static_cast<long>(h);
    CHECK(q_tilde_of("D(8)", h) ==
          Rational(1, 4) * (1 + Rational(3) * pow_rational(Rational(1, 2), f)));
    CHECK(q_tilde_of("S(3)", h) ==
          Rational(1, 6) * (1 + pow_rational(Rational(1, 2), f - 1) +
                            pow_rational(Rational(1, 3), f - 1)));
    CHECK(q_tilde_of("A(4)", h) ==
          Rational(1, 12) * (1 + pow_rational(Rational(1, 3), f - 1) +
                             Rational(2) * pow_rational(Rational(1, 4), f - 1)));
  }
}

TEST_CASE("scaling between the two character sums") {
  for (const char *label : {"S(4)", "A(5)", "D(12)"}) {
    DegreeMultiset d = degrees_of(label);
    for (uint64_t h = 0; h <= 5; ++h)
      CHECK(invariant_q(d, h) ==
            invariant_Q(d, h) /
                pow_rational(Rational(d.group_order),
                             2 * static_cast<long>(h) - 1));
  }
}

TEST_CASE("exponent generalization") {
  DegreeMultiset d = degrees_of("A(5)");
  // e = -1 averages the degrees themselves: (1+3+3+4+5)/60
  CHECK(q_from_exponent(d, -1) == Rational(4, 15));
  CHECK(q_from_exponent(d, 0) == Rational(1, 12));
  CHECK(Q_from_exponent(d, 0) == 5);
  // the two sums agree under the degree/order swap
  for (long e = -3; e <= 3; ++e)
    CHECK(Q_from_exponent(d, e) ==
          q_from_exponent(d, e) * pow_rational(Rational(60), e + 1));
}

TEST_CASE("limit of the genus sequence") {
  CHECK(limit_value(degrees_of("A(5)")) == Rational(1, 60));
  CHECK(limit_value(degrees_of("D(8)")) == Rational(1, 2));
  CHECK(limit_value(degrees_of("C(12)")) == 1);
  CHECK(limit_value(degrees_of("S(4)")) == Rational(1, 12));
  // q_h decreases to the limit from above
  DegreeMultiset d = degrees_of("D(8)");
  Rational lim = limit_value(d);
  for (uint64_t h = 1; h <= 6; ++h) {
    CHECK(invariant_q(d, h) > lim);
    CHECK(abs(invariant_q(d, h) - lim) > abs(invariant_q(d, h + 1) - lim));
  }
}

TEST_CASE("commuting probability") {
  CHECK(invariant_d(5, Integer(60)) == Rational(1, 12));
  PermGroup a5 = family("A(5)");
  ClassTable t = conjugacy_classes(a5);
  CHECK(invariant_d(t.size(), a5.order()) == Rational(1, 12));
  PermGroup a4 = family("A(4)");
  CHECK(invariant_d(conjugacy_classes(a4).size(), a4.order()) ==
        Rational(1, 3));
}

TEST_CASE("commuting probability of the extraspecial family") {
  for (uint64_t p : {3ull, 5ull, 11ull}) {
    PermGroup g = family("extraspecial+(" + std::to_string(p) + ")");
    ClassTable t = conjugacy_classes(g);
    CHECK(invariant_d(t.size(), g.order()) ==
          Rational(p * p + p - 1) / Rational(p * p * p));
  }
}

TEST_CASE("p-regular part of the commuting probability") {
  for (uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
    PermGroup g = family("PSL2(" + std::to_string(p) + ")");
    ClassTable t = conjugacy_classes(g);
    CHECK(invariant_d_p_prime(t, g.order(), p) == Rational(1, p - 1));
  }
  // a p-group has trivial p' part
  PermGroup e27 = family("extraspecial+(3)");
  CHECK(invariant_d_p_prime(conjugacy_classes(e27), e27.order(), 3) == 1);
}

TEST_CASE("externally supplied modular degree data") {
  std::istringstream in("GINVBRAUER 1\n"
                        "sample\n"
                        "5\n"
                        "1:1 2:2 4:1\n");
  BrauerData b = read_brauer_file(in);
  CHECK(b.label == "sample");
  CHECK(b.prime == 5);
  CHECK(b.class_count() == 4);
  // exact evaluation of the defining sum at |G| = 60
  CHECK(invariant_q_p_prime(b, Integer(60), 1) == Rational(1, 3));
  CHECK(invariant_q_p_prime(b, Integer(60), 2) == Rational(25, 192));
  CHECK(invariant_q_p_prime(b, Integer(60), 3) == Rational(289, 3072));
}

TEST_CASE("modular degree file validation") {
  auto reject = [](const std::string &text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_brauer_file(in), ParseError);
  };
  reject("");
  reject("WRONG 1\nx\n5\n1:1\n");
  reject("GINVBRAUER 2\nx\n5\n1:1\n");
  reject("GINVBRAUER 1\nx\n6\n1:1\n");       // prime field must be prime
  reject("GINVBRAUER 1\nx\n5\n2:1 1:1\n");   // entries must be sorted
  reject("GINVBRAUER 1\nx\n5\n0:1\n");       // degrees are positive
  reject("GINVBRAUER 1\nx\n5\n1:0\n");       // multiplicities are positive
  reject("GINVBRAUER 1\nx\n5\nnope\n");
}

TEST_CASE("genus one modular value needs only the class table") {
  PermGroup a5 = family("A(5)");
  ClassTable t = conjugacy_classes(a5);
  CHECK(invariant_q_p_prime_genus1(t, a5.order(), 5) == Rational(1, 4));
  CHECK(invariant_q_p_prime_genus1(t, a5.order(), 2) == Rational(4, 15));
}

TEST_CASE("threshold functions") {
  CHECK(beta_threshold(1, 2) == Rational(3, 2));
  CHECK(beta_threshold(2, 3) == Rational(28, 27));
  CHECK(gamma_threshold(2, 3) == Rational(7, 27));
  CHECK(gamma_threshold(2, 3) == q_of("A(4)", 2));
  CHECK(beta_tilde_threshold(2, 3) == Rational(11, 18));
  CHECK(gamma_tilde_threshold(2, 3) == Rational(11, 72));
  CHECK(gamma_tilde_threshold(2, 3) == q_tilde_of("A(4)", 2));
  for (uint64_t h = 1; h <= 4; ++h) {
    CHECK(gamma_threshold(h, 2) == q_of("S(3)", h));
    CHECK(gamma_tilde_threshold(h, 2) == q_tilde_of("S(3)", h));
  }
}

TEST_CASE("quadratic threshold values") {
  // p - 1 a perfect square folds to a rational
  QuadValue a15 = alpha_threshold(1, 5);
  CHECK(a15.is_rational());
  CHECK(a15.compare(Rational(3, 8)) == 0); // 1/4 + 1/8 sqrt(4)
  QuadValue a25 = alpha_threshold(2, 5);
  CHECK(a25.compare(Rational(1, 16) + Rational(1, 8)) == 0);

  // p = 7 leaves sqrt(6) in place
  QuadValue a17 = alpha_threshold(1, 7);
  CHECK_FALSE(a17.is_rational());
  CHECK(a17.compare(Rational(1, 6)) < 0);  // value is above 1/6
  CHECK(a17.compare(Rational(1)) > 0);     // and below 1
  // squeeze: 1/6 + sqrt(6)/36 = 0.2347...
  CHECK(a17.compare(Rational(234, 1000)) < 0);
  CHECK(a17.compare(Rational(235, 1000)) > 0);
  CHECK(a17.to_string().find("sqrt") != std::string::npos);
}
