#include "ginv/invariants.hpp"

#include "ginv/errors.hpp"
#include "ginv/modular.hpp"

#include <cassert>
#include <istream>
#include <sstream>

namespace ginv {

Rational Q_from_exponent(const DegreeMultiset &d, long e) {
  Rational sum = 0;
  Rational order(d.group_order);
  for (const auto &[deg, m] : d.entries) {
    Rational base = order / Rational(static_cast<unsigned long>(deg));
    sum += Rational(static_cast<unsigned long>(m)) * pow_rational(base, e);
  }
  return sum;
}

Rational q_from_exponent(const DegreeMultiset &d, long e) {
  Rational sum = 0;
  for (const auto &[deg, m] : d.entries)
    sum += Rational(static_cast<unsigned long>(m)) *
           pow_rational(Rational(static_cast<unsigned long>(deg)), -e);
  return sum / Rational(d.group_order);
}

Rational q_tilde_from_exponent(const std::vector<uint64_t> &class_sizes,
                               const Integer &order, long e) {
  Rational sum = 0;
  for (uint64_t size : class_sizes)
    sum += pow_rational(Rational(static_cast<unsigned long>(size)), -e);
  return sum / Rational(order);
}

Rational invariant_Q(const DegreeMultiset &d, uint64_t h) {
  return Q_from_exponent(d, 2 * static_cast<long>(h) - 2);
}

Rational invariant_q(const DegreeMultiset &d, uint64_t h) {
  return q_from_exponent(d, 2 * static_cast<long>(h) - 2);
}

Rational invariant_q_tilde(const std::vector<uint64_t> &class_sizes,
                           const Integer &order, uint64_t h) {
  return q_tilde_from_exponent(class_sizes, order,
                               static_cast<long>(h) - 1);
}

Rational invariant_d(std::size_t class_count, const Integer &order) {
  return Rational(static_cast<unsigned long>(class_count)) / Rational(order);
}

Rational invariant_d_p_prime(const ClassTable &t, const Integer &order,
                             uint64_t p) {
  Integer coprime_part = order / p_part(order, p);
  return Rational(static_cast<unsigned long>(p_regular_class_count(t, p))) /
         Rational(coprime_part);
}

Rational limit_value(const DegreeMultiset &d) {
  return Rational(static_cast<unsigned long>(d.linear_count)) /
         Rational(d.group_order);
}

uint64_t BrauerData::class_count() const {
  uint64_t k = 0;
  for (const auto &[deg, m] : entries)
    k += m;
  return k;
}

BrauerData read_brauer_file(std::istream &in) {
  std::string header, label, prime_line, entries_line;
  if (!std::getline(in, header) || header != "GINVBRAUER 1")
    throw ParseError("Brauer file must start with 'GINVBRAUER 1'");
  if (!std::getline(in, label) || label.empty())
    throw ParseError("Brauer file missing group label");
  if (!std::getline(in, prime_line) || !std::getline(in, entries_line))
    throw ParseError("Brauer file truncated");
  BrauerData b;
  b.label = label;
  try {
    b.prime = std::stoull(prime_line);
  } catch (...) {
    throw ParseError("bad prime in Brauer file: " + prime_line);
  }
  if (!is_prime(b.prime))
    throw ParseError("Brauer file prime is not prime: " + prime_line);
  std::istringstream es(entries_line);
  std::string pair;
  uint64_t prev = 0;
  while (es >> pair) {
    std::size_t colon = pair.find(':');
    if (colon == std::string::npos)
      throw ParseError("bad degree:multiplicity pair: " + pair);
    uint64_t d, m;
    try {
      d = std::stoull(pair.substr(0, colon));
      m = std::stoull(pair.substr(colon + 1));
    } catch (...) {
      throw ParseError("bad degree:multiplicity pair: " + pair);
    }
    if (d == 0 || m == 0 || d <= prev)
      throw ParseError("degrees must be positive and strictly sorted");
    prev = d;
    b.entries.emplace_back(d, m);
  }
  if (b.entries.empty())
    throw ParseError("Brauer file has no degrees");
  return b;
}

Rational invariant_q_p_prime_genus1(const ClassTable &t, const Integer &order,
                                    uint64_t p) {
  return invariant_d_p_prime(t, order, p);
}

Rational invariant_q_p_prime(const BrauerData &b, const Integer &order,
                             uint64_t h) {
  if (h == 0)
    throw ParseError("q_{h,p'} needs genus h >= 1");
  Integer coprime_part = order / p_part(order, b.prime);
  Rational sum = 0;
  long e = 2 * static_cast<long>(h) - 2;
  for (const auto &[deg, m] : b.entries)
    sum += Rational(static_cast<unsigned long>(m)) *
           pow_rational(Rational(static_cast<unsigned long>(deg)), -e);
  return sum / Rational(coprime_part);
}

namespace {

Rational rational_power(uint64_t base, long e) {
  return pow_rational(Rational(static_cast<unsigned long>(base)), e);
}

} // namespace

Rational beta_threshold(uint64_t h, uint64_t p) {
  return Rational(1) + rational_power(p, -(2 * static_cast<long>(h) - 1));
}

Rational gamma_threshold(uint64_t h, uint64_t p) {
  return beta_threshold(h, p) /
         Rational(static_cast<unsigned long>(p + 1));
}

Rational beta_tilde_threshold(uint64_t h, uint64_t p) {
  Rational one_over_p = rational_power(p, -1);
  Rational mid = rational_power(p, -static_cast<long>(h));
  Rational last = Rational(static_cast<unsigned long>(p - 1)) /
                  (Rational(static_cast<unsigned long>(p)) *
                   rational_power(p + 1, static_cast<long>(h) - 1));
  return one_over_p + mid + last;
}

Rational gamma_tilde_threshold(uint64_t h, uint64_t p) {
  return beta_tilde_threshold(h, p) /
         Rational(static_cast<unsigned long>(p + 1));
}

int QuadValue::compare(const Rational &r) const {
  if (b == 0)
    return sgn(r - a);
  Rational diff = r - a;
  if (diff <= 0)
    return -1;
  Rational lhs = diff * diff;
  Rational rhs = b * b * Rational(static_cast<unsigned long>(rad));
  return sgn(lhs - rhs);
}

std::string QuadValue::to_string() const {
  if (b == 0)
    return ginv::to_string(a);
  return ginv::to_string(a) + " + " + ginv::to_string(b) + "*sqrt(" +
         std::to_string(rad) + ")";
}

QuadValue alpha_threshold(uint64_t h, uint64_t p) {
  if (h == 0 || p < 2)
    throw ParseError("alpha threshold needs h >= 1 and prime p");
  uint64_t d = p - 1;
  Rational t = rational_power(2, 2 * static_cast<long>(h) - 2);
  QuadValue v;
  // alpha/(p-1) = 1/(t d) + sqrt(d)/d^2
  v.a = Rational(1) / (t * Rational(static_cast<unsigned long>(d)));
  v.b = Rational(1) / (Rational(static_cast<unsigned long>(d)) *
                       Rational(static_cast<unsigned long>(d)));
  v.rad = d;
  Integer root;
  Integer rad_z(static_cast<unsigned long>(d));
  mpz_sqrt(root.get_mpz_t(), rad_z.get_mpz_t());
  if (root * root == rad_z) { // fold perfect squares into the rational part
    v.a += v.b * Rational(root);
    v.b = 0;
    v.rad = 0;
  }
  return v;
}

} // namespace ginv
