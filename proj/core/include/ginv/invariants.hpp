#pragma once

#include "ginv/chartab.hpp"
#include "ginv/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ginv {

// Character-side invariants; the exponent e generalizes 2h-2 (integer
// zeta-style exponents are allowed, negative values included).
Rational Q_from_exponent(const DegreeMultiset &d, long e); // sum (|G|/deg)^e
Rational q_from_exponent(const DegreeMultiset &d, long e); // avg deg^-e
// Class-side, exponent generalizes h-1.
Rational q_tilde_from_exponent(const std::vector<uint64_t> &class_sizes,
                               const Integer &order, long e);

Rational invariant_Q(const DegreeMultiset &d, uint64_t h);
Rational invariant_q(const DegreeMultiset &d, uint64_t h);
Rational invariant_q_tilde(const std::vector<uint64_t> &class_sizes,
                           const Integer &order, uint64_t h);

// d(G) = k(G)/|G|, the commuting probability.
Rational invariant_d(std::size_t class_count, const Integer &order);
// d_{p'}(G) = k_{p'}(G)/|G|_{p'}.
Rational invariant_d_p_prime(const ClassTable &t, const Integer &order,
                             uint64_t p);

// lim_h q_h(G) = [G:G']/|G| = 1/|G'|.
Rational limit_value(const DegreeMultiset &d);

// Externally supplied p-Brauer character degrees.  File format:
//   GINVBRAUER 1
//   <group label>
//   <prime>
//   <degree:multiplicity pairs, sorted by degree>
struct BrauerData {
  std::string label;
  uint64_t prime = 0;
  std::vector<std::pair<uint64_t, uint64_t>> entries;

  uint64_t class_count() const;
};

BrauerData read_brauer_file(std::istream &in);

// q_{h,p'}(G) = (1/|G|_{p'}) sum over Brauer characters of phi(1)^-(2h-2).
// h = 1 needs only the p-regular class count and reduces to d_{p'};
// higher genus requires the degree data.
Rational invariant_q_p_prime_genus1(const ClassTable &t, const Integer &order,
                                    uint64_t p);
Rational invariant_q_p_prime(const BrauerData &b, const Integer &order,
                             uint64_t h);

// Threshold functions of genus and prime.
Rational beta_threshold(uint64_t h, uint64_t p);  // 1 + 1/p^{2h-1}
Rational gamma_threshold(uint64_t h, uint64_t p); // beta/(p+1)
// 1/p + 1/p^h + (p-1)/(p(p+1)^{h-1})
Rational beta_tilde_threshold(uint64_t h, uint64_t p);
Rational gamma_tilde_threshold(uint64_t h, uint64_t p); // beta_tilde/(p+1)

// Value a + b*sqrt(rad) with exact comparisons; perfect-square radicands
// fold into the rational part.  Represents alpha(h,p)/(p-1), whose sqrt(p-1)
// does not cancel, so a plain rational cannot hold it.
struct QuadValue {
  Rational a;
  Rational b; // >= 0
  uint64_t rad = 0;

  bool is_rational() const { return b == 0; }
  // sign of (r - value): -1, 0, +1
  int compare(const Rational &r) const;
  std::string to_string() const;
};

// alpha(h,p)/(p-1) with alpha(h,p) = (2^{2h-2}+sqrt(p-1))/(2^{2h-2}sqrt(p-1)).
QuadValue alpha_threshold(uint64_t h, uint64_t p);

} // namespace ginv
