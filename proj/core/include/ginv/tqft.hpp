#pragma once

#include "ginv/chartab.hpp"
#include "ginv/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ginv {

// Elementary oriented cobordism pieces between disjoint unions of circles.
enum class Piece { Cap, Cup, Pants, Copants, Cylinder };

// A composable sequence of pieces with boundary-circle bookkeeping.
// Text form: comma-separated names, e.g. "cap,copants,pants,cup".
struct CobordismWord {
  std::vector<Piece> pieces;

  static CobordismWord parse(const std::string &text);
  std::string to_string() const;

  // Every piece finds its input circles (count never goes negative).
  bool valid() const;
  // Valid, starts from the empty boundary and ends on it.
  bool closed() const;
  // Circle count after the whole word (requires valid()).
  std::size_t final_circles() const;
};

// cap, then h copies of (copants, pants), then cup.
CobordismWord genus_word(uint64_t h);

// The commutative Frobenius algebra Z(F_ell G) in Dixon coordinates.
// idempotent_coeffs row chi, column j holds the coefficient of the class
// sum of C_j in e_chi = (chi(1)/|G|) sum_g chi(g^-1) g, computed as
// chi(1)^2/|G| * omega_{j*} / |C_j| mod ell.
struct FrobeniusAlgebraModL {
  uint64_t ell = 0;
  std::size_t k = 0;
  CentralCharactersModL central;
  std::vector<uint64_t> class_sizes;
  std::vector<uint32_t> inverse_class;
  Integer group_order;
  MatFp idempotent_coeffs;
};

FrobeniusAlgebraModL build_frobenius(const PermGroup &g);
FrobeniusAlgebraModL build_frobenius(const ClassTable &t,
                                     const CentralCharactersModL &c,
                                     const Integer &group_order);

// Structure-constant verification of the algebra axioms mod ell.
bool idempotents_orthogonal(const FrobeniusAlgebraModL &f,
                            const ClassMatrices &a);
bool idempotents_sum_to_identity(const FrobeniusAlgebraModL &f);
// <e_chi, e_chi'> = delta * (chi(1)/|G|)^2 under the trace form.
bool linear_form_matches(const FrobeniusAlgebraModL &f,
                         const ClassMatrices &a);

// Exact evaluation over Q in the idempotent basis, where every piece acts
// diagonally: cap seeds coefficient 1 per character, copants multiplies by
// (|G|/chi(1))^2, pants merges circles, cup applies the (chi(1)/|G|)^2
// linear form; a component closing to zero circles contributes the scalar
// sum of its coefficients.  Caps are accepted on an empty boundary only
// (each cap starts a fresh connected component).
struct OpenEvaluation {
  std::size_t circles = 0;
  Rational scalar = 1; // product over closed components
  // One coefficient per degree-multiset entry (coefficients only depend on
  // the degree); empty when circles == 0.
  std::vector<Rational> coeffs;
};

OpenEvaluation evaluate_open(const CobordismWord &w, const DegreeMultiset &d);
Rational evaluate_closed(const CobordismWord &w, const DegreeMultiset &d);
Rational evaluate_closed(const CobordismWord &w,
                         const FrobeniusAlgebraModL &f);

} // namespace ginv
