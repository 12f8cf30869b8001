#pragma once

#include "ginv/group_ops.hpp"
#include "ginv/modular.hpp"
#include "ginv/perm_group.hpp"
#include "ginv/rational.hpp"

#include <cstdint>
#include <vector>

namespace ginv {

// Multiset of irreducible character degrees.
struct DegreeMultiset {
  std::vector<std::pair<uint64_t, uint64_t>> entries; // (degree, mult), sorted
  Integer group_order;
  uint64_t linear_count = 0; // multiplicity of degree 1 = [G : G']

  uint64_t class_count() const; // sum of multiplicities = k(G)
  bool operator==(const DegreeMultiset &rhs) const {
    return entries == rhs.entries && group_order == rhs.group_order;
  }
};

// Class-sum multiplication data: C_i * C_j = sum_n a[i][j][n] C_n, with
// a[i][j][n] = #{x in C_i : x^-1 * rep_n in C_j}.
struct ClassMatrices {
  std::vector<std::vector<std::vector<Integer>>> a;
};

// Central characters omega_chi(C_j) = |C_j| chi(g_j) / chi(1) reduced mod a
// prime ell chosen with ell = 1 (mod exp(G)) and ell > 2 ceil(sqrt(|G|)).
// One row per irreducible character, one column per conjugacy class;
// identity column is 1 in every row.  degrees[r] = chi_r(1).
struct CentralCharactersModL {
  uint64_t ell = 0;
  MatFp omega;
  std::vector<uint64_t> degrees;
};

ClassMatrices structure_constants(const PermGroup &g, const ClassTable &t);

// lcm of element orders, via class representatives.
uint64_t group_exponent(const ClassTable &t);

// Smallest admissible modulus for the central-character computation.
uint64_t dixon_modulus(const Integer &group_order, uint64_t exponent);

// Dixon-Schneider: simultaneous eigenspace refinement of the class matrices
// over F_ell, degrees recovered by modular square root.  Deterministic.
CentralCharactersModL central_characters(const PermGroup &g,
                                         const ClassTable &t);

// Aggregates row degrees; checks sum d^2 m = |G|, sum m = k, d | |G|.
DegreeMultiset degree_multiset(const CentralCharactersModL &c,
                               const Integer &group_order);

// Full pipeline: classes, central characters, degree multiset.
DegreeMultiset character_degrees(const PermGroup &g);

// Number of classes whose representative has order coprime to p.
uint64_t p_regular_class_count(const ClassTable &t, uint64_t p);

} // namespace ginv
