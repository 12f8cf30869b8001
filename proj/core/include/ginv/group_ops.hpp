#pragma once

#include "ginv/perm_group.hpp"

#include <cstdint>
#include <vector>

namespace ginv {

// Conjugacy class data for a materialized group.  Classes are discovered by
// scanning the element list in order and expanding conjugation orbits, so
// class 0 is the class of the identity and the layout is deterministic.
struct ClassTable {
  std::vector<Permutation> reps;
  std::vector<uint64_t> sizes;
  std::vector<uint64_t> rep_orders;
  std::vector<uint32_t> inverse_class;    // j -> class of reps[j]^-1
  std::vector<uint32_t> class_of_element; // indexed like elements()

  std::size_t size() const { return sizes.size(); }
};

ClassTable conjugacy_classes(const PermGroup &g);

// Class index of an element (element must belong to the group).
uint32_t class_of(const PermGroup &g, const ClassTable &t,
                  const Permutation &x);

Subgroup centralizer(const PermGroup &g, const Permutation &x);
Subgroup center(const PermGroup &g);
Subgroup derived_subgroup(const PermGroup &g);

// Smallest normal subgroup containing every element of seed.
Subgroup normal_closure(const PermGroup &g,
                        const std::vector<Permutation> &seed);

bool is_normal(const PermGroup &g, const PermGroup &h);

// Action on right cosets of a normal subgroup; degree is the index.
PermGroup quotient(const PermGroup &g, const PermGroup &n);

// Sylow p-subgroup, grown by extending a cyclic p-subgroup inside
// successive normalizers; the trivial subgroup when p does not divide |G|.
Subgroup sylow_subgroup(const PermGroup &g, uint64_t p);

// Largest power of p dividing n.
Integer p_part(const Integer &n, uint64_t p);

// Distinct primes dividing n, ascending.
std::vector<uint64_t> prime_divisors(const Integer &n);

} // namespace ginv
