#pragma once

#include "ginv/group_ops.hpp"
#include "ginv/perm_group.hpp"

#include <map>
#include <string>
#include <vector>

namespace ginv {

bool is_abelian(const PermGroup &g);
// True iff every Sylow subgroup is normal (p-groups short-circuit).
bool is_nilpotent(const PermGroup &g);
// Derived series reaches the trivial group.
bool is_solvable(const PermGroup &g);
// Recursion on a normal subgroup of prime order.
bool is_supersolvable(const PermGroup &g);
// Sylow p-subgroup is normal.
bool is_p_closed(const PermGroup &g, uint64_t p);
// Recursion on minimal normal subgroups: each must be a p-group or a
// p'-group.
bool is_p_solvable(const PermGroup &g, uint64_t p);

// A minimal normal subgroup (the whole group when it is characteristically
// simple); undefined for the trivial group.
PermGroup minimal_normal_subgroup(const PermGroup &g);

// All predicates at once, with one-line explanations for the false ones.
struct StructureReport {
  bool abelian = false;
  bool nilpotent = false;
  bool supersolvable = false;
  bool solvable = false;
  std::map<uint64_t, bool> p_closed;   // per prime dividing |G|
  std::map<uint64_t, bool> p_solvable; // per prime dividing |G|
  std::vector<std::string> witnesses;
};

StructureReport classify_group(const PermGroup &g);

} // namespace ginv
