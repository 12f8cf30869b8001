#pragma once

#include "ginv/perm_group.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ginv {

// Parsed group description.  Text grammar:
//   family:S(6)   family:D(8)   family:PGL2(9)   family:extraspecial+(59)
//   family:frobenius_mersenne(5)   family:direct(A(4),C(2))
//   gens:5:(1 2 3 4 5),(1 2)
// For D the parameter is the group order.  PSL3(2) is accepted as a family
// of its own (same group as PSL2(7)).
struct GroupSpec {
  enum class Kind { Family, Direct, Generators };

  Kind kind = Kind::Family;
  std::string family; // C, D, S, A, SL2, PSL2, PGL2, PSL3,
                      // extraspecial+, frobenius_mersenne
  uint64_t param = 0;
  std::vector<GroupSpec> factors; // Direct
  unsigned degree = 0;            // Generators
  std::vector<std::string> cycles;

  std::string label() const;
};

GroupSpec parse_group_spec(const std::string &text);

// Builds the permutation group; validates parameters (primality, Mersenne
// exponent, ...) and passes the textbook order to the BSGS construction.
PermGroup make_group(const GroupSpec &spec);

// Textbook order of a family spec without building the group.
Integer spec_order(const GroupSpec &spec);

// The versioned default catalog swept by the verification suites.
std::vector<GroupSpec> default_catalog();

// One spec per line; blank lines and '#' comments ignored.
std::vector<GroupSpec> read_spec_file(std::istream &in);

} // namespace ginv
