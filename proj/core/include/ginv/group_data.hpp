#pragma once

#include "ginv/catalog.hpp"
#include "ginv/chartab.hpp"
#include "ginv/classify.hpp"
#include "ginv/degree_cache.hpp"

#include <optional>
#include <string>

namespace ginv {

// Everything the verification suites consume about one group.  Groups over
// the enumeration cap (extraspecial p >= 17, notably 59^3) carry data from
// the family formulas instead of a materialized permutation group; the
// formulas are validated against the computed route at p = 3 and 5.
struct GroupData {
  std::string label;
  Integer order;
  std::vector<uint64_t> class_sizes;
  std::vector<uint64_t> rep_orders; // aligned with class_sizes
  DegreeMultiset degrees;
  StructureReport structure;
  bool closed_form = false;
  std::optional<PermGroup> group; // absent on the closed-form route

  std::size_t class_count() const { return class_sizes.size(); }
};

bool uses_closed_form(const GroupSpec &spec);

GroupData realize(const GroupSpec &spec, const DegreeCache *cache = nullptr);
GroupData realize_group(const std::string &label, const PermGroup &g,
                        const DegreeCache *cache = nullptr);

} // namespace ginv
