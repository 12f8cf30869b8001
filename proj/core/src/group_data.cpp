#include "ginv/group_data.hpp"

#include "ginv/errors.hpp"

#include <cassert>

namespace ginv {

namespace {

// Heisenberg group of order p^3: p central classes of size 1, p^2-1 classes
// of size p, p^2 linear characters and p-1 of degree p; nonabelian p-group.
GroupData extraspecial_closed_form(uint64_t p) {
  GroupData d;
  d.label = "extraspecial+(" + std::to_string(p) + ")";
  d.order = Integer(static_cast<unsigned long>(p)) *
            static_cast<unsigned long>(p) * static_cast<unsigned long>(p);
  d.closed_form = true;
  d.class_sizes.assign(p, 1);
  d.rep_orders.assign(p, p);
  d.rep_orders[0] = 1;
  for (uint64_t i = 0; i < p * p - 1; ++i) {
    d.class_sizes.push_back(p);
    d.rep_orders.push_back(p);
  }
  d.degrees.group_order = d.order;
  d.degrees.entries = {{1, p * p}, {p, p - 1}};
  d.degrees.linear_count = p * p;
  d.structure.abelian = false;
  d.structure.nilpotent = true;
  d.structure.supersolvable = true;
  d.structure.solvable = true;
  d.structure.p_closed[p] = true;
  d.structure.p_solvable[p] = true;
  d.structure.witnesses.push_back(
      "nonabelian: a generator pair does not commute");
  return d;
}

} // namespace

bool uses_closed_form(const GroupSpec &spec) {
  return spec.kind == GroupSpec::Kind::Family &&
         spec.family == "extraspecial+" && spec.param >= 17;
}

GroupData realize_group(const std::string &label, const PermGroup &g,
                        const DegreeCache *cache) {
  GroupData d;
  d.label = label;
  d.order = g.order();
  ClassTable t = conjugacy_classes(g);
  d.class_sizes = t.sizes;
  d.rep_orders = t.rep_orders;
  d.degrees = cache ? cached_character_degrees(g, *cache)
                    : character_degrees(g);
  assert(d.degrees.class_count() == t.size());
  d.structure = classify_group(g);
  d.group = g;
  return d;
}

GroupData realize(const GroupSpec &spec, const DegreeCache *cache) {
  if (uses_closed_form(spec))
    return extraspecial_closed_form(spec.param);
  return realize_group(spec.label(), make_group(spec), cache);
}

} // namespace ginv
