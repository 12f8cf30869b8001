#include "ginv/classify.hpp"

#include "ginv/errors.hpp"
#include "ginv/modular.hpp"

#include <cassert>

namespace ginv {

namespace {

bool commute(const Permutation &a, const Permutation &b) {
  return a * b == b * a;
}

bool order_is_power_of(const Integer &n, uint64_t p) {
  Integer m = n;
  while (m % static_cast<unsigned long>(p) == 0)
    m /= static_cast<unsigned long>(p);
  return m == 1;
}

} // namespace

bool is_abelian(const PermGroup &g) {
  const auto &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!commute(gens[i], gens[j]))
        return false;
  return true;
}

bool is_nilpotent(const PermGroup &g) {
  std::vector<uint64_t> primes = prime_divisors(g.order());
  if (primes.size() <= 1)
    return true; // trivial group or p-group
  for (uint64_t p : primes)
    if (!is_p_closed(g, p))
      return false;
  return true;
}

bool is_solvable(const PermGroup &g) {
  PermGroup cur = g;
  while (!cur.is_trivial()) {
    PermGroup next = derived_subgroup(cur).group;
    if (next.order() == cur.order())
      return false; // perfect
    cur = next;
  }
  return true;
}

bool is_supersolvable(const PermGroup &g) {
  if (g.is_trivial())
    return true;
  ClassTable classes = conjugacy_classes(g);
  for (std::size_t j = 1; j < classes.size(); ++j) {
    uint64_t o = classes.rep_orders[j];
    if (!is_prime(o))
      continue;
    PermGroup cyc(g.degree(), {classes.reps[j]},
                  Integer(static_cast<unsigned long>(o)));
    if (!is_normal(g, cyc))
      continue;
    if (is_supersolvable(quotient(g, cyc)))
      return true;
  }
  return false;
}

bool is_p_closed(const PermGroup &g, uint64_t p) {
  Subgroup syl = sylow_subgroup(g, p);
  return is_normal(g, syl.group);
}

PermGroup minimal_normal_subgroup(const PermGroup &g) {
  assert(!g.is_trivial());
  ClassTable classes = conjugacy_classes(g);
  PermGroup best = g;
  for (std::size_t j = 1; j < classes.size(); ++j) {
    PermGroup ncl = normal_closure(g, {classes.reps[j]}).group;
    if (ncl.order() < best.order())
      best = ncl;
  }
  return best;
}

bool is_p_solvable(const PermGroup &g, uint64_t p) {
  if (!is_prime(p))
    throw ParseError("p must be prime");
  PermGroup cur = g;
  while (true) {
    const Integer &o = cur.order();
    if (o % static_cast<unsigned long>(p) != 0)
      return true; // p'-group
    if (order_is_power_of(o, p))
      return true; // p-group
    PermGroup n = minimal_normal_subgroup(cur);
    const Integer &no = n.order();
    bool fine = no % static_cast<unsigned long>(p) != 0 ||
                order_is_power_of(no, p);
    if (!fine || no == o)
      return false; // a characteristically simple chunk mixes p with p'
    cur = quotient(cur, n);
  }
}

StructureReport classify_group(const PermGroup &g) {
  StructureReport r;
  r.abelian = is_abelian(g);
  r.nilpotent = r.abelian || is_nilpotent(g);
  r.supersolvable = r.nilpotent || is_supersolvable(g);
  r.solvable = r.supersolvable || is_solvable(g);
  if (!r.abelian)
    r.witnesses.push_back("nonabelian: a generator pair does not commute");
  for (uint64_t p : prime_divisors(g.order())) {
    bool closed = r.nilpotent || is_p_closed(g, p);
    r.p_closed[p] = closed;
    if (!closed)
      r.witnesses.push_back("Sylow " + std::to_string(p) +
                            "-subgroup is not normal");
    bool psolv = r.solvable || is_p_solvable(g, p);
    r.p_solvable[p] = psolv;
    if (!psolv)
      r.witnesses.push_back("not " + std::to_string(p) +
                            "-solvable: a minimal normal subgroup mixes " +
                            std::to_string(p) + " with other primes");
  }
  if (!r.solvable)
    r.witnesses.push_back("nonsolvable: derived series stalls at a "
                          "perfect subgroup");
  return r;
}

} // namespace ginv
