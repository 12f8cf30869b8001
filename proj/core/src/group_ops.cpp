#include "ginv/group_ops.hpp"

#include "ginv/errors.hpp"
#include "ginv/modular.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_set>

namespace ginv {

namespace {

uint32_t index_of(const PermGroup &g, const Permutation &x) {
  auto idx = g.element_index(x);
  if (!idx)
    throw ComputeError("element not found in group");
  return *idx;
}

// Conjugation orbit of elements()[start] as element indices, BFS by
// generator conjugation.
std::vector<uint32_t> conj_orbit(const PermGroup &g, uint32_t start) {
  std::vector<uint32_t> orbit{start};
  std::unordered_set<uint32_t> seen{start};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    const Permutation &x = g.elements()[orbit[i]];
    for (const Permutation &s : g.generators()) {
      uint32_t idx = index_of(g, x.conjugated_by(s));
      if (seen.insert(idx).second)
        orbit.push_back(idx);
    }
  }
  return orbit;
}

// Subgroup closure of a set of element indices (BFS under products).
std::vector<uint32_t> subgroup_closure(const PermGroup &g,
                                       std::vector<uint32_t> seed) {
  std::unordered_set<uint32_t> seen(seed.begin(), seed.end());
  uint32_t id_idx = index_of(g, Permutation(g.degree()));
  if (seen.insert(id_idx).second)
    seed.push_back(id_idx);
  std::vector<uint32_t> closure(seed.begin(), seed.end());
  std::vector<uint32_t> gens(closure.begin(), closure.end());
  for (std::size_t i = 0; i < closure.size(); ++i) {
    for (uint32_t s : gens) {
      const Permutation &a = g.elements()[closure[i]];
      const Permutation &b = g.elements()[s];
      uint32_t idx = index_of(g, a * b);
      if (seen.insert(idx).second)
        closure.push_back(idx);
    }
  }
  return closure;
}

std::vector<Permutation> pick_perms(const PermGroup &g,
                                    const std::vector<uint32_t> &idxs) {
  std::vector<Permutation> out;
  out.reserve(idxs.size());
  for (uint32_t i : idxs)
    out.push_back(g.elements()[i]);
  return out;
}

Permutation pow_perm(const Permutation &x, uint64_t e) {
  Permutation r(x.degree());
  Permutation b = x;
  while (e) {
    if (e & 1)
      r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

} // namespace

ClassTable conjugacy_classes(const PermGroup &g) {
  const auto &elems = g.elements();
  ClassTable t;
  t.class_of_element.assign(elems.size(), UINT32_MAX);
  for (uint32_t i = 0; i < elems.size(); ++i) {
    if (t.class_of_element[i] != UINT32_MAX)
      continue;
    uint32_t cls = static_cast<uint32_t>(t.reps.size());
    std::vector<uint32_t> orbit = conj_orbit(g, i);
    for (uint32_t e : orbit)
      t.class_of_element[e] = cls;
    t.reps.push_back(elems[i]);
    t.sizes.push_back(orbit.size());
    t.rep_orders.push_back(elems[i].order());
  }
  t.inverse_class.resize(t.reps.size());
  for (uint32_t j = 0; j < t.reps.size(); ++j)
    t.inverse_class[j] = t.class_of_element[index_of(g, t.reps[j].inverse())];
  uint64_t total = 0;
  for (uint64_t s : t.sizes)
    total += s;
  if (Integer(static_cast<unsigned long>(total)) != g.order())
    throw ComputeError("class equation failed");
  return t;
}

uint32_t class_of(const PermGroup &g, const ClassTable &t,
                  const Permutation &x) {
  return t.class_of_element[index_of(g, x)];
}

Subgroup centralizer(const PermGroup &g, const Permutation &x) {
  std::vector<Permutation> members;
  for (const Permutation &e : g.elements())
    if (e * x == x * e)
      members.push_back(e);
  return make_subgroup(g, group_from_elements(g.degree(), members));
}

Subgroup center(const PermGroup &g) {
  std::vector<Permutation> members;
  for (const Permutation &e : g.elements()) {
    bool central = true;
    for (const Permutation &s : g.generators())
      if (e * s != s * e) {
        central = false;
        break;
      }
    if (central)
      members.push_back(e);
  }
  return make_subgroup(g, group_from_elements(g.degree(), members));
}

Subgroup derived_subgroup(const PermGroup &g) {
  std::vector<Permutation> comms;
  for (const Permutation &a : g.generators())
    for (const Permutation &b : g.generators())
      comms.push_back(a.inverse() * b.inverse() * a * b);
  return normal_closure(g, comms);
}

Subgroup normal_closure(const PermGroup &g,
                        const std::vector<Permutation> &seed) {
  std::vector<uint32_t> all;
  std::unordered_set<uint32_t> seen;
  for (const Permutation &x : seed) {
    for (uint32_t idx : conj_orbit(g, index_of(g, x)))
      if (seen.insert(idx).second)
        all.push_back(idx);
  }
  std::vector<uint32_t> closure = subgroup_closure(g, std::move(all));
  return make_subgroup(g, group_from_elements(g.degree(),
                                              pick_perms(g, closure)));
}

bool is_normal(const PermGroup &g, const PermGroup &h) {
  for (const Permutation &x : h.generators())
    for (const Permutation &s : g.generators())
      if (!h.contains(x.conjugated_by(s)))
        return false;
  return true;
}

PermGroup quotient(const PermGroup &g, const PermGroup &n) {
  if (!is_normal(g, n))
    throw ComputeError("quotient by a non-normal subgroup");
  const auto &elems = g.elements();
  const Integer index_z = g.order() / n.order();
  if (g.order() % n.order() != 0)
    throw ComputeError("subgroup order does not divide group order");
  uint32_t index = static_cast<uint32_t>(index_z.get_ui());
  std::vector<uint32_t> coset_of(elems.size(), UINT32_MAX);
  std::vector<uint32_t> coset_rep;
  for (uint32_t i = 0; i < elems.size(); ++i) {
    if (coset_of[i] != UINT32_MAX)
      continue;
    uint32_t c = static_cast<uint32_t>(coset_rep.size());
    coset_rep.push_back(i);
    // right coset N * elems[i]
    for (const Permutation &x : n.elements()) {
      uint32_t idx = index_of(g, x * elems[i]);
      if (coset_of[idx] != UINT32_MAX && coset_of[idx] != c)
        throw ComputeError("coset partition inconsistency");
      coset_of[idx] = c;
    }
  }
  if (coset_rep.size() != index)
    throw ComputeError("coset count disagrees with index");
  std::vector<Permutation> qgens;
  for (const Permutation &s : g.generators()) {
    std::vector<uint32_t> img(index);
    for (uint32_t c = 0; c < index; ++c)
      img[c] = coset_of[index_of(g, elems[coset_rep[c]] * s)];
    qgens.emplace_back(std::move(img));
  }
  PermGroup q(std::max(index, 1u), qgens, Integer(index_z));
  return q;
}

Subgroup sylow_subgroup(const PermGroup &g, uint64_t p) {
  if (!is_prime(p))
    throw ParseError("sylow prime must be prime");
  Integer target = p_part(g.order(), p);
  if (target == 1)
    return make_subgroup(g, PermGroup::trivial(g.degree()));

  const auto &elems = g.elements();
  // Seed: any element of order divisible by p, raised to give order p.
  std::vector<uint32_t> sub; // element indices of current p-subgroup
  {
    Permutation seed(g.degree());
    bool found = false;
    for (const Permutation &e : elems) {
      uint64_t o = e.order();
      if (o % p == 0) {
        seed = pow_perm(e, o / p); // order exactly p
        found = true;
        break;
      }
    }
    if (!found)
      throw ComputeError("no element of order divisible by p");
    sub = subgroup_closure(g, {index_of(g, seed)});
  }

  while (Integer(static_cast<unsigned long>(sub.size())) < target) {
    std::unordered_set<uint32_t> in_sub(sub.begin(), sub.end());
    // generators of current subgroup: use all its elements (small sets)
    std::vector<uint32_t> normalizer;
    for (uint32_t i = 0; i < elems.size(); ++i) {
      const Permutation &cand = elems[i];
      bool normalizes = true;
      for (uint32_t s : sub) {
        if (!in_sub.count(index_of(g, elems[s].conjugated_by(cand)))) {
          normalizes = false;
          break;
        }
      }
      if (normalizes)
        normalizer.push_back(i);
    }
    // find y in N \ P whose coset has order divisible by p, extend by the
    // power with coset order exactly p
    bool extended = false;
    for (uint32_t yi : normalizer) {
      if (in_sub.count(yi))
        continue;
      const Permutation &y = elems[yi];
      // smallest k > 0 with y^k in P
      Permutation acc = y;
      uint64_t k = 1;
      while (!in_sub.count(index_of(g, acc))) {
        acc = acc * y;
        ++k;
      }
      if (k % p != 0)
        continue;
      Permutation ext = pow_perm(y, k / p); // coset order exactly p
      std::vector<uint32_t> grown = sub;
      grown.push_back(index_of(g, ext));
      sub = subgroup_closure(g, std::move(grown));
      extended = true;
      break;
    }
    if (!extended)
      throw ComputeError("sylow extension failed");
  }
  return make_subgroup(g,
                       group_from_elements(g.degree(), pick_perms(g, sub)));
}

Integer p_part(const Integer &n, uint64_t p) {
  Integer r = 1, m = n;
  Integer pz(static_cast<unsigned long>(p));
  while (m % pz == 0) {
    m /= pz;
    r *= pz;
  }
  return r;
}

std::vector<uint64_t> prime_divisors(const Integer &n) {
  if (!n.fits_ulong_p())
    throw ComputeError("order too large to factor");
  std::vector<uint64_t> out;
  for (auto [p, e] : factorize(n.get_ui()))
    out.push_back(p);
  return out;
}

} // namespace ginv
