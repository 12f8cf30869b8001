#include "ginv/perm_group.hpp"

#include "ginv/errors.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <unordered_map>

namespace ginv {

namespace {

struct Level {
  uint32_t base = 0;
  std::vector<Permutation> gens;
  std::vector<Permutation> gen_invs;
  std::vector<uint32_t> orbit;   // orbit[0] == base
  std::vector<int32_t> pos;      // point -> orbit index, -1 outside
  std::vector<uint32_t> parent;  // Schreier tree, orbit indices
  std::vector<uint32_t> label;   // 2*gen + (1 if inverse edge)
  std::vector<Permutation> trans; // eager transversal, empty when lazy
  bool eager = false;
};

struct Chain {
  unsigned degree = 1;
  std::vector<Level> levels;
};

const Permutation &edge_perm(const Level &l, uint32_t label) {
  return (label & 1) ? l.gen_invs[label >> 1] : l.gens[label >> 1];
}

void rebuild_level(Level &l, unsigned degree) {
  l.pos.assign(degree, -1);
  l.orbit.clear();
  l.parent.clear();
  l.label.clear();
  l.trans.clear();
  l.orbit.push_back(l.base);
  l.parent.push_back(0);
  l.label.push_back(0);
  l.pos[l.base] = 0;
  for (std::size_t i = 0; i < l.orbit.size(); ++i) {
    uint32_t pt = l.orbit[i];
    for (std::size_t g = 0; g < l.gens.size(); ++g) {
      for (int inv = 0; inv < 2; ++inv) {
        uint32_t im = inv ? l.gen_invs[g][pt] : l.gens[g][pt];
        if (l.pos[im] < 0) {
          l.pos[im] = static_cast<int32_t>(l.orbit.size());
          l.orbit.push_back(im);
          l.parent.push_back(static_cast<uint32_t>(i));
          l.label.push_back(2 * static_cast<uint32_t>(g) + inv);
        }
      }
    }
  }
  l.eager =
      static_cast<uint64_t>(l.orbit.size()) * degree <= kEagerTransversalEntryCap;
  if (l.eager) {
    l.trans.reserve(l.orbit.size());
    l.trans.emplace_back(degree);
    for (std::size_t j = 1; j < l.orbit.size(); ++j)
      l.trans.push_back(l.trans[l.parent[j]] * edge_perm(l, l.label[j]));
  }
}

// Transversal element u with base^u = orbit[j].
Permutation transversal_elt(const Level &l, unsigned degree, uint32_t j) {
  if (l.eager)
    return l.trans[j];
  std::vector<uint32_t> labels;
  for (uint32_t cur = j; cur != 0; cur = l.parent[cur])
    labels.push_back(l.label[cur]);
  std::vector<uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
    const Permutation &s = edge_perm(l, *it);
    for (unsigned p = 0; p < degree; ++p)
      img[p] = s[img[p]];
  }
  return Permutation(std::move(img));
}

// Strips g through the chain; returns the residue and the level index at
// which stripping stopped (levels.size() if it passed every level).
std::pair<Permutation, std::size_t> sift(const Chain &c, Permutation g) {
  for (std::size_t lv = 0; lv < c.levels.size(); ++lv) {
    const Level &l = c.levels[lv];
    uint32_t im = g[l.base];
    if (im == l.base)
      continue;
    if (l.pos[im] < 0)
      return {std::move(g), lv};
    Permutation u = transversal_elt(l, c.degree, l.pos[im]);
    g = g * u.inverse();
  }
  return {std::move(g), c.levels.size()};
}

Integer orbit_product(const Chain &c) {
  Integer r = 1;
  for (const Level &l : c.levels)
    r *= static_cast<unsigned long>(l.orbit.size());
  return r;
}

uint32_t first_moved_point(const Permutation &p) {
  for (uint32_t i = 0; i < p.degree(); ++i)
    if (p[i] != i)
      return i;
  throw ComputeError("identity has no moved point");
}

void add_generator(Level &l, const Permutation &g) {
  l.gens.push_back(g);
  l.gen_invs.push_back(g.inverse());
}

Chain build_chain(unsigned degree, const std::vector<Permutation> &gens,
                  const std::optional<Integer> &known_order) {
  Chain c;
  c.degree = degree;
  if (gens.empty())
    return c;

  Level first;
  first.base = first_moved_point(gens.front());
  for (const Permutation &g : gens)
    add_generator(first, g);
  c.levels.push_back(std::move(first));
  rebuild_level(c.levels[0], degree);
  if (known_order && orbit_product(c) == *known_order)
    return c;

  std::size_t i = c.levels.size(); // deepest level first
  for (;;) {
    if (i == 0)
      break;
    std::size_t lv = i - 1;
    bool complete = true;
    // Schreier generators of level lv must all strip to the identity
    // through the deeper levels.
    for (std::size_t j = 0; j < c.levels[lv].orbit.size() && complete; ++j) {
      Permutation u_j = transversal_elt(c.levels[lv], degree,
                                        static_cast<uint32_t>(j));
      for (std::size_t g = 0; g < c.levels[lv].gens.size() && complete; ++g) {
        const Permutation &s = c.levels[lv].gens[g];
        uint32_t target = s[c.levels[lv].orbit[j]];
        Permutation u_t = transversal_elt(
            c.levels[lv], degree,
            static_cast<uint32_t>(c.levels[lv].pos[target]));
        Permutation h = u_j * s * u_t.inverse();
        if (h.is_identity())
          continue;
        // strip through levels lv+1.. by hand to track the drop level
        Permutation residue = std::move(h);
        std::size_t drop = c.levels.size();
        for (std::size_t m = lv + 1; m < c.levels.size(); ++m) {
          const Level &l = c.levels[m];
          uint32_t im = residue[l.base];
          if (im == l.base)
            continue;
          if (l.pos[im] < 0) {
            drop = m;
            break;
          }
          Permutation u = transversal_elt(l, degree, l.pos[im]);
          residue = residue * u.inverse();
        }
        if (residue.is_identity())
          continue;
        complete = false;
        if (drop == c.levels.size()) {
          Level fresh;
          fresh.base = first_moved_point(residue);
          c.levels.push_back(std::move(fresh));
          drop = c.levels.size() - 1;
        }
        for (std::size_t m = lv + 1; m <= drop; ++m) {
          add_generator(c.levels[m], residue);
          rebuild_level(c.levels[m], degree);
        }
        if (known_order && orbit_product(c) == *known_order)
          return c;
        i = drop + 1;
      }
    }
    if (complete)
      --i;
  }
  return c;
}

std::vector<Permutation> dedup_generators(std::vector<Permutation> gens) {
  std::vector<Permutation> out;
  for (Permutation &g : gens) {
    if (g.is_identity())
      continue;
    if (std::find(out.begin(), out.end(), g) == out.end())
      out.push_back(std::move(g));
  }
  return out;
}

} // namespace

struct PermGroup::Data {
  unsigned degree = 1;
  std::vector<Permutation> gens;
  Chain chain;
  Integer order;
  std::vector<Permutation> elements;
  std::unordered_map<uint64_t, uint32_t> elt_map;
  std::vector<uint32_t> elt_overflow; // hash-collided element indices
};

namespace {

uint64_t elt_hash(const Permutation &p) {
  uint64_t h = 1469598103934665603ull;
  for (uint32_t v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

void materialize(PermGroup::Data &d) {
  std::size_t n = d.order.get_ui();
  d.elements.reserve(n);
  d.elements.emplace_back(d.degree);
  d.elt_map.emplace(elt_hash(d.elements[0]), 0);
  for (std::size_t i = 0; i < d.elements.size(); ++i) {
    for (const Permutation &g : d.gens) {
      Permutation e = d.elements[i] * g;
      uint64_t h = elt_hash(e);
      auto it = d.elt_map.find(h);
      bool present = false;
      if (it != d.elt_map.end()) {
        present = d.elements[it->second] == e;
        if (!present)
          for (uint32_t ov : d.elt_overflow)
            if (d.elements[ov] == e) {
              present = true;
              break;
            }
      }
      if (!present) {
        uint32_t idx = static_cast<uint32_t>(d.elements.size());
        d.elements.push_back(std::move(e));
        if (it == d.elt_map.end())
          d.elt_map.emplace(h, idx);
        else
          d.elt_overflow.push_back(idx);
      }
    }
  }
  if (d.elements.size() != n)
    throw ComputeError("element closure disagrees with BSGS order");
}

} // namespace

PermGroup::PermGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

PermGroup::PermGroup(unsigned degree, std::vector<Permutation> generators,
                     std::optional<Integer> known_order) {
  if (degree == 0)
    throw ParseError("group degree must be >= 1");
  for (const Permutation &g : generators)
    if (g.degree() != degree)
      throw ParseError("generator degree mismatch");
  auto d = std::make_shared<Data>();
  d->degree = degree;
  d->gens = dedup_generators(std::move(generators));
  d->chain = build_chain(degree, d->gens, known_order);
  d->order = orbit_product(d->chain);
  if (known_order && d->order != *known_order)
    throw ComputeError("known-order hint does not match generated group");
  for (const Permutation &g : d->gens) {
    auto [residue, lv] = sift(d->chain, g);
    (void)lv;
    if (!residue.is_identity())
      throw ComputeError("generator fails BSGS membership; inconsistent chain");
  }
  if (d->order <= kElementCountCap &&
      d->order * degree <= Integer(kElementEntryCap))
    materialize(*d);
  d_ = std::move(d);
}

PermGroup PermGroup::trivial(unsigned degree) {
  return PermGroup(degree, {});
}

unsigned PermGroup::degree() const { return d_->degree; }

const std::vector<Permutation> &PermGroup::generators() const {
  return d_->gens;
}

const Integer &PermGroup::order() const { return d_->order; }

bool PermGroup::is_trivial() const { return d_->order == 1; }

bool PermGroup::contains(const Permutation &p) const {
  if (p.degree() != d_->degree)
    throw ParseError("degree mismatch in membership test");
  auto [residue, lv] = sift(d_->chain, p);
  (void)lv;
  return residue.is_identity();
}

bool PermGroup::has_elements() const { return !d_->elements.empty(); }

const std::vector<Permutation> &PermGroup::elements() const {
  if (d_->elements.empty())
    throw CapExceededError("group of order " + d_->order.get_str() +
                           " exceeds the enumeration cap");
  return d_->elements;
}

std::optional<uint32_t> PermGroup::element_index(const Permutation &p) const {
  if (d_->elements.empty())
    return std::nullopt;
  uint64_t h = elt_hash(p);
  auto it = d_->elt_map.find(h);
  if (it != d_->elt_map.end() && d_->elements[it->second] == p)
    return it->second;
  for (uint32_t ov : d_->elt_overflow)
    if (d_->elements[ov] == p)
      return ov;
  return std::nullopt;
}

std::vector<uint32_t> PermGroup::base_points() const {
  std::vector<uint32_t> b;
  for (const Level &l : d_->chain.levels)
    b.push_back(l.base);
  return b;
}

std::vector<uint64_t> PermGroup::transversal_sizes() const {
  std::vector<uint64_t> s;
  for (const Level &l : d_->chain.levels)
    s.push_back(l.orbit.size());
  return s;
}

Subgroup make_subgroup(const PermGroup &parent, PermGroup group) {
  if (parent.degree() != group.degree())
    throw ParseError("subgroup degree mismatch");
  for (const Permutation &g : group.generators())
    if (!parent.contains(g))
      throw ComputeError("subgroup generator outside parent group");
  return Subgroup{parent, std::move(group)};
}

PermGroup group_from_elements(unsigned degree,
                              const std::vector<Permutation> &elems) {
  std::vector<Permutation> gens;
  PermGroup g = PermGroup::trivial(degree);
  for (const Permutation &e : elems) {
    if (!g.contains(e)) {
      gens.push_back(e);
      g = PermGroup(degree, gens);
    }
  }
  return g;
}

} // namespace ginv
