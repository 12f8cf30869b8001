#pragma once

#include "ginv/perm.hpp"
#include "ginv/rational.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace ginv {

// Full element lists are materialized only for groups of order at most
// kElementCountCap; the entry guard additionally bounds order * degree so
// that huge-degree groups (regular actions on hundreds of thousands of
// points) are never expanded element by element.
inline constexpr uint64_t kElementCountCap = uint64_t(1) << 21;
inline constexpr uint64_t kElementEntryCap = uint64_t(1) << 28;
inline constexpr uint64_t kEagerTransversalEntryCap = uint64_t(1) << 24;

// Permutation group with a base and strong generating set (Schreier-Sims).
// Immutable after construction; copies share state.
//
// known_order, when supplied (catalog constructors pass textbook orders),
// lets construction stop as soon as the transversal-size product reaches
// it, which makes huge-degree regular actions tractable.  The product of
// orbit sizes in a partial chain never exceeds the true order, so a hint
// larger than the truth is always detected; every original generator is
// sifted afterwards as a consistency check.
class PermGroup {
public:
  struct Data;

  PermGroup(unsigned degree, std::vector<Permutation> generators,
            std::optional<Integer> known_order = std::nullopt);

  static PermGroup trivial(unsigned degree);

  unsigned degree() const;
  // Deduplicated, identity-free generating set.
  const std::vector<Permutation> &generators() const;
  const Integer &order() const;
  bool is_trivial() const;
  bool contains(const Permutation &p) const;

  bool has_elements() const;
  // Materialized element list, identity first; throws CapExceededError when
  // the group is over the enumeration caps.
  const std::vector<Permutation> &elements() const;
  // Index into elements(), or nullopt if absent / not materialized.
  std::optional<uint32_t> element_index(const Permutation &p) const;

  std::vector<uint32_t> base_points() const;
  std::vector<uint64_t> transversal_sizes() const;

private:
  explicit PermGroup(std::shared_ptr<const Data> d);
  std::shared_ptr<const Data> d_;
};

// Subgroup paired with its ambient group (same degree; generators verified
// to be members of the parent).
struct Subgroup {
  PermGroup parent;
  PermGroup group;
};

Subgroup make_subgroup(const PermGroup &parent, PermGroup group);

// Smallest generating subset of a closed element list (greedy); used to turn
// element sets (centralizers, Sylow extensions) back into groups.
PermGroup group_from_elements(unsigned degree,
                              const std::vector<Permutation> &elems);

} // namespace ginv
