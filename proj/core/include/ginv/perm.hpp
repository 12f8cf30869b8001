#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ginv {

// Permutation of {0, ..., degree-1}, stored as the image array.  Products
// compose left-to-right: (a * b) applies a first, then b.  Text form is
// 1-based disjoint cycle notation, e.g. "(1 2 3)(4 5)"; "()" is the
// identity.
class Permutation {
public:
  explicit Permutation(unsigned degree);           // identity
  explicit Permutation(std::vector<uint32_t> img); // validates bijection

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }
  uint32_t operator[](uint32_t p) const { return img_[p]; }
  const std::vector<uint32_t> &images() const { return img_; }

  bool is_identity() const;
  Permutation operator*(const Permutation &rhs) const;
  Permutation inverse() const;
  // g^-1 * (*this) * g
  Permutation conjugated_by(const Permutation &g) const;
  uint64_t order() const; // lcm of cycle lengths

  bool operator==(const Permutation &rhs) const { return img_ == rhs.img_; }
  bool operator!=(const Permutation &rhs) const { return img_ != rhs.img_; }
  bool operator<(const Permutation &rhs) const { return img_ < rhs.img_; }

  static Permutation parse_cycles(const std::string &text, unsigned degree);
  std::string to_cycles() const;

private:
  std::vector<uint32_t> img_;
};

struct PermHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

} // namespace ginv
