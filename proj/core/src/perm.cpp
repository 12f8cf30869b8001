#include "ginv/perm.hpp"

#include "ginv/errors.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace ginv {

Permutation::Permutation(unsigned degree) : img_(degree) {
  if (degree == 0)
    throw ParseError("permutation degree must be >= 1");
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<uint32_t> img) : img_(std::move(img)) {
  if (img_.empty())
    throw ParseError("permutation degree must be >= 1");
  std::vector<bool> seen(img_.size(), false);
  for (uint32_t v : img_) {
    if (v >= img_.size() || seen[v])
      throw ParseError("image array is not a bijection");
    seen[v] = true;
  }
}

bool Permutation::is_identity() const {
  for (uint32_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i)
      return false;
  return true;
}

Permutation Permutation::operator*(const Permutation &rhs) const {
  if (degree() != rhs.degree())
    throw ParseError("degree mismatch in product");
  std::vector<uint32_t> r(img_.size());
  for (uint32_t i = 0; i < img_.size(); ++i)
    r[i] = rhs.img_[img_[i]];
  Permutation out(1);
  out.img_ = std::move(r);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<uint32_t> r(img_.size());
  for (uint32_t i = 0; i < img_.size(); ++i)
    r[img_[i]] = i;
  Permutation out(1);
  out.img_ = std::move(r);
  return out;
}

Permutation Permutation::conjugated_by(const Permutation &g) const {
  // (g^-1 x g)[p] = g[x[g^-1[p]]]; build directly to save a product.
  if (degree() != g.degree())
    throw ParseError("degree mismatch in conjugation");
  std::vector<uint32_t> r(img_.size());
  for (uint32_t i = 0; i < img_.size(); ++i)
    r[g.img_[i]] = g.img_[img_[i]];
  Permutation out(1);
  out.img_ = std::move(r);
  return out;
}

uint64_t Permutation::order() const {
  std::vector<bool> seen(img_.size(), false);
  uint64_t ord = 1;
  for (uint32_t i = 0; i < img_.size(); ++i) {
    if (seen[i])
      continue;
    uint64_t len = 0;
    uint32_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Permutation Permutation::parse_cycles(const std::string &text,
                                      unsigned degree) {
  if (degree == 0)
    throw ParseError("degree must be >= 1");
  std::vector<uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '(' in cycle string: " + text);
    ++i;
    std::vector<uint32_t> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point in cycle string: " + text);
      uint64_t v = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > degree)
          throw ParseError("point out of range in cycle string: " + text);
        ++i;
      }
      if (v == 0)
        throw ParseError("points are 1-based in cycle string: " + text);
      uint32_t pt = static_cast<uint32_t>(v - 1);
      if (used[pt])
        throw ParseError("cycles are not disjoint: " + text);
      used[pt] = true;
      cyc.push_back(pt);
      skip_ws();
    }
    if (i == text.size())
      throw ParseError("unterminated cycle: " + text);
    ++i; // ')'
    any = true;
    for (std::size_t k = 0; k + 1 < cyc.size(); ++k)
      img[cyc[k]] = cyc[k + 1];
    if (cyc.size() > 1)
      img[cyc.back()] = cyc.front();
    skip_ws();
  }
  if (!any)
    throw ParseError("empty cycle string");
  return Permutation(std::move(img));
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(img_.size(), false);
  bool any = false;
  for (uint32_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    out << '(';
    uint32_t j = i;
    bool first = true;
    while (!seen[j]) {
      if (!first)
        out << ' ';
      out << (j + 1);
      seen[j] = true;
      first = false;
      j = img_[j];
    }
    out << ')';
    any = true;
  }
  if (!any)
    return "()";
  return out.str();
}

std::size_t PermHash::operator()(const Permutation &p) const noexcept {
  // FNV-1a over the image words.
  std::size_t h = 1469598103934665603ull;
  for (uint32_t v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace ginv
