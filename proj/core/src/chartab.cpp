#include "ginv/chartab.hpp"

#include "ginv/errors.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace ginv {

uint64_t DegreeMultiset::class_count() const {
  uint64_t k = 0;
  for (const auto &[d, m] : entries)
    k += m;
  return k;
}

namespace {

// Elements of each class, as indices into g.elements().
std::vector<std::vector<uint32_t>> class_members(const ClassTable &t) {
  std::vector<std::vector<uint32_t>> members(t.size());
  for (uint32_t e = 0; e < t.class_of_element.size(); ++e)
    members[t.class_of_element[e]].push_back(e);
  return members;
}

// Class matrix M_i over F_ell: M_i[j][n] = a_{ijn} mod ell.  Satisfies
// M_i v = omega(C_i) v for every central-character vector v.
MatFp class_matrix_mod(const PermGroup &g, const ClassTable &t,
                       const std::vector<uint32_t> &members_i, uint64_t ell) {
  std::size_t k = t.size();
  MatFp m(k, k, ell);
  const auto &elems = g.elements();
  for (uint32_t e : members_i) {
    Permutation xinv = elems[e].inverse();
    for (std::size_t n = 0; n < k; ++n) {
      auto idx = g.element_index(xinv * t.reps[n]);
      assert(idx);
      uint32_t j = t.class_of_element[*idx];
      uint64_t &cell = m.at(j, n);
      if (++cell == ell)
        cell = 0;
    }
  }
  return m;
}

} // namespace

ClassMatrices structure_constants(const PermGroup &g, const ClassTable &t) {
  std::size_t k = t.size();
  auto members = class_members(t);
  ClassMatrices out;
  out.a.assign(k, std::vector<std::vector<Integer>>(
                      k, std::vector<Integer>(k, Integer(0))));
  const auto &elems = g.elements();
  for (std::size_t i = 0; i < k; ++i)
    for (uint32_t e : members[i]) {
      Permutation xinv = elems[e].inverse();
      for (std::size_t n = 0; n < k; ++n) {
        auto idx = g.element_index(xinv * t.reps[n]);
        assert(idx);
        out.a[i][t.class_of_element[*idx]][n] += 1;
      }
    }
  // row sums weighted by class sizes recover |C_i| |C_j|
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Integer total = 0;
      for (std::size_t n = 0; n < k; ++n)
        total += out.a[i][j][n] * static_cast<unsigned long>(t.sizes[n]);
      assert(total == Integer(static_cast<unsigned long>(t.sizes[i])) *
                          static_cast<unsigned long>(t.sizes[j]));
    }
  return out;
}

uint64_t group_exponent(const ClassTable &t) {
  uint64_t e = 1;
  for (uint64_t o : t.rep_orders)
    e = std::lcm(e, o);
  return e;
}

uint64_t dixon_modulus(const Integer &group_order, uint64_t exponent) {
  Integer sqrt_floor;
  mpz_sqrt(sqrt_floor.get_mpz_t(), group_order.get_mpz_t());
  Integer bound = 2 * (sqrt_floor + (sqrt_floor * sqrt_floor == group_order
                                         ? 0
                                         : 1));
  uint64_t low = bound.fits_ulong_p() ? bound.get_ui() : 0;
  if (!bound.fits_ulong_p())
    throw ComputeError("group order too large for modulus selection");
  for (uint64_t ell = exponent + 1;; ell += exponent) {
    if (ell > (uint64_t(1) << 62))
      throw ComputeError("no admissible modulus found");
    if (ell > low && ell > 2 && is_prime(ell))
      return ell;
  }
}

namespace {

// Solves B R = W columnwise (B: k x m of full column rank, W: k x m), via
// row reduction of [B | W].
MatFp restrict_operator(const std::vector<std::vector<uint64_t>> &basis,
                        const std::vector<std::vector<uint64_t>> &image,
                        uint64_t ell) {
  std::size_t k = basis[0].size(), m = basis.size();
  MatFp aug(k, 2 * m, ell);
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t r = 0; r < k; ++r) {
      aug.at(r, c) = basis[c][r];
      aug.at(r, m + c) = image[c][r];
    }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col(m, 0);
  for (std::size_t col = 0; col < m && row < k; ++col) {
    std::size_t pr = row;
    while (pr < k && aug.at(pr, col) == 0)
      ++pr;
    if (pr == k)
      continue;
    if (pr != row)
      for (std::size_t c = 0; c < 2 * m; ++c)
        std::swap(aug.at(row, c), aug.at(pr, c));
    uint64_t inv = invmod(aug.at(row, col), ell);
    for (std::size_t c = 0; c < 2 * m; ++c)
      aug.at(row, c) = mulmod(aug.at(row, c), inv, ell);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == row || aug.at(r, col) == 0)
        continue;
      uint64_t f = aug.at(r, col);
      for (std::size_t c = 0; c < 2 * m; ++c) {
        uint64_t v = aug.at(r, c) + ell - mulmod(f, aug.at(row, c), ell);
        aug.at(r, c) = v >= ell ? v - ell : v;
      }
    }
    pivot_col[row] = col;
    ++row;
  }
  if (row != m)
    throw ComputeError("eigenspace basis lost rank");
  MatFp r(m, m, ell);
  for (std::size_t t = 0; t < m; ++t)
    for (std::size_t j = 0; j < m; ++j)
      r.at(pivot_col[t], j) = aug.at(t, m + j);
  return r;
}

std::vector<uint64_t> apply_mat(const MatFp &m,
                                const std::vector<uint64_t> &v) {
  return m.mul_vec(v);
}

} // namespace

CentralCharactersModL central_characters(const PermGroup &g,
                                         const ClassTable &t) {
  std::size_t k = t.size();
  uint64_t ell = dixon_modulus(g.order(), group_exponent(t));
  auto members = class_members(t);

  // simultaneous eigenspaces, each a list of standard-coordinate vectors
  std::vector<std::vector<std::vector<uint64_t>>> spaces;
  {
    std::vector<std::vector<uint64_t>> full;
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<uint64_t> e(k, 0);
      e[j] = 1;
      full.push_back(std::move(e));
    }
    spaces.push_back(std::move(full));
  }

  for (std::size_t i = 1; i < k; ++i) {
    bool any_big = std::any_of(spaces.begin(), spaces.end(),
                               [](const auto &s) { return s.size() > 1; });
    if (!any_big)
      break;
    MatFp mi = class_matrix_mod(g, t, members[i], ell);
    std::vector<std::vector<std::vector<uint64_t>>> next;
    for (auto &space : spaces) {
      if (space.size() == 1) {
        next.push_back(std::move(space));
        continue;
      }
      std::vector<std::vector<uint64_t>> image;
      for (const auto &v : space)
        image.push_back(apply_mat(mi, v));
      MatFp r = restrict_operator(space, image, ell);
      std::vector<uint64_t> roots = poly_roots(char_poly(r), ell);
      if (roots.size() <= 1) {
        next.push_back(std::move(space)); // scalar on this subspace
        continue;
      }
      std::size_t found = 0;
      for (uint64_t lambda : roots) {
        MatFp shifted = r;
        for (std::size_t d = 0; d < shifted.rows(); ++d) {
          uint64_t v = shifted.at(d, d) + ell - lambda;
          shifted.at(d, d) = v >= ell ? v - ell : v;
        }
        std::vector<std::vector<uint64_t>> part;
        for (const auto &coeffs : kernel_basis(shifted)) {
          std::vector<uint64_t> vec(k, 0);
          for (std::size_t c = 0; c < coeffs.size(); ++c) {
            if (coeffs[c] == 0)
              continue;
            for (std::size_t rr = 0; rr < k; ++rr) {
              vec[rr] =
                  (vec[rr] + mulmod(coeffs[c], space[c][rr], ell)) % ell;
            }
          }
          part.push_back(std::move(vec));
        }
        found += part.size();
        if (!part.empty())
          next.push_back(std::move(part));
      }
      if (found != space.size())
        throw ComputeError("eigenspace refinement dropped dimensions");
    }
    spaces = std::move(next);
  }

  for (const auto &space : spaces)
    if (space.size() != 1)
      throw ComputeError("class matrices failed to split the class algebra");

  // normalize: identity coordinate 1
  std::vector<std::vector<uint64_t>> rows;
  for (const auto &space : spaces) {
    const auto &v = space[0];
    if (v[0] == 0)
      throw ComputeError("eigenvector with zero identity coordinate");
    uint64_t inv = invmod(v[0], ell);
    std::vector<uint64_t> w(k);
    for (std::size_t j = 0; j < k; ++j)
      w[j] = mulmod(v[j], inv, ell);
    rows.push_back(std::move(w));
  }

  // degrees: d^2 = |G| / sum_j omega_j omega_{j*} / |C_j|  (mod ell)
  uint64_t order_mod = static_cast<uint64_t>(
      mpz_fdiv_ui(g.order().get_mpz_t(), ell));
  Integer sqrt_floor;
  mpz_sqrt(sqrt_floor.get_mpz_t(), g.order().get_mpz_t());
  uint64_t dmax = sqrt_floor.get_ui();
  std::vector<uint64_t> degrees;
  for (const auto &w : rows) {
    uint64_t s = 0;
    for (std::size_t j = 0; j < k; ++j) {
      uint64_t term = mulmod(w[j], w[t.inverse_class[j]], ell);
      term = mulmod(term, invmod(t.sizes[j] % ell, ell), ell);
      s = (s + term) % ell;
    }
    if (s == 0)
      throw ComputeError("degenerate character norm");
    uint64_t d2 = mulmod(order_mod, invmod(s, ell), ell);
    auto root = sqrt_mod(d2, ell);
    if (!root)
      throw ComputeError("degree square has no modular root");
    uint64_t d = *root;
    if (d > ell - d)
      d = ell - d;
    if (d == 0 || d > dmax)
      throw ComputeError("degree representative out of range");
    degrees.push_back(d);
  }

  // canonical row order: by degree, then by omega values
  std::vector<std::size_t> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (degrees[a] != degrees[b])
      return degrees[a] < degrees[b];
    return rows[a] < rows[b];
  });

  CentralCharactersModL out;
  out.ell = ell;
  out.omega = MatFp(rows.size(), k, ell);
  for (std::size_t r = 0; r < perm.size(); ++r) {
    out.degrees.push_back(degrees[perm[r]]);
    for (std::size_t j = 0; j < k; ++j)
      out.omega.at(r, j) = rows[perm[r]][j];
  }
  return out;
}

DegreeMultiset degree_multiset(const CentralCharactersModL &c,
                               const Integer &group_order) {
  std::map<uint64_t, uint64_t> mult;
  for (uint64_t d : c.degrees)
    ++mult[d];
  DegreeMultiset out;
  out.group_order = group_order;
  Integer sum = 0;
  for (const auto &[d, m] : mult) {
    out.entries.emplace_back(d, m);
    sum += Integer(static_cast<unsigned long>(d)) *
           static_cast<unsigned long>(d) * static_cast<unsigned long>(m);
    if (group_order % static_cast<unsigned long>(d) != 0)
      throw ComputeError("character degree does not divide the group order");
  }
  if (sum != group_order)
    throw ComputeError("degree squares do not sum to the group order");
  out.linear_count = mult.count(1) ? mult[1] : 0;
  if (out.linear_count == 0)
    throw ComputeError("missing trivial character");
  return out;
}

DegreeMultiset character_degrees(const PermGroup &g) {
  ClassTable t = conjugacy_classes(g);
  CentralCharactersModL c = central_characters(g, t);
  DegreeMultiset d = degree_multiset(c, g.order());
  if (d.class_count() != t.size())
    throw ComputeError("character count does not match class count");
  return d;
}

uint64_t p_regular_class_count(const ClassTable &t, uint64_t p) {
  uint64_t n = 0;
  for (uint64_t o : t.rep_orders)
    if (o % p != 0)
      ++n;
  return n;
}

} // namespace ginv
