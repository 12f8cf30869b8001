#include "ginv/modular.hpp"

#include "ginv/errors.hpp"

#include <cassert>

namespace ginv {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1)
      r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

uint64_t invmod(uint64_t a, uint64_t m) {
  a %= m;
  assert(a != 0);
  return powmod(a, m - 2, m);
}

bool is_prime(uint64_t n) {
  if (n < 2)
    return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0)
      return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit inputs.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n) {
  std::vector<std::pair<uint64_t, unsigned>> out;
  for (uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p)
      continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1)
    out.emplace_back(n, 1);
  return out;
}

std::optional<uint64_t> sqrt_mod(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0)
    return 0;
  if (p == 2)
    return a;
  if (powmod(a, (p - 1) / 2, p) != 1)
    return std::nullopt;
  if (p % 4 == 3) {
    uint64_t r = powmod(a, (p + 1) / 4, p);
    return r;
  }
  // Tonelli-Shanks. p-1 = q * 2^s with q odd.
  uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  uint64_t z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1)
    ++z;
  uint64_t m = s;
  uint64_t c = powmod(z, q, p);
  uint64_t t = powmod(a, q, p);
  uint64_t r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
      if (i == m)
        return std::nullopt; // unreachable for residues
    }
    uint64_t b = powmod(c, uint64_t(1) << (m - i - 1), p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

MatFp MatFp::identity(std::size_t n, uint64_t p) {
  MatFp m(n, n, p);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = 1 % p;
  return m;
}

MatFp MatFp::mul(const MatFp &other) const {
  assert(cols_ == other.rows_ && p_ == other.p_);
  MatFp r(rows_, other.cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      uint64_t v = at(i, k);
      if (!v)
        continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        r.at(i, j) = (r.at(i, j) + mulmod(v, other.at(k, j), p_)) % p_;
      }
    }
  }
  return r;
}

std::vector<uint64_t> MatFp::mul_vec(const std::vector<uint64_t> &v) const {
  assert(v.size() == cols_);
  std::vector<uint64_t> r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    unsigned __int128 acc = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      acc += static_cast<unsigned __int128>(at(i, j)) * v[j] % p_;
    r[i] = static_cast<uint64_t>(acc % p_);
  }
  return r;
}

std::vector<std::vector<uint64_t>> kernel_basis(const MatFp &a) {
  std::size_t rows = a.rows(), cols = a.cols();
  uint64_t p = a.modulus();
  MatFp m = a;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m.at(piv, c) == 0)
      ++piv;
    if (piv == rows)
      continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(m.at(piv, j), m.at(r, j));
    uint64_t inv = invmod(m.at(r, c), p);
    for (std::size_t j = c; j < cols; ++j)
      m.at(r, j) = mulmod(m.at(r, j), inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c) == 0)
        continue;
      uint64_t f = m.at(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        uint64_t sub = mulmod(f, m.at(r, j), p);
        m.at(i, j) = (m.at(i, j) + p - sub) % p;
      }
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_col)
    is_pivot[c] = true;
  std::vector<std::vector<uint64_t>> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c])
      continue;
    std::vector<uint64_t> v(cols, 0);
    v[c] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = (p - m.at(i, c)) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<uint64_t> char_poly(const MatFp &a) {
  assert(a.rows() == a.cols());
  std::size_t n = a.rows();
  uint64_t p = a.modulus();
  if (n == 0)
    return {1};
  MatFp h = a;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && h.at(piv, c) == 0)
      ++piv;
    if (piv == n)
      continue;
    if (piv != c + 1) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(h.at(piv, j), h.at(c + 1, j));
      for (std::size_t i = 0; i < n; ++i)
        std::swap(h.at(i, piv), h.at(i, c + 1));
    }
    uint64_t inv = invmod(h.at(c + 1, c), p);
    for (std::size_t i = c + 2; i < n; ++i) {
      uint64_t f = mulmod(h.at(i, c), inv, p);
      if (!f)
        continue;
      // row_i -= f * row_{c+1}; col_{c+1} += f * col_i keeps similarity.
      for (std::size_t j = 0; j < n; ++j) {
        uint64_t sub = mulmod(f, h.at(c + 1, j), p);
        h.at(i, j) = (h.at(i, j) + p - sub) % p;
      }
      for (std::size_t i2 = 0; i2 < n; ++i2) {
        h.at(i2, c + 1) = (h.at(i2, c + 1) + mulmod(f, h.at(i2, i), p)) % p;
      }
    }
  }
  // char polys of leading principal Hessenberg blocks, low-to-high coeffs.
  std::vector<std::vector<uint64_t>> cp(n + 1);
  cp[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    // p_k(x) = (x - h[k-1][k-1]) p_{k-1}(x)
    //          - sum_{i=1}^{k-1} h[k-1-i][k-1] (prod subdiag) p_{k-1-i}(x)
    std::vector<uint64_t> pk(k + 1, 0);
    const auto &prev = cp[k - 1];
    uint64_t d = h.at(k - 1, k - 1);
    for (std::size_t j = 0; j < prev.size(); ++j) {
      pk[j + 1] = (pk[j + 1] + prev[j]) % p;
      pk[j] = (pk[j] + p - mulmod(d, prev[j], p)) % p;
    }
    uint64_t beta = 1;
    for (std::size_t i = 1; i < k; ++i) {
      beta = mulmod(beta, h.at(k - i, k - i - 1), p);
      if (!beta)
        break;
      uint64_t coef = mulmod(beta, h.at(k - 1 - i, k - 1), p);
      if (!coef)
        continue;
      const auto &lower = cp[k - 1 - i];
      for (std::size_t j = 0; j < lower.size(); ++j)
        pk[j] = (pk[j] + p - mulmod(coef, lower[j], p)) % p;
    }
    cp[k] = std::move(pk);
  }
  return cp[n];
}

std::vector<uint64_t> poly_roots(const std::vector<uint64_t> &poly,
                                 uint64_t p) {
  std::vector<uint64_t> roots;
  for (uint64_t x = 0; x < p; ++x) {
    // Horner, high-to-low.
    uint64_t v = 0;
    for (std::size_t i = poly.size(); i-- > 0;)
      v = (mulmod(v, x, p) + poly[i]) % p;
    if (v == 0)
      roots.push_back(x);
  }
  return roots;
}

} // namespace ginv
