#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ginv {

// Arithmetic helpers modulo word-sized primes, plus the small dense linear
// algebra over F_ell used by the character-degree computation.

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod(uint64_t a, uint64_t e, uint64_t m);
uint64_t invmod(uint64_t a, uint64_t m); // m prime, a != 0 mod m

bool is_prime(uint64_t n); // deterministic Miller-Rabin

// Prime factorization by trial division (inputs here are group orders and
// class sizes, far below 2^42).
std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n);

// Square root mod odd prime p (Tonelli-Shanks); nullopt for non-residues.
std::optional<uint64_t> sqrt_mod(uint64_t a, uint64_t p);

// Dense matrix over F_p, row major.
class MatFp {
public:
  MatFp() : rows_(0), cols_(0), p_(0) {}
  MatFp(std::size_t rows, std::size_t cols, uint64_t p)
      : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}

  static MatFp identity(std::size_t n, uint64_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  uint64_t modulus() const { return p_; }

  uint64_t &at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  uint64_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  MatFp mul(const MatFp &other) const;
  std::vector<uint64_t> mul_vec(const std::vector<uint64_t> &v) const;

private:
  std::size_t rows_, cols_;
  uint64_t p_;
  std::vector<uint64_t> a_;
};

// Basis of the right kernel {v : A v = 0}, as column vectors.
std::vector<std::vector<uint64_t>> kernel_basis(const MatFp &a);

// Characteristic polynomial of a square matrix via Hessenberg reduction,
// coefficients low-to-high, monic.
std::vector<uint64_t> char_poly(const MatFp &a);

// All roots in F_p of a nonzero polynomial (coefficients low-to-high),
// ascending, by direct scan; fine for the word-sized moduli used here.
std::vector<uint64_t> poly_roots(const std::vector<uint64_t> &poly,
                                 uint64_t p);

} // namespace ginv
