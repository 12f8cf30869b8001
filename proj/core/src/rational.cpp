#include "ginv/rational.hpp"

#include "ginv/errors.hpp"

namespace ginv {

Rational pow_rational(const Rational &base, long e) {
  if (e == 0)
    return Rational(1);
  bool invert = e < 0;
  unsigned long k = invert ? static_cast<unsigned long>(-e)
                           : static_cast<unsigned long>(e);
  if (invert && base == 0)
    throw ComputeError("pow_rational: zero base with negative exponent");
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), k);
  if (invert)
    r = 1 / r;
  r.canonicalize();
  return r;
}

Integer pow_integer(const Integer &n, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), n.get_mpz_t(), e);
  return r;
}

std::string to_string(const Rational &q) {
  if (mpz_cmp_ui(q.get_den_mpz_t(), 1) == 0)
    return q.get_num().get_str();
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational rational_from_string(const std::string &s) {
  if (s.empty())
    throw ParseError("empty rational");
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw ParseError("bad rational: " + s);
  if (q.get_den() == 0)
    throw ParseError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

} // namespace ginv
