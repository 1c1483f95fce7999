#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace apav {

// All exact arithmetic in the library runs on GMP. Int is an
// arbitrary-precision integer, Rat an exact rational.
using Int = mpz_class;
using Rat = mpq_class;

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int m;
  mpz_lcm(m.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return m;
}

inline long long to_longlong(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("value does not fit in 64 bits");
  return v.get_si();
}

inline Int rat_floor(const Rat& q) {
  return floor_div(Int(q.get_num()), Int(q.get_den()));
}

inline Int rat_ceil(const Rat& q) {
  return ceil_div(Int(q.get_num()), Int(q.get_den()));
}

}  // namespace apav
