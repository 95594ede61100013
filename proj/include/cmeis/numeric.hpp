// Exact arithmetic base layer: arbitrary-precision integers/rationals on top
// of GMP, plus the small integer routines everything else leans on.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cmeis {

using Int = mpz_class;
using Rat = mpq_class;

// Invalid user-supplied data (CLI maps this to exit code 2).
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant; never expected on validated inputs.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void check(bool ok, const char* what) {
  if (!ok) throw internal_error(what);
}

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw input_error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw input_error("bad rational: " + s);
  r.canonicalize();
  return r;
}

inline long to_long(const Int& z) {
  if (!z.fits_slong_p()) throw internal_error("integer out of long range");
  return z.get_si();
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_rat(const Rat& r) {
  return floor_div(r.get_num(), r.get_den());
}

inline Int ceil_rat(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) {
  if (n < 0) throw internal_error("isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Kronecker symbol (a|n), fully general.
inline int kronecker(const Int& a, const Int& n) {
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

// Prime factorization by trial division with a Pollard rho fallback.
// Exact for the desk-scale integers this project meets.
std::map<Int, long> factor_integer(Int n);

// Number of positive divisors.
inline Int divisor_count(const Int& n) {
  Int d = 1;
  for (auto& [p, e] : factor_integer(abs(n))) {
    (void)p;
    d *= e + 1;
  }
  return d;
}

inline Int pow_int(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline Rat pow_rat(const Rat& b, long e) {
  if (e == 0) return Rat(1);
  unsigned long a = e > 0 ? e : -e;
  Rat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(b.get_mpq_t()), a);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(b.get_mpq_t()), a);
  if (e < 0) {
    if (b == 0) throw input_error("negative power of zero");
    r = Rat(1) / r;
  }
  r.canonicalize();
  return r;
}

}  // namespace cmeis
