// Finite fields F_{p^f} and polynomial factorization over them.
// Randomized splitting takes an explicit seed; identical seeds give
// identical factor orderings.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cmeis/poly.hpp"

namespace cmeis {

class FqField {
 public:
  // Element of F_{p^f}: coordinates in the power basis of the generator,
  // length f, entries in [0, p).
  using V = std::vector<long>;

  // modulus: monic irreducible over F_p, low degree first, length f+1.
  FqField(long p, std::vector<long> modulus);
  static FqField prime_field(long p) { return FqField(p, {0, 1}); }

  long p() const { return p_; }
  int deg() const { return static_cast<int>(mod_.size()) - 1; }
  const Int& order() const { return q_; }
  const std::vector<long>& modulus() const { return mod_; }

  V zero() const { return V(deg(), 0); }
  V one() const { return from_int(1); }
  V from_int(long a) const;
  // Image of a polynomial in the generator, i.e. reduction mod the modulus.
  V from_poly(const std::vector<long>& coeffs) const;
  bool is_zero(const V& a) const;
  bool equal(const V& a, const V& b) const { return a == b; }

  V add(const V& a, const V& b) const;
  V sub(const V& a, const V& b) const;
  V neg(const V& a) const;
  V mul(const V& a, const V& b) const;
  V inv(const V& a) const;
  V pow(V a, Int e) const;

  // Quadratic residue character: 0 for zero, else a^((q-1)/2) as +-1.
  // Requires odd q.
  int legendre(const V& a) const;

 private:
  long p_;
  std::vector<long> mod_;
  Int q_;
  long mod_p(long a) const {
    long r = a % p_;
    return r < 0 ? r + p_ : r;
  }
};

// Polynomial over F_q, low degree first, no trailing zero coefficients.
using FqPoly = std::vector<FqField::V>;

int fqp_degree(const FqPoly& f);
FqPoly fqp_from_ints(const FqField& F, const std::vector<long>& coeffs);
FqPoly fqp_from_poly(const FqField& F, const Poly& f);  // integer-coeff Poly
Poly fqp_to_poly(const FqField& F, const FqPoly& f);    // lifts to Z coeffs
FqPoly fqp_mul(const FqField& F, const FqPoly& a, const FqPoly& b);
FqPoly fqp_mod(const FqField& F, const FqPoly& a, const FqPoly& b);
FqPoly fqp_gcd(const FqField& F, FqPoly a, FqPoly b);  // monic
FqPoly fqp_monic(const FqField& F, const FqPoly& a);
FqField::V fqp_eval(const FqField& F, const FqPoly& f, const FqField::V& x);

// Complete factorization into monic irreducibles with multiplicities,
// ordered deterministically.  f must be nonzero.
std::vector<std::pair<FqPoly, int>> fq_factor(const FqField& F, FqPoly f,
                                              std::uint64_t seed);

// Factorization of an integer-coefficient polynomial modulo a prime.
// Factors are monic with coefficients lifted to [0, p).
std::vector<std::pair<Poly, int>> factor_poly_mod_p(const Poly& f, const Int& p,
                                                    std::uint64_t seed = 1);

}  // namespace cmeis
