// Univariate polynomials with exact rational coefficients, low degree first.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmeis/numeric.hpp"

namespace cmeis {

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rat& a) { return Poly({a}); }
  static Poly x() { return Poly({Rat(0), Rat(1)}); }

  // Parses "x^3-x^2-2*x+1" style strings (integer coefficients, variable x).
  static Poly parse(const std::string& s);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0);
  }
  Rat leading() const {
    check(!c_.empty(), "leading coeff of zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool integer_coeffs() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& a) const;
  Poly operator-() const { return *this * Rat(-1); }
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly derivative() const;
  Rat eval(const Rat& x) const;

  // Euclidean division; o must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& o) const;

  // Monic gcd over Q.
  static Poly gcd(Poly a, Poly b);

  // Resultant of *this and o over Q.
  Rat resultant(const Poly& o) const;

  // disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f).
  Rat discriminant() const;

  // Number of distinct real roots, by Sturm's theorem.  Requires squarefree
  // callers to interpret with care: counts distinct roots regardless.
  int count_real_roots() const;
  int count_real_roots_between(const Rat& a, const Rat& b) const;

  // 1 + max |c_i| / |lc|: every complex root has absolute value below this.
  Rat root_bound() const;

  std::string str() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Poly> sturm_chain() const;
  std::vector<Rat> c_;
};

// Exact interval with rational endpoints; the basic certified-enclosure tool.
struct RatInterval {
  Rat lo, hi;
  RatInterval() : lo(0), hi(0) {}
  RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    check(lo <= hi, "inverted interval");
  }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  Rat width() const { return hi - lo; }
  RatInterval operator+(const RatInterval& o) const {
    return {lo + o.lo, hi + o.hi};
  }
  RatInterval operator-(const RatInterval& o) const {
    return {lo - o.hi, hi - o.lo};
  }
  RatInterval operator*(const RatInterval& o) const;
  double mid_double() const {
    return Rat((lo + hi) / 2).get_d();
  }
};

// Horner evaluation of p over an interval, exact outward bounds.
RatInterval eval_interval(const Poly& p, const RatInterval& x);

}  // namespace cmeis
