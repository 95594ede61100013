#include "cmeis/numeric.hpp"

namespace cmeis {

namespace {

Int pollard_rho(const Int& n) {
  // Brent's cycle variant; n odd composite, no small factors.
  for (unsigned long c = 1;; ++c) {
    Int x(2), y(2), d(1);
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      Int diff = abs(x - y);
      if (diff == 0) break;
      d = gcd(diff, n);
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_rec(Int n, std::map<Int, long>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::map<Int, long> factor_integer(Int n) {
  check(n != 0, "factoring zero");
  std::map<Int, long> out;
  if (n < 0) n = -n;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    while (n % p == 0) {
      ++out[Int(p)];
      n /= p;
    }
  }
  Int d(17);
  while (d * d <= n && d < 100000) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
    d += 2;
  }
  if (n > 1) factor_rec(n, out);
  return out;
}

}  // namespace cmeis
