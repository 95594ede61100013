#include "cmeis/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cmeis {

bool Poly::integer_coeffs() const {
  for (auto& a : c_)
    if (a.get_den() != 1) return false;
  return true;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (o * Rat(-1)); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Rat& a) const {
  if (a == 0) return Poly();
  std::vector<Rat> r(c_);
  for (auto& x : r) x *= a;
  return Poly(std::move(r));
}

Poly Poly::derivative() const {
  if (degree() < 1) return Poly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(r));
}

Rat Poly::eval(const Rat& x) const {
  Rat v(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& o) const {
  check(!o.is_zero(), "division by zero polynomial");
  Poly rem = *this;
  std::vector<Rat> q;
  int dq = degree() - o.degree();
  if (dq < 0) return {Poly(), rem};
  q.assign(dq + 1, Rat(0));
  while (!rem.is_zero() && rem.degree() >= o.degree()) {
    Rat f = rem.leading() / o.leading();
    int k = rem.degree() - o.degree();
    q[k] = f;
    std::vector<Rat> sub(k + o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) sub[k + i] = o.c_[i] * f;
    rem = rem - Poly(std::move(sub));
  }
  return {Poly(std::move(q)), rem};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rat(1) / a.leading());
}

Rat Poly::resultant(const Poly& o) const {
  // Euclidean resultant; fine at the degrees this project uses.
  Poly a = *this, b = o;
  if (a.is_zero() || b.is_zero()) return Rat(0);
  Rat res(1);
  while (true) {
    if (a.degree() < b.degree()) {
      std::swap(a, b);
      if ((a.degree() % 2) && (b.degree() % 2)) res = -res;
    }
    if (b.degree() == 0) {
      res *= pow_rat(b.coeff(0), a.degree());
      return res;
    }
    Poly r = a.divmod(b).second;
    if (r.is_zero()) return Rat(0);
    if ((a.degree() % 2) && (b.degree() % 2)) res = -res;
    res *= pow_rat(b.leading(), a.degree() - r.degree());
    a = std::move(b);
    b = std::move(r);
  }
}

Rat Poly::discriminant() const {
  check(degree() >= 1, "discriminant needs degree >= 1");
  Rat r = resultant(derivative());
  int n = degree();
  if (((n * (n - 1)) / 2) % 2) r = -r;
  return r / leading();
}

std::vector<Poly> Poly::sturm_chain() const {
  std::vector<Poly> chain;
  chain.push_back(*this);
  chain.push_back(derivative());
  while (!chain.back().is_zero()) {
    auto rem = chain[chain.size() - 2].divmod(chain.back()).second;
    chain.push_back(rem * Rat(-1));
  }
  chain.pop_back();
  return chain;
}

namespace {
int sign_changes(const std::vector<int>& s) {
  int n = 0, prev = 0;
  for (int v : s) {
    if (v == 0) continue;
    if (prev != 0 && v != prev) ++n;
    prev = v;
  }
  return n;
}
}  // namespace

int Poly::count_real_roots() const {
  auto chain = sturm_chain();
  std::vector<int> at_minf, at_inf;
  for (auto& p : chain) {
    if (p.is_zero()) {
      at_minf.push_back(0);
      at_inf.push_back(0);
      continue;
    }
    int ls = sgn(p.leading());
    at_inf.push_back(ls);
    at_minf.push_back(p.degree() % 2 ? -ls : ls);
  }
  return sign_changes(at_minf) - sign_changes(at_inf);
}

int Poly::count_real_roots_between(const Rat& a, const Rat& b) const {
  check(a < b, "bad interval");
  auto chain = sturm_chain();
  std::vector<int> sa, sb;
  for (auto& p : chain) {
    sa.push_back(sgn(p.eval(a)));
    sb.push_back(sgn(p.eval(b)));
  }
  return sign_changes(sa) - sign_changes(sb);
}

Rat Poly::root_bound() const {
  check(degree() >= 1, "root bound of constant");
  Rat m(0);
  for (int i = 0; i < degree(); ++i) m = std::max(m, Rat(abs(coeff(i))));
  return Rat(1) + m / abs(leading());
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rat a = coeff(i);
    if (a == 0) continue;
    if (!first) os << (a > 0 ? "+" : "-");
    else if (a < 0) os << "-";
    Rat aa = abs(a);
    if (i == 0 || aa != 1) os << aa.get_str() << (i > 0 ? "*" : "");
    if (i > 0) os << "x";
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

Poly Poly::parse(const std::string& s) {
  // term := [+-] [int] [* ] [x [^int]]
  std::vector<Rat> coeffs;
  auto add = [&](int deg, const Int& a) {
    if (deg >= static_cast<int>(coeffs.size())) coeffs.resize(deg + 1, Rat(0));
    coeffs[deg] += Rat(a);
  };
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (i == s.size()) throw input_error("empty polynomial");
  while (i < s.size()) {
    skip_ws();
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
      skip_ws();
    }
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
    skip_ws();
    if (i < s.size() && s[i] == '*') {
      ++i;
      skip_ws();
    }
    bool has_x = i < s.size() && s[i] == 'x';
    int deg = 0;
    if (has_x) {
      ++i;
      deg = 1;
      skip_ws();
      if (i < s.size() && s[i] == '^') {
        ++i;
        skip_ws();
        std::string d;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) d += s[i++];
        if (d.empty()) throw input_error("bad exponent in polynomial: " + s);
        deg = std::stoi(d);
      }
    }
    if (digits.empty() && !has_x) throw input_error("bad polynomial syntax: " + s);
    Int a = digits.empty() ? Int(1) : Int(digits);
    add(deg, sign > 0 ? a : Int(-a));
    skip_ws();
  }
  return Poly(std::move(coeffs));
}

RatInterval RatInterval::operator*(const RatInterval& o) const {
  Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
  return {std::min(std::min(a, b), std::min(c, d)),
          std::max(std::max(a, b), std::max(c, d))};
}

RatInterval eval_interval(const Poly& p, const RatInterval& x) {
  RatInterval v(Rat(0), Rat(0));
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    v = v * x + RatInterval(*it, *it);
  }
  return v;
}

}  // namespace cmeis
