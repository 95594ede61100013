#include "cmeis/hnf.hpp"

#include <algorithm>

namespace cmeis {

HnfMatrix HnfMatrix::from_rows(IntMat rows, size_t k) {
  for (auto& r : rows) check(r.size() == k, "row width mismatch");

  IntMat h(k, IntVec(k, Int(0)));
  size_t have = 0;
  // Process columns left to right; rows[have..] have zeros in columns < col.
  for (size_t col = 0; col < k && have < k; ++col) {
    // Euclidean reduction of the live rows in this column.
    while (true) {
      size_t count = 0;
      size_t best = rows.size();
      for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][col] != 0) {
          ++count;
          if (best == rows.size() ||
              abs(rows[i][col]) < abs(rows[best][col]))
            best = i;
        }
      }
      if (count == 0) break;
      if (count == 1) {
        // Pivot found.
        if (rows[best][col] < 0)
          for (auto& v : rows[best]) v = -v;
        h[have] = rows[best];
        rows.erase(rows.begin() + best);
        ++have;
        break;
      }
      for (size_t i = 0; i < rows.size(); ++i) {
        if (i == best || rows[i][col] == 0) continue;
        Int q = floor_div(rows[i][col], rows[best][col]);
        if (q != 0)
          for (size_t j = col; j < k; ++j) rows[i][j] -= q * rows[best][j];
      }
    }
  }
  for (auto& r : rows)
    for (auto& v : r) check(v == 0, "HNF: leftover nonzero row");
  if (have != k) throw input_error("HNF: rank-deficient input");

  // Full rank forces a pivot on every diagonal entry.
  for (size_t i = 0; i < k; ++i)
    if (h[i][i] <= 0) throw input_error("HNF: rank-deficient input");

  // Reduce entries above each pivot.
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < j; ++i) {
      Int q = floor_div(h[i][j], h[j][j]);
      if (q != 0)
        for (size_t l = j; l < k; ++l) h[i][l] -= q * h[j][l];
    }

  HnfMatrix m;
  m.h_ = std::move(h);
  return m;
}

Int HnfMatrix::det() const {
  Int d(1);
  for (size_t i = 0; i < dim(); ++i) d *= h_[i][i];
  return d;
}

std::optional<IntVec> HnfMatrix::coords(const IntVec& x) const {
  size_t k = dim();
  check(x.size() == k, "coords: size mismatch");
  IntVec rem = x, c(k, Int(0));
  for (size_t i = 0; i < k; ++i) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[i].get_mpz_t(),
                h_[i][i].get_mpz_t());
    if (r != 0) return std::nullopt;
    c[i] = q;
    if (q != 0)
      for (size_t j = i; j < k; ++j) rem[j] -= q * h_[i][j];
  }
  for (auto& v : rem)
    if (v != 0) return std::nullopt;
  return c;
}

HnfMatrix hnf(const IntMat& rows, size_t k) {
  return HnfMatrix::from_rows(rows, k);
}

}  // namespace cmeis
