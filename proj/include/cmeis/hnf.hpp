// Hermite Normal Form over Z.  Lattices are row spans; the canonical basis is
// upper triangular with positive diagonal and entries above each pivot
// reduced modulo the pivot.
#pragma once

#include <optional>
#include <vector>

#include "cmeis/numeric.hpp"

namespace cmeis {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

class HnfMatrix {
 public:
  HnfMatrix() = default;

  // Canonical HNF of the row lattice.  rows must span a full-rank sublattice
  // of Z^k; anything rank-deficient is rejected.
  static HnfMatrix from_rows(IntMat rows, size_t k);

  size_t dim() const { return h_.size(); }
  const IntMat& rows() const { return h_; }
  const Int& at(size_t i, size_t j) const { return h_[i][j]; }

  Int det() const;

  bool contains(const IntVec& x) const { return coords(x).has_value(); }
  // Integer coordinates c with c * H = x, if x lies in the lattice.
  std::optional<IntVec> coords(const IntVec& x) const;

  bool operator==(const HnfMatrix& o) const { return h_ == o.h_; }

 private:
  IntMat h_;
};

// All pairwise products wanted by ideal multiplication feed through here.
HnfMatrix hnf(const IntMat& rows, size_t k);

}  // namespace cmeis
