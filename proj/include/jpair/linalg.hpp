#pragma once

#include <optional>
#include <vector>

#include "jpair/matrix.hpp"

namespace jpair {

// Reduced row echelon form. Pivot rule is fixed (first nonzero entry in column
// order, scanning rows top to bottom) so every result is deterministic and
// canonical for a given row span.
struct Rref {
  RatMatrix mat;
  std::vector<int> pivot_cols;
  int rank = 0;
};

Rref rref(RatMatrix m);

// rank + kernel-dim = cols; bases come back verified by multiplication.
struct RankKernelImage {
  int rank = 0;
  std::vector<RatVec> kernel;  // right kernel, one vector per free column
  std::vector<RatVec> image;   // canonical (echelon) basis of the column space
};

RankKernelImage rank_kernel_image(const RatMatrix& m);

std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b);

// Throws on a singular input.
RatMatrix inverse(const RatMatrix& m);

Rat determinant(const RatMatrix& m);

// Symmetric Gauss congruence: transform^T * g * transform = diag. Inputs that
// are not symmetric are rejected. (pos, neg, zero) counts the diagonal signs;
// by Sylvester's law the triple is an invariant of g.
struct Congruence {
  RatMatrix transform;
  RatMatrix diag;
  int pos = 0, neg = 0, zero = 0;
};

Congruence congruent_diagonalize(const RatMatrix& g);

// Subspace of Q^n stored as the canonical RREF row basis, so equal subspaces
// compare equal componentwise.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(int ambient) : ambient_(ambient) {}  // zero subspace

  static Subspace span_rows(const RatMatrix& rows);
  static Subspace span(const std::vector<RatVec>& vectors, int ambient);
  static Subspace full(int ambient) { return span_rows(RatMatrix::identity(ambient)); }

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const RatMatrix& basis_rows() const { return basis_; }
  std::vector<RatVec> basis_vectors() const;

  bool contains(const RatVec& v) const;
  bool contains(const Subspace& other) const;
  // Residual of v after eliminating along the pivot columns; zero iff v lies
  // in the subspace.
  RatVec reduce(RatVec v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  // All w with w . v = 0 for every v here (dot = plain coordinate dot).
  Subspace perp() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  int ambient_;
  RatMatrix basis_;  // RREF, no zero rows
  std::vector<int> pivots_;
};

}  // namespace jpair
