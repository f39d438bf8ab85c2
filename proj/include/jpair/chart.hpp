#pragma once

#include <string>
#include <vector>

#include "jpair/matrix.hpp"

namespace jpair {

enum class ModelKind { rect, sym, asym, hermC, hermH, spin };

// Realified coordinate chart on a matrix model space: a fixed ordered basis
// over R together with read-off slots, so to_coords is a table lookup and
// from_coords is a linear combination. Basis orderings are part of the public
// contract (reports and serialized vectors use them):
//   rect  — u*E_ij row-major, real components (1, i, j, k) innermost
//   sym   — diagonals u*E_ii first, then u*(E_ij + E_ji) for i < j (lex)
//   asym  — u*(E_ij - E_ji) for i < j (lex)
//   hermC — E_ii, then (E_ij + E_ji), (i*E_ij - i*E_ji) for i < j (lex)
//   hermH — E_ii, then u*E_ij + conj(u)*E_ji for u in (1, i, j, k), i < j
//   spin  — standard basis e_1..e_n of K^n as n-by-1 columns
class Chart {
 public:
  struct Slot {
    int r, c, comp;
    bool negate;
  };

  Field field() const { return field_; }
  ModelKind kind() const { return kind_; }
  int model_rows() const { return rows_; }
  int model_cols() const { return cols_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<ExactMatrix>& basis() const { return basis_; }
  const ExactMatrix& basis_at(int k) const { return basis_[k]; }

  // Throws when m is not in the modeled subspace (wrong symmetry type, wrong
  // shape, components outside the scalar field).
  RatVec to_coords(const ExactMatrix& m) const;
  ExactMatrix from_coords(const RatVec& v) const;

  friend Chart make_chart(ModelKind kind, Field f, int rows, int cols);

 private:
  Field field_ = Field::real;
  ModelKind kind_ = ModelKind::rect;
  int rows_ = 0, cols_ = 0;
  std::vector<ExactMatrix> basis_;
  std::vector<Slot> slots_;
};

Chart make_chart(ModelKind kind, Field f, int rows, int cols);

// Coordinate matrix of a linear map given by its action on basis elements.
template <typename Fn>
RatMatrix coordinate_matrix(const Chart& in, const Chart& out, Fn&& f) {
  RatMatrix m(out.dim(), in.dim());
  for (int k = 0; k < in.dim(); ++k) {
    RatVec col = out.to_coords(f(in.basis_at(k)));
    for (int i = 0; i < out.dim(); ++i) m.at(i, k) = col[i];
  }
  return m;
}

}  // namespace jpair
