#include "jpair/chart.hpp"

#include "jpair/error.hpp"

namespace jpair {

namespace {

void push(std::vector<ExactMatrix>& basis, std::vector<Chart::Slot>& slots, ExactMatrix m, int r,
          int c, int comp, bool negate = false) {
  basis.push_back(std::move(m));
  slots.push_back({r, c, comp, negate});
}

}  // namespace

Chart make_chart(ModelKind kind, Field f, int rows, int cols) {
  Chart ch;
  ch.field_ = f;
  ch.kind_ = kind;
  ch.rows_ = rows;
  ch.cols_ = cols;
  auto& basis = ch.basis_;
  auto& slots = ch.slots_;
  const int nc = field_components(f);

  switch (kind) {
    case ModelKind::rect:
      require(rows >= 1 && cols >= 1, "rectangular model needs positive dimensions");
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
          for (int u = 0; u < nc; ++u)
            push(basis, slots, ExactMatrix::unit(f, rows, cols, i, j, Scalar::unit(f, u)), i, j, u);
      break;

    case ModelKind::sym:
      require(rows == cols && rows >= 1, "symmetric model needs square positive size");
      for (int i = 0; i < rows; ++i)
        for (int u = 0; u < nc; ++u)
          push(basis, slots, ExactMatrix::unit(f, rows, rows, i, i, Scalar::unit(f, u)), i, i, u);
      for (int i = 0; i < rows; ++i)
        for (int j = i + 1; j < rows; ++j)
          for (int u = 0; u < nc; ++u) {
            Scalar s = Scalar::unit(f, u);
            ExactMatrix m = ExactMatrix::unit(f, rows, rows, i, j, s) +
                            ExactMatrix::unit(f, rows, rows, j, i, s);
            push(basis, slots, std::move(m), i, j, u);
          }
      break;

    case ModelKind::asym:
      require(rows == cols && rows >= 1, "alternating model needs square positive size");
      for (int i = 0; i < rows; ++i)
        for (int j = i + 1; j < rows; ++j)
          for (int u = 0; u < nc; ++u) {
            Scalar s = Scalar::unit(f, u);
            ExactMatrix m = ExactMatrix::unit(f, rows, rows, i, j, s) -
                            ExactMatrix::unit(f, rows, rows, j, i, s);
            push(basis, slots, std::move(m), i, j, u);
          }
      break;

    case ModelKind::hermC: {
      require(f == Field::complex, "complex hermitian model is over C");
      require(rows == cols && rows >= 1, "hermitian model needs square positive size");
      for (int i = 0; i < rows; ++i)
        push(basis, slots, ExactMatrix::unit(f, rows, rows, i, i, Scalar::one(f)), i, i, 0);
      for (int i = 0; i < rows; ++i)
        for (int j = i + 1; j < rows; ++j) {
          ExactMatrix re = ExactMatrix::unit(f, rows, rows, i, j, Scalar::one(f)) +
                           ExactMatrix::unit(f, rows, rows, j, i, Scalar::one(f));
          push(basis, slots, std::move(re), i, j, 0);
          Scalar im = Scalar::unit(f, 1);
          ExactMatrix mi = ExactMatrix::unit(f, rows, rows, i, j, im) -
                           ExactMatrix::unit(f, rows, rows, j, i, im);
          push(basis, slots, std::move(mi), i, j, 1);
        }
      break;
    }

    case ModelKind::hermH: {
      require(f == Field::quaternion, "quaternionic hermitian model is over H");
      require(rows == cols && rows >= 1, "hermitian model needs square positive size");
      for (int i = 0; i < rows; ++i)
        push(basis, slots, ExactMatrix::unit(f, rows, rows, i, i, Scalar::one(f)), i, i, 0);
      for (int i = 0; i < rows; ++i)
        for (int j = i + 1; j < rows; ++j)
          for (int u = 0; u < 4; ++u) {
            Scalar s = Scalar::unit(f, u);
            ExactMatrix m = ExactMatrix::unit(f, rows, rows, i, j, s) +
                            ExactMatrix::unit(f, rows, rows, j, i, s.conj());
            push(basis, slots, std::move(m), i, j, u);
          }
      break;
    }

    case ModelKind::spin:
      require(f == Field::real, "spin model is over R");
      require(cols == 1 && rows >= 1, "spin model is a positive-dimensional column space");
      for (int i = 0; i < rows; ++i)
        push(basis, slots, ExactMatrix::unit(f, rows, 1, i, 0, Scalar::one(f)), i, 0, 0);
      break;
  }
  return ch;
}

RatVec Chart::to_coords(const ExactMatrix& m) const {
  require(m.field() == field_, "element field does not match the model");
  require(m.rows() == rows_ && m.cols() == cols_, "element shape does not match the model");
  RatVec v(dim());
  for (int k = 0; k < dim(); ++k) {
    const Slot& s = slots_[k];
    const Rat& e = m.at(s.r, s.c).comp(s.comp);
    v[k] = s.negate ? -e : e;
  }
  // Round-trip check rejects anything outside the modeled subspace.
  require(from_coords(v) == m, "element is outside the model space");
  return v;
}

ExactMatrix Chart::from_coords(const RatVec& v) const {
  require(static_cast<int>(v.size()) == dim(), "coordinate vector has wrong dimension");
  ExactMatrix m(field_, rows_, cols_);
  for (int k = 0; k < dim(); ++k)
    if (!v[k].is_zero()) m = m + v[k] * basis_[k];
  return m;
}

}  // namespace jpair
