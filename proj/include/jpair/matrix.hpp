#pragma once

#include <vector>

#include "jpair/scalar.hpp"

namespace jpair {

using RatVec = std::vector<Rat>;

inline bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// Dense rational matrix, row-major. The realified coordinate workhorse: all
// linear algebra (rank, kernels, congruence, subspaces) runs on these.
class RatMatrix {
 public:
  RatMatrix() : r_(0), c_(0) {}
  RatMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static RatMatrix identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
  }
  static RatMatrix from_rows(const std::vector<RatVec>& rows) {
    if (rows.empty()) return RatMatrix();
    RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.r_; ++i) {
      require(static_cast<int>(rows[i].size()) == m.c_, "ragged rows in matrix literal");
      for (int j = 0; j < m.c_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }
  static RatMatrix diagonal(const RatVec& d) {
    RatMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.r_; ++i) m.at(i, i) = d[i];
    return m;
  }
  static RatMatrix from_column(const RatVec& v) {
    RatMatrix m(static_cast<int>(v.size()), 1);
    for (int i = 0; i < m.r_; ++i) m.at(i, 0) = v[i];
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rat& at(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_square() const { return r_ == c_; }
  bool is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < r_; ++i)
      for (int j = i + 1; j < c_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  RatMatrix transpose() const {
    RatMatrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  RatVec row(int i) const {
    RatVec v(c_);
    for (int j = 0; j < c_; ++j) v[j] = at(i, j);
    return v;
  }
  RatVec col(int j) const {
    RatVec v(r_);
    for (int i = 0; i < r_; ++i) v[i] = at(i, j);
    return v;
  }

  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    require(a.r_ == b.r_ && a.c_ == b.c_, "matrix shape mismatch in +");
    RatMatrix m(a.r_, a.c_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
    return m;
  }
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    require(a.r_ == b.r_ && a.c_ == b.c_, "matrix shape mismatch in -");
    RatMatrix m(a.r_, a.c_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
    return m;
  }
  RatMatrix operator-() const {
    RatMatrix m(r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
    return m;
  }
  friend RatMatrix operator*(const Rat& s, const RatMatrix& a) {
    RatMatrix m(a.r_, a.c_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = s * a.a_[i];
    return m;
  }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    require(a.c_ == b.r_, "matrix shape mismatch in *");
    RatMatrix m(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
      for (int k = 0; k < a.c_; ++k) {
        const Rat& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.c_; ++j) {
          const Rat& bkj = b.at(k, j);
          if (!bkj.is_zero()) m.at(i, j) += aik * bkj;
        }
      }
    return m;
  }
  friend RatVec operator*(const RatMatrix& a, const RatVec& v) {
    require(a.c_ == static_cast<int>(v.size()), "matrix/vector shape mismatch");
    RatVec out(a.r_);
    for (int k = 0; k < a.c_; ++k) {
      if (v[k].is_zero()) continue;
      for (int i = 0; i < a.r_; ++i) {
        const Rat& aik = a.at(i, k);
        if (!aik.is_zero()) out[i] += aik * v[k];
      }
    }
    return out;
  }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }
  friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

  Rat trace() const {
    require(is_square(), "trace of non-square matrix");
    Rat t;
    for (int i = 0; i < r_; ++i) t += at(i, i);
    return t;
  }

 private:
  int r_, c_;
  std::vector<Rat> a_;
};

inline RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
  require(a.rows() == b.rows(), "hstack row mismatch");
  RatMatrix m(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
  }
  return m;
}

inline RatMatrix vstack(const RatMatrix& a, const RatMatrix& b) {
  require(a.cols() == b.cols() || a.rows() == 0 || b.rows() == 0, "vstack col mismatch");
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  RatMatrix m(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
  return m;
}

// Dense matrix over R, C or H. Models the untranslated objects (matrix spaces,
// spin column vectors); everything coordinate-level goes through RatMatrix.
class ExactMatrix {
 public:
  ExactMatrix() : f_(Field::real), r_(0), c_(0) {}
  ExactMatrix(Field f, int rows, int cols)
      : f_(f), r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, Scalar(f)) {}

  static ExactMatrix identity(Field f, int n) {
    ExactMatrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
  }
  // u * E_ij for a scalar u: the chart basis building block.
  static ExactMatrix unit(Field f, int rows, int cols, int i, int j, const Scalar& u) {
    ExactMatrix m(f, rows, cols);
    m.at(i, j) = u;
    return m;
  }

  Field field() const { return f_; }
  int rows() const { return r_; }
  int cols() const { return c_; }
  Scalar& at(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const Scalar& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  ExactMatrix transpose() const {
    ExactMatrix t(f_, c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
  }
  ExactMatrix conj() const {
    ExactMatrix t(f_, r_, c_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t.at(i, j) = at(i, j).conj();
    return t;
  }
  ExactMatrix conj_transpose() const {
    ExactMatrix t(f_, c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j).conj();
    return t;
  }

  bool is_hermitian() const { return is_square() && *this == conj_transpose(); }
  bool is_symmetric() const { return is_square() && *this == transpose(); }
  bool is_skew() const { return is_square() && *this == -transpose(); }
  bool is_square() const { return r_ == c_; }

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    require(a.f_ == b.f_ && a.r_ == b.r_ && a.c_ == b.c_, "matrix mismatch in +");
    ExactMatrix m(a.f_, a.r_, a.c_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
    return m;
  }
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    require(a.f_ == b.f_ && a.r_ == b.r_ && a.c_ == b.c_, "matrix mismatch in -");
    ExactMatrix m(a.f_, a.r_, a.c_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
    return m;
  }
  ExactMatrix operator-() const {
    ExactMatrix m(f_, r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
    return m;
  }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    require(a.f_ == b.f_, "matrix field mismatch in *");
    require(a.c_ == b.r_, "matrix shape mismatch in *");
    ExactMatrix m(a.f_, a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
      for (int k = 0; k < a.c_; ++k) {
        const Scalar& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.c_; ++j) {
          const Scalar& bkj = b.at(k, j);
          if (!bkj.is_zero()) m.at(i, j) += aik * bkj;
        }
      }
    return m;
  }

  // Quaternions are non-commutative: left and right scaling differ.
  ExactMatrix scale_left(const Scalar& s) const {
    ExactMatrix m(f_, r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = s * a_[i];
    return m;
  }
  ExactMatrix scale_right(const Scalar& s) const {
    ExactMatrix m(f_, r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
    return m;
  }
  friend ExactMatrix operator*(const Rat& r, const ExactMatrix& a) {
    ExactMatrix m(a.f_, a.r_, a.c_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = r * a.a_[i];
    return m;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.f_ == b.f_ && a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

  Scalar trace() const {
    require(is_square(), "trace of non-square matrix");
    Scalar t(f_);
    for (int i = 0; i < r_; ++i) t += at(i, i);
    return t;
  }

 private:
  Field f_;
  int r_, c_;
  std::vector<Scalar> a_;
};

}  // namespace jpair
