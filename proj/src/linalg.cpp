#include "jpair/linalg.hpp"

#include <algorithm>

#include "jpair/error.hpp"

namespace jpair {

Rref rref(RatMatrix m) {
  Rref out;
  const int rows = m.rows(), cols = m.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!m.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    Rat p = m.at(r, c);
    for (int j = c; j < cols; ++j) m.at(r, j) /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      Rat f = m.at(i, c);
      if (f.is_zero()) continue;
      for (int j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.mat = std::move(m);
  return out;
}

RankKernelImage rank_kernel_image(const RatMatrix& m) {
  RankKernelImage out;
  Rref e = rref(m);
  out.rank = e.rank;

  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec v(m.cols());
    v[f] = Rat(1);
    for (int i = 0; i < e.rank; ++i) v[e.pivot_cols[i]] = -e.mat.at(i, f);
    out.kernel.push_back(std::move(v));
  }

  Rref col = rref(m.transpose());
  for (int i = 0; i < col.rank; ++i) out.image.push_back(col.mat.row(i));

  // Post-conditions, verified by multiplication.
  require(out.rank + static_cast<int>(out.kernel.size()) == m.cols(),
          "rank/kernel dimension mismatch");
  for (const auto& k : out.kernel)
    require(is_zero(m * k), "kernel basis vector fails verification");
  for (const auto& im : out.image) {
    RatMatrix sys = m;  // im must be solvable: im in col span of m
    require(solve(sys, im).has_value(), "image basis vector fails verification");
  }
  return out;
}

std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b) {
  require(a.rows() == static_cast<int>(b.size()), "solve shape mismatch");
  RatMatrix aug = hstack(a, RatMatrix::from_column(b));
  Rref e = rref(aug);
  RatVec x(a.cols());
  for (int i = 0; i < e.rank; ++i) {
    int c = e.pivot_cols[i];
    if (c == a.cols()) return std::nullopt;  // pivot in the constant column
    x[c] = e.mat.at(i, a.cols());
  }
  return x;
}

RatMatrix inverse(const RatMatrix& m) {
  require(m.is_square(), "inverse of non-square matrix");
  const int n = m.rows();
  Rref e = rref(hstack(m, RatMatrix::identity(n)));
  require(e.rank >= n && (n == 0 || e.pivot_cols[n - 1] == n - 1),
          "inverse of singular matrix");
  RatMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = e.mat.at(i, n + j);
  return inv;
}

Rat determinant(const RatMatrix& m) {
  require(m.is_square(), "determinant of non-square matrix");
  RatMatrix a = m;
  const int n = a.rows();
  Rat det(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!a.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
      det = -det;
    }
    det *= a.at(c, c);
    Rat p = a.at(c, c);
    for (int i = c + 1; i < n; ++i) {
      Rat f = a.at(i, c) / p;
      if (f.is_zero()) continue;
      for (int j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
    }
  }
  return det;
}

Congruence congruent_diagonalize(const RatMatrix& g) {
  require(g.is_square(), "congruence of non-square matrix");
  require(g.is_symmetric(), "congruent_diagonalize requires a symmetric matrix");
  const int n = g.rows();
  RatMatrix a = g;
  RatMatrix c = RatMatrix::identity(n);  // column ops accumulate here

  // Symmetric Gauss: clear row+column k with the pivot at (k,k). When the
  // diagonal is zero but the row is not, add the offending column first
  // (x ↦ x + y polarization) to surface a nonzero diagonal entry.
  auto add_col = [&](int dst, int src, const Rat& f) {
    for (int i = 0; i < n; ++i) a.at(i, dst) += f * a.at(i, src);
    for (int i = 0; i < n; ++i) a.at(dst, i) += f * a.at(src, i);
    for (int i = 0; i < n; ++i) c.at(i, dst) += f * c.at(i, src);
  };
  auto swap_cols = [&](int x, int y) {
    for (int i = 0; i < n; ++i) std::swap(a.at(i, x), a.at(i, y));
    for (int i = 0; i < n; ++i) std::swap(a.at(x, i), a.at(y, i));
    for (int i = 0; i < n; ++i) std::swap(c.at(i, x), c.at(i, y));
  };

  for (int k = 0; k < n; ++k) {
    if (a.at(k, k).is_zero()) {
      int nz = -1;
      for (int j = k + 1; j < n; ++j)
        if (!a.at(j, j).is_zero()) {
          nz = j;
          break;
        }
      if (nz >= 0) {
        swap_cols(k, nz);
      } else {
        int off = -1;
        for (int j = k + 1; j < n; ++j)
          if (!a.at(k, j).is_zero()) {
            off = j;
            break;
          }
        if (off < 0) continue;  // row k already clear
        add_col(k, off, Rat(1));
      }
    }
    Rat p = a.at(k, k);
    for (int j = k + 1; j < n; ++j) {
      if (a.at(k, j).is_zero()) continue;
      add_col(j, k, -(a.at(k, j) / p));
    }
  }

  Congruence out;
  out.transform = c;
  out.diag = a;
  for (int i = 0; i < n; ++i) {
    int s = a.at(i, i).sign();
    if (s > 0)
      ++out.pos;
    else if (s < 0)
      ++out.neg;
    else
      ++out.zero;
  }
  // Post-condition: C^T G C equals the reported diagonal.
  RatMatrix check = c.transpose() * g * c;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      require(check.at(i, j) == (i == j ? a.at(i, i) : Rat(0)),
              "congruence verification failed");
  return out;
}

Subspace Subspace::span_rows(const RatMatrix& rows) {
  Subspace s(rows.cols());
  Rref e = rref(rows);
  RatMatrix basis(e.rank, rows.cols());
  for (int i = 0; i < e.rank; ++i)
    for (int j = 0; j < rows.cols(); ++j) basis.at(i, j) = e.mat.at(i, j);
  s.basis_ = std::move(basis);
  s.pivots_ = std::move(e.pivot_cols);
  return s;
}

Subspace Subspace::span(const std::vector<RatVec>& vectors, int ambient) {
  if (vectors.empty()) return Subspace(ambient);
  RatMatrix rows(static_cast<int>(vectors.size()), ambient);
  for (int i = 0; i < rows.rows(); ++i) {
    require(static_cast<int>(vectors[i].size()) == ambient, "span vector dimension mismatch");
    for (int j = 0; j < ambient; ++j) rows.at(i, j) = vectors[i][j];
  }
  return span_rows(rows);
}

std::vector<RatVec> Subspace::basis_vectors() const {
  std::vector<RatVec> out;
  out.reserve(dim());
  for (int i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

RatVec Subspace::reduce(RatVec v) const {
  require(static_cast<int>(v.size()) == ambient_, "reduce dimension mismatch");
  for (int i = 0; i < dim(); ++i) {
    const Rat& f = v[pivots_[i]];
    if (f.is_zero()) continue;
    Rat fi = f;  // v[pivots_[i]] changes below
    for (int j = 0; j < ambient_; ++j) v[j] -= fi * basis_.at(i, j);
  }
  return v;
}

bool Subspace::contains(const RatVec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  require(ambient_ == other.ambient_, "subspace ambient mismatch");
  return span_rows(vstack(basis_, other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  require(ambient_ == other.ambient_, "subspace ambient mismatch");
  // Kernel trick: solutions of [A^T | -B^T] (x; y) = 0 give A^T x in both.
  if (dim() == 0 || other.dim() == 0) return Subspace(ambient_);
  RatMatrix sys = hstack(basis_.transpose(), -other.basis_.transpose());
  RankKernelImage k = rank_kernel_image(sys);
  std::vector<RatVec> gens;
  for (const auto& v : k.kernel) {
    RatVec w(ambient_);
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < ambient_; ++j) w[j] += v[i] * basis_.at(i, j);
    gens.push_back(std::move(w));
  }
  return span(gens, ambient_);
}

Subspace Subspace::perp() const {
  if (dim() == 0) return full(ambient_);
  RankKernelImage k = rank_kernel_image(basis_);
  return span(k.kernel, ambient_);
}

}  // namespace jpair
