#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "jpair/matrix.hpp"

namespace jpair {

// Sparse coordinate vector: (index, coefficient), sorted by index, no zeros.
using SparseVec = std::vector<std::pair<int, Rat>>;

inline SparseVec sparse_from_dense(const RatVec& v) {
  SparseVec s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

inline RatVec dense_from_sparse(const SparseVec& s, int dim) {
  RatVec v(dim);
  for (const auto& [i, c] : s) v[i] += c;
  return v;
}

// Trilinear map on coordinates: slot (i, j, k) holds the coordinates of
// T(b_i, b_j, b_k). Materialized tensors store a flat CSR layout (the triples
// of the classical pairs are very sparse: O(d^2) nonzero slots for dimension
// d); lazy tensors evaluate slots on demand and are used for large homotopes.
class TripleTensor {
 public:
  TripleTensor() : d_(0) {}

  using Builder = std::function<SparseVec(int, int, int)>;

  static TripleTensor materialized(int d, const Builder& slot) {
    TripleTensor t;
    t.d_ = d;
    t.off_.reserve(static_cast<std::size_t>(d) * d * d + 1);
    t.off_.push_back(0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          SparseVec v = slot(i, j, k);
          for (auto& e : v)
            if (!e.second.is_zero()) t.ent_.push_back(std::move(e));
          t.off_.push_back(static_cast<std::uint32_t>(t.ent_.size()));
        }
    return t;
  }

  static TripleTensor lazy(int d, Builder slot) {
    TripleTensor t;
    t.d_ = d;
    t.lazy_ = std::move(slot);
    return t;
  }

  static TripleTensor zero(int d) {
    return materialized(d, [](int, int, int) { return SparseVec{}; });
  }

  int dim() const { return d_; }
  bool is_materialized() const { return !lazy_; }

  // Materialized-only fast view.
  std::span<const std::pair<int, Rat>> at(int i, int j, int k) const {
    std::size_t s = ((static_cast<std::size_t>(i) * d_ + j) * d_ + k);
    return {ent_.data() + off_[s], ent_.data() + off_[s + 1]};
  }

  SparseVec eval(int i, int j, int k) const {
    if (lazy_) return lazy_(i, j, k);
    auto v = at(i, j, k);
    return SparseVec(v.begin(), v.end());
  }

  // out += coeff * T(b_i, b_j, b_k), densely accumulated.
  void accumulate(int i, int j, int k, const Rat& coeff, RatVec& out) const {
    if (lazy_) {
      for (const auto& [m, c] : lazy_(i, j, k)) out[m] += coeff * c;
      return;
    }
    for (const auto& [m, c] : at(i, j, k)) out[m] += coeff * c;
  }

  std::size_t nonzero_slots() const { return ent_.size(); }

 private:
  int d_;
  std::vector<std::uint32_t> off_;
  std::vector<std::pair<int, Rat>> ent_;
  Builder lazy_;
};

// T(x, y, z) for dense coordinate vectors.
inline RatVec triple_eval(const TripleTensor& t, const RatVec& x, const RatVec& y,
                          const RatVec& z) {
  const int d = t.dim();
  RatVec out(d);
  for (int i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      Rat xy = x[i] * y[j];
      for (int k = 0; k < d; ++k) {
        if (z[k].is_zero()) continue;
        t.accumulate(i, j, k, xy * z[k], out);
      }
    }
  }
  return out;
}

// Coordinate matrix of z -> T(x, y, z).
inline RatMatrix left_multiplication(const TripleTensor& t, const RatVec& x, const RatVec& y) {
  const int d = t.dim();
  RatMatrix m(d, d);
  for (int i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      Rat xy = x[i] * y[j];
      for (int k = 0; k < d; ++k)
        for (const auto& [m2, c] : t.eval(i, j, k)) m.at(m2, k) += xy * c;
    }
  }
  return m;
}

}  // namespace jpair
