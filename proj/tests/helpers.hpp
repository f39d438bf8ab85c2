#pragma once

#include <initializer_list>
#include <vector>

#include "jpair/matrix.hpp"
#include "jpair/pair.hpp"

namespace jpair::testing {

// Real matrix from integer rows.
inline ExactMatrix rmat(std::initializer_list<std::initializer_list<long long>> rows,
                        Field f = Field::real) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  ExactMatrix m(f, r, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (long long v : row) m.at(i, j++) = Scalar(f, Rat(v));
    ++i;
  }
  return m;
}

inline RatMatrix qmat(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<RatVec> rv;
  for (const auto& row : rows) {
    RatVec v;
    for (long long x : row) v.emplace_back(x);
    rv.push_back(std::move(v));
  }
  return RatMatrix::from_rows(rv);
}

inline RatVec qvec(std::initializer_list<long long> xs) {
  RatVec v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

inline Scalar cplx(long long re, long long im) {
  return Scalar(Field::complex, {Rat(re), Rat(im), Rat(0), Rat(0)});
}

inline ExactMatrix scalar_matrix(const Scalar& s) {
  ExactMatrix m(s.field(), 1, 1);
  m.at(0, 0) = s;
  return m;
}

}  // namespace jpair::testing
