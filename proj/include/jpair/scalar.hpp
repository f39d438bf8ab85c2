#pragma once

#include <array>
#include <string>

#include "jpair/error.hpp"
#include "jpair/rat.hpp"

namespace jpair {

enum class Field : unsigned char { real = 1, complex = 2, quaternion = 4 };

inline int field_components(Field f) { return static_cast<int>(f); }

inline const char* field_name(Field f) {
  switch (f) {
    case Field::real: return "R";
    case Field::complex: return "C";
    case Field::quaternion: return "H";
  }
  fail("unknown scalar field");
}

inline Field field_from_name(const std::string& s) {
  if (s == "R") return Field::real;
  if (s == "C") return Field::complex;
  if (s == "H") return Field::quaternion;
  fail("unknown scalar field '" + s + "' (expected R, C or H)");
}

// Element of R, C or H with exact rational components (1 + bi + cj + dk;
// unused components stay zero). Multiplication is Hamilton's rule, which
// restricts to complex and real multiplication on the lower components.
class Scalar {
 public:
  Scalar() : f_(Field::real) {}
  explicit Scalar(Field f) : f_(f) {}
  Scalar(Field f, Rat re) : f_(f) { c_[0] = std::move(re); }
  Scalar(Field f, std::array<Rat, 4> c) : f_(f), c_(std::move(c)) { check_components(); }

  static Scalar zero(Field f) { return Scalar(f); }
  static Scalar one(Field f) { return Scalar(f, Rat(1)); }
  // comp: 0 → 1, 1 → i, 2 → j, 3 → k.
  static Scalar unit(Field f, int comp) {
    require(comp >= 0 && comp < field_components(f), "scalar unit outside field");
    Scalar s(f);
    s.c_[comp] = Rat(1);
    return s;
  }

  Field field() const { return f_; }
  const Rat& comp(int i) const { return c_[i]; }
  Rat& comp(int i) { return c_[i]; }
  const Rat& re() const { return c_[0]; }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!c.is_zero()) return false;
    return true;
  }
  bool is_real() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

  Scalar conj() const {
    Scalar s(f_);
    s.c_ = {c_[0], -c_[1], -c_[2], -c_[3]};
    return s;
  }

  // Reduced norm x·conj(x); always a rational ≥ 0, zero only at zero.
  Rat norm2() const { return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3]; }

  Scalar inv() const {
    if (is_zero()) fail("inverse of zero scalar");
    Rat n = norm2();
    Scalar s = conj();
    for (auto& c : s.c_) c /= n;
    return s;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar s(merge(a.f_, b.f_));
    for (int i = 0; i < 4; ++i) s.c_[i] = a.c_[i] + b.c_[i];
    return s;
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar s(merge(a.f_, b.f_));
    for (int i = 0; i < 4; ++i) s.c_[i] = a.c_[i] - b.c_[i];
    return s;
  }
  Scalar operator-() const {
    Scalar s(f_);
    for (int i = 0; i < 4; ++i) s.c_[i] = -c_[i];
    return s;
  }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar s(merge(a.f_, b.f_));
    const auto& x = a.c_;
    const auto& y = b.c_;
    s.c_[0] = x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
    s.c_[1] = x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2];
    s.c_[2] = x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1];
    s.c_[3] = x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0];
    return s;
  }

  friend Scalar operator*(const Rat& r, const Scalar& a) {
    Scalar s(a.f_);
    for (int i = 0; i < 4; ++i) s.c_[i] = r * a.c_[i];
    return s;
  }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const {
    static const char* names[4] = {"", "i", "j", "k"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
      if (c_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += c_[i].str();
      out += names[i];
    }
    return out.empty() ? "0" : out;
  }

 private:
  void check_components() const {
    for (int i = field_components(f_); i < 4; ++i)
      require(c_[i].is_zero(), "scalar component outside its field");
  }
  static Field merge(Field a, Field b) {
    require(a == b, "scalar field mismatch");
    return a;
  }

  Field f_;
  std::array<Rat, 4> c_{};
};

}  // namespace jpair
