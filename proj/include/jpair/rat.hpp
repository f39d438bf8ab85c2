#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "jpair/error.hpp"

namespace jpair {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

// Largest magnitude kept inline; INT64_MIN is excluded so negation never traps.
inline constexpr long long kFitMax = INT64_MAX;

inline unsigned __int128 ugcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline unsigned __int128 uabs128(__int128 v) {
  return v < 0 ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
}

inline bool fits64(__int128 v) { return v >= -static_cast<__int128>(kFitMax) && v <= kFitMax; }

}  // namespace detail

// Exact rational number. Invariant: den > 0 and gcd(num, den) = 1, in both
// representations. Values whose canonical num/den fit in int64 (excluding
// INT64_MIN) are stored inline; larger values live in a shared heap slot with
// arbitrary-precision integers. Every operation that could overflow checks and
// promotes, so arithmetic is exact for all inputs.
class Rat {
 public:
  Rat() : n_(0), d_(1) {}
  Rat(long long n) : n_(n), d_(1) {}           // NOLINT: implicit by design
  Rat(long n) : n_(n), d_(1) {}                // NOLINT
  Rat(int n) : n_(n), d_(1) {}                 // NOLINT
  Rat(long long n, long long d) { init_small(n, d); }
  Rat(const BigInt& n, const BigInt& d) { init_big(n, d); }

  // Parses "p" or "p/q" with optional sign; anything else is an error.
  static Rat from_string(std::string_view s);

  bool is_zero() const { return !big_ && n_ == 0; }
  bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
  bool is_integer() const { return big_ ? big_->d == 1 : d_ == 1; }
  int sign() const {
    if (big_) return big_->n < 0 ? -1 : (big_->n > 0 ? 1 : 0);
    return n_ < 0 ? -1 : (n_ > 0 ? 1 : 0);
  }
  bool is_big() const { return static_cast<bool>(big_); }

  BigInt num() const { return big_ ? big_->n : BigInt(n_); }
  BigInt den() const { return big_ ? big_->d : BigInt(d_); }

  Rat operator-() const {
    if (!big_) {
      Rat r;
      r.n_ = -n_;
      r.d_ = d_;
      return r;
    }
    return Rat(-big_->n, big_->d);
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    if (!a.big_ && !b.big_) {
      if (a.d_ == 1 && b.d_ == 1) {
        long long n;
        if (!__builtin_add_overflow(a.n_, b.n_, &n) && n != INT64_MIN) return Rat::raw(n, 1);
      }
      return add_small(a, b);
    }
    return Rat(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
  }

  friend Rat operator-(const Rat& a, const Rat& b) {
    if (!a.big_ && !b.big_) {
      if (a.d_ == 1 && b.d_ == 1) {
        long long n;
        if (!__builtin_sub_overflow(a.n_, b.n_, &n) && n != INT64_MIN) return Rat::raw(n, 1);
      }
      Rat nb;
      nb.n_ = -b.n_;
      nb.d_ = b.d_;
      return add_small(a, nb);
    }
    return Rat(a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
  }

  friend Rat operator*(const Rat& a, const Rat& b) {
    if (!a.big_ && !b.big_) {
      if (a.d_ == 1 && b.d_ == 1) {
        long long n;
        if (!__builtin_mul_overflow(a.n_, b.n_, &n) && n != INT64_MIN) return Rat::raw(n, 1);
      }
      return mul_small(a, b);
    }
    return Rat(a.num() * b.num(), a.den() * b.den());
  }

  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) fail("division by zero rational");
    if (!a.big_ && !b.big_) {
      Rat inv;  // b inverted, sign moved to the numerator
      inv.n_ = b.n_ < 0 ? -b.d_ : b.d_;
      inv.d_ = b.n_ < 0 ? -b.n_ : b.n_;
      if (a.d_ == 1 && inv.d_ == 1) {
        long long n;
        if (!__builtin_mul_overflow(a.n_, inv.n_, &n) && n != INT64_MIN) return Rat::raw(n, 1);
      }
      return mul_small(a, inv);
    }
    return Rat(a.num() * b.den(), a.den() * b.num());
  }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  Rat inv() const {
    if (is_zero()) fail("inverse of zero rational");
    return Rat(1) / *this;
  }

  Rat abs() const { return sign() < 0 ? -*this : *this; }

  Rat pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    Rat r(1), b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const Rat& a, const Rat& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    return a.num() == b.num() && a.den() == b.den();  // canonical forms
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

  friend bool operator<(const Rat& a, const Rat& b) {
    if (!a.big_ && !b.big_)
      return static_cast<__int128>(a.n_) * b.d_ < static_cast<__int128>(b.n_) * a.d_;
    return a.num() * b.den() < b.num() * a.den();
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  // Canonical serialization: always "p/q" with q > 0 and gcd(p, q) = 1.
  std::string str() const {
    if (big_) return big_->n.str() + "/" + big_->d.str();
    return std::to_string(n_) + "/" + std::to_string(d_);
  }

  double to_double() const {  // diagnostics only; never used in decisions
    if (!big_) return static_cast<double>(n_) / static_cast<double>(d_);
    return big_->n.convert_to<double>() / big_->d.convert_to<double>();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  struct Big {
    BigInt n, d;
  };

  static Rat raw(long long n, long long d) {  // precondition: already canonical
    Rat r;
    r.n_ = n;
    r.d_ = d;
    return r;
  }

  void init_small(long long n, long long d) {
    if (d == 0) fail("rational with zero denominator");
    if (n == INT64_MIN || d == INT64_MIN) {
      init_big(BigInt(n), BigInt(d));
      return;
    }
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    n_ = n;
    d_ = d;
  }

  void init_big(BigInt n, BigInt d) {
    if (d == 0) fail("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    BigInt g = boost::multiprecision::gcd(n < 0 ? BigInt(-n) : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n >= -detail::kFitMax && n <= detail::kFitMax && d <= detail::kFitMax) {
      n_ = n.convert_to<long long>();
      d_ = d.convert_to<long long>();
    } else {
      n_ = 0;
      d_ = 0;
      big_ = std::make_shared<const Big>(Big{std::move(n), std::move(d)});
    }
  }

  // Both inline; result canonical. __int128 cannot overflow: |num|,den < 2^63,
  // so cross products are < 2^126 and their sum < 2^127.
  static Rat add_small(const Rat& a, const Rat& b) {
    __int128 n = static_cast<__int128>(a.n_) * b.d_ + static_cast<__int128>(b.n_) * a.d_;
    __int128 d = static_cast<__int128>(a.d_) * b.d_;
    if (n == 0) return Rat();
    unsigned __int128 g = detail::ugcd128(detail::uabs128(n), static_cast<unsigned __int128>(d));
    if (g > 1) {
      n /= static_cast<__int128>(g);
      d /= static_cast<__int128>(g);
    }
    if (detail::fits64(n) && detail::fits64(d))
      return raw(static_cast<long long>(n), static_cast<long long>(d));
    Rat r;
    r.n_ = 0;
    r.d_ = 0;
    r.big_ = std::make_shared<const Big>(Big{to_big(n), to_big(d)});
    return r;
  }

  // Cross-reduction keeps factors coprime, so no trailing gcd is needed.
  static Rat mul_small(const Rat& a, const Rat& b) {
    long long an = a.n_, bn = b.n_;
    long long g1 = std::gcd(an < 0 ? -an : an, b.d_);
    long long g2 = std::gcd(bn < 0 ? -bn : bn, a.d_);
    __int128 n = static_cast<__int128>(an / g1) * (bn / g2);
    __int128 d = static_cast<__int128>(a.d_ / g2) * (b.d_ / g1);
    if (detail::fits64(n) && detail::fits64(d))
      return raw(static_cast<long long>(n), static_cast<long long>(d));
    Rat r;
    r.n_ = 0;
    r.d_ = 0;
    r.big_ = std::make_shared<const Big>(Big{to_big(n), to_big(d)});
    return r;
  }

  static BigInt to_big(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = detail::uabs128(v);
    BigInt hi = static_cast<std::uint64_t>(u >> 64);
    BigInt lo = static_cast<std::uint64_t>(u);
    BigInt r = (hi << 64) | lo;
    return neg ? BigInt(-r) : r;
  }

  long long n_, d_;
  std::shared_ptr<const Big> big_;
};

inline Rat Rat::from_string(std::string_view s) {
  auto parse_int = [](std::string_view t) -> BigInt {
    if (t.empty()) fail("empty integer in rational literal");
    std::size_t i = 0;
    bool neg = false;
    if (t[0] == '+' || t[0] == '-') {
      neg = t[0] == '-';
      i = 1;
    }
    if (i == t.size()) fail("sign without digits in rational literal");
    BigInt v = 0;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') fail("invalid character in rational literal");
      v = v * 10 + (t[i] - '0');
    }
    return neg ? BigInt(-v) : v;
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(s), BigInt(1));
  return Rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

}  // namespace jpair
