#pragma once

// Exact rational arithmetic on 64-bit integers with overflow detection.
// Every quantity in the library (pairings, slopes, floors, dimensions) is
// computed with these; no floating point appears anywhere.

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace bgmu {

class Rat {
  long long num_ = 0;  // carries the sign
  long long den_ = 1;  // always positive

  static long long checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw std::overflow_error("rational arithmetic overflow");
    return static_cast<long long>(v);
  }

  void reduce128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) { __int128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    if (n == 0) d = 1;
    num_ = checked(n);
    den_ = checked(d);
  }

 public:
  Rat() = default;
  Rat(long long n) : num_(n), den_(1) {}
  Rat(long long n, long long d) { reduce128(n, d); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_nonneg() const { return num_ >= 0; }
  bool is_positive() const { return num_ > 0; }

  long long as_integer() const {
    if (den_ != 1) throw std::domain_error("expected integer, got " + str());
    return num_;
  }

  // Greatest integer <= value (exact, correct for negatives).
  long long floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  Rat operator-() const { Rat r; r.num_ = -num_; r.den_ = den_; return r; }

  friend Rat operator+(Rat const& a, Rat const& b) {
    Rat r;
    r.reduce128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                (__int128)a.den_ * b.den_);
    return r;
  }
  friend Rat operator-(Rat const& a, Rat const& b) { return a + (-b); }
  friend Rat operator*(Rat const& a, Rat const& b) {
    Rat r;
    r.reduce128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    return r;
  }
  friend Rat operator/(Rat const& a, Rat const& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    Rat r;
    r.reduce128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    return r;
  }

  Rat& operator+=(Rat const& o) { return *this = *this + o; }
  Rat& operator-=(Rat const& o) { return *this = *this - o; }
  Rat& operator*=(Rat const& o) { return *this = *this * o; }
  Rat& operator/=(Rat const& o) { return *this = *this / o; }

  friend bool operator==(Rat const& a, Rat const& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(Rat const& a, Rat const& b) {
    __int128 l = (__int128)a.num_ * b.den_;
    __int128 r = (__int128)b.num_ * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  // Parses "p" or "p/q". Throws std::invalid_argument with the bad text.
  static Rat parse(std::string const& s);
};

using QVec = std::vector<Rat>;
using ZVec = std::vector<long long>;

inline Rat abs(Rat const& r) { return r.is_nonneg() ? r : -r; }

QVec to_qvec(ZVec const& v);
ZVec to_zvec(QVec const& v);  // throws if any entry non-integral
std::string format_qvec(QVec const& v);
std::string format_zvec(ZVec const& v);

inline bool is_integral(QVec const& v) {
  for (auto const& x : v)
    if (!x.is_integer()) return false;
  return true;
}

inline QVec operator+(QVec const& a, QVec const& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
inline QVec operator-(QVec const& a, QVec const& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
inline QVec operator*(Rat const& c, QVec const& v) {
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}
inline bool is_zero(QVec const& v) {
  for (auto const& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace bgmu
