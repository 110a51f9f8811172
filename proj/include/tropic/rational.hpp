#ifndef TROPIC_RATIONAL_HPP
#define TROPIC_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "tropic/errors.hpp"

namespace tropic {

struct overflow_error : std::runtime_error {
  overflow_error() : std::runtime_error("rational overflow") {}
};

// Exact rational on 64-bit limbs.  All intermediates go through 128 bits
// and throw on overflow rather than wrapping; the quantities in this
// library (edge lengths, offsets, tuple counts over S_d with d small)
// stay far below the limit in practice.
class Rational {
public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (den_ == 0) throw domain_error("rational with zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

  // Exact integer value; throws if not an integer.
  std::int64_t as_integer() const {
    if (den_ != 1) throw domain_error("rational is not an integer");
    return num_;
  }

  friend Rational operator-(const Rational& x) { return Rational(-x.num_, x.den_, raw{}); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw domain_error("rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& x) { return *this = *this + x; }
  Rational& operator-=(const Rational& x) { return *this = *this - x; }
  Rational& operator*=(const Rational& x) { return *this = *this * x; }
  Rational& operator/=(const Rational& x) { return *this = *this / x; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // Canonical form "p/q" with q > 0 and gcd(p, q) = 1.
  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "p/q" or a bare integer "p".
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(std::stoll(s));
      return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw domain_error("malformed rational: " + s);
    } catch (const std::out_of_range&) {
      throw domain_error("rational out of range: " + s);
    }
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num_;
    if (r.den_ != 1) os << '/' << r.den_;
    return os;
  }

private:
  struct raw {};
  using i128 = __int128;

  Rational(std::int64_t n, std::int64_t d, raw) : num_(n), den_(d) {}

  static Rational make(i128 n, i128 d) {
    if (d == 0) throw domain_error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX) throw overflow_error();
    return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d), raw{});
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  void normalize() {
    if (den_ < 0) {
      if (num_ == INT64_MIN || den_ == INT64_MIN) throw overflow_error();
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  std::int64_t num_;
  std::int64_t den_;
};

inline std::int64_t lcm_den(std::int64_t acc, const Rational& r) {
  std::int64_t d = r.den();
  std::int64_t g = std::gcd(acc, d);
  __int128 l = (__int128)(acc / g) * d;
  if (l > INT64_MAX) throw overflow_error();
  return static_cast<std::int64_t>(l);
}

}  // namespace tropic

#endif
