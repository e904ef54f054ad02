#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tourney {

// Counts are 128-bit: the lifting identities multiply 4-subset counts by n,
// which exceeds 64 bits well before the O(n^3) census itself becomes the
// bottleneck. 128 bits are exact for every n this artifact can census
// (overflow would need n beyond ~10^9).
using i128 = __int128;
using u128 = unsigned __int128;

inline std::string to_string(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  u128 x = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  std::string s;
  while (x > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
    x /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

inline double to_double(i128 v) { return static_cast<double>(v); }

/// Binomial coefficient, exact. k must be small (0..4 in practice).
inline i128 binomial(i128 n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
  if (n < k) return 0;
  i128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - (k - i));
    r /= i;  // product of i consecutive integers is divisible by i!
  }
  return r;
}

/// Exact rational with 128-bit numerator/denominator, always normalized,
/// denominator positive. Companions to floating approximations throughout;
/// the rational is the source of truth.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(i128 num, i128 den) : num_(num), den_(den) { normalize(); }
  static Rational integer(i128 v) { return Rational(v, 1); }

  i128 num() const { return num_; }
  i128 den() const { return den_; }

  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
  }
  Rational operator-() const { return Rational(-num_, den_); }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
  bool operator<=(const Rational& o) const { return num_ * o.den_ <= o.num_ * den_; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

  double approx() const {
    return static_cast<double>(static_cast<long double>(num_) /
                               static_cast<long double>(den_));
  }

  /// "p/q" in lowest terms ("p" when q == 1).
  std::string str() const {
    return den_ == 1 ? to_string(num_) : to_string(num_) + "/" + to_string(den_);
  }

private:
  void normalize() {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    i128 a = num_ < 0 ? -num_ : num_;
    i128 b = den_;
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    if (a > 1) { num_ /= a; den_ /= a; }
  }

  i128 num_, den_;
};

}  // namespace tourney
