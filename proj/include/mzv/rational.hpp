#pragma once

#include <compare>
#include <string>

#include "mzv/bigint.hpp"

namespace mzv {

/// Exact rational number. Always stored reduced, denominator > 0.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}
  Rational(BigInt num, BigInt den);
  explicit Rational(BigInt num) : num_(std::move(num)), den_(1) {}

  static Rational from_string(const std::string& s);  // "p" or "p/q"

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_.is_one(); }
  int sign() const { return num_.sign(); }

  Rational operator-() const;
  Rational reciprocal() const;
  Rational abs() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// 1 / n^k, the workhorse summand factor
  static Rational inv_pow(long long n, int k);
  /// 2^k for any integer k (negative k gives an exact dyadic fraction)
  static Rational pow2(int k);

  double to_double() const;
  std::string to_string() const;

 private:
  BigInt num_;
  BigInt den_;
  void normalize();
  Rational& add_impl(const Rational& rhs, bool negate);
};

}  // namespace mzv
