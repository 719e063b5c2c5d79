#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace mzv {

/**
 * Arbitrary-precision signed integer.
 *
 * Sign-magnitude representation over base-2^32 limbs (little endian, no
 * trailing zero limbs; zero is the empty limb vector with neg_ == false).
 * Sized for this library's workloads: partition normalizers, binomial
 * coefficients, and truncated-series denominators up to a few thousand bits.
 */
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);

  static BigInt from_string(const std::string& s);

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return neg_; }
  int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }
  bool is_one() const { return !neg_ && limbs_.size() == 1 && limbs_[0] == 1; }
  bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

  BigInt operator-() const;
  BigInt abs() const;

  BigInt& operator+=(const BigInt& rhs);
  BigInt& operator-=(const BigInt& rhs);
  BigInt& operator*=(const BigInt& rhs);
  BigInt& operator/=(const BigInt& rhs);  // truncates toward zero
  BigInt& operator%=(const BigInt& rhs);  // sign follows dividend

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
  friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

  /// quotient truncated toward zero, remainder with the dividend's sign
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

  static BigInt gcd(BigInt a, BigInt b);  // always nonnegative
  static BigInt pow(BigInt base, unsigned exp);
  static BigInt factorial(unsigned n);
  static BigInt binomial(unsigned long long n, unsigned long long k);

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.neg_ == b.neg_ && a.limbs_ == b.limbs_;
  }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

  /// -1, 0, +1 comparing |a| with |b|
  static int cmp_abs(const BigInt& a, const BigInt& b);

  std::size_t bit_length() const;
  bool fits_int64() const;
  long long to_int64() const;  // caller checks fits_int64()

  /// mantissa-and-exponent conversion: value == result * 2^exp2, with
  /// |result| in [0.5, 1) for nonzero values
  double to_double_exp(int& exp2) const;
  double to_double() const;

  std::string to_string() const;

 private:
  std::vector<uint32_t> limbs_;
  bool neg_ = false;

  void trim();
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static int cmp_mag(const std::vector<uint32_t>& a,
                     const std::vector<uint32_t>& b);
  static void divmod_mag(const std::vector<uint32_t>& a,
                         const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

}  // namespace mzv
