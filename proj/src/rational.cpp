#include "mzv/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace mzv {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (!g.is_one()) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt::from_string(s));
  return Rational(BigInt::from_string(s.substr(0, slash)),
                  BigInt::from_string(s.substr(slash + 1)));
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

Rational Rational::reciprocal() const {
  if (num_.is_zero()) throw std::domain_error("Rational: reciprocal of zero");
  Rational out;
  out.num_ = den_;
  out.den_ = num_;
  if (out.den_.is_negative()) {
    out.num_ = -out.num_;
    out.den_ = -out.den_;
  }
  return out;
}

Rational Rational::abs() const {
  Rational out = *this;
  out.num_ = out.num_.abs();
  return out;
}

// Knuth 4.5.1: with both operands reduced, only small gcds remain to check.
Rational& Rational::add_impl(const Rational& rhs, bool negate) {
  BigInt rn = negate ? -rhs.num_ : rhs.num_;
  BigInt g1 = BigInt::gcd(den_, rhs.den_);
  if (g1.is_one()) {
    num_ = num_ * rhs.den_ + rn * den_;
    den_ *= rhs.den_;
    return *this;  // already reduced
  }
  BigInt s1 = rhs.den_ / g1;
  BigInt t = num_ * s1 + rn * (den_ / g1);
  BigInt g2 = BigInt::gcd(t, g1);
  num_ = t / g2;
  den_ = den_ / g2 * s1;
  if (num_.is_zero()) den_ = BigInt(1);
  return *this;
}

Rational& Rational::operator+=(const Rational& rhs) { return add_impl(rhs, false); }

Rational& Rational::operator-=(const Rational& rhs) { return add_impl(rhs, true); }

Rational& Rational::operator*=(const Rational& rhs) {
  // cross-cancel first so the products and the final state stay reduced
  BigInt g1 = BigInt::gcd(num_, rhs.den_);
  BigInt g2 = BigInt::gcd(rhs.num_, den_);
  num_ = (num_ / g1) * (rhs.num_ / g2);
  den_ = (den_ / g2) * (rhs.den_ / g1);
  if (num_.is_zero()) den_ = BigInt(1);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  return *this *= rhs.reciprocal();
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

Rational Rational::inv_pow(long long n, int k) {
  if (n <= 0) throw std::domain_error("Rational: inv_pow base must be positive");
  if (k < 0) return Rational(BigInt::pow(BigInt(n), static_cast<unsigned>(-k)));
  return Rational(BigInt(1), BigInt::pow(BigInt(n), static_cast<unsigned>(k)));
}

Rational Rational::pow2(int k) {
  if (k >= 0) return Rational(BigInt::pow(BigInt(2), static_cast<unsigned>(k)));
  return Rational(BigInt(1), BigInt::pow(BigInt(2), static_cast<unsigned>(-k)));
}

double Rational::to_double() const {
  int en = 0, ed = 0;
  double mn = num_.to_double_exp(en);
  double md = den_.to_double_exp(ed);
  return std::ldexp(mn / md, en - ed);
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

}  // namespace mzv
