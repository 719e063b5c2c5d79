#include "mzv/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mzv {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
  neg_ = v < 0;
  // avoid UB on LLONG_MIN
  uint64_t mag = neg_ ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
  while (mag) {
    limbs_.push_back(static_cast<uint32_t>(mag & 0xffffffffu));
    mag >>= 32;
  }
}

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

int BigInt::cmp_abs(const BigInt& a, const BigInt& b) { return cmp_mag(a.limbs_, b.limbs_); }

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  const auto& big = a.size() >= b.size() ? a : b;
  const auto& small = a.size() >= b.size() ? b : a;
  std::vector<uint32_t> out(big.size() + 1, 0);
  uint64_t carry = 0;
  for (std::size_t i = 0; i < big.size(); ++i) {
    uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
    out[i] = static_cast<uint32_t>(s & 0xffffffffu);
    carry = s >> 32;
  }
  out[big.size()] = static_cast<uint32_t>(carry);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out(a.size(), 0);
  int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
    if (s < 0) {
      s += static_cast<int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[i] = static_cast<uint32_t>(s);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    uint64_t ai = a[i];
    if (!ai) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      uint64_t s = out[i + j] + ai * b[j] + carry;
      out[i + j] = static_cast<uint32_t>(s & 0xffffffffu);
      carry = s >> 32;
    }
    std::size_t k = i + b.size();
    while (carry) {
      uint64_t s = out[k] + carry;
      out[k] = static_cast<uint32_t>(s & 0xffffffffu);
      carry = s >> 32;
      ++k;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Knuth algorithm D over 32-bit limbs.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
  if (b.empty()) throw std::domain_error("BigInt: division by zero");
  if (cmp_mag(a, b) < 0) {
    q.clear();
    r = a;
    return;
  }
  if (b.size() == 1) {
    uint64_t d = b[0];
    q.assign(a.size(), 0);
    uint64_t rem = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | a[i];
      q[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r.clear();
    if (rem) r.push_back(static_cast<uint32_t>(rem));
    return;
  }

  // normalize so the divisor's top limb has its high bit set
  int shift = 0;
  for (uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
  const std::size_t n = b.size();
  const std::size_t m = a.size() - n;

  std::vector<uint32_t> u(a.size() + 1, 0), v(n, 0);
  if (shift) {
    for (std::size_t i = a.size(); i-- > 0;) {
      u[i + 1] |= static_cast<uint32_t>((static_cast<uint64_t>(a[i]) << shift) >> 32);
      u[i] = static_cast<uint32_t>(a[i]) << shift;
    }
    for (std::size_t i = n; i-- > 0;) {
      v[i] = b[i] << shift;
      if (i) v[i] |= static_cast<uint32_t>(static_cast<uint64_t>(b[i - 1]) >> (32 - shift));
    }
  } else {
    std::copy(a.begin(), a.end(), u.begin());
    v = b;
  }

  q.assign(m + 1, 0);
  const uint64_t vtop = v[n - 1];
  const uint64_t vsec = v[n - 2];
  for (std::size_t j = m + 1; j-- > 0;) {
    uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
    uint64_t qhat = num / vtop;
    uint64_t rhat = num % vtop;
    if (qhat > 0xffffffffu) {
      qhat = 0xffffffffu;
      rhat = num - qhat * vtop;
    }
    while (rhat <= 0xffffffffu && qhat * vsec > ((rhat << 32) | u[j + n - 2])) {
      --qhat;
      rhat += vtop;
    }
    // multiply-subtract, fixing up if qhat was one too large
    int64_t borrow = 0;
    uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      uint64_t p = qhat * v[i] + carry;
      carry = p >> 32;
      int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffu) - borrow;
      if (t < 0) {
        t += static_cast<int64_t>(kBase);
        borrow = 1;
      } else {
        borrow = 0;
      }
      u[i + j] = static_cast<uint32_t>(t);
    }
    int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
    if (t < 0) {
      t += static_cast<int64_t>(kBase);
      u[j + n] = static_cast<uint32_t>(t);
      --qhat;
      uint64_t c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c;
        u[i + j] = static_cast<uint32_t>(s & 0xffffffffu);
        c = s >> 32;
      }
      u[j + n] = static_cast<uint32_t>(u[j + n] + c);
    } else {
      u[j + n] = static_cast<uint32_t>(t);
    }
    q[j] = static_cast<uint32_t>(qhat);
  }
  while (!q.empty() && q.back() == 0) q.pop_back();

  r.assign(n, 0);
  if (shift) {
    for (std::size_t i = 0; i < n; ++i) {
      r[i] = u[i] >> shift;
      r[i] |= static_cast<uint32_t>(static_cast<uint64_t>(u[i + 1]) << (32 - shift));
    }
  } else {
    std::copy(u.begin(), u.begin() + n, r.begin());
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  if (!out.is_zero()) out.neg_ = !out.neg_;
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  out.neg_ = false;
  return out;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
  if (neg_ == rhs.neg_) {
    limbs_ = add_mag(limbs_, rhs.limbs_);
  } else if (cmp_mag(limbs_, rhs.limbs_) >= 0) {
    limbs_ = sub_mag(limbs_, rhs.limbs_);
  } else {
    limbs_ = sub_mag(rhs.limbs_, limbs_);
    neg_ = rhs.neg_;
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
  BigInt tmp = rhs;
  if (!tmp.is_zero()) tmp.neg_ = !tmp.neg_;
  return *this += tmp;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
  neg_ = neg_ != rhs.neg_;
  limbs_ = mul_mag(limbs_, rhs.limbs_);
  trim();
  return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  std::vector<uint32_t> qm, rm;
  divmod_mag(a.limbs_, b.limbs_, qm, rm);
  q.limbs_ = std::move(qm);
  q.neg_ = a.neg_ != b.neg_;
  q.trim();
  r.limbs_ = std::move(rm);
  r.neg_ = a.neg_;
  r.trim();
}

BigInt& BigInt::operator/=(const BigInt& rhs) {
  BigInt q, r;
  divmod(*this, rhs, q, r);
  return *this = std::move(q);
}

BigInt& BigInt::operator%=(const BigInt& rhs) {
  BigInt q, r;
  divmod(*this, rhs, q, r);
  return *this = std::move(r);
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.neg_ = false;
  b.neg_ = false;
  while (!b.is_zero()) {
    BigInt q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigInt BigInt::pow(BigInt base, unsigned exp) {
  BigInt out(1);
  while (exp) {
    if (exp & 1u) out *= base;
    base *= base;
    exp >>= 1;
  }
  return out;
}

BigInt BigInt::factorial(unsigned n) {
  BigInt out(1);
  for (unsigned i = 2; i <= n; ++i) out *= BigInt(static_cast<long long>(i));
  return out;
}

BigInt BigInt::binomial(unsigned long long n, unsigned long long k) {
  if (k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt out(1);
  for (unsigned long long i = 1; i <= k; ++i) {
    out *= BigInt(static_cast<long long>(n - k + i));
    out /= BigInt(static_cast<long long>(i));
  }
  return out;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
  if (a.neg_ != b.neg_) return a.neg_ ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = BigInt::cmp_mag(a.limbs_, b.limbs_);
  if (a.neg_) c = -c;
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::size_t BigInt::bit_length() const {
  if (limbs_.empty()) return 0;
  uint32_t top = limbs_.back();
  std::size_t bits = (limbs_.size() - 1) * 32;
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

bool BigInt::fits_int64() const {
  if (bit_length() < 64) return true;
  // exactly -2^63
  return neg_ && bit_length() == 64 && limbs_[0] == 0 && limbs_[1] == 0x80000000u;
}

long long BigInt::to_int64() const {
  uint64_t mag = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
  return neg_ ? -static_cast<long long>(mag) : static_cast<long long>(mag);
}

double BigInt::to_double_exp(int& exp2) const {
  exp2 = 0;
  if (limbs_.empty()) return 0.0;
  // top 64 bits are plenty for a double mantissa
  double mant = 0.0;
  std::size_t top = limbs_.size();
  std::size_t lo = top >= 3 ? top - 3 : 0;
  for (std::size_t i = top; i-- > lo;) mant = mant * static_cast<double>(kBase) + limbs_[i];
  int scale = static_cast<int>(lo * 32);
  int e = 0;
  mant = std::frexp(mant, &e);
  exp2 = e + scale;
  return neg_ ? -mant : mant;
}

double BigInt::to_double() const {
  int e = 0;
  double m = to_double_exp(e);
  return std::ldexp(m, e);
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  std::vector<uint32_t> mag = limbs_;
  std::string out;
  while (!mag.empty()) {
    uint64_t rem = 0;
    for (std::size_t i = mag.size(); i-- > 0;) {
      uint64_t cur = (rem << 32) | mag[i];
      mag[i] = static_cast<uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    while (!mag.empty() && mag.back() == 0) mag.pop_back();
    for (int d = 0; d < 9; ++d) {
      if (mag.empty() && rem == 0) break;
      out.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
    if (mag.empty()) {
      while (rem) {
        out.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    }
  }
  if (out.empty()) out = "0";
  if (neg_) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

BigInt BigInt::from_string(const std::string& s) {
  BigInt out;
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i >= s.size()) throw std::invalid_argument("BigInt: empty literal");
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
    out *= BigInt(10);
    out += BigInt(s[i] - '0');
  }
  if (neg && !out.is_zero()) out.neg_ = true;
  return out;
}

}  // namespace mzv
