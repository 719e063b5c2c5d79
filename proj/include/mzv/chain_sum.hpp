#pragma once

#include <vector>

#include "mzv/index.hpp"
#include "mzv/rational.hpp"

namespace mzv {

enum class ChainMode { Strict, Star };

namespace detail {

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static Rational inv_pow(long long n, int a) { return Rational::inv_pow(n, a); }
};

template <>
struct ScalarOps<double> {
  static double inv_pow(long long n, int a) {
    double inv = 1.0 / static_cast<double>(n);
    double out = 1.0;
    while (a) {
      if (a & 1) out *= inv;
      inv *= inv;
      a >>= 1;
    }
    return out;
  }
};

}  // namespace detail

/**
 * Partial sum over chains k_1 R k_2 R ... R k_r <= N of
 *   prod_j sigma_j(k_j) * k_j^{-a_j},
 * where R is '<' (Strict) or '<=' (Star) and sigma_j(k) = (-1)^k on barred
 * slots, 1 otherwise. Single left-to-right pass, O(r) state, O(r N) time.
 *
 * Instantiated with Rational this is an exact reference for the floating
 * point engine; truncations of the defining series are compared against it
 * term for term.
 */
template <class S>
S chain_partial_sum(const MultiIndex& idx, ChainMode mode, long long N) {
  const int r = idx.depth();
  if (r == 0) return S(1);
  const auto& a = idx.exponents;
  const auto& bars = idx.bars;

  S value(0);
  // running[j] = sum over chains occupying slots 1..j+1 with top value
  // already processed; running[-1] is the implicit constant 1
  std::vector<S> running(static_cast<std::size_t>(r > 1 ? r - 1 : 0), S(0));

  for (long long k = 1; k <= N; ++k) {
    const bool odd = (k & 1) != 0;
    auto factor = [&](int slot) {
      S f = detail::ScalarOps<S>::inv_pow(k, a[static_cast<std::size_t>(slot)]);
      if (bars[static_cast<std::size_t>(slot)] && odd) f = -f;
      return f;
    };
    if (mode == ChainMode::Strict) {
      // top slot sees prefixes strictly below k, so read before updating
      if (r == 1) {
        value += factor(0);
      } else {
        value += factor(r - 1) * running[static_cast<std::size_t>(r - 2)];
        for (int j = r - 2; j >= 1; --j)
          running[static_cast<std::size_t>(j)] +=
              factor(j) * running[static_cast<std::size_t>(j - 1)];
        running[0] += factor(0);
      }
    } else {
      // weak chains include k at every level, so update bottom-up first
      if (r == 1) {
        value += factor(0);
      } else {
        running[0] += factor(0);
        for (int j = 1; j <= r - 2; ++j)
          running[static_cast<std::size_t>(j)] +=
              factor(j) * running[static_cast<std::size_t>(j - 1)];
        value += factor(r - 1) * running[static_cast<std::size_t>(r - 2)];
      }
    }
  }
  return value;
}

}  // namespace mzv
