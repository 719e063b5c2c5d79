#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mzv/bigint.hpp"

namespace mzv {

/**
 * A multi-index (alpha_1, ..., alpha_r) of positive integer exponents, each
 * slot optionally carrying a sign mark ("bar"). A barred slot contributes a
 * (-1)^{k_j} factor to the summand when the index is evaluated.
 *
 * Orientation is fixed throughout the library: summation chains increase
 * (k_1 < ... < k_r, or <= for star values) and the LAST exponent carries the
 * convergence condition. Admissible means nonempty with last exponent >= 2.
 */
struct MultiIndex {
  std::vector<int> exponents;
  std::vector<bool> bars;  // same length as exponents

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exps);
  MultiIndex(std::vector<int> exps, std::vector<bool> marks);

  int depth() const { return static_cast<int>(exponents.size()); }
  int weight() const;
  int height() const;
  bool empty() const { return exponents.empty(); }
  bool admissible() const { return !empty() && exponents.back() >= 2; }
  bool has_bars() const;

  MultiIndex reversed() const;
  MultiIndex slice(int from, int to) const;  // half-open [from, to)

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.exponents == b.exponents && a.bars == b.bars;
  }
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);
};

/// ({1}^m followed by nothing), ({e}^m), concatenations -- index builders
MultiIndex ones(int m);
MultiIndex repeat(int exponent, int m);
MultiIndex concat(const MultiIndex& a, const MultiIndex& b);
MultiIndex prepend(int exponent, const MultiIndex& rest);
MultiIndex append(const MultiIndex& rest, int exponent);

/**
 * Dual of an admissible unsigned index.
 *
 * Decompose idx = ({1}^{a1-1}, b1+1, ..., {1}^{as-1}, bs+1) with all
 * a_i, b_i >= 1; the dual is ({1}^{bs-1}, as+1, ..., {1}^{b1-1}, a1+1).
 * Multiple zeta values of dual indices are equal. Equivalent to
 * reverse-complement on the binary word encoding below.
 */
MultiIndex dual(const MultiIndex& idx);

/// binary word of an admissible unsigned index, bottom-to-top:
/// each exponent a contributes [1, 0^{a-1}]; word length == weight
std::vector<bool> word_encode(const MultiIndex& idx);
MultiIndex word_decode(const std::vector<bool>& word);

// ---------------------------------------------------------------------------
// Generators. All yield lexicographically and are independent per consumer.
// ---------------------------------------------------------------------------

/// every (a_1,...,a_r) of positive integers with sum k, C(k-1, r-1) of them
class Compositions {
 public:
  Compositions(int k, int r) : k_(k), r_(r) {}

  /// returns false when exhausted
  bool next(std::vector<int>& out);

  void for_each(const std::function<void(const std::vector<int>&)>& fn);

 private:
  int k_, r_;
  bool started_ = false;
  std::vector<int> cur_;
};

/// compositions of m into q NONNEGATIVE parts (used by the {1}^m expansions)
class WeakCompositions {
 public:
  WeakCompositions(int m, int q) : m_(m), q_(q) {}
  bool next(std::vector<int>& out);
  void for_each(const std::function<void(const std::vector<int>&)>& fn);

 private:
  int m_, q_;
  bool started_ = false;
  std::vector<int> cur_;
};

/// admissible indices of weight k and depth r (compositions with last >= 2)
void admissible_by_weight_depth(int k, int r,
                                const std::function<void(const MultiIndex&)>& fn);
/// admissible indices of weight k and height s, any depth; ordered by depth,
/// then lexicographically
void admissible_by_weight_height(int k, int s,
                                 const std::function<void(const MultiIndex&)>& fn);
/// all admissible indices of weight k (2^{k-2} of them for k >= 2)
void admissible_by_weight(int k, const std::function<void(const MultiIndex&)>& fn);

/// integer partition with its symmetric-function normalizer
/// mu = prod_i i^{m_i} * m_i!  over multiplicities m_i
struct Partition {
  std::vector<int> parts;  // weakly decreasing
  BigInt mu;
};

/// partitions of n in descending lexicographic order, exact mu attached
void partitions(int n, const std::function<void(const Partition&)>& fn);

// ---------------------------------------------------------------------------
// Shared textual syntax: comma-separated entries, {e}^m repetition blocks,
// `bar` prefix for sign marks. Example: "1,{1}^2,3" == (1,1,1,3).
// ---------------------------------------------------------------------------

MultiIndex parse_index(const std::string& text);
std::string to_string(const MultiIndex& idx);

}  // namespace mzv
