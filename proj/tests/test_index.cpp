#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "mzv/index.hpp"
#include "mzv/rational.hpp"

using namespace mzv;

TEST_CASE("weight, depth, height") {
  MultiIndex a({1, 2});
  CHECK(a.weight() == 3);
  CHECK(a.depth() == 2);
  CHECK(a.height() == 1);

  MultiIndex empty;
  CHECK(empty.weight() == 0);
  CHECK(empty.depth() == 0);
  CHECK(empty.height() == 0);

  CHECK(MultiIndex({1, 1, 1, 2}).weight() == 5);
  CHECK(MultiIndex({2, 1, 3}).depth() == 3);
  CHECK(MultiIndex({2, 1, 3}).height() == 2);
  CHECK(MultiIndex({1, 1, 2}).height() == 1);
}

TEST_CASE("admissibility") {
  CHECK(MultiIndex({1, 2}).admissible());
  CHECK_FALSE(MultiIndex({2, 1}).admissible());
  CHECK_FALSE(MultiIndex().admissible());
}

TEST_CASE("dual block formula on known pairs") {
  CHECK(dual(MultiIndex({1, 2})) == MultiIndex({3}));
  CHECK(dual(MultiIndex({2})) == MultiIndex({2}));
  CHECK(dual(MultiIndex({1, 1, 3})) == MultiIndex({1, 4}));
  CHECK(dual(MultiIndex({3})) == MultiIndex({1, 2}));
  CHECK(dual(MultiIndex({2, 3})) == MultiIndex({1, 2, 2}));
  CHECK(dual(MultiIndex({1, 1, 4})) == MultiIndex({1, 1, 4}));  // self-dual
  CHECK(dual(MultiIndex({2, 2})) == MultiIndex({2, 2}));        // self-dual
  CHECK(dual(MultiIndex({3, 1, 2})) == MultiIndex({3, 1, 2}));  // self-dual
  CHECK_THROWS_AS(dual(MultiIndex({2, 1})), std::domain_error);
  CHECK_THROWS_AS(dual(MultiIndex({2, 2}, {true, false})), std::domain_error);
}

TEST_CASE("dual({1}^m, n+2) = ({1}^n, m+2)") {
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; n <= 5; ++n) {
      MultiIndex idx = concat(ones(m), MultiIndex({n + 2}));
      MultiIndex expect = concat(ones(n), MultiIndex({m + 2}));
      CHECK(dual(idx) == expect);
    }
  }
}

TEST_CASE("duality properties, exhaustive through weight 12") {
  for (int w = 2; w <= 12; ++w) {
    long long count = 0;
    admissible_by_weight(w, [&](const MultiIndex& idx) {
      ++count;
      MultiIndex d = dual(idx);
      CHECK(d.admissible());
      CHECK(dual(d) == idx);                       // involution
      CHECK(d.weight() == idx.weight());           // weight preserved
      CHECK(d.depth() + idx.depth() == w);         // depth complement
      CHECK(d.height() == idx.height());           // height preserved
      // block formula agrees with the word reverse-complement oracle
      std::vector<bool> word = word_encode(idx);
      std::vector<bool> rc(word.size());
      for (std::size_t i = 0; i < word.size(); ++i) rc[i] = !word[word.size() - 1 - i];
      CHECK(word_decode(rc) == d);
    });
    CHECK(count == (1ll << (w - 2)));  // 2^{k-2} admissible indices of weight k
  }
}

TEST_CASE("compositions are lexicographic with binomial count") {
  Compositions gen(3, 2);
  std::vector<int> c;
  REQUIRE(gen.next(c));
  CHECK(c == std::vector<int>{1, 2});
  REQUIRE(gen.next(c));
  CHECK(c == std::vector<int>{2, 1});
  CHECK_FALSE(gen.next(c));

  int count = 0;
  Compositions(5, 3).for_each([&](const std::vector<int>&) { ++count; });
  CHECK(count == 6);

  CHECK_FALSE(Compositions(2, 3).next(c));  // k < r gives the empty stream

  for (int k = 1; k <= 9; ++k) {
    for (int r = 1; r <= k; ++r) {
      long long n = 0;
      std::vector<int> prev;
      Compositions g(k, r);
      std::vector<int> cur;
      while (g.next(cur)) {
        ++n;
        if (!prev.empty()) CHECK(prev < cur);
        prev = cur;
      }
      CHECK(n == BigInt::binomial(static_cast<unsigned>(k - 1), static_cast<unsigned>(r - 1))
                     .to_int64());
    }
  }
}

TEST_CASE("weak compositions enumerate nonnegative splittings") {
  int count = 0;
  WeakCompositions(3, 2).for_each([&](const std::vector<int>& c) {
    CHECK(c[0] + c[1] == 3);
    ++count;
  });
  CHECK(count == 4);

  std::vector<int> c;
  WeakCompositions empty(0, 0);
  CHECK(empty.next(c));
  CHECK(c.empty());
  CHECK_FALSE(empty.next(c));
}

TEST_CASE("admissible streams by weight/depth and weight/height") {
  std::vector<MultiIndex> got;
  admissible_by_weight_height(4, 1, [&](const MultiIndex& m) { got.push_back(m); });
  REQUIRE(got.size() == 3);
  CHECK(got[0] == MultiIndex({4}));
  CHECK(got[1] == MultiIndex({1, 3}));
  CHECK(got[2] == MultiIndex({1, 1, 2}));

  got.clear();
  admissible_by_weight_height(4, 2, [&](const MultiIndex& m) { got.push_back(m); });
  REQUIRE(got.size() == 1);
  CHECK(got[0] == MultiIndex({2, 2}));

  got.clear();
  admissible_by_weight_height(2, 2, [&](const MultiIndex& m) { got.push_back(m); });
  CHECK(got.empty());

  // heights and depths partition the same census
  for (int k = 2; k <= 10; ++k) {
    long long by_height = 0, by_depth = 0;
    for (int s = 0; s <= k; ++s)
      admissible_by_weight_height(k, s, [&](const MultiIndex&) { ++by_height; });
    for (int r = 1; r < k; ++r)
      admissible_by_weight_depth(k, r, [&](const MultiIndex&) { ++by_depth; });
    CHECK(by_height == (1ll << (k - 2)));
    CHECK(by_depth == (1ll << (k - 2)));
  }
}

TEST_CASE("partitions carry exact mu") {
  std::vector<Partition> got;
  partitions(3, [&](const Partition& p) { got.push_back(p); });
  REQUIRE(got.size() == 3);
  CHECK(got[0].parts == std::vector<int>{3});
  CHECK(got[0].mu == BigInt(3));
  CHECK(got[1].parts == std::vector<int>{2, 1});
  CHECK(got[1].mu == BigInt(2));
  CHECK(got[2].parts == std::vector<int>{1, 1, 1});
  CHECK(got[2].mu == BigInt(6));

  int p5 = 0;
  partitions(5, [&](const Partition&) { ++p5; });
  CHECK(p5 == 7);

  int p0 = 0;
  partitions(0, [&](const Partition& p) {
    ++p0;
    CHECK(p.parts.empty());
    CHECK(p.mu == BigInt(1));
  });
  CHECK(p0 == 1);
}

TEST_CASE("sum of 1/mu over partitions of n is exactly 1") {
  for (int n = 0; n <= 12; ++n) {
    Rational total(0);
    partitions(n, [&](const Partition& p) { total += Rational(BigInt(1), p.mu); });
    CHECK(total == Rational(1));
  }
}

TEST_CASE("index syntax round trip") {
  CHECK(parse_index("1,{1}^2,3") == MultiIndex({1, 1, 1, 3}));
  CHECK(parse_index("2,bar2") == MultiIndex({2, 2}, {false, true}));
  CHECK(parse_index("") == MultiIndex());
  CHECK(parse_index(" 4 , {2}^3 ") == MultiIndex({4, 2, 2, 2}));
  CHECK(to_string(MultiIndex({2, 2}, {false, true})) == "2,bar2");
  CHECK(to_string(parse_index("1,2,3")) == "1,2,3");
  CHECK_THROWS_AS(parse_index("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_index("0,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_index("{1}^"), std::invalid_argument);
}
