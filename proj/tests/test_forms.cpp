#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "mzv/forms.hpp"

using namespace mzv;

namespace {

GeneralForm make(FormKind kind, std::vector<int> upper, std::vector<int> lower) {
  return GeneralForm{kind, MultiIndex(std::move(upper)), MultiIndex(std::move(lower))};
}

LinearCombo mzv_combo(std::vector<int> exps, long long coeff = 1) {
  return LinearCombo::of(Atom::mzv(MultiIndex(std::move(exps))), Rational(coeff));
}

// independent interleaving census: words over {k, l} with r k's and m l's
long long count_interleavings(int r, int m) {
  if (r == 0 || m == 0) return 1;
  return count_interleavings(r - 1, m) + count_interleavings(r, m - 1);
}

}  // namespace

TEST_CASE("expand: lower-empty forms are plain values") {
  for (FormKind kind : {FormKind::B, FormKind::L, FormKind::U}) {
    LinearCombo got = expand(make(kind, {1, 3}, {}));
    CHECK(got == mzv_combo({1, 3}));
  }
}

TEST_CASE("expand: depth-1 upper collapses B to a single zeta") {
  // the weak chain is pinned to the single strict variable
  LinearCombo got = expand(make(FormKind::B, {2}, {1, 1, 3}));
  CHECK(got == mzv_combo({7}));
}

TEST_CASE("expand: depth-2 upper B form is the star sandwich") {
  // zb((a1,a2);(b)) = zetastar(a1,b,a2) - zeta(a1+b+a2), expanded strictly
  for (int a1 : {1, 2}) {
    for (int b : {1, 2}) {
      LinearCombo lhs = expand(make(FormKind::B, {a1, 2}, {b}));
      LinearCombo rhs = expand_star(MultiIndex({a1, b, 2}));
      rhs.add_atom(Atom::mzv(MultiIndex({a1 + b + 2})), Rational(-1));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("expand: depth-1 upper L and U forms are star values") {
  CHECK(expand(make(FormKind::U, {3}, {1, 2})) == expand_star(MultiIndex({1, 2, 3})));
  CHECK(expand(make(FormKind::L, {3}, {1, 2})) == expand_star(MultiIndex({3, 1, 2})));
}

TEST_CASE("expand rejects invariant violations and oversized requests") {
  CHECK_THROWS_AS(expand(make(FormKind::B, {2, 1}, {1})), std::domain_error);
  CHECK_THROWS_AS(expand(make(FormKind::L, {2}, {2, 1})), std::domain_error);
  CHECK_THROWS_AS(expand(make(FormKind::B, {}, {1})), std::domain_error);
  CHECK_THROWS_AS(expand(make(FormKind::B, {1, 1, 1, 1, 2}, {1, 1, 1, 1, 1})),
                  std::length_error);
}

TEST_CASE("interleaving census against the binomial count") {
  for (int r = 1; r <= 7; ++r)
    for (int m = 0; r + m <= 8; ++m)
      CHECK(count_interleavings(r, m) ==
            BigInt::binomial(static_cast<unsigned>(r + m), static_cast<unsigned>(m)).to_int64());

  // distinct powers of two make every merge pattern a distinct atom, so
  // full-depth atoms count the merge-free interleavings per boundary rule
  for (int r = 1; r <= 4; ++r) {
    for (int m = 0; m <= 3; ++m) {
      std::vector<int> upper, lower;
      for (int i = 0; i < r; ++i) upper.push_back(1 << (i + 1));
      for (int j = 0; j < m; ++j) lower.push_back(1 << (r + j + 1));
      long long lmerge = 0, umerge = 0, bmerge = 0;
      auto count_full_depth = [&](const LinearCombo& c) {
        long long n = 0;
        for (const auto& [t, q] : c.terms()) {
          REQUIRE(t.factors.size() == 1);
          int depth = t.factors[0].kind == AtomKind::Zeta ? 1 : t.factors[0].index.depth();
          if (depth == r + m) n += 1;
        }
        return n;
      };
      lmerge = count_full_depth(expand(make(FormKind::L, upper, lower)));
      umerge = count_full_depth(expand(make(FormKind::U, upper, lower)));
      bmerge = count_full_depth(expand(make(FormKind::B, upper, lower)));
      auto binom = [](int n, int k) {
        if (k < 0 || k > n) return 0ll;
        return BigInt::binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)).to_int64();
      };
      CHECK(lmerge == binom(r + m - 1, m));  // first slot must be the bottom k
      CHECK(umerge == binom(r + m - 1, m));  // last slot must be the top k
      // both ends pinned to strict variables; r = 1 pins them to the same one
      CHECK(bmerge == (r == 1 ? (m == 0 ? 1ll : 0ll) : binom(r + m - 2, m)));
    }
  }
}

TEST_CASE("expand_star contraction") {
  CHECK(expand_star(MultiIndex({2})) == mzv_combo({2}));

  LinearCombo two = mzv_combo({1, 2});
  two += mzv_combo({3});
  CHECK(expand_star(MultiIndex({1, 2})) == two);

  LinearCombo three = mzv_combo({1, 1, 2});
  three += mzv_combo({2, 2});
  three += mzv_combo({1, 3});
  three += mzv_combo({4});
  CHECK(expand_star(MultiIndex({1, 1, 2})) == three);

  CHECK_THROWS_AS(expand_star(MultiIndex({2, 1})), std::domain_error);
}

TEST_CASE("brute force matches hand-computed truncations") {
  CHECK(brute_force(make(FormKind::B, {2}, {}), 10) == Rational(1968329, 1270080));
  // 1 + (1/4)(3/2) + (1/9)(11/6)
  CHECK(brute_force(make(FormKind::U, {2}, {1}), 3) == Rational(341, 216));
  // empty lower: any kind reduces to the plain truncated chain sum
  for (FormKind kind : {FormKind::B, FormKind::L, FormKind::U}) {
    CHECK(brute_force(make(kind, {1, 2}, {}), 20) ==
          chain_partial_sum<Rational>(MultiIndex({1, 2}), ChainMode::Strict, 20));
  }
}

TEST_CASE("master oracle: expansion equals the double sum at finite cutoff") {
  // every interleaving resolves disjointly, so truncations agree exactly
  const long long N = 25;
  std::vector<MultiIndex> uppers, lowers;
  for (int wu = 2; wu <= 4; ++wu)
    for (int ru = 1; ru <= 2; ++ru)
      admissible_by_weight_depth(wu, ru, [&](const MultiIndex& u) { uppers.push_back(u); });
  lowers.push_back(MultiIndex());
  for (int wl = 1; wl <= 4; ++wl)
    for (int rl = 1; rl <= std::min(wl, 2); ++rl)
      Compositions(wl, rl).for_each(
          [&](const std::vector<int>& c) { lowers.push_back(MultiIndex(c)); });

  int cases = 0;
  for (FormKind kind : {FormKind::B, FormKind::L, FormKind::U}) {
    for (const MultiIndex& upper : uppers) {
      for (const MultiIndex& lower : lowers) {
        if (upper.weight() + lower.weight() > 6) continue;
        GeneralForm form{kind, upper, lower};
        if (!form.invariant_violation().empty()) continue;
        ++cases;
        CHECK(brute_force(form, N) == rational_combo_truncation(expand(form), N));
      }
    }
  }
  CHECK(cases > 50);
}

TEST_CASE("star contraction oracle at finite cutoff") {
  const long long N = 30;
  for (int w = 2; w <= 6; ++w) {
    admissible_by_weight(w, [&](const MultiIndex& idx) {
      CHECK(chain_partial_sum<Rational>(idx, ChainMode::Star, N) ==
            rational_combo_truncation(expand_star(idx), N));
    });
  }
}

TEST_CASE("ones expansions through the dual") {
  // single-entry upper (n+2): all binomials collapse to 1 and the result
  // runs over full compositions
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      LinearCombo got = zb_ones_expansion(MultiIndex({n + 2}), m);
      long long expected =
          BigInt::binomial(static_cast<unsigned>(m + n), static_cast<unsigned>(n)).to_int64();
      CHECK(static_cast<long long>(got.size()) == expected);
      for (const auto& [t, q] : got.terms()) {
        CHECK(q == Rational(1));
        REQUIRE(t.factors.size() == 1);
        int weight = t.factors[0].kind == AtomKind::Zeta ? t.factors[0].zeta_k
                                                         : t.factors[0].index.weight();
        CHECK(weight == m + n + 2);
      }
    }
  }

  // upper (1,2) has dual (3): the expansion is a single weighted zeta
  for (int m = 0; m <= 4; ++m) {
    LinearCombo got = zb_ones_expansion(MultiIndex({1, 2}), m);
    LinearCombo expect = LinearCombo::of(Atom::riemann(m + 3), Rational(m + 1));
    CHECK(got == expect);
  }

  // m = 0 keeps just the dual value
  CHECK(zb_ones_expansion(MultiIndex({2, 3}), 0) == mzv_combo({1, 2, 2}));
  CHECK(zu_ones_expansion(MultiIndex({2, 3}), 0) == mzv_combo({1, 2, 2}));

  // the {2}^{r+1} case: coefficients are prod (d_j + 1)
  LinearCombo got = zu_ones_expansion(MultiIndex({2, 2}), 2);
  LinearCombo expect;
  expect.add_atom(Atom::mzv(MultiIndex({4, 2})), Rational(3));
  expect.add_atom(Atom::mzv(MultiIndex({3, 3})), Rational(4));
  expect.add_atom(Atom::mzv(MultiIndex({2, 4})), Rational(3));
  CHECK(got == expect);

  CHECK_THROWS_AS(zb_ones_expansion(MultiIndex({2, 1}), 1), std::domain_error);
}

TEST_CASE("windowed symmetric polynomials") {
  CHECK(windowed_h(0, 5, 9) == Rational(1));
  CHECK(windowed_h(1, 2, 3) == Rational(5, 6));
  CHECK(windowed_h(2, 1, 2) == Rational(7, 4));
  CHECK(windowed_p(1, 2, 3) == Rational(5, 6));
  CHECK(windowed_p(2, 1, 2) == Rational(5, 4));
  CHECK(h_from_p(2, 1, 2) == Rational(7, 4));

  // the partition route reproduces the direct weak-chain sum
  unsigned seed = 2654435769u;
  for (int m = 0; m <= 8; ++m) {
    for (int trial = 0; trial < 4; ++trial) {
      seed = seed * 1664525u + 1013904223u;
      long long lo = 1 + seed % 20;
      seed = seed * 1664525u + 1013904223u;
      long long hi = lo + seed % (31 - lo);
      CHECK(windowed_h(m, lo, hi) == h_from_p(m, lo, hi));
    }
  }
}

TEST_CASE("expansion serializes to the atom/numerator/denominator schema") {
  LinearCombo combo = expand_star(MultiIndex({1, 2}));
  std::string json = expansion_json(combo);
  CHECK(json.find("\"atom\": \"zeta(1,2)\"") != std::string::npos);
  CHECK(json.find("\"numerator\": \"1\"") != std::string::npos);
  CHECK(json.find("\"denominator\": \"1\"") != std::string::npos);
}
