// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line. Tolerances and grids are pinned here, not configurable.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "mzv/eval.hpp"
#include "mzv/expr.hpp"
#include "mzv/forms.hpp"
#include "mzv/suite.hpp"

using namespace mzv;

namespace {

const SuiteConfig kSuiteCfg{};  // 1e-7 per side, cutoff cap 1e8, compensated

struct Criterion {
  int number;
  const char* label;
  bool ok = true;
  long long checks = 0;

  Criterion(int number, const char* label) : number(number), label(label) {}
  void expect(bool cond) {
    ++checks;
    ok = ok && cond;
  }
  ~Criterion() {
    std::printf("criterion %2d (%s): %s  [%lld checks]\n", number, label,
                ok ? "PASS" : "FAIL", checks);
    std::fflush(stdout);
  }
};

bool all_pass(const std::vector<Verdict>& vs, double budget_cap, Criterion& c) {
  bool ok = true;
  for (const Verdict& v : vs) {
    c.expect(v.status == Status::Pass);
    c.expect(v.budget <= budget_cap);
    ok = ok && v.status == Status::Pass && v.budget <= budget_cap;
  }
  return ok;
}

double eval_diff(const std::string& lhs, const std::string& rhs) {
  EvalConfig cfg{1e-9, 100000000, Summation::Compensated};
  EvalResult l = eval_combo(to_combo(parse(lhs)), cfg);
  EvalResult r = eval_combo(to_combo(parse(rhs)), cfg);
  return std::abs(l.value - r.value);
}

}  // namespace

TEST_CASE("criterion 1: sum formulas over the full grid") {
  Criterion c(1, "sum formulas, k <= 8, r < k, budget <= 1e-6, < 60 s");
  auto start = std::chrono::steady_clock::now();
  std::vector<Params> grid;
  for (long long k = 2; k <= 8; ++k)
    for (long long r = 1; r < k; ++r) grid.push_back({{"k", k}, {"r", r}});
  all_pass(sweep("sum_formula", grid, kSuiteCfg), 1e-6, c);
  all_pass(sweep("sum_formula_star", grid, kSuiteCfg), 1e-6, c);
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(seconds < 60.0);
  CHECK(c.ok);
}

TEST_CASE("criterion 2: fixed weight and height star sums") {
  Criterion c(2, "Aoki-Ohno for k <= 8 and every height");
  std::vector<Params> grid;
  for (long long k = 2; k <= 8; ++k)
    for (long long s = 1; 2 * s <= k; ++s) grid.push_back({{"k", k}, {"s", s}});
  all_pass(sweep("aoki_ohno", grid, kSuiteCfg), 1e-6, c);
  CHECK(c.ok);
}

TEST_CASE("criterion 3: the four main theorems within 1e-5 budgets") {
  Criterion c(3, "height-two and ones-against-twos sums");
  std::vector<Params> thm1_grid;
  for (long long m = 0; m <= 4; ++m)
    for (long long n = 2; n <= 5; ++n) thm1_grid.push_back({{"m", m}, {"n", n}});
  all_pass(sweep("thm1", thm1_grid, kSuiteCfg), 1e-5, c);

  std::vector<Params> p_grid;
  for (long long p = 0; p <= 5; ++p) p_grid.push_back({{"p", p}});
  all_pass(sweep("thm2", p_grid, kSuiteCfg), 1e-5, c);
  all_pass(sweep("thm3", p_grid, kSuiteCfg), 1e-5, c);  // includes zeta(p+2, bar 2)

  std::vector<Params> q_grid;
  for (long long q = 0; q <= 2; ++q) q_grid.push_back({{"q", q}});
  all_pass(sweep("thm3_even", q_grid, kSuiteCfg), 1e-5, c);

  std::vector<Params> mn_grid;
  for (long long m = 0; m <= 3; ++m)
    for (long long n = 0; n <= 3; ++n) mn_grid.push_back({{"m", m}, {"n", n}});
  all_pass(sweep("thm4", mn_grid, kSuiteCfg), 1e-5, c);
  CHECK(c.ok);
}

TEST_CASE("criterion 4: spot closed forms to 1e-8") {
  Criterion c(4, "spot closed forms");
  c.expect(eval_diff("zetastar(2,2)", "7/4*zeta(4)") <= 1e-8);
  c.expect(eval_diff("zeta(2,2)", "3/4*zeta(4)") <= 1e-8);
  c.expect(eval_diff("zetastar(1,2)", "2*zeta(3)") <= 1e-8);
  c.expect(eval_diff("zetastar(1,1,2)", "3*zeta(4)") <= 1e-8);
  CHECK(c.ok);
}

TEST_CASE("criterion 5: exact rational oracles") {
  Criterion c(5, "expansion vs defining double sums, exact at finite cutoffs");

  // every form kind, chain depths <= 3, total weight <= 7, N = 40
  std::vector<MultiIndex> uppers, lowers;
  for (int w = 2; w <= 7; ++w)
    for (int r = 1; r <= 3 && r < w; ++r)
      admissible_by_weight_depth(w, r, [&](const MultiIndex& u) { uppers.push_back(u); });
  lowers.push_back(MultiIndex());
  for (int w = 1; w <= 5; ++w)
    for (int r = 1; r <= 3 && r <= w; ++r)
      Compositions(w, r).for_each(
          [&](const std::vector<int>& v) { lowers.push_back(MultiIndex(v)); });

  long long cases = 0;
  for (FormKind kind : {FormKind::B, FormKind::L, FormKind::U}) {
    for (const MultiIndex& upper : uppers) {
      for (const MultiIndex& lower : lowers) {
        if (upper.weight() + lower.weight() > 7) continue;
        GeneralForm form{kind, upper, lower};
        if (!form.invariant_violation().empty()) continue;
        ++cases;
        c.expect(brute_force(form, 40) == rational_combo_truncation(expand(form), 40));
      }
    }
  }
  c.expect(cases >= 200);
  std::printf("  (%lld expansion/double-sum cases)\n", cases);

  // star contraction oracle, every admissible index of weight <= 7
  for (int w = 2; w <= 7; ++w)
    admissible_by_weight(w, [&](const MultiIndex& idx) {
      c.expect(chain_partial_sum<Rational>(idx, ChainMode::Star, 40) ==
               rational_combo_truncation(expand_star(idx), 40));
    });

  // product splits and the capped-to-bounded conversion, exact at three cutoffs
  std::vector<MultiIndex> small;
  for (int w = 2; w <= 4; ++w)
    admissible_by_weight_depth(w, 1, [&](const MultiIndex& u) { small.push_back(u); });
  admissible_by_weight_depth(3, 2, [&](const MultiIndex& u) { small.push_back(u); });
  admissible_by_weight_depth(4, 2, [&](const MultiIndex& u) { small.push_back(u); });
  for (long long N : {10ll, 25ll, 40ll}) {
    for (const MultiIndex& alpha : small) {
      for (const MultiIndex& beta : small) {
        IdentityInstance sl = product_split_L(alpha, beta);
        IdentityInstance su = product_split_U(alpha, beta);
        if (sl.domain_ok)
          c.expect(rational_combo_truncation(sl.lhs, N) ==
                   rational_combo_truncation(sl.rhs, N));
        if (su.domain_ok)
          c.expect(rational_combo_truncation(su.lhs, N) ==
                   rational_combo_truncation(su.rhs, N));
      }
      for (const MultiIndex& beta : lowers) {
        if (beta.weight() > 3) continue;
        IdentityInstance conv = zu_to_zb(alpha, beta);
        if (!conv.domain_ok) continue;
        c.expect(rational_combo_truncation(conv.lhs, N) ==
                 rational_combo_truncation(conv.rhs, N));
      }
    }
  }
  CHECK(c.ok);
}

TEST_CASE("criterion 6: duality properties, exhaustive through weight 12") {
  Criterion c(6, "duality involution/weight/depth/height");
  for (int w = 2; w <= 12; ++w) {
    admissible_by_weight(w, [&](const MultiIndex& idx) {
      MultiIndex d = dual(idx);
      c.expect(dual(d) == idx);
      c.expect(d.weight() == idx.weight());
      c.expect(d.depth() + idx.depth() == w);
      c.expect(d.height() == idx.height());
    });
  }
  CHECK(c.ok);
}

TEST_CASE("criterion 7: ones-block expansions against the merge engine") {
  Criterion c(7, "dual expansions agree with expand() numerically");
  std::vector<Params> grid;
  for (long long w = 2; w <= 6; ++w)
    for (long long i = 0; i < (1ll << (w - 2)); ++i)
      for (long long m = 0; m <= 3; ++m) grid.push_back({{"w", w}, {"i", i}, {"m", m}});
  all_pass(sweep("prop_zb_dual", grid, kSuiteCfg), 1e-6, c);
  all_pass(sweep("prop_zu_dual", grid, kSuiteCfg), 1e-6, c);
  CHECK(c.ok);
}

TEST_CASE("criterion 8: height-one machinery") {
  Criterion c(8, "height-one sums and their convolution");
  std::vector<Params> zm_grid, zp_grid, cv_grid;
  for (long long n = 0; n <= 9; ++n) zm_grid.push_back({{"n", n}});
  for (long long n = 0; n <= 10; ++n) zp_grid.push_back({{"n", n}});
  for (long long p = 0; p <= 8; ++p) cv_grid.push_back({{"p", p}});
  all_pass(sweep("zminus_closed", zm_grid, kSuiteCfg), 1e-6, c);  // includes odd n -> 0
  all_pass(sweep("zstarplus_closed", zp_grid, kSuiteCfg), 1e-6, c);
  all_pass(sweep("conv_p", cv_grid, kSuiteCfg), 1e-6, c);
  CHECK(c.ok);
}

TEST_CASE("criterion 9: the applications suite") {
  Criterion c(9, "evaluations and weighted sums");
  auto grid1 = [](const char* name, long long lo, long long hi) {
    std::vector<Params> g;
    for (long long v = lo; v <= hi; ++v) g.push_back({{name, v}});
    return g;
  };
  all_pass(sweep("s6_1m2", grid1("m", 0, 8), kSuiteCfg), 1e-6, c);
  all_pass(sweep("s6_1m22_a", grid1("m", 0, 5), kSuiteCfg), 1e-6, c);
  all_pass(sweep("s6_1m22_b", grid1("m", 0, 5), kSuiteCfg), 1e-6, c);
  all_pass(sweep("s6_1m22_cross", grid1("m", 0, 5), kSuiteCfg), 1e-6, c);
  all_pass(sweep("prop61_weighted", grid1("m", 0, 5), kSuiteCfg), 1e-6, c);
  all_pass(sweep("s6_euler_weighted", grid1("m", 1, 5), kSuiteCfg), 1e-6, c);
  all_pass(sweep("eie_yang_2pow", grid1("m", 0, 5), kSuiteCfg), 1e-6, c);
  all_pass(sweep("s6_1_2n", grid1("n", 0, 4), kSuiteCfg), 1e-6, c);
  all_pass(sweep("zagier_aggregate", grid1("r", 0, 3), kSuiteCfg), 1e-6, c);
  {
    std::vector<Params> rs;
    for (long long m = 0; m <= 3; ++m) rs.push_back({{"s", 2}, {"m", m}, {"r1", 3}});
    all_pass(sweep("rs_id", rs, kSuiteCfg), 1e-6, c);
  }
  all_pass(sweep("prop62", grid1("n", 0, 3), kSuiteCfg), 1e-6, c);
  all_pass(sweep("eie_yang_remark", grid1("n", 0, 5), kSuiteCfg), 1e-6, c);
  all_pass(sweep("s6_m3", grid1("n", 0, 2), kSuiteCfg), 1e-6, c);
  CHECK(c.ok);
}

TEST_CASE("criterion 10: two-chain recursion chain") {
  Criterion c(10, "bounded-form identities close the sum formula");
  std::vector<Params> p71;
  for (int w = 3; w <= 8; ++w) {
    long long i = 0;
    admissible_by_weight(w, [&](const MultiIndex& idx) {
      for (long long m = 1; m <= idx.depth() - 1; ++m)
        p71.push_back({{"w", w}, {"i", i}, {"m", m}});
      ++i;
    });
  }
  all_pass(sweep("prop71", p71, kSuiteCfg), 1e-6, c);

  std::vector<Params> chain;
  for (long long m = 0; m <= 3; ++m)
    for (long long n = 0; n <= 3; ++n) chain.push_back({{"m", m}, {"n", n}});
  all_pass(sweep("sum_formula_chain", chain, kSuiteCfg), 1e-6, c);
  CHECK(c.ok);
}

TEST_CASE("criterion 11: direct engine certification") {
  Criterion c(11, "cutoff refinement stays inside reported bounds");
  unsigned seed = 20260808u;
  auto next = [&seed]() {
    seed = seed * 1664525u + 1013904223u;
    return seed;
  };
  int done = 0;
  while (done < 20) {
    int w = 3 + static_cast<int>(next() % 6);  // weight 3..8
    std::vector<MultiIndex> pool;
    admissible_by_weight(w, [&](const MultiIndex& m) { pool.push_back(m); });
    const MultiIndex idx = pool[next() % pool.size()];

    const long long N = 4000;
    EvalConfig at_n{1e-30, N, Summation::Compensated};
    EvalConfig at_2n{1e-30, 2 * N, Summation::Compensated};
    EvalResult vn = eval_mzv(idx, ChainMode::Strict, at_n);
    EvalResult v2n = eval_mzv(idx, ChainMode::Strict, at_2n);
    c.expect(vn.cutoff == N);
    c.expect(v2n.cutoff == 2 * N);
    c.expect(std::abs(vn.value - v2n.value) <= vn.error_bound);
    ++done;
  }
  for (int k = 2; k <= 12; ++k) {
    EvalResult dp = eval_mzv(MultiIndex({k}), ChainMode::Strict, EvalConfig{});
    EvalResult em = eval_riemann(k);
    c.expect(std::abs(dp.value - em.value) <= dp.error_bound + em.error_bound);
  }
  CHECK(c.ok);
}
