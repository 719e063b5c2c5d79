#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "mzv/eval.hpp"
#include "mzv/forms.hpp"
#include "mzv/relations.hpp"

using namespace mzv;

namespace {

const EvalConfig kCfg{1e-8, 10000000, Summation::Compensated};

void check_numeric(const IdentityInstance& inst, double tol = 0.0) {
  REQUIRE(inst.domain_ok);
  EvalResult lhs = eval_combo(inst.lhs, kCfg);
  EvalResult rhs = eval_combo(inst.rhs, kCfg);
  double budget = lhs.error_bound + rhs.error_bound + tol + 1e-12;
  CHECK(std::abs(lhs.value - rhs.value) <= budget);
}

void check_exact(const IdentityInstance& inst, long long N) {
  REQUIRE(inst.domain_ok);
  CHECK(rational_combo_truncation(inst.lhs, N) == rational_combo_truncation(inst.rhs, N));
}

}  // namespace

TEST_CASE("height-one sums have the expected structure") {
  CHECK(Zminus(0) == LinearCombo::of(Atom::riemann(2)));
  CHECK(Zplus(1).size() == 2);       // zeta(3) and zeta(1,2)
  CHECK(Zstar_plus(2).size() == 3);  // three star values of weight 4

  // Zstar_minus(1) = zetastar(1,2) - zetastar(3)
  LinearCombo zm1;
  zm1.add_atom(Atom::mzsv(MultiIndex({1, 2})), Rational(1));
  zm1.add_atom(Atom::riemann(3), Rational(-1));
  CHECK(Zstar_minus(1) == zm1);
}

TEST_CASE("product splits hold exactly at every finite cutoff") {
  // termwise-disjoint splits: rational equality, not just in the limit
  for (long long N : {10ll, 25ll, 30ll, 40ll}) {
    check_exact(product_split_L(MultiIndex({2}), MultiIndex({2})), N);
    check_exact(product_split_U(MultiIndex({2}), MultiIndex({2})), N);
  }
  for (long long N : {10ll, 25ll}) {
    check_exact(product_split_L(MultiIndex({1, 2}), MultiIndex({3})), N);
    check_exact(product_split_U(MultiIndex({1, 2}), MultiIndex({3})), N);
    check_exact(product_split_L(MultiIndex({3}), MultiIndex({1, 2})), N);
    check_exact(product_split_U(MultiIndex({3}), MultiIndex({1, 2})), N);
    check_exact(product_split_L(MultiIndex({2, 2}), MultiIndex({1, 3})), N);
    check_exact(product_split_U(MultiIndex({2, 2}), MultiIndex({1, 3})), N);
  }
}

TEST_CASE("product splits reject bad chains") {
  CHECK_FALSE(product_split_L(MultiIndex({2, 1}), MultiIndex({2})).domain_ok);
  CHECK_FALSE(product_split_L(MultiIndex({2}), MultiIndex({2, 1})).domain_ok);
  CHECK_FALSE(product_split_U(MultiIndex({2}), MultiIndex()).domain_ok);
}

TEST_CASE("conversions to the bounded form hold exactly") {
  for (long long N : {10ll, 25ll, 40ll}) {
    check_exact(zu_to_zb(MultiIndex({2}), MultiIndex({1})), N);
    check_exact(zu_to_zb(MultiIndex({1, 2}), MultiIndex({2, 1})), N);
    check_exact(zl_to_zb(MultiIndex({2}), MultiIndex({1, 2})), N);
  }
  check_exact(zu_to_zb(MultiIndex({3}), MultiIndex({1, 1})), 25);
  check_exact(zl_to_zb(MultiIndex({2, 2}), MultiIndex({3})), 25);
  // empty weak chain degenerates to Z_B = Z_U = Z_L
  check_exact(zu_to_zb(MultiIndex({2}), MultiIndex()), 25);
}

TEST_CASE("parity recursions") {
  // r = 2 collapses to the stuffle relation: zeta(2,2) + zetastar(2,2) = zeta(2)^2
  IdentityInstance stuffle = parity_L(MultiIndex({2, 2}));
  REQUIRE(stuffle.domain_ok);
  check_numeric(stuffle);
  check_numeric(parity_U(MultiIndex({2, 2})));

  check_numeric(parity_L(MultiIndex({3, 2})));
  check_numeric(parity_L(MultiIndex({2, 1, 2})));  // interior entries unrestricted
  check_numeric(parity_U(MultiIndex({2, 3})));
  check_numeric(parity_U(MultiIndex({2, 2, 2})));

  CHECK_FALSE(parity_L(MultiIndex({1, 2, 2})).domain_ok);
  CHECK_FALSE(parity_L(MultiIndex({2, 2, 1})).domain_ok);
  CHECK_FALSE(parity_U(MultiIndex({2, 1, 2})).domain_ok);

  // r = 1: both sides are empty by the conventions
  IdentityInstance single = parity_L(MultiIndex({3}));
  REQUIRE(single.domain_ok);
  CHECK(single.lhs.empty());
  CHECK(single.rhs.empty());
}

TEST_CASE("bounded-form recursion and its zeta endpoint") {
  check_exact(zb_recursion(MultiIndex({1, 2}), 1, 1), 25);
  check_exact(zb_recursion(MultiIndex({1, 1, 2}), 2, 1), 20);
  check_exact(zb_recursion(MultiIndex({1, 1, 2}), 2, 2), 20);
  check_exact(zuzb_zeta(MultiIndex({2, 1, 2}), 2), 20);
  check_exact(zlzb_zeta(MultiIndex({2, 2, 2}), 2), 20);
  check_exact(zlzb_recursion(MultiIndex({2, 2, 2, 3}), 2, 1), 15);

  CHECK_FALSE(zb_recursion(MultiIndex({1, 2}), 1, 2).domain_ok);  // p > m
  CHECK_FALSE(zuzb_zeta(MultiIndex({1, 2}), 2).domain_ok);        // m = r
  CHECK_FALSE(zlzb_zeta(MultiIndex({1, 2, 2}), 1).domain_ok);     // alpha_1 = 1
}

TEST_CASE("orthogonality collapses structurally for small n") {
  IdentityInstance n0 = orthogonality(2, 0);
  CHECK(n0.lhs == LinearCombo::constant(Rational(1)));
  CHECK(n0.rhs == LinearCombo::constant(Rational(1)));

  // n = 1: zetastar(2) - zeta(2) cancels to nothing after canonicalization
  IdentityInstance n1 = orthogonality(2, 1);
  CHECK(n1.lhs.empty());
  CHECK(n1.rhs.empty());

  check_numeric(orthogonality(2, 3));
  check_numeric(orthogonality(3, 2));
  CHECK_FALSE(orthogonality(1, 2).domain_ok);
}

TEST_CASE("block transform instances") {
  // m = 0: both sides are literally zeta(3)
  IdentityInstance triv = rs_transform(2, 0, {3});
  CHECK(triv.lhs == LinearCombo::of(Atom::riemann(3)));
  CHECK(triv.rhs == LinearCombo::of(Atom::riemann(3)));

  // m = 1: zeta(2,3) + zeta(3,2) = zeta(2) zeta(3) - zeta(5)
  IdentityInstance one = rs_transform(2, 1, {3});
  LinearCombo lhs;
  lhs.add_atom(Atom::mzv(MultiIndex({2, 3})), Rational(1));
  lhs.add_atom(Atom::mzv(MultiIndex({3, 2})), Rational(1));
  CHECK(one.lhs == lhs);
  LinearCombo rhs;
  rhs.add(Term({Atom::riemann(2), Atom::riemann(3)}), Rational(1));
  rhs.add_atom(Atom::riemann(5), Rational(-1));
  CHECK(one.rhs == rhs);
  check_numeric(one);

  check_numeric(rs_transform(2, 2, {3}));
  check_numeric(rs_transform(2, 1, {3, 3}));
  check_numeric(rs_transform(3, 1, {2}));
  CHECK_FALSE(rs_transform(2, 1, {1}).domain_ok);  // r_n must be >= 2
}

TEST_CASE("instances serialize to JSON") {
  IdentityInstance inst = product_split_L(MultiIndex({2}), MultiIndex({2}));
  std::string j = instance_json(inst);
  CHECK(j.find("\"id\": \"split_L\"") != std::string::npos);
  CHECK(j.find("zl(2;2)") != std::string::npos);
  CHECK(j.find("zeta(2)") != std::string::npos);
}
