#include "mzv/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "mzv/forms.hpp"

namespace mzv {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::OutOfDomain: return "OUT_OF_DOMAIN";
    case Status::BudgetNotMet: return "BUDGET_NOT_MET";
  }
  return "?";
}

MultiIndex nth_admissible(int w, long long i) {
  MultiIndex out;
  long long seen = 0;
  bool found = false;
  admissible_by_weight(w, [&](const MultiIndex& idx) {
    if (!found && seen == i) {
      out = idx;
      found = true;
    }
    ++seen;
  });
  if (!found) throw std::out_of_range("no admissible index of weight " + std::to_string(w) +
                                      " at position " + std::to_string(i));
  return out;
}

MultiIndex nth_composition(int w, long long i) {
  if (w == 0) {
    if (i == 0) return MultiIndex();
    throw std::out_of_range("only one empty composition");
  }
  long long seen = 0;
  for (int r = 1; r <= w; ++r) {
    Compositions gen(w, r);
    std::vector<int> c;
    while (gen.next(c)) {
      if (seen == i) return MultiIndex(c);
      ++seen;
    }
  }
  throw std::out_of_range("no composition of " + std::to_string(w) + " at position " +
                          std::to_string(i));
}

namespace {

Rational sgn(long long n) { return (n % 2 == 0) ? Rational(1) : Rational(-1); }

LinearCombo zeta_c(int k, Rational coeff = Rational(1)) {
  return LinearCombo::of(Atom::riemann(k), std::move(coeff));
}

Atom zb_atom(MultiIndex upper, MultiIndex lower) {
  return Atom::general(GeneralForm{FormKind::B, std::move(upper), std::move(lower)});
}
Atom zu_atom(MultiIndex upper, MultiIndex lower) {
  return Atom::general(GeneralForm{FormKind::U, std::move(upper), std::move(lower)});
}

long long require(const Params& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw std::invalid_argument("missing parameter '" + name + "'");
  return it->second;
}

// (a+2, {1}^m, b+2) -- the height-two shape most of the sums run over
MultiIndex sandwich(long long a, long long m, long long b) {
  return concat(MultiIndex({static_cast<int>(a + 2)}),
                concat(ones(static_cast<int>(m)), MultiIndex({static_cast<int>(b + 2)})));
}

// ---------------------------------------------------------------------------
// builders
// ---------------------------------------------------------------------------

IdentityInstance build_sum_formula(const Params& p, bool star) {
  IdentityInstance inst;
  inst.id = star ? "sum_formula_star" : "sum_formula";
  inst.params = p;
  long long k = require(p, "k"), r = require(p, "r");
  if (r < 1 || k <= r)
    return IdentityInstance::out_of_domain(inst.id, p, "needs k > r >= 1");
  admissible_by_weight_depth(static_cast<int>(k), static_cast<int>(r),
                             [&](const MultiIndex& idx) {
                               inst.lhs.add_atom(star ? Atom::mzsv(idx) : Atom::mzv(idx),
                                                 Rational(1));
                             });
  Rational coeff =
      star ? Rational(BigInt::binomial(static_cast<unsigned long long>(k - 1),
                                       static_cast<unsigned long long>(r - 1)))
           : Rational(1);
  inst.rhs = zeta_c(static_cast<int>(k), coeff);
  return inst;
}

IdentityInstance build_aoki_ohno(const Params& p) {
  IdentityInstance inst;
  inst.id = "aoki_ohno";
  inst.params = p;
  long long k = require(p, "k"), s = require(p, "s");
  if (k < 2 || s < 1 || 2 * s > k)
    return IdentityInstance::out_of_domain(inst.id, p, "needs k >= 2 and 1 <= s <= k/2");
  admissible_by_weight_height(static_cast<int>(k), static_cast<int>(s),
                              [&](const MultiIndex& idx) {
                                inst.lhs.add_atom(Atom::mzsv(idx), Rational(1));
                              });
  Rational coeff = Rational(2) *
                   Rational(BigInt::binomial(static_cast<unsigned long long>(k - 1),
                                             static_cast<unsigned long long>(2 * s - 1))) *
                   (Rational(1) - Rational::pow2(static_cast<int>(1 - k)));
  inst.rhs = zeta_c(static_cast<int>(k), coeff);
  return inst;
}

IdentityInstance build_thm1(const Params& p) {
  IdentityInstance inst;
  inst.id = "thm1";
  inst.params = p;
  long long m = require(p, "m"), n = require(p, "n");
  if (m < 0) return IdentityInstance::out_of_domain(inst.id, p, "needs m >= 0");
  if (n < 2)
    return IdentityInstance::out_of_domain(
        inst.id, p,
        "stated for n >= 2; at n = 1 the left side is empty while the right side is "
        "(m+1) zeta(m+2) -- recorded for information only");
  for (long long a1 = 1; a1 <= n - 1; ++a1) {
    long long a2 = n - a1;
    MultiIndex idx = concat(MultiIndex({static_cast<int>(a1)}),
                            concat(ones(static_cast<int>(m)),
                                   MultiIndex({static_cast<int>(a2 + 1)})));
    inst.lhs.add_atom(Atom::mzsv(idx), Rational(1));
  }
  inst.rhs = zeta_c(static_cast<int>(m + n + 1), Rational(m + n));
  return inst;
}

IdentityInstance build_thm2(const Params& p) {
  IdentityInstance inst;
  inst.id = "thm2";
  inst.params = p;
  long long pp = require(p, "p");
  if (pp < 0) return IdentityInstance::out_of_domain(inst.id, p, "needs p >= 0");
  for (long long a = 0; a <= pp; ++a)
    for (long long b = 0; a + b <= pp; ++b)
      inst.lhs.add_atom(Atom::mzsv(sandwich(a, pp - a - b, b)), Rational(1));
  Rational coeff = Rational(pp * pp + 3 * pp + 1) +
                   Rational(pp + 3) * Rational::pow2(static_cast<int>(-(pp + 2)));
  inst.rhs = zeta_c(static_cast<int>(pp + 4), coeff);
  return inst;
}

LinearCombo thm3_lhs(long long pp) {
  LinearCombo lhs;
  for (long long a = 0; a <= pp; ++a)
    for (long long b = 0; a + b <= pp; ++b) {
      long long m = pp - a - b;
      lhs.add_atom(Atom::mzv(sandwich(a, m, b)), sgn(m));
    }
  return lhs;
}

IdentityInstance build_thm3(const Params& p) {
  IdentityInstance inst;
  inst.id = "thm3";
  inst.params = p;
  long long pp = require(p, "p");
  if (pp < 0) return IdentityInstance::out_of_domain(inst.id, p, "needs p >= 0");
  inst.lhs = thm3_lhs(pp);
  Rational alt_coeff = (sgn(pp) - Rational(1)) * Rational(2);  // 0 or -4
  if (!alt_coeff.is_zero())
    inst.rhs.add_atom(Atom::alt(MultiIndex({static_cast<int>(pp + 2), 2}, {false, true})),
                      alt_coeff);
  inst.rhs += zeta_c(static_cast<int>(pp + 4),
                     Rational(1) - Rational::pow2(static_cast<int>(-(pp + 2))));
  return inst;
}

IdentityInstance build_thm3_even(const Params& p) {
  IdentityInstance inst;
  inst.id = "thm3_even";
  inst.params = p;
  long long q = require(p, "q");
  if (q < 0) return IdentityInstance::out_of_domain(inst.id, p, "needs q >= 0");
  inst.lhs = thm3_lhs(2 * q);  // reuse: the alternating term vanishes at even p
  inst.rhs = zeta_c(static_cast<int>(2 * q + 4),
                    Rational(1) - Rational::pow2(static_cast<int>(-(2 * q + 2))));
  return inst;
}

LinearCombo thm4_inner(long long m, long long r) {
  // sum_{|d|=m} zeta(d_1+2,...,d_{r+1}+2) prod (d_j + 1)
  LinearCombo inner;
  WeakCompositions comps(static_cast<int>(m), static_cast<int>(r + 1));
  std::vector<int> d;
  while (comps.next(d)) {
    Rational coeff(1);
    std::vector<int> exps;
    exps.reserve(d.size());
    for (int dj : d) {
      coeff *= Rational(dj + 1);
      exps.push_back(dj + 2);
    }
    inner.add_atom(Atom::mzv(MultiIndex(exps)), coeff);
  }
  return inner;
}

IdentityInstance build_thm4(const Params& p) {
  IdentityInstance inst;
  inst.id = "thm4";
  inst.params = p;
  long long m = require(p, "m"), n = require(p, "n");
  if (m < 0 || n < 0) return IdentityInstance::out_of_domain(inst.id, p, "needs m, n >= 0");
  inst.lhs.add_atom(
      Atom::mzsv(concat(ones(static_cast<int>(m)), repeat(2, static_cast<int>(n + 1)))),
      Rational(1));
  for (long long r = 0; r <= n; ++r) {
    long long pstar = n - r;
    LinearCombo outer =
        LinearCombo::of(Atom::mzsv(repeat(2, static_cast<int>(pstar))), sgn(r));
    inst.rhs += outer * thm4_inner(m, r);
  }
  return inst;
}

IdentityInstance build_ones_dual(const Params& p, bool u_side) {
  IdentityInstance inst;
  inst.id = u_side ? "prop_zu_dual" : "prop_zb_dual";
  inst.params = p;
  long long w = require(p, "w"), i = require(p, "i"), m = require(p, "m");
  MultiIndex beta;
  try {
    beta = nth_admissible(static_cast<int>(w), i);
  } catch (const std::out_of_range& e) {
    return IdentityInstance::out_of_domain(inst.id, p, e.what());
  }
  if (m < 0) return IdentityInstance::out_of_domain(inst.id, p, "needs m >= 0");
  MultiIndex lower = ones(static_cast<int>(m));
  inst.lhs.add_atom(u_side ? zu_atom(beta, lower) : zb_atom(beta, lower), Rational(1));
  inst.rhs = u_side ? zu_ones_expansion(beta, static_cast<int>(m))
                    : zb_ones_expansion(beta, static_cast<int>(m));
  return inst;
}

IdentityInstance build_zminus_closed(const Params& p) {
  IdentityInstance inst;
  inst.id = "zminus_closed";
  inst.params = p;
  long long n = require(p, "n");
  if (n < 0) return IdentityInstance::out_of_domain(inst.id, p, "needs n >= 0");
  inst.lhs = Zminus(static_cast<int>(n));
  if (n % 2 == 0)
    inst.rhs = zeta_c(static_cast<int>(n + 2),
                      Rational(2) * (Rational(1) - Rational::pow2(static_cast<int>(-(n + 1)))));
  return inst;  // odd n: the right side is exactly zero
}

IdentityInstance build_zstarplus_closed(const Params& p) {
  IdentityInstance inst;
  inst.id = "zstarplus_closed";
  inst.params = p;
  long long n = require(p, "n");
  if (n < 0) return IdentityInstance::out_of_domain(inst.id, p, "needs n >= 0");
  inst.lhs = Zstar_plus(static_cast<int>(n));
  inst.rhs = zeta_c(static_cast<int>(n + 2),
                    Rational(2 * (n + 1)) *
                        (Rational(1) - Rational::pow2(static_cast<int>(-(n + 1)))));
  return inst;
}

IdentityInstance build_conv_p(const Params& p) {
  IdentityInstance inst;
  inst.id = "conv_p";
  inst.params = p;
  long long pp = require(p, "p");
  if (pp < 0) return IdentityInstance::out_of_domain(inst.id, p, "needs p >= 0");
  for (long long m = 0; m <= pp; ++m)
    inst.lhs += Zminus(static_cast<int>(m)) * Zstar_plus(static_cast<int>(pp - m));
  Rational alt_coeff = (sgn(pp) - Rational(1)) * Rational(2);
  if (!alt_coeff.is_zero())
    inst.rhs.add_atom(Atom::alt(MultiIndex({static_cast<int>(pp + 2), 2}, {false, true})),
                      alt_coeff);
  inst.rhs += zeta_c(static_cast<int>(pp + 4),
                     Rational(pp + 2) *
                         (Rational(pp + 1) + Rational::pow2(static_cast<int>(-(pp + 2)))));
  return inst;
}

IdentityInstance build_split(const Params& p, bool upper_split) {
  long long wa = require(p, "wa"), ia = require(p, "ia");
  long long wb = require(p, "wb"), ib = require(p, "ib");
  const char* id = upper_split ? "split_U" : "split_L";
  MultiIndex alpha, beta;
  try {
    alpha = nth_admissible(static_cast<int>(wa), ia);
    beta = nth_admissible(static_cast<int>(wb), ib);
  } catch (const std::out_of_range& e) {
    return IdentityInstance::out_of_domain(id, p, e.what());
  }
  IdentityInstance inst = upper_split ? product_split_U(alpha, beta)
                                      : product_split_L(alpha, beta);
  inst.params = p;
  return inst;
}

IdentityInstance build_parity(const Params& p, bool u_side) {
  long long w = require(p, "w"), i = require(p, "i");
  const char* id = u_side ? "parity_U" : "parity_L";
  MultiIndex alpha;
  try {
    alpha = nth_composition(static_cast<int>(w), i);
  } catch (const std::out_of_range& e) {
    return IdentityInstance::out_of_domain(id, p, e.what());
  }
  IdentityInstance inst = u_side ? parity_U(alpha) : parity_L(alpha);
  inst.params = p;
  return inst;
}

IdentityInstance build_zu_zb_rel(const Params& p, bool l_side) {
  long long wa = require(p, "wa"), ia = require(p, "ia");
  long long wb = require(p, "wb"), ib = require(p, "ib");
  const char* id = l_side ? "zl_zb_rel" : "zu_zb_rel";
  MultiIndex alpha, beta;
  try {
    alpha = nth_admissible(static_cast<int>(wa), ia);
    beta = l_side ? (wb == 0 ? MultiIndex() : nth_admissible(static_cast<int>(wb), ib))
                  : nth_composition(static_cast<int>(wb), ib);
  } catch (const std::out_of_range& e) {
    return IdentityInstance::out_of_domain(id, p, e.what());
  }
  IdentityInstance inst = l_side ? zl_to_zb(alpha, beta) : zu_to_zb(alpha, beta);
  inst.params = p;
  return inst;
}

IdentityInstance build_eq519(const Params& p) {
  IdentityInstance inst;
  inst.id = "eq519";
  inst.params = p;
  long long r = require(p, "r"), m = require(p, "m");
  if (r < 0 || m < 0) return IdentityInstance::out_of_domain(inst.id, p, "needs r, m >= 0");
  for (long long k = 0; k <= r; ++k) {
    long long q = r - k;
    MultiIndex star = concat(ones(static_cast<int>(m)), repeat(2, static_cast<int>(q + 1)));
    inst.lhs.add(Term({Atom::mzv(repeat(2, static_cast<int>(k))), Atom::mzsv(star)}), sgn(k));
  }
  inst.rhs = thm4_inner(m, r);
  inst.rhs *= sgn(r);
  return inst;
}

IdentityInstance build_mixed_parity(const Params& p) {
  IdentityInstance inst;
  inst.id = "mixed_parity_sum";
  inst.params = p;
  long long pp = require(p, "p");
  if (pp < 0) return IdentityInstance::out_of_domain(inst.id, p, "needs p >= 0");
  for (long long c = 0; c <= pp; ++c)
    for (long long d = 0; c + d <= pp; ++d) {
      long long m = pp - c - d;
      inst.lhs.add_atom(Atom::mzv(sandwich(c, m, d)), Rational(1));
      inst.lhs.add_atom(Atom::mzsv(sandwich(d, m, c)), sgn(m));
    }
  // the sign rides the star factor's index: grouping the parity recursion
  // puts (-1)^j on the ones count of the star prefix, which regroups to
  // (-1)^m Zstar_minus(m) Zplus(n); attaching it to the plain factor instead
  // flips every odd-p instance
  for (long long m = 0; m <= pp; ++m)
    inst.rhs += Zstar_minus(static_cast<int>(m)) * Zplus(static_cast<int>(pp - m)) * sgn(m);
  return inst;
}

IdentityInstance build_s6_1m2(const Params& p) {
  IdentityInstance inst;
  inst.id = "s6_1m2";
  inst.params = p;
  long long m = require(p, "m");
  if (m < 0) return IdentityInstance::out_of_domain(inst.id, p, "needs m >= 0");
  inst.lhs.add_atom(Atom::mzsv(concat(ones(static_cast<int>(m)), MultiIndex({2}))),
                    Rational(1));
  inst.rhs = zeta_c(static_cast<int>(m + 2), Rational(m + 1));
  return inst;
}

LinearCombo weighted_double_sum(long long m) {
  // sum_{a+b=m} (a+1)(b+1) zeta(a+2, b+2)
  LinearCombo out;
  for (long long a = 0; a <= m; ++a) {
    long long b = m - a;
    out.add_atom(Atom::mzv(MultiIndex({static_cast<int>(a + 2), static_cast<int>(b + 2)})),
                 Rational((a + 1) * (b + 1)));
  }
  return out;
}

MultiIndex star_1m22(long long m) {
  return concat(ones(static_cast<int>(m)), MultiIndex({2, 2}));
}

LinearCombo s6_1m22_rhs_a(long long m) {
  LinearCombo rhs;
  rhs.add(Term({Atom::riemann(2), Atom::riemann(static_cast<int>(m + 2))}), Rational(m + 1));
  rhs -= weighted_double_sum(m);
  return rhs;
}

LinearCombo s6_1m22_rhs_b(long long m) {
  LinearCombo rhs = zeta_c(static_cast<int>(m + 4), Rational(2));
  rhs.add_atom(Atom::mzv(MultiIndex({static_cast<int>(m + 1), 3})), Rational(2));
  rhs.add_atom(Atom::mzv(MultiIndex({2, static_cast<int>(m + 2)})), Rational(-(m + 1)));
  return rhs;
}

IdentityInstance build_s6_1m22(const Params& p, int variant) {
  IdentityInstance inst;
  inst.id = variant == 0 ? "s6_1m22_a" : variant == 1 ? "s6_1m22_b" : "s6_1m22_cross";
  inst.params = p;
  long long m = require(p, "m");
  if (m < 0) return IdentityInstance::out_of_domain(inst.id, p, "needs m >= 0");
  if (variant == 2) {
    inst.lhs = s6_1m22_rhs_a(m);
    inst.rhs = s6_1m22_rhs_b(m);
    return inst;
  }
  inst.lhs.add_atom(Atom::mzsv(star_1m22(m)), Rational(1));
  inst.rhs = variant == 0 ? s6_1m22_rhs_a(m) : s6_1m22_rhs_b(m);
  return inst;
}

IdentityInstance build_prop61(const Params& p) {
  IdentityInstance inst;
  inst.id = "prop61_weighted";
  inst.params = p;
  long long m = require(p, "m");
  if (m < 0) return IdentityInstance::out_of_domain(inst.id, p, "needs m >= 0");
  inst.lhs = weighted_double_sum(m);
  inst.rhs.add(Term({Atom::riemann(2), Atom::riemann(static_cast<int>(m + 2))}),
               Rational(m + 1));
  inst.rhs.add_atom(Atom::mzv(MultiIndex({2, static_cast<int>(m + 2)})), Rational(m + 1));
  inst.rhs += zeta_c(static_cast<int>(m + 4), Rational(-2));
  inst.rhs.add_atom(Atom::mzv(MultiIndex({static_cast<int>(m + 1), 3})), Rational(-2));
  return inst;
}

LinearCombo weighted_euler_products(long long m) {
  // sum_{a+b=m} (a+1)(b+1) zeta(a+2) zeta(b+2)
  LinearCombo out;
  for (long long a = 0; a <= m; ++a) {
    long long b = m - a;
    out.add(Term({Atom::riemann(static_cast<int>(a + 2)), Atom::riemann(static_cast<int>(b + 2))}),
            Rational((a + 1) * (b + 1)));
  }
  return out;
}

IdentityInstance build_s6_euler_weighted(const Params& p) {
  IdentityInstance inst;
  inst.id = "s6_euler_weighted";
  inst.params = p;
  long long m = require(p, "m");
  if (m < 0) return IdentityInstance::out_of_domain(inst.id, p, "needs m >= 0");
  inst.lhs = weighted_euler_products(m);
  inst.rhs = zeta_c(static_cast<int>(m + 4),
                    Rational((m + 1) * (m + 2) * (m + 3), 6));
  inst.rhs.add(Term({Atom::riemann(2), Atom::riemann(static_cast<int>(m + 2))}),
               Rational(2 * (m + 1)));
  inst.rhs.add_atom(Atom::mzv(MultiIndex({2, static_cast<int>(m + 2)})),
                    Rational(2 * (m + 1)));
  inst.rhs.add(Term({Atom::riemann(3), Atom::riemann(static_cast<int>(m + 1))}), Rational(-4));
  inst.rhs.add_atom(Atom::mzv(MultiIndex({3, static_cast<int>(m + 1)})), Rational(4));
  return inst;
}

IdentityInstance build_eie_yang_2pow(const Params& p) {
  IdentityInstance inst;
  inst.id = "eie_yang_2pow";
  inst.params = p;
  long long m = require(p, "m");
  if (m < 0) return IdentityInstance::out_of_domain(inst.id, p, "needs m >= 0");
  inst.lhs = weighted_euler_products(m) * Rational(1, 2);
  for (long long a = 0; a <= m; ++a) {
    long long b = m - a;
    Rational two_b = Rational::pow2(static_cast<int>(b));
    inst.rhs.add_atom(Atom::mzv(MultiIndex({static_cast<int>(a + 2), static_cast<int>(b + 2)})),
                      two_b * Rational((a + 1) * (b + 1)));
    inst.rhs.add_atom(Atom::mzv(MultiIndex({static_cast<int>(a + 1), static_cast<int>(b + 3)})),
                      two_b * Rational((b + 1) * (b + 2)));
  }
  return inst;
}

IdentityInstance build_s6_1_2n(const Params& p) {
  IdentityInstance inst;
  inst.id = "s6_1_2n";
  inst.params = p;
  long long n = require(p, "n");
  if (n < 0) return IdentityInstance::out_of_domain(inst.id, p, "needs n >= 0");
  inst.lhs.add_atom(Atom::mzsv(prepend(1, repeat(2, static_cast<int>(n + 1)))), Rational(1));
  inst.rhs = zeta_c(static_cast<int>(2 * n + 3), Rational(2));
  return inst;
}

IdentityInstance build_zagier_aggregate(const Params& p) {
  IdentityInstance inst;
  inst.id = "zagier_aggregate";
  inst.params = p;
  long long r = require(p, "r");
  if (r < 0) return IdentityInstance::out_of_domain(inst.id, p, "needs r >= 0");
  for (long long a = 0; a <= r; ++a) {
    long long b = r - a;
    MultiIndex idx = concat(repeat(2, static_cast<int>(a)),
                            prepend(3, repeat(2, static_cast<int>(b))));
    inst.lhs.add_atom(Atom::mzv(idx), Rational(1));
    inst.rhs.add(Term({Atom::mzv(repeat(2, static_cast<int>(b))),
                       Atom::riemann(static_cast<int>(2 * a + 3))}),
                 sgn(a));
  }
  return inst;
}

IdentityInstance build_rs_id(const Params& p) {
  long long s = require(p, "s"), m = require(p, "m");
  std::vector<int> r_list;
  for (int i = 1;; ++i) {
    auto it = p.find("r" + std::to_string(i));
    if (it == p.end()) break;
    r_list.push_back(static_cast<int>(it->second));
  }
  IdentityInstance inst = rs_transform(static_cast<int>(s), static_cast<int>(m), r_list);
  inst.params = p;
  return inst;
}

IdentityInstance build_eq_112n(const Params& p) {
  IdentityInstance inst;
  inst.id = "eq_112n";
  inst.params = p;
  long long n = require(p, "n");
  if (n < 0) return IdentityInstance::out_of_domain(inst.id, p, "needs n >= 0");
  inst.lhs.add_atom(Atom::mzsv(concat(ones(2), repeat(2, static_cast<int>(n + 1)))),
                    Rational(1));
  inst.rhs = zeta_c(static_cast<int>(2 * n + 4), Rational(2 * n + 3));
  for (long long a = 0; a + 1 <= n; ++a) {
    long long b = n - 1 - a;
    inst.rhs.add(Term({Atom::riemann(static_cast<int>(2 * a + 3)),
                       Atom::riemann(static_cast<int>(2 * b + 3))}),
                 Rational(-2));
  }
  return inst;
}

IdentityInstance build_ohno_zudilin(const Params& p) {
  IdentityInstance inst;
  inst.id = "ohno_zudilin";
  inst.params = p;
  long long n = require(p, "n");
  if (n < 0) return IdentityInstance::out_of_domain(inst.id, p, "needs n >= 0");
  inst.lhs.add_atom(Atom::mzsv(concat(ones(2), repeat(2, static_cast<int>(n + 1)))),
                    Rational(1));
  inst.rhs.add_atom(Atom::mzsv(MultiIndex({1, static_cast<int>(2 * n + 3)})), Rational(4));
  inst.rhs += zeta_c(static_cast<int>(2 * n + 4), Rational(-2));
  return inst;
}

IdentityInstance build_prop62(const Params& p) {
  IdentityInstance inst;
  inst.id = "prop62";
  inst.params = p;
  long long n = require(p, "n");
  if (n < 0) return IdentityInstance::out_of_domain(inst.id, p, "needs n >= 0");
  for (long long a = 0; a + 1 <= n; ++a) {
    long long b = n - 1 - a;
    inst.lhs.add(Term({Atom::riemann(static_cast<int>(2 * a + 3)),
                       Atom::riemann(static_cast<int>(2 * b + 3))}),
                 Rational(1));
  }
  inst.rhs = zeta_c(static_cast<int>(2 * n + 4), Rational(2 * n + 1, 2));
  inst.rhs.add_atom(Atom::mzv(MultiIndex({1, static_cast<int>(2 * n + 3)})), Rational(-2));
  if (n == 0)
    inst.note = "left side is an empty sum at n = 0; the right side vanishes since "
                "zeta(1,3) = zeta(4)/4";
  return inst;
}

IdentityInstance build_eie_yang_remark(const Params& p) {
  IdentityInstance inst;
  inst.id = "eie_yang_remark";
  inst.params = p;
  long long n = require(p, "n");
  if (n < 0) return IdentityInstance::out_of_domain(inst.id, p, "needs n >= 0");
  for (long long a = 0; a <= n; ++a)
    inst.lhs.add(Term({Atom::riemann(static_cast<int>(a + 2)),
                       Atom::riemann(static_cast<int>(n - a + 2))}),
                 Rational(1));
  inst.rhs = zeta_c(static_cast<int>(n + 4), Rational(n + 3));
  inst.rhs.add_atom(Atom::mzv(MultiIndex({1, static_cast<int>(n + 3)})), Rational(-2));
  return inst;
}

IdentityInstance build_s6_m3(const Params& p) {
  IdentityInstance inst;
  inst.id = "s6_m3";
  inst.params = p;
  long long n = require(p, "n");
  if (n < 0) return IdentityInstance::out_of_domain(inst.id, p, "needs n >= 0");
  inst.lhs.add_atom(Atom::mzsv(concat(ones(3), repeat(2, static_cast<int>(n + 1)))),
                    Rational(1));
  inst.rhs = zeta_c(static_cast<int>(2 * n + 5),
                    Rational(2 * (2 * n + 3) * (n + 2), 3));
  for (long long a = 0; a + 1 <= n; ++a) {
    long long b = n - 1 - a;
    inst.rhs.add(Term({Atom::riemann(static_cast<int>(2 * a + 4)),
                       Atom::riemann(static_cast<int>(2 * b + 3))}),
                 Rational(-6));
  }
  for (long long a = 0; a + 2 <= n; ++a) {
    long long b = n - 2 - a;
    inst.rhs.add(Term({Atom::riemann(static_cast<int>(2 * a + 6)),
                       Atom::riemann(static_cast<int>(2 * b + 3))}),
                 Rational(-4 * (a + 1)));
  }
  for (long long a = 0; a + 2 <= n; ++a)
    for (long long b = 0; a + b + 2 <= n; ++b) {
      long long c = n - 2 - a - b;
      inst.rhs.add(Term({Atom::riemann(static_cast<int>(2 * a + 3)),
                         Atom::riemann(static_cast<int>(2 * b + 3)),
                         Atom::riemann(static_cast<int>(2 * c + 3))}),
                   Rational(4, 3));
    }
  return inst;
}

IdentityInstance build_zb_rec(const Params& p) {
  long long w = require(p, "w"), i = require(p, "i");
  long long m = require(p, "m"), pr = require(p, "p");
  MultiIndex alpha;
  try {
    alpha = nth_admissible(static_cast<int>(w), i);
  } catch (const std::out_of_range& e) {
    return IdentityInstance::out_of_domain("zb_rec", p, e.what());
  }
  IdentityInstance inst = zb_recursion(alpha, static_cast<int>(m), static_cast<int>(pr));
  inst.params = p;
  return inst;
}

IdentityInstance build_prop71(const Params& p, bool l_side) {
  long long w = require(p, "w"), i = require(p, "i"), m = require(p, "m");
  const char* id = l_side ? "zl_prop71" : "prop71";
  MultiIndex alpha;
  try {
    alpha = l_side ? nth_composition(static_cast<int>(w), i)
                   : nth_admissible(static_cast<int>(w), i);
  } catch (const std::out_of_range& e) {
    return IdentityInstance::out_of_domain(id, p, e.what());
  }
  IdentityInstance inst = l_side ? zlzb_zeta(alpha, static_cast<int>(m))
                                 : zuzb_zeta(alpha, static_cast<int>(m));
  inst.params = p;
  return inst;
}

IdentityInstance build_zl_zb_rec(const Params& p) {
  long long w = require(p, "w"), i = require(p, "i");
  long long m = require(p, "m"), pr = require(p, "p");
  MultiIndex alpha;
  try {
    alpha = nth_composition(static_cast<int>(w), i);
  } catch (const std::out_of_range& e) {
    return IdentityInstance::out_of_domain("zl_zb_rec", p, e.what());
  }
  IdentityInstance inst = zlzb_recursion(alpha, static_cast<int>(m), static_cast<int>(pr));
  inst.params = p;
  return inst;
}

IdentityInstance build_sum_formula_chain(const Params& p) {
  IdentityInstance inst;
  inst.id = "sum_formula_chain";
  inst.params = p;
  long long m = require(p, "m"), n = require(p, "n");
  if (m < 0 || n < 0) return IdentityInstance::out_of_domain(inst.id, p, "needs m, n >= 0");
  inst.lhs = zeta_c(static_cast<int>(m + n + 2));
  for (long long k = 0; k <= m; ++k) {
    MultiIndex upper = concat(ones(static_cast<int>(k)), MultiIndex({static_cast<int>(n + 2)}));
    inst.rhs.add_atom(zu_atom(upper, ones(static_cast<int>(m - k))), sgn(k));
  }
  return inst;
}

IdentityInstance build_orthogonality(const Params& p) {
  IdentityInstance inst = orthogonality(static_cast<int>(require(p, "s")),
                                        static_cast<int>(require(p, "n")));
  inst.params = p;
  return inst;
}

// ---------------------------------------------------------------------------
// grids
// ---------------------------------------------------------------------------

std::vector<Params> grid_product(const std::vector<std::pair<std::string, std::pair<long long, long long>>>& axes) {
  std::vector<Params> out{{}};
  for (const auto& [name, range] : axes) {
    std::vector<Params> next;
    for (const Params& base : out) {
      for (long long v = range.first; v <= range.second; ++v) {
        Params p = base;
        p[name] = v;
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

long long count_admissible(int w) { return w < 2 ? 0 : 1ll << (w - 2); }

long long count_compositions(int w) { return w < 1 ? 1 : 1ll << (w - 1); }

std::vector<Params> sum_formula_grid() {
  std::vector<Params> g;
  for (long long k = 2; k <= 8; ++k)
    for (long long r = 1; r < k; ++r) g.push_back({{"k", k}, {"r", r}});
  return g;
}

std::vector<Params> aoki_ohno_grid() {
  std::vector<Params> g;
  for (long long k = 2; k <= 8; ++k)
    for (long long s = 1; 2 * s <= k; ++s) g.push_back({{"k", k}, {"s", s}});
  return g;
}

std::vector<Params> ones_dual_grid() {
  std::vector<Params> g;
  for (long long w = 2; w <= 6; ++w)
    for (long long i = 0; i < count_admissible(static_cast<int>(w)); ++i)
      for (long long m = 0; m <= 3; ++m) g.push_back({{"w", w}, {"i", i}, {"m", m}});
  return g;
}

std::vector<Params> split_grid() {
  std::vector<Params> g;
  for (long long wa = 2; wa <= 4; ++wa)
    for (long long ia = 0; ia < count_admissible(static_cast<int>(wa)); ++ia)
      for (long long wb = 2; wb <= 4; ++wb)
        for (long long ib = 0; ib < count_admissible(static_cast<int>(wb)); ++ib)
          g.push_back({{"wa", wa}, {"ia", ia}, {"wb", wb}, {"ib", ib}});
  return g;
}

std::vector<Params> parity_grid(bool u_side) {
  std::vector<Params> g;
  for (int w = 2; w <= 8; ++w) {
    long long i = 0;
    for (int r = 1; r <= w; ++r) {
      Compositions gen(w, r);
      std::vector<int> c;
      while (gen.next(c)) {
        bool ok = u_side ? std::all_of(c.begin(), c.end(), [](int e) { return e >= 2; })
                         : (c.front() >= 2 && c.back() >= 2);
        if (ok) g.push_back({{"w", w}, {"i", i}});
        ++i;
      }
    }
  }
  return g;
}

std::vector<Params> zu_zb_rel_grid(bool l_side) {
  std::vector<Params> g;
  for (long long wa = 2; wa <= 4; ++wa)
    for (long long ia = 0; ia < count_admissible(static_cast<int>(wa)); ++ia) {
      g.push_back({{"wa", wa}, {"ia", ia}, {"wb", 0}, {"ib", 0}});
      for (long long wb = l_side ? 2 : 1; wb <= 3; ++wb) {
        long long nb = l_side ? count_admissible(static_cast<int>(wb))
                              : count_compositions(static_cast<int>(wb));
        for (long long ib = 0; ib < nb; ++ib)
          g.push_back({{"wa", wa}, {"ia", ia}, {"wb", wb}, {"ib", ib}});
      }
    }
  return g;
}

std::vector<Params> prop71_grid(int max_weight) {
  std::vector<Params> g;
  for (int w = 3; w <= max_weight; ++w) {
    long long i = 0;
    admissible_by_weight(w, [&](const MultiIndex& idx) {
      for (long long m = 1; m <= idx.depth() - 1; ++m)
        g.push_back({{"w", w}, {"i", i}, {"m", m}});
      ++i;
    });
  }
  return g;
}

std::vector<Params> zb_rec_grid() {
  std::vector<Params> g;
  for (int w = 4; w <= 6; ++w) {
    long long i = 0;
    admissible_by_weight(w, [&](const MultiIndex& idx) {
      for (long long m = 1; m <= idx.depth() - 1; ++m)
        for (long long pr = 1; pr <= m; ++pr)
          g.push_back({{"w", w}, {"i", i}, {"m", m}, {"p", pr}});
      ++i;
    });
  }
  return g;
}

std::vector<Params> zl_rec_grid(bool with_p) {
  std::vector<Params> g;
  for (int w = 4; w <= 7; ++w) {
    long long i = 0;
    for (int r = 1; r <= w; ++r) {
      Compositions gen(w, r);
      std::vector<int> c;
      while (gen.next(c)) {
        for (long long m = 1; m <= r - 1; ++m) {
          bool ok = true;
          for (long long j = 0; j <= m; ++j) ok = ok && c[static_cast<std::size_t>(j)] >= 2;
          if (ok) {
            if (with_p) {
              for (long long pr = 1; pr <= m; ++pr)
                g.push_back({{"w", w}, {"i", i}, {"m", m}, {"p", pr}});
            } else {
              g.push_back({{"w", w}, {"i", i}, {"m", m}});
            }
          }
        }
        ++i;
      }
    }
  }
  return g;
}

std::vector<Params> rs_grid() {
  std::vector<Params> g;
  for (long long m = 0; m <= 3; ++m) g.push_back({{"s", 2}, {"m", m}, {"r1", 3}});
  for (long long m = 0; m <= 1; ++m)
    g.push_back({{"s", 2}, {"m", m}, {"r1", 3}, {"r2", 3}});
  return g;
}

std::vector<Identity> make_registry() {
  std::vector<Identity> reg;
  auto add = [&](Identity ident) { reg.push_back(std::move(ident)); };

  add({"sum_formula",
       "sum over admissible indices of fixed weight and depth equals zeta(k)",
       "Granville's sum formula", {"k", "r"}, "k > r >= 1",
       [](const Params& p) { return build_sum_formula(p, false); }, sum_formula_grid()});
  add({"sum_formula_star",
       "star analogue, with the binomial C(k-1, r-1) on the right",
       "sum formula, star form", {"k", "r"}, "k > r >= 1",
       [](const Params& p) { return build_sum_formula(p, true); }, sum_formula_grid()});
  add({"aoki_ohno",
       "star sum at fixed weight and height",
       "Aoki-Ohno height sum", {"k", "s"}, "k >= 2, 1 <= s <= k/2",
       build_aoki_ohno, aoki_ohno_grid()});
  add({"thm1",
       "two-part star sum around a ones block: sum zetastar(a1, {1}^m, a2+1) = (m+n) zeta(m+n+1)",
       "height-two star sum, first form", {"m", "n"}, "m >= 0, n >= 2",
       build_thm1, grid_product({{"m", {0, 4}}, {"n", {2, 5}}})});
  add({"thm2",
       "sum zetastar(a+2, {1}^m, b+2) over a+b+m = p with closed coefficient",
       "height-two star sum formula", {"p"}, "p >= 0",
       build_thm2, grid_product({{"p", {0, 5}}})});
  add({"thm3",
       "signed sum of zeta(a+2, {1}^m, b+2); odd p keeps an alternating value",
       "signed height-two sum formula", {"p"}, "p >= 0",
       build_thm3, grid_product({{"p", {0, 5}}})});
  add({"thm3_even",
       "even case p = 2q, where the alternating term vanishes",
       "signed height-two sum formula", {"q"}, "q >= 0",
       build_thm3_even, grid_product({{"q", {0, 2}}})});
  add({"thm4",
       "zetastar({1}^m, {2}^{n+1}) as a signed convolution of distributed blocks",
       "ones-against-twos evaluation", {"m", "n"}, "m, n >= 0",
       build_thm4, grid_product({{"m", {0, 3}}, {"n", {0, 3}}})});
  add({"prop_zb_dual",
       "Z_B(beta; {1}^m) expanded through the dual index with binomial weights",
       "duality expansion of the bounded form", {"w", "i", "m"},
       "beta = i-th admissible index of weight w; m >= 0",
       [](const Params& p) { return build_ones_dual(p, false); }, ones_dual_grid()});
  add({"prop_zu_dual",
       "Z_U(beta; {1}^m) expanded through the dual index",
       "duality expansion of the capped form", {"w", "i", "m"},
       "beta = i-th admissible index of weight w; m >= 0",
       [](const Params& p) { return build_ones_dual(p, true); }, ones_dual_grid()});
  add({"zminus_closed",
       "alternating height-one sum: zero at odd n, an explicit zeta multiple at even n",
       "Le-Murakami height-one evaluation", {"n"}, "n >= 0",
       build_zminus_closed, grid_product({{"n", {0, 9}}})});
  add({"zstarplus_closed",
       "height-one star sum equals 2(n+1)(1 - 2^{-n-1}) zeta(n+2)",
       "Ohno's height-one star evaluation", {"n"}, "n >= 0",
       build_zstarplus_closed, grid_product({{"n", {0, 10}}})});
  add({"conv_p",
       "convolution of the two height-one sums against the alternating value",
       "height-one convolution", {"p"}, "p >= 0",
       build_conv_p, grid_product({{"p", {0, 8}}})});
  add({"split_L",
       "zeta(alpha) zetastar(beta) split at the bottom of the weak chain",
       "product split, anchored form", {"wa", "ia", "wb", "ib"},
       "alpha, beta = admissible indices picked by (weight, position)",
       [](const Params& p) { return build_split(p, false); }, split_grid()});
  add({"split_U",
       "zeta(alpha) zetastar(beta) split at the top of the weak chain",
       "product split, capped form", {"wa", "ia", "wb", "ib"},
       "alpha, beta = admissible indices picked by (weight, position)",
       [](const Params& p) { return build_split(p, true); }, split_grid()});
  add({"parity_L",
       "zeta(alpha) + (-1)^r zetastar(reversed alpha) as a star/strict convolution",
       "parity recursion, anchored form", {"w", "i"},
       "alpha = i-th composition of w with first and last entry >= 2",
       [](const Params& p) { return build_parity(p, false); }, parity_grid(false)});
  add({"parity_U",
       "Zlobin's mirrored parity identity for indices with every entry >= 2",
       "Zlobin's parity identity", {"w", "i"},
       "alpha = i-th composition of w with every entry >= 2",
       [](const Params& p) { return build_parity(p, true); }, parity_grid(true)});
  add({"eq519",
       "signed convolution of zeta({2}^k) against zetastar({1}^m, {2}^{q+1})",
       "ones-against-twos convolution", {"r", "m"}, "r, m >= 0",
       build_eq519, grid_product({{"r", {0, 3}}, {"m", {0, 3}}})});
  add({"orthogonality",
       "sum (-1)^a zeta({s}^a) zetastar({s}^b) collapses to [n = 0]",
       "zeta/zetastar orthogonality", {"s", "n"}, "s >= 2, n >= 0",
       build_orthogonality, grid_product({{"s", {2, 3}}, {"n", {0, 5}}})});
  add({"mixed_parity_sum",
       "mixed signed height-two sum as a convolution of height-one sums",
       "mixed parity convolution", {"p"}, "p >= 0",
       build_mixed_parity, grid_product({{"p", {0, 5}}})});
  add({"s6_1m2",
       "zetastar({1}^m, 2) = (m+1) zeta(m+2)",
       "Zlobin's ones evaluation", {"m"}, "m >= 0",
       build_s6_1m2, grid_product({{"m", {0, 8}}})});
  add({"s6_1m22_a",
       "zetastar({1}^m, 2, 2) through the weighted double sum",
       "ones-twos evaluation, first form", {"m"}, "m >= 0",
       [](const Params& p) { return build_s6_1m22(p, 0); }, grid_product({{"m", {0, 5}}})});
  add({"s6_1m22_b",
       "zetastar({1}^m, 2, 2) in Zlobin's closed form",
       "Zlobin's ones-twos evaluation", {"m"}, "m >= 0",
       [](const Params& p) { return build_s6_1m22(p, 1); }, grid_product({{"m", {0, 5}}})});
  add({"s6_1m22_cross",
       "the two right sides for zetastar({1}^m, 2, 2) agree with each other",
       "cross-check of the two ones-twos forms", {"m"}, "m >= 0",
       [](const Params& p) { return build_s6_1m22(p, 2); }, grid_product({{"m", {0, 5}}})});
  add({"prop61_weighted",
       "weighted double sum (a+1)(b+1) zeta(a+2, b+2) in closed form",
       "weighted sum formula", {"m"}, "m >= 0",
       build_prop61, grid_product({{"m", {0, 5}}})});
  add({"s6_euler_weighted",
       "weighted products (a+1)(b+1) zeta(a+2) zeta(b+2); divergent at m = 0",
       "stuffled weighted sum", {"m"}, "m >= 1",
       build_s6_euler_weighted, grid_product({{"m", {1, 5}}})});
  add({"eie_yang_2pow",
       "the 2^beta-weighted double-sum form of the weighted products",
       "Eie-Yang weighted identity", {"m"}, "m >= 0",
       build_eie_yang_2pow, grid_product({{"m", {0, 5}}})});
  add({"s6_1_2n",
       "zetastar(1, {2}^{n+1}) = 2 zeta(2n+3)",
       "Zlobin's odd zeta evaluation", {"n"}, "n >= 0",
       build_s6_1_2n, grid_product({{"n", {0, 4}}})});
  add({"zagier_aggregate",
       "sum of zeta({2}^a, 3, {2}^b) as an alternating convolution",
       "Zagier's 2-3-2 sum", {"r"}, "r >= 0",
       build_zagier_aggregate, grid_product({{"r", {0, 3}}})});
  add({"rs_id",
       "distributing m copies of {s} around fixed entries r_1..r_n",
       "block distribution transform", {"s", "m", "r1"},
       "s >= 2, r_i >= 1, r_n >= 2; optional r2, r3 extend the pattern",
       build_rs_id, rs_grid()});
  add({"eq_112n",
       "zetastar(1, 1, {2}^{n+1}) against a convolution of odd zetas",
       "two-ones evaluation", {"n"}, "n >= 0",
       build_eq_112n, grid_product({{"n", {0, 4}}})});
  add({"ohno_zudilin",
       "zetastar(1, 1, {2}^{n+1}) = 4 zetastar(1, 2n+3) - 2 zeta(2n+4)",
       "Ohno-Zudilin lemma", {"n"}, "n >= 0",
       build_ohno_zudilin, grid_product({{"n", {0, 4}}})});
  add({"prop62",
       "convolution of odd zetas against zeta(2n+4) and zeta(1, 2n+3)",
       "odd zeta convolution", {"n"}, "n >= 0; the n = 0 edge is flagged",
       build_prop62, grid_product({{"n", {0, 3}}})});
  add({"eie_yang_remark",
       "sum zeta(a+2) zeta(b+2) = (n+3) zeta(n+4) - 2 zeta(1, n+3)",
       "Eie-Yang remark identity", {"n"}, "n >= 0",
       build_eie_yang_remark, grid_product({{"n", {0, 5}}})});
  add({"s6_m3",
       "zetastar({1}^3, {2}^{n+1}) in closed convolution form",
       "three-ones evaluation", {"n"}, "n >= 0",
       build_s6_m3, grid_product({{"n", {0, 2}}})});
  add({"zu_zb_rel",
       "Z_U rewritten through two bounded forms",
       "capped-to-bounded conversion", {"wa", "ia", "wb", "ib"},
       "alpha admissible, beta any composition (wb = 0 for empty)",
       [](const Params& p) { return build_zu_zb_rel(p, false); }, zu_zb_rel_grid(false)});
  add({"zl_zb_rel",
       "Z_L rewritten through two bounded forms",
       "anchored-to-bounded conversion", {"wa", "ia", "wb", "ib"},
       "alpha admissible, beta admissible or empty (wb = 0)",
       [](const Params& p) { return build_zu_zb_rel(p, true); }, zu_zb_rel_grid(true)});
  add({"zb_rec",
       "p-step unwinding of the capped-to-bounded conversion",
       "bounded-form recursion", {"w", "i", "m", "p"},
       "alpha = i-th admissible index of weight w; 1 <= p <= m <= depth-1",
       build_zb_rec, zb_rec_grid()});
  add({"prop71",
       "full unwinding: Z_B against reversed prefixes lands on (-1)^m zeta(alpha)",
       "bounded-form zeta identity", {"w", "i", "m"},
       "alpha = i-th admissible index of weight w; 1 <= m <= depth-1",
       [](const Params& p) { return build_prop71(p, false); }, prop71_grid(7)});
  add({"zl_zb_rec",
       "mirrored unwinding through anchored forms",
       "anchored-form recursion", {"w", "i", "m", "p"},
       "alpha = i-th composition of weight w with alpha_1..alpha_{m+1} >= 2",
       build_zl_zb_rec, zl_rec_grid(true)});
  add({"zl_prop71",
       "mirrored full unwinding onto (-1)^m zeta(reversed alpha)",
       "anchored-form zeta identity", {"w", "i", "m"},
       "alpha = i-th composition of weight w with alpha_1..alpha_{m+1} >= 2",
       [](const Params& p) { return build_prop71(p, true); }, zl_rec_grid(false)});
  add({"sum_formula_chain",
       "zeta(m+n+2) as the signed chain of capped forms over ones blocks",
       "series proof of the sum formula", {"m", "n"}, "m, n >= 0",
       build_sum_formula_chain, grid_product({{"m", {0, 3}}, {"n", {0, 3}}})});

  return reg;
}

}  // namespace

const std::vector<Identity>& registry() {
  static const std::vector<Identity> reg = make_registry();
  return reg;
}

const Identity* find_identity(const std::string& id) {
  for (const Identity& ident : registry())
    if (ident.id == id) return &ident;
  return nullptr;
}

Verdict run(const std::string& id, const Params& params, const SuiteConfig& cfg) {
  const Identity* ident = find_identity(id);
  if (!ident) throw std::invalid_argument("unknown identity '" + id + "'");

  Verdict v;
  v.id = id;
  v.params = params;

  // malformed parameters (missing names) propagate as invalid_argument
  IdentityInstance inst = ident->build(params);
  if (!inst.domain_ok) {
    v.status = Status::OutOfDomain;
    v.note = inst.reason;
    return v;
  }

  try {
    EvalResult lhs = eval_combo(inst.lhs, cfg.eval);
    EvalResult rhs = eval_combo(inst.rhs, cfg.eval);
    v.lhs = lhs.value;
    v.rhs = rhs.value;
    v.lhs_bound = lhs.error_bound;
    v.rhs_bound = rhs.error_bound;
    v.abs_diff = std::abs(lhs.value - rhs.value);
    v.budget = lhs.error_bound + rhs.error_bound + cfg.slack;
    if (v.abs_diff <= v.budget) {
      v.status = Status::Pass;
    } else if (lhs.error_bound > cfg.eval.target_eps || rhs.error_bound > cfg.eval.target_eps) {
      v.status = Status::BudgetNotMet;
      v.note = "requested accuracy unreachable at max cutoff " +
               std::to_string(cfg.eval.max_cutoff);
    } else {
      v.status = Status::Fail;
    }
    if (!inst.note.empty()) v.note = v.note.empty() ? inst.note : v.note + "; " + inst.note;
  } catch (const DivergentAtom& e) {
    v.status = Status::OutOfDomain;
    v.note = e.what();
  }
  return v;
}

std::vector<Verdict> sweep(const std::string& id, const std::vector<Params>& grid,
                           const SuiteConfig& cfg) {
  std::vector<Verdict> out;
  out.reserve(grid.size());
  for (const Params& p : grid) out.push_back(run(id, p, cfg));
  return out;
}

std::vector<Verdict> run_default_suite(const SuiteConfig& cfg) {
  std::vector<Verdict> out;
  for (const Identity& ident : registry()) {
    std::vector<Verdict> part = sweep(ident.id, ident.default_grid, cfg);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool any_fail(const std::vector<Verdict>& verdicts) {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.status == Status::Fail; });
}

namespace {

std::string format_params(const Params& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += " ";
    out += k + "=" + std::to_string(v);
  }
  return out;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

uint64_t fnv1a(const std::string& s, uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::string report_json(const std::vector<Verdict>& verdicts, const SuiteConfig& cfg) {
  nlohmann::ordered_json j;
  uint64_t h = fnv1a(format_double(cfg.eval.target_eps));
  h = fnv1a(std::to_string(cfg.eval.max_cutoff), h);
  h = fnv1a(format_double(cfg.slack), h);
  for (const Verdict& v : verdicts) h = fnv1a(v.id + ":" + format_params(v.params), h);
  char run_id[24];
  std::snprintf(run_id, sizeof run_id, "%016llx", static_cast<unsigned long long>(h));

  j["run_id"] = run_id;
  j["config"] = {{"target_eps", cfg.eval.target_eps},
                 {"max_cutoff", cfg.eval.max_cutoff},
                 {"slack", cfg.slack},
                 {"summation",
                  cfg.eval.summation == Summation::Compensated ? "compensated" : "plain"}};
  j["results"] = nlohmann::ordered_json::array();
  for (const Verdict& v : verdicts) {
    nlohmann::ordered_json r;
    r["id"] = v.id;
    r["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, val] : v.params) r["params"][k] = val;
    r["lhs"] = v.lhs;
    r["rhs"] = v.rhs;
    r["abs_diff"] = v.abs_diff;
    r["budget"] = v.budget;
    r["status"] = to_string(v.status);
    if (!v.note.empty()) r["note"] = v.note;
    j["results"].push_back(r);
  }
  return j.dump(2);
}

std::string report_csv(const std::vector<Verdict>& verdicts) {
  std::string out = "id,params,lhs,rhs,abs_diff,budget,status\n";
  for (const Verdict& v : verdicts) {
    out += v.id + "," + format_params(v.params) + "," + format_double(v.lhs) + "," +
           format_double(v.rhs) + "," + format_double(v.abs_diff) + "," +
           format_double(v.budget) + "," + to_string(v.status) + "\n";
  }
  return out;
}

std::string report_markdown(const std::vector<Verdict>& verdicts) {
  std::string out =
      "| id | params | lhs | rhs | abs diff | budget | status |\n"
      "|---|---|---|---|---|---|---|\n";
  for (const Verdict& v : verdicts) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "| %s | %s | %.12g | %.12g | %.3g | %.3g | %s |\n",
                  v.id.c_str(), format_params(v.params).c_str(), v.lhs, v.rhs, v.abs_diff,
                  v.budget, to_string(v.status));
    out += buf;
  }
  return out;
}

}  // namespace mzv
