#pragma once

#include <map>
#include <string>
#include <vector>

#include "mzv/combo.hpp"
#include "mzv/index.hpp"

namespace mzv {

/**
 * A two-sided identity instance. Builders only assemble structure; numeric
 * evaluation and tolerance policy live with the verification registry, so
 * instances stay inspectable and serializable.
 */
struct IdentityInstance {
  std::string id;
  std::map<std::string, long long> params;
  LinearCombo lhs;
  LinearCombo rhs;
  bool domain_ok = true;
  std::string reason;
  std::string note;  // advisory remark carried into verdicts and reports

  static IdentityInstance out_of_domain(std::string id,
                                        std::map<std::string, long long> params,
                                        std::string why);
};

std::string instance_json(const IdentityInstance& inst);

// ---------------------------------------------------------------------------
// height-one sums
// ---------------------------------------------------------------------------

LinearCombo Zminus(int n);       // sum of (-1)^b zeta({1}^a, b+2), a+b = n
LinearCombo Zplus(int n);        // unsigned variant
LinearCombo Zstar_minus(int n);  // star variant with signs
LinearCombo Zstar_plus(int n);   // star variant, unsigned

// ---------------------------------------------------------------------------
// structural identities; every builder returns both sides
// ---------------------------------------------------------------------------

/// zeta(alpha) zetastar(beta) split at the bottom of the weak chain:
/// LHS product, RHS = Z_L(alpha;beta) + Z_L(beta_1 alpha; beta_2..beta_m)
IdentityInstance product_split_L(const MultiIndex& alpha, const MultiIndex& beta);

/// same product split at the top: RHS = Z_U(alpha;beta) + Z_U(alpha beta_m; ...)
IdentityInstance product_split_U(const MultiIndex& alpha, const MultiIndex& beta);

/// zeta(alpha) + (-1)^r zetastar(reversed alpha) as an alternating convolution
/// of star prefixes and strict suffixes; needs alpha_1 >= 2 and alpha_r >= 2
IdentityInstance parity_L(const MultiIndex& alpha);

/// the mirrored recursion (Zlobin's identity); needs every alpha_i >= 2
IdentityInstance parity_U(const MultiIndex& alpha);

/// Z_U(alpha;beta) = Z_B(alpha;beta) + Z_B(beta_1 alpha; beta_2..beta_m)
IdentityInstance zu_to_zb(const MultiIndex& alpha, const MultiIndex& beta);

/// Z_L(alpha;beta) = Z_B(alpha;beta) + Z_B(alpha beta_m; beta_1..beta_{m-1})
IdentityInstance zl_to_zb(const MultiIndex& alpha, const MultiIndex& beta);

/**
 * Unwinding of zu_to_zb: for a sequence alpha with alpha_r >= 2 and
 * 1 <= p <= m <= r-1,
 *   Z_B(a_{m+1..r}; a_m..a_1) = (-1)^p Z_B(a_{m+1-p..r}; a_{m-p}..a_1)
 *     + sum_{k=1}^p (-1)^{k-1} Z_U(a_{m+2-k..r}; a_{m+1-k}..a_1).
 * p = m lands on plain zeta; m = r would leave an empty strict chain, so the
 * recursion is only offered through m = r-1.
 */
IdentityInstance zb_recursion(const MultiIndex& alpha, int m, int p);

/// the p = m case above, stated directly against (-1)^m zeta(alpha)
IdentityInstance zuzb_zeta(const MultiIndex& alpha, int m);

/// mirrored unwinding of zl_to_zb on reversed sequences; needs
/// alpha_1..alpha_{m+1} >= 2
IdentityInstance zlzb_recursion(const MultiIndex& alpha, int m, int p);
IdentityInstance zlzb_zeta(const MultiIndex& alpha, int m);

/// sum_{a+b=n} (-1)^a zeta({s}^a) zetastar({s}^b) collapses to [n = 0]
IdentityInstance orthogonality(int s, int n);

/**
 * Block transform: distributing m copies of {s} around fixed entries r_1..r_n
 * equals an alternating convolution with plain zeta({s}^a) factors,
 *   sum_{|a|=m} zeta({s}^{a_0}, r_1, {s}^{a_1}, ..., r_n, {s}^{a_n})
 *     = sum_{|a|=m} (-1)^{m-a_0} zeta({s}^{a_0}) zeta(s a_1 + r_1, ..., s a_n + r_n).
 * Needs s >= 2, every r_i >= 1 and r_n >= 2.
 */
IdentityInstance rs_transform(int s, int m, const std::vector<int>& r_list);

}  // namespace mzv
