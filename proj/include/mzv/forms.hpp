#pragma once

#include <string>

#include "mzv/chain_sum.hpp"
#include "mzv/combo.hpp"
#include "mzv/index.hpp"
#include "mzv/rational.hpp"

namespace mzv {

struct ExpandLimits {
  int max_total_depth = 9;  // depth(upper) + depth(lower)
};

/**
 * Exact expansion of a two-chain sum into strict-chain atoms.
 *
 * Enumerates every order-preserving interleaving of the strict chain and the
 * weak chain, resolving each comparison into '<' or '='; equalities merge
 * variables and add exponents. Every resulting strict chain contributes its
 * multi-index with coefficient +1, so the union over interleavings reproduces
 * the defining double sum term for term. Coefficients > 1 arise only from
 * repeated outcomes.
 *
 * Throws std::domain_error on invariant violations and std::length_error
 * (message includes a size estimate) past the depth limit.
 */
LinearCombo expand(const GeneralForm& form, const ExpandLimits& limits = {});

/// zeta-star contraction: replace each weak comparison by '<' or '=';
/// all coefficients +1, merged slots add exponents
LinearCombo expand_star(const MultiIndex& idx);

/// exact rational value of the defining double sum with every chain variable
/// <= N; the independent small-cutoff oracle for expand()
Rational brute_force(const GeneralForm& form, long long N);

/**
 * Closed expansions of Z_B(alpha; {1}^m) and Z_U(alpha; {1}^m) through the
 * dual index: binomially weighted sums over distributions of m extra units.
 */
LinearCombo zb_ones_expansion(const MultiIndex& upper, int m);
LinearCombo zu_ones_expansion(const MultiIndex& upper, int m);

/**
 * Windowed symmetric polynomials in the variables x_l = 1/l for
 * lo <= l <= hi (0 outside). windowed_h sums weak chains directly;
 * h_from_p assembles the same value from power sums through partitions
 * and their mu normalizers. The two routes are independent.
 */
Rational windowed_h(int m, long long lo, long long hi);
Rational windowed_p(int m, long long lo, long long hi);
Rational h_from_p(int m, long long lo, long long hi);

/// exact truncation of a combo at cutoff N: every chain atom is summed over
/// chains with all variables <= N, products multiply truncated factors
Rational rational_combo_truncation(const LinearCombo& combo, long long N);

/// expansion serialized as a JSON array of {atom, numerator, denominator}
std::string expansion_json(const LinearCombo& combo);

}  // namespace mzv
