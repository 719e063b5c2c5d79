#pragma once

#include <stdexcept>
#include <string>

#include "mzv/chain_sum.hpp"
#include "mzv/combo.hpp"
#include "mzv/index.hpp"

namespace mzv {

enum class Summation { Plain, Compensated };

struct EvalConfig {
  double target_eps = 1e-7;
  long long max_cutoff = 100000000;
  Summation summation = Summation::Compensated;
};

/**
 * A certified numerical value: |value - true value| <= error_bound, where
 * error_bound covers the proven series truncation bound plus a floating
 * point rounding allowance.
 */
struct EvalResult {
  double value = 0.0;
  double error_bound = 0.0;
  long long cutoff = 0;
  long long terms = 0;
};

/// thrown when a requested value diverges (zeta(1), non-admissible chains)
class DivergentAtom : public std::domain_error {
 public:
  explicit DivergentAtom(const Atom& a);
  const Atom& atom() const { return atom_; }

 private:
  Atom atom_;
};

/// Riemann zeta at integer k >= 2, Euler-Maclaurin with explicit remainder
EvalResult eval_riemann(int k);

/**
 * Proven bound on the tail discarded when the defining series is truncated
 * at cutoff N (all chain variables <= N).
 *
 * Unsigned last slot, exponent a >= 2, depth r: the inner partial sums are
 * at most H_k^{r-1}/(r-1)! for strict chains (H_k^{r-1} for weak ones), and
 * sum_{k>N} k^-a (1+ln k)^q is bounded by the exact closed form of
 * int_N^inf x^-a (1+ln x)^q dx plus a peak correction when the integrand
 * still grows at N. A signed last slot gets the alternating-pair bound,
 * which decays one power faster.
 */
double tail_bound(const MultiIndex& idx, ChainMode mode, long long N);

/**
 * Direct dynamic-programming evaluation of a (star) multiple zeta value:
 * single pass over k = 1..N with one running accumulator per slot, O(rN)
 * time, O(r) memory. N is the smallest cutoff whose tail bound meets
 * cfg.target_eps, capped at cfg.max_cutoff (the achieved bound is then
 * reported). Throws DivergentAtom for non-admissible input.
 */
EvalResult eval_mzv(const MultiIndex& idx, ChainMode mode, const EvalConfig& cfg);

/**
 * Best certified route for a single atom. Unsigned strict values go through
 * the splitting of their iterated-integral word at one half: every piece is
 * a generalized polylogarithm at 1/2 whose series gains a factor 2^-k per
 * term, so machine-precision values come with tiny proven tails regardless
 * of depth. Star values contract to strict ones first; alternating values
 * use the direct summation engine; two-chain sums expand to strict atoms.
 * Results are memoized per (atom, config).
 */
EvalResult eval_atom(const Atom& atom, const EvalConfig& cfg);

/**
 * Evaluate a combination: value = sum of coeff * (product of atom values).
 * Bounds propagate first order: products accumulate each factor's bound
 * times the others' |value| + bound; sums weight bounds by |coeff|.
 * Throws DivergentAtom naming the offending atom.
 */
EvalResult eval_combo(const LinearCombo& combo, const EvalConfig& cfg);

/// drop all memoized atom evaluations (tests use this to force fresh runs)
void clear_eval_cache();

}  // namespace mzv
