#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "mzv/index.hpp"
#include "mzv/rational.hpp"

namespace mzv {

/**
 * The three two-chain sums. Each couples a strictly increasing chain
 * (exponents `upper`) with a weakly increasing chain (exponents `lower`):
 *
 *   B: the weak chain is bounded inside the strict one, k_1 <= l_i <= k_r
 *   L: the weak chain is anchored at the lower end only, k_1 <= l_i
 *   U: the weak chain is capped at the upper end only, 1 <= l_i <= k_r
 */
enum class FormKind { B, L, U };

struct GeneralForm {
  FormKind kind = FormKind::B;
  MultiIndex upper;
  MultiIndex lower;

  /// empty string when the convergence invariants hold, else the violation
  std::string invariant_violation() const;

  friend bool operator==(const GeneralForm&, const GeneralForm&) = default;
  friend std::strong_ordering operator<=>(const GeneralForm& a, const GeneralForm& b);
};

enum class AtomKind {
  Unit,     // the empty product, exactly 1
  Zeta,     // Riemann zeta at an integer >= 2
  Mzv,      // strict-chain multiple zeta value
  Mzsv,     // weak-chain multiple zeta-star value
  AltMzv,   // strict-chain value with sign marks
  Form,     // one of the two-chain sums above
};

struct Atom {
  AtomKind kind = AtomKind::Unit;
  int zeta_k = 0;     // Zeta only
  MultiIndex index;   // Mzv / Mzsv / AltMzv
  GeneralForm form;   // Form only

  static Atom unit();
  static Atom riemann(int k);
  static Atom mzv(MultiIndex idx);
  static Atom mzsv(MultiIndex idx);
  static Atom alt(MultiIndex idx);
  static Atom general(GeneralForm f);

  /// diverges as a series (e.g. zeta(1), or a non-admissible chain)
  bool divergent() const;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);
};

/// canonical form: empty indices become Unit, markless AltMzv becomes Mzv,
/// depth-1 values become Zeta, forms with empty lower chains become Mzv
Atom canonical(Atom a);

std::string to_string(const Atom& a);

/// a product of atoms (kept sorted); the empty product is the constant 1
struct Term {
  std::vector<Atom> factors;

  Term() = default;
  explicit Term(Atom a);
  explicit Term(std::vector<Atom> fs);

  Term operator*(const Term& rhs) const;

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);
};

std::string to_string(const Term& t);

/**
 * Exact rational-coefficient combination of atom products. Zero coefficients
 * are never stored; atoms are canonicalized on insertion, so structurally
 * equal values collapse into one entry.
 */
class LinearCombo {
 public:
  LinearCombo() = default;
  static LinearCombo zero() { return LinearCombo(); }
  static LinearCombo constant(Rational q);
  static LinearCombo of(Atom a, Rational coeff = Rational(1));

  void add(const Term& term, const Rational& coeff);
  void add_atom(const Atom& a, const Rational& coeff);

  LinearCombo& operator+=(const LinearCombo& rhs);
  LinearCombo& operator-=(const LinearCombo& rhs);
  LinearCombo& operator*=(const Rational& q);
  friend LinearCombo operator+(LinearCombo a, const LinearCombo& b) { return a += b; }
  friend LinearCombo operator-(LinearCombo a, const LinearCombo& b) { return a -= b; }
  friend LinearCombo operator*(LinearCombo a, const Rational& q) { return a *= q; }
  friend LinearCombo operator*(const LinearCombo& a, const LinearCombo& b);

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Term, Rational>& terms() const { return terms_; }

  /// true when every term is a single atom (no products)
  bool is_atom_linear() const;

  friend bool operator==(const LinearCombo&, const LinearCombo&) = default;

  std::string to_string() const;

 private:
  std::map<Term, Rational> terms_;
};

}  // namespace mzv
