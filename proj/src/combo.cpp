#include "mzv/combo.hpp"

#include <algorithm>

namespace mzv {

std::string GeneralForm::invariant_violation() const {
  if (upper.empty()) return "empty upper chain";
  if (upper.has_bars() || lower.has_bars()) return "two-chain sums take unsigned indices";
  if (upper.exponents.back() < 2) return "upper chain must end with exponent >= 2";
  if (kind == FormKind::L && !lower.empty() && lower.exponents.back() < 2)
    return "lower chain of an L form must end with exponent >= 2";
  return "";
}

std::strong_ordering operator<=>(const GeneralForm& a, const GeneralForm& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.upper <=> b.upper; c != 0) return c;
  return a.lower <=> b.lower;
}

Atom Atom::unit() { return Atom{}; }

Atom Atom::riemann(int k) {
  Atom a;
  a.kind = AtomKind::Zeta;
  a.zeta_k = k;
  return a;
}

Atom Atom::mzv(MultiIndex idx) {
  Atom a;
  a.kind = AtomKind::Mzv;
  a.index = std::move(idx);
  return a;
}

Atom Atom::mzsv(MultiIndex idx) {
  Atom a;
  a.kind = AtomKind::Mzsv;
  a.index = std::move(idx);
  return a;
}

Atom Atom::alt(MultiIndex idx) {
  Atom a;
  a.kind = AtomKind::AltMzv;
  a.index = std::move(idx);
  return a;
}

Atom Atom::general(GeneralForm f) {
  Atom a;
  a.kind = AtomKind::Form;
  a.form = std::move(f);
  return a;
}

bool Atom::divergent() const {
  switch (kind) {
    case AtomKind::Unit:
      return false;
    case AtomKind::Zeta:
      return zeta_k < 2;
    case AtomKind::Mzv:
    case AtomKind::Mzsv:
    case AtomKind::AltMzv:
      // a trailing signed 1 is rejected as well, so admissibility is the
      // single convergence test for every chain atom
      return !index.admissible();
    case AtomKind::Form:
      return !form.invariant_violation().empty();
  }
  return true;
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  switch (a.kind) {
    case AtomKind::Unit:
      return std::strong_ordering::equal;
    case AtomKind::Zeta:
      return a.zeta_k <=> b.zeta_k;
    case AtomKind::Mzv:
    case AtomKind::Mzsv:
    case AtomKind::AltMzv:
      return a.index <=> b.index;
    case AtomKind::Form:
      return a.form <=> b.form;
  }
  return std::strong_ordering::equal;
}

Atom canonical(Atom a) {
  switch (a.kind) {
    case AtomKind::AltMzv:
      if (!a.index.has_bars()) a.kind = AtomKind::Mzv;
      break;
    case AtomKind::Form:
      if (a.form.lower.empty()) {
        Atom out = Atom::mzv(a.form.upper);
        return canonical(std::move(out));
      }
      return a;
    default:
      break;
  }
  if (a.kind == AtomKind::Mzv || a.kind == AtomKind::Mzsv || a.kind == AtomKind::AltMzv) {
    if (a.index.empty()) return Atom::unit();
    if (a.kind != AtomKind::AltMzv && a.index.depth() == 1)
      return Atom::riemann(a.index.exponents[0]);
  }
  return a;
}

std::string to_string(const Atom& a) {
  switch (a.kind) {
    case AtomKind::Unit:
      return "1";
    case AtomKind::Zeta:
      return "zeta(" + std::to_string(a.zeta_k) + ")";
    case AtomKind::Mzv:
      return "zeta(" + to_string(a.index) + ")";
    case AtomKind::Mzsv:
      return "zetastar(" + to_string(a.index) + ")";
    case AtomKind::AltMzv:
      return "zeta(" + to_string(a.index) + ")";
    case AtomKind::Form: {
      const char* name = a.form.kind == FormKind::B ? "zb"
                         : a.form.kind == FormKind::L ? "zl"
                                                      : "zu";
      return std::string(name) + "(" + to_string(a.form.upper) + ";" +
             to_string(a.form.lower) + ")";
    }
  }
  return "?";
}

Term::Term(Atom a) {
  if (a.kind != AtomKind::Unit) factors.push_back(std::move(a));
}

Term::Term(std::vector<Atom> fs) : factors(std::move(fs)) {
  std::erase_if(factors, [](const Atom& a) { return a.kind == AtomKind::Unit; });
  std::sort(factors.begin(), factors.end());
}

Term Term::operator*(const Term& rhs) const {
  std::vector<Atom> all = factors;
  all.insert(all.end(), rhs.factors.begin(), rhs.factors.end());
  return Term(std::move(all));
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  return a.factors <=> b.factors;
}

std::string to_string(const Term& t) {
  if (t.factors.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < t.factors.size(); ++i) {
    if (i) out += "*";
    out += to_string(t.factors[i]);
  }
  return out;
}

LinearCombo LinearCombo::constant(Rational q) {
  LinearCombo c;
  c.add(Term(), q);
  return c;
}

LinearCombo LinearCombo::of(Atom a, Rational coeff) {
  LinearCombo c;
  c.add_atom(a, coeff);
  return c;
}

void LinearCombo::add(const Term& term, const Rational& coeff) {
  if (coeff.is_zero()) return;
  Term t;
  t.factors.reserve(term.factors.size());
  for (const Atom& a : term.factors) {
    Atom c = canonical(a);
    if (c.kind != AtomKind::Unit) t.factors.push_back(std::move(c));
  }
  std::sort(t.factors.begin(), t.factors.end());
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    terms_.emplace(std::move(t), coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LinearCombo::add_atom(const Atom& a, const Rational& coeff) {
  add(Term(a), coeff);
}

LinearCombo& LinearCombo::operator+=(const LinearCombo& rhs) {
  for (const auto& [t, q] : rhs.terms_) add(t, q);
  return *this;
}

LinearCombo& LinearCombo::operator-=(const LinearCombo& rhs) {
  for (const auto& [t, q] : rhs.terms_) add(t, -q);
  return *this;
}

LinearCombo& LinearCombo::operator*=(const Rational& q) {
  if (q.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_) c *= q;
  return *this;
}

LinearCombo operator*(const LinearCombo& a, const LinearCombo& b) {
  LinearCombo out;
  for (const auto& [ta, qa] : a.terms_)
    for (const auto& [tb, qb] : b.terms_) out.add(ta * tb, qa * qb);
  return out;
}

bool LinearCombo::is_atom_linear() const {
  for (const auto& [t, q] : terms_)
    if (t.factors.size() > 1) return false;
  return true;
}

std::string LinearCombo::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, q] : terms_) {
    Rational mag = q.abs();
    if (first) {
      if (q.sign() < 0) out += "-";
      first = false;
    } else {
      out += q.sign() < 0 ? " - " : " + ";
    }
    if (t.factors.empty()) {
      out += mag.to_string();
    } else if (mag == Rational(1)) {
      out += mzv::to_string(t);
    } else {
      out += mag.to_string() + "*" + mzv::to_string(t);
    }
  }
  return out;
}

}  // namespace mzv
