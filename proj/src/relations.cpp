#include "mzv/relations.hpp"

#include "json.hpp"

namespace mzv {

namespace {

Rational sign_pow(int n) { return (n % 2 == 0) ? Rational(1) : Rational(-1); }

Atom form_atom(FormKind kind, MultiIndex upper, MultiIndex lower) {
  return Atom::general(GeneralForm{kind, std::move(upper), std::move(lower)});
}

}  // namespace

IdentityInstance IdentityInstance::out_of_domain(std::string id,
                                                 std::map<std::string, long long> params,
                                                 std::string why) {
  IdentityInstance inst;
  inst.id = std::move(id);
  inst.params = std::move(params);
  inst.domain_ok = false;
  inst.reason = std::move(why);
  return inst;
}

std::string instance_json(const IdentityInstance& inst) {
  nlohmann::ordered_json j;
  j["id"] = inst.id;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : inst.params) j["params"][k] = v;
  j["domain_ok"] = inst.domain_ok;
  if (!inst.domain_ok) j["reason"] = inst.reason;
  auto combo_json = [](const LinearCombo& c) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [term, coeff] : c.terms()) {
      nlohmann::ordered_json entry;
      entry["numerator"] = coeff.num().to_string();
      entry["denominator"] = coeff.den().to_string();
      nlohmann::ordered_json factors = nlohmann::ordered_json::array();
      for (const Atom& a : term.factors) factors.push_back(to_string(a));
      entry["factors"] = factors;
      arr.push_back(entry);
    }
    return arr;
  };
  j["lhs"] = combo_json(inst.lhs);
  j["rhs"] = combo_json(inst.rhs);
  return j.dump(2);
}

// ---------------------------------------------------------------------------
// height-one sums
// ---------------------------------------------------------------------------

namespace {

LinearCombo height_one_sum(int n, bool star, bool alternating) {
  LinearCombo out;
  for (int a = 0; a <= n; ++a) {
    int b = n - a;
    MultiIndex idx = concat(ones(a), MultiIndex({b + 2}));
    Atom atom = star ? Atom::mzsv(idx) : Atom::mzv(idx);
    out.add_atom(atom, alternating ? sign_pow(b) : Rational(1));
  }
  return out;
}

}  // namespace

LinearCombo Zminus(int n) { return height_one_sum(n, false, true); }
LinearCombo Zplus(int n) { return height_one_sum(n, false, false); }
LinearCombo Zstar_minus(int n) { return height_one_sum(n, true, true); }
LinearCombo Zstar_plus(int n) { return height_one_sum(n, true, false); }

// ---------------------------------------------------------------------------
// product splits
// ---------------------------------------------------------------------------

IdentityInstance product_split_L(const MultiIndex& alpha, const MultiIndex& beta) {
  IdentityInstance inst;
  inst.id = "split_L";
  if (!alpha.admissible() || beta.empty() || beta.exponents.back() < 2)
    return IdentityInstance::out_of_domain(inst.id, {},
                                           "needs last(alpha) >= 2 and last(beta) >= 2");
  inst.lhs.add(Term({Atom::mzv(alpha), Atom::mzsv(beta)}), Rational(1));
  inst.rhs.add_atom(form_atom(FormKind::L, alpha, beta), Rational(1));
  inst.rhs.add_atom(form_atom(FormKind::L, prepend(beta.exponents[0], alpha),
                              beta.slice(1, beta.depth())),
                    Rational(1));
  return inst;
}

IdentityInstance product_split_U(const MultiIndex& alpha, const MultiIndex& beta) {
  IdentityInstance inst;
  inst.id = "split_U";
  if (!alpha.admissible() || beta.empty() || beta.exponents.back() < 2)
    return IdentityInstance::out_of_domain(inst.id, {},
                                           "needs last(alpha) >= 2 and last(beta) >= 2");
  inst.lhs.add(Term({Atom::mzv(alpha), Atom::mzsv(beta)}), Rational(1));
  inst.rhs.add_atom(form_atom(FormKind::U, alpha, beta), Rational(1));
  inst.rhs.add_atom(form_atom(FormKind::U, append(alpha, beta.exponents.back()),
                              beta.slice(0, beta.depth() - 1)),
                    Rational(1));
  return inst;
}

// ---------------------------------------------------------------------------
// parity recursions
// ---------------------------------------------------------------------------

IdentityInstance parity_L(const MultiIndex& alpha) {
  IdentityInstance inst;
  inst.id = "parity_L";
  const int r = alpha.depth();
  if (r < 1 || alpha.exponents.front() < 2 || alpha.exponents.back() < 2)
    return IdentityInstance::out_of_domain(inst.id, {},
                                           "needs alpha_1 >= 2 and alpha_r >= 2");
  inst.lhs.add_atom(Atom::mzv(alpha), Rational(1));
  inst.lhs.add_atom(Atom::mzsv(alpha.reversed()), sign_pow(r));
  for (int k = 1; k <= r - 1; ++k) {
    Term t({Atom::mzsv(alpha.slice(0, k).reversed()), Atom::mzv(alpha.slice(k, r))});
    inst.rhs.add(t, sign_pow(k + 1));
  }
  return inst;
}

IdentityInstance parity_U(const MultiIndex& alpha) {
  IdentityInstance inst;
  inst.id = "parity_U";
  const int r = alpha.depth();
  for (int e : alpha.exponents)
    if (e < 2) return IdentityInstance::out_of_domain(inst.id, {}, "needs every alpha_i >= 2");
  if (r < 1) return IdentityInstance::out_of_domain(inst.id, {}, "needs depth >= 1");
  inst.lhs.add_atom(Atom::mzsv(alpha.reversed()), Rational(1));
  inst.lhs.add_atom(Atom::mzv(alpha), sign_pow(r));
  for (int k = 1; k <= r - 1; ++k) {
    Term t({Atom::mzv(alpha.slice(0, k)), Atom::mzsv(alpha.slice(k, r).reversed())});
    inst.rhs.add(t, sign_pow(k + 1));
  }
  return inst;
}

// ---------------------------------------------------------------------------
// conversions between the two-chain sums
// ---------------------------------------------------------------------------

IdentityInstance zu_to_zb(const MultiIndex& alpha, const MultiIndex& beta) {
  IdentityInstance inst;
  inst.id = "zu_zb_rel";
  if (!alpha.admissible())
    return IdentityInstance::out_of_domain(inst.id, {}, "needs last(alpha) >= 2");
  inst.lhs.add_atom(form_atom(FormKind::U, alpha, beta), Rational(1));
  inst.rhs.add_atom(form_atom(FormKind::B, alpha, beta), Rational(1));
  if (!beta.empty())
    inst.rhs.add_atom(form_atom(FormKind::B, prepend(beta.exponents[0], alpha),
                                beta.slice(1, beta.depth())),
                      Rational(1));
  return inst;
}

IdentityInstance zl_to_zb(const MultiIndex& alpha, const MultiIndex& beta) {
  IdentityInstance inst;
  inst.id = "zl_zb_rel";
  if (!alpha.admissible() || (!beta.empty() && beta.exponents.back() < 2))
    return IdentityInstance::out_of_domain(inst.id, {},
                                           "needs last(alpha) >= 2 and last(beta) >= 2");
  inst.lhs.add_atom(form_atom(FormKind::L, alpha, beta), Rational(1));
  inst.rhs.add_atom(form_atom(FormKind::B, alpha, beta), Rational(1));
  if (!beta.empty())
    inst.rhs.add_atom(form_atom(FormKind::B, append(alpha, beta.exponents.back()),
                                beta.slice(0, beta.depth() - 1)),
                      Rational(1));
  return inst;
}

IdentityInstance zb_recursion(const MultiIndex& alpha, int m, int p) {
  IdentityInstance inst;
  inst.id = "zb_rec";
  inst.params = {{"m", m}, {"p", p}};
  const int r = alpha.depth();
  if (!alpha.admissible() || alpha.has_bars())
    return IdentityInstance::out_of_domain(inst.id, inst.params, "needs last(alpha) >= 2");
  if (m < 1 || m > r - 1)
    return IdentityInstance::out_of_domain(
        inst.id, inst.params,
        m == r ? "m = r leaves an empty strict chain; valid range is 1 <= m <= r-1"
               : "needs 1 <= m <= r-1");
  if (p < 1 || p > m)
    return IdentityInstance::out_of_domain(inst.id, inst.params,
                                           "recursion parameter needs 1 <= p <= m");

  auto upper = [&](int from) { return alpha.slice(from, r); };
  auto lower_rev = [&](int to) { return alpha.slice(0, to).reversed(); };

  inst.lhs.add_atom(form_atom(FormKind::B, upper(m), lower_rev(m)), Rational(1));
  inst.rhs.add_atom(form_atom(FormKind::B, upper(m - p), lower_rev(m - p)), sign_pow(p));
  for (int k = 1; k <= p; ++k)
    inst.rhs.add_atom(form_atom(FormKind::U, upper(m + 1 - k), lower_rev(m + 1 - k)),
                      sign_pow(k - 1));
  return inst;
}

IdentityInstance zuzb_zeta(const MultiIndex& alpha, int m) {
  IdentityInstance inst = zb_recursion(alpha, m, m);
  inst.id = "prop71";
  inst.params = {{"m", m}};
  return inst;
}

IdentityInstance zlzb_recursion(const MultiIndex& alpha, int m, int p) {
  IdentityInstance inst;
  inst.id = "zl_zb_rec";
  inst.params = {{"m", m}, {"p", p}};
  const int r = alpha.depth();
  if (alpha.empty() || alpha.has_bars())
    return IdentityInstance::out_of_domain(inst.id, inst.params, "empty sequence");
  if (m < 1 || m > r - 1)
    return IdentityInstance::out_of_domain(
        inst.id, inst.params,
        m == r ? "m = r leaves an empty strict chain; valid range is 1 <= m <= r-1"
               : "needs 1 <= m <= r-1");
  if (p < 1 || p > m)
    return IdentityInstance::out_of_domain(inst.id, inst.params,
                                           "recursion parameter needs 1 <= p <= m");
  for (int i = 0; i <= m; ++i)
    if (alpha.exponents[static_cast<std::size_t>(i)] < 2)
      return IdentityInstance::out_of_domain(inst.id, inst.params,
                                             "needs alpha_1..alpha_{m+1} >= 2");

  // reversed orientation: the strict chain reads alpha_r down to alpha_{m+1}
  auto upper_rev = [&](int from) { return alpha.slice(from, r).reversed(); };
  auto lower_fwd = [&](int to) { return alpha.slice(0, to); };

  inst.lhs.add_atom(form_atom(FormKind::B, upper_rev(m), lower_fwd(m)), Rational(1));
  inst.rhs.add_atom(form_atom(FormKind::B, upper_rev(m - p), lower_fwd(m - p)), sign_pow(p));
  for (int k = 1; k <= p; ++k)
    inst.rhs.add_atom(form_atom(FormKind::L, upper_rev(m + 1 - k), lower_fwd(m + 1 - k)),
                      sign_pow(k - 1));
  return inst;
}

IdentityInstance zlzb_zeta(const MultiIndex& alpha, int m) {
  IdentityInstance inst = zlzb_recursion(alpha, m, m);
  inst.id = "zl_prop71";
  inst.params = {{"m", m}};
  return inst;
}

// ---------------------------------------------------------------------------
// orthogonality and the block transform
// ---------------------------------------------------------------------------

IdentityInstance orthogonality(int s, int n) {
  IdentityInstance inst;
  inst.id = "orthogonality";
  inst.params = {{"s", s}, {"n", n}};
  if (s < 2 || n < 0)
    return IdentityInstance::out_of_domain(inst.id, inst.params, "needs s >= 2 and n >= 0");
  for (int a = 0; a <= n; ++a) {
    Term t({Atom::mzv(repeat(s, a)), Atom::mzsv(repeat(s, n - a))});
    inst.lhs.add(t, sign_pow(a));
  }
  inst.rhs = LinearCombo::constant(Rational(n == 0 ? 1 : 0));
  return inst;
}

IdentityInstance rs_transform(int s, int m, const std::vector<int>& r_list) {
  IdentityInstance inst;
  inst.id = "rs_id";
  inst.params = {{"s", s}, {"m", m}};
  for (std::size_t i = 0; i < r_list.size(); ++i)
    inst.params["r" + std::to_string(i + 1)] = r_list[i];
  const int n = static_cast<int>(r_list.size());
  if (s < 2 || m < 0 || n < 1)
    return IdentityInstance::out_of_domain(inst.id, inst.params,
                                           "needs s >= 2, m >= 0 and at least one r");
  for (int rv : r_list)
    if (rv < 1) return IdentityInstance::out_of_domain(inst.id, inst.params, "needs r_i >= 1");
  if (r_list.back() < 2)
    return IdentityInstance::out_of_domain(inst.id, inst.params,
                                           "needs r_n >= 2 so every block pattern converges");

  WeakCompositions comps(m, n + 1);
  std::vector<int> a;
  while (comps.next(a)) {
    MultiIndex left = repeat(s, a[0]);
    std::vector<int> rhs_exps;
    for (int i = 1; i <= n; ++i) {
      left = concat(left, MultiIndex({r_list[static_cast<std::size_t>(i - 1)]}));
      left = concat(left, repeat(s, a[static_cast<std::size_t>(i)]));
      rhs_exps.push_back(s * a[static_cast<std::size_t>(i)] +
                         r_list[static_cast<std::size_t>(i - 1)]);
    }
    inst.lhs.add_atom(Atom::mzv(left), Rational(1));
    inst.rhs.add(Term({Atom::mzv(repeat(s, a[0])), Atom::mzv(MultiIndex(rhs_exps))}),
                 sign_pow(m - a[0]));
  }
  return inst;
}

}  // namespace mzv
