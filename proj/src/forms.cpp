#include "mzv/forms.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace mzv {

namespace {

// suffix exponent sequences reachable from a merge state, with multiplicity
using Suffixes = std::map<std::vector<int>, long long>;

struct MergeContext {
  const std::vector<int>* alpha;
  const std::vector<int>* beta;
  int r, m;
  FormKind kind;
  std::vector<std::optional<Suffixes>> memo;

  Suffixes& at(int i, int j) {
    auto& slot = memo[static_cast<std::size_t>(i * (m + 1) + j)];
    if (!slot) slot = compute(i, j);
    return *slot;
  }

  Suffixes compute(int i, int j) {
    Suffixes out;
    if (i == r && j == m) {
      out[{}] = 1;
      return out;
    }
    auto extend = [&](int slot_exp, int ni, int nj) {
      for (const auto& [suffix, count] : at(ni, nj)) {
        std::vector<int> seq;
        seq.reserve(suffix.size() + 1);
        seq.push_back(slot_exp);
        seq.insert(seq.end(), suffix.begin(), suffix.end());
        out[seq] += count;
      }
    };

    // next strict variable alone
    if (i < r) extend((*alpha)[static_cast<std::size_t>(i)], i + 1, j);

    // a run of equal weak variables, alone; forbidden strictly below the
    // first strict variable (B, L) and strictly above the last one (B, U)
    const bool below_ok = kind == FormKind::U || i >= 1;
    const bool above_ok = kind == FormKind::L || i < r;
    if (below_ok && above_ok) {
      int sum = 0;
      for (int t = 1; j + t <= m; ++t) {
        sum += (*beta)[static_cast<std::size_t>(j + t - 1)];
        extend(sum, i, j + t);
      }
    }

    // next strict variable together with a run of equal weak variables
    if (i < r) {
      int sum = (*alpha)[static_cast<std::size_t>(i)];
      for (int t = 1; j + t <= m; ++t) {
        sum += (*beta)[static_cast<std::size_t>(j + t - 1)];
        extend(sum, i + 1, j + t);
      }
    }
    return out;
  }
};

}  // namespace

LinearCombo expand(const GeneralForm& form, const ExpandLimits& limits) {
  if (auto why = form.invariant_violation(); !why.empty()) throw std::domain_error(why);
  const int r = form.upper.depth();
  const int m = form.lower.depth();
  if (r + m > limits.max_total_depth) {
    double estimate = 1.0;
    for (int i = 1; i <= m; ++i)
      estimate *= static_cast<double>(r + i) / static_cast<double>(i);
    estimate *= static_cast<double>(1ll << std::min(r, m));
    throw std::length_error("expansion too large: about " +
                            std::to_string(static_cast<long long>(estimate)) +
                            " interleavings at combined depth " + std::to_string(r + m));
  }

  MergeContext ctx{&form.upper.exponents, &form.lower.exponents, r, m, form.kind, {}};
  ctx.memo.assign(static_cast<std::size_t>((r + 1) * (m + 1)), std::nullopt);

  LinearCombo out;
  for (const auto& [seq, count] : ctx.at(0, 0))
    out.add_atom(Atom::mzv(MultiIndex(seq)), Rational(count));
  return out;
}

LinearCombo expand_star(const MultiIndex& idx) {
  if (idx.has_bars()) throw std::domain_error("expand_star: unsigned indices only");
  if (!idx.admissible()) throw std::domain_error("expand_star: not admissible");
  const int r = idx.depth();
  LinearCombo out;
  // each of the r-1 weak comparisons contracts to '=' or sharpens to '<'
  for (unsigned mask = 0; mask < (1u << (r - 1)); ++mask) {
    std::vector<int> seq;
    seq.push_back(idx.exponents[0]);
    for (int g = 0; g < r - 1; ++g) {
      if (mask & (1u << g))
        seq.back() += idx.exponents[static_cast<std::size_t>(g + 1)];
      else
        seq.push_back(idx.exponents[static_cast<std::size_t>(g + 1)]);
    }
    out.add_atom(Atom::mzv(MultiIndex(seq)), Rational(1));
  }
  return out;
}

namespace {

// W[j][v] = sum over weak chains l_j <= ... <= l_m in [v, hi] of the inverse
// power products; computed once per needed upper bound
class WeakChainTable {
 public:
  WeakChainTable(const std::vector<int>& beta, long long hi)
      : m_(static_cast<int>(beta.size())), hi_(hi) {
    table_.assign(static_cast<std::size_t>(m_ + 2),
                  std::vector<Rational>(static_cast<std::size_t>(hi + 2), Rational(0)));
    for (long long v = 1; v <= hi + 1; ++v)
      table_[static_cast<std::size_t>(m_ + 1)][static_cast<std::size_t>(v)] = Rational(1);
    for (int j = m_; j >= 1; --j) {
      for (long long v = hi; v >= 1; --v) {
        table_[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)] =
            table_[static_cast<std::size_t>(j)][static_cast<std::size_t>(v + 1)] +
            Rational::inv_pow(v, beta[static_cast<std::size_t>(j - 1)]) *
                table_[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(v)];
      }
    }
  }

  /// sum over chains with values in [lo, hi]
  Rational full(long long lo) const {
    if (m_ == 0) return Rational(1);
    if (lo > hi_) return Rational(0);
    return table_[1][static_cast<std::size_t>(lo)];
  }

 private:
  int m_;
  long long hi_;
  std::vector<std::vector<Rational>> table_;
};

}  // namespace

Rational brute_force(const GeneralForm& form, long long N) {
  if (auto why = form.invariant_violation(); !why.empty()) throw std::domain_error(why);
  if (N < 1 || N > 200) throw std::invalid_argument("brute_force: cutoff out of range");
  const int r = form.upper.depth();
  const auto& alpha = form.upper.exponents;

  // inverse powers per slot, shared across all chains
  std::vector<std::vector<Rational>> invpow(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) {
    auto& row = invpow[static_cast<std::size_t>(j)];
    row.reserve(static_cast<std::size_t>(N + 1));
    row.emplace_back(0);
    for (long long k = 1; k <= N; ++k)
      row.push_back(Rational::inv_pow(k, alpha[static_cast<std::size_t>(j)]));
  }

  std::map<long long, WeakChainTable> tables;
  auto inner = [&](long long k1, long long kr) -> Rational {
    long long lo = form.kind == FormKind::U ? 1 : k1;
    long long hi = form.kind == FormKind::L ? N : kr;
    auto it = tables.find(hi);
    if (it == tables.end())
      it = tables.emplace(hi, WeakChainTable(form.lower.exponents, hi)).first;
    return it->second.full(lo);
  };

  Rational total(0);
  std::vector<long long> chain(static_cast<std::size_t>(r), 0);
  std::function<void(int, long long, const Rational&)> rec = [&](int pos, long long prev,
                                                                 const Rational& prod) {
    if (pos == r) {
      total += prod * inner(chain[0], chain[static_cast<std::size_t>(r - 1)]);
      return;
    }
    for (long long k = prev + 1; k <= N - (r - 1 - pos); ++k) {
      chain[static_cast<std::size_t>(pos)] = k;
      rec(pos + 1, k,
          prod * invpow[static_cast<std::size_t>(pos)][static_cast<std::size_t>(k)]);
    }
  };
  rec(0, 0, Rational(1));
  return total;
}

LinearCombo zb_ones_expansion(const MultiIndex& upper, int m) {
  if (!upper.admissible() || upper.has_bars())
    throw std::domain_error("zb_ones_expansion: admissible unsigned upper index required");
  if (m < 0) throw std::invalid_argument("zb_ones_expansion: m must be >= 0");

  MultiIndex d = dual(upper);
  const int q1 = d.depth();
  std::vector<int> alpha = d.exponents;
  alpha.back() -= 1;  // write the dual as (alpha_1, ..., alpha_q, alpha_{q+1} + 1)

  LinearCombo out;
  WeakCompositions comps(m, q1);
  std::vector<int> dist;
  while (comps.next(dist)) {
    Rational coeff(1);
    std::vector<int> exps(static_cast<std::size_t>(q1));
    for (int j = 0; j < q1; ++j) {
      coeff *= Rational(BigInt::binomial(
          static_cast<unsigned long long>(alpha[static_cast<std::size_t>(j)] +
                                          dist[static_cast<std::size_t>(j)] - 1),
          static_cast<unsigned long long>(dist[static_cast<std::size_t>(j)])));
      exps[static_cast<std::size_t>(j)] =
          alpha[static_cast<std::size_t>(j)] + dist[static_cast<std::size_t>(j)];
    }
    exps.back() += 1;
    out.add_atom(Atom::mzv(MultiIndex(exps)), coeff);
  }
  return out;
}

LinearCombo zu_ones_expansion(const MultiIndex& upper, int m) {
  if (!upper.admissible() || upper.has_bars())
    throw std::domain_error("zu_ones_expansion: admissible unsigned upper index required");
  if (m < 0) throw std::invalid_argument("zu_ones_expansion: m must be >= 0");

  MultiIndex d = dual(upper);
  const int q = d.depth();

  LinearCombo out;
  WeakCompositions comps(m, q);
  std::vector<int> dist;
  while (comps.next(dist)) {
    Rational coeff(1);
    std::vector<int> exps(static_cast<std::size_t>(q));
    for (int j = 0; j < q; ++j) {
      coeff *= Rational(BigInt::binomial(
          static_cast<unsigned long long>(d.exponents[static_cast<std::size_t>(j)] +
                                          dist[static_cast<std::size_t>(j)] - 1),
          static_cast<unsigned long long>(dist[static_cast<std::size_t>(j)])));
      exps[static_cast<std::size_t>(j)] =
          d.exponents[static_cast<std::size_t>(j)] + dist[static_cast<std::size_t>(j)];
    }
    out.add_atom(Atom::mzv(MultiIndex(exps)), coeff);
  }
  return out;
}

Rational windowed_h(int m, long long lo, long long hi) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("windowed_h: bad window");
  if (m < 0) throw std::invalid_argument("windowed_h: m must be >= 0");
  WeakChainTable table(std::vector<int>(static_cast<std::size_t>(m), 1), hi);
  return table.full(lo);
}

Rational windowed_p(int m, long long lo, long long hi) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("windowed_p: bad window");
  Rational out(0);
  for (long long j = lo; j <= hi; ++j) out += Rational::inv_pow(j, m);
  return out;
}

Rational h_from_p(int m, long long lo, long long hi) {
  Rational out(0);
  partitions(m, [&](const Partition& lambda) {
    Rational term = Rational(BigInt(1), lambda.mu);
    for (int part : lambda.parts) term *= windowed_p(part, lo, hi);
    out += term;
  });
  return out;
}

Rational rational_combo_truncation(const LinearCombo& combo, long long N) {
  std::map<Atom, Rational> cache;
  auto atom_value = [&](const Atom& a) -> Rational {
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
    Rational v;
    switch (a.kind) {
      case AtomKind::Unit:
        v = Rational(1);
        break;
      case AtomKind::Zeta:
        v = chain_partial_sum<Rational>(MultiIndex({a.zeta_k}), ChainMode::Strict, N);
        break;
      case AtomKind::Mzv:
      case AtomKind::AltMzv:
        v = chain_partial_sum<Rational>(a.index, ChainMode::Strict, N);
        break;
      case AtomKind::Mzsv:
        v = chain_partial_sum<Rational>(a.index, ChainMode::Star, N);
        break;
      case AtomKind::Form:
        v = brute_force(a.form, N);
        break;
    }
    cache.emplace(a, v);
    return v;
  };

  Rational total(0);
  for (const auto& [term, coeff] : combo.terms()) {
    Rational prod = coeff;
    for (const Atom& a : term.factors) prod *= atom_value(a);
    total += prod;
  }
  return total;
}

std::string expansion_json(const LinearCombo& combo) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [term, coeff] : combo.terms()) {
    nlohmann::ordered_json entry;
    entry["atom"] = to_string(term);
    entry["numerator"] = coeff.num().to_string();
    entry["denominator"] = coeff.den().to_string();
    arr.push_back(entry);
  }
  return arr.dump(2);
}

}  // namespace mzv
