#include "mzv/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "mzv/forms.hpp"

namespace mzv {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Kahan {
  double sum = 0.0;
  double comp = 0.0;
  bool compensated = true;

  void add(double x) {
    if (!compensated) {
      sum += x;
      return;
    }
    double y = x - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

double ipow_inv(long long n, int a) {
  double inv = 1.0 / static_cast<double>(n);
  double out = 1.0;
  while (a) {
    if (a & 1) out *= inv;
    inv *= inv;
    a >>= 1;
  }
  return out;
}

double factorial_d(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// exact closed form of int_N^inf x^-a (1+ln x)^q dx, a >= 2
double log_power_integral(int a, int q, double N) {
  double L = 1.0 + std::log(N);
  double falling = 1.0;  // q (q-1) ... (q-i+1)
  double invam1 = 1.0 / (a - 1.0);
  double scale = invam1;
  double sum = 0.0;
  for (int i = 0; i <= q; ++i) {
    sum += falling * scale * std::pow(L, q - i);
    falling *= (q - i);
    scale *= invam1;
  }
  return std::pow(N, 1.0 - a) * sum;
}

// sum_{k>N} k^-a (1+ln k)^q  <=  integral + peak correction while the
// integrand still grows at N (it peaks at ln x = q/a - 1)
double log_power_tail(int a, int q, double N) {
  double bound = log_power_integral(a, q, N);
  if (q > 0 && std::log(N) < static_cast<double>(q) / a - 1.0) {
    double peak = std::exp(static_cast<double>(a - q)) *
                  std::pow(static_cast<double>(q) / a, q);
    bound += peak;
  }
  return bound;
}

}  // namespace

DivergentAtom::DivergentAtom(const Atom& a)
    : std::domain_error("divergent atom: " + mzv::to_string(a)), atom_(a) {}

// ---------------------------------------------------------------------------
// Riemann zeta, Euler-Maclaurin
// ---------------------------------------------------------------------------

EvalResult eval_riemann(int k) {
  if (k < 2) throw DivergentAtom(Atom::riemann(k));

  // B_2 .. B_14 over (2i)!
  static const double kBernOverFact[] = {
      1.0 / 6 / 2,           -1.0 / 30 / 24,         1.0 / 42 / 720,
      -1.0 / 30 / 40320,     5.0 / 66 / 3628800,     -691.0 / 2730 / 479001600,
      7.0 / 6 / 87178291200.0,
  };

  const long long N0 = 32;
  Kahan acc;
  for (long long n = 1; n <= N0; ++n) acc.add(ipow_inv(n, k));

  const double a = static_cast<double>(N0 + 1);
  if (k >= 50) {
    // the direct part already carries everything; the whole tail is below
    // the geometric bound 2 a^{1-k}
    double remainder = 2.0 * std::pow(a, 1.0 - k);
    return EvalResult{acc.sum, remainder + 8.0 * kEps, N0, N0};
  }

  // tail from a = N0 + 1:
  //   a^{1-k}/(k-1) + a^{-k}/2 + sum_i B_{2i}/(2i)! (k)_{2i-1} a^{-k-2i+1}
  // x^{-k} is completely monotone, so the error after the B_12 correction
  // has at most the magnitude of the B_14 term (terms decrease up to there
  // for every k this branch sees)
  double apow = std::pow(a, 1.0 - k);  // a^{1-k}
  acc.add(apow / (k - 1));
  acc.add(apow / a / 2.0);
  double rising = static_cast<double>(k);  // (k)_{2i-1}
  double apow_odd = apow / a / a;          // a^{-k-1}
  for (int i = 1; i <= 6; ++i) {
    acc.add(kBernOverFact[i - 1] * rising * apow_odd);
    rising *= (k + 2 * i - 1);
    rising *= (k + 2 * i);
    apow_odd /= a * a;
  }
  double remainder = std::abs(kBernOverFact[6] * rising * apow_odd);
  double rounding = 64.0 * kEps * acc.sum;
  return EvalResult{acc.sum, remainder + rounding, N0, N0 + 6};
}

// ---------------------------------------------------------------------------
// truncation bounds
// ---------------------------------------------------------------------------

double tail_bound(const MultiIndex& idx, ChainMode mode, long long N) {
  const int r = idx.depth();
  if (r == 0) return 0.0;
  const int a = idx.exponents.back();
  const bool signed_last = idx.bars.back();
  if (a < 2) throw DivergentAtom(mode == ChainMode::Star ? Atom::mzsv(idx) : Atom::alt(idx));
  const int q = r - 1;
  const double strict_div = mode == ChainMode::Strict ? factorial_d(q) : 1.0;
  const double Nd = static_cast<double>(N);

  if (!signed_last) {
    return log_power_tail(a, q, Nd) / strict_div;
  }
  // alternating outer sum: pair consecutive terms
  double bound = a * log_power_tail(a + 1, q, Nd) / strict_div;
  if (q >= 1) {
    double div2 = mode == ChainMode::Strict ? factorial_d(q - 1) : 1.0;
    bound += log_power_tail(a + 1, q - 1, Nd) / div2;
  }
  return bound;
}

// ---------------------------------------------------------------------------
// direct summation engine
// ---------------------------------------------------------------------------

namespace {

long long pick_cutoff(const MultiIndex& idx, ChainMode mode, const EvalConfig& cfg) {
  long long lo = 4;
  if (tail_bound(idx, mode, cfg.max_cutoff) > cfg.target_eps) return cfg.max_cutoff;
  long long hi = lo;
  while (tail_bound(idx, mode, hi) > cfg.target_eps) {
    hi = std::min(hi * 2, cfg.max_cutoff);
  }
  while (lo < hi) {  // first N with bound <= eps (bound decreases in N)
    long long mid = lo + (hi - lo) / 2;
    if (tail_bound(idx, mode, mid) <= cfg.target_eps)
      hi = mid;
    else
      lo = mid + 1;
  }
  return hi;
}

}  // namespace

EvalResult eval_mzv(const MultiIndex& idx, ChainMode mode, const EvalConfig& cfg) {
  const int r = idx.depth();
  if (r == 0) return EvalResult{1.0, 0.0, 0, 0};
  if (!idx.admissible()) {
    throw DivergentAtom(mode == ChainMode::Star ? Atom::mzsv(idx)
                        : idx.has_bars()        ? Atom::alt(idx)
                                                : Atom::mzv(idx));
  }

  const long long N = pick_cutoff(idx, mode, cfg);
  const bool comp = cfg.summation == Summation::Compensated;
  const auto& a = idx.exponents;
  const auto& bars = idx.bars;

  Kahan value;
  value.compensated = comp;
  std::vector<Kahan> running(static_cast<std::size_t>(r > 1 ? r - 1 : 0));
  for (auto& ks : running) ks.compensated = comp;
  // magnitude twin: same recursion on |summands|, feeds the rounding allowance
  double value_abs = 0.0;
  std::vector<double> running_abs(running.size(), 0.0);

  for (long long k = 1; k <= N; ++k) {
    const double sign = (k & 1) ? -1.0 : 1.0;
    if (r == 1) {
      double f = ipow_inv(k, a[0]);
      value.add(bars[0] ? sign * f : f);
      value_abs += f;
      continue;
    }
    if (mode == ChainMode::Strict) {
      double ftop = ipow_inv(k, a[static_cast<std::size_t>(r - 1)]);
      double stop = bars[static_cast<std::size_t>(r - 1)] ? sign * ftop : ftop;
      value.add(stop * running[static_cast<std::size_t>(r - 2)].sum);
      value_abs += ftop * running_abs[static_cast<std::size_t>(r - 2)];
      for (int j = r - 2; j >= 1; --j) {
        double f = ipow_inv(k, a[static_cast<std::size_t>(j)]);
        double s = bars[static_cast<std::size_t>(j)] ? sign * f : f;
        running[static_cast<std::size_t>(j)].add(s *
                                                 running[static_cast<std::size_t>(j - 1)].sum);
        running_abs[static_cast<std::size_t>(j)] +=
            f * running_abs[static_cast<std::size_t>(j - 1)];
      }
      double f0 = ipow_inv(k, a[0]);
      running[0].add(bars[0] ? sign * f0 : f0);
      running_abs[0] += f0;
    } else {
      double f0 = ipow_inv(k, a[0]);
      running[0].add(bars[0] ? sign * f0 : f0);
      running_abs[0] += f0;
      for (int j = 1; j <= r - 2; ++j) {
        double f = ipow_inv(k, a[static_cast<std::size_t>(j)]);
        double s = bars[static_cast<std::size_t>(j)] ? sign * f : f;
        running[static_cast<std::size_t>(j)].add(s *
                                                 running[static_cast<std::size_t>(j - 1)].sum);
        running_abs[static_cast<std::size_t>(j)] +=
            f * running_abs[static_cast<std::size_t>(j - 1)];
      }
      double ftop = ipow_inv(k, a[static_cast<std::size_t>(r - 1)]);
      double stop = bars[static_cast<std::size_t>(r - 1)] ? sign * ftop : ftop;
      value.add(stop * running[static_cast<std::size_t>(r - 2)].sum);
      value_abs += ftop * running_abs[static_cast<std::size_t>(r - 2)];
    }
  }

  const double ops = static_cast<double>(N) * (3.0 * r + 16.0);
  double rounding;
  if (comp) {
    // compensated sums keep the constant small; only the nesting depth and
    // the power evaluations contribute first order
    rounding = kEps * value_abs * (10.0 * r + 20.0) + 2.0 * ops * kEps * kEps * value_abs;
  } else {
    rounding = ops * kEps * value_abs;
  }
  return EvalResult{value.sum, tail_bound(idx, mode, N) + rounding, N,
                    static_cast<long long>(N) * r};
}

// ---------------------------------------------------------------------------
// split at one half: geometric-series route for unsigned strict values
// ---------------------------------------------------------------------------

namespace {

struct Word {
  uint64_t bits = 0;  // bit i = letter i, bottom-to-top; set = the 1/(1-t) form
  int len = 0;

  bool bit(int i) const { return (bits >> i) & 1u; }
  bool operator<(const Word& w) const { return std::tie(len, bits) < std::tie(w.len, w.bits); }
};

Word word_of(const MultiIndex& idx) {
  if (idx.weight() > 62)
    throw std::length_error("split route: weight beyond the 62-letter word encoding");
  Word w;
  for (int e : idx.exponents) {
    w.bits |= 1ull << w.len;
    w.len += e;
  }
  return w;
}

Word subword(const Word& w, int from, int to) {
  Word out;
  out.len = to - from;
  out.bits = (w.bits >> from) & ((out.len >= 64 ? ~0ull : (1ull << out.len) - 1));
  return out;
}

// reverse and complement: the upper part of a split integral, mapped back to
// the lower half by t -> 1 - t
Word reverse_complement(const Word& w) {
  Word out;
  out.len = w.len;
  for (int i = 0; i < w.len; ++i)
    if (!w.bit(w.len - 1 - i)) out.bits |= 1ull << i;
  return out;
}

std::vector<int> word_composition(const Word& w) {
  std::vector<int> s;
  for (int i = 0; i < w.len; ++i) {
    if (w.bit(i))
      s.push_back(1);
    else
      ++s.back();
  }
  return s;
}

constexpr long long kLiCutoff = 320;

// value and proven bound of Li_{s_1,...,s_q}(1/2):
//   sum over k_1 < ... < k_q of 2^{-k_q} prod k_i^{-s_i}
// Terms at top value k are at most C(k-1, q-1) 2^{-k}, so the tail past
// K = 320 is below 2 C(K, q-1) 2^{-K}: vanishing for every weight in reach.
std::pair<double, double> li_half(const Word& w) {
  if (w.len == 0) return {1.0, 0.0};
  static std::map<Word, std::pair<double, double>> cache;
  static std::mutex mutex;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
  }

  std::vector<int> s = word_composition(w);
  const int q = static_cast<int>(s.size());
  Kahan value;
  std::vector<Kahan> running(static_cast<std::size_t>(q > 1 ? q - 1 : 0));
  double half_pow = 1.0;
  for (long long k = 1; k <= kLiCutoff; ++k) {
    half_pow *= 0.5;
    if (q == 1) {
      value.add(half_pow * ipow_inv(k, s[0]));
      continue;
    }
    value.add(half_pow * ipow_inv(k, s[static_cast<std::size_t>(q - 1)]) *
              running[static_cast<std::size_t>(q - 2)].sum);
    for (int j = q - 2; j >= 1; --j)
      running[static_cast<std::size_t>(j)].add(
          ipow_inv(k, s[static_cast<std::size_t>(j)]) *
          running[static_cast<std::size_t>(j - 1)].sum);
    running[0].add(ipow_inv(k, s[0]));
  }

  double log_binom = std::lgamma(static_cast<double>(kLiCutoff + 1)) -
                     std::lgamma(static_cast<double>(q)) -
                     std::lgamma(static_cast<double>(kLiCutoff + 2 - q));
  double tail = 2.0 * std::exp(log_binom - kLiCutoff * std::log(2.0));
  double rounding = kEps * value.sum * (4.0 * q + 8.0);
  auto out = std::make_pair(value.sum, tail + rounding);
  {
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(w, out);
  }
  return out;
}

// sum over all splits of the word at one half; each factor converges
// geometrically
EvalResult eval_split_at_half(const MultiIndex& idx) {
  const Word w = word_of(idx);
  Kahan value;
  double bound = 0.0;
  double mag = 0.0;
  for (int j = 0; j <= w.len; ++j) {
    auto [vl, bl] = li_half(subword(w, 0, j));
    auto [vu, bu] = li_half(reverse_complement(subword(w, j, w.len)));
    value.add(vl * vu);
    mag += std::abs(vl * vu);
    bound += bl * (std::abs(vu) + bu) + std::abs(vl) * bu;
  }
  bound += kEps * mag * (3.0 * (w.len + 1) + 4.0);
  return EvalResult{value.sum, bound, kLiCutoff,
                    static_cast<long long>(w.len + 1) * kLiCutoff};
}

// ---------------------------------------------------------------------------
// atom routing and memoization
// ---------------------------------------------------------------------------

struct MemoKey {
  Atom atom;
  double eps;
  long long cap;
  int mode;

  bool operator<(const MemoKey& k) const {
    if (auto c = atom <=> k.atom; c != 0) return c < 0;
    return std::tie(eps, cap, mode) < std::tie(k.eps, k.cap, k.mode);
  }
};

std::map<MemoKey, EvalResult>& memo_table() {
  static std::map<MemoKey, EvalResult> table;
  return table;
}
std::mutex& memo_mutex() {
  static std::mutex m;
  return m;
}

EvalResult eval_atom_fresh(const Atom& atom, const EvalConfig& cfg) {
  switch (atom.kind) {
    case AtomKind::Unit:
      return EvalResult{1.0, 0.0, 0, 0};
    case AtomKind::Zeta:
      if (atom.zeta_k < 2) throw DivergentAtom(atom);
      return eval_riemann(atom.zeta_k);
    case AtomKind::Mzv: {
      if (!atom.index.admissible()) throw DivergentAtom(atom);
      if (atom.index.depth() == 1) return eval_riemann(atom.index.exponents[0]);
      return eval_split_at_half(atom.index);
    }
    case AtomKind::AltMzv: {
      if (!atom.index.admissible()) throw DivergentAtom(atom);
      if (!atom.index.has_bars()) return eval_atom(Atom::mzv(atom.index), cfg);
      return eval_mzv(atom.index, ChainMode::Strict, cfg);
    }
    case AtomKind::Mzsv: {
      if (!atom.index.admissible()) throw DivergentAtom(atom);
      LinearCombo pieces = expand_star(atom.index);
      EvalResult out;
      Kahan value;
      double mag = 0.0;
      for (const auto& [term, coeff] : pieces.terms()) {
        EvalResult piece = eval_atom(term.factors.empty() ? Atom::unit() : term.factors[0], cfg);
        double c = coeff.to_double();
        value.add(c * piece.value);
        mag += std::abs(c * piece.value);
        out.error_bound += std::abs(c) * piece.error_bound;
        out.cutoff = std::max(out.cutoff, piece.cutoff);
        out.terms += piece.terms;
      }
      out.error_bound += kEps * mag * (pieces.size() + 4.0);
      out.value = value.sum;
      return out;
    }
    case AtomKind::Form: {
      if (!atom.form.invariant_violation().empty()) throw DivergentAtom(atom);
      LinearCombo pieces = expand(atom.form);
      return eval_combo(pieces, cfg);
    }
  }
  throw std::logic_error("eval_atom: unhandled atom kind");
}

}  // namespace

EvalResult eval_atom(const Atom& atom_in, const EvalConfig& cfg) {
  Atom atom = canonical(atom_in);
  MemoKey key{atom, cfg.target_eps, cfg.max_cutoff, static_cast<int>(cfg.summation)};
  {
    std::lock_guard<std::mutex> lock(memo_mutex());
    auto it = memo_table().find(key);
    if (it != memo_table().end()) return it->second;
  }
  EvalResult out = eval_atom_fresh(atom, cfg);
  {
    std::lock_guard<std::mutex> lock(memo_mutex());
    memo_table().emplace(key, out);  // idempotent: recomputation yields the same value
  }
  return out;
}

EvalResult eval_combo(const LinearCombo& combo, const EvalConfig& cfg) {
  // spread the requested accuracy across the terms before evaluating
  double weight = 0.0;
  for (const auto& [term, coeff] : combo.terms())
    weight += std::abs(coeff.to_double()) * std::max<std::size_t>(1, term.factors.size());
  EvalConfig atom_cfg = cfg;
  atom_cfg.target_eps = cfg.target_eps / (8.0 * std::max(1.0, weight));

  EvalResult out;
  Kahan value;
  double mag = 0.0;
  for (const auto& [term, coeff] : combo.terms()) {
    double prod = 1.0;
    double prod_bound = 0.0;  // first-order product propagation
    for (const Atom& atom : term.factors) {
      EvalResult f = eval_atom(atom, atom_cfg);
      prod_bound = prod_bound * (std::abs(f.value) + f.error_bound) +
                   std::abs(prod) * f.error_bound;
      prod *= f.value;
      out.cutoff = std::max(out.cutoff, f.cutoff);
      out.terms += f.terms;
    }
    double c = coeff.to_double();
    value.add(c * prod);
    mag += std::abs(c * prod);
    out.error_bound += std::abs(c) * prod_bound;
  }
  out.error_bound += kEps * mag * (2.0 * combo.size() + 6.0);
  out.value = value.sum;
  return out;
}

void clear_eval_cache() {
  std::lock_guard<std::mutex> lock(memo_mutex());
  memo_table().clear();
}

}  // namespace mzv
