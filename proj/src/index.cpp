#include "mzv/index.hpp"

#include <algorithm>
#include <stdexcept>

namespace mzv {

MultiIndex::MultiIndex(std::vector<int> exps)
    : exponents(std::move(exps)), bars(exponents.size(), false) {
  for (int e : exponents)
    if (e < 1) throw std::invalid_argument("MultiIndex: exponents must be >= 1");
}

MultiIndex::MultiIndex(std::vector<int> exps, std::vector<bool> marks)
    : exponents(std::move(exps)), bars(std::move(marks)) {
  if (bars.size() != exponents.size())
    throw std::invalid_argument("MultiIndex: marks length mismatch");
  for (int e : exponents)
    if (e < 1) throw std::invalid_argument("MultiIndex: exponents must be >= 1");
}

int MultiIndex::weight() const {
  int w = 0;
  for (int e : exponents) w += e;
  return w;
}

int MultiIndex::height() const {
  int h = 0;
  for (int e : exponents) h += e > 1;
  return h;
}

bool MultiIndex::has_bars() const {
  return std::find(bars.begin(), bars.end(), true) != bars.end();
}

MultiIndex MultiIndex::reversed() const {
  MultiIndex out = *this;
  std::reverse(out.exponents.begin(), out.exponents.end());
  std::reverse(out.bars.begin(), out.bars.end());
  return out;
}

MultiIndex MultiIndex::slice(int from, int to) const {
  MultiIndex out;
  out.exponents.assign(exponents.begin() + from, exponents.begin() + to);
  out.bars.assign(bars.begin() + from, bars.begin() + to);
  return out;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.exponents <=> b.exponents; c != 0) return c;
  return a.bars <=> b.bars;
}

MultiIndex ones(int m) { return MultiIndex(std::vector<int>(m, 1)); }

MultiIndex repeat(int exponent, int m) {
  return MultiIndex(std::vector<int>(m, exponent));
}

MultiIndex concat(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex out = a;
  out.exponents.insert(out.exponents.end(), b.exponents.begin(), b.exponents.end());
  out.bars.insert(out.bars.end(), b.bars.begin(), b.bars.end());
  return out;
}

MultiIndex prepend(int exponent, const MultiIndex& rest) {
  MultiIndex out;
  out.exponents.reserve(rest.depth() + 1);
  out.exponents.push_back(exponent);
  out.exponents.insert(out.exponents.end(), rest.exponents.begin(), rest.exponents.end());
  out.bars.push_back(false);
  out.bars.insert(out.bars.end(), rest.bars.begin(), rest.bars.end());
  return out;
}

MultiIndex append(const MultiIndex& rest, int exponent) {
  MultiIndex out = rest;
  out.exponents.push_back(exponent);
  out.bars.push_back(false);
  return out;
}

MultiIndex dual(const MultiIndex& idx) {
  if (!idx.admissible()) throw std::domain_error("dual: not admissible");
  if (idx.has_bars()) throw std::domain_error("dual: duality undefined for alternating indices");

  // walk the (a_i, b_i) block decomposition
  std::vector<std::pair<int, int>> blocks;
  int run_ones = 0;
  for (int e : idx.exponents) {
    if (e == 1) {
      ++run_ones;
    } else {
      blocks.emplace_back(run_ones + 1, e - 1);  // a_i = ones + 1, b_i = e - 1
      run_ones = 0;
    }
  }
  MultiIndex out;
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    for (int i = 0; i < it->second - 1; ++i) out.exponents.push_back(1);
    out.exponents.push_back(it->first + 1);
  }
  out.bars.assign(out.exponents.size(), false);
  return out;
}

std::vector<bool> word_encode(const MultiIndex& idx) {
  if (!idx.admissible()) throw std::domain_error("word_encode: not admissible");
  if (idx.has_bars()) throw std::domain_error("word_encode: unsigned indices only");
  std::vector<bool> w;
  w.reserve(idx.weight());
  for (int e : idx.exponents) {
    w.push_back(true);
    for (int i = 1; i < e; ++i) w.push_back(false);
  }
  return w;
}

MultiIndex word_decode(const std::vector<bool>& word) {
  if (word.empty() || !word.front() || word.back())
    throw std::domain_error("word_decode: word must start with 1 and end with 0");
  MultiIndex out;
  for (bool bit : word) {
    if (bit)
      out.exponents.push_back(1);
    else
      ++out.exponents.back();
  }
  out.bars.assign(out.exponents.size(), false);
  return out;
}

bool Compositions::next(std::vector<int>& out) {
  if (k_ < r_ || r_ < 1) return false;
  if (!started_) {
    started_ = true;
    // lexicographically first is (1,...,1,k-r+1)
    cur_.assign(r_, 1);
    cur_.back() = k_ - (r_ - 1);
    out = cur_;
    return true;
  }
  // find rightmost position (not last) that can be incremented by stealing
  // from the tail
  for (int i = r_ - 2; i >= 0; --i) {
    int tail = 0;
    for (int j = i + 1; j < r_; ++j) tail += cur_[j];
    if (tail > r_ - 1 - i) {  // room to push one unit into position i
      ++cur_[i];
      int rest = tail - 1;
      for (int j = i + 1; j < r_ - 1; ++j) {
        cur_[j] = 1;
        rest -= 1;
      }
      cur_[r_ - 1] = rest;
      out = cur_;
      return true;
    }
  }
  return false;
}

void Compositions::for_each(const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> c;
  while (next(c)) fn(c);
}

bool WeakCompositions::next(std::vector<int>& out) {
  if (q_ < 1) {
    if (m_ == 0 && !started_) {
      started_ = true;
      out.clear();
      return true;
    }
    return false;
  }
  if (!started_) {
    started_ = true;
    cur_.assign(q_, 0);
    cur_.back() = m_;
    out = cur_;
    return true;
  }
  for (int i = q_ - 2; i >= 0; --i) {
    int tail = 0;
    for (int j = i + 1; j < q_; ++j) tail += cur_[j];
    if (tail > 0) {
      ++cur_[i];
      int rest = tail - 1;
      for (int j = i + 1; j < q_ - 1; ++j) cur_[j] = 0;
      cur_[q_ - 1] = rest;
      out = cur_;
      return true;
    }
  }
  return false;
}

void WeakCompositions::for_each(const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> c;
  while (next(c)) fn(c);
}

void admissible_by_weight_depth(int k, int r,
                                const std::function<void(const MultiIndex&)>& fn) {
  Compositions gen(k, r);
  std::vector<int> c;
  while (gen.next(c)) {
    if (c.back() >= 2) fn(MultiIndex(c));
  }
}

void admissible_by_weight_height(int k, int s,
                                 const std::function<void(const MultiIndex&)>& fn) {
  for (int r = 1; r < k; ++r) {
    Compositions gen(k, r);
    std::vector<int> c;
    while (gen.next(c)) {
      if (c.back() < 2) continue;
      int h = 0;
      for (int e : c) h += e > 1;
      if (h == s) fn(MultiIndex(c));
    }
  }
}

void admissible_by_weight(int k, const std::function<void(const MultiIndex&)>& fn) {
  for (int r = 1; r < k; ++r) admissible_by_weight_depth(k, r, fn);
}

void partitions(int n, const std::function<void(const Partition&)>& fn) {
  std::vector<int> parts;
  // descending lexicographic enumeration
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      Partition p;
      p.parts = parts;
      p.mu = BigInt(1);
      int i = 0;
      int count = static_cast<int>(parts.size());
      while (i < count) {
        int j = i;
        while (j < count && parts[j] == parts[i]) ++j;
        int mult = j - i;
        p.mu *= BigInt::pow(BigInt(parts[i]), static_cast<unsigned>(mult));
        p.mu *= BigInt::factorial(static_cast<unsigned>(mult));
        i = j;
      }
      fn(p);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      parts.push_back(part);
      rec(remaining - part, part);
      parts.pop_back();
    }
  };
  if (n < 0) return;
  rec(n, n == 0 ? 1 : n);
}

MultiIndex parse_index(const std::string& text) {
  MultiIndex out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto parse_int = [&]() -> int {
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == start) throw std::invalid_argument("index syntax: expected integer at position " +
                                                std::to_string(start));
    long long v = std::stoll(text.substr(start, i - start));
    if (v < 1 || v > 1000000) throw std::invalid_argument("index syntax: exponent out of range");
    return static_cast<int>(v);
  };

  skip_ws();
  if (i >= text.size()) return out;  // empty index
  while (true) {
    skip_ws();
    bool bar = false;
    if (text.compare(i, 3, "bar") == 0) {
      bar = true;
      i += 3;
    }
    skip_ws();
    if (i < text.size() && text[i] == '{') {
      ++i;
      int e = parse_int();
      skip_ws();
      if (i >= text.size() || text[i] != '}')
        throw std::invalid_argument("index syntax: expected '}' at position " + std::to_string(i));
      ++i;
      skip_ws();
      if (i >= text.size() || text[i] != '^')
        throw std::invalid_argument("index syntax: expected '^' at position " + std::to_string(i));
      ++i;
      int m = 0;
      {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == start)
          throw std::invalid_argument("index syntax: expected repetition count at position " +
                                      std::to_string(start));
        m = static_cast<int>(std::stoll(text.substr(start, i - start)));
      }
      if (bar)
        throw std::invalid_argument("index syntax: bar applies to single entries, not blocks");
      for (int j = 0; j < m; ++j) {
        out.exponents.push_back(e);
        out.bars.push_back(false);
      }
    } else {
      int e = parse_int();
      out.exponents.push_back(e);
      out.bars.push_back(bar);
    }
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != ',')
      throw std::invalid_argument("index syntax: expected ',' at position " + std::to_string(i));
    ++i;
  }
  return out;
}

std::string to_string(const MultiIndex& idx) {
  std::string out;
  for (int i = 0; i < idx.depth(); ++i) {
    if (i) out += ",";
    if (idx.bars[i]) out += "bar";
    out += std::to_string(idx.exponents[i]);
  }
  return out;
}

}  // namespace mzv
