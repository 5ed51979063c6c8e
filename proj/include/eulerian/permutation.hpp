#pragma once

// One-line permutations of {1,...,n} and their statistics: ascents,
// inversions, parity, reflection, and the cyclic-shift operator (add one
// to every entry, wrapping the maximum) together with its inverse and
// its effect on the inversion count.
//
// Conventions: values and positions are 1-based at the API boundary,
// matching the one-line notation a_1 a_2 ... a_n.

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eulerian {

enum class Parity { Even, Odd };

// Which rewrite rule the shift operator applies: the maximal entry sits
// strictly inside the word (Interior), at the right end, or at the left
// end. n = 1 counts as NAtRightEnd.
enum class SigmaCase { Interior, NAtRightEnd, NAtLeftEnd };

class Permutation {
 public:
  /// Validates that entries form a bijection onto {1,...,n}; throws
  /// std::invalid_argument otherwise. All other operations rely on this.
  explicit Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = static_cast<int>(entries_.size());
    if (n < 1) throw std::invalid_argument("permutation must have length >= 1");
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : entries_) {
      if (v < 1 || v > n)
        throw std::invalid_argument("permutation entry " + std::to_string(v) + " out of range 1.." + std::to_string(n));
      if (seen[static_cast<size_t>(v)]++)
        throw std::invalid_argument("permutation entry " + std::to_string(v) + " repeated");
    }
  }

  static Permutation identity(int n) {
    if (n < 1) throw std::invalid_argument("identity permutation needs n >= 1");
    std::vector<int> e(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i)] = i + 1;
    return Permutation(std::move(e), unchecked_tag{});
  }

  /// Parses "1324" (single digits, n <= 9) or "1,3,2,4" (any n; mandatory
  /// for n >= 10). Throws std::invalid_argument on malformed input.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(entries_.size()); }

  /// Entry at 1-based position i.
  int at(int i) const {
    if (i < 1 || i > size()) throw std::out_of_range("position " + std::to_string(i) + " out of 1.." + std::to_string(size()));
    return entries_[static_cast<size_t>(i - 1)];
  }

  const std::vector<int>& entries() const { return entries_; }

  /// 1-based position of value v.
  int position_of(int v) const {
    for (int i = 0; i < size(); ++i)
      if (entries_[static_cast<size_t>(i)] == v) return i + 1;
    throw std::out_of_range("value " + std::to_string(v) + " not present");
  }

  /// "1324" for n <= 9, "1,3,2,4,..." otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct unchecked_tag {};
  Permutation(std::vector<int> entries, unchecked_tag) : entries_(std::move(entries)) {}

  std::vector<int> entries_;

  friend Permutation sigma(const Permutation&);
  friend Permutation sigma_inverse(const Permutation&);
  friend Permutation reflect(const Permutation&);
};

namespace detail {

inline int ascent_count_raw(const std::vector<int>& a) {
  int k = 0;
  for (size_t i = 0; i + 1 < a.size(); ++i)
    if (a[i] < a[i + 1]) ++k;
  return k;
}

// Definitional O(n^2) pair count; used as the independent audit.
inline long long inversion_count_pairs(const std::vector<int>& a) {
  long long inv = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] > a[j]) ++inv;
  return inv;
}

inline long long merge_count(std::vector<int>& a, std::vector<int>& buf, size_t lo, size_t hi) {
  if (hi - lo <= 1) return 0;
  const size_t mid = lo + (hi - lo) / 2;
  long long inv = merge_count(a, buf, lo, mid) + merge_count(a, buf, mid, hi);
  size_t l = lo, r = mid, o = lo;
  while (l < mid && r < hi) {
    if (a[r] < a[l]) {
      inv += static_cast<long long>(mid - l);
      buf[o++] = a[r++];
    } else {
      buf[o++] = a[l++];
    }
  }
  while (l < mid) buf[o++] = a[l++];
  while (r < hi) buf[o++] = a[r++];
  std::copy(buf.begin() + static_cast<long>(lo), buf.begin() + static_cast<long>(hi), a.begin() + static_cast<long>(lo));
  return inv;
}

inline long long inversion_count_raw(std::vector<int> a) {
  std::vector<int> buf(a.size());
  return merge_count(a, buf, 0, a.size());
}

}  // namespace detail

/// Number of positions i with a_i < a_{i+1}; 0 for n = 1.
inline int ascent_count(const Permutation& p) { return detail::ascent_count_raw(p.entries()); }

/// Number of pairs i < j with a_i > a_j, counted in O(n log n).
inline long long inversion_count(const Permutation& p) { return detail::inversion_count_raw(p.entries()); }

inline Parity parity(const Permutation& p) {
  return inversion_count(p) % 2 == 0 ? Parity::Even : Parity::Odd;
}

/// Reversal a_n ... a_2 a_1. An involution; complements the ascent count
/// to n-1-k and the inversion count to n(n-1)/2 - inv.
inline Permutation reflect(const Permutation& p) {
  std::vector<int> e(p.entries().rbegin(), p.entries().rend());
  return Permutation(std::move(e), Permutation::unchecked_tag{});
}

inline SigmaCase sigma_case(const Permutation& p) {
  const int n = p.size();
  if (n == 1 || p.entries().back() == n) return SigmaCase::NAtRightEnd;
  if (p.entries().front() == n) return SigmaCase::NAtLeftEnd;
  return SigmaCase::Interior;
}

/// The shift operator: add one to every entry, replacing n+1 by 1; if the
/// maximal entry n is at an end it is dropped and 1 is placed at the
/// opposite end. Preserves the ascent count and the length.
inline Permutation sigma(const Permutation& p) {
  const int n = p.size();
  const auto& a = p.entries();
  std::vector<int> b;
  b.reserve(static_cast<size_t>(n));
  switch (sigma_case(p)) {
    case SigmaCase::NAtRightEnd:
      b.push_back(1);
      for (size_t i = 0; i + 1 < a.size(); ++i) b.push_back(a[i] + 1);
      break;
    case SigmaCase::NAtLeftEnd:
      for (size_t i = 1; i < a.size(); ++i) b.push_back(a[i] + 1);
      b.push_back(1);
      break;
    case SigmaCase::Interior:
      for (int v : a) b.push_back(v == n ? 1 : v + 1);
      break;
  }
  return Permutation(std::move(b), Permutation::unchecked_tag{});
}

/// Inverse of sigma. The position of the entry 1 identifies which rule
/// produced p: first position inverts the right-end rule, last position
/// the left-end rule, interior the wrap rule (subtract one, 1 -> n).
inline Permutation sigma_inverse(const Permutation& p) {
  const int n = p.size();
  if (n == 1) return p;
  const auto& b = p.entries();
  std::vector<int> a;
  a.reserve(static_cast<size_t>(n));
  if (b.front() == 1) {
    for (size_t i = 1; i < b.size(); ++i) a.push_back(b[i] - 1);
    a.push_back(n);
  } else if (b.back() == 1) {
    a.push_back(n);
    for (size_t i = 0; i + 1 < b.size(); ++i) a.push_back(b[i] - 1);
  } else {
    for (int v : b) a.push_back(v == 1 ? n : v - 1);
  }
  return Permutation(std::move(a), Permutation::unchecked_tag{});
}

/// inv(sigma(p)) - inv(p), computed without applying sigma: zero when the
/// maximal entry is at an end, and 2i - (n+1) when it sits at interior
/// position i (the i-1 new inversions minus the n-i vanished ones).
inline long long inversion_delta(const Permutation& p) {
  if (sigma_case(p) != SigmaCase::Interior) return 0;
  const int n = p.size();
  const int i = p.position_of(n);
  return 2LL * i - (n + 1);
}

inline std::string Permutation::to_string() const {
  std::string s;
  const bool digits = size() <= 9;
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (!digits && i > 0) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s;
}

inline Permutation Permutation::parse(std::string_view text) {
  std::vector<int> e;
  if (text.find(',') != std::string_view::npos) {
    size_t pos = 0;
    while (pos <= text.size()) {
      const size_t next = text.find(',', pos);
      const std::string_view tok = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
      if (tok.empty()) throw std::invalid_argument("empty entry in permutation literal");
      int v = 0;
      for (char c : tok) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad character in permutation literal: '" + std::string(1, c) + "'");
        v = v * 10 + (c - '0');
        if (v > 1'000'000) throw std::invalid_argument("permutation entry too large");
      }
      e.push_back(v);
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
  } else {
    if (text.empty()) throw std::invalid_argument("empty permutation literal");
    for (char c : text) {
      if (c < '1' || c > '9')
        throw std::invalid_argument("digit form allows entries 1..9 only; use the comma form for n >= 10");
      e.push_back(c - '0');
    }
  }
  return Permutation(std::move(e));
}

}  // namespace eulerian
