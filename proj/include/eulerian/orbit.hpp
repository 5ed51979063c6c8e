#pragma once

// Orbits of permutations under the shift operator: periods, full orbit
// listings, canonical representatives, the divisor-indexed orbit census
// for odd n, and the arithmetic-progression permutations with their
// parity flag.

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulerian/check.hpp"
#include "eulerian/numtheory.hpp"
#include "eulerian/permutation.hpp"

namespace eulerian {

// Sign class of a permutation with n >= 2: EMinus when a_1 < a_n, EPlus
// when a_1 > a_n (the ends are always distinct).
enum class SignClass { EMinus, EPlus };

inline SignClass sign_class(const Permutation& p) {
  if (p.size() < 2) throw std::invalid_argument("sign class undefined for n = 1");
  return p.entries().front() < p.entries().back() ? SignClass::EMinus : SignClass::EPlus;
}

/// Canonical permutations are orbit representatives: 1 a_2 ... a_n in the
/// minus class, a_2 ... a_n 1 in the plus class. Requires n >= 2.
inline bool is_canonical(const Permutation& p) {
  if (p.size() < 2) throw std::invalid_argument("canonical form undefined for n = 1");
  return p.entries().front() == 1 || p.entries().back() == 1;
}

namespace detail {
// Period search is capped at n^2: the period divisor law bounds every
// period by n*max(n-k, k+1) <= n^2, so exceeding the cap means the shift
// operator itself is broken.
inline long long period_cap(int n) { return static_cast<long long>(n) * n; }

[[noreturn]] inline void period_cap_exceeded(const Permutation& p) {
  throw std::logic_error("period of " + p.to_string() + " exceeds the n^2 cap; shift operator is inconsistent");
}
}  // namespace detail

/// Smallest l >= 1 with sigma^l(p) = p.
inline int period(const Permutation& p) {
  const long long cap = detail::period_cap(p.size());
  Permutation q = sigma(p);
  long long steps = 1;
  while (!(q == p)) {
    if (++steps > cap) detail::period_cap_exceeded(p);
    q = sigma(q);
  }
  return static_cast<int>(steps);
}

struct OrbitRecord {
  Permutation base;
  int period = 0;
  std::vector<Permutation> members;            // sigma p, sigma^2 p, ..., sigma^period p = p
  std::vector<Permutation> canonical_members;  // the canonical ones among members, in orbit order
};

inline OrbitRecord orbit(const Permutation& p) {
  OrbitRecord rec{p, 0, {}, {}};
  const long long cap = detail::period_cap(p.size());
  Permutation q = sigma(p);
  while (true) {
    rec.members.push_back(q);
    if (p.size() >= 2 && is_canonical(q)) rec.canonical_members.push_back(q);
    if (q == p) break;
    if (static_cast<long long>(rec.members.size()) >= cap) detail::period_cap_exceeded(p);
    q = sigma(q);
  }
  rec.period = static_cast<int>(rec.members.size());
  return rec;
}

/// Orbit counts for fixed odd n and ascent count k, keyed by the divisor
/// d of n: an orbit in the minus class has length d*(n-k), in the plus
/// class d*(k+1). Split by inversion parity (even/odd), which the shift
/// operator preserves when n is odd. Externally the four maps are also
/// known as alpha (even minus), beta (even plus), gamma (odd minus) and
/// delta (odd plus).
struct OrbitCensus {
  int n = 0;
  int k = 0;
  std::map<long long, long long> even_minus;  // "alpha"
  std::map<long long, long long> even_plus;   // "beta"
  std::map<long long, long long> odd_minus;   // "gamma"
  std::map<long long, long long> odd_plus;    // "delta"
};

inline constexpr int kDefaultCensusCap = 9;

namespace detail {

// Walks the orbit of a canonical start. Returns the period if start is
// the lexicographically smallest canonical member (the owner under the
// dedup rule), otherwise -1. Ownership by minimal member counts every
// orbit exactly once, from any work partition.
inline int orbit_period_if_owner(const Permutation& start) {
  const long long cap = period_cap(start.size());
  Permutation q = sigma(start);
  long long steps = 1;
  while (!(q == start)) {
    if (is_canonical(q) && q < start) return -1;
    if (++steps > cap) period_cap_exceeded(start);
    q = sigma(q);
  }
  return static_cast<int>(steps);
}

}  // namespace detail

/// Full census for every k = 0..n-1 in one sweep over the 2*(n-1)!
/// canonical permutations. Requires odd n in [3, cap]; cap guards the
/// factorial enumeration cost.
inline std::vector<OrbitCensus> census_all(int n, int cap = kDefaultCensusCap) {
  if (n % 2 == 0) throw std::invalid_argument("census requires odd n");
  if (n < 3) throw std::invalid_argument("census requires n >= 3");
  if (n > cap)
    throw std::invalid_argument("census for n = " + std::to_string(n) + " exceeds the cap " + std::to_string(cap) +
                                " (cost grows as 2*(n-1)!)");

  const auto divs = divisors(n);
  std::vector<OrbitCensus> out(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    auto& c = out[static_cast<size_t>(k)];
    c.n = n;
    c.k = k;
    for (long long d : divs) {
      // The minus class is empty at k = 0 and the plus class at k = n-1;
      // the corresponding maps stay absent there.
      if (k >= 1) c.even_minus[d] = c.odd_minus[d] = 0;
      if (k <= n - 2) c.even_plus[d] = c.odd_plus[d] = 0;
    }
  }

  const auto tally = [&](const Permutation& start) {
    const int per = detail::orbit_period_if_owner(start);
    if (per < 0) return;  // another canonical member owns this orbit
    const int k = ascent_count(start);
    const bool minus = sign_class(start) == SignClass::EMinus;
    const long long unit = minus ? (start.size() - k) : (k + 1);
    if (per % unit != 0 || n % (per / unit) != 0)
      throw std::logic_error("orbit of " + start.to_string() + " has period " + std::to_string(per) +
                             ", which violates the divisor law");
    const long long d = per / unit;
    auto& c = out[static_cast<size_t>(k)];
    auto& cell = minus ? (parity(start) == Parity::Even ? c.even_minus : c.odd_minus)
                       : (parity(start) == Parity::Even ? c.even_plus : c.odd_plus);
    ++cell[d];
  };

  std::vector<int> tail(static_cast<size_t>(n - 1));
  std::iota(tail.begin(), tail.end(), 2);
  do {
    std::vector<int> minus_entries;
    minus_entries.reserve(static_cast<size_t>(n));
    minus_entries.push_back(1);
    minus_entries.insert(minus_entries.end(), tail.begin(), tail.end());
    std::vector<int> plus_entries(tail.begin(), tail.end());
    plus_entries.push_back(1);
    tally(Permutation(std::move(minus_entries)));
    tally(Permutation(std::move(plus_entries)));
  } while (std::next_permutation(tail.begin(), tail.end()));

  return out;
}

/// Census for a single (n, k); k must lie in 0..n-1.
inline OrbitCensus census(int n, int k, int cap = kDefaultCensusCap) {
  if (k < 0 || k >= n) throw std::out_of_range("census: k = " + std::to_string(k) + " out of 0.." + std::to_string(n - 1));
  return census_all(n, cap)[static_cast<size_t>(k)];
}

/// The canonical permutation 1, 1+l, 1+2l, ..., 1+(n-1)l with entries
/// reduced modulo n into {1,...,n}. Requires odd n, 1 <= l <= n-1 and
/// gcd(l, n) = 1 (otherwise entries would collide).
inline Permutation progression_permutation(int n, int ell) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("progression permutation requires odd n >= 1");
  if (ell < 1 || ell > n - 1) throw std::invalid_argument("progression step must lie in 1..n-1");
  if (std::gcd(ell, n) != 1)
    throw std::invalid_argument("gcd(" + std::to_string(ell) + ", " + std::to_string(n) + ") > 1: entries would collide");
  std::vector<int> e(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) e[static_cast<size_t>(j)] = static_cast<int>((static_cast<long long>(j) * ell) % n) + 1;
  return Permutation(std::move(e));
}

/// 1 if the progression permutation is even, 0 if odd.
inline int epsilon(int n, int ell) {
  return parity(progression_permutation(n, ell)) == Parity::Even ? 1 : 0;
}

/// Checks the two structural laws of the census for odd n: the minus-class
/// orbit counts vanish at every divisor d with gcd(k, n/d) > 1, and when
/// gcd(k, n) = 1 the unique shortest minus-class orbit is even or odd
/// exactly as the progression permutation with step n-k is.
inline CheckReport check_progression_orbit_counts(int n, int cap = kDefaultCensusCap) {
  const auto cen = census_all(n, cap);
  const auto divs = divisors(n);
  CheckReport report;
  for (int k = 1; k <= n - 1; ++k) {
    const auto& c = cen[static_cast<size_t>(k)];
    for (long long d : divs) {
      if (gcd(k, n / d) <= 1) continue;
      const long long a = c.even_minus.at(d);
      const long long g = c.odd_minus.at(d);
      report.push_back({"blocked divisor n=" + std::to_string(n) + " k=" + std::to_string(k) + " d=" + std::to_string(d),
                        a == 0 && g == 0,
                        "alpha=" + std::to_string(a) + " gamma=" + std::to_string(g) + " (both must vanish)"});
    }
    if (std::gcd(k, n) == 1) {
      const int eps = epsilon(n, n - k);
      const long long a = c.even_minus.at(1);
      const long long g = c.odd_minus.at(1);
      report.push_back({"unit divisor n=" + std::to_string(n) + " k=" + std::to_string(k),
                        a == eps && g == 1 - eps,
                        "alpha[1]=" + std::to_string(a) + " gamma[1]=" + std::to_string(g) + " epsilon(step " +
                            std::to_string(n - k) + ")=" + std::to_string(eps)});
    }
  }
  return report;
}

}  // namespace eulerian
