#pragma once

// The four ascent-statistic triangles over arbitrary-precision integers:
// A (all permutations), B (even permutations), C (odd permutations) and
// the signed triangle D = B - C. Builds them by recurrence, splits B and
// C out of (A, D), and verifies the structural laws that tie the
// triangles together: symmetry/antisymmetry, the odd-row linear
// recurrence with its even-row counterexample, the even-row
// cross-relations, the per-class count differences, and the prime-power
// divisibility of class cardinalities.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eulerian/check.hpp"
#include "eulerian/numtheory.hpp"

namespace eulerian {

using BigInt = boost::multiprecision::cpp_int;

enum class TriangleKind { A, B, C, D };

inline char kind_letter(TriangleKind kind) {
  switch (kind) {
    case TriangleKind::A: return 'A';
    case TriangleKind::B: return 'B';
    case TriangleKind::C: return 'C';
    case TriangleKind::D: return 'D';
  }
  throw std::invalid_argument("unknown triangle kind");
}

// Rows n = 1..n_max; row n holds entries for k = 0..n-1. Reads with k
// outside the row are 0 (the convention every recurrence here relies on
// at the row edges); reads with n outside 1..n_max throw.
class Triangle {
 public:
  Triangle(TriangleKind kind, int n_max) : kind_(kind) {
    if (n_max < 1) throw std::invalid_argument("triangle needs n_max >= 1");
    rows_.reserve(static_cast<size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) rows_.emplace_back(static_cast<size_t>(n));
  }

  TriangleKind kind() const { return kind_; }
  int n_max() const { return static_cast<int>(rows_.size()); }

  const BigInt& at(int n, int k) const {
    if (n < 1 || n > n_max())
      throw std::out_of_range("row " + std::to_string(n) + " out of 1.." + std::to_string(n_max()));
    if (k < 0 || k >= n) return zero_;
    return rows_[static_cast<size_t>(n - 1)][static_cast<size_t>(k)];
  }

  const std::vector<BigInt>& row(int n) const {
    if (n < 1 || n > n_max())
      throw std::out_of_range("row " + std::to_string(n) + " out of 1.." + std::to_string(n_max()));
    return rows_[static_cast<size_t>(n - 1)];
  }

  /// Writes are strict: unlike reads, k must lie inside row n.
  void set(int n, int k, BigInt v) {
    if (n < 1 || n > n_max())
      throw std::out_of_range("row " + std::to_string(n) + " out of 1.." + std::to_string(n_max()));
    if (k < 0 || k >= n)
      throw std::out_of_range("column " + std::to_string(k) + " out of 0.." + std::to_string(n - 1));
    rows_[static_cast<size_t>(n - 1)][static_cast<size_t>(k)] = std::move(v);
  }

 private:
  TriangleKind kind_;
  std::vector<std::vector<BigInt>> rows_;
  inline static const BigInt zero_{};
};

/// Classical triangle: A(1,0) = 1, A(n,k) = (n-k) A(n-1,k-1) + (k+1) A(n-1,k).
inline Triangle eulerian_triangle(int n_max) {
  Triangle t(TriangleKind::A, n_max);
  t.set(1, 0, 1);
  for (int n = 2; n <= n_max; ++n)
    for (int k = 0; k < n; ++k)
      t.set(n, k, BigInt(n - k) * t.at(n - 1, k - 1) + BigInt(k + 1) * t.at(n - 1, k));
  return t;
}

/// Signed triangle: D(1,0) = 1; odd rows follow the classical recurrence,
/// even rows collapse to D(n,k) = D(n-1,k-1) - D(n-1,k).
inline Triangle signed_triangle(int n_max) {
  Triangle t(TriangleKind::D, n_max);
  t.set(1, 0, 1);
  for (int n = 2; n <= n_max; ++n)
    for (int k = 0; k < n; ++k)
      t.set(n, k, n % 2 == 0 ? t.at(n - 1, k - 1) - t.at(n - 1, k)
                             : BigInt(n - k) * t.at(n - 1, k - 1) + BigInt(k + 1) * t.at(n - 1, k));
  return t;
}

/// B = (A+D)/2 and C = (A-D)/2, elementwise. A and D entries always share
/// parity; an odd sum means one of the recurrences is broken, so this
/// fails hard rather than rounding.
inline std::pair<Triangle, Triangle> split_triangles(const Triangle& a, const Triangle& d) {
  if (a.n_max() != d.n_max()) throw std::invalid_argument("split needs triangles of equal n_max");
  Triangle b(TriangleKind::B, a.n_max());
  Triangle c(TriangleKind::C, a.n_max());
  for (int n = 1; n <= a.n_max(); ++n)
    for (int k = 0; k < n; ++k) {
      const BigInt sum = a.at(n, k) + d.at(n, k);
      if (sum % 2 != 0)
        throw std::logic_error("parity breach at (" + std::to_string(n) + ", " + std::to_string(k) +
                               "): entries " + a.at(n, k).str() + " and " + d.at(n, k).str() +
                               " differ in parity; a recurrence is broken");
      b.set(n, k, sum / 2);
      c.set(n, k, (a.at(n, k) - d.at(n, k)) / 2);
    }
  return {std::move(b), std::move(c)};
}

inline std::pair<Triangle, Triangle> split_triangles(int n_max) {
  return split_triangles(eulerian_triangle(n_max), signed_triangle(n_max));
}

struct TriangleBundle {
  Triangle a;
  Triangle b;
  Triangle c;
  Triangle d;
};

inline TriangleBundle compute_bundle(int n_max) {
  Triangle a = eulerian_triangle(n_max);
  Triangle d = signed_triangle(n_max);
  auto [b, c] = split_triangles(a, d);
  return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

/// Closed form for the k = 0 column: (B, C) is (1, 0) when n = 0, 1
/// (mod 4) and (0, 1) when n = 2, 3 (mod 4) -- the monotone decreasing
/// permutation has n(n-1)/2 inversions.
inline std::pair<int, int> first_column(int n) {
  if (n < 1) throw std::invalid_argument("first column needs n >= 1");
  const int r = n % 4;
  return (r == 0 || r == 1) ? std::pair<int, int>{1, 0} : std::pair<int, int>{0, 1};
}

namespace detail {
inline std::string cell(char kind, int n, int k) {
  return std::string(1, kind) + "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}
}  // namespace detail

/// Row reversal laws, for every row of the bundle: when n = 0, 1 (mod 4)
/// each of B, C, D is its own mirror image; when n = 2, 3 (mod 4) the
/// mirror swaps B with C and negates D.
inline CheckReport check_symmetry(const TriangleBundle& t) {
  CheckReport report;
  for (int n = 1; n <= t.b.n_max(); ++n) {
    const int r = n % 4;
    if (r == 0 || r == 1) {
      for (int k = 0; 2 * k <= n - 1; ++k) {
        const int j = n - 1 - k;
        report.push_back({detail::cell('B', n, k) + " = " + detail::cell('B', n, j), t.b.at(n, k) == t.b.at(n, j),
                          t.b.at(n, k).str() + " vs " + t.b.at(n, j).str()});
        report.push_back({detail::cell('C', n, k) + " = " + detail::cell('C', n, j), t.c.at(n, k) == t.c.at(n, j),
                          t.c.at(n, k).str() + " vs " + t.c.at(n, j).str()});
        report.push_back({detail::cell('D', n, k) + " = " + detail::cell('D', n, j), t.d.at(n, k) == t.d.at(n, j),
                          t.d.at(n, k).str() + " vs " + t.d.at(n, j).str()});
      }
    } else {
      for (int k = 0; k < n; ++k) {
        const int j = n - 1 - k;
        report.push_back({detail::cell('B', n, k) + " = " + detail::cell('C', n, j), t.b.at(n, k) == t.c.at(n, j),
                          t.b.at(n, k).str() + " vs " + t.c.at(n, j).str()});
        if (2 * k <= n - 1)
          report.push_back({detail::cell('D', n, k) + " = -" + detail::cell('D', n, j), t.d.at(n, k) == -t.d.at(n, j),
                            t.d.at(n, k).str() + " vs -(" + t.d.at(n, j).str() + ")"});
      }
    }
  }
  return report;
}

/// For odd rows B and C satisfy the same linear recurrence as A. Also
/// certifies that no such rule can hold for even rows by exhibiting the
/// witness: C(10,4) is odd although every B(9,k), C(9,k) for k = 1..7 is
/// even, so C(10,4) cannot be an integer combination of them.
inline CheckReport odd_n_recurrence_check(int n_max) {
  if (n_max < 3) throw std::invalid_argument("odd-row recurrence check needs n_max >= 3");
  const TriangleBundle t = compute_bundle(std::max(n_max, 10));
  CheckReport report;
  for (int n = 3; n <= n_max; n += 2)
    for (int k = 0; k < n; ++k) {
      const BigInt rb = BigInt(n - k) * t.b.at(n - 1, k - 1) + BigInt(k + 1) * t.b.at(n - 1, k);
      const BigInt rc = BigInt(n - k) * t.c.at(n - 1, k - 1) + BigInt(k + 1) * t.c.at(n - 1, k);
      report.push_back({detail::cell('B', n, k) + " odd-row recurrence", t.b.at(n, k) == rb,
                        t.b.at(n, k).str() + " vs " + rb.str()});
      report.push_back({detail::cell('C', n, k) + " odd-row recurrence", t.c.at(n, k) == rc,
                        t.c.at(n, k).str() + " vs " + rc.str()});
    }
  report.push_back({"C(10,4) odd (even-row impossibility witness)", t.c.at(10, 4) % 2 != 0, t.c.at(10, 4).str()});
  for (int k = 1; k <= 7; ++k) {
    report.push_back({detail::cell('B', 9, k) + " even (witness)", t.b.at(9, k) % 2 == 0, t.b.at(9, k).str()});
    report.push_back({detail::cell('C', 9, k) + " even (witness)", t.c.at(9, k) % 2 == 0, t.c.at(9, k).str()});
  }
  return report;
}

/// For even rows 2B(n,k) and 2C(n,k) decompose over the previous B and C
/// row jointly:
///   2B(n,k) = (n-k+1) B(n-1,k-1) + k B(n-1,k) + (n-k-1) C(n-1,k-1) + (k+2) C(n-1,k)
/// and the same with B and C exchanged.
inline CheckReport even_n_cross_check(int n_max) {
  if (n_max < 2) throw std::invalid_argument("even-row cross check needs n_max >= 2");
  const TriangleBundle t = compute_bundle(n_max);
  CheckReport report;
  for (int n = 2; n <= n_max; n += 2)
    for (int k = 0; k < n; ++k) {
      const BigInt twoB = 2 * t.b.at(n, k);
      const BigInt rhsB = BigInt(n - k + 1) * t.b.at(n - 1, k - 1) + BigInt(k) * t.b.at(n - 1, k) +
                          BigInt(n - k - 1) * t.c.at(n - 1, k - 1) + BigInt(k + 2) * t.c.at(n - 1, k);
      report.push_back({"2" + detail::cell('B', n, k) + " cross-relation", twoB == rhsB,
                        twoB.str() + " vs " + rhsB.str()});
      const BigInt twoC = 2 * t.c.at(n, k);
      const BigInt rhsC = BigInt(n - k + 1) * t.c.at(n - 1, k - 1) + BigInt(k) * t.c.at(n - 1, k) +
                          BigInt(n - k - 1) * t.b.at(n - 1, k - 1) + BigInt(k + 2) * t.b.at(n - 1, k);
      report.push_back({"2" + detail::cell('C', n, k) + " cross-relation", twoC == rhsC,
                        twoC.str() + " vs " + rhsC.str()});
    }
  return report;
}

/// Predicted values of (|E_e^-| - |E_o^-|, |E_e^+| - |E_o^+|) at (n, k),
/// read off the signed triangle: odd n gives ((n-k) D(n-1,k-1),
/// (k+1) D(n-1,k)); even n gives (D(n-1,k-1), -D(n-1,k)). Their sum is
/// D(n,k) in both cases.
inline std::pair<BigInt, BigInt> signed_class_differences(const Triangle& d, int n, int k) {
  if (d.kind() != TriangleKind::D) throw std::invalid_argument("class differences read the signed triangle");
  if (n < 2) throw std::invalid_argument("class differences need n >= 2");
  if (k < 0 || k >= n)
    throw std::out_of_range("column " + std::to_string(k) + " out of 0.." + std::to_string(n - 1));
  if (n % 2 == 1) return {BigInt(n - k) * d.at(n - 1, k - 1), BigInt(k + 1) * d.at(n - 1, k)};
  return {d.at(n - 1, k - 1), -d.at(n - 1, k)};
}

/// Prime-power divisibility of the class cardinalities for odd n with
/// p^m || n. Three families, all read off row n-1:
///   - p | k: B(n-1,k-1), C(n-1,k-1), D(n-1,k-1) are divisible by p^m;
///   - p^i || k with i capped at m: (n-k) B(n-1,k-1) and (n-k) C(n-1,k-1)
///     (the sizes of E_e^- and E_o^-) are divisible by p^{m+i};
///   - p^i || k+1, i uncapped: (k+1) B(n-1,k) and (k+1) C(n-1,k) (the
///     sizes of E_e^+ and E_o^+) are divisible by p^{m+i}.
inline CheckReport divisibility_report(int n, long long p) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("divisibility report needs odd n >= 3");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (n % p != 0) throw std::invalid_argument(std::to_string(p) + " does not divide n = " + std::to_string(n));
  const int m = p_adic_valuation(static_cast<long long>(n), p);
  const TriangleBundle t = compute_bundle(n - 1);
  CheckReport report;

  BigInt pm = 1;
  for (int i = 0; i < m; ++i) pm *= p;

  const auto divides = [](const BigInt& mod, const BigInt& x) { return x % mod == 0; };
  const auto tag = [&](int k) { return " [n=" + std::to_string(n) + " k=" + std::to_string(k) + "]"; };

  for (int k = static_cast<int>(p); k <= n - 1; k += static_cast<int>(p)) {
    for (const Triangle* tri : {&t.b, &t.c, &t.d}) {
      const BigInt& v = tri->at(n - 1, k - 1);
      report.push_back({pm.str() + " | " + detail::cell(kind_letter(tri->kind()), n - 1, k - 1) + tag(k),
                        divides(pm, v), v.str()});
    }
  }

  for (int k = 1; k <= n - 1; ++k) {
    const int i = k % p == 0 ? std::min(p_adic_valuation(static_cast<long long>(k), p), m) : 0;
    if (i >= 1) {
      BigInt pmi = pm;
      for (int j = 0; j < i; ++j) pmi *= p;
      const BigInt minusEven = BigInt(n - k) * t.b.at(n - 1, k - 1);
      const BigInt minusOdd = BigInt(n - k) * t.c.at(n - 1, k - 1);
      report.push_back({pmi.str() + " | (n-k) " + detail::cell('B', n - 1, k - 1) + tag(k), divides(pmi, minusEven),
                        minusEven.str()});
      report.push_back({pmi.str() + " | (n-k) " + detail::cell('C', n - 1, k - 1) + tag(k), divides(pmi, minusOdd),
                        minusOdd.str()});
    }
  }

  for (int k = 0; k <= n - 2; ++k) {
    const int i = (k + 1) % p == 0 ? p_adic_valuation(static_cast<long long>(k + 1), p) : 0;
    if (i >= 1) {
      BigInt pmi = pm;
      for (int j = 0; j < i; ++j) pmi *= p;
      const BigInt plusEven = BigInt(k + 1) * t.b.at(n - 1, k);
      const BigInt plusOdd = BigInt(k + 1) * t.c.at(n - 1, k);
      report.push_back({pmi.str() + " | (k+1) " + detail::cell('B', n - 1, k) + tag(k), divides(pmi, plusEven),
                        plusEven.str()});
      report.push_back({pmi.str() + " | (k+1) " + detail::cell('C', n - 1, k) + tag(k), divides(pmi, plusOdd),
                        plusOdd.str()});
    }
  }

  return report;
}

}  // namespace eulerian
