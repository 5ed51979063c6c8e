#pragma once

// Brute-force ground truth. Enumerates all of S_n in lexicographic order,
// classifies every permutation by ascent count, inversion parity and sign
// class, and checks the identity families (class cardinalities, class
// differences, weighted orbit sums) against those raw counts instead of
// against each other.

#include <exception>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "eulerian/check.hpp"
#include "eulerian/orbit.hpp"
#include "eulerian/permutation.hpp"
#include "eulerian/triangle.hpp"

namespace eulerian {

// 10! = 3 628 800 permutations stream in seconds; beyond that the cost
// grows by a factor of n per step, so larger n must be requested
// explicitly (the CLI maps EULERIAN_ORACLE_CAP onto this parameter).
inline constexpr int kDefaultOracleCap = 10;

// Exact cell counts for one (n, k): the four classes split by sign class
// (minus: a_1 < a_n, plus: a_1 > a_n) and inversion parity.
struct ClassCounts {
  int n = 0;
  int k = 0;
  long long even_minus = 0;  // |E_e^-(n,k)|
  long long odd_minus = 0;   // |E_o^-(n,k)|
  long long even_plus = 0;   // |E_e^+(n,k)|
  long long odd_plus = 0;    // |E_o^+(n,k)|

  long long even_total() const { return even_minus + even_plus; }  // B_{n,k}
  long long odd_total() const { return odd_minus + odd_plus; }     // C_{n,k}
  long long signed_diff() const { return even_total() - odd_total(); }
  long long total() const { return even_total() + odd_total(); }   // A_{n,k}
};

namespace detail {

// Enumerates the slice of S_n with fixed first entry v in lexicographic
// order, maintaining inversion parity incrementally: every lexicographic
// successor step is one pivot swap plus a suffix reversal, and each swap
// of two distinct entries flips the parity. Every 10^5 permutations the
// parity is re-derived from the definitional pair count; disagreement is
// a logic error in this very bookkeeping, so it aborts loudly.
inline void enumerate_slice(int n, int v, std::vector<ClassCounts>& acc) {
  std::vector<int> a;
  a.reserve(static_cast<size_t>(n));
  a.push_back(v);
  for (int x = 1; x <= n; ++x)
    if (x != v) a.push_back(x);

  // The start has entries 1..v-1 after v and the tail ascending, so its
  // inversion count is exactly v-1.
  bool odd = (v - 1) % 2 != 0;
  long long visited = 0;

  while (true) {
    ++visited;
    if (visited % 100000 == 0 && (inversion_count_pairs(a) % 2 != 0) != odd)
      throw std::logic_error("incremental parity out of sync with the definitional count at slice v=" +
                             std::to_string(v) + ", permutation " + std::to_string(visited));

    auto& cell = acc[static_cast<size_t>(ascent_count_raw(a))];
    if (a.front() < a.back())
      ++(odd ? cell.odd_minus : cell.even_minus);
    else
      ++(odd ? cell.odd_plus : cell.even_plus);

    // Lexicographic successor within the slice: positions 0 is pinned.
    int i = n - 2;
    while (i >= 1 && a[static_cast<size_t>(i)] > a[static_cast<size_t>(i + 1)]) --i;
    if (i < 1) break;  // tail fully descending: slice exhausted
    int j = n - 1;
    while (a[static_cast<size_t>(j)] < a[static_cast<size_t>(i)]) --j;
    std::swap(a[static_cast<size_t>(i)], a[static_cast<size_t>(j)]);
    int lo = i + 1, hi = n - 1;
    long long flips = 1 + (hi - lo + 1) / 2;
    while (lo < hi) std::swap(a[static_cast<size_t>(lo++)], a[static_cast<size_t>(hi--)]);
    if (flips % 2 != 0) odd = !odd;
  }
}

}  // namespace detail

/// Full census of S_n, one ClassCounts per k = 0..n-1. The slice with
/// first entry v is assigned to worker (v-1) mod threads; per-slice
/// accumulators are merged in slice order, so the result is identical for
/// every worker count.
inline std::vector<ClassCounts> enumerate_counts(int n, int threads = 1, int cap = kDefaultOracleCap) {
  if (n < 2) throw std::invalid_argument("enumeration needs n >= 2 (sign classes need two distinct ends)");
  if (n > cap)
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap) +
                                "; the walk visits n! permutations. Set EULERIAN_ORACLE_CAP (or pass a larger cap) " +
                                "to accept the cost explicitly.");
  if (threads < 1) throw std::invalid_argument("worker count must be >= 1");

  std::vector<std::vector<ClassCounts>> by_slice(static_cast<size_t>(n),
                                                 std::vector<ClassCounts>(static_cast<size_t>(n)));
  const auto worker = [&](int w) {
    for (int v = w + 1; v <= n; v += threads) detail::enumerate_slice(n, v, by_slice[static_cast<size_t>(v - 1)]);
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::exception_ptr> errors(static_cast<size_t>(threads));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        try {
          worker(w);
        } catch (...) {
          errors[static_cast<size_t>(w)] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::vector<ClassCounts> out(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    auto& cell = out[static_cast<size_t>(k)];
    cell.n = n;
    cell.k = k;
    for (int v = 1; v <= n; ++v) {
      const auto& s = by_slice[static_cast<size_t>(v - 1)][static_cast<size_t>(k)];
      cell.even_minus += s.even_minus;
      cell.odd_minus += s.odd_minus;
      cell.even_plus += s.even_plus;
      cell.odd_plus += s.odd_plus;
    }
  }
  return out;
}

namespace detail {
inline std::string count_cell(const char* which, int n, int k) {
  return std::string(which) + "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}
}  // namespace detail

/// For odd n, the class cardinalities factor over the previous row:
/// |E_e^-(n,k)| = (n-k) B_{n-1,k-1}, |E_o^-(n,k)| = (n-k) C_{n-1,k-1},
/// |E_e^+(n,k)| = (k+1) B_{n-1,k}, |E_o^+(n,k)| = (k+1) C_{n-1,k}. Both
/// sides come from fresh enumerations (S_n and S_{n-1}), not triangles.
inline CheckReport check_class_cardinalities(int n, int threads = 1, int cap = kDefaultOracleCap) {
  if (n % 2 == 0 || n < 3) throw std::invalid_argument("class cardinality factorization holds for odd n >= 3");
  const auto now = enumerate_counts(n, threads, cap);
  const auto prev = enumerate_counts(n - 1, threads, cap);
  CheckReport report;
  for (int k = 1; k <= n - 1; ++k) {
    const auto& c = now[static_cast<size_t>(k)];
    const auto& p = prev[static_cast<size_t>(k - 1)];
    const long long mult = n - k;
    report.push_back({"|" + detail::count_cell("E_e^-", n, k) + "| = (n-k) B(" + std::to_string(n - 1) + "," +
                          std::to_string(k - 1) + ")",
                      c.even_minus == mult * p.even_total(),
                      std::to_string(c.even_minus) + " vs " + std::to_string(mult * p.even_total())});
    report.push_back({"|" + detail::count_cell("E_o^-", n, k) + "| = (n-k) C(" + std::to_string(n - 1) + "," +
                          std::to_string(k - 1) + ")",
                      c.odd_minus == mult * p.odd_total(),
                      std::to_string(c.odd_minus) + " vs " + std::to_string(mult * p.odd_total())});
  }
  for (int k = 0; k <= n - 2; ++k) {
    const auto& c = now[static_cast<size_t>(k)];
    const auto& p = prev[static_cast<size_t>(k)];
    const long long mult = k + 1;
    report.push_back({"|" + detail::count_cell("E_e^+", n, k) + "| = (k+1) B(" + std::to_string(n - 1) + "," +
                          std::to_string(k) + ")",
                      c.even_plus == mult * p.even_total(),
                      std::to_string(c.even_plus) + " vs " + std::to_string(mult * p.even_total())});
    report.push_back({"|" + detail::count_cell("E_o^+", n, k) + "| = (k+1) C(" + std::to_string(n - 1) + "," +
                          std::to_string(k) + ")",
                      c.odd_plus == mult * p.odd_total(),
                      std::to_string(c.odd_plus) + " vs " + std::to_string(mult * p.odd_total())});
  }
  return report;
}

/// The enumerated per-class differences |E_e^-| - |E_o^-| and
/// |E_e^+| - |E_o^+| must match the signed-triangle predictions for both
/// parities of n, every k.
inline CheckReport check_class_differences(int n, int threads = 1, int cap = kDefaultOracleCap) {
  const auto now = enumerate_counts(n, threads, cap);
  const Triangle d = signed_triangle(n);
  CheckReport report;
  for (int k = 0; k < n; ++k) {
    const auto& c = now[static_cast<size_t>(k)];
    const auto [dm, dp] = signed_class_differences(d, n, k);
    report.push_back({"minus-class difference at (" + std::to_string(n) + "," + std::to_string(k) + ")",
                      BigInt(c.even_minus - c.odd_minus) == dm,
                      std::to_string(c.even_minus - c.odd_minus) + " vs " + dm.str()});
    report.push_back({"plus-class difference at (" + std::to_string(n) + "," + std::to_string(k) + ")",
                      BigInt(c.even_plus - c.odd_plus) == dp,
                      std::to_string(c.even_plus - c.odd_plus) + " vs " + dp.str()});
  }
  return report;
}

/// Weighted orbit sums for odd n: divisor-weighted census totals must
/// reproduce the previous enumerated row (sum d*alpha[d] = B_{n-1,k-1},
/// sum d*beta[d] = B_{n-1,k}, likewise gamma/delta against C), recompose
/// the current row (B_{n,k} and C_{n,k}), and split it by sign class
/// (|E_e^-| = sum d(n-k) alpha[d] and the other three cells).
inline CheckReport check_orbit_sums(int n, int threads = 1, int cap = kDefaultOracleCap,
                                    int census_cap = kDefaultCensusCap) {
  if (n % 2 == 0 || n < 3) throw std::invalid_argument("orbit sums are defined for odd n >= 3");
  const auto cen = census_all(n, census_cap);
  const auto now = enumerate_counts(n, threads, cap);
  const auto prev = enumerate_counts(n - 1, threads, cap);

  const auto weighted = [](const std::map<long long, long long>& m, long long factor) {
    long long s = 0;
    for (const auto& [d, cnt] : m) s += d * factor * cnt;
    return s;
  };

  CheckReport report;
  for (int k = 0; k < n; ++k) {
    const auto& c = cen[static_cast<size_t>(k)];
    const auto& cur = now[static_cast<size_t>(k)];
    const std::string at = "(" + std::to_string(n) + "," + std::to_string(k) + ")";

    if (k >= 1) {
      const auto& p = prev[static_cast<size_t>(k - 1)];
      report.push_back({"sum d*alpha[d] " + at + " = B(" + std::to_string(n - 1) + "," + std::to_string(k - 1) + ")",
                        weighted(c.even_minus, 1) == p.even_total(),
                        std::to_string(weighted(c.even_minus, 1)) + " vs " + std::to_string(p.even_total())});
      report.push_back({"sum d*gamma[d] " + at + " = C(" + std::to_string(n - 1) + "," + std::to_string(k - 1) + ")",
                        weighted(c.odd_minus, 1) == p.odd_total(),
                        std::to_string(weighted(c.odd_minus, 1)) + " vs " + std::to_string(p.odd_total())});
    }
    if (k <= n - 2) {
      const auto& p = prev[static_cast<size_t>(k)];
      report.push_back({"sum d*beta[d] " + at + " = B(" + std::to_string(n - 1) + "," + std::to_string(k) + ")",
                        weighted(c.even_plus, 1) == p.even_total(),
                        std::to_string(weighted(c.even_plus, 1)) + " vs " + std::to_string(p.even_total())});
      report.push_back({"sum d*delta[d] " + at + " = C(" + std::to_string(n - 1) + "," + std::to_string(k) + ")",
                        weighted(c.odd_plus, 1) == p.odd_total(),
                        std::to_string(weighted(c.odd_plus, 1)) + " vs " + std::to_string(p.odd_total())});
    }

    const long long b_recomposed = weighted(c.even_minus, n - k) + weighted(c.even_plus, k + 1);
    const long long c_recomposed = weighted(c.odd_minus, n - k) + weighted(c.odd_plus, k + 1);
    report.push_back({"B" + at + " recomposition from census", b_recomposed == cur.even_total(),
                      std::to_string(b_recomposed) + " vs " + std::to_string(cur.even_total())});
    report.push_back({"C" + at + " recomposition from census", c_recomposed == cur.odd_total(),
                      std::to_string(c_recomposed) + " vs " + std::to_string(cur.odd_total())});

    report.push_back({"|E_e^-" + at + "| = sum d(n-k) alpha[d]", weighted(c.even_minus, n - k) == cur.even_minus,
                      std::to_string(weighted(c.even_minus, n - k)) + " vs " + std::to_string(cur.even_minus)});
    report.push_back({"|E_o^-" + at + "| = sum d(n-k) gamma[d]", weighted(c.odd_minus, n - k) == cur.odd_minus,
                      std::to_string(weighted(c.odd_minus, n - k)) + " vs " + std::to_string(cur.odd_minus)});
    report.push_back({"|E_e^+" + at + "| = sum d(k+1) beta[d]", weighted(c.even_plus, k + 1) == cur.even_plus,
                      std::to_string(weighted(c.even_plus, k + 1)) + " vs " + std::to_string(cur.even_plus)});
    report.push_back({"|E_o^+" + at + "| = sum d(k+1) delta[d]", weighted(c.odd_plus, k + 1) == cur.odd_plus,
                      std::to_string(weighted(c.odd_plus, k + 1)) + " vs " + std::to_string(cur.odd_plus)});
  }
  return report;
}

}  // namespace eulerian
