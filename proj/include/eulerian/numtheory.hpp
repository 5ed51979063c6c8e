#pragma once

// Small exact number-theory helpers. Everything here is desk-scale, so
// trial division is used throughout; no probabilistic machinery.

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulerian {

/// All positive divisors of n, ascending. Rejects n <= 0.
inline std::vector<long long> divisors(long long n) {
  if (n <= 0) throw std::invalid_argument("divisors: n must be positive, got " + std::to_string(n));
  std::vector<long long> small, large;
  for (long long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Greatest common divisor of non-negative a, b; (0,0) is rejected.
inline long long gcd(long long a, long long b) {
  if (a < 0 || b < 0) throw std::invalid_argument("gcd: arguments must be non-negative");
  if (a == 0 && b == 0) throw std::invalid_argument("gcd(0,0) is undefined");
  return std::gcd(a, b);
}

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Largest m with p^m dividing x. Rejects x = 0 (infinite) and non-prime p.
/// Works for built-in integers and for arbitrary-precision types that
/// support %, /= and comparison against long long.
template <class Int>
int p_adic_valuation(Int x, long long p) {
  if (x == 0) throw std::invalid_argument("p_adic_valuation: x = 0 has infinite valuation");
  if (!is_prime(p)) throw std::invalid_argument("p_adic_valuation: p = " + std::to_string(p) + " is not prime");
  if (x < 0) x = -x;
  int m = 0;
  while (x % p == 0) {
    x /= p;
    ++m;
  }
  return m;
}

}  // namespace eulerian
