#pragma once

// Exact integer helpers shared by the formulas, constructions and oracles.
// Everything here is 64-bit; callers keep inputs at desk scale (<= 1e6).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "klsf/errors.hpp"

namespace klsf {

using Int = std::int64_t;

// Ascending list of all positive divisors of some n.
using DivisorList = std::vector<Int>;

/// Remainder of x modulo m, normalized to [0, m).
inline Int mod(Int x, Int m) {
  if (m <= 0) throw InvalidArgument("mod: modulus must be positive");
  Int r = x % m;
  return r < 0 ? r + m : r;
}

inline Int ceil_div(Int a, Int b) {
  if (b <= 0) throw InvalidArgument("ceil_div: divisor must be positive");
  if (a < 0) throw InvalidArgument("ceil_div: numerator must be nonnegative");
  return a / b + (a % b != 0 ? 1 : 0);
}

inline Int floor_div(Int a, Int b) {
  if (b <= 0) throw InvalidArgument("floor_div: divisor must be positive");
  Int q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

inline DivisorList divisors(Int n) {
  if (n <= 0) throw InvalidArgument("divisors: n must be positive, got " + std::to_string(n));
  DivisorList small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Inverse of x modulo m via extended Euclid. Throws NonInvertible when
/// gcd(x, m) > 1. For m = 1 every residue is 0 and the result is 0.
inline Int mod_inverse(Int x, Int m) {
  if (m <= 0) throw InvalidArgument("mod_inverse: modulus must be positive");
  Int a = mod(x, m);
  Int old_r = a, r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    throw NonInvertible("mod_inverse: gcd(" + std::to_string(x) + ", " + std::to_string(m) +
                        ") = " + std::to_string(old_r));
  }
  return mod(old_s, m);
}

inline bool is_prime(Int n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Binomial coefficient, saturating at INT64_MAX.
inline Int binomial(Int n, Int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int result = 1;
  for (Int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is exact at every step
    Int g = std::gcd(result, i);
    Int num = n - k + i;
    Int r = result / g;
    Int den = i / g;
    num /= den;
    if (r > std::numeric_limits<Int>::max() / num) return std::numeric_limits<Int>::max();
    result = r * num;
  }
  return result;
}

}  // namespace klsf
