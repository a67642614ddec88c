#pragma once

// Closed-form maxima for (k,l)-sum-free sets.
//
// For Z_d, with delta = gcd(d, k-l), f = ceil((d - delta)/(k+l)) and
// r = (l*f) mod delta, the longest (k,l)-sum-free interval has length
//
//     gamma(d) = ceil((d - (delta - r)) / (k+l)),
//
// and the maximum size of a (k,l)-sum-free subset of Z_n is
//
//     mu(n) = max over d | n of gamma(d) * n / d.

#include <algorithm>
#include <numeric>
#include <vector>

#include "klsf/arith.hpp"
#include "klsf/errors.hpp"
#include "klsf/group.hpp"

namespace klsf {

/// Intermediates of the interval maximum for one modulus d.
struct GammaBreakdown {
  Int d = 0;
  Int k = 0;
  Int l = 0;
  Int delta = 0;
  Int f = 0;
  Int r = 0;
  Int value = 0;
};

/// True iff Z_d contains a (k,l)-sum-free interval of length m, i.e.
/// k(m-1) + ceil((l(m-1)+1)/delta) * delta < d. Length 0 is always feasible.
inline bool interval_feasible(Int d, const SumPair& pair, Int m) {
  if (d < 1) throw InvalidArgument("interval_feasible: d must be positive");
  if (m < 0) throw InvalidArgument("interval_feasible: m must be nonnegative");
  if (m == 0) return true;
  if (m > d) return false;
  const Int delta = std::gcd(d, pair.difference());
  const Int lhs = pair.k() * (m - 1) + ceil_div(pair.l() * (m - 1) + 1, delta) * delta;
  return lhs < d;
}

inline GammaBreakdown gamma(Int d, const SumPair& pair) {
  if (d < 1) throw InvalidArgument("gamma: d must be positive");
  GammaBreakdown g;
  g.d = d;
  g.k = pair.k();
  g.l = pair.l();
  g.delta = std::gcd(d, pair.difference());
  g.f = ceil_div(d - g.delta, pair.sum());
  g.r = mod(pair.l() * g.f, g.delta);
  g.value = ceil_div(d - (g.delta - g.r), pair.sum());
  return g;
}

struct DivisorContribution {
  GammaBreakdown gamma;
  Int contribution = 0;  // gamma * n / d
};

struct Bounds {
  Int lower = 0;
  Int upper = 0;
};

struct MuReport {
  Int n = 0;
  Int k = 0;
  Int l = 0;
  Int mu = 0;
  Int best_divisor = 1;  // smallest divisor attaining mu
  std::vector<DivisorContribution> table;
  Bounds bounds;
};

/// Sandwich bounds max ceil((d-delta)/(k+l)) n/d <= mu <= max ceil((d-1)/(k+l)) n/d.
/// Evaluated on its own, without going through gamma.
inline Bounds sandwich_bounds(Int n, const SumPair& pair) {
  Bounds b;
  for (Int d : divisors(n)) {
    const Int delta = std::gcd(d, pair.difference());
    b.lower = std::max(b.lower, ceil_div(d - delta, pair.sum()) * (n / d));
    b.upper = std::max(b.upper, ceil_div(d - 1, pair.sum()) * (n / d));
  }
  return b;
}

inline MuReport mu_cyclic(Int n, const SumPair& pair) {
  MuReport rep;
  rep.n = n;
  rep.k = pair.k();
  rep.l = pair.l();
  for (Int d : divisors(n)) {
    DivisorContribution row{gamma(d, pair), 0};
    row.contribution = row.gamma.value * (n / d);
    if (rep.table.empty() || row.contribution > rep.mu) {
      rep.mu = row.contribution;
      rep.best_divisor = d;
    }
    rep.table.push_back(row);
  }
  rep.bounds = sandwich_bounds(n, pair);
  return rep;
}

/// Prime modulus: 0 if p | k-l, else ceil((p-1)/(k+l)).
inline Int mu_prime_special(Int p, const SumPair& pair) {
  if (!is_prime(p)) throw InvalidArgument("mu_prime_special: " + std::to_string(p) + " is not prime");
  if (pair.difference() % p == 0) return 0;
  return ceil_div(p - 1, pair.sum());
}

/// max over d | n of ceil((d-1)/(k+l)) n/d; the exact maximum when
/// gcd(n, k-l) = 1.
inline Int mu_coprime_difference(Int n, const SumPair& pair) {
  if (std::gcd(n, pair.difference()) != 1) {
    throw InvalidArgument("mu_coprime_difference: gcd(n, k-l) must be 1");
  }
  Int best = 0;
  for (Int d : divisors(n)) best = std::max(best, ceil_div(d - 1, pair.sum()) * (n / d));
  return best;
}

struct NoncyclicBound {
  Int bound = 0;
  bool exactness_known = false;
  Int best_divisor = 1;  // divisor of the exponent attaining the bound
};

/// True iff d is not congruent to any of 1..gcd(d,k-l) modulo k+l.
inline bool exactness_divisor(Int d, const SumPair& pair) {
  const Int delta = std::gcd(d, pair.difference());
  const Int residue = mod(d, pair.sum());
  for (Int t = 1; t <= delta; ++t) {
    if (mod(t, pair.sum()) == residue) return false;
  }
  return true;
}

/// Lower bound max over d | e(G) of gamma(d) n/d, from lifting a witness
/// in Z_e(G). exactness_known is set when some divisor of e(G) passes
/// exactness_divisor (the bound is then known to be the maximum). The
/// trivial group is exact with bound 0.
inline NoncyclicBound mu_noncyclic_lower(const AbelianGroup& g, const SumPair& pair) {
  NoncyclicBound out;
  const Int n = g.order();
  const Int e = g.exponent();
  bool first = true;
  for (Int d : divisors(e)) {
    const Int value = gamma(d, pair).value * (n / d);
    if (first || value > out.bound) {
      out.bound = value;
      out.best_divisor = d;
      first = false;
    }
    if (exactness_divisor(d, pair)) out.exactness_known = true;
  }
  if (n == 1) out.exactness_known = true;
  return out;
}

/// Minimum over m-subsets A of Z_p of #{(a,b) in A^2 : a+b in A}:
/// 0 up to ceil((p-1)/3), floor((3m-p)^2/4) above.
inline Int p_min_formula(Int p, Int m) {
  if (!is_prime(p)) throw InvalidArgument("p_min_formula: " + std::to_string(p) + " is not prime");
  if (m < 1 || m > p) {
    throw OutOfRange("p_min_formula: m = " + std::to_string(m) + " not in [1, " +
                     std::to_string(p) + "]");
  }
  if (m <= ceil_div(p - 1, 3)) return 0;
  const Int t = 3 * m - p;
  return t * t / 4;
}

}  // namespace klsf
