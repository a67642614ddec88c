#pragma once

// Explicit maximum-size witnesses.
//
// An interval A = [a, a+m-1] in Z_d has kA - lA = [(k-l)a - l(m-1), (k-l)a + k(m-1)],
// so A is (k,l)-sum-free iff some integer C = ((k-l)/delta) a - (d/delta) b lies in
//
//     ceil((l(m-1)+1)/delta) <= C <= (d - k(m-1) - 1)/delta.
//
// Since (k-l)/delta and d/delta are coprime, any such C is reachable; we take
// the smallest C and solve for a with a modular inverse.

#include <cstddef>
#include <stdexcept>
#include <string>

#include "klsf/arith.hpp"
#include "klsf/errors.hpp"
#include "klsf/formulas.hpp"
#include "klsf/group.hpp"
#include "klsf/sumset.hpp"

namespace klsf {

struct ConstructionCertificate {
  Int d = 0;
  Int k = 0;
  Int l = 0;
  Int m = 0;
  Int delta = 0;
  Int C = 0;
  Int a = 0;
  Int b = 0;

  /// Re-checks the bracket on C and the identity ((k-l)/delta) a - (d/delta) b = C.
  bool holds() const {
    if (delta < 1 || d % delta != 0 || (k - l) % delta != 0) return false;
    const bool lower = C * delta >= l * (m - 1) + 1;
    const bool upper = C * delta <= d - k * (m - 1) - 1;
    const bool identity = ((k - l) / delta) * a - (d / delta) * b == C;
    return lower && upper && identity && a >= 0 && a < d / delta;
  }
};

struct IntervalWitness {
  Interval interval;
  ConstructionCertificate certificate;
};

struct CyclicWitness {
  ResidueSet set;
  Int best_divisor = 1;
  ConstructionCertificate certificate;
};

/// Longest (k,l)-sum-free interval in Z_d together with its certificate.
/// Throws NoWitness when d | k-l.
inline IntervalWitness max_interval(Int d, const SumPair& pair) {
  if (d < 1) throw InvalidArgument("max_interval: d must be positive");
  if (pair.difference() % d == 0) {
    throw NoWitness("no nonempty (k,l)-sum-free set: " + std::to_string(d) + " divides k-l");
  }
  ConstructionCertificate cert;
  cert.d = d;
  cert.k = pair.k();
  cert.l = pair.l();
  cert.m = gamma(d, pair).value;
  cert.delta = std::gcd(d, pair.difference());
  cert.C = ceil_div(cert.l * (cert.m - 1) + 1, cert.delta);
  const Int unit = pair.difference() / cert.delta;
  const Int period = d / cert.delta;
  cert.a = mod(cert.C * mod_inverse(unit, period), period);
  // unit * a - C is divisible by period by construction
  cert.b = (unit * cert.a - cert.C) / period;

  Interval interval(d, cert.a, cert.m);
  if (!cert.holds() || !is_kl_sumfree(interval.to_set(), pair)) {
    throw std::logic_error("max_interval: construction failed self-check for d=" +
                           std::to_string(d));
  }
  return {interval, cert};
}

/// Maximum (k,l)-sum-free subset of Z_n: the longest interval in Z_{d*}
/// lifted to Z_n, with d* the smallest divisor attaining mu.
inline CyclicWitness max_witness_cyclic(Int n, const SumPair& pair) {
  const MuReport rep = mu_cyclic(n, pair);
  if (rep.mu == 0) throw NoWitness("mu = 0: " + std::to_string(n) + " divides k-l");
  IntervalWitness iw = max_interval(rep.best_divisor, pair);
  CyclicWitness w{lift_through_quotient(iw.interval.to_set(), static_cast<std::size_t>(n)),
                  rep.best_divisor, iw.certificate};
  if (static_cast<Int>(w.set.size()) != rep.mu || !is_kl_sumfree(w.set, pair)) {
    throw std::logic_error("max_witness_cyclic: witness failed self-check for n=" +
                           std::to_string(n));
  }
  return w;
}

/// The m consecutive residues starting at ceil((p-m)/2).
inline ResidueSet middle_set(Int p, Int m) {
  if (p < 1 || m < 1 || m > p) {
    throw OutOfRange("middle_set: need 1 <= m <= p, got p=" + std::to_string(p) +
                     ", m=" + std::to_string(m));
  }
  return Interval(p, ceil_div(p - m, 2) % p, m).to_set();
}

/// {(n-1)/3} ∪ [(n+5)/3, (2n-5)/3] ∪ {(2n+1)/3}: sum-free, of size (n-1)/3,
/// and two elements away from an arithmetic progression.
inline ResidueSet fixture_two_short(Int n) {
  if (n < 10 || n % 3 != 1) {
    throw OutOfRange("fixture_two_short: need n >= 10 and n = 1 mod 3, got " + std::to_string(n));
  }
  ResidueSet s(static_cast<std::size_t>(n));
  s.insert(static_cast<std::size_t>((n - 1) / 3));
  for (Int x = (n + 5) / 3; x <= (2 * n - 5) / 3; ++x) s.insert(static_cast<std::size_t>(x));
  s.insert(static_cast<std::size_t>((2 * n + 1) / 3));
  if (!is_kl_sumfree(s, SumPair(2, 1))) {
    throw std::logic_error("fixture_two_short: set is not sum-free for n=" + std::to_string(n));
  }
  return s;
}

}  // namespace klsf
