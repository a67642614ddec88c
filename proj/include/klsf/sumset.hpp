#pragma once

// Sumsets over Z_n on bitmasks, (k,l)-sum-freeness and completeness checks,
// additive tuple counting, and a dense table fallback for small noncyclic
// abelian groups.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "klsf/arith.hpp"
#include "klsf/errors.hpp"
#include "klsf/group.hpp"

namespace klsf {

/// A + B: for each a in the smaller operand, OR in the other operand
/// translated by a. Cost O(min(|A|,|B|) * n / 64).
inline ResidueSet pairwise_sumset(const ResidueSet& a, const ResidueSet& b) {
  if (a.modulus() != b.modulus()) {
    throw ModulusMismatch("pairwise_sumset: modulus " + std::to_string(a.modulus()) + " vs " +
                          std::to_string(b.modulus()));
  }
  const bool a_smaller = a.size() <= b.size();
  const ResidueSet& outer = a_smaller ? a : b;
  const ResidueSet& inner = a_smaller ? b : a;
  ResidueSet out(a.modulus());
  outer.for_each([&](std::size_t x) { inner.or_translated(out, x); });
  return out;
}

/// hA by binary doubling over (h1 A) + (h2 A) = (h1 + h2) A.
inline ResidueSet h_fold_sumset(const ResidueSet& a, Int h) {
  if (h < 1) throw InvalidArgument("h_fold_sumset: h must be >= 1");
  if (a.empty()) return a;
  std::optional<ResidueSet> acc;
  ResidueSet power = a;
  while (true) {
    if (h & 1) acc = acc ? pairwise_sumset(*acc, power) : power;
    h >>= 1;
    if (h == 0) break;
    power = power.is_full() ? power : pairwise_sumset(power, power);
  }
  return *acc;
}

/// Smallest element of kA ∩ lA, if any.
inline std::optional<std::size_t> sumfree_violation(const ResidueSet& a, const SumPair& pair) {
  if (a.empty()) return std::nullopt;
  ResidueSet ka = h_fold_sumset(a, pair.k());
  if (ka.is_full()) {
    // lA is nonempty, so it meets kA; report its smallest element
    return h_fold_sumset(a, pair.l()).min_element();
  }
  ka &= h_fold_sumset(a, pair.l());
  return ka.min_element();
}

inline bool is_kl_sumfree(const ResidueSet& a, const SumPair& pair) {
  if (a.empty()) return true;
  ResidueSet ka = h_fold_sumset(a, pair.k());
  if (ka.is_full()) return false;
  return !ka.intersects(h_fold_sumset(a, pair.l()));
}

inline bool is_kl_sumfree(const ResidueSet& a, Int k, Int l) {
  return is_kl_sumfree(a, SumPair(k, l));
}

/// kA and lA partition Z_n. Throws NotSumFree if they overlap.
inline bool is_complete(const ResidueSet& a, const SumPair& pair) {
  if (a.empty()) return false;
  ResidueSet ka = h_fold_sumset(a, pair.k());
  ResidueSet la = h_fold_sumset(a, pair.l());
  if (ka.intersects(la)) throw NotSumFree("is_complete: kA and lA intersect");
  return (ka | la).is_full();
}

/// Number of k-tuples (a_1..a_k) in A^k whose sum lies in A, computed as
/// sum over x in A of the k-fold cyclic self-convolution of A's indicator.
inline std::uint64_t count_additive_tuples(const ResidueSet& a, Int k) {
  if (k < 1) throw InvalidArgument("count_additive_tuples: k must be >= 1");
  const std::size_t n = a.modulus();
  const std::vector<std::size_t> members = a.residues();
  std::vector<std::uint64_t> counts(n, 0);
  for (auto x : members) counts[x] = 1;
  std::vector<std::uint64_t> next(n);
  for (Int step = 1; step < k; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t x = 0; x < n; ++x) {
      if (counts[x] == 0) continue;
      for (auto y : members) {
        std::size_t z = x + y;
        if (z >= n) z -= n;
        if (__builtin_add_overflow(next[z], counts[x], &next[z])) {
          throw std::overflow_error("count_additive_tuples: 64-bit overflow");
        }
      }
    }
    counts.swap(next);
  }
  std::uint64_t total = 0;
  for (auto x : members) {
    if (__builtin_add_overflow(total, counts[x], &total)) {
      throw std::overflow_error("count_additive_tuples: 64-bit overflow");
    }
  }
  return total;
}

/// Dense addition table for an abelian group of order <= 64. Elements are
/// numbered in mixed radix over the invariant factors (first factor fastest),
/// so element 0 is the identity and subsets fit in one 64-bit mask.
class GroupTable {
 public:
  using Mask = std::uint64_t;
  static constexpr Int kMaxOrder = 64;

  explicit GroupTable(const AbelianGroup& group) : group_(group) {
    if (group.order() > kMaxOrder) {
      throw InstanceTooLarge("GroupTable: order " + std::to_string(group.order()) + " exceeds 64");
    }
    n_ = static_cast<std::size_t>(group.order());
    const auto& factors = group.invariant_factors();
    coords_.resize(n_);
    for (std::size_t x = 0; x < n_; ++x) {
      std::size_t rest = x;
      for (Int f : factors) {
        coords_[x].push_back(static_cast<Int>(rest % static_cast<std::size_t>(f)));
        rest /= static_cast<std::size_t>(f);
      }
    }
    add_.assign(n_ * n_, 0);
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        std::size_t idx = 0, radix = 1;
        for (std::size_t i = 0; i < factors.size(); ++i) {
          idx += static_cast<std::size_t>((coords_[x][i] + coords_[y][i]) % factors[i]) * radix;
          radix *= static_cast<std::size_t>(factors[i]);
        }
        add_[x * n_ + y] = static_cast<std::uint8_t>(idx);
      }
    }
    // translate(mask, g) = OR over bytes of a precomputed image per byte value
    bytes_ = (n_ + 7) / 8;
    shift_.assign(n_ * bytes_ * 256, 0);
    for (std::size_t g = 0; g < n_; ++g) {
      for (std::size_t byte = 0; byte < bytes_; ++byte) {
        for (std::size_t v = 0; v < 256; ++v) {
          Mask image = 0;
          for (std::size_t bit = 0; bit < 8; ++bit) {
            std::size_t x = byte * 8 + bit;
            if (x < n_ && ((v >> bit) & 1u)) image |= Mask{1} << add(g, x);
          }
          shift_[(g * bytes_ + byte) * 256 + v] = image;
        }
      }
    }
  }

  const AbelianGroup& group() const { return group_; }
  std::size_t order() const { return n_; }
  Mask full() const { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }

  std::size_t add(std::size_t x, std::size_t y) const { return add_[x * n_ + y]; }

  std::size_t multiple(std::size_t x, Int j) const {
    std::size_t acc = 0;
    for (Int i = 0; i < j; ++i) acc = add(acc, x);
    return acc;
  }

  const std::vector<Int>& coordinates(std::size_t x) const { return coords_[x]; }

  /// g + mask, via byte lookup.
  Mask translate(Mask mask, std::size_t g) const {
    Mask out = 0;
    const Mask* base = &shift_[g * bytes_ * 256];
    for (std::size_t byte = 0; byte < bytes_; ++byte) {
      out |= base[byte * 256 + ((mask >> (8 * byte)) & 0xffu)];
    }
    return out;
  }

  /// A + B straight from the addition table.
  Mask sumset(Mask a, Mask b) const {
    Mask out = 0;
    for (Mask x = a; x != 0; x &= x - 1) {
      std::size_t i = static_cast<std::size_t>(std::countr_zero(x));
      for (Mask y = b; y != 0; y &= y - 1) {
        out |= Mask{1} << add(i, static_cast<std::size_t>(std::countr_zero(y)));
      }
    }
    return out;
  }

  Mask h_fold(Mask a, Int h) const {
    if (h < 1) throw InvalidArgument("GroupTable::h_fold: h must be >= 1");
    Mask acc = a;
    for (Int i = 1; i < h; ++i) acc = sumset(acc, a);
    return acc;
  }

  bool is_kl_sumfree(Mask a, const SumPair& pair) const {
    if (a == 0) return true;
    return (h_fold(a, pair.k()) & h_fold(a, pair.l())) == 0;
  }

  /// Preimage of A ⊆ Z_e under the projection onto the last (exponent)
  /// coordinate.
  Mask lift_from_exponent(const ResidueSet& a) const {
    if (static_cast<Int>(a.modulus()) != group_.exponent()) {
      throw ModulusMismatch("lift_from_exponent: set is not over Z_exponent");
    }
    Mask out = 0;
    for (std::size_t x = 0; x < n_; ++x) {
      std::size_t last = coords_[x].empty() ? 0 : static_cast<std::size_t>(coords_[x].back());
      if (a.contains(last)) out |= Mask{1} << x;
    }
    return out;
  }

 private:
  AbelianGroup group_;
  std::size_t n_ = 1;
  std::size_t bytes_ = 1;
  std::vector<std::vector<Int>> coords_;
  std::vector<std::uint8_t> add_;
  std::vector<Mask> shift_;
};

}  // namespace klsf
