#pragma once

// Brute-force ground truth, independent of the closed forms in formulas.hpp.
//
// max_sumfree_bruteforce is a depth-first branch-and-bound over subsets in
// ascending element order. Each node carries the h-fold sumsets S_0..S_k of
// the current set (S_0 = {0}); adding x uses
//
//     S_h(A ∪ {x}) = ∪_{j=0..h} (S_{h-j}(A) + j x),
//
// and the candidate mask keeps only elements that can still be added on
// their own. A subtree is cut when |A| + |candidates| cannot beat the best.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "klsf/arith.hpp"
#include "klsf/errors.hpp"
#include "klsf/group.hpp"
#include "klsf/sumset.hpp"

namespace klsf {

inline constexpr Int kDefaultOracleMax = 40;
inline constexpr std::size_t kWitnessCap = 100000;

/// Oracle size cap: KLSF_ORACLE_MAX when set (clamped to [1, 64]), else 40.
inline Int oracle_cap_from_env() {
  if (const char* env = std::getenv("KLSF_ORACLE_MAX")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return std::min<Int>(v, 64);
  }
  return kDefaultOracleMax;
}

struct OracleResult {
  Int n = 0;
  Int k = 0;
  Int l = 0;  // for tuple searches: m
  Int optimum = 0;
  std::vector<ResidueSet> witnesses;
  std::uint64_t witness_count = 0;  // exact, even when witnesses is truncated
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct SearchOptions {
  bool enumerate_all = false;
  bool pruning = true;
  std::size_t witness_cap = kWitnessCap;
  Int size_cap = kDefaultOracleMax;
};

namespace detail {

using Mask = std::uint64_t;

struct CyclicTranslator {
  std::size_t n;
  Mask full;

  explicit CyclicTranslator(std::size_t modulus)
      : n(modulus), full(modulus == 64 ? ~Mask{0} : (Mask{1} << modulus) - 1) {}

  std::size_t order() const { return n; }
  Mask translate(Mask m, std::size_t s) const {
    if (s == 0) return m;
    return ((m << s) | (m >> (n - s))) & full;
  }
  std::size_t multiple(std::size_t x, Int j) const {
    return static_cast<std::size_t>((static_cast<Int>(x) * j) % static_cast<Int>(n));
  }
};

struct TableTranslator {
  const GroupTable* table;

  std::size_t order() const { return table->order(); }
  Mask translate(Mask m, std::size_t g) const { return table->translate(m, g); }
  std::size_t multiple(std::size_t x, Int j) const { return table->multiple(x, j); }
};

template <class Translator>
class SumFreeSearch {
 public:
  SumFreeSearch(Translator tr, const SumPair& pair, const SearchOptions& opts)
      : tr_(tr), k_(static_cast<std::size_t>(pair.k())), l_(static_cast<std::size_t>(pair.l())),
        opts_(opts) {}

  void run() {
    const std::size_t n = tr_.order();
    std::vector<Mask> sums(k_ + 1, 0);
    sums[0] = Mask{1};  // {0}; for the empty set S_h = ∅ for h >= 1
    std::vector<Mask> scratch(k_ + 1);
    Mask candidates = 0;
    for (std::size_t y = 0; y < n; ++y) {
      if (!opts_.pruning || extend(sums, y, scratch)) candidates |= Mask{1} << y;
    }
    best_ = 0;
    record(0);
    descend(0, sums, candidates, 0);
  }

  std::size_t best() const { return best_; }
  const std::vector<Mask>& witnesses() const { return witnesses_; }
  std::uint64_t witness_count() const { return count_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  // Computes the sumsets of A ∪ {x} into out; returns whether it is sum-free.
  bool extend(const std::vector<Mask>& sums, std::size_t x, std::vector<Mask>& out) const {
    std::size_t jx[64];
    jx[0] = 0;
    for (std::size_t j = 1; j <= k_; ++j) jx[j] = tr_.multiple(x, static_cast<Int>(j));
    out[0] = sums[0];
    for (std::size_t h = 1; h <= k_; ++h) {
      Mask acc = 0;
      for (std::size_t j = 0; j <= h; ++j) {
        // S_{h-j}(A) = ∅ for h-j >= 1 when A is empty; translate handles 0 masks
        acc |= tr_.translate(sums[h - j], jx[j]);
      }
      out[h] = acc;
    }
    return (out[k_] & out[l_]) == 0;
  }

  void record(Mask set) {
    const std::size_t size = static_cast<std::size_t>(std::popcount(set));
    if (size > best_) {
      best_ = size;
      witnesses_.clear();
      count_ = 0;
    }
    if (size == best_) {
      ++count_;
      if (witnesses_.size() < (opts_.enumerate_all ? opts_.witness_cap : 1)) witnesses_.push_back(set);
    }
  }

  bool worth_exploring(std::size_t current, Mask remaining) const {
    if (!opts_.pruning) return true;
    const std::size_t reach = current + static_cast<std::size_t>(std::popcount(remaining));
    return opts_.enumerate_all ? reach >= best_ : reach > best_;
  }

  void descend(Mask set, const std::vector<Mask>& sums, Mask candidates, std::size_t size) {
    ++nodes_;
    std::vector<Mask> child(k_ + 1);
    std::vector<Mask> probe(k_ + 1);
    while (candidates != 0) {
      if (!worth_exploring(size, candidates)) return;
      const std::size_t x = static_cast<std::size_t>(std::countr_zero(candidates));
      candidates &= candidates - 1;
      if (!extend(sums, x, child)) continue;
      const Mask grown = set | (Mask{1} << x);
      record(grown);
      Mask next = 0;
      if (opts_.pruning) {
        for (Mask c = candidates; c != 0; c &= c - 1) {
          const std::size_t y = static_cast<std::size_t>(std::countr_zero(c));
          if (extend(child, y, probe)) next |= Mask{1} << y;
        }
      } else {
        next = candidates;
      }
      if (next != 0) descend(grown, child, next, size + 1);
    }
  }

  Translator tr_;
  std::size_t k_;
  std::size_t l_;
  SearchOptions opts_;
  std::size_t best_ = 0;
  std::vector<Mask> witnesses_;
  std::uint64_t count_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Exact maximum size of a (k,l)-sum-free subset of Z_n by exhaustive search.
/// With enumerate_all every maximum set is counted and up to witness_cap of
/// them are returned in search order.
inline OracleResult max_sumfree_bruteforce(Int n, const SumPair& pair,
                                           const SearchOptions& opts = {}) {
  if (n < 1) throw InvalidArgument("max_sumfree_bruteforce: n must be positive");
  const Int cap = std::min<Int>(opts.size_cap, 64);
  if (n > cap) {
    throw InstanceTooLarge("max_sumfree_bruteforce: n = " + std::to_string(n) +
                           " exceeds oracle cap " + std::to_string(cap));
  }
  if (pair.k() > 63) throw InstanceTooLarge("max_sumfree_bruteforce: k too large");
  const auto t0 = std::chrono::steady_clock::now();
  detail::SumFreeSearch search(detail::CyclicTranslator(static_cast<std::size_t>(n)), pair, opts);
  search.run();
  OracleResult res;
  res.n = n;
  res.k = pair.k();
  res.l = pair.l();
  res.optimum = static_cast<Int>(search.best());
  res.witness_count = search.witness_count();
  res.nodes_explored = search.nodes();
  for (auto mask : search.witnesses()) {
    ResidueSet w = ResidueSet::from_mask(static_cast<std::size_t>(n), mask);
    if (!is_kl_sumfree(w, pair) || static_cast<Int>(w.size()) != res.optimum) {
      throw std::logic_error("max_sumfree_bruteforce: witness failed verification");
    }
    res.witnesses.push_back(std::move(w));
  }
  res.elapsed = std::chrono::steady_clock::now() - t0;
  return res;
}

struct GroupOracleResult {
  Int optimum = 0;
  GroupTable::Mask witness = 0;
  std::uint64_t nodes_explored = 0;
};

/// Exhaustive maximum over subsets of a finite abelian group of order <= 64,
/// using the dense group table.
inline GroupOracleResult max_sumfree_group_bruteforce(const GroupTable& table, const SumPair& pair) {
  if (pair.k() > 63) throw InstanceTooLarge("max_sumfree_group_bruteforce: k too large");
  detail::SumFreeSearch search(detail::TableTranslator{&table}, pair, SearchOptions{});
  search.run();
  GroupOracleResult res;
  res.optimum = static_cast<Int>(search.best());
  res.witness = search.witnesses().empty() ? 0 : search.witnesses().front();
  res.nodes_explored = search.nodes();
  if (!table.is_kl_sumfree(res.witness, pair)) {
    throw std::logic_error("max_sumfree_group_bruteforce: witness failed verification");
  }
  return res;
}

enum class StepClass { any, coprime, non_coprime };

/// Longest (k,l)-sum-free arithmetic progression in Z_d whose step falls in
/// the given class: any (alpha), gcd(b,d) = 1 (gamma) or gcd(b,d) > 1 (beta).
/// Singletons are taken with step 1, so they belong to the coprime class.
inline OracleResult max_ap_bruteforce(Int d, const SumPair& pair, StepClass cls) {
  if (d < 1) throw InvalidArgument("max_ap_bruteforce: d must be positive");
  if (d > 400) throw InstanceTooLarge("max_ap_bruteforce: d = " + std::to_string(d) + " exceeds 400");
  const auto t0 = std::chrono::steady_clock::now();
  OracleResult res;
  res.n = d;
  res.k = pair.k();
  res.l = pair.l();
  const auto size = static_cast<std::size_t>(d);
  ResidueSet best(size);
  for (Int b = 0; b < d; ++b) {
    const Int g = std::gcd(b, d);  // gcd(0, d) = d
    if (cls == StepClass::coprime && g != 1) continue;
    if (cls == StepClass::non_coprime && g == 1) continue;
    const Int max_len = d / g;
    const Int min_len = cls == StepClass::non_coprime ? 2 : 1;
    if (max_len < min_len) continue;
    for (Int a = 0; a < d; ++a) {
      // A prefix of a sum-free progression is sum-free, so only lengths
      // beyond the incumbent need testing, in increasing order.
      Int m = std::max<Int>(min_len, res.optimum + 1);
      while (m <= max_len) {
        ++res.nodes_explored;
        ResidueSet s = ap_to_set(ArithmeticProgression(d, a, m == 1 ? 1 : b, m));
        if (!is_kl_sumfree(s, pair)) break;
        res.optimum = m;
        best = std::move(s);
        ++m;
      }
    }
  }
  if (res.optimum > 0) res.witnesses.push_back(best);
  res.witness_count = res.witnesses.size();
  res.elapsed = std::chrono::steady_clock::now() - t0;
  return res;
}

/// Minimum of count_additive_tuples(A, k) over all m-subsets A of Z_p, with
/// every minimizer. Limited to C(p, m) <= 1e6 and k <= 3.
inline OracleResult min_additive_tuples_bruteforce(Int p, Int k, Int m) {
  if (p < 1 || m < 1 || m > p) throw OutOfRange("min_additive_tuples_bruteforce: need 1 <= m <= p");
  if (k < 1) throw InvalidArgument("min_additive_tuples_bruteforce: k must be >= 1");
  if (k > 3 || binomial(p, m) > 1000000) {
    throw InstanceTooLarge("min_additive_tuples_bruteforce: C(p,m) > 1e6 or k > 3");
  }
  const auto t0 = std::chrono::steady_clock::now();
  OracleResult res;
  res.n = p;
  res.k = k;
  res.l = m;
  const auto size = static_cast<std::size_t>(p);
  std::vector<std::size_t> pick(static_cast<std::size_t>(m));
  std::iota(pick.begin(), pick.end(), 0);
  bool first = true;
  while (true) {
    ResidueSet a = ResidueSet::from_residues(size, pick);
    const auto count = static_cast<Int>(count_additive_tuples(a, k));
    ++res.nodes_explored;
    if (first || count < res.optimum) {
      res.optimum = count;
      res.witnesses.clear();
      first = false;
    }
    if (count == res.optimum) res.witnesses.push_back(std::move(a));
    // next combination in lexicographic order
    std::size_t i = pick.size();
    while (i > 0 && pick[i - 1] == size - pick.size() + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
  }
  res.witness_count = res.witnesses.size();
  res.elapsed = std::chrono::steady_clock::now() - t0;
  return res;
}

/// True iff a = u·b for some unit u of Z_n.
inline bool is_unit_dilation_of(const ResidueSet& a, const ResidueSet& b) {
  const Int n = static_cast<Int>(a.modulus());
  if (b.modulus() != a.modulus() || a.size() != b.size()) return false;
  for (Int u = 1; u <= n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    if (dilate(b, u) == a) return true;
  }
  return false;
}

struct Classification {
  bool all_are_aps = true;
  std::uint64_t count = 0;
  std::vector<ResidueSet> maximum_sets;
  std::vector<ResidueSet> exceptions;  // maximum sets that are not progressions
};

/// Enumerates every maximum (k,l)-sum-free subset of Z_n (n <= 30) and
/// tests each for arithmetic-progression structure.
inline Classification classify_max_sets(Int n, const SumPair& pair) {
  if (n > 30) throw InstanceTooLarge("classify_max_sets: n = " + std::to_string(n) + " exceeds 30");
  SearchOptions opts;
  opts.enumerate_all = true;
  OracleResult res = max_sumfree_bruteforce(n, pair, opts);
  Classification out;
  out.count = res.witness_count;
  if (res.witness_count != res.witnesses.size()) {
    throw InstanceTooLarge("classify_max_sets: too many maximum sets to materialize");
  }
  for (auto& w : res.witnesses) {
    // the empty set (optimum 0) is trivially not a progression; skip it
    if (w.empty()) continue;
    if (!is_arithmetic_progression(w)) {
      out.all_are_aps = false;
      out.exceptions.push_back(w);
    }
  }
  out.maximum_sets = std::move(res.witnesses);
  return out;
}

}  // namespace klsf
