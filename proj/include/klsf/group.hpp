#pragma once

// Subsets of Z_n as bitmasks, structured subsets (intervals and arithmetic
// progressions), and finite abelian groups given by invariant factors.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "klsf/arith.hpp"
#include "klsf/errors.hpp"

namespace klsf {

/// Exponent pair (k, l) with k > l >= 1.
class SumPair {
 public:
  SumPair(Int k, Int l) : k_(k), l_(l) {
    if (!(k > l && l >= 1)) {
      throw InvalidArgument("need k > l >= 1, got (k,l) = (" + std::to_string(k) + "," +
                            std::to_string(l) + ")");
    }
  }
  Int k() const { return k_; }
  Int l() const { return l_; }
  Int sum() const { return k_ + l_; }
  Int difference() const { return k_ - l_; }

  friend bool operator==(const SumPair&, const SumPair&) = default;

 private:
  Int k_;
  Int l_;
};

/// A subset of Z_n stored as a characteristic bitmask, one bit per residue.
class ResidueSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t kMaxModulus = std::size_t{1} << 20;

  ResidueSet() : ResidueSet(1) {}

  explicit ResidueSet(std::size_t modulus) : n_(modulus) {
    if (modulus == 0 || modulus > kMaxModulus) {
      throw InvalidArgument("ResidueSet: modulus must be in [1, 2^20], got " +
                            std::to_string(modulus));
    }
    words_.assign((modulus + kWordBits - 1) / kWordBits, 0);
  }

  ResidueSet(std::size_t modulus, std::initializer_list<std::size_t> residues)
      : ResidueSet(modulus) {
    for (auto r : residues) insert(r);
  }

  static ResidueSet from_residues(std::size_t modulus, std::span<const std::size_t> residues) {
    ResidueSet s(modulus);
    for (auto r : residues) s.insert(r);
    return s;
  }

  static ResidueSet full(std::size_t modulus) {
    ResidueSet s(modulus);
    std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
    s.trim();
    return s;
  }

  /// Build from the low n bits of a single word (n <= 64).
  static ResidueSet from_mask(std::size_t modulus, Word mask) {
    if (modulus > kWordBits) throw InvalidArgument("from_mask: modulus exceeds 64");
    ResidueSet s(modulus);
    s.words_[0] = mask;
    s.trim();
    return s;
  }

  std::size_t modulus() const { return n_; }

  std::size_t size() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  bool is_full() const { return size() == n_; }

  bool contains(std::size_t r) const {
    return r < n_ && ((words_[r / kWordBits] >> (r % kWordBits)) & 1u) != 0;
  }

  void insert(std::size_t r) {
    check_residue(r);
    words_[r / kWordBits] |= Word{1} << (r % kWordBits);
  }

  void erase(std::size_t r) {
    check_residue(r);
    words_[r / kWordBits] &= ~(Word{1} << (r % kWordBits));
  }

  std::vector<std::size_t> residues() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t r) { out.push_back(r); });
    return out;
  }

  /// Calls fn(r) for every member in ascending order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        fn(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::optional<std::size_t> min_element() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return std::nullopt;
  }

  std::span<const Word> words() const { return words_; }
  std::span<Word> mutable_words() { return words_; }

  /// Low word; only meaningful when modulus <= 64.
  Word mask() const { return words_[0]; }

  bool intersects(const ResidueSet& other) const {
    require_same_modulus(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
  }

  ResidueSet& operator|=(const ResidueSet& other) {
    require_same_modulus(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  ResidueSet& operator&=(const ResidueSet& other) {
    require_same_modulus(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  friend ResidueSet operator|(ResidueSet a, const ResidueSet& b) { return a |= b; }
  friend ResidueSet operator&(ResidueSet a, const ResidueSet& b) { return a &= b; }
  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

  /// {x + s mod n : x in this}.
  ResidueSet translated(std::size_t s) const {
    ResidueSet out(n_);
    or_translated(out, s);
    return out;
  }

  /// out |= (this + s). The translation is two word-level shifts: members
  /// below n - s move up by s, the rest wrap around to the bottom.
  void or_translated(ResidueSet& out, std::size_t s) const {
    require_same_modulus(out);
    s %= n_;
    if (s == 0) {
      out |= *this;
      return;
    }
    or_shift_left(out.words_, words_, s);
    or_shift_right(out.words_, words_, n_ - s);
    out.trim();
  }

  /// {-x mod n : x in this}.
  ResidueSet negated() const {
    ResidueSet out(n_);
    for_each([&](std::size_t r) { out.insert(r == 0 ? 0 : n_ - r); });
    return out;
  }

  /// Sorted bracket literal, e.g. "[1,2]".
  std::string to_string() const {
    std::string s = "[";
    bool first = true;
    for_each([&](std::size_t r) {
      if (!first) s += ',';
      s += std::to_string(r);
      first = false;
    });
    return s + "]";
  }

 private:
  void check_residue(std::size_t r) const {
    if (r >= n_) {
      throw OutOfRange("residue " + std::to_string(r) + " not in [0," + std::to_string(n_) + ")");
    }
  }

  void require_same_modulus(const ResidueSet& other) const {
    if (other.n_ != n_) {
      throw ModulusMismatch("modulus mismatch: " + std::to_string(n_) + " vs " +
                            std::to_string(other.n_));
    }
  }

  void trim() {
    std::size_t tail = n_ % kWordBits;
    if (tail != 0) words_.back() &= (Word{1} << tail) - 1;
  }

  static void or_shift_left(std::vector<Word>& dst, const std::vector<Word>& src, std::size_t s) {
    const std::size_t ws = s / kWordBits, bs = s % kWordBits;
    for (std::size_t i = dst.size(); i-- > ws;) {
      const std::size_t j = i - ws;
      Word v = src[j] << bs;
      if (bs != 0 && j > 0) v |= src[j - 1] >> (kWordBits - bs);
      dst[i] |= v;
    }
  }

  static void or_shift_right(std::vector<Word>& dst, const std::vector<Word>& src, std::size_t s) {
    const std::size_t ws = s / kWordBits, bs = s % kWordBits;
    for (std::size_t i = 0; i + ws < src.size(); ++i) {
      const std::size_t j = i + ws;
      Word v = src[j] >> bs;
      if (bs != 0 && j + 1 < src.size()) v |= src[j + 1] << (kWordBits - bs);
      dst[i] |= v;
    }
  }

  std::size_t n_;
  std::vector<Word> words_;
};

/// Parses a bracketed list of nonnegative integers such as "[1,2]" or "[ ]",
/// keeping order and repeats. Whitespace is ignored.
inline std::vector<std::size_t> parse_bracket_list(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') compact += c;
  }
  if (compact.size() < 2 || compact.front() != '[' || compact.back() != ']') {
    throw InvalidArgument("list literal must be bracketed, e.g. [1,2]");
  }
  std::vector<std::size_t> out;
  std::string_view body(compact);
  body = body.substr(1, body.size() - 2);
  if (body.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = body.find(',', pos);
    std::string_view tok = body.substr(pos, comma == std::string_view::npos ? body.npos : comma - pos);
    if (tok.empty() || tok.size() > 12 ||
        !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw InvalidArgument("malformed entry '" + std::string(tok) + "' in list literal");
    }
    out.push_back(std::stoull(std::string(tok)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

/// Set literal over Z_modulus; members may appear in any order. Throws
/// InvalidArgument on malformed input, OutOfRange on residues >= modulus.
inline ResidueSet parse_set_literal(std::string_view text, std::size_t modulus) {
  ResidueSet out(modulus);
  for (std::size_t value : parse_bracket_list(text)) {
    if (value >= modulus) {
      throw OutOfRange("residue " + std::to_string(value) + " not in [0," +
                       std::to_string(modulus) + ")");
    }
    out.insert(value);
  }
  return out;
}

/// The interval {start, start+1, ..., start+length-1} in Z_modulus.
/// length = 0 is the empty set.
struct Interval {
  Int modulus;
  Int start;
  Int length;

  Interval(Int d, Int a, Int m) : modulus(d), start(a), length(m) {
    if (d < 1) throw InvalidArgument("Interval: modulus must be positive");
    if (a < 0 || a >= d) throw OutOfRange("Interval: start must lie in [0, d)");
    if (m < 0 || m > d) throw OutOfRange("Interval: length must lie in [0, d]");
  }

  ResidueSet to_set() const {
    ResidueSet s(static_cast<std::size_t>(modulus));
    for (Int i = 0; i < length; ++i) s.insert(static_cast<std::size_t>((start + i) % modulus));
    return s;
  }
};

/// {start + i*step : i = 0..length-1} in Z_modulus. Construction enforces
/// length <= d / gcd(step, d) so the members are distinct; a singleton is
/// stored with step 1.
class ArithmeticProgression {
 public:
  ArithmeticProgression(Int d, Int start, Int step, Int length) : d_(d) {
    if (d < 1) throw InvalidArgument("ArithmeticProgression: modulus must be positive");
    if (length < 1) throw InvalidArgument("ArithmeticProgression: length must be positive");
    a_ = mod(start, d);
    b_ = length == 1 ? 1 % d : mod(step, d);
    g_ = std::gcd(b_, d);
    if (g_ == 0) g_ = d;
    if (length > d / g_) {
      throw InvalidArgument("ArithmeticProgression: length " + std::to_string(length) +
                            " exceeds d/gcd(b,d) = " + std::to_string(d / g_));
    }
    m_ = length;
  }

  Int modulus() const { return d_; }
  Int start() const { return a_; }
  Int step() const { return b_; }
  Int length() const { return m_; }
  Int step_gcd() const { return g_; }

 private:
  Int d_;
  Int a_ = 0;
  Int b_ = 1;
  Int m_ = 1;
  Int g_ = 1;
};

inline ResidueSet ap_to_set(const ArithmeticProgression& p) {
  ResidueSet s(static_cast<std::size_t>(p.modulus()));
  Int x = p.start();
  for (Int i = 0; i < p.length(); ++i) {
    s.insert(static_cast<std::size_t>(x));
    x = (x + p.step()) % p.modulus();
  }
  return s;
}

/// Preimage of a subset of Z_d under the projection Z_n -> Z_d.
inline ResidueSet lift_through_quotient(const ResidueSet& a, std::size_t n) {
  const std::size_t d = a.modulus();
  if (n == 0 || n % d != 0) {
    throw NotADivisor(std::to_string(d) + " does not divide " + std::to_string(n));
  }
  ResidueSet out(n);
  a.for_each([&](std::size_t r) {
    for (std::size_t x = r; x < n; x += d) out.insert(x);
  });
  return out;
}

/// {u*x mod n : x in A}.
inline ResidueSet dilate(const ResidueSet& a, Int u) {
  const Int n = static_cast<Int>(a.modulus());
  const Int unit = mod(u, n);
  ResidueSet out(a.modulus());
  a.for_each([&](std::size_t r) {
    out.insert(static_cast<std::size_t>((unit * static_cast<Int>(r)) % n));
  });
  return out;
}

/// True iff the members of A form an arithmetic progression in Z_n for some
/// step. The empty set is not a progression; singletons are.
inline bool is_arithmetic_progression(const ResidueSet& a) {
  const std::size_t m = a.size();
  if (m == 0) return false;
  if (m == 1) return true;
  const std::size_t n = a.modulus();
  for (std::size_t b = 1; b < n; ++b) {
    // The progression may start at any member; step through candidate starts.
    bool found = false;
    a.for_each([&](std::size_t start) {
      if (found) return;
      std::size_t x = start;
      for (std::size_t i = 0; i < m; ++i) {
        if (!a.contains(x)) return;
        x = (x + b) % n;
      }
      // m consecutive hits cover A only if they are distinct
      if (m <= n / std::gcd(b, n)) found = true;
    });
    if (found) return true;
  }
  return false;
}

/// Finite abelian group Z_{d_1} x ... x Z_{d_s} with d_1 | d_2 | ... | d_s,
/// each d_i >= 2. The empty factor list is the trivial group.
class AbelianGroup {
 public:
  AbelianGroup() = default;

  explicit AbelianGroup(std::vector<Int> factors) : factors_(std::move(factors)) {
    order_ = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i] < 2) throw InvalidArgument("invariant factors must be >= 2");
      if (i > 0 && factors_[i] % factors_[i - 1] != 0) {
        throw InvalidArgument("invariant factors must form a divisor chain");
      }
      if (order_ > (Int{1} << 40) / factors_[i]) throw InvalidArgument("group order too large");
      order_ *= factors_[i];
    }
  }

  const std::vector<Int>& invariant_factors() const { return factors_; }
  Int order() const { return order_; }
  Int exponent() const { return factors_.empty() ? 1 : factors_.back(); }
  bool is_cyclic() const { return factors_.size() <= 1; }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(factors_[i]);
    }
    return s + "]";
  }

 private:
  std::vector<Int> factors_;
  Int order_ = 1;
};

/// Every abelian group of order n, one per isomorphism class, as invariant
/// factor chains.
inline std::vector<AbelianGroup> abelian_groups_of_order(Int n) {
  if (n < 1) throw InvalidArgument("abelian_groups_of_order: n must be positive");
  std::vector<AbelianGroup> out;
  if (n == 1) {
    out.emplace_back();
    return out;
  }
  std::vector<Int> chain;
  // Build d_1 | d_2 | ... by choosing each next factor as a multiple of the
  // previous one that divides what is left of n.
  auto extend = [&](auto&& self, Int remaining, Int prev) -> void {
    if (remaining == 1) {
      out.emplace_back(chain);
      return;
    }
    for (Int d : divisors(remaining)) {
      if (d < 2 || d % prev != 0) continue;
      Int rest = remaining / d;
      // all later factors are multiples of d, so d must divide the rest too
      if (rest != 1 && rest % d != 0) continue;
      chain.push_back(d);
      self(self, rest, d);
      chain.pop_back();
    }
  };
  extend(extend, n, 1);
  return out;
}

}  // namespace klsf
