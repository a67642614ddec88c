// Acceptance suite: one check per exit criterion, one PASS/FAIL line each.
//
//   acceptance            run every criterion
//   acceptance c2 c7      run the named criteria
//
// Exit status is nonzero if any selected criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../naive.hpp"
#include "klsf/construct.hpp"
#include "klsf/formulas.hpp"
#include "klsf/oracle.hpp"
#include "klsf/sumset.hpp"
#include "klsf/survey.hpp"

using namespace klsf;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 10) failures.push_back(what);
  }
};

std::vector<SumPair> pairs_up_to(Int max_sum) {
  std::vector<SumPair> out;
  for (Int k = 2; k < max_sum; ++k)
    for (Int l = 1; l < k && k + l <= max_sum; ++l) out.emplace_back(k, l);
  return out;
}

std::string triple(Int n, const SumPair& p) {
  return "(" + std::to_string(n) + "," + std::to_string(p.k()) + "," + std::to_string(p.l()) + ")";
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. Worked example in Z_9 with (k,l) = (5,2).
Outcome worked_example() {
  Outcome o;
  const auto t0 = Clock::now();
  const SumPair p(5, 2);
  const auto rep = mu_cyclic(9, p);
  const auto w = max_witness_cyclic(9, p);
  const ResidueSet a(9, {1, 2});
  const auto five = h_fold_sumset(a, 5);
  const auto two = h_fold_sumset(a, 2);
  const bool sumfree = is_kl_sumfree(w.set, p);
  const bool complete = sumfree && is_complete(w.set, p);
  const double secs = seconds_since(t0);
  o.require(rep.mu == 2, "mu(Z_9,{5,2}) = " + std::to_string(rep.mu));
  o.require(rep.bounds.lower == 1 && rep.bounds.upper == 3, "bounds != (1,3)");
  o.require(w.set == a, "witness " + w.set.to_string() + " != [1,2]");
  o.require(sumfree && complete, "witness not sum-free and complete");
  o.require(five == ResidueSet(9, {5, 6, 7, 8, 0, 1}), "5A = " + five.to_string());
  o.require(two == ResidueSet(9, {2, 3, 4}), "2A = " + two.to_string());
  o.require(secs < 1e-3, "runtime " + std::to_string(secs) + " s >= 1 ms");
  o.detail = "mu=2 bounds=(1,3) witness=[1,2] 5A=" + five.to_string() + " 2A=" + two.to_string();
  return o;
}

// 2. Brute-force maximum equals the closed form for n <= 24, k+l <= 9.
Outcome formula_sweep() {
  Outcome o;
  std::size_t count = 0;
  auto t0 = Clock::now();
  for (Int n = 1; n <= 24; ++n) {
    for (const auto& p : pairs_up_to(9)) {
      ++count;
      const Int oracle = max_sumfree_bruteforce(n, p).optimum;
      const Int formula = mu_cyclic(n, p).mu;
      o.require(oracle == formula, triple(n, p) + ": oracle " + std::to_string(oracle) +
                                       " formula " + std::to_string(formula));
    }
  }
  const double single = seconds_since(t0);

  t0 = Clock::now();
  const auto rows = run_survey(survey_instances({1, 24}, {2, 8}, {1, 7}), 24, 8);
  const double parallel = seconds_since(t0);
  std::size_t swept = 0;
  for (const auto& r : rows) {
    if (r.k + r.l > 9) continue;
    ++swept;
    o.require(r.agree && r.mu_oracle == r.mu_formula, "survey row disagrees at n=" + std::to_string(r.n));
  }
  o.require(swept == count, "survey instance count mismatch");
  o.require(single < 600.0, "single-threaded runtime over 10 min");
  o.require(parallel < 120.0, "8-worker runtime over 2 min");
  std::ostringstream d;
  d << count << " instances agree; " << single << " s single-threaded, " << parallel << " s with 8 workers";
  o.detail = d.str();
  return o;
}

// 3. Interval maximum: formula = largest feasible length = coprime-step AP oracle.
Outcome interval_maximum() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t count = 0;
  for (Int d = 1; d <= 120; ++d) {
    for (const auto& p : pairs_up_to(12)) {
      ++count;
      const Int value = gamma(d, p).value;
      Int largest = 0;
      for (Int m = 1; m <= d; ++m)
        if (interval_feasible(d, p, m)) largest = m;
      const Int oracle = max_ap_bruteforce(d, p, StepClass::coprime).optimum;
      o.require(value == largest, triple(d, p) + ": gamma " + std::to_string(value) +
                                      " vs feasible " + std::to_string(largest));
      o.require(value == oracle, triple(d, p) + ": gamma " + std::to_string(value) + " vs AP oracle " +
                                     std::to_string(oracle));
    }
  }
  const double secs = seconds_since(t0);
  o.require(secs < 120.0, "runtime over 2 min");
  o.detail = std::to_string(count) + " (d,k,l) instances in " + std::to_string(secs) + " s";
  return o;
}

// 4. Arbitrary-step progressions never beat intervals once divisors are maximized over.
Outcome intervals_suffice() {
  Outcome o;
  const auto t0 = Clock::now();
  std::map<std::tuple<Int, Int, Int>, std::pair<Int, Int>> cache;  // (d,k,l) -> (alpha, gamma)
  auto ap_values = [&](Int d, const SumPair& p) {
    auto key = std::make_tuple(d, p.k(), p.l());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::pair<Int, Int> v{max_ap_bruteforce(d, p, StepClass::any).optimum,
                          max_ap_bruteforce(d, p, StepClass::coprime).optimum};
    cache.emplace(key, v);
    return v;
  };
  std::size_t count = 0;
  for (Int n = 1; n <= 36; ++n) {
    for (const auto& p : pairs_up_to(9)) {
      ++count;
      Int best_alpha = 0, best_gamma = 0;
      for (Int d : divisors(n)) {
        const auto [alpha, gam] = ap_values(d, p);
        best_alpha = std::max(best_alpha, alpha * (n / d));
        best_gamma = std::max(best_gamma, gam * (n / d));
      }
      o.require(best_alpha == best_gamma, triple(n, p) + ": alpha-max " + std::to_string(best_alpha) +
                                              " gamma-max " + std::to_string(best_gamma));
    }
  }
  const double secs = seconds_since(t0);
  o.require(secs < 300.0, "runtime over 5 min");
  o.detail = std::to_string(count) + " instances in " + std::to_string(secs) + " s";
  return o;
}

// 5. Sandwich bounds, prime-modulus values and the coprime-difference expression.
Outcome sandwich_and_specializations() {
  Outcome o;
  std::size_t coprime_cases = 0, prime_cases = 0;
  for (Int n = 1; n <= 24; ++n) {
    for (const auto& p : pairs_up_to(9)) {
      const auto rep = mu_cyclic(n, p);
      const Int oracle = max_sumfree_bruteforce(n, p).optimum;
      const auto b = sandwich_bounds(n, p);
      o.require(b.lower <= rep.mu && rep.mu <= b.upper, triple(n, p) + ": formula outside bounds");
      o.require(b.lower <= oracle && oracle <= b.upper, triple(n, p) + ": oracle outside bounds");
      if (std::gcd(n, p.difference()) == 1) {
        ++coprime_cases;
        o.require(mu_coprime_difference(n, p) == oracle, triple(n, p) + ": coprime expression mismatch");
      }
    }
  }
  for (Int q = 2; q <= 23; ++q) {
    if (!is_prime(q)) continue;
    for (const auto& p : pairs_up_to(9)) {
      ++prime_cases;
      const Int special = mu_prime_special(q, p);
      o.require(special == mu_cyclic(q, p).mu, triple(q, p) + ": prime value vs formula");
      o.require(special == max_sumfree_bruteforce(q, p).optimum, triple(q, p) + ": prime value vs oracle");
    }
  }
  o.detail = "bounds enclose mu on 384 instances; " + std::to_string(prime_cases) + " prime and " +
             std::to_string(coprime_cases) + " coprime cases match";
  return o;
}

// 6. Constructed witnesses verify and have size mu.
Outcome witness_validity() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t built = 0;
  for (Int n = 1; n <= 200; ++n) {
    for (const auto& p : pairs_up_to(14)) {
      const Int mu = mu_cyclic(n, p).mu;
      if (mu == 0) continue;
      const auto w = max_witness_cyclic(n, p);
      ++built;
      o.require(is_kl_sumfree(w.set, p), triple(n, p) + ": witness not sum-free");
      o.require(static_cast<Int>(w.set.size()) == mu, triple(n, p) + ": witness size != mu");
      o.require(w.certificate.holds(), triple(n, p) + ": certificate does not hold");
    }
  }
  const double secs = seconds_since(t0);
  o.require(secs < 60.0, "runtime over 1 min");
  o.detail = std::to_string(built) + " witnesses verified in " + std::to_string(secs) + " s";
  return o;
}

// 7. Minimum additive pair counts in Z_p and uniqueness up to dilation.
Outcome additive_tuples() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t cases = 0;
  for (Int p : {5, 7, 11, 13}) {
    for (Int m = ceil_div(p - 1, 3) + 1; m <= p; ++m) {
      ++cases;
      const auto res = min_additive_tuples_bruteforce(p, 2, m);
      const Int formula = p_min_formula(p, m);
      const Int t = 3 * m - p;
      o.require(formula == t * t / 4, "formula branch mismatch");
      o.require(res.optimum == formula, "p=" + std::to_string(p) + " m=" + std::to_string(m) +
                                            ": oracle " + std::to_string(res.optimum) + " formula " +
                                            std::to_string(formula));
      const auto middle = middle_set(p, m);
      for (const auto& w : res.witnesses) {
        o.require(is_unit_dilation_of(w, middle),
                  "p=" + std::to_string(p) + " m=" + std::to_string(m) + ": minimizer " + w.to_string() +
                      " is not a dilation of A(p,m)");
      }
    }
  }
  const double secs = seconds_since(t0);
  o.require(secs < 180.0, "runtime over 3 min");
  o.detail = std::to_string(cases) + " (p,m) cases in " + std::to_string(secs) + " s";
  return o;
}

// 8. Maximum sets in Z_p are arithmetic progressions when k >= 3 and p does not divide k-l.
Outcome classification() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t cases = 0;
  std::uint64_t sets = 0;
  for (Int q = 2; q <= 13; ++q) {
    if (!is_prime(q)) continue;
    for (const auto& p : pairs_up_to(9)) {
      if (p.k() < 3 || p.difference() % q == 0) continue;
      ++cases;
      const auto c = classify_max_sets(q, p);
      sets += c.count;
      o.require(c.all_are_aps, triple(q, p) + ": non-progression maximum set " +
                                   (c.exceptions.empty() ? "" : c.exceptions.front().to_string()));
    }
  }
  const double secs = seconds_since(t0);
  o.require(secs < 180.0, "runtime over 3 min");
  o.detail = std::to_string(cases) + " instances, " + std::to_string(sets) + " maximum sets, all progressions";
  return o;
}

// 9. The two-short fixture is sum-free, of size (n-1)/3, and of maximum size.
Outcome two_short_fixture() {
  Outcome o;
  std::ostringstream d;
  const SumPair p(2, 1);
  for (Int n : {13, 16, 19, 22}) {
    const auto s = fixture_two_short(n);
    const Int mu_formula = mu_cyclic(n, p).mu;
    const Int mu_oracle = max_sumfree_bruteforce(n, p).optimum;
    const Int size = static_cast<Int>(s.size());
    o.require(is_kl_sumfree(s, p), "n=" + std::to_string(n) + ": fixture not sum-free");
    o.require(size == (n - 1) / 3, "n=" + std::to_string(n) + ": size != (n-1)/3");
    o.require(size == mu_formula && size == mu_oracle,
              "n=" + std::to_string(n) + ": |fixture| = " + std::to_string(size) + " but mu(Z_n,{2,1}) = " +
                  std::to_string(mu_oracle) + " (oracle), " + std::to_string(mu_formula) + " (formula)");
    d << "n=" << n << " |A|=" << size << " mu=" << mu_oracle << "; ";
  }
  o.detail = d.str();
  return o;
}

// 10. Engine soundness against nested loops.
Outcome engine_soundness() {
  Outcome o;
  std::mt19937_64 rng(20240611);
  std::size_t sumset_mismatch = 0, count_mismatch = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng() % 48;
    const Int h = 1 + static_cast<Int>(rng() % 6);
    const unsigned density = static_cast<unsigned>(5 + rng() % 40);
    ResidueSet a(n);
    for (std::size_t x = 0; x < n; ++x)
      if (rng() % 100 < density) a.insert(x);
    if (naive::to_std(h_fold_sumset(a, h)) != naive::h_fold(naive::to_std(a), h, static_cast<long>(n))) {
      ++sumset_mismatch;
    }
  }
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 48;
    ResidueSet a(n);
    for (std::size_t x = 0; x < n; ++x)
      if (rng() % 2) a.insert(x);
    if (count_additive_tuples(a, 2) != naive::pair_count(naive::to_std(a), static_cast<long>(n))) ++count_mismatch;
  }
  o.require(sumset_mismatch == 0, std::to_string(sumset_mismatch) + " sumset mismatches");
  o.require(count_mismatch == 0, std::to_string(count_mismatch) + " count mismatches");
  o.detail = "500 sumset and 200 counting instances, 0 mismatches";
  return o;
}

// Noncyclic substitute: exhaustive maximum in every abelian group of order <= 32
// equals the lifted lower bound for (k,l) = (2,1).
Outcome noncyclic_groups() {
  Outcome o;
  const auto t0 = Clock::now();
  const SumPair p(2, 1);
  std::size_t groups = 0;
  for (Int n = 1; n <= 32; ++n) {
    for (const auto& g : abelian_groups_of_order(n)) {
      ++groups;
      const GroupTable table(g);
      const Int exhaustive = max_sumfree_group_bruteforce(table, p).optimum;
      const auto bound = mu_noncyclic_lower(g, p);
      o.require(exhaustive == bound.bound, "G=" + g.to_string() + ": exhaustive " + std::to_string(exhaustive) +
                                               " vs bound " + std::to_string(bound.bound));
      if (bound.bound > 0) {
        const auto lifted = table.lift_from_exponent(max_witness_cyclic(g.exponent(), p).set);
        o.require(table.is_kl_sumfree(lifted, p) &&
                      std::popcount(lifted) == static_cast<int>(bound.bound),
                  "G=" + g.to_string() + ": lifted witness invalid");
      }
    }
  }
  const double secs = seconds_since(t0);
  o.require(secs < 600.0, "runtime over 10 min");
  o.detail = std::to_string(groups) + " groups in " + std::to_string(secs) + " s";
  return o;
}

struct Criterion {
  std::string id;
  std::string title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {"c1", "worked example in Z_9, (k,l)=(5,2)", worked_example},
      {"c2", "brute-force mu equals formula, n<=24, k+l<=9", formula_sweep},
      {"c3", "interval maximum: formula, feasibility and coprime AP oracle, d<=120, k+l<=12", interval_maximum},
      {"c4", "intervals suffice: alpha and gamma maxima agree, n<=36, k+l<=9", intervals_suffice},
      {"c5", "sandwich bounds, prime values, coprime-difference expression", sandwich_and_specializations},
      {"c6", "constructed witnesses verify with size mu, n<=200, k+l<=14", witness_validity},
      {"c7", "additive pair minimum and dilation uniqueness, p in {5,7,11,13}", additive_tuples},
      {"c8", "maximum sets are progressions, p<=13, k>=3", classification},
      {"c9", "two-short fixture is sum-free of size (n-1)/3 = mu, n in {13,16,19,22}", two_short_fixture},
      {"c10", "engine soundness against nested loops", engine_soundness},
      {"c11", "noncyclic groups of order <= 32: exhaustive mu equals lifted bound", noncyclic_groups},
  };

  std::vector<std::string> selected(argv + 1, argv + argc);
  int failed = 0, ran = 0;
  for (const auto& c : all) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    ++ran;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %-4s %s -- %s\n", o.pass ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(),
                o.detail.c_str());
    for (const auto& f : o.failures) std::printf("       %s\n", f.c_str());
    if (!o.pass) ++failed;
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criteria matched\n");
    return 2;
  }
  std::printf("%d/%d criteria passed\n", ran - failed, ran);
  return failed == 0 ? 0 : 1;
}
