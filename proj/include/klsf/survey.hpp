#pragma once

// Grid survey: formula, sandwich bounds and (below a size cap) the
// brute-force maximum for every (n, k, l) in a box, emitted as CSV in
// canonical (n, k, l) order regardless of worker count.

#include <atomic>
#include <charconv>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "klsf/errors.hpp"
#include "klsf/formulas.hpp"
#include "klsf/oracle.hpp"

namespace klsf {

struct IntRange {
  Int lo = 0;
  Int hi = -1;
};

/// "a..b" or a single integer "a".
inline IntRange parse_range(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    Int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw InvalidArgument("malformed range '" + std::string(text) + "'");
    }
    return v;
  };
  const auto dots = text.find("..");
  IntRange r;
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(text.substr(0, dots));
    r.hi = parse_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw InvalidArgument("empty range '" + std::string(text) + "'");
  return r;
}

struct SurveyRow {
  Int n = 0;
  Int k = 0;
  Int l = 0;
  Int mu_formula = 0;
  Int lower = 0;
  Int upper = 0;
  std::optional<Int> mu_oracle;
  bool agree = true;
};

struct SurveyInstance {
  Int n;
  Int k;
  Int l;
};

/// All (n, k, l) in the box with n >= 1 and k > l >= 1, in canonical order.
inline std::vector<SurveyInstance> survey_instances(IntRange n, IntRange k, IntRange l) {
  std::vector<SurveyInstance> out;
  for (Int ni = std::max<Int>(n.lo, 1); ni <= n.hi; ++ni) {
    for (Int ki = k.lo; ki <= k.hi; ++ki) {
      for (Int li = std::max<Int>(l.lo, 1); li <= l.hi; ++li) {
        if (ki > li) out.push_back({ni, ki, li});
      }
    }
  }
  return out;
}

inline SurveyRow survey_one(const SurveyInstance& inst, Int oracle_max) {
  const SumPair pair(inst.k, inst.l);
  const MuReport rep = mu_cyclic(inst.n, pair);
  SurveyRow row{inst.n, inst.k, inst.l, rep.mu, rep.bounds.lower, rep.bounds.upper, std::nullopt, true};
  row.agree = row.lower <= row.mu_formula && row.mu_formula <= row.upper;
  if (inst.n <= oracle_max) {
    SearchOptions opts;
    opts.size_cap = oracle_max;
    row.mu_oracle = max_sumfree_bruteforce(inst.n, pair, opts).optimum;
    row.agree = row.agree && *row.mu_oracle == row.mu_formula;
  }
  return row;
}

/// Evaluates every instance on `workers` threads. Rows come back in the
/// order of `instances`.
inline std::vector<SurveyRow> run_survey(const std::vector<SurveyInstance>& instances, Int oracle_max,
                                         unsigned workers) {
  std::vector<SurveyRow> rows(instances.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      rows[i] = survey_one(instances[i], oracle_max);
    }
  };
  workers = std::max(1u, workers);
  if (workers == 1) {
    work();
    return rows;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  pool.clear();  // joins
  return rows;
}

inline void write_survey_csv(std::ostream& out, const std::vector<SurveyRow>& rows) {
  out << "n,k,l,mu_formula,lower5,upper5,mu_oracle,agree\r\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.k << ',' << r.l << ',' << r.mu_formula << ',' << r.lower << ','
        << r.upper << ',';
    if (r.mu_oracle) out << *r.mu_oracle;
    out << ',' << (r.agree ? "true" : "false") << "\r\n";
  }
}

}  // namespace klsf
