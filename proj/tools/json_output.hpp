#pragma once

#include <json.hpp>

#include "klsf/construct.hpp"
#include "klsf/formulas.hpp"
#include "klsf/group.hpp"
#include "klsf/oracle.hpp"

namespace klsf::cli {

inline nlohmann::json residues_json(const ResidueSet& s) {
  nlohmann::json arr = nlohmann::json::array();
  s.for_each([&](std::size_t r) { arr.push_back(r); });
  return arr;
}

inline nlohmann::json mu_report_json(const MuReport& rep) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : rep.table) {
    rows.push_back({{"d", row.gamma.d},
                    {"delta", row.gamma.delta},
                    {"f", row.gamma.f},
                    {"r", row.gamma.r},
                    {"gamma", row.gamma.value},
                    {"contribution", row.contribution}});
  }
  return {{"n", rep.n},
          {"k", rep.k},
          {"l", rep.l},
          {"mu", rep.mu},
          {"best_divisor", rep.best_divisor},
          {"lower_bound", rep.bounds.lower},
          {"upper_bound", rep.bounds.upper},
          {"divisors", rows}};
}

inline nlohmann::json witness_json(Int n, Int k, Int l, const CyclicWitness& w) {
  return {{"n", n},
          {"k", k},
          {"l", l},
          {"size", w.set.size()},
          {"best_divisor", w.best_divisor},
          {"set", residues_json(w.set)},
          {"certificate",
           {{"C", w.certificate.C},
            {"a", w.certificate.a},
            {"b", w.certificate.b},
            {"delta", w.certificate.delta}}}};
}

}  // namespace klsf::cli
