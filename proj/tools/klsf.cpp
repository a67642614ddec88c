// klsf: command-line front end for the (k,l)-sum-free set library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 no witness, 4 oracle cap exceeded.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "json_output.hpp"
#include "klsf/construct.hpp"
#include "klsf/formulas.hpp"
#include "klsf/group.hpp"
#include "klsf/oracle.hpp"
#include "klsf/sumset.hpp"
#include "klsf/survey.hpp"

namespace {

using klsf::Int;
using nlohmann::json;

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNoWitness = 3, kOracleCap = 4 };

struct Triple {
  Int n = 0;
  Int k = 0;
  Int l = 0;
};

void add_triple(CLI::App* cmd, Triple& t) {
  cmd->add_option("n", t.n, "group order")->required();
  cmd->add_option("k", t.k, "larger exponent")->required();
  cmd->add_option("l", t.l, "smaller exponent")->required();
}

void require_modulus(Int n) {
  if (n < 1) throw klsf::InvalidArgument("n must be positive");
}

int cmd_mu(const Triple& t, bool as_json) {
  require_modulus(t.n);
  const auto rep = klsf::mu_cyclic(t.n, klsf::SumPair(t.k, t.l));
  if (as_json) {
    std::cout << klsf::cli::mu_report_json(rep).dump() << '\n';
    return kOk;
  }
  std::cout << "Z_" << rep.n << "  (k,l) = (" << rep.k << "," << rep.l << ")\n"
            << "mu=" << rep.mu << " best_divisor=" << rep.best_divisor << " bounds=("
            << rep.bounds.lower << "," << rep.bounds.upper << ")\n"
            << std::setw(8) << "d" << std::setw(8) << "delta" << std::setw(6) << "f" << std::setw(6)
            << "r" << std::setw(8) << "gamma" << std::setw(10) << "gamma*n/d" << '\n';
  for (const auto& row : rep.table) {
    std::cout << std::setw(8) << row.gamma.d << std::setw(8) << row.gamma.delta << std::setw(6)
              << row.gamma.f << std::setw(6) << row.gamma.r << std::setw(8) << row.gamma.value
              << std::setw(10) << row.contribution << '\n';
  }
  return kOk;
}

int cmd_construct(const Triple& t, bool as_json) {
  require_modulus(t.n);
  const klsf::SumPair pair(t.k, t.l);
  try {
    const auto w = klsf::max_witness_cyclic(t.n, pair);
    if (as_json) {
      std::cout << klsf::cli::witness_json(t.n, t.k, t.l, w).dump() << '\n';
    } else {
      const auto& c = w.certificate;
      std::cout << w.set.to_string() << '\n'
                << "size=" << w.set.size() << " best_divisor=" << w.best_divisor << '\n'
                << "certificate: interval [" << c.a << "," << c.a + c.m - 1 << "] in Z_" << c.d
                << ", delta=" << c.delta << ", C=" << c.C << ", a=" << c.a << ", b=" << c.b << '\n';
    }
    return kOk;
  } catch (const klsf::NoWitness&) {
    std::cerr << "mu = 0: no nonempty (" << t.k << "," << t.l << ")-sum-free set in Z_" << t.n
              << '\n';
    return kNoWitness;
  }
}

int cmd_verify(const Triple& t, const std::string& literal, bool complete) {
  require_modulus(t.n);
  const klsf::SumPair pair(t.k, t.l);
  const auto set = klsf::parse_set_literal(literal, static_cast<std::size_t>(t.n));
  if (auto bad = klsf::sumfree_violation(set, pair)) {
    std::cout << "NOT SUMFREE violation=" << *bad << '\n';
    return kVerifyFailed;
  }
  std::cout << "SUMFREE";
  if (complete) std::cout << (klsf::is_complete(set, pair) ? " COMPLETE" : " INCOMPLETE");
  std::cout << '\n';
  return kOk;
}

struct SurveyArgs {
  std::string n_range, k_range, l_range;
  Int oracle_max = 0;
  std::string out;
  unsigned workers = 1;
};

int cmd_survey(const SurveyArgs& a) {
  const auto instances = klsf::survey_instances(klsf::parse_range(a.n_range),
                                                klsf::parse_range(a.k_range),
                                                klsf::parse_range(a.l_range));
  if (instances.empty()) throw klsf::InvalidArgument("no instances with n >= 1 and k > l >= 1");
  const Int cap = klsf::oracle_cap_from_env();
  if (a.oracle_max > cap) {
    std::cerr << "--oracle-max " << a.oracle_max << " exceeds oracle cap " << cap
              << " (set KLSF_ORACLE_MAX to raise it, at most 64)\n";
    return kOracleCap;
  }
  const auto rows = klsf::run_survey(instances, a.oracle_max, a.workers);
  if (a.out.empty()) {
    klsf::write_survey_csv(std::cout, rows);
  } else {
    std::ofstream file(a.out, std::ios::binary);
    if (!file) throw klsf::InvalidArgument("cannot open " + a.out);
    klsf::write_survey_csv(file, rows);
  }
  for (const auto& r : rows) {
    if (!r.agree) return kVerifyFailed;
  }
  return kOk;
}

int cmd_ptuples(Int p, Int m, bool run_oracle, bool as_json) {
  const Int formula = klsf::p_min_formula(p, m);
  json j{{"p", p}, {"m", m}, {"formula", formula}};
  bool consistent = true;
  if (run_oracle) {
    klsf::OracleResult res;
    try {
      res = klsf::min_additive_tuples_bruteforce(p, 2, m);
    } catch (const klsf::InstanceTooLarge& e) {
      std::cerr << e.what() << '\n';
      return kOracleCap;
    }
    j["oracle"] = res.optimum;
    j["minimizers"] = res.witness_count;
    consistent = res.optimum == formula;
    if (m > klsf::ceil_div(p - 1, 3)) {
      const auto middle = klsf::middle_set(p, m);
      bool all = true;
      for (const auto& w : res.witnesses) all = all && klsf::is_unit_dilation_of(w, middle);
      j["all_minimizers_dilations"] = all;
      consistent = consistent && all;
    } else {
      j["all_minimizers_dilations"] = nullptr;
    }
  }
  if (as_json) {
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "formula " << formula << '\n';
    if (run_oracle) {
      std::cout << "oracle " << j["oracle"].get<Int>() << '\n'
                << "minimizers " << j["minimizers"].get<std::uint64_t>() << '\n'
                << "all minimizers dilations: ";
      if (j["all_minimizers_dilations"].is_null()) {
        std::cout << "n/a (m below the sum-free threshold)\n";
      } else {
        std::cout << (j["all_minimizers_dilations"].get<bool>() ? "true" : "false") << '\n';
      }
    }
  }
  return consistent ? kOk : kVerifyFailed;
}

int cmd_oracle(const Triple& t, bool all, bool as_json) {
  require_modulus(t.n);
  klsf::SearchOptions opts;
  opts.enumerate_all = all;
  opts.size_cap = klsf::oracle_cap_from_env();
  klsf::OracleResult res;
  try {
    res = klsf::max_sumfree_bruteforce(t.n, klsf::SumPair(t.k, t.l), opts);
  } catch (const klsf::InstanceTooLarge& e) {
    std::cerr << e.what() << '\n';
    return kOracleCap;
  }
  if (as_json) {
    json ws = json::array();
    for (const auto& w : res.witnesses) ws.push_back(klsf::cli::residues_json(w));
    std::cout << json{{"n", res.n},
                      {"k", res.k},
                      {"l", res.l},
                      {"optimum", res.optimum},
                      {"witness_count", res.witness_count},
                      {"witnesses", ws},
                      {"nodes_explored", res.nodes_explored}}
                     .dump()
              << '\n';
    return kOk;
  }
  std::cout << "optimum=" << res.optimum << " nodes=" << res.nodes_explored;
  if (all) std::cout << " maximum_sets=" << res.witness_count;
  std::cout << '\n';
  for (const auto& w : res.witnesses) std::cout << w.to_string() << '\n';
  return kOk;
}

int cmd_noncyclic(const std::string& factors, const klsf::SumPair& pair, bool as_json) {
  std::vector<Int> list;
  for (auto f : klsf::parse_bracket_list(factors)) list.push_back(static_cast<Int>(f));
  const klsf::AbelianGroup g(list);
  const auto res = klsf::mu_noncyclic_lower(g, pair);
  if (as_json) {
    std::cout << json{{"group", g.invariant_factors()},
                      {"order", g.order()},
                      {"exponent", g.exponent()},
                      {"k", pair.k()},
                      {"l", pair.l()},
                      {"bound", res.bound},
                      {"best_divisor", res.best_divisor},
                      {"exactness_known", res.exactness_known}}
                     .dump()
              << '\n';
  } else {
    std::cout << "G=" << g.to_string() << " order=" << g.order() << " exponent=" << g.exponent()
              << '\n'
              << "lower_bound=" << res.bound << " exact=" << (res.exactness_known ? "yes" : "unknown")
              << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum (k,l)-sum-free sets in finite abelian groups"};
  app.require_subcommand(1);

  Triple t;
  bool as_json = false;

  auto* mu = app.add_subcommand("mu", "maximum size of a (k,l)-sum-free subset of Z_n");
  add_triple(mu, t);
  mu->add_flag("--json", as_json, "emit JSON");

  auto* construct = app.add_subcommand("construct", "build a maximum witness with certificate");
  add_triple(construct, t);
  construct->add_flag("--json", as_json, "emit JSON");

  std::string literal;
  bool complete = false;
  auto* verify = app.add_subcommand("verify", "check that a set is (k,l)-sum-free");
  add_triple(verify, t);
  verify->add_option("set", literal, "set literal, e.g. [1,2]")->required();
  verify->add_flag("--complete", complete, "also test whether kA and lA partition Z_n");

  SurveyArgs survey_args;
  auto* survey = app.add_subcommand("survey", "formula vs oracle over a grid, as CSV");
  survey->add_option("n_range", survey_args.n_range, "n range, a..b")->required();
  survey->add_option("k_range", survey_args.k_range, "k range, a..b")->required();
  survey->add_option("l_range", survey_args.l_range, "l range, a..b")->required();
  survey->add_option("--oracle-max", survey_args.oracle_max, "run the oracle for n <= N");
  survey->add_option("--out", survey_args.out, "CSV output file (default stdout)");
  survey->add_option("--workers", survey_args.workers, "worker threads")->check(CLI::PositiveNumber);

  Int p = 0, m = 0;
  bool with_oracle = false;
  auto* ptuples = app.add_subcommand("ptuples", "minimum number of pairs summing into an m-subset of Z_p");
  ptuples->add_option("p", p, "prime modulus")->required();
  ptuples->add_option("m", m, "subset size")->required();
  ptuples->add_flag("--oracle", with_oracle, "also run the exhaustive minimum");
  ptuples->add_flag("--json", as_json, "emit JSON");

  bool enumerate_all = false;
  auto* oracle = app.add_subcommand("oracle", "exhaustive maximum (k,l)-sum-free search in Z_n");
  add_triple(oracle, t);
  oracle->add_flag("--all", enumerate_all, "enumerate every maximum set");
  oracle->add_flag("--json", as_json, "emit JSON");

  std::string factors;
  auto* noncyclic = app.add_subcommand("noncyclic", "lower bound for a group given by invariant factors");
  noncyclic->add_option("group", factors, "invariant factors, e.g. [2,4]")->required();
  noncyclic->add_option("k", t.k, "larger exponent")->required();
  noncyclic->add_option("l", t.l, "smaller exponent")->required();
  noncyclic->add_flag("--json", as_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*mu) return cmd_mu(t, as_json);
    if (*construct) return cmd_construct(t, as_json);
    if (*verify) return cmd_verify(t, literal, complete);
    if (*survey) return cmd_survey(survey_args);
    if (*ptuples) return cmd_ptuples(p, m, with_oracle, as_json);
    if (*oracle) return cmd_oracle(t, enumerate_all, as_json);
    if (*noncyclic) return cmd_noncyclic(factors, klsf::SumPair(t.k, t.l), as_json);
  } catch (const klsf::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const klsf::OutOfRange& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const klsf::InstanceTooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOracleCap;
  }
  return kUsage;
}
