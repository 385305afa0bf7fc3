// Command-line front end: family polynomials, closed forms, mod-p
// factorizations, and the theorem verification suites.
//
// Exit codes: 0 all good, 1 theorem mismatch, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibotomic/bridge.hpp"
#include "fibotomic/families.hpp"
#include "fibotomic/modfactor.hpp"
#include "fibotomic/numth.hpp"
#include "fibotomic/resdisc.hpp"
#include "fibotomic/verify.hpp"

using nlohmann::json;
namespace fb = fibotomic;

namespace {

constexpr const char* kSchemaVersion = "1";

json make_record(const std::string& command, json inputs, json result,
                 const std::string& status) {
  return json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)},
              {"status", status}};
}

void print_record(const json& record) { std::cout << record.dump() << "\n"; }

bool usage_error(const fb::error& e) {
  switch (e.code()) {
    case fb::errc::domain_too_small:
    case fb::errc::degree_too_small:
    case fb::errc::bad_range:
    case fb::errc::bad_input:
    case fb::errc::not_prime:
    case fb::errc::not_coprime:
      return true;
    default:
      return false;
  }
}

struct PolyArgs {
  std::string family;
  unsigned n = 0;
  std::string format = "text";
};

int cmd_poly(const PolyArgs& args, fb::FamilyCache& cache) {
  const fb::IntPoly* poly = nullptr;
  if (args.family == "fib") {
    poly = &cache.fibonacci(args.n);
  } else if (args.family == "psi") {
    poly = &cache.fibotomic(args.n);
  } else {
    poly = &cache.cyclotomic(args.n);
  }
  if (args.format == "text") {
    std::cout << fb::to_string(*poly) << "\n";
    return 0;
  }
  json result{{"degree", poly->degree() ? json(*poly->degree()) : json()},
              {"coeffs", fb::coeff_strings(*poly)}};
  print_record(make_record(
      "poly", json{{"family", args.family}, {"n", std::to_string(args.n)}},
      std::move(result), "ok"));
  return 0;
}

struct DiscArgs {
  unsigned n = 0;
  std::string method = "both";
  std::string format = "text";
};

int cmd_disc(const DiscArgs& args, fb::FamilyCache& cache) {
  std::string formula, engine;
  bool mismatch = false;
  if (args.method != "engine") formula = fb::disc_formula_psi(args.n).str();
  if (args.method != "formula")
    engine = fb::discriminant(cache.fibotomic(args.n)).str();
  if (args.method == "both") mismatch = (formula != engine);
  const std::string status = mismatch ? "mismatch" : "ok";
  if (args.format == "text") {
    std::cout << "n=" << args.n;
    if (!formula.empty()) std::cout << " formula=" << formula;
    if (!engine.empty()) std::cout << " engine=" << engine;
    std::cout << " status=" << status << "\n";
  } else {
    json result;
    if (!formula.empty()) result["formula"] = formula;
    if (!engine.empty()) result["engine"] = engine;
    print_record(make_record(
        "disc",
        json{{"n", std::to_string(args.n)}, {"method", args.method}},
        std::move(result), status));
  }
  return mismatch ? 1 : 0;
}

struct ResArgs {
  unsigned m = 0, n = 0;
  std::string method = "both";
  std::string format = "text";
};

int cmd_res(const ResArgs& args, fb::FamilyCache& cache) {
  std::string formula, engine;
  bool mismatch = false;
  if (args.method != "engine")
    formula = fb::res_formula_psi(args.m, args.n).str();
  if (args.method != "formula")
    engine = fb::resultant_subresultant(cache.fibotomic(args.m),
                                        cache.fibotomic(args.n))
                 .str();
  if (args.method == "both") mismatch = (formula != engine);
  const std::string status = mismatch ? "mismatch" : "ok";
  if (args.format == "text") {
    std::cout << "m=" << args.m << " n=" << args.n;
    if (!formula.empty()) std::cout << " formula=" << formula;
    if (!engine.empty()) std::cout << " engine=" << engine;
    std::cout << " status=" << status << "\n";
  } else {
    json result;
    if (!formula.empty()) result["formula"] = formula;
    if (!engine.empty()) result["engine"] = engine;
    print_record(make_record("res",
                             json{{"m", std::to_string(args.m)},
                                  {"n", std::to_string(args.n)},
                                  {"method", args.method}},
                             std::move(result), status));
  }
  return mismatch ? 1 : 0;
}

struct FactorArgs {
  unsigned n = 0;
  std::uint32_t p = 0;
  std::uint64_t seed = 0;
  std::string format = "text";
};

int cmd_factor(const FactorArgs& args, fb::FamilyCache& cache) {
  fb::ReconciliationReport rep = fb::reconcile(args.n, args.p, args.seed, cache);
  std::ostringstream observed;
  for (std::size_t i = 0; i < rep.observed.factors.size(); ++i) {
    const auto& [factor, mult] = rep.observed.factors[i];
    if (i) observed << " * ";
    observed << "(" << fb::to_string(factor) << ")";
    if (mult > 1) observed << "^" << mult;
  }
  const std::string status = rep.ok() ? "ok" : "mismatch";
  if (args.format == "text") {
    std::cout << "n=" << rep.n << " p=" << rep.p << " k=" << rep.k
              << " m=" << rep.m << "\n";
    std::cout << "predicted: " << rep.predicted.str() << "\n";
    std::cout << "observed: " << observed.str() << "\n";
    if (rep.formula_delta) {
      std::cout << "delta: formula=" << *rep.formula_delta << " oracle="
                << (rep.oracle_delta ? std::to_string(*rep.oracle_delta)
                                     : std::string("-"))
                << " s_independent=" << (rep.oracle_s_independent ? "yes" : "no")
                << "\n";
    }
    std::cout << "status: " << status << "\n";
    if (!rep.detail.empty()) std::cout << "detail: " << rep.detail << "\n";
  } else {
    json factors = json::array();
    for (const auto& [factor, mult] : rep.observed.factors) {
      factors.push_back(json{{"coeffs", fb::coeff_strings(factor)},
                             {"multiplicity", mult}});
    }
    json result{{"k", rep.k},
                {"m", rep.m},
                {"predicted", rep.predicted.str()},
                {"factors", std::move(factors)}};
    if (rep.formula_delta) {
      result["delta_formula"] = *rep.formula_delta;
      if (rep.oracle_delta) result["delta_oracle"] = *rep.oracle_delta;
      result["delta_s_independent"] = rep.oracle_s_independent;
    }
    if (!rep.detail.empty()) result["detail"] = rep.detail;
    print_record(make_record("factor",
                             json{{"n", std::to_string(args.n)},
                                  {"p", std::to_string(args.p)},
                                  {"seed", std::to_string(args.seed)}},
                             std::move(result), status));
  }
  return rep.ok() ? 0 : 1;
}

struct VerifyArgs {
  std::string suite;
  int max_n = 60;
  std::string primes = "2,3,5,7,11,13,101";
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string inject_fault;
  std::string format = "text";
};

std::vector<std::uint32_t> parse_primes(const std::string& csv) {
  std::vector<std::uint32_t> primes;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    const unsigned long v = std::stoul(tok);
    if (!fb::is_prime(v))
      fb::fail(fb::errc::not_prime, "--primes entry " + tok + " is not prime");
    primes.push_back(static_cast<std::uint32_t>(v));
  }
  if (primes.empty()) fb::fail(fb::errc::bad_input, "--primes list is empty");
  return primes;
}

int cmd_verify(const VerifyArgs& args, fb::FamilyCache& cache) {
  if (args.max_n < 2) fb::fail(fb::errc::bad_input, "--max-n must be >= 2");
  fb::VerifyOptions opts;
  opts.jobs = args.jobs;
  opts.seed = args.seed;
  if (args.inject_fault == "disc-formula") {
    opts.fault_disc_formula = true;
  } else if (!args.inject_fault.empty()) {
    fb::fail(fb::errc::bad_input, "unknown fault: " + args.inject_fault);
  }
  const int n = args.max_n;
  const std::vector<std::uint32_t> primes = parse_primes(args.primes);

  std::vector<fb::SuiteResult> results;
  auto want = [&](const char* name) {
    return args.suite == "all" || args.suite == name;
  };
  if (want("product")) results.push_back(fb::run_product_suite(n, opts, cache));
  if (want("constant")) results.push_back(fb::run_constant_suite(n, opts, cache));
  if (want("identities"))
    results.push_back(fb::run_identities_suite(n, n, opts, cache));
  if (want("disc")) results.push_back(fb::run_disc_suite(n, opts, cache));
  if (want("res")) results.push_back(fb::run_res_suite(n, n, opts, cache));
  if (want("bridge"))
    results.push_back(fb::run_bridge_suite(n, n, std::min(n, 31), opts, cache));
  if (want("modp")) results.push_back(fb::run_modp_suite(n, primes, opts, cache));
  if (want("homog"))
    results.push_back(fb::run_homog_suite(n, std::min(n, 40), opts, cache));

  std::size_t total_failed = 0;
  if (args.format == "text") {
    std::cout << "suite        checks  passed  failed  first_failure\n";
    for (const fb::SuiteResult& suite : results) {
      total_failed += suite.failed();
      std::cout << suite.name;
      for (std::size_t i = suite.name.size(); i < 13; ++i) std::cout << ' ';
      std::ostringstream row;
      row << suite.checks.size() << "\t" << suite.passed() << "\t"
          << suite.failed() << "\t";
      const fb::CheckResult* first = suite.first_failure();
      row << (first ? first->instance + " " + first->detail : std::string("-"));
      std::cout << row.str() << "\n";
    }
    std::cout << (total_failed == 0 ? "RESULT: pass" : "RESULT: fail") << "\n";
  } else {
    json suites = json::array();
    for (const fb::SuiteResult& suite : results) {
      total_failed += suite.failed();
      json entry{{"name", suite.name},
                 {"checks", suite.checks.size()},
                 {"passed", suite.passed()},
                 {"failed", suite.failed()}};
      if (const fb::CheckResult* first = suite.first_failure()) {
        entry["first_failure"] =
            json{{"instance", first->instance}, {"detail", first->detail}};
      }
      suites.push_back(std::move(entry));
    }
    // --jobs is an execution detail, deliberately absent from the record so
    // output stays byte-identical across job counts.
    print_record(make_record("verify",
                             json{{"suite", args.suite},
                                  {"max_n", std::to_string(args.max_n)},
                                  {"primes", args.primes},
                                  {"seed", std::to_string(args.seed)}},
                             json{{"suites", std::move(suites)}},
                             total_failed == 0 ? "ok" : "mismatch"));
  }
  return total_failed == 0 ? 0 : 1;
}

struct TableArgs {
  std::string kind;
  int max_n = 20;
  std::string primes = "2";
  std::uint64_t seed = 0;
  std::string format = "csv";
};

int cmd_table(const TableArgs& args, fb::FamilyCache& cache) {
  if (args.max_n < 2) fb::fail(fb::errc::bad_input, "--max-n must be >= 2");
  if (args.kind == "disc") {
    if (args.format == "csv") std::cout << "n,phi,formula,engine\n";
    for (int n = 2; n <= args.max_n; ++n) {
      const std::string formula = fb::disc_formula_psi(n).str();
      const std::string engine =
          fb::discriminant(cache.fibotomic(n)).str();
      if (args.format == "csv") {
        std::cout << n << "," << fb::totient(n) << "," << formula << ","
                  << engine << "\n";
      } else {
        print_record(make_record("table",
                                 json{{"kind", "disc"}, {"n", std::to_string(n)}},
                                 json{{"phi", std::to_string(fb::totient(n))},
                                      {"formula", formula},
                                      {"engine", engine}},
                                 formula == engine ? "ok" : "mismatch"));
      }
    }
    return 0;
  }
  if (args.kind == "res") {
    if (args.format == "csv") std::cout << "m,n,formula,engine\n";
    for (int m = 2; m < args.max_n; ++m) {
      for (int n = m + 1; n <= args.max_n; ++n) {
        const std::string formula = fb::res_formula_psi(m, n).str();
        const std::string engine =
            fb::resultant_subresultant(cache.fibotomic(m), cache.fibotomic(n))
                .str();
        if (args.format == "csv") {
          std::cout << m << "," << n << "," << formula << "," << engine << "\n";
        } else {
          print_record(make_record(
              "table",
              json{{"kind", "res"},
                   {"m", std::to_string(m)},
                   {"n", std::to_string(n)}},
              json{{"formula", formula}, {"engine", engine}},
              formula == engine ? "ok" : "mismatch"));
        }
      }
    }
    return 0;
  }
  // shape
  if (args.format == "csv") std::cout << "n,p,predicted,observed,status\n";
  for (int n = 2; n <= args.max_n; ++n) {
    for (std::uint32_t p : parse_primes(args.primes)) {
      fb::ReconciliationReport rep = fb::reconcile(n, p, args.seed, cache);
      const std::string predicted = rep.predicted.str();
      const std::string observed = fb::shape_parts_str(rep.observed_parts);
      const std::string status = rep.ok() ? "ok" : "mismatch";
      if (args.format == "csv") {
        std::cout << n << "," << p << "," << predicted << "," << observed
                  << "," << status << "\n";
      } else {
        print_record(make_record(
            "table",
            json{{"kind", "shape"},
                 {"n", std::to_string(n)},
                 {"p", std::to_string(p)}},
            json{{"predicted", predicted}, {"observed", observed}}, status));
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact constructions and machine verification for the Fibonacci, "
      "fibotomic, and cyclotomic polynomial families"};
  app.require_subcommand(1);

  PolyArgs poly_args;
  CLI::App* poly = app.add_subcommand("poly", "print a family polynomial");
  poly->add_option("family", poly_args.family, "fib | psi | cyclo")
      ->required()
      ->check(CLI::IsMember({"fib", "psi", "cyclo"}));
  poly->add_option("n", poly_args.n, "index, n >= 1")->required();
  poly->add_option("--format", poly_args.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  DiscArgs disc_args;
  CLI::App* disc =
      app.add_subcommand("disc", "discriminant of Psi_n (closed form / engine)");
  disc->add_option("n", disc_args.n, "index, n >= 2")->required();
  disc->add_option("--method", disc_args.method, "formula | engine | both")
      ->check(CLI::IsMember({"formula", "engine", "both"}));
  disc->add_option("--format", disc_args.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  ResArgs res_args;
  CLI::App* res =
      app.add_subcommand("res", "resultant of Psi_m, Psi_n (closed form / engine)");
  res->add_option("m", res_args.m, "2 <= m < n")->required();
  res->add_option("n", res_args.n, "2 <= m < n")->required();
  res->add_option("--method", res_args.method, "formula | engine | both")
      ->check(CLI::IsMember({"formula", "engine", "both"}));
  res->add_option("--format", res_args.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  FactorArgs factor_args;
  CLI::App* factor = app.add_subcommand(
      "factor", "factor Psi_n over Z_p and reconcile with the predicted shape");
  factor->add_option("n", factor_args.n, "index, n >= 2")->required();
  factor->add_option("p", factor_args.p, "prime modulus, p < 2^31")->required();
  factor->add_option("--seed", factor_args.seed, "equal-degree splitting seed")
      ->envname("FIBOTOMIC_SEED");
  factor->add_option("--format", factor_args.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  VerifyArgs verify_args;
  CLI::App* verify =
      app.add_subcommand("verify", "run a verification suite; exit 1 on mismatch");
  verify
      ->add_option("suite", verify_args.suite,
                   "product | constant | identities | disc | res | bridge | "
                   "modp | homog | all")
      ->required()
      ->check(CLI::IsMember({"product", "constant", "identities", "disc", "res",
                             "bridge", "modp", "homog", "all"}));
  verify->add_option("--max-n", verify_args.max_n, "sweep bound (default 60)");
  verify->add_option("--primes", verify_args.primes,
                     "comma-separated primes for the modp suite");
  verify->add_option("--seed", verify_args.seed, "factorization seed")
      ->envname("FIBOTOMIC_SEED");
  verify->add_option("--jobs", verify_args.jobs,
                     "worker threads; output is identical for any value")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", verify_args.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  verify
      ->add_option("--inject-fault", verify_args.inject_fault,
                   "test fixture: corrupt a closed form (disc-formula)")
      ->group("");  // hidden

  TableArgs table_args;
  CLI::App* table = app.add_subcommand(
      "table",
      "emit formula-vs-engine rows (csv or json). CSV columns: "
      "disc: n,phi,formula,engine; res: m,n,formula,engine; "
      "shape: n,p,predicted,observed,status");
  table->add_option("kind", table_args.kind, "disc | res | shape")
      ->required()
      ->check(CLI::IsMember({"disc", "res", "shape"}));
  table->add_option("--max-n", table_args.max_n, "sweep bound (default 20)");
  table->add_option("--primes", table_args.primes,
                    "comma-separated primes (shape tables)");
  table->add_option("--seed", table_args.seed, "factorization seed")
      ->envname("FIBOTOMIC_SEED");
  table->add_option("--format", table_args.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  fb::FamilyCache cache;
  try {
    if (poly->parsed()) return cmd_poly(poly_args, cache);
    if (disc->parsed()) return cmd_disc(disc_args, cache);
    if (res->parsed()) return cmd_res(res_args, cache);
    if (factor->parsed()) return cmd_factor(factor_args, cache);
    if (verify->parsed()) return cmd_verify(verify_args, cache);
    if (table->parsed()) return cmd_table(table_args, cache);
  } catch (const fb::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage_error(e) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
