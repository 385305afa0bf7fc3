#include "fibotomic/verify.hpp"

#include <sstream>

#include "fibotomic/bridge.hpp"
#include "fibotomic/modfactor.hpp"
#include "fibotomic/numth.hpp"
#include "fibotomic/resdisc.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fibotomic {

std::size_t SuiteResult::passed() const {
  std::size_t n = 0;
  for (const CheckResult& c : checks) n += c.pass ? 1 : 0;
  return n;
}

std::size_t SuiteResult::failed() const { return checks.size() - passed(); }

const CheckResult* SuiteResult::first_failure() const {
  for (const CheckResult& c : checks) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

std::vector<CheckResult> run_indexed(
    std::size_t count, int jobs,
    const std::function<CheckResult(std::size_t)>& fn) {
  std::vector<CheckResult> out(count);
  auto guarded = [&](std::size_t i) {
    try {
      out[i] = fn(i);
    } catch (const std::exception& e) {
      out[i].pass = false;
      out[i].detail = e.what();
    }
  };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) guarded(i);
    return out;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (long i = 0; i < static_cast<long>(count); ++i)
    guarded(static_cast<std::size_t>(i));
#else
  for (std::size_t i = 0; i < count; ++i) guarded(i);
#endif
  return out;
}

namespace {

CheckResult pass_or(const std::string& instance, bool ok,
                    const std::string& why) {
  CheckResult r;
  r.instance = instance;
  r.pass = ok;
  if (!ok) r.detail = why;
  return r;
}

IntPoly x_pow_minus_one(unsigned n) {
  std::vector<mpz_class> c(n + 1);
  c[0] = -1;
  c[n] = 1;
  return IntPoly(IntRing{}, std::move(c));
}

}  // namespace

SuiteResult run_product_suite(int max_n, const VerifyOptions& opts,
                              FamilyCache& cache) {
  SuiteResult suite{"product", {}};
  if (max_n < 1) return suite;
  cache.fibonacci(static_cast<unsigned>(max_n));  // serial prefill of the chain
  suite.checks = run_indexed(
      static_cast<std::size_t>(max_n), opts.jobs, [&](std::size_t i) {
        const unsigned n = static_cast<unsigned>(i) + 1;
        const std::string label = "n=" + std::to_string(n);
        IntPoly psi_prod = int_poly({1});
        IntPoly phi_prod = int_poly({1});
        for (std::uint64_t d : divisors(n)) {
          psi_prod = psi_prod * cache.fibotomic(static_cast<unsigned>(d));
          phi_prod = phi_prod * cache.cyclotomic(static_cast<unsigned>(d));
        }
        if (!(psi_prod == cache.fibonacci(n)))
          return pass_or(label, false, "prod Psi_d != F_n");
        if (!(phi_prod == x_pow_minus_one(n)))
          return pass_or(label, false, "prod Phi_d != x^n-1");
        if (n >= 2) {
          const IntPoly& psi = cache.fibotomic(n);
          const std::uint64_t phi = totient(n);
          if (static_cast<std::uint64_t>(degree_of(psi)) != phi)
            return pass_or(label, false, "deg Psi_n != phi(n)");
          if (!psi.is_monic()) return pass_or(label, false, "Psi_n not monic");
          if (n >= 3) {
            for (std::size_t j = 0; j < psi.coeffs().size(); ++j) {
              if ((j % 2) != (phi % 2) && sgn(psi.coeffs()[j]) != 0)
                return pass_or(label, false,
                               "nonzero opposite-parity coefficient");
            }
          }
        }
        return pass_or(label, true, "");
      });
  return suite;
}

SuiteResult run_constant_suite(int max_n, const VerifyOptions& opts,
                               FamilyCache& cache) {
  SuiteResult suite{"constant", {}};
  if (max_n < 1) return suite;
  cache.fibonacci(static_cast<unsigned>(max_n));
  suite.checks = run_indexed(
      static_cast<std::size_t>(max_n), opts.jobs, [&](std::size_t i) {
        const unsigned n = static_cast<unsigned>(i) + 1;
        const std::string label = "n=" + std::to_string(n);
        const mpz_class psi0 = evaluate(cache.fibotomic(n), mpz_class(0));
        if (psi0 != psi_constant_term(n))
          return pass_or(label, false,
                         "Psi_n(0) = " + psi0.get_str() + ", expected " +
                             std::to_string(psi_constant_term(n)));
        if (n >= 2) {
          const mpz_class phi1 = evaluate(cache.cyclotomic(n), mpz_class(1));
          if (phi1 != phi_at_one(n))
            return pass_or(label, false,
                           "Phi_n(1) = " + phi1.get_str() + ", expected " +
                               std::to_string(phi_at_one(n)));
        }
        return pass_or(label, true, "");
      });
  return suite;
}

SuiteResult run_identities_suite(int psi_pm_max, int phi_pm_max,
                                 const VerifyOptions& opts,
                                 FamilyCache& cache) {
  SuiteResult suite{"identities", {}};
  struct Instance {
    enum Kind { psi_pm, phi_2m, phi_pm } kind;
    std::uint32_t p;
    unsigned m;
  };
  std::vector<Instance> instances;
  for (std::uint32_t p = 2; static_cast<int>(p) * 2 <= psi_pm_max; ++p) {
    if (!is_prime(p)) continue;
    for (unsigned m = 2; static_cast<int>(p * m) <= psi_pm_max; ++m)
      instances.push_back({Instance::psi_pm, p, m});
  }
  for (unsigned m = 3; static_cast<int>(2 * m) <= phi_pm_max; m += 2)
    instances.push_back({Instance::phi_2m, 2, m});
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (unsigned m = 1; static_cast<int>(p * m) <= phi_pm_max; ++m)
      instances.push_back({Instance::phi_pm, p, m});
  }
  suite.checks =
      run_indexed(instances.size(), opts.jobs, [&](std::size_t i) {
        const Instance& inst = instances[i];
        if (inst.kind == Instance::psi_pm) {
          const std::string label = "psi_pm(p=" + std::to_string(inst.p) +
                                    ",m=" + std::to_string(inst.m) + ")";
          PsiPmReport rep = verify_psi_pm(inst.p, inst.m, cache);
          return pass_or(label, rep.ok(),
                         "case " + std::string(1, rep.case_label) +
                             " mismatch " + rep.note);
        }
        if (inst.kind == Instance::phi_2m) {
          const std::string label = "phi_2m(m=" + std::to_string(inst.m) + ")";
          const IntPoly lhs = cache.cyclotomic(2 * inst.m);
          const IntPoly rhs = compose(cache.cyclotomic(inst.m), int_poly({0, -1}));
          return pass_or(label, lhs == rhs, "Phi_2m(x) != Phi_m(-x)");
        }
        const std::string label = "phi_pm(p=" + std::to_string(inst.p) +
                                  ",m=" + std::to_string(inst.m) + ")";
        const IntPoly sub =
            compose(cache.cyclotomic(inst.m),
                    IntPoly::monomial(IntRing{}, mpz_class(1), inst.p));
        if (inst.m % inst.p == 0) {
          return pass_or(label, cache.cyclotomic(inst.p * inst.m) == sub,
                         "Phi_pm(x) != Phi_m(x^p) for p | m");
        }
        const IntPoly lhs =
            cache.cyclotomic(inst.p * inst.m) * cache.cyclotomic(inst.m);
        return pass_or(label, lhs == sub,
                       "Phi_pm * Phi_m != Phi_m(x^p) for p !| m");
      });
  return suite;
}

SuiteResult run_disc_suite(int max_n, const VerifyOptions& opts,
                           FamilyCache& cache) {
  SuiteResult suite{"disc", {}};
  if (max_n < 2) return suite;
  cache.fibonacci(static_cast<unsigned>(max_n));
  suite.checks = run_indexed(
      static_cast<std::size_t>(max_n - 1), opts.jobs, [&](std::size_t i) {
        const unsigned n = static_cast<unsigned>(i) + 2;
        const std::string label = "n=" + std::to_string(n);
        const IntPoly& psi = cache.fibotomic(n);
        const IntPoly& phi = cache.cyclotomic(n);
        const SignedMagnitude psi_sylv =
            discriminant(psi, ResultantEngine::sylvester);
        const SignedMagnitude psi_sub =
            discriminant(psi, ResultantEngine::subresultant);
        if (!(psi_sylv == psi_sub))
          return pass_or(label, false, "Psi engines disagree");
        SignedMagnitude psi_formula = disc_formula_psi(n);
        if (opts.fault_disc_formula)
          psi_formula = SignedMagnitude::of(psi_formula.value() + 1);
        if (!(psi_sub == psi_formula))
          return pass_or(label, false,
                         "Delta(Psi_n): engine " + psi_sub.str() +
                             " != formula " + psi_formula.str());
        const SignedMagnitude phi_sylv =
            discriminant(phi, ResultantEngine::sylvester);
        const SignedMagnitude phi_sub =
            discriminant(phi, ResultantEngine::subresultant);
        if (!(phi_sylv == phi_sub))
          return pass_or(label, false, "Phi engines disagree");
        const SignedMagnitude phi_formula = disc_formula_phi(n);
        if (!(phi_sub == phi_formula))
          return pass_or(label, false,
                         "Delta(Phi_n): engine " + phi_sub.str() +
                             " != formula " + phi_formula.str());
        const ExactRatio ratio = disc_ratio(n);
        if (psi_sub.value() * ratio.den != phi_sub.value() * ratio.num)
          return pass_or(label, false, "discriminant ratio violated");
        return pass_or(label, true, "");
      });
  return suite;
}

SuiteResult run_res_suite(int max_n, int cross_max, const VerifyOptions& opts,
                          FamilyCache& cache) {
  SuiteResult suite{"res", {}};
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (int m = 2; m < max_n; ++m)
    for (int n = m + 1; n <= max_n; ++n)
      pairs.emplace_back(static_cast<unsigned>(m), static_cast<unsigned>(n));
  if (!pairs.empty()) cache.fibonacci(static_cast<unsigned>(max_n));
  suite.checks = run_indexed(pairs.size(), opts.jobs, [&](std::size_t i) {
    const auto [m, n] = pairs[i];
    const std::string label =
        "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")";
    if ((totient(m) * totient(n)) % 2 != 0)
      return pass_or(label, false, "phi(m)*phi(n) is odd");
    const IntPoly& psi_m = cache.fibotomic(m);
    const IntPoly& psi_n = cache.fibotomic(n);
    const IntPoly& phi_m = cache.cyclotomic(m);
    const IntPoly& phi_n = cache.cyclotomic(n);
    const SignedMagnitude r_psi = resultant_subresultant(psi_m, psi_n);
    if (!(r_psi == res_formula_psi(m, n)))
      return pass_or(label, false,
                     "res(Psi_m,Psi_n) engine " + r_psi.str() + " != formula " +
                         res_formula_psi(m, n).str());
    const SignedMagnitude r_phi = resultant_subresultant(phi_m, phi_n);
    if (!(r_phi == res_formula_phi(m, n)))
      return pass_or(label, false,
                     "res(Phi_m,Phi_n) engine " + r_phi.str() + " != formula " +
                         res_formula_phi(m, n).str());
    if (static_cast<int>(n) <= cross_max) {
      if (!(resultant_sylvester(psi_m, psi_n) == r_psi))
        return pass_or(label, false, "Psi resultant engines disagree");
      if (!(resultant_sylvester(phi_m, phi_n) == r_phi))
        return pass_or(label, false, "Phi resultant engines disagree");
    }
    return pass_or(label, true, "");
  });
  return suite;
}

SuiteResult run_bridge_suite(int bridge_max, int wp_max, int omega_max_p,
                             const VerifyOptions& opts, FamilyCache& cache) {
  SuiteResult suite{"bridge", {}};
  struct Instance {
    enum Kind { bridge, webb_parberry, omega_power } kind;
    unsigned n;
  };
  std::vector<Instance> instances;
  for (int n = 2; n <= bridge_max; ++n)
    instances.push_back({Instance::bridge, static_cast<unsigned>(n)});
  for (int n = 1; n <= wp_max; ++n)
    instances.push_back({Instance::webb_parberry, static_cast<unsigned>(n)});
  for (int p = 3; p <= omega_max_p; p += 2)
    if (is_prime(static_cast<std::uint64_t>(p)))
      instances.push_back({Instance::omega_power, static_cast<unsigned>(p)});
  const int top = std::max(bridge_max, wp_max);
  if (top >= 1) cache.fibonacci(static_cast<unsigned>(top));
  suite.checks = run_indexed(instances.size(), opts.jobs, [&](std::size_t i) {
    const Instance& inst = instances[i];
    BridgeReport rep;
    std::string label;
    switch (inst.kind) {
      case Instance::bridge:
        label = "bridge(n=" + std::to_string(inst.n) + ")";
        rep = verify_bridge(inst.n, cache);
        break;
      case Instance::webb_parberry:
        label = "webb_parberry(n=" + std::to_string(inst.n) + ")";
        rep = verify_webb_parberry(inst.n, cache);
        break;
      case Instance::omega_power:
        label = "omega_power(p=" + std::to_string(inst.n) + ")";
        rep = verify_omega_power(inst.n, cache);
        break;
    }
    return pass_or(label, rep.ok(),
                   rep.equal ? "non-dyadic denominator"
                             : "lhs " + rep.lhs + " != rhs " + rep.rhs);
  });
  return suite;
}

SuiteResult run_modp_suite(int max_n, const std::vector<std::uint32_t>& primes,
                           const VerifyOptions& opts, FamilyCache& cache) {
  SuiteResult suite{"modp", {}};
  std::vector<std::pair<unsigned, std::uint32_t>> instances;
  for (int n = 2; n <= max_n; ++n)
    for (std::uint32_t p : primes)
      instances.emplace_back(static_cast<unsigned>(n), p);
  if (max_n >= 1) cache.fibonacci(static_cast<unsigned>(max_n));
  suite.checks = run_indexed(instances.size(), opts.jobs, [&](std::size_t i) {
    const auto [n, p] = instances[i];
    const std::string label =
        "(n,p)=(" + std::to_string(n) + "," + std::to_string(p) + ")";
    ReconciliationReport rep = reconcile(n, p, opts.seed, cache);
    return pass_or(label, rep.ok(), rep.detail);
  });
  return suite;
}

SuiteResult run_homog_suite(int disc_max, int res_max,
                            const VerifyOptions& opts, FamilyCache& cache) {
  SuiteResult suite{"homog", {}};
  struct Instance {
    unsigned m;  // 0 for discriminant instances
    unsigned n;
    long y0;
  };
  std::vector<Instance> instances;
  for (int n = 2; n <= disc_max; ++n)
    for (long y0 : {2l, 3l})
      instances.push_back({0, static_cast<unsigned>(n), y0});
  for (int m = 2; m < res_max; ++m)
    for (int n = m + 1; n <= res_max; ++n)
      for (long y0 : {2l, 3l})
        instances.push_back(
            {static_cast<unsigned>(m), static_cast<unsigned>(n), y0});
  const int top = std::max(disc_max, res_max);
  if (top >= 1) cache.fibonacci(static_cast<unsigned>(top));
  suite.checks = run_indexed(instances.size(), opts.jobs, [&](std::size_t i) {
    const Instance& inst = instances[i];
    mpz_class y(inst.y0);
    if (inst.m == 0) {
      const unsigned n = inst.n;
      const std::string label =
          "disc(n=" + std::to_string(n) + ",y0=" + std::to_string(inst.y0) + ")";
      const HomogeneousView view = homogenize(Family::fibotomic, n, cache);
      const HomogValue expect = homog_disc_psi(n);
      if (view.total_degree != totient(n))
        return pass_or(label, false, "view degree != phi(n)");
      const IntPoly specialized = specialize_y(view, inst.y0);
      mpz_class scale;
      mpz_pow_ui(scale.get_mpz_t(), y.get_mpz_t(), expect.y_exponent);
      const mpz_class want = scale * expect.value.value();
      if (view.total_degree == 0)
        return pass_or(label, true, "");  // constant view, nothing to check
      const mpz_class got = discriminant(specialized).value();
      return pass_or(label, got == want,
                     "Delta(specialized) " + got.get_str() + " != " +
                         want.get_str());
    }
    const std::string label = "res(m=" + std::to_string(inst.m) +
                              ",n=" + std::to_string(inst.n) +
                              ",y0=" + std::to_string(inst.y0) + ")";
    const IntPoly fm =
        specialize_y(homogenize(Family::fibotomic, inst.m, cache), inst.y0);
    const IntPoly fn =
        specialize_y(homogenize(Family::fibotomic, inst.n, cache), inst.y0);
    const HomogValue expect = homog_res_psi(inst.m, inst.n);
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), y.get_mpz_t(), expect.y_exponent);
    const mpz_class want = scale * expect.value.value();
    const mpz_class got = resultant_subresultant(fm, fn).value();
    return pass_or(label, got == want,
                   "res(specialized) " + got.get_str() + " != " +
                       want.get_str());
  });
  return suite;
}

}  // namespace fibotomic
