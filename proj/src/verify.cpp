#include "braidlink/verify.hpp"

#include <cmath>
#include <functional>

#include "braidlink/errors.hpp"
#include "braidlink/invariants.hpp"
#include "braidlink/random.hpp"
#include "braidlink/words.hpp"

namespace braidlink {
namespace {

constexpr double kIntegralityBound = 1e-3;

// Runs one case; a false return or an exception records the first
// counterexample.
void run_case(SuiteResult& suite, const Json& context, const std::function<bool(Json&)>& body) {
  ++suite.total;
  Json detail = context;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail["error"] = e.what();
  }
  if (ok) {
    ++suite.passed;
  } else if (!suite.counterexample) {
    detail["suite"] = suite.name;
    suite.counterexample = detail;
  }
}

}  // namespace

std::vector<SuiteResult> run_verify(const VerifyOptions& opt) {
  if (opt.count < 1) throw std::invalid_argument("verify: count must be positive");
  InvariantSettings settings;
  settings.quadrature.tol = opt.tol;

  Rng rng(opt.seed);
  std::vector<LoopWord> words;
  for (int i = 0; i < 2 * opt.count; ++i) words.push_back(random_balanced_loop_word(rng));

  SuiteResult homomorphism("homomorphism");
  SuiteResult integrality("integrality");
  SuiteResult convergence("convergence");
  SuiteResult byparts("byparts");
  for (int i = 0; i < opt.count; ++i) {
    const LoopWord& a = words[static_cast<std::size_t>(2 * i)];
    const LoopWord& b = words[static_cast<std::size_t>(2 * i + 1)];
    const Json ctx{{"f", render(a)}, {"g", render(b)}};
    const SphericalBraid f = realize_loop(a, opt.samples);
    const SphericalBraid g = realize_loop(b, opt.samples);

    std::optional<InvariantReport> rf;
    run_case(convergence, Json{{"word", render(a)}}, [&](Json& d) {
      rf = hopf(f, settings);
      convergence.max_residual = std::max(convergence.max_residual, rf->diagnostics.convergence_residual);
      d["residual"] = rf->diagnostics.convergence_residual;
      return rf->diagnostics.convergence_residual < opt.tol;
    });
    run_case(integrality, Json{{"word", render(a)}}, [&](Json& d) {
      if (!rf || !rf->hopf_raw) return false;
      const double r = std::abs(*rf->hopf_raw - std::round(*rf->hopf_raw));
      integrality.max_residual = std::max(integrality.max_residual, r);
      d["hopf_raw"] = *rf->hopf_raw;
      return r < kIntegralityBound;
    });
    run_case(byparts, Json{{"word", render(a)}}, [&](Json& d) {
      if (!rf) return false;
      const double r = rf->diagnostics.byparts_residual;
      byparts.max_residual = std::max(byparts.max_residual, r);
      d["residual"] = r;
      return r < 2 * opt.tol;
    });
    run_case(homomorphism, ctx, [&](Json& d) {
      const auto hf = rf ? *rf : hopf(f, settings);
      const auto hg = hopf(g, settings);
      const auto hfg = hopf(compose(f, g), settings);
      if (!hf.hopf || !hg.hopf || !hfg.hopf) return false;
      const double r = std::abs(*hfg.hopf_raw - *hf.hopf_raw - *hg.hopf_raw);
      homomorphism.max_residual = std::max(homomorphism.max_residual, r);
      d["hopf_f"] = *hf.hopf;
      d["hopf_g"] = *hg.hopf;
      d["hopf_fg"] = *hfg.hopf;
      return *hfg.hopf == *hf.hopf + *hg.hopf;
    });
  }

  SuiteResult oracle("lk_oracle");
  for (int i = 0; i < opt.count; ++i) {
    const BraidWord wa = random_pure_artin_word(rng);
    const BraidWord wb = random_pure_artin_word(rng);
    run_case(oracle, Json{{"f", render(wa)}, {"g", render(wb)}}, [&](Json& d) {
      const SphericalBraid f = realize_artin(wa, opt.samples);
      const SphericalBraid g = realize_artin(wb, opt.samples);
      const NormalizedPath path = normalize(f);
      const double integral = winding_integral(path, Pole::zero);
      oracle.max_residual = std::max(oracle.max_residual, std::abs(integral - std::round(integral)));
      const bool agree = static_cast<int>(std::round(integral)) == winding_discrete(path, Pole::zero);
      const TotalLinking lf = total_lk(f);
      const TotalLinking lg = total_lk(g);
      const TotalLinking lfg = total_lk(compose(f, g));
      d["lk_f"] = {lf.lk, lf.lk_tilde};
      d["lk_g"] = {lg.lk, lg.lk_tilde};
      d["lk_fg"] = {lfg.lk, lfg.lk_tilde};
      return agree && lfg == lf + lg;
    });
  }

  SuiteResult table_suite("transform_table");
  run_case(table_suite, Json{{"seed", opt.seed}}, [&](Json& d) {
    const TransformTable t = transform_table(std::max(4, std::min(opt.count, 20)), opt.seed);
    bool ok = t.consistent && t.multiplicative;
    ok = ok && t.row(Permutation::identity()).lk_row() == Eigen::Vector2i(1, 0);
    ok = ok && t.row(Permutation::transposition(1, 2)).lk_row() == Eigen::Vector2i(0, 1);
    for (const Permutation& p : Permutation::all()) {
      if (p.in_klein_four()) ok = ok && t.row(p).lk_row() == Eigen::Vector2i(1, 0);
    }
    d["consistent"] = t.consistent;
    d["multiplicative"] = t.multiplicative;
    return ok;
  });

  return {homomorphism, integrality, convergence, byparts, oracle, table_suite};
}

}  // namespace braidlink
