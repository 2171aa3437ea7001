#include "braidlink/invariants.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "braidlink/errors.hpp"
#include "braidlink/random.hpp"
#include "braidlink/words.hpp"

namespace braidlink {
namespace {

constexpr double kWindingTolerance = 1e-6;

InvariantReport hopf_on_path(const NormalizedPath& path, TotalLinking total, const InvariantSettings& s) {
  InvariantReport report;
  report.total = total;
  report.brunn = total.is_zero();
  report.diagnostics.path_samples = path.size();
  if (!report.brunn) return report;

  const LambdaProfile l0 = lambda_profile(path, Pole::zero, s.start_lambda, s.normalization.pole_margin);
  const LambdaProfile l1 = lambda_profile(path, Pole::one, s.start_lambda, s.normalization.pole_margin);
  const HopfQuadrature q = hopf_quadrature(path, l0, l1, s.quadrature);
  const ByPartsPair bp = hopf_byparts(path, l0, l1, s.quadrature);

  const double spread = std::max({std::abs(q.value - bp.lambda0_dlambda1),
                                  std::abs(q.value - bp.minus_lambda1_dlambda0),
                                  std::abs(bp.lambda0_dlambda1 - bp.minus_lambda1_dlambda0)});
  auto& d = report.diagnostics;
  d.convergence_residual = q.residual;
  d.byparts_residual = spread;
  d.lambda0_dlambda1 = bp.lambda0_dlambda1;
  d.minus_lambda1_dlambda0 = bp.minus_lambda1_dlambda0;

  if (!(spread < 2 * s.quadrature.tol)) {
    std::ostringstream msg;
    msg << "by-parts evaluations disagree with the quadrature: " << q.value << ", "
        << bp.lambda0_dlambda1 << ", " << bp.minus_lambda1_dlambda0;
    throw ConvergenceError(msg.str(), q.value, bp.lambda0_dlambda1);
  }

  const double rounded = std::round(q.value);
  d.integrality_residual = std::abs(q.value - rounded);
  if (!(d.integrality_residual < s.integrality_threshold)) {
    std::ostringstream msg;
    msg << "Hopf integral " << q.value << " is not close to an integer";
    throw ConvergenceError(msg.str(), q.value, rounded);
  }
  report.hopf_raw = q.value;
  report.hopf = static_cast<long>(rounded);
  return report;
}

}  // namespace

int lk(const NormalizedPath& path) {
  const double integral = winding_integral(path, Pole::zero);
  const double rounded = std::round(integral);
  if (std::abs(integral - rounded) > kWindingTolerance) {
    throw ConvergenceError("winding integral is not integral", integral, rounded);
  }
  const int discrete = winding_discrete(path, Pole::zero);
  if (discrete != static_cast<int>(rounded)) {
    throw ConvergenceError("winding integral disagrees with the discrete winding oracle", integral, discrete);
  }
  return discrete;
}

int lk(const SphericalBraid& f, const NormalizationSettings& settings) { return lk(normalize(f, settings)); }

TotalLinking total_lk(const SphericalBraid& f, const NormalizationSettings& settings) {
  return {lk(f, settings), lk(tilde(f), settings)};
}

bool is_brunn(const SphericalBraid& f, const NormalizationSettings& settings) {
  return total_lk(f, settings).is_zero();
}

InvariantReport hopf(const SphericalBraid& f, const InvariantSettings& settings) {
  const NormalizedPath path = normalize(f, settings.normalization);
  const TotalLinking total{lk(path), lk(tilde(f), settings.normalization)};
  return hopf_on_path(path, total, settings);
}

TransformTable transform_table(int sample_count, std::uint64_t seed, int samples_per_generator) {
  if (sample_count < 4) throw std::invalid_argument("transform_table needs at least 4 samples");
  const auto& perms = Permutation::all();
  const std::size_t tilde_index = Permutation::transposition(1, 2).index();

  Rng rng(seed);
  std::vector<std::vector<int>> lks;  // lks[s][pi] = Lk(pi . f_s)
  Eigen::MatrixX2d basis;
  auto spanning = [&] {
    basis.resize(static_cast<Eigen::Index>(lks.size()), 2);
    for (std::size_t s = 0; s < lks.size(); ++s) {
      basis(static_cast<Eigen::Index>(s), 0) = lks[s][0];
      basis(static_cast<Eigen::Index>(s), 1) = lks[s][tilde_index];
    }
    return static_cast<int>(lks.size()) >= sample_count && basis.fullPivLu().rank() == 2;
  };
  const int max_attempts = 10 * sample_count;
  while (!spanning()) {
    if (static_cast<int>(lks.size()) >= max_attempts) {
      throw ConvergenceError("transform_table: random sample never spanned (Lk, Lk~)");
    }
    const SphericalBraid f = realize_artin(random_pure_artin_word(rng), samples_per_generator);
    std::vector<int> row(perms.size());
    for (std::size_t p = 0; p < perms.size(); ++p) row[p] = lk(act(perms[p], f));
    lks.push_back(std::move(row));
  }

  TransformTable table;
  table.samples = lks.size();
  table.consistent = true;
  const auto solver = basis.colPivHouseholderQr();
  for (const Permutation& sigma : perms) {
    TransformTable::Row row;
    row.sigma = sigma;
    row.fits = true;
    const std::size_t targets[2] = {sigma.index(), (Permutation::transposition(1, 2) * sigma).index()};
    for (int r = 0; r < 2; ++r) {
      Eigen::VectorXd y(basis.rows());
      for (Eigen::Index s = 0; s < basis.rows(); ++s) y(s) = lks[static_cast<std::size_t>(s)][targets[r]];
      const Eigen::Vector2d coeff = solver.solve(y);
      const Eigen::Vector2i rounded = coeff.array().round().cast<int>();
      row.action.row(r) = rounded.transpose();
      const Eigen::VectorXd fitted = basis * rounded.cast<double>();
      if ((fitted - y).cwiseAbs().maxCoeff() != 0.0) row.fits = false;
    }
    table.consistent = table.consistent && row.fits;
    table.rows.push_back(row);
  }

  table.multiplicative = true;
  for (const Permutation& sigma : perms) {
    for (const Permutation& tau : perms) {
      if (table.row(sigma * tau).action != table.row(sigma).action * table.row(tau).action) {
        table.multiplicative = false;
      }
    }
  }
  return table;
}

std::vector<std::optional<long>> hopf_transform_factors(const std::vector<SphericalBraid>& braids,
                                                        const InvariantSettings& settings) {
  std::vector<long> base;
  std::vector<const SphericalBraid*> used;
  for (const auto& f : braids) {
    const auto r = hopf(f, settings);
    if (r.hopf && *r.hopf != 0) {
      base.push_back(*r.hopf);
      used.push_back(&f);
    }
  }
  std::vector<std::optional<long>> factors;
  for (const Permutation& sigma : Permutation::all()) {
    std::optional<long> factor;
    bool agree = !used.empty();
    for (std::size_t i = 0; i < used.size() && agree; ++i) {
      try {
        const auto r = hopf(act(sigma, *used[i]), settings);
        if (!r.hopf || *r.hopf % base[i] != 0) {
          agree = false;
          break;
        }
        const long c = *r.hopf / base[i];
        if (factor && *factor != c) agree = false;
        factor = c;
      } catch (const Error&) {
        agree = false;
      }
    }
    factors.push_back(agree ? factor : std::nullopt);
  }
  return factors;
}

}  // namespace braidlink
