#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "braidlink/braid.hpp"
#include "braidlink/integrate.hpp"
#include "braidlink/mobius.hpp"
#include "braidlink/permutation.hpp"

namespace braidlink {

/// LK(f) = (Lk(f), Lk(tilde f)).
struct TotalLinking {
  int lk = 0;
  int lk_tilde = 0;

  bool is_zero() const { return lk == 0 && lk_tilde == 0; }
  friend TotalLinking operator+(TotalLinking a, TotalLinking b) {
    return {a.lk + b.lk, a.lk_tilde + b.lk_tilde};
  }
  friend bool operator==(const TotalLinking&, const TotalLinking&) = default;
};

struct InvariantSettings {
  QuadratureSettings quadrature;
  NormalizationSettings normalization;
  double start_lambda = 0.0;
  /// Raw H farther than this from an integer is an error.
  double integrality_threshold = 0.1;
};

struct Diagnostics {
  double convergence_residual = 0.0;
  double byparts_residual = 0.0;
  double integrality_residual = 0.0;
  double lambda0_dlambda1 = 0.0;
  double minus_lambda1_dlambda0 = 0.0;
  std::size_t path_samples = 0;
};

struct InvariantReport {
  TotalLinking total;
  bool brunn = false;
  std::optional<double> hopf_raw;
  std::optional<long> hopf;
  Diagnostics diagnostics;
};

/// Winding of the normalized strand 4 about 0. The quadrature of omega0 and
/// the discrete argument sum must agree, else ConvergenceError.
int lk(const SphericalBraid& f, const NormalizationSettings& settings = {});
int lk(const NormalizedPath& path);

TotalLinking total_lk(const SphericalBraid& f, const NormalizationSettings& settings = {});

bool is_brunn(const SphericalBraid& f, const NormalizationSettings& settings = {});

/// Full report. Non-Brunn input is reported (brunn = false, no H), not an
/// error. Quadrature disagreement or a non-integral H throws
/// ConvergenceError.
InvariantReport hopf(const SphericalBraid& f, const InvariantSettings& settings = {});

/// Empirical action of S4 on (Lk, Lk o tilde): for each sigma the integer
/// matrix M with (Lk(sigma f), Lk(tilde(sigma f))) = M (Lk f, Lk tilde f).
struct TransformTable {
  struct Row {
    Permutation sigma;
    Eigen::Matrix2i action = Eigen::Matrix2i::Zero();
    bool fits = false;

    /// (a, b) with Lk(sigma f) = a Lk(f) + b Lk(tilde f).
    Eigen::Vector2i lk_row() const { return action.row(0).transpose(); }
  };

  std::vector<Row> rows;  // indexed like Permutation::all()
  std::size_t samples = 0;
  bool consistent = false;
  bool multiplicative = false;

  const Row& row(const Permutation& sigma) const { return rows[sigma.index()]; }
};

TransformTable transform_table(int sample_count, std::uint64_t seed,
                               int samples_per_generator = 64);

/// For each sigma in Permutation::all(), the observed factor c with
/// H(sigma f) = c H(f) on the given Brunn braids with H(f) != 0, or nullopt
/// when the braids disagree.
std::vector<std::optional<long>> hopf_transform_factors(const std::vector<SphericalBraid>& braids,
                                                        const InvariantSettings& settings = {});

}  // namespace braidlink
