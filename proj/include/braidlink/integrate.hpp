#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Core>

#include "braidlink/mobius.hpp"

namespace braidlink {

/// The two punctures of C \ {0, 1}. omega_a = (1 / 2 pi i) dz / (z - a).
enum class Pole { zero, one };

inline std::complex<double> location(Pole p) { return p == Pole::zero ? 0.0 : 1.0; }

/// Winding number from summed principal-branch argument increments.
/// Throws ConvergenceError if an increment reaches pi/2 or the total is not
/// within 1e-6 of an integer.
int winding_discrete(const NormalizedPath& path, Pole pole);

/// Re of the line integral of omega_pole along the polyline, by
/// Gauss-Legendre quadrature of Im(dz / (z - a)) / 2 pi on each segment.
double winding_integral(const NormalizedPath& path, Pole pole, int order = 8);

/// lambda(t) = Re of the integral of omega_pole from the base sample, i.e.
/// the continuously tracked angle about the pole divided by 2 pi.
struct LambdaProfile {
  Pole pole = Pole::zero;
  /// N + 1 values; values(N) is the value after closing the loop.
  Eigen::VectorXd values;

  double start() const { return values(0); }
  double total() const { return values(values.size() - 1) - values(0); }
  int winding() const;
};

LambdaProfile lambda_profile(const NormalizedPath& path, Pole pole, double start = 0.0,
                             double pole_margin = 1e-4);

struct QuadratureSettings {
  int order = 8;
  int refinement = 2;
  double tol = 1e-4;
};

struct HopfQuadrature {
  double value = 0.0;     // at order * refinement
  double coarse = 0.0;    // at order
  double residual = 0.0;  // |value - coarse|
};

/// 1/2 Re of the integral of lambda0 omega1 - lambda1 omega0 along the path,
/// i.e. 1/2 (int lambda0 dlambda1 - int lambda1 dlambda0). Throws
/// ConvergenceError when the refined and coarse values differ by >= tol.
HopfQuadrature hopf_quadrature(const NormalizedPath& path, const LambdaProfile& l0,
                               const LambdaProfile& l1, const QuadratureSettings& q = {});

struct ByPartsPair {
  double lambda0_dlambda1 = 0.0;        //  int lambda0 dlambda1
  double minus_lambda1_dlambda0 = 0.0;  // -int lambda1 dlambda0
};

/// The two one-sided evaluations. Both windings must be zero (GateError).
ByPartsPair hopf_byparts(const NormalizedPath& path, const LambdaProfile& l0,
                         const LambdaProfile& l1, const QuadratureSettings& q = {});

}  // namespace braidlink
