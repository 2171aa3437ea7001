#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "braidlink/braid.hpp"
#include "braidlink/errors.hpp"
#include "braidlink/riemann.hpp"

namespace braidlink {

/// Fractional-linear map z -> (a z + b) / (c z + d), stored as a 2x2 complex
/// matrix acting on homogeneous coordinates. Rows are scaled so the largest
/// coefficient has modulus 1.
template <typename Scalar_>
class MobiusMap {
 public:
  using Scalar = Scalar_;
  using Complex = std::complex<Scalar>;
  using Matrix = Eigen::Matrix<Complex, 2, 2>;

  static constexpr Scalar kMinDeterminant = Scalar(1e-12);

  MobiusMap() : m_(Matrix::Identity()) {}

  explicit MobiusMap(const Matrix& m) : m_(m) {
    const Scalar scale = m_.cwiseAbs().maxCoeff();
    if (!(scale > 0) || !std::isfinite(scale)) throw ValidationError("degenerate Mobius coefficients");
    m_ /= scale;
    if (std::abs(m_.determinant()) < kMinDeterminant) {
      throw ValidationError("Mobius map is singular (ad - bc = 0)");
    }
  }

  MobiusMap(Complex a, Complex b, Complex c, Complex d)
      : MobiusMap((Matrix() << a, b, c, d).finished()) {}

  static MobiusMap identity() { return MobiusMap(); }

  const Matrix& matrix() const { return m_; }
  Complex a() const { return m_(0, 0); }
  Complex b() const { return m_(0, 1); }
  Complex c() const { return m_(1, 0); }
  Complex d() const { return m_(1, 1); }

  MobiusMap inverse() const { return MobiusMap(m_.inverse().eval()); }

  RiemannPoint<Scalar> operator()(const RiemannPoint<Scalar>& p) const {
    return RiemannPoint<Scalar>::from_homogeneous(m_ * p.homogeneous());
  }

  /// (f * g)(z) = f(g(z)).
  friend MobiusMap operator*(const MobiusMap& f, const MobiusMap& g) {
    return MobiusMap((f.m_ * g.m_).eval());
  }

 private:
  Matrix m_;
};

template <typename Scalar>
RiemannPoint<Scalar> apply(const MobiusMap<Scalar>& m, const RiemannPoint<Scalar>& p) {
  return m(p);
}

/// The map sending z1 -> 0, z2 -> 1, z3 -> infinity:
///   F(z) = (z - z1)(z2 - z3) / ((z - z3)(z2 - z1)),
/// evaluated with 2x2 determinants of homogeneous coordinates so that any of
/// the three points may be infinity.
template <typename Scalar>
MobiusMap<Scalar> cross_ratio_map(const RiemannPoint<Scalar>& z1, const RiemannPoint<Scalar>& z2,
                                  const RiemannPoint<Scalar>& z3,
                                  Scalar eps_sep = Scalar(kDefaultSeparation)) {
  if (chordal_distance(z1, z2) < eps_sep || chordal_distance(z2, z3) < eps_sep ||
      chordal_distance(z1, z3) < eps_sep) {
    throw ValidationError("cross_ratio_map: coincident points");
  }
  const auto h1 = z1.homogeneous();
  const auto h2 = z2.homogeneous();
  const auto h3 = z3.homogeneous();
  auto det = [](const auto& u, const auto& v) { return u(0) * v(1) - u(1) * v(0); };
  const auto d23 = det(h2, h3);
  const auto d21 = det(h2, h1);
  return MobiusMap<Scalar>(h1(1) * d23, -h1(0) * d23, h3(1) * d21, -h3(0) * d21);
}

using Mobius = MobiusMap<double>;

/// Applies one fixed map to every sample of every strand.
SphericalBraid transform(const Mobius& m, const SphericalBraid& f);

/// F(f): strands 1..3 mapped (numerically) onto 0, 1, infinity and strand 4
/// onto the normalized curve, sample for sample. No densification.
SphericalBraid normalize_braid(const SphericalBraid& f);

struct NormalizationSettings {
  double pole_margin = 1e-4;
  double max_radius = 1e6;
  /// Maximum angle a segment may subtend at 0 or at 1.
  double max_branch_angle = M_PI / 4;
  std::size_t max_growth = 64;
};

/// Strand 4 of F(f): a closed polyline in C \ {0, 1}. `times` holds the
/// (possibly non-uniform after densification) parameter of each sample.
struct NormalizedPath {
  Eigen::VectorXcd samples;
  std::vector<double> times;
  std::size_t source_samples = 0;

  std::size_t size() const { return static_cast<std::size_t>(samples.size()); }
  /// Segment k runs from sample k to sample (k + 1) mod N.
  std::complex<double> segment_start(std::size_t k) const { return samples(static_cast<Eigen::Index>(k)); }
  std::complex<double> segment_end(std::size_t k) const {
    return samples(static_cast<Eigen::Index>((k + 1) % size()));
  }
};

/// Builds gamma(t_k) = F(z4(t_k); t_k), inserting midpoints (re-evaluating
/// the map at chart-interpolated source strands) until every segment
/// subtends less than max_branch_angle at both poles. Throws
/// ValidationError when gamma approaches a pole or leaves the disc of
/// radius max_radius, or when densification exceeds max_growth.
NormalizedPath normalize(const SphericalBraid& f, const NormalizationSettings& settings = {});

/// Wraps an explicit curve as a braid with constant strands 0, 1, infinity.
SphericalBraid braid_from_path(const Eigen::VectorXcd& gamma);

}  // namespace braidlink
