#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include <Eigen/Core>

#include "braidlink/errors.hpp"

namespace braidlink {

/// A point of the Riemann sphere: a finite complex number or the point at
/// infinity. Infinity is a tag, never a large magnitude.
template <typename Scalar_>
class RiemannPoint {
 public:
  using Scalar = Scalar_;
  using Complex = std::complex<Scalar>;
  using Homogeneous = Eigen::Matrix<Complex, 2, 1>;

  RiemannPoint() = default;

  RiemannPoint(Complex z) : z_(z), infinite_(false) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ValidationError("non-finite coordinate in RiemannPoint");
    }
  }

  RiemannPoint(Scalar re, Scalar im = Scalar(0)) : RiemannPoint(Complex(re, im)) {}

  static RiemannPoint infinity() {
    RiemannPoint p;
    p.infinite_ = true;
    return p;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  /// Finite value; undefined for the point at infinity.
  Complex value() const { return z_; }

  Homogeneous homogeneous() const {
    return infinite_ ? Homogeneous(Complex(1), Complex(0)) : Homogeneous(z_, Complex(1));
  }

  /// Projective point (p : q). Treated as infinity when |q| is below
  /// 4 ulp of |p|.
  static RiemannPoint from_homogeneous(const Homogeneous& h) {
    const Scalar p = std::abs(h(0));
    const Scalar q = std::abs(h(1));
    if (q <= 4 * std::numeric_limits<Scalar>::epsilon() * p) return infinity();
    return RiemannPoint(h(0) / h(1));
  }

  friend bool operator==(const RiemannPoint& a, const RiemannPoint& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.z_ == b.z_;
  }

 private:
  Complex z_{};
  bool infinite_ = false;
};

/// Chordal distance on the unit-diameter-2 sphere; lies in [0, 2].
template <typename Scalar>
Scalar chordal_distance(const RiemannPoint<Scalar>& a, const RiemannPoint<Scalar>& b) {
  if (a.is_infinite() && b.is_infinite()) return Scalar(0);
  if (a.is_infinite()) return 2 / std::sqrt(1 + std::norm(b.value()));
  if (b.is_infinite()) return 2 / std::sqrt(1 + std::norm(a.value()));
  return 2 * std::abs(a.value() - b.value()) /
         std::sqrt((1 + std::norm(a.value())) * (1 + std::norm(b.value())));
}

/// Linear interpolation in an affine chart: the z-chart when both ends are
/// finite, otherwise the w = 1/z chart.
template <typename Scalar>
RiemannPoint<Scalar> interpolate(const RiemannPoint<Scalar>& a, const RiemannPoint<Scalar>& b,
                                 Scalar s) {
  using Complex = std::complex<Scalar>;
  if (a.is_finite() && b.is_finite()) return RiemannPoint<Scalar>(a.value() + s * (b.value() - a.value()));
  if (a.is_infinite() && b.is_infinite()) return RiemannPoint<Scalar>::infinity();
  const Complex wa = a.is_infinite() ? Complex(0) : Complex(1) / a.value();
  const Complex wb = b.is_infinite() ? Complex(0) : Complex(1) / b.value();
  const Complex w = wa + s * (wb - wa);
  if (w == Complex(0)) return RiemannPoint<Scalar>::infinity();
  return RiemannPoint<Scalar>(Complex(1) / w);
}

using Point = RiemannPoint<double>;

}  // namespace braidlink
