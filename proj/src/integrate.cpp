#include "braidlink/integrate.hpp"

#include <cmath>
#include <sstream>

#include "braidlink/errors.hpp"
#include "braidlink/gauss_legendre.hpp"

namespace braidlink {
namespace {

using Complex = std::complex<double>;

constexpr double kTwoPi = 2 * M_PI;

// Principal-branch increment of arg(z - a) along segment k.
double arg_increment(const NormalizedPath& path, std::size_t k, Complex a) {
  return std::arg((path.segment_end(k) - a) / (path.segment_start(k) - a));
}

int round_winding(double turns, const char* what) {
  const double r = std::round(turns);
  if (std::abs(turns - r) > 1e-6) {
    std::ostringstream msg;
    msg << what << ": total " << turns << " is not an integer";
    throw ConvergenceError(msg.str(), turns, r);
  }
  return static_cast<int>(r);
}

// Integrand pieces of the Hopf form at parameter s in [0,1] of segment k.
struct SegmentEval {
  double lambda0;
  double lambda1;
  double dlambda0;  // d lambda0 / ds
  double dlambda1;
};

SegmentEval evaluate(Complex start, Complex delta, double l0, double l1, double s) {
  const Complex z = start + s * delta;
  SegmentEval e;
  e.lambda0 = l0 + std::arg(z / start) / kTwoPi;
  e.lambda1 = l1 + std::arg((z - 1.0) / (start - 1.0)) / kTwoPi;
  e.dlambda0 = std::imag(delta / z) / kTwoPi;
  e.dlambda1 = std::imag(delta / (z - 1.0)) / kTwoPi;
  return e;
}

// Sums int lambda0 dlambda1 and int lambda1 dlambda0 over all segments in
// index order.
std::pair<double, double> iterated_integrals(const NormalizedPath& path, const LambdaProfile& l0,
                                             const LambdaProfile& l1, int order) {
  const auto rule = gauss_legendre<double>(order);
  double a = 0.0;
  double b = 0.0;
  for (std::size_t k = 0; k < path.size(); ++k) {
    const Complex start = path.segment_start(k);
    const Complex delta = path.segment_end(k) - start;
    if (delta == Complex(0)) continue;
    const auto idx = static_cast<Eigen::Index>(k);
    double sa = 0.0;
    double sb = 0.0;
    for (Eigen::Index q = 0; q < rule.order(); ++q) {
      const SegmentEval e = evaluate(start, delta, l0.values(idx), l1.values(idx), rule.nodes(q));
      sa += rule.weights(q) * e.lambda0 * e.dlambda1;
      sb += rule.weights(q) * e.lambda1 * e.dlambda0;
    }
    a += sa;
    b += sb;
  }
  return {a, b};
}

void require_same_path(const NormalizedPath& path, const LambdaProfile& l0, const LambdaProfile& l1) {
  const auto n = static_cast<Eigen::Index>(path.size()) + 1;
  if (l0.pole != Pole::zero || l1.pole != Pole::one || l0.values.size() != n || l1.values.size() != n) {
    throw std::invalid_argument("lambda profiles do not match the path (expected poles 0 and 1)");
  }
}

}  // namespace

int winding_discrete(const NormalizedPath& path, Pole pole) {
  const Complex a = location(pole);
  double total = 0.0;
  for (std::size_t k = 0; k < path.size(); ++k) {
    const double inc = arg_increment(path, k, a);
    if (std::abs(inc) >= M_PI / 2) {
      throw ConvergenceError("branch density violated at segment " + std::to_string(k), inc, 0.0);
    }
    total += inc;
  }
  return round_winding(total / kTwoPi, "winding_discrete");
}

double winding_integral(const NormalizedPath& path, Pole pole, int order) {
  const auto rule = gauss_legendre<double>(order);
  const Complex a = location(pole);
  double total = 0.0;
  for (std::size_t k = 0; k < path.size(); ++k) {
    const Complex start = path.segment_start(k);
    const Complex delta = path.segment_end(k) - start;
    double s = 0.0;
    for (Eigen::Index q = 0; q < rule.order(); ++q) {
      s += rule.weights(q) * std::imag(delta / (start + rule.nodes(q) * delta - a));
    }
    total += s;
  }
  return total / kTwoPi;
}

int LambdaProfile::winding() const { return static_cast<int>(std::round(total())); }

LambdaProfile lambda_profile(const NormalizedPath& path, Pole pole, double start, double pole_margin) {
  const Complex a = location(pole);
  LambdaProfile prof;
  prof.pole = pole;
  prof.values.resize(static_cast<Eigen::Index>(path.size()) + 1);
  prof.values(0) = start;
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (std::abs(path.segment_start(k) - a) < pole_margin) {
      throw ValidationError("path sample " + std::to_string(k) + " is within the pole margin");
    }
    const double inc = arg_increment(path, k, a);
    if (std::abs(inc) >= M_PI / 2) {
      throw ConvergenceError("branch density violated at segment " + std::to_string(k), inc, 0.0);
    }
    const auto idx = static_cast<Eigen::Index>(k);
    prof.values(idx + 1) = prof.values(idx) + inc / kTwoPi;
  }
  round_winding(prof.total(), "lambda_profile");
  return prof;
}

HopfQuadrature hopf_quadrature(const NormalizedPath& path, const LambdaProfile& l0,
                               const LambdaProfile& l1, const QuadratureSettings& q) {
  require_same_path(path, l0, l1);
  if (q.order < 2 || q.refinement < 2 || !(q.tol > 0)) throw std::invalid_argument("invalid quadrature settings");
  const auto [ca, cb] = iterated_integrals(path, l0, l1, q.order);
  const auto [fa, fb] = iterated_integrals(path, l0, l1, q.order * q.refinement);
  HopfQuadrature r;
  r.coarse = 0.5 * (ca - cb);
  r.value = 0.5 * (fa - fb);
  r.residual = std::abs(r.value - r.coarse);
  if (!(r.residual < q.tol)) {
    std::ostringstream msg;
    msg << "Hopf quadrature did not converge: " << r.coarse << " vs " << r.value << " (residual "
        << r.residual << " >= tol " << q.tol << ")";
    throw ConvergenceError(msg.str(), r.coarse, r.value);
  }
  return r;
}

ByPartsPair hopf_byparts(const NormalizedPath& path, const LambdaProfile& l0, const LambdaProfile& l1,
                         const QuadratureSettings& q) {
  require_same_path(path, l0, l1);
  if (l0.winding() != 0 || l1.winding() != 0) {
    throw GateError("hopf_byparts requires zero winding about both poles");
  }
  const auto [a, b] = iterated_integrals(path, l0, l1, q.order * q.refinement);
  return {a, -b};
}

}  // namespace braidlink
