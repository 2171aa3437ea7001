#pragma once

// Test-only oracles. Nothing here calls into the integrate module, so the
// values they produce are independent of the code paths under test.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "braidlink/braid.hpp"
#include "braidlink/mobius.hpp"
#include "braidlink/words.hpp"

namespace oracle {

using Complex = std::complex<double>;

inline std::vector<Complex> to_vector(const braidlink::NormalizedPath& p) {
  return {p.samples.data(), p.samples.data() + p.samples.size()};
}

/// Signed crossings of the closed polyline with the ray {a + s : s > 0}.
inline int ray_crossing_winding(const std::vector<Complex>& pts, Complex a) {
  int w = 0;
  const std::size_t n = pts.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex p = pts[k] - a;
    const Complex q = pts[(k + 1) % n] - a;
    const bool up = p.imag() <= 0 && q.imag() > 0;
    const bool down = p.imag() > 0 && q.imag() <= 0;
    if (!up && !down) continue;
    const double x = p.real() + (q.real() - p.real()) * (-p.imag()) / (q.imag() - p.imag());
    if (x > 0) w += up ? 1 : -1;
  }
  return w;
}

/// Composite midpoint rule for 1/2 (int l0 dl1 - int l1 dl0) with m
/// sub-steps per segment; angles are accumulated sub-step by sub-step.
struct BruteForceHopf {
  double hopf;
  double l0_dl1;
  double l1_dl0;
};

inline BruteForceHopf brute_force_hopf(const std::vector<Complex>& pts, int m, double start = 0.0) {
  double l0 = start, l1 = start, a = 0.0, b = 0.0;
  const std::size_t n = pts.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex p = pts[k];
    const Complex q = pts[(k + 1) % n];
    Complex prev = p;
    for (int j = 1; j <= m; ++j) {
      const Complex z = p + (q - p) * (static_cast<double>(j) / m);
      const double d0 = std::arg(z / prev) / (2 * M_PI);
      const double d1 = std::arg((z - 1.0) / (prev - 1.0)) / (2 * M_PI);
      a += (l0 + 0.5 * d0) * d1;
      b += (l1 + 0.5 * d1) * d0;
      l0 += d0;
      l1 += d1;
      prev = z;
    }
  }
  return {0.5 * (a - b), a, b};
}

/// For a word with zero exponent sums: each y^{+-1} contributes +-(x
/// exponent sum of the prefix before it).
inline long combinatorial_hopf(const braidlink::LoopWord& w) {
  long h = 0;
  long x = 0;
  for (auto l : w.letters) {
    switch (l) {
      case braidlink::LoopLetter::x: ++x; break;
      case braidlink::LoopLetter::x_inv: --x; break;
      case braidlink::LoopLetter::y: h += x; break;
      case braidlink::LoopLetter::y_inv: h -= x; break;
    }
  }
  return h;
}

/// Exact (closed-form) circle samples about `center`, counterclockwise.
inline braidlink::SphericalBraid circle_braid(Complex center, double radius, std::size_t n) {
  braidlink::Strand moving;
  for (std::size_t k = 0; k < n; ++k) {
    moving.emplace_back(center + std::polar(radius, 2 * M_PI * static_cast<double>(k) / static_cast<double>(n)));
  }
  return braidlink::SphericalBraid({braidlink::Strand(n, braidlink::Point(0.0)),
                                    braidlink::Strand(n, braidlink::Point(1.0)),
                                    braidlink::Strand(n, braidlink::Point::infinity()), std::move(moving)});
}

/// Moves every finite sample by at most `amplitude`; points at infinity
/// move to 1/d with |d| <= amplitude.
inline braidlink::SphericalBraid perturb(const braidlink::SphericalBraid& f, std::mt19937_64& rng,
                                         double amplitude) {
  std::uniform_real_distribution<double> radius(0.0, amplitude);
  std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
  std::array<braidlink::Strand, 4> strands;
  for (std::size_t i = 0; i < 4; ++i) {
    for (const auto& p : f.strand(i)) {
      const Complex d = std::polar(radius(rng), angle(rng));
      if (p.is_finite()) {
        strands[i].emplace_back(p.value() + d);
      } else {
        strands[i].emplace_back(1.0 / d);
      }
    }
  }
  return braidlink::SphericalBraid(std::move(strands));
}

/// Resamples every strand polyline at u -> u + a (sin(2 pi u + phase) -
/// sin(phase)) / (2 pi), monotone for |a| < 1, keeping N.
inline braidlink::SphericalBraid reparametrize(const braidlink::SphericalBraid& f, double a, double phase) {
  const std::size_t n = f.size();
  std::array<braidlink::Strand, 4> strands;
  for (std::size_t k = 0; k < n; ++k) {
    const double u = static_cast<double>(k) / static_cast<double>(n);
    const double v = u + a * (std::sin(2 * M_PI * u + phase) - std::sin(phase)) / (2 * M_PI);
    const double pos = v * static_cast<double>(n);
    const auto lo = static_cast<std::size_t>(std::floor(pos)) % n;
    const double frac = pos - std::floor(pos);
    for (std::size_t i = 0; i < 4; ++i) {
      strands[i].push_back(braidlink::interpolate(f.strand(i)[lo], f.strand(i)[(lo + 1) % n], frac));
    }
  }
  return braidlink::SphericalBraid(std::move(strands));
}

}  // namespace oracle
