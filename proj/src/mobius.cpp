#include "braidlink/mobius.hpp"

#include <cmath>
#include <sstream>

namespace braidlink {
namespace {

using Complex = std::complex<double>;
using Config = std::array<Point, 4>;

class Normalizer {
 public:
  Normalizer(const SphericalBraid& f, const NormalizationSettings& s) : f_(f), s_(s) {}

  NormalizedPath run() {
    const std::size_t n = f_.size();
    const double dt = 2 * M_PI / static_cast<double>(n);
    std::vector<Complex> base(n);
    for (std::size_t k = 0; k < n; ++k) base[k] = evaluate(f_.at(k), k);

    limit_ = s_.max_growth * n;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t next = (k + 1) % n;
      push(base[k], dt * static_cast<double>(k));
      refine(f_.at(k), base[k], dt * static_cast<double>(k), f_.at(next), base[next],
             dt * static_cast<double>(k + 1), k, 0);
    }

    NormalizedPath path;
    path.samples = Eigen::Map<const Eigen::VectorXcd>(gamma_.data(), static_cast<Eigen::Index>(gamma_.size()));
    path.times = std::move(times_);
    path.source_samples = n;
    return path;
  }

 private:
  Complex evaluate(const Config& z, std::size_t k) const {
    const Mobius m = cross_ratio_map(z[0], z[1], z[2], 1e-12);
    const Point g = m(z[3]);
    auto fail = [&](const char* what) {
      std::ostringstream msg;
      msg << "normalized strand 4 " << what << " at sample " << k;
      throw ValidationError(msg.str());
    };
    if (g.is_infinite() || std::abs(g.value()) > s_.max_radius) fail("leaves the bounded chart");
    if (std::abs(g.value()) < s_.pole_margin) fail("is too close to 0");
    if (std::abs(g.value() - 1.0) < s_.pole_margin) fail("is too close to 1");
    return g.value();
  }

  bool dense(Complex a, Complex b) const {
    return std::abs(std::arg(b / a)) < s_.max_branch_angle &&
           std::abs(std::arg((b - 1.0) / (a - 1.0))) < s_.max_branch_angle;
  }

  void refine(const Config& za, Complex ga, double ta, const Config& zb, Complex gb, double tb,
              std::size_t k, int depth) {
    if (dense(ga, gb)) return;
    if (depth > 40) throw ValidationError("densification did not terminate near sample " + std::to_string(k));
    Config zm;
    for (std::size_t i = 0; i < 4; ++i) zm[i] = interpolate(za[i], zb[i], 0.5);
    const Complex gm = evaluate(zm, k);
    const double tm = 0.5 * (ta + tb);
    refine(za, ga, ta, zm, gm, tm, k, depth + 1);
    push(gm, tm);
    refine(zm, gm, tm, zb, gb, tb, k, depth + 1);
  }

  void push(Complex g, double t) {
    if (gamma_.size() >= limit_) {
      throw ValidationError("densification exceeded " + std::to_string(s_.max_growth) +
                            "x the input sample count");
    }
    gamma_.push_back(g);
    times_.push_back(t);
  }

  const SphericalBraid& f_;
  const NormalizationSettings& s_;
  std::size_t limit_ = 0;
  std::vector<Complex> gamma_;
  std::vector<double> times_;
};

}  // namespace

SphericalBraid transform(const Mobius& m, const SphericalBraid& f) {
  std::array<Strand, 4> strands;
  for (std::size_t i = 0; i < 4; ++i) {
    strands[i].reserve(f.size());
    for (const Point& p : f.strand(i)) strands[i].push_back(m(p));
  }
  return SphericalBraid(std::move(strands));
}

SphericalBraid normalize_braid(const SphericalBraid& f) {
  std::array<Strand, 4> strands;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const Config z = f.at(k);
    const Mobius m = cross_ratio_map(z[0], z[1], z[2], 1e-12);
    for (std::size_t i = 0; i < 4; ++i) strands[i].push_back(m(z[i]));
  }
  return SphericalBraid(std::move(strands));
}

NormalizedPath normalize(const SphericalBraid& f, const NormalizationSettings& settings) {
  return Normalizer(f, settings).run();
}

SphericalBraid braid_from_path(const Eigen::VectorXcd& gamma) {
  const auto n = static_cast<std::size_t>(gamma.size());
  Strand moving;
  moving.reserve(n);
  for (Eigen::Index k = 0; k < gamma.size(); ++k) moving.emplace_back(gamma(k));
  return SphericalBraid({Strand(n, Point(0.0)), Strand(n, Point(1.0)), Strand(n, Point::infinity()),
                         std::move(moving)});
}

}  // namespace braidlink
