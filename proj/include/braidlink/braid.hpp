#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "braidlink/permutation.hpp"
#include "braidlink/riemann.hpp"

namespace braidlink {

using Strand = std::vector<Point>;

inline constexpr std::size_t kMinSamples = 8;
inline constexpr double kDefaultSeparation = 1e-6;
inline constexpr double kBaseTolerance = 1e-9;

/// Four closed strand curves sampled at t_k = 2 pi k / N. Sample N is
/// sample 0 again (closure by wraparound). Strands are stored 0-based;
/// reports and permutations use labels 1..4.
class SphericalBraid {
 public:
  /// Throws ValidationError unless all strands share a length N >= 8.
  explicit SphericalBraid(std::array<Strand, 4> strands);

  static SphericalBraid constant(const std::array<Point, 4>& points, std::size_t samples);

  std::size_t size() const { return strands_[0].size(); }
  const Strand& strand(std::size_t i) const { return strands_[i]; }
  const std::array<Strand, 4>& strands() const { return strands_; }
  std::array<Point, 4> at(std::size_t k) const;

  friend bool operator==(const SphericalBraid&, const SphericalBraid&) = default;

 private:
  std::array<Strand, 4> strands_;
};

struct ThreeStrandBraid {
  std::array<Strand, 3> strands;
};

struct SeparationViolation {
  std::size_t sample;
  int i;  // 1-based strand labels, i < j
  int j;
  double distance;
};

struct ValidationResult {
  std::optional<SeparationViolation> violation;

  bool valid() const { return !violation.has_value(); }
  explicit operator bool() const { return valid(); }
};

ValidationResult validate(const SphericalBraid& b, double eps_sep = kDefaultSeparation);

/// Like validate, but throws ValidationError describing the first violation.
void require_valid(const SphericalBraid& b, double eps_sep = kDefaultSeparation);

/// f followed by g. Base configurations must agree to kBaseTolerance chordal.
SphericalBraid compose(const SphericalBraid& f, const SphericalBraid& g);

/// Time reversal; sample 0 is kept as the base configuration.
SphericalBraid inverse(const SphericalBraid& f);

/// Relabels components: output strand sigma(i) is input strand i, so
/// act(sigma, act(tau, f)) == act(sigma * tau, f).
SphericalBraid act(const Permutation& sigma, const SphericalBraid& f);

/// act((1 2), f).
SphericalBraid tilde(const SphericalBraid& f);

ThreeStrandBraid eliminate_last(const SphericalBraid& f);

}  // namespace braidlink
