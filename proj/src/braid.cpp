#include "braidlink/braid.hpp"

#include <sstream>

#include "braidlink/errors.hpp"

namespace braidlink {

SphericalBraid::SphericalBraid(std::array<Strand, 4> strands) : strands_(std::move(strands)) {
  const std::size_t n = strands_[0].size();
  for (const auto& s : strands_) {
    if (s.size() != n) throw ValidationError("strands have unequal sample counts");
  }
  if (n < kMinSamples) {
    throw ValidationError("braid needs at least " + std::to_string(kMinSamples) + " samples, got " +
                          std::to_string(n));
  }
}

SphericalBraid SphericalBraid::constant(const std::array<Point, 4>& points, std::size_t samples) {
  std::array<Strand, 4> strands;
  for (std::size_t i = 0; i < 4; ++i) strands[i].assign(samples, points[i]);
  return SphericalBraid(std::move(strands));
}

std::array<Point, 4> SphericalBraid::at(std::size_t k) const {
  return {strands_[0][k], strands_[1][k], strands_[2][k], strands_[3][k]};
}

ValidationResult validate(const SphericalBraid& b, double eps_sep) {
  for (std::size_t k = 0; k < b.size(); ++k) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        const double d = chordal_distance(b.strand(i)[k], b.strand(j)[k]);
        if (!(d >= eps_sep)) {
          return {SeparationViolation{k, static_cast<int>(i + 1), static_cast<int>(j + 1), d}};
        }
      }
    }
  }
  return {};
}

void require_valid(const SphericalBraid& b, double eps_sep) {
  const auto result = validate(b, eps_sep);
  if (result) return;
  const auto& v = *result.violation;
  std::ostringstream msg;
  msg << "strands " << v.i << " and " << v.j << " collide at sample " << v.sample
      << " (chordal distance " << v.distance << " < " << eps_sep << ")";
  throw ValidationError(msg.str());
}

SphericalBraid compose(const SphericalBraid& f, const SphericalBraid& g) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (chordal_distance(f.strand(i).front(), g.strand(i).front()) > kBaseTolerance) {
      throw ValidationError("compose: base configurations differ on strand " + std::to_string(i + 1));
    }
  }
  std::array<Strand, 4> strands;
  for (std::size_t i = 0; i < 4; ++i) {
    strands[i].reserve(f.size() + g.size());
    strands[i].insert(strands[i].end(), f.strand(i).begin(), f.strand(i).end());
    strands[i].insert(strands[i].end(), g.strand(i).begin(), g.strand(i).end());
  }
  return SphericalBraid(std::move(strands));
}

SphericalBraid inverse(const SphericalBraid& f) {
  const std::size_t n = f.size();
  std::array<Strand, 4> strands;
  for (std::size_t i = 0; i < 4; ++i) {
    strands[i].resize(n);
    for (std::size_t k = 0; k < n; ++k) strands[i][k] = f.strand(i)[(n - k) % n];
  }
  return SphericalBraid(std::move(strands));
}

SphericalBraid act(const Permutation& sigma, const SphericalBraid& f) {
  std::array<Strand, 4> strands;
  for (int i = 1; i <= 4; ++i) {
    strands[static_cast<std::size_t>(sigma(i) - 1)] = f.strand(static_cast<std::size_t>(i - 1));
  }
  return SphericalBraid(std::move(strands));
}

SphericalBraid tilde(const SphericalBraid& f) { return act(Permutation::transposition(1, 2), f); }

ThreeStrandBraid eliminate_last(const SphericalBraid& f) {
  return {{f.strand(0), f.strand(1), f.strand(2)}};
}

}  // namespace braidlink
