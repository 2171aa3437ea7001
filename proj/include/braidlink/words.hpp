#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "braidlink/braid.hpp"
#include "braidlink/permutation.hpp"

namespace braidlink {

// Loop words live in pi_1(C \ {0,1}, 2): x is the positive loop about 0,
// y the positive loop about 1, X and Y their inverses.
enum class LoopLetter : char { x = 'x', x_inv = 'X', y = 'y', y_inv = 'Y' };

struct LoopWord {
  std::vector<LoopLetter> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  friend bool operator==(const LoopWord&, const LoopWord&) = default;
};

inline constexpr std::size_t kMaxWordLength = 10'000'000;

/// word   := factor*
/// factor := atom ('^' integer)?
/// atom   := 'x' | 'y' | 'X' | 'Y' | '[' word ',' word ']' | '(' word ')'
/// [a,b] expands to a b a^-1 b^-1. Whitespace is ignored.
LoopWord parse_loop(std::string_view text);

/// Canonical form: one character per letter, e.g. "xyXY".
std::string render(const LoopWord& w);

LoopWord inverse(const LoopWord& w);
LoopWord concat(const LoopWord& a, const LoopWord& b);
int exponent_sum_x(const LoopWord& w);
int exponent_sum_y(const LoopWord& w);

struct ArtinLetter {
  int generator;  // 1..3
  int exponent;   // nonzero
  friend bool operator==(const ArtinLetter&, const ArtinLetter&) = default;
};

struct BraidWord {
  std::vector<ArtinLetter> letters;

  /// Number of elementary half-twists after expanding exponents.
  std::size_t expanded_length() const;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Underlying permutation of the strand positions, reading left to right.
Permutation permutation(const BraidWord& w);

/// Tokens s1, s2, s3 with optional ^k (k may be signed). Throws ParseError
/// on bad syntax and ValidationError when the word is not pure.
BraidWord parse_artin(std::string_view text);

/// Same grammar without the purity check.
BraidWord parse_artin_unchecked(std::string_view text);

std::string render(const BraidWord& w);

inline constexpr double kLoopBasePoint = 2.0;
inline constexpr double kLoopRadiusZero = 0.5;
inline constexpr double kLoopRadiusOne = 0.25;
inline constexpr double kArtinRadius = 1.0;

/// Strands 1,2,3 constant at 0, 1, infinity; strand 4 starts at 2 and
/// traces one closed loop per letter. Total samples max(8, |w|) * spl.
/// Requires samples_per_letter >= 32.
SphericalBraid realize_loop(const LoopWord& w, int samples_per_letter = 512);

/// Strands start at 1, i, -1, -i. Each elementary s_k^{+-1} half-twists the
/// strands at positions k, k+1 about their midpoint (counterclockwise for
/// +1) during its time slot of samples_per_generator samples.
SphericalBraid realize_artin(const BraidWord& w, int samples_per_generator = 512);

}  // namespace braidlink
