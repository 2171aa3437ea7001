#pragma once

#include <random>

#include "braidlink/mobius.hpp"
#include "braidlink/words.hpp"

namespace braidlink {

using Rng = std::mt19937_64;

/// Shuffled word with equal numbers of x and X and of y and Y; between 1
/// and max_pairs pairs of each kind.
LoopWord random_balanced_loop_word(Rng& rng, int max_pairs = 4);

/// Product of 1..max_factors conjugates c s_i^{+-2} c^-1 with short random
/// conjugators c; always pure.
BraidWord random_pure_artin_word(Rng& rng, int max_factors = 4);

/// Random map with coefficients in the unit box and |ad - bc| >= 0.1.
Mobius random_mobius(Rng& rng);

}  // namespace braidlink
