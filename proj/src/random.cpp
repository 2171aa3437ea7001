#include "braidlink/random.hpp"

#include <complex>

namespace braidlink {

LoopWord random_balanced_loop_word(Rng& rng, int max_pairs) {
  std::uniform_int_distribution<int> pairs(1, max_pairs);
  const int nx = pairs(rng);
  const int ny = pairs(rng);
  LoopWord w;
  w.letters.insert(w.letters.end(), static_cast<std::size_t>(nx), LoopLetter::x);
  w.letters.insert(w.letters.end(), static_cast<std::size_t>(nx), LoopLetter::x_inv);
  w.letters.insert(w.letters.end(), static_cast<std::size_t>(ny), LoopLetter::y);
  w.letters.insert(w.letters.end(), static_cast<std::size_t>(ny), LoopLetter::y_inv);
  // Fisher-Yates with explicit draws so the order is library independent
  // given the engine.
  for (std::size_t i = w.letters.size() - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(w.letters[i], w.letters[j]);
  }
  return w;
}

BraidWord random_pure_artin_word(Rng& rng, int max_factors) {
  std::uniform_int_distribution<int> factors(1, max_factors);
  std::uniform_int_distribution<int> generator(1, 3);
  std::uniform_int_distribution<int> conj_length(0, 2);
  std::uniform_int_distribution<int> coin(0, 1);

  BraidWord w;
  const int m = factors(rng);
  for (int f = 0; f < m; ++f) {
    std::vector<ArtinLetter> conj;
    const int len = conj_length(rng);
    for (int i = 0; i < len; ++i) conj.push_back({generator(rng), coin(rng) ? 1 : -1});
    const ArtinLetter core{generator(rng), coin(rng) ? 2 : -2};
    w.letters.insert(w.letters.end(), conj.begin(), conj.end());
    w.letters.push_back(core);
    for (auto it = conj.rbegin(); it != conj.rend(); ++it) w.letters.push_back({it->generator, -it->exponent});
  }
  return w;
}

Mobius random_mobius(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const std::complex<double> a(u(rng), u(rng)), b(u(rng), u(rng)), c(u(rng), u(rng)), d(u(rng), u(rng));
    if (std::abs(a * d - b * c) >= 0.1) return Mobius(a, b, c, d);
  }
}

}  // namespace braidlink
