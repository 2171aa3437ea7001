#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace braidlink {

/// Element of the symmetric group on the strand labels {1,2,3,4}.
/// Products compose right-to-left: (sigma * tau)(i) = sigma(tau(i)).
class Permutation {
 public:
  Permutation();  // identity
  explicit Permutation(std::array<int, 4> images);

  static Permutation identity() { return Permutation(); }
  static Permutation transposition(int i, int j);
  /// Parses cycle notation such as "(1 2)(3 4)", "(1,3)" or "()" / "e".
  static Permutation from_cycles(std::string_view text);
  /// All 24 permutations, ordered lexicographically by image array.
  static const std::vector<Permutation>& all();

  int operator()(int label) const { return images_[static_cast<std::size_t>(label - 1)]; }
  const std::array<int, 4>& images() const { return images_; }

  Permutation inverse() const;
  int sign() const;
  bool is_even() const { return sign() == 1; }
  /// Member of V4 = {e, (12)(34), (13)(24), (14)(23)}.
  bool in_klein_four() const;
  /// Index into all().
  std::size_t index() const;

  std::string to_cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::array<int, 4> images_;
};

struct ThetaValue {
  int theta1 = 1;
  int theta2 = 1;
  friend bool operator==(const ThetaValue&, const ThetaValue&) = default;
};

/// theta1 = +1 iff sigma maps the partition {{1,3},{2,4}} onto itself;
/// theta2 = sign(sigma).
ThetaValue theta(const Permutation& sigma);

}  // namespace braidlink
