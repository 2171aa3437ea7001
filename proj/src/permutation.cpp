#include "braidlink/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace braidlink {

Permutation::Permutation() : images_{1, 2, 3, 4} {}

Permutation::Permutation(std::array<int, 4> images) : images_(images) {
  std::array<bool, 4> seen{};
  for (int v : images_) {
    if (v < 1 || v > 4 || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("Permutation: images must be a bijection of {1,2,3,4}");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::transposition(int i, int j) {
  std::array<int, 4> img{1, 2, 3, 4};
  if (i < 1 || i > 4 || j < 1 || j > 4) throw std::invalid_argument("transposition label out of range");
  std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(j - 1)]);
  return Permutation(img);
}

Permutation Permutation::from_cycles(std::string_view text) {
  Permutation result;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
  };
  skip();
  if (text.substr(pos) == "e" || text.substr(pos) == "id") return result;
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("cycle notation: expected '('");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip();
      if (pos >= text.size()) throw std::invalid_argument("cycle notation: unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] < '1' || text[pos] > '4') throw std::invalid_argument("cycle notation: label out of range");
      cycle.push_back(text[pos] - '0');
      ++pos;
    }
    std::array<int, 4> img{1, 2, 3, 4};
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      img[static_cast<std::size_t>(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()];
    }
    // Cycles written left to right compose right-to-left.
    result = result * Permutation(img);
    skip();
  }
  return result;
}

const std::vector<Permutation>& Permutation::all() {
  static const std::vector<Permutation> perms = [] {
    std::vector<Permutation> out;
    std::array<int, 4> img{1, 2, 3, 4};
    do {
      out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
  }();
  return perms;
}

Permutation Permutation::inverse() const {
  std::array<int, 4> inv{};
  for (int i = 1; i <= 4; ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(inv);
}

int Permutation::sign() const {
  int inversions = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (images_[i] > images_[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

bool Permutation::in_klein_four() const {
  if (*this == identity()) return true;
  // Fixed-point-free involutions.
  for (int i = 1; i <= 4; ++i) {
    if ((*this)(i) == i || (*this)((*this)(i)) != i) return false;
  }
  return true;
}

std::size_t Permutation::index() const {
  const auto& perms = all();
  return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), *this) - perms.begin());
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::array<bool, 4> seen{};
  for (int start = 1; start <= 4; ++start) {
    if (seen[static_cast<std::size_t>(start - 1)] || (*this)(start) == start) continue;
    out += '(';
    int i = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += static_cast<char>('0' + i);
      seen[static_cast<std::size_t>(i - 1)] = true;
      first = false;
      i = (*this)(i);
    } while (i != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::array<int, 4> img{};
  for (int i = 1; i <= 4; ++i) img[static_cast<std::size_t>(i - 1)] = a(b(i));
  return Permutation(img);
}

ThetaValue theta(const Permutation& sigma) {
  // {1,3} must go to {1,3} or {2,4}; the complement then follows.
  const bool same_block = (sigma(1) % 2) == (sigma(3) % 2);
  return {same_block ? 1 : -1, sigma.sign()};
}

}  // namespace braidlink
