#include "braidlink/words.hpp"

#include <cctype>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "braidlink/errors.hpp"

namespace braidlink {
namespace {

using Complex = std::complex<double>;

constexpr long long kMaxExponent = 1'000'000;

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char get() {
    const char c = peek();
    if (pos_ < text_.size()) ++pos_;
    return c;
  }
  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", position());
    ++pos_;
  }
  std::size_t position() {
    skip_ws();
    return pos_;
  }

  /// Signed decimal integer after '^'.
  long long exponent() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected integer exponent", pos_);
    }
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxExponent) throw ParseError("exponent overflow", start);
      ++pos_;
    }
    return negative ? -value : value;
  }

  [[noreturn]] void unexpected() {
    const std::size_t at = position();
    if (at >= text_.size()) throw ParseError("unexpected end of input", at);
    throw ParseError(std::string("unexpected character '") + text_[at] + "'", at);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

LoopLetter invert(LoopLetter l) {
  switch (l) {
    case LoopLetter::x: return LoopLetter::x_inv;
    case LoopLetter::x_inv: return LoopLetter::x;
    case LoopLetter::y: return LoopLetter::y_inv;
    case LoopLetter::y_inv: return LoopLetter::y;
  }
  return l;
}

void append(LoopWord& dst, const LoopWord& src, std::size_t where) {
  if (dst.size() + src.size() > kMaxWordLength) throw ParseError("word too long (exponent overflow)", where);
  dst.letters.insert(dst.letters.end(), src.letters.begin(), src.letters.end());
}

LoopWord power(const LoopWord& w, long long n, std::size_t where) {
  const LoopWord base = n < 0 ? inverse(w) : w;
  const auto count = static_cast<std::size_t>(n < 0 ? -n : n);
  if (!w.empty() && count > kMaxWordLength / w.size()) throw ParseError("exponent overflow", where);
  LoopWord out;
  out.letters.reserve(base.size() * count);
  for (std::size_t i = 0; i < count; ++i) append(out, base, where);
  return out;
}

LoopWord parse_word(Cursor& cur);

LoopWord parse_atom(Cursor& cur) {
  const std::size_t at = cur.position();
  switch (cur.peek()) {
    case 'x': cur.get(); return {{LoopLetter::x}};
    case 'X': cur.get(); return {{LoopLetter::x_inv}};
    case 'y': cur.get(); return {{LoopLetter::y}};
    case 'Y': cur.get(); return {{LoopLetter::y_inv}};
    case '[': {
      cur.get();
      LoopWord a = parse_word(cur);
      cur.expect(',');
      LoopWord b = parse_word(cur);
      cur.expect(']');
      LoopWord out = a;
      append(out, b, at);
      append(out, inverse(a), at);
      append(out, inverse(b), at);
      return out;
    }
    case '(': {
      cur.get();
      LoopWord inner = parse_word(cur);
      cur.expect(')');
      return inner;
    }
    default:
      cur.unexpected();
  }
}

LoopWord parse_word(Cursor& cur) {
  LoopWord out;
  for (;;) {
    const char c = cur.peek();
    if (c == '\0' || c == ',' || c == ']' || c == ')') return out;
    const std::size_t at = cur.position();
    LoopWord factor = parse_atom(cur);
    if (cur.peek() == '^') {
      cur.get();
      factor = power(factor, cur.exponent(), at);
    }
    append(out, factor, at);
  }
}

// Closed letter loops based at 2, parametrized by arc length. The x loop
// reaches the circle |z| = 1/2 along the chord 2 -> i/2, which clears the
// pole at 1 by about 0.24; the y loop reaches |z - 1| = 1/4 along the real
// axis.
struct LetterLoop {
  Complex entry;
  Complex center;
  double radius;
  double entry_angle;

  double chord() const { return std::abs(entry - kLoopBasePoint); }
  double length() const { return 2 * chord() + 2 * M_PI * radius; }

  Complex at(double s) const {
    const Complex base(kLoopBasePoint, 0.0);
    const double c = chord();
    const double arc = 2 * M_PI * radius;
    if (s <= c) return base + (entry - base) * (s / c);
    if (s <= c + arc) return center + std::polar(radius, entry_angle + (s - c) / radius);
    return entry + (base - entry) * std::min(1.0, (s - c - arc) / c);
  }
};

const LetterLoop kLoopX{Complex(0.0, kLoopRadiusZero), Complex(0.0, 0.0), kLoopRadiusZero, M_PI / 2};
const LetterLoop kLoopY{Complex(1.0 + kLoopRadiusOne, 0.0), Complex(1.0, 0.0), kLoopRadiusOne, 0.0};

Complex letter_sample(LoopLetter l, std::size_t j, std::size_t k) {
  const bool is_x = l == LoopLetter::x || l == LoopLetter::x_inv;
  const bool positive = l == LoopLetter::x || l == LoopLetter::y;
  const LetterLoop& loop = is_x ? kLoopX : kLoopY;
  // Inverse letters visit the forward sample set in reverse order.
  const std::size_t idx = positive ? j : (k - j) % k;
  return loop.at(loop.length() * static_cast<double>(idx) / static_cast<double>(k));
}

}  // namespace

LoopWord parse_loop(std::string_view text) {
  Cursor cur(text);
  LoopWord w = parse_word(cur);
  if (!cur.at_end()) cur.unexpected();
  return w;
}

std::string render(const LoopWord& w) {
  std::string out;
  out.reserve(w.size());
  for (LoopLetter l : w.letters) out += static_cast<char>(l);
  return out;
}

LoopWord inverse(const LoopWord& w) {
  LoopWord out;
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(invert(*it));
  return out;
}

LoopWord concat(const LoopWord& a, const LoopWord& b) {
  LoopWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

int exponent_sum_x(const LoopWord& w) {
  int s = 0;
  for (LoopLetter l : w.letters) s += l == LoopLetter::x ? 1 : l == LoopLetter::x_inv ? -1 : 0;
  return s;
}

int exponent_sum_y(const LoopWord& w) {
  int s = 0;
  for (LoopLetter l : w.letters) s += l == LoopLetter::y ? 1 : l == LoopLetter::y_inv ? -1 : 0;
  return s;
}

std::size_t BraidWord::expanded_length() const {
  std::size_t n = 0;
  for (const auto& l : letters) n += static_cast<std::size_t>(std::abs(l.exponent));
  return n;
}

Permutation permutation(const BraidWord& w) {
  // strand_at[p] = label of the strand currently at position p.
  std::array<int, 4> strand_at{1, 2, 3, 4};
  for (const auto& l : w.letters) {
    if (l.exponent % 2 != 0) {
      std::swap(strand_at[static_cast<std::size_t>(l.generator - 1)],
                strand_at[static_cast<std::size_t>(l.generator)]);
    }
  }
  // Image of a strand label is the position it ends at.
  std::array<int, 4> images{};
  for (int p = 1; p <= 4; ++p) images[static_cast<std::size_t>(strand_at[static_cast<std::size_t>(p - 1)] - 1)] = p;
  return Permutation(images);
}

BraidWord parse_artin_unchecked(std::string_view text) {
  Cursor cur(text);
  BraidWord w;
  std::size_t expanded = 0;
  while (!cur.at_end()) {
    const std::size_t at = cur.position();
    if (cur.get() != 's') throw ParseError("expected generator s1, s2 or s3", at);
    const char g = cur.get();
    if (g < '1' || g > '3') throw ParseError("generator index must be 1, 2 or 3", at + 1);
    long long e = 1;
    if (cur.peek() == '^') {
      cur.get();
      e = cur.exponent();
    }
    expanded += static_cast<std::size_t>(e < 0 ? -e : e);
    if (expanded > kMaxWordLength) throw ParseError("exponent overflow", at);
    if (e != 0) w.letters.push_back({g - '0', static_cast<int>(e)});
  }
  return w;
}

BraidWord parse_artin(std::string_view text) {
  BraidWord w = parse_artin_unchecked(text);
  const Permutation p = permutation(w);
  if (!(p == Permutation::identity())) {
    throw ValidationError("braid word is not pure: permutation " + p.to_cycles());
  }
  return w;
}

std::string render(const BraidWord& w) {
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += 's';
    out += static_cast<char>('0' + l.generator);
    if (l.exponent != 1) out += '^' + std::to_string(l.exponent);
  }
  return out;
}

SphericalBraid realize_loop(const LoopWord& w, int samples_per_letter) {
  if (samples_per_letter < 32) throw std::invalid_argument("realize_loop: samples_per_letter must be >= 32");
  const std::size_t spl = static_cast<std::size_t>(samples_per_letter);
  const std::size_t total = std::max<std::size_t>(8, w.size()) * spl;

  Strand moving;
  moving.reserve(total);
  if (!w.empty()) {
    const std::size_t k = total / w.size();
    for (LoopLetter l : w.letters) {
      for (std::size_t j = 0; j < k; ++j) moving.emplace_back(letter_sample(l, j, k));
    }
  }
  moving.resize(total, Point(kLoopBasePoint));

  return SphericalBraid({Strand(total, Point(0.0)), Strand(total, Point(1.0)),
                         Strand(total, Point::infinity()), std::move(moving)});
}

SphericalBraid realize_artin(const BraidWord& w, int samples_per_generator) {
  if (samples_per_generator < static_cast<int>(kMinSamples)) {
    throw std::invalid_argument("realize_artin: samples_per_generator must be >= 8");
  }
  const Permutation p = permutation(w);
  if (!(p == Permutation::identity())) {
    throw ValidationError("braid word is not pure: permutation " + p.to_cycles());
  }

  const std::array<Complex, 4> slots{Complex(kArtinRadius, 0), Complex(0, kArtinRadius),
                                     Complex(-kArtinRadius, 0), Complex(0, -kArtinRadius)};
  std::array<int, 4> strand_at{0, 1, 2, 3};
  std::array<Strand, 4> strands;

  const std::size_t spg = static_cast<std::size_t>(samples_per_generator);
  for (const auto& letter : w.letters) {
    const int direction = letter.exponent > 0 ? 1 : -1;
    const auto lo = static_cast<std::size_t>(letter.generator - 1);
    const std::size_t hi = lo + 1;
    const Complex mid = 0.5 * (slots[lo] + slots[hi]);
    for (int rep = 0; rep < std::abs(letter.exponent); ++rep) {
      for (std::size_t j = 0; j < spg; ++j) {
        const Complex turn = std::polar(1.0, direction * M_PI * static_cast<double>(j) / static_cast<double>(spg));
        for (std::size_t pos = 0; pos < 4; ++pos) {
          Complex z = slots[pos];
          if (pos == lo || pos == hi) z = mid + (slots[pos] - mid) * turn;
          strands[static_cast<std::size_t>(strand_at[pos])].emplace_back(z);
        }
      }
      std::swap(strand_at[lo], strand_at[hi]);
    }
  }
  if (strands[0].empty()) {
    const std::size_t n = std::max(kMinSamples, spg);
    for (std::size_t i = 0; i < 4; ++i) strands[i].assign(n, Point(slots[i]));
  }
  return SphericalBraid(std::move(strands));
}

}  // namespace braidlink
