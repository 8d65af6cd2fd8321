#pragma once

#include <array>
#include <cstdint>
#include <optional>

namespace pants {

// Generator letters of the fundamental group of the pair of pants, free on
// a and b. Uppercase denotes the inverse of the lowercase letter. The
// numeric encoding fixes the canonical letter order a < A < b < B, and
// flipping the low bit inverts a letter.
enum class Letter : std::uint8_t { a = 0, A = 1, b = 2, B = 3 };

constexpr Letter inverse(Letter x) {
  return static_cast<Letter>(static_cast<std::uint8_t>(x) ^ 1u);
}

constexpr char toChar(Letter x) {
  constexpr char names[4] = {'a', 'A', 'b', 'B'};
  return names[static_cast<std::size_t>(x)];
}

constexpr std::optional<Letter> letterFromChar(char c) {
  switch (c) {
    case 'a': return Letter::a;
    case 'A': return Letter::A;
    case 'b': return Letter::b;
    case 'B': return Letter::B;
    default: return std::nullopt;
  }
}

constexpr std::array<Letter, 4> allLetters() {
  return {Letter::a, Letter::A, Letter::b, Letter::B};
}

constexpr std::size_t letterIndex(Letter x) {
  return static_cast<std::size_t>(x);
}

}  // namespace pants
