#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pants/errors.hpp"
#include "pants/letter.hpp"

namespace pants {

// A freely reduced word: no adjacent (x, x^-1) pair anywhere. The empty
// word is legal and names the trivial class.
class ReducedWord {
 public:
  ReducedWord() = default;

  // Free reduction by a single left-to-right stack pass. The result is
  // independent of deletion order (free reduction is confluent).
  static ReducedWord reduce(const std::vector<Letter>& letters) {
    std::vector<Letter> out;
    out.reserve(letters.size());
    for (Letter x : letters) {
      if (!out.empty() && out.back() == inverse(x)) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }
    return ReducedWord(std::move(out), Trusted{});
  }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  ReducedWord inverted() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
      out.push_back(inverse(*it));
    }
    return ReducedWord(std::move(out), Trusted{});
  }

  std::string str() const {
    std::string s;
    s.reserve(letters_.size());
    for (Letter x : letters_) s.push_back(toChar(x));
    return s;
  }

  bool operator==(const ReducedWord& o) const { return letters_ == o.letters_; }
  bool operator!=(const ReducedWord& o) const { return !(*this == o); }

 private:
  struct Trusted {};
  ReducedWord(std::vector<Letter> letters, Trusted) : letters_(std::move(letters)) {}

  std::vector<Letter> letters_;
};

inline ReducedWord freeReduce(const std::vector<Letter>& letters) {
  return ReducedWord::reduce(letters);
}

namespace detail {

// Recursive-descent parser for the word grammar
//   Expr := Item+
//   Item := Atom ["^" PositiveInt]
//   Atom := a | A | b | B | C | c | "(" Expr ")"
// where C expands to ab and c expands to BA.
class WordParser {
 public:
  explicit WordParser(std::string_view text) : s_(text) {}

  std::vector<Letter> run() {
    std::vector<Letter> out = parseExpr();
    if (pos_ != s_.size()) {
      // Only a stray ')' can stop parseExpr early.
      throw SyntaxError("unbalanced parenthesis at position " + std::to_string(pos_));
    }
    return out;
  }

 private:
  static constexpr std::size_t kMaxExpandedLetters = std::size_t{1} << 22;

  std::vector<Letter> parseExpr() {
    std::vector<Letter> out;
    bool any = false;
    while (pos_ < s_.size() && s_[pos_] != ')') {
      std::vector<Letter> item = parseItem();
      append(out, item);
      any = true;
    }
    if (!any) {
      throw SyntaxError(pos_ >= s_.size() && s_.empty()
                            ? "empty word expression"
                            : "expected an atom at position " + std::to_string(pos_));
    }
    return out;
  }

  std::vector<Letter> parseItem() {
    char c = s_[pos_];
    std::vector<Letter> atom;
    if (c == '(') {
      ++pos_;
      atom = parseExpr();
      if (pos_ >= s_.size() || s_[pos_] != ')') {
        throw SyntaxError("unbalanced parenthesis at position " + std::to_string(pos_));
      }
      ++pos_;
    } else if (auto l = letterFromChar(c)) {
      atom = {*l};
      ++pos_;
    } else if (c == 'C') {
      atom = {Letter::a, Letter::b};
      ++pos_;
    } else if (c == 'c') {
      atom = {Letter::B, Letter::A};
      ++pos_;
    } else if (c == '^') {
      throw SyntaxError("exponent with no preceding atom at position " + std::to_string(pos_));
    } else if (c >= '0' && c <= '9') {
      throw SyntaxError("digit outside an exponent at position " + std::to_string(pos_));
    } else {
      throw SyntaxError(std::string("illegal character '") + c + "' at position " +
                        std::to_string(pos_));
    }

    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      std::size_t k = parseExponent();
      std::vector<Letter> repeated;
      if (atom.size() * k > kMaxExpandedLetters) {
        throw ResourceLimitError("expanded word would exceed the letter cap");
      }
      repeated.reserve(atom.size() * k);
      for (std::size_t i = 0; i < k; ++i) append(repeated, atom);
      atom = std::move(repeated);
    }
    return atom;
  }

  std::size_t parseExponent() {
    if (pos_ >= s_.size() || s_[pos_] < '0' || s_[pos_] > '9') {
      throw SyntaxError("'^' must be followed by a positive integer at position " +
                        std::to_string(pos_));
    }
    std::size_t value = 0;
    while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
      value = value * 10 + static_cast<std::size_t>(s_[pos_] - '0');
      if (value > kMaxExpandedLetters) {
        throw ResourceLimitError("exponent exceeds the letter cap");
      }
      ++pos_;
    }
    if (value < 1) throw SyntaxError("exponent must be >= 1");
    return value;
  }

  void append(std::vector<Letter>& out, const std::vector<Letter>& more) {
    if (out.size() + more.size() > kMaxExpandedLetters) {
      throw ResourceLimitError("expanded word would exceed the letter cap");
    }
    out.insert(out.end(), more.begin(), more.end());
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Parses the grammar above, expands C/c and exponents, then freely reduces.
// "^" binds to the immediately preceding atom, so aB^2 means a(B^2); use
// (aB)^2 for the square of aB.
inline ReducedWord parseWord(std::string_view text) {
  detail::WordParser parser(text);
  return ReducedWord::reduce(parser.run());
}

// Display-only shorthand: greedily folds ab back into C and BA into c.
// Storage and canonical output always use the 4-letter alphabet.
inline std::string prettyWord(const std::vector<Letter>& letters) {
  std::string s;
  std::size_t i = 0;
  while (i < letters.size()) {
    if (i + 1 < letters.size() && letters[i] == Letter::a && letters[i + 1] == Letter::b) {
      s.push_back('C');
      i += 2;
    } else if (i + 1 < letters.size() && letters[i] == Letter::B && letters[i + 1] == Letter::A) {
      s.push_back('c');
      i += 2;
    } else {
      s.push_back(toChar(letters[i]));
      ++i;
    }
  }
  return s;
}

}  // namespace pants
