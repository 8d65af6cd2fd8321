#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pants/errors.hpp"
#include "pants/letter.hpp"
#include "pants/word.hpp"

namespace pants {

enum class Orientation { oriented, unoriented };

namespace detail {

inline std::vector<Letter> rotateLeft(const std::vector<Letter>& w, std::size_t r) {
  std::vector<Letter> out;
  out.reserve(w.size());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
  return out;
}

inline std::vector<Letter> invertWord(const std::vector<Letter>& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

// Smallest period p of the cyclic word, i.e. the least p dividing n with
// rotateLeft(w, p) == w.
inline std::size_t smallestPeriod(const std::vector<Letter>& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i < n && periodic; ++i) {
      periodic = w[i] == w[(i + p) % n];
    }
    if (periodic) return p;
  }
  return n;
}

}  // namespace detail

// One free homotopy class of closed curves, stored as the canonical
// rotation of its cyclically reduced cyclic word. Canonical means
// lexicographically least over all rotations (letter order a < A < b < B);
// in unoriented mode, least over rotations of the word and of its inverse.
class CurveClass {
 public:
  static CurveClass canonical(const ReducedWord& w, Orientation mode) {
    std::vector<Letter> v = w.letters();
    // Cyclic reduction: peel matching inverse pairs off the two ends.
    std::size_t lo = 0, hi = v.size();
    while (hi - lo >= 2 && v[lo] == inverse(v[hi - 1])) {
      ++lo;
      --hi;
    }
    std::vector<Letter> cyc(v.begin() + static_cast<std::ptrdiff_t>(lo),
                            v.begin() + static_cast<std::ptrdiff_t>(hi));
    if (cyc.empty()) throw TrivialClassError("word names the trivial class");

    std::vector<Letter> best = cyc;
    auto consider = [&best](const std::vector<Letter>& cand) {
      for (std::size_t r = 0; r < cand.size(); ++r) {
        std::vector<Letter> rot = detail::rotateLeft(cand, r);
        if (rot < best) best = std::move(rot);
      }
    };
    consider(cyc);
    if (mode == Orientation::unoriented) consider(detail::invertWord(cyc));

    std::size_t root = detail::smallestPeriod(best);
    return CurveClass(std::move(best), mode, root);
  }

  const std::vector<Letter>& word() const { return word_; }
  Orientation mode() const { return mode_; }
  std::size_t length() const { return word_.size(); }
  std::size_t rootLength() const { return rootLength_; }
  std::size_t exponent() const { return word_.size() / rootLength_; }
  bool isPower() const { return exponent() >= 2; }

  // The class of the primitive root, canonicalized in the same mode.
  CurveClass primitiveRoot() const {
    std::vector<Letter> root(word_.begin(), word_.begin() + static_cast<std::ptrdiff_t>(rootLength_));
    return canonical(ReducedWord::reduce(root), mode_);
  }

  std::vector<Letter> rootWord() const {
    return std::vector<Letter>(word_.begin(),
                               word_.begin() + static_cast<std::ptrdiff_t>(rootLength_));
  }

  std::string str() const {
    std::string s;
    s.reserve(word_.size());
    for (Letter x : word_) s.push_back(toChar(x));
    return s;
  }

  bool operator==(const CurveClass& o) const {
    return mode_ == o.mode_ && word_ == o.word_;
  }
  bool operator!=(const CurveClass& o) const { return !(*this == o); }

  // Deterministic order: length ascending, then lexicographic.
  bool operator<(const CurveClass& o) const {
    if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
    return word_ < o.word_;
  }

 private:
  friend class ClassEnumerator;
  CurveClass(std::vector<Letter> word, Orientation mode, std::size_t rootLength)
      : word_(std::move(word)), mode_(mode), rootLength_(rootLength) {}

  std::vector<Letter> word_;
  Orientation mode_;
  std::size_t rootLength_;
};

inline CurveClass canonicalClass(const ReducedWord& w, Orientation mode) {
  return CurveClass::canonical(w, mode);
}

inline CurveClass classOf(std::string_view text, Orientation mode = Orientation::unoriented) {
  return CurveClass::canonical(parseWord(text), mode);
}

// True iff the primitive root is one of the boundary words a, b, ab as an
// unoriented cyclic word.
inline bool isBoundaryParallel(const CurveClass& c) {
  std::vector<Letter> root = c.rootWord();
  CurveClass r = CurveClass::canonical(ReducedWord::reduce(root), Orientation::unoriented);
  const std::string s = r.str();
  return s == "a" || s == "b" || s == "ab";
}

struct EnumerationFilter {
  bool nonPowerOnly = false;
  Orientation mode = Orientation::unoriented;
  bool excludeBoundaryParallel = false;
};

// Depth-first enumeration of canonical cyclic words, one per class, in
// (length, lex) order. Prefix subtrees that already admit a strictly
// smaller rotation are pruned; the full canonicality test runs at leaves.
class ClassEnumerator {
 public:
  ClassEnumerator(EnumerationFilter filter, std::size_t classCap)
      : filter_(filter), classCap_(classCap) {}

  // Visits every class with minLen <= length <= maxLen.
  void visit(std::size_t minLen, std::size_t maxLen,
             const std::function<void(const CurveClass&)>& fn) {
    for (std::size_t len = std::max<std::size_t>(minLen, 1); len <= maxLen; ++len) {
      cur_.clear();
      len_ = len;
      fn_ = &fn;
      dfs();
    }
    fn_ = nullptr;
  }

  std::size_t emitted() const { return emitted_; }

 private:
  void dfs() {
    if (cur_.size() == len_) {
      leaf();
      return;
    }
    for (Letter x : allLetters()) {
      if (!cur_.empty() && x == inverse(cur_.back())) continue;
      cur_.push_back(x);
      if (!prefixBeaten()) dfs();
      cur_.pop_back();
    }
  }

  // True when some rotation of the current prefix is already strictly
  // smaller than the prefix itself, so no completion can be canonical.
  bool prefixBeaten() const {
    const std::size_t k = cur_.size();
    for (std::size_t r = 1; r < k; ++r) {
      bool less = false;
      for (std::size_t i = 0; r + i < k; ++i) {
        if (cur_[r + i] != cur_[i]) {
          less = cur_[r + i] < cur_[i];
          break;
        }
      }
      if (less) return true;
    }
    return false;
  }

  void leaf() {
    const std::size_t n = cur_.size();
    if (n >= 2 && cur_.back() == inverse(cur_.front())) return;  // not cyclically reduced
    for (std::size_t r = 1; r < n; ++r) {
      if (detail::rotateLeft(cur_, r) < cur_) return;
    }
    if (filter_.mode == Orientation::unoriented) {
      std::vector<Letter> inv = detail::invertWord(cur_);
      for (std::size_t r = 0; r < n; ++r) {
        if (detail::rotateLeft(inv, r) < cur_) return;
      }
    }
    std::size_t root = detail::smallestPeriod(cur_);
    if (filter_.nonPowerOnly && root != n) return;
    CurveClass c(cur_, filter_.mode, root);
    if (filter_.excludeBoundaryParallel && isBoundaryParallel(c)) return;
    if (++emitted_ > classCap_) {
      throw ResourceLimitError("class enumeration exceeded the configured cap");
    }
    (*fn_)(c);
  }

  EnumerationFilter filter_;
  std::size_t classCap_;
  std::vector<Letter> cur_;
  std::size_t len_ = 0;
  std::size_t emitted_ = 0;
  const std::function<void(const CurveClass&)>* fn_ = nullptr;
};

inline std::vector<CurveClass> enumerateClasses(std::size_t maxLen,
                                                EnumerationFilter filter = {},
                                                std::size_t classCap = 5'000'000) {
  std::vector<CurveClass> out;
  ClassEnumerator e(filter, classCap);
  e.visit(1, maxLen, [&out](const CurveClass& c) { out.push_back(c); });
  return out;
}

}  // namespace pants
