#pragma once

#include <span>
#include <string>
#include <vector>

#include "pants/errors.hpp"
#include "pants/letter.hpp"
#include "pants/surd.hpp"
#include "pants/word.hpp"

namespace pants {

// Element of SL(2, Z) realizing a deck transformation. Entries are
// arbitrary precision: they grow exponentially in word length.
struct GroupMatrix {
  BigInt p, q, r, s;  // [[p, q], [r, s]]

  BigInt det() const { return p * s - q * r; }
  BigInt trace() const { return p + s; }

  bool operator==(const GroupMatrix& o) const {
    return p == o.p && q == o.q && r == o.r && s == o.s;
  }
};

inline GroupMatrix identityMatrix() { return {1, 0, 0, 1}; }

inline GroupMatrix operator*(const GroupMatrix& x, const GroupMatrix& y) {
  GroupMatrix m{x.p * y.p + x.q * y.r, x.p * y.q + x.q * y.s, x.r * y.p + x.s * y.r,
                x.r * y.q + x.s * y.s};
  if (m.det() != 1) throw Error("internal: matrix product left SL(2, Z)");
  return m;
}

inline GroupMatrix inverseMatrix(const GroupMatrix& m) { return {m.s, -m.q, -m.r, m.p}; }

// The faithful discrete representation used throughout: a free group of
// Sanov type uniformizing the thrice-punctured sphere, oriented so that
// the parabolic (cusp) classes are exactly the boundary words a, b, ab.
inline const GroupMatrix& generatorMatrix(Letter x) {
  static const GroupMatrix gens[4] = {
      {1, 2, 0, 1},    // a
      {1, -2, 0, 1},   // A
      {1, 0, -2, 1},   // b
      {1, 0, 2, 1},    // B
  };
  return gens[letterIndex(x)];
}

inline GroupMatrix matrixOf(std::span<const Letter> word) {
  GroupMatrix m = identityMatrix();
  for (Letter x : word) m = m * generatorMatrix(x);
  return m;
}

inline GroupMatrix matrixOf(const ReducedWord& w) {
  return matrixOf(std::span<const Letter>(w.letters()));
}

inline GroupMatrix matrixOf(const std::vector<Letter>& w) {
  return matrixOf(std::span<const Letter>(w));
}

enum class ElementType { identity, parabolic, hyperbolic };

inline ElementType classifyElement(const GroupMatrix& m) {
  if ((m.p == 1 && m.q == 0 && m.r == 0 && m.s == 1) ||
      (m.p == -1 && m.q == 0 && m.r == 0 && m.s == -1)) {
    return ElementType::identity;
  }
  BigInt t = abs(m.trace());
  if (t == 2) return ElementType::parabolic;
  if (t > 2) return ElementType::hyperbolic;
  throw EllipticElementError("elliptic element encountered: |trace| < 2");
}

}  // namespace pants
