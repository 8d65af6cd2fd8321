#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "pants/curve_class.hpp"
#include "pants/letter.hpp"

namespace pants {

// Cyclic order of the four half-edge ends at the single vertex of the
// wedge-of-two-circles spine. Half-edge ends are identified with departure
// directions: reading letter x means leaving the vertex along end x.
//
// The structure is found by search, not hard-coded: among the cyclic
// orders of four half-edges, we pick the one whose ribbon-graph boundary
// walk has exactly three cycles spelling the classes a, b, ab. That is
// what makes the thickened spine a pair of pants with the expected
// boundary words.
class RibbonStructure {
 public:
  static const RibbonStructure& pants() {
    static const RibbonStructure instance = search();
    return instance;
  }

  const std::array<Letter, 4>& cyclicOrder() const { return order_; }

  int position(Letter x) const { return pos_[letterIndex(x)]; }

  // Rank of branch x at a vertex whose return direction is `back`,
  // counting counterclockwise from just after `back`. Ranks 0..2 order
  // the three continuations of a reduced word.
  int branchRank(Letter back, Letter x) const {
    return ((position(x) - position(back)) & 3) - 1;
  }

  // Boundary cycles of the thickened spine, as letter sequences.
  std::vector<std::vector<Letter>> boundaryWalks() const { return walks(order_); }

 private:
  explicit RibbonStructure(const std::array<Letter, 4>& order) : order_(order) {
    for (int i = 0; i < 4; ++i) pos_[letterIndex(order_[i])] = i;
  }

  static std::vector<std::vector<Letter>> walks(const std::array<Letter, 4>& order) {
    std::array<int, 4> pos{};
    for (int i = 0; i < 4; ++i) pos[letterIndex(order[i])] = i;
    // Face-tracing permutation of a ribbon graph: after traversing the
    // edge entered along h, continue with the next end after its partner.
    auto next = [&](Letter h) { return order[(pos[letterIndex(inverse(h))] + 1) & 3]; };
    std::vector<std::vector<Letter>> faces;
    std::array<bool, 4> used{};
    for (Letter start : allLetters()) {
      if (used[letterIndex(start)]) continue;
      std::vector<Letter> face;
      Letter h = start;
      do {
        used[letterIndex(h)] = true;
        face.push_back(h);
        h = next(h);
      } while (h != start);
      faces.push_back(face);
    }
    return faces;
  }

  static RibbonStructure search() {
    const std::array<Letter, 3> rest = {Letter::A, Letter::b, Letter::B};
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                             {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& p : perms) {
      std::array<Letter, 4> order = {Letter::a, rest[p[0]], rest[p[1]], rest[p[2]]};
      auto faces = walks(order);
      if (faces.size() != 3) continue;
      std::vector<std::string> classes;
      for (const auto& f : faces) {
        classes.push_back(
            CurveClass::canonical(ReducedWord::reduce(f), Orientation::unoriented).str());
      }
      std::sort(classes.begin(), classes.end());
      if (classes == std::vector<std::string>{"a", "ab", "b"}) {
        return RibbonStructure(order);
      }
    }
    throw std::logic_error("no cyclic order yields a pair of pants with boundary a, b, ab");
  }

  std::array<Letter, 4> order_;
  std::array<int, 4> pos_{};
};

}  // namespace pants
