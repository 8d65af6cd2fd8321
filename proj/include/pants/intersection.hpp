#pragma once

#include <cstdint>
#include <vector>

#include "pants/curve_class.hpp"
#include "pants/errors.hpp"
#include "pants/ray.hpp"
#include "pants/ribbon.hpp"

namespace pants {

namespace detail {

struct Strand {
  EndWord fwd;
  EndWord bwd;
};

inline std::vector<Strand> strandsOf(const std::vector<Letter>& w) {
  std::vector<Strand> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.push_back({EndWord::forward(w, i), EndWord::backward(w, i)});
  }
  return out;
}

// Ordered count of crossing configurations between the strand lines of two
// cyclic words, both lifted through a common base vertex of the spine's
// universal cover. A pair (i, j) contributes one crossing when
//   - the two lines are distinct (parallel strands are pushed off and
//     never cross: this resolves every equal-tail degeneracy), and
//   - the base vertex is the first vertex the lines share, walking along
//     strand i (so each configuration is counted at exactly one shift), and
//   - the four ends interleave in the boundary circular order.
//
// Early exit: once the count exceeds `bound` the function returns
// bound + 1; pass the default to count exactly.
inline std::uint64_t orderedCrossings(const std::vector<Letter>& w1,
                                      const std::vector<Letter>& w2,
                                      const RibbonStructure& rib,
                                      std::uint64_t bound = UINT64_MAX) {
  const std::vector<Strand> s1 = strandsOf(w1);
  const std::vector<Strand> s2 = strandsOf(w2);
  std::uint64_t count = 0;
  for (const Strand& A : s1) {
    // Ends of line A in the cut linear order.
    const bool fwdIsLow = compareEnds(A.fwd, A.bwd, rib) == RayOrder::less;
    const EndWord& lo = fwdIsLow ? A.fwd : A.bwd;
    const EndWord& hi = fwdIsLow ? A.bwd : A.fwd;
    const Letter back = A.bwd.at(0);
    for (const Strand& B : s2) {
      // Parallel lines: same forward end, or A forward equals B backward.
      if (compareEnds(A.fwd, B.fwd, rib) == RayOrder::equalTail) continue;
      if (compareEnds(A.fwd, B.bwd, rib) == RayOrder::equalTail) continue;
      // First-shared-vertex condition.
      if (back == B.fwd.at(0) || back == B.bwd.at(0)) continue;

      auto strictlyBetween = [&](const EndWord& x) {
        RayOrder a = compareEnds(lo, x, rib);
        RayOrder b = compareEnds(x, hi, rib);
        if (a == RayOrder::equalTail || b == RayOrder::equalTail) {
          throw Error("internal: unexpected equal-tail ray between distinct lines");
        }
        return a == RayOrder::less && b == RayOrder::less;
      };
      if (strictlyBetween(B.fwd) != strictlyBetween(B.bwd)) {
        if (++count > bound) return bound + 1;
      }
    }
  }
  return count;
}

}  // namespace detail

struct EngineOptions {
  // When set, powers are handled by counting linked strand pairs over the
  // full cyclic word instead of reducing to the primitive root first.
  bool directPowerPath = false;
};

// Minimal self-intersection number. Primitive classes are counted by
// linked strand pairs; the count of ordered crossing configurations is
// even and halves to si. A k-th power contributes k - 1 extra crossings
// where the parallel copies close up, on top of the k^2-scaled crossings
// of the root.
inline std::uint64_t selfIntersection(const CurveClass& c, const EngineOptions& opts = {}) {
  const RibbonStructure& rib = RibbonStructure::pants();
  const std::size_t e = c.exponent();
  std::uint64_t ordered;
  std::uint64_t scale;
  if (opts.directPowerPath || e == 1) {
    ordered = detail::orderedCrossings(c.word(), c.word(), rib);
    scale = 1;
  } else {
    ordered = detail::orderedCrossings(c.rootWord(), c.rootWord(), rib);
    scale = static_cast<std::uint64_t>(e) * e;
  }
  if (ordered % 2 != 0) {
    throw Error("internal: odd ordered self-crossing count for " + c.str());
  }
  return (ordered / 2) * scale + (e - 1);
}

// Geometric intersection number of two classes. Equal classes (and a class
// against its inverse) are treated as two parallel push-off copies, which
// is what the parallel-line rule in orderedCrossings computes.
inline std::uint64_t intersection(const CurveClass& c1, const CurveClass& c2,
                                  const EngineOptions& opts = {}) {
  const RibbonStructure& rib = RibbonStructure::pants();
  if (opts.directPowerPath) {
    return detail::orderedCrossings(c1.word(), c2.word(), rib);
  }
  const std::uint64_t e1 = c1.exponent();
  const std::uint64_t e2 = c2.exponent();
  return e1 * e2 * detail::orderedCrossings(c1.rootWord(), c2.rootWord(), rib);
}

inline std::vector<std::uint64_t> intersectionVector(const CurveClass& c,
                                                     const std::vector<CurveClass>& probes,
                                                     const EngineOptions& opts = {}) {
  std::vector<std::uint64_t> out;
  out.reserve(probes.size());
  for (const CurveClass& p : probes) out.push_back(intersection(c, p, opts));
  return out;
}

// True iff si(c) <= k, with early exit; used by census sweeps.
inline bool selfIntersectionAtMost(const CurveClass& c, std::uint64_t k) {
  const RibbonStructure& rib = RibbonStructure::pants();
  const std::size_t e = c.exponent();
  const std::uint64_t extra = e - 1;
  if (extra > k) return false;
  // si <= k  iff  ordered/2 <= floor((k - e + 1) / e^2)
  const std::uint64_t budget = (k - extra) / (static_cast<std::uint64_t>(e) * e);
  const std::uint64_t ordered =
      detail::orderedCrossings(c.rootWord(), c.rootWord(), rib, 2 * budget + 1);
  return ordered <= 2 * budget;
}

}  // namespace pants
