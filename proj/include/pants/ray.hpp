#pragma once

#include <cstddef>
#include <vector>

#include "pants/curve_class.hpp"
#include "pants/letter.hpp"
#include "pants/ribbon.hpp"

namespace pants {

// A purely periodic right-infinite reduced word, one end of the spine's
// universal cover. Well defined because the repeating block is a rotation
// of a cyclically reduced word.
class EndWord {
 public:
  static EndWord forward(const std::vector<Letter>& cyc, std::size_t offset) {
    const std::size_t n = cyc.size();
    std::vector<Letter> period(n);
    for (std::size_t k = 0; k < n; ++k) period[k] = cyc[(offset + k) % n];
    return EndWord(std::move(period));
  }

  // The backward end of the strand through offset: first letter is the
  // inverse of the letter read just before the offset.
  static EndWord backward(const std::vector<Letter>& cyc, std::size_t offset) {
    const std::size_t n = cyc.size();
    std::vector<Letter> period(n);
    for (std::size_t k = 0; k < n; ++k) {
      period[k] = inverse(cyc[(offset + n - 1 - (k % n)) % n]);
    }
    return EndWord(std::move(period));
  }

  Letter at(std::size_t k) const { return period_[k % period_.size()]; }
  std::size_t periodLength() const { return period_.size(); }
  const std::vector<Letter>& period() const { return period_; }

 private:
  explicit EndWord(std::vector<Letter> period) : period_(std::move(period)) {}
  std::vector<Letter> period_;
};

enum class RayOrder { less, greater, equalTail };

// Linear order of ends induced by the ribbon structure: the contour order
// of the planar tree, cut immediately before the first branch of the base
// vertex. Two ends compare equalTail exactly when the infinite words
// coincide; agreement through the sum of the two period lengths forces
// full agreement.
inline RayOrder compareEnds(const EndWord& u, const EndWord& v, const RibbonStructure& rib) {
  if (u.at(0) != v.at(0)) {
    return rib.position(u.at(0)) < rib.position(v.at(0)) ? RayOrder::less : RayOrder::greater;
  }
  const std::size_t bound = u.periodLength() + v.periodLength();
  for (std::size_t k = 1; k < bound; ++k) {
    Letter x = u.at(k), y = v.at(k);
    if (x == y) continue;
    Letter back = inverse(u.at(k - 1));
    return rib.branchRank(back, x) < rib.branchRank(back, y) ? RayOrder::less
                                                             : RayOrder::greater;
  }
  return RayOrder::equalTail;
}

// The right-infinite word of a class read from a rotation offset.
struct Ray {
  CurveClass base;
  std::size_t offset = 0;

  EndWord end() const { return EndWord::forward(base.word(), offset % base.length()); }
};

inline RayOrder compareRays(const Ray& r1, const Ray& r2, const RibbonStructure& rib) {
  return compareEnds(r1.end(), r2.end(), rib);
}

}  // namespace pants
