#pragma once

#include <utility>

#include "pants/errors.hpp"
#include "pants/matrix.hpp"
#include "pants/surd.hpp"

namespace pants {

// The axis of a hyperbolic isometry: an unordered pair of distinct
// boundary points, stored exactly.
class Geodesic {
 public:
  Geodesic(BoundaryPoint e1, BoundaryPoint e2) {
    int c = BoundaryPoint::compare(e1, e2);
    if (c == 0) throw std::invalid_argument("geodesic endpoints must be distinct");
    if (c < 0) {
      lo_ = std::move(e1);
      hi_ = std::move(e2);
    } else {
      lo_ = std::move(e2);
      hi_ = std::move(e1);
    }
  }

  const BoundaryPoint& lo() const { return lo_; }
  const BoundaryPoint& hi() const { return hi_; }

  bool operator==(const Geodesic& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }
  bool operator!=(const Geodesic& o) const { return !(*this == o); }

 private:
  BoundaryPoint lo_ = BoundaryPoint::infinity();
  BoundaryPoint hi_ = BoundaryPoint::infinity();
};

// Fixed points of the Moebius action of m, i.e. roots of
// r x^2 + (s - p) x - q = 0. For an integer hyperbolic matrix r != 0 and
// the discriminant is trace^2 - 4 > 0, so both endpoints are finite
// quadratic irrationals.
inline Geodesic axisOf(const GroupMatrix& m) {
  if (classifyElement(m) != ElementType::hyperbolic) {
    throw NotHyperbolicError("axis requested for a non-hyperbolic element");
  }
  const BigInt a = m.r;
  const BigInt b = m.s - m.p;
  const BigInt disc = b * b + 4 * m.q * m.r;  // = trace^2 - 4
  if (a == 0 || disc <= 0) {
    throw NotHyperbolicError("degenerate fixed-point equation");
  }
  return Geodesic(BoundaryPoint::quadratic(-b, 1, disc, 2 * a),
                  BoundaryPoint::quadratic(-b, -1, disc, 2 * a));
}

// True iff the endpoint pairs strictly interleave on the boundary circle.
// With all four points distinct, circular interleaving equals linear
// interleaving regardless of the cut, so the linear comparator suffices.
inline bool crossing(const Geodesic& g1, const Geodesic& g2) {
  const BoundaryPoint& x = g2.lo();
  const BoundaryPoint& y = g2.hi();
  if (x == g1.lo() || x == g1.hi() || y == g1.lo() || y == g1.hi()) {
    throw SharedEndpointError("geodesics share an endpoint");
  }
  const bool xInside = g1.lo() < x && x < g1.hi();
  const bool yInside = g1.lo() < y && y < g1.hi();
  return xInside != yInside;
}

}  // namespace pants
