#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <utility>

#include "pants/errors.hpp"

namespace pants {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline int signOf(const BigInt& x) { return x.sign(); }

// Sign of p + q * sqrt(d) with d >= 0, computed in integers only.
inline int signPQ(const BigInt& p, const BigInt& q, const BigInt& d) {
  if (q == 0 || d == 0) return signOf(p);
  if (p == 0) return signOf(q);
  int sp = signOf(p), sq = signOf(q);
  if (sp == sq) return sp;
  // Opposite signs: compare p^2 against q^2 d.
  int c = signOf(p * p - q * q * d);
  if (c == 0) return 0;
  return c > 0 ? sp : sq;
}

// Sign of p + q * sqrt(d1) + s * sqrt(d2), integers, d1, d2 >= 0.
inline int signPQS(const BigInt& p, const BigInt& q, const BigInt& d1, const BigInt& s,
                   const BigInt& d2) {
  if (s == 0 || d2 == 0) return signPQ(p, q, d1);
  if (q == 0 || d1 == 0) return signPQ(p, s, d2);
  const int t1 = signPQ(p, q, d1);  // sign of u = p + q sqrt(d1)
  const int t2 = signOf(s);         // sign of w = s sqrt(d2)
  if (t1 == 0) return t2;
  if (t1 != t2) {
    // |u| versus |w|: u^2 - s^2 d2 = (p^2 + q^2 d1 - s^2 d2) + 2pq sqrt(d1).
    int c = signPQ(p * p + q * q * d1 - s * s * d2, 2 * p * q, d1);
    if (c == 0) return 0;
    return c > 0 ? t1 : t2;
  }
  return t1;
}

}  // namespace detail

// An exact point of the boundary circle R u {infinity}: either infinity or
// (p + q sqrt(d)) / r with integer p, q, d >= 0 and r > 0. The linear
// comparator places infinity above every real, which fixes one cut of the
// circle; interleaving tests are cut-independent.
class BoundaryPoint {
 public:
  static BoundaryPoint infinity() { return BoundaryPoint(); }

  static BoundaryPoint rational(BigInt num, BigInt den) {
    return quadratic(std::move(num), 0, 0, std::move(den));
  }

  static BoundaryPoint quadratic(BigInt p, BigInt q, BigInt d, BigInt r) {
    if (r == 0) throw std::invalid_argument("boundary point with zero denominator");
    if (d < 0) throw std::invalid_argument("boundary point with negative discriminant");
    if (r < 0) {
      p = -p;
      q = -q;
      r = -r;
    }
    BoundaryPoint x;
    x.infinite_ = false;
    x.p_ = std::move(p);
    x.q_ = std::move(q);
    x.d_ = std::move(d);
    x.r_ = std::move(r);
    return x;
  }

  bool isInfinity() const { return infinite_; }

  // -1, 0, +1 in the linear order on R with infinity greatest.
  static int compare(const BoundaryPoint& x, const BoundaryPoint& y) {
    if (x.infinite_ && y.infinite_) return 0;
    if (x.infinite_) return 1;
    if (y.infinite_) return -1;
    // sign of (p1 + q1 sqrt(d1)) r2 - (p2 + q2 sqrt(d2)) r1
    return detail::signPQS(x.p_ * y.r_ - y.p_ * x.r_, x.q_ * y.r_, x.d_, -y.q_ * x.r_,
                           y.d_);
  }

  bool operator==(const BoundaryPoint& o) const { return compare(*this, o) == 0; }
  bool operator!=(const BoundaryPoint& o) const { return compare(*this, o) != 0; }
  bool operator<(const BoundaryPoint& o) const { return compare(*this, o) < 0; }

  // Crude floating approximation, for diagnostics only; never used in
  // predicates.
  double approx() const {
    if (infinite_) return std::numeric_limits<double>::infinity();
    return (p_.convert_to<double>() +
            q_.convert_to<double>() * std::sqrt(d_.convert_to<double>())) /
           r_.convert_to<double>();
  }

 private:
  BoundaryPoint() = default;

  bool infinite_ = true;
  BigInt p_, q_, d_, r_;
};

}  // namespace pants
