#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "pants/equivalence.hpp"
#include "pants/oracle.hpp"
#include "pants/ray.hpp"

using namespace pants;

namespace {

// Attracting fixed point of a hyperbolic matrix, exactly.
BoundaryPoint attractingPoint(GroupMatrix m) {
  if (m.trace() < 0) {
    m = {-m.p, -m.q, -m.r, -m.s};
  }
  const BigInt disc = m.trace() * m.trace() - 4;
  return BoundaryPoint::quadratic(m.p - m.s, 1, disc, 2 * m.r);
}

}  // namespace

// The engine's circular order of ends (contour order of the spine's
// universal cover) must realize the circular order of the corresponding
// fixed points on the hyperbolic boundary, up to one global reversal.
// Ends with a parabolic period are excluded: the boundary map collapses
// the two ends of every boundary-word line onto one cusp, which is how
// the collar push-off looks from the tree.
TEST_CASE("tree boundary order matches the hyperbolic boundary order") {
  const RibbonStructure& rib = RibbonStructure::pants();

  std::vector<EndWord> ends;
  for (const std::string s :
       {"aB", "ab", "aab", "abb", "aaB", "aBB", "abAb", "abaB", "aabab", "aabbb",
        "aabaBAb", "aabABAb"}) {
    const CurveClass c = classOf(s);
    for (std::size_t off = 0; off < c.length(); ++off) {
      EndWord fwd = EndWord::forward(c.word(), off);
      EndWord bwd = EndWord::backward(c.word(), off);
      if (classifyElement(matrixOf(fwd.period())) == ElementType::hyperbolic) {
        ends.push_back(fwd);
      }
      if (classifyElement(matrixOf(bwd.period())) == ElementType::hyperbolic) {
        ends.push_back(bwd);
      }
    }
  }

  // Deduplicate equal tails, sort by the tree order.
  std::vector<EndWord> distinct;
  for (const EndWord& e : ends) {
    bool dup = false;
    for (const EndWord& d : distinct) {
      if (compareEnds(e, d, rib) == RayOrder::equalTail) dup = true;
    }
    if (!dup) distinct.push_back(e);
  }
  REQUIRE(distinct.size() > 20);
  std::sort(distinct.begin(), distinct.end(), [&](const EndWord& x, const EndWord& y) {
    return compareEnds(x, y, rib) == RayOrder::less;
  });

  std::vector<BoundaryPoint> points;
  for (const EndWord& e : distinct) {
    points.push_back(attractingPoint(matrixOf(e.period())));
  }

  // In circular order, the linear sequence may wrap at most once, in one
  // consistent direction.
  auto countDescents = [&](bool reversed) {
    std::size_t descents = 0;
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
      const BoundaryPoint& cur = points[reversed ? n - 1 - i : i];
      const BoundaryPoint& next = points[reversed ? (2 * n - 2 - i) % n : (i + 1) % n];
      int cmp = BoundaryPoint::compare(cur, next);
      REQUIRE(cmp != 0);
      if (cmp > 0) ++descents;
    }
    return descents;
  };
  const bool forwardCircular = countDescents(false) == 1;
  const bool reversedCircular = countDescents(true) == 1;
  CHECK((forwardCircular || reversedCircular));
}

TEST_CASE("oracle stability equals saturation on small pairs") {
  auto roots = enumerateClasses(5, {true, Orientation::unoriented, false});
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i; j < roots.size(); ++j) {
      const auto w1 = roots[i].word();
      const auto w2 = roots[j].word();
      if (classifyElement(matrixOf(w1)) == ElementType::parabolic) continue;
      if (classifyElement(matrixOf(w2)) == ElementType::parabolic) continue;
      auto lengths = oracle_detail::crossingCosetLengths(w1, w2);
      const std::size_t maxRadius = 2 * (w1.size() + w2.size()) + 8;
      const std::uint64_t stable = oracle_detail::stableCount(
          lengths, maxRadius, w1.size() + w2.size() - 2, false);
      CHECK(stable == lengths.size());
    }
  }
}

TEST_CASE("memoized oracle equals the plain oracle") {
  OracleCache cache;
  auto classes = enumerateClasses(4, {});
  for (const auto& c : classes) {
    CHECK(cache.selfIntersection(c) == oracleSelfIntersection(c));
    CHECK(cache.selfIntersection(c) == oracleSelfIntersection(c));  // cached path
  }
  for (std::size_t i = 0; i < classes.size(); i += 5) {
    for (std::size_t j = i; j < classes.size(); j += 7) {
      CHECK(cache.intersection(classes[i], classes[j]) ==
            oracleIntersection(classes[i], classes[j]));
    }
  }
}

TEST_CASE("si and i are orientation invariant up to length 5") {
  auto classes = enumerateClasses(5, {false, Orientation::oriented, false});
  for (const auto& c : classes) {
    CurveClass inv = CurveClass::canonical(
        ReducedWord::reduce(detail::invertWord(c.word())), Orientation::oriented);
    CHECK(selfIntersection(c) == selfIntersection(inv));
  }
  for (std::size_t i = 0; i < classes.size(); i += 3) {
    for (std::size_t j = 0; j < classes.size(); j += 5) {
      CurveClass invJ = CurveClass::canonical(
          ReducedWord::reduce(detail::invertWord(classes[j].word())),
          Orientation::oriented);
      CHECK(intersection(classes[i], classes[j]) == intersection(classes[i], invJ));
    }
  }
}

TEST_CASE("power laws hold with probes up to length 5") {
  PowerFormulaReport report = verifyPowerFormulas(5, 3, 5, false);
  CHECK(report.selfFormula.pass());
  CHECK(report.intersectionFormula.pass());
  CHECK(report.families.pass());
  for (const auto& f : report.selfFormula.failures) FAIL_CHECK(f);
  for (const auto& f : report.intersectionFormula.failures) FAIL_CHECK(f);
}

// a(l, n)-equivalence implies l-equivalence when the probe set carries the
// power classes the proof rides on (i(x, b^n) = n i(x, b) transfers the
// equalities down). Checked for l in {0, 1, 2}, n = 2, over classes of
// length <= 6; the si = 9 census is probe-capped at length 12, which only
// coarsens the hypothesis side.
TEST_CASE("power-indexed equivalence refines down to the root index") {
  auto classes = enumerateClasses(6, {true, Orientation::unoriented, false});
  struct Case {
    std::uint64_t l, n;
  };
  for (const Case cs : {Case{0, 2}, Case{1, 2}, Case{2, 2}}) {
    const std::uint64_t k = powerSiFormula(cs.l, cs.n);
    ProbeOptions upper;
    upper.includePowerProbes = true;
    if (k >= 9) {
      upper.census.lengthCap = 12;
      upper.census.sweepLengths = 0;
    }
    const auto probesK = equivalenceProbes(k, upper);
    const auto probesL = equivalenceProbes(cs.l, ProbeOptions{true, {}});
    INFO("l=" << cs.l << " n=" << cs.n << " k=" << k << " with " << probesK.size()
              << " probes");
    std::vector<std::vector<std::uint64_t>> vk, vl;
    for (const auto& c : classes) {
      vk.push_back(intersectionVector(c, probesK));
      vl.push_back(intersectionVector(c, probesL));
    }
    std::size_t violations = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = i + 1; j < classes.size(); ++j) {
        if (vk[i] == vk[j] && vl[i] != vl[j]) ++violations;
      }
    }
    CHECK(violations == 0);
  }
}

TEST_CASE("census members agree with the oracle at k = 3") {
  for (const CurveClass& c : classesWithSI(3)) {
    CHECK(selfIntersection(c) == 3);
    CHECK(oracleSelfIntersection(c) == 3);
  }
}
