#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "pants/intersection.hpp"

using namespace pants;

TEST_CASE("self-intersection of the small classes") {
  CHECK(selfIntersection(classOf("a")) == 0);
  CHECK(selfIntersection(classOf("b")) == 0);
  CHECK(selfIntersection(classOf("ab")) == 0);

  CHECK(selfIntersection(classOf("aB")) == 1);
  CHECK(selfIntersection(classOf("aab")) == 1);   // aC
  CHECK(selfIntersection(classOf("abb")) == 1);   // Cb

  CHECK(selfIntersection(classOf("aaB")) == 2);
  CHECK(selfIntersection(classOf("aBB")) == 2);
  CHECK(selfIntersection(classOf("aaab")) == 2);  // aaC
  CHECK(selfIntersection(classOf("aabab")) == 2); // aCC
  CHECK(selfIntersection(classOf("abbb")) == 2);  // Cbb
  CHECK(selfIntersection(classOf("ababb")) == 2); // CCb
  CHECK(selfIntersection(classOf("aabb")) == 2);  // aCb
  CHECK(selfIntersection(classOf("abaB")) == 2);  // CaB
  CHECK(selfIntersection(classOf("abAb")) == 2);  // CAb

  CHECK(selfIntersection(classOf("aaaB")) == 3);
}

TEST_CASE("self-intersection of powers") {
  CHECK(selfIntersection(classOf("(aB)^2")) == 5);  // a(1,2) = 4 + 2 - 1
  CHECK(selfIntersection(classOf("a^2")) == 1);     // a(0,2)
  CHECK(selfIntersection(classOf("a^3")) == 2);
  CHECK(selfIntersection(classOf("(ab)^4")) == 3);

  EngineOptions direct{true};
  CHECK(selfIntersection(classOf("(aB)^2"), direct) == 5);
  CHECK(selfIntersection(classOf("(aB)^3"), direct) == 11);
  CHECK(selfIntersection(classOf("a^4"), direct) == 3);
  CHECK(selfIntersection(classOf("(aab)^2"), direct) == 5);
}

TEST_CASE("pairwise intersection numbers of the named classes") {
  CurveClass figure8 = classOf("aB");
  CurveClass cb = classOf("abb");
  CurveClass ac = classOf("aab");

  CHECK(intersection(figure8, cb) == 2);
  CHECK(intersection(classOf("a"), figure8) == 0);
  CHECK(intersection(classOf("(aB)^2"), cb) == 4);
  CHECK(intersection(figure8, figure8) == 2);

  CHECK(intersectionVector(figure8, {figure8, cb, ac}) ==
        std::vector<std::uint64_t>{2, 2, 2});
  CHECK(intersectionVector(classOf("a"), {figure8, cb, ac}) ==
        std::vector<std::uint64_t>{0, 0, 0});
  CHECK(intersectionVector(classOf("(aB)^2"), {figure8, cb, ac}) ==
        std::vector<std::uint64_t>{4, 4, 4});
}

TEST_CASE("boundary-parallel classes are disjoint from everything") {
  for (const std::string boundary : {"a", "b", "ab", "a^3", "(ab)^2"}) {
    for (const std::string other : {"a", "ab", "aB", "aab", "abAb", "(aB)^2"}) {
      CHECK(intersection(classOf(boundary), classOf(other)) == 0);
    }
  }
}

TEST_CASE("intersection is symmetric and orientation invariant on small classes") {
  auto classes = enumerateClasses(4, {});
  for (const auto& x : classes) {
    CurveClass xInv =
        CurveClass::canonical(ReducedWord::reduce(detail::invertWord(x.word())),
                              Orientation::oriented);
    CurveClass xOri = CurveClass::canonical(ReducedWord::reduce(x.word()),
                                            Orientation::oriented);
    CHECK(selfIntersection(xOri) == selfIntersection(xInv));
    for (const auto& y : classes) {
      std::uint64_t xy = intersection(x, y);
      CHECK(xy == intersection(y, x));
      CHECK(xy == intersection(x, CurveClass::canonical(
                                      ReducedWord::reduce(detail::invertWord(y.word())),
                                      Orientation::oriented)));
    }
  }
}

TEST_CASE("direct power path agrees with the root-formula path") {
  EngineOptions direct{true};
  for (const std::string root : {"aB", "aab", "abb", "aaB", "ab"}) {
    for (int n = 2; n <= 3; ++n) {
      CurveClass p = classOf("(" + root + ")^" + std::to_string(n));
      CHECK(selfIntersection(p, direct) == selfIntersection(p));
      for (const std::string probe : {"aB", "abb", "aabb"}) {
        CurveClass q = classOf(probe);
        CHECK(intersection(p, q, direct) == intersection(p, q));
      }
    }
  }
}

TEST_CASE("si early-exit predicate matches exact values") {
  for (const auto& c : enumerateClasses(5, {true, Orientation::unoriented, false})) {
    std::uint64_t si = selfIntersection(c);
    for (std::uint64_t k = 0; k <= 6; ++k) {
      CHECK(selfIntersectionAtMost(c, k) == (si <= k));
    }
  }
}
