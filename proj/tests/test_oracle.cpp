#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "pants/oracle.hpp"

using namespace pants;

namespace {

std::string keyOf(const std::vector<Letter>& w) {
  std::string s;
  for (Letter l : w) s.push_back(toChar(l));
  return s;
}

// Brute force: every reduced word g with |g| <= radius, canonicalized,
// keeping the crossing cosets. Validates that the prefix-pair candidate
// set in the oracle misses nothing.
std::set<std::string> bruteCrossingCosets(const std::vector<Letter>& w1,
                                          const std::vector<Letter>& w2,
                                          std::size_t radius) {
  const GroupMatrix m1 = matrixOf(w1);
  const GroupMatrix m2 = matrixOf(w2);
  const Geodesic axis1 = axisOf(m1);
  std::set<std::string> crossingSet;
  std::set<std::string> seen;

  std::vector<Letter> g;
  std::function<void()> dfs = [&]() {
    std::vector<Letter> canon = oracle_detail::canonicalCosetRep(g, w1, w2);
    std::string key = keyOf(canon);
    if (canon.size() <= radius && seen.insert(key).second) {
      GroupMatrix gm = matrixOf(canon);
      Geodesic axis2 = axisOf(gm * m2 * inverseMatrix(gm));
      if (axis2 != axis1 && crossing(axis1, axis2)) crossingSet.insert(key);
    }
    if (g.size() == radius) return;
    for (Letter x : allLetters()) {
      if (!g.empty() && x == inverse(g.back())) continue;
      g.push_back(x);
      dfs();
      g.pop_back();
    }
  };
  dfs();
  return crossingSet;
}

std::set<std::string> prefixPairCrossingCosets(const std::vector<Letter>& w1,
                                               const std::vector<Letter>& w2,
                                               std::size_t radius) {
  const GroupMatrix m1 = matrixOf(w1);
  const GroupMatrix m2 = matrixOf(w2);
  const Geodesic axis1 = axisOf(m1);
  std::set<std::string> out;
  for (std::size_t i = 0; i < w1.size(); ++i) {
    for (std::size_t j = 0; j < w2.size(); ++j) {
      std::vector<Letter> p(w1.begin(), w1.begin() + static_cast<std::ptrdiff_t>(i));
      std::vector<Letter> q(w2.begin(), w2.begin() + static_cast<std::ptrdiff_t>(j));
      std::vector<Letter> g = oracle_detail::reduceConcat(p, oracle_detail::inverted(q));
      std::vector<Letter> canon = oracle_detail::canonicalCosetRep(g, w1, w2);
      if (canon.size() > radius) continue;
      GroupMatrix gm = matrixOf(canon);
      Geodesic axis2 = axisOf(gm * m2 * inverseMatrix(gm));
      if (axis2 != axis1 && crossing(axis1, axis2)) out.insert(keyOf(canon));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("oracle reproduces the known small values") {
  CHECK(oracleSelfIntersection(classOf("a")) == 0);
  CHECK(oracleSelfIntersection(classOf("ab")) == 0);
  CHECK(oracleSelfIntersection(classOf("aB")) == 1);
  CHECK(oracleSelfIntersection(classOf("aab")) == 1);
  CHECK(oracleSelfIntersection(classOf("abb")) == 1);
  CHECK(oracleSelfIntersection(classOf("aaB")) == 2);
  CHECK(oracleSelfIntersection(classOf("aabb")) == 2);
  CHECK(oracleSelfIntersection(classOf("aaaB")) == 3);
  CHECK(oracleSelfIntersection(classOf("a^2")) == 1);
  CHECK(oracleSelfIntersection(classOf("(aB)^2")) == 5);

  CHECK(oracleIntersection(classOf("a"), classOf("aB")) == 0);
  CHECK(oracleIntersection(classOf("aB"), classOf("abb")) == 2);
  CHECK(oracleIntersection(classOf("aB"), classOf("aB")) == 2);
  CHECK(oracleIntersection(classOf("(aB)^2"), classOf("abb")) == 4);
  CHECK(oracleIntersection(classOf("aab"), classOf("abb")) == 2);
}

TEST_CASE("oracle intersection is symmetric") {
  for (const std::string x : {"aB", "aab", "abb", "aaB", "abAb"}) {
    for (const std::string y : {"aB", "aab", "abb", "aaB", "abAb"}) {
      CHECK(oracleIntersection(classOf(x), classOf(y)) ==
            oracleIntersection(classOf(y), classOf(x)));
    }
  }
}

TEST_CASE("prefix-pair coset enumeration matches brute force at small radius") {
  struct Pair {
    std::string w1, w2;
  };
  for (const auto& pr : {Pair{"aB", "aB"}, Pair{"aB", "abb"}, Pair{"aab", "abb"},
                         Pair{"aaB", "aB"}, Pair{"abAb", "aab"}}) {
    auto w1 = classOf(pr.w1).word();
    auto w2 = classOf(pr.w2).word();
    auto brute = bruteCrossingCosets(w1, w2, 5);
    auto fast = prefixPairCrossingCosets(w1, w2, 5);
    INFO(pr.w1 << " vs " << pr.w2);
    CHECK(brute == fast);
  }
}

TEST_CASE("convergence errors surface at absurd radii") {
  CHECK_THROWS_AS(oracleIntersection(classOf("aB"), classOf("abb"), 2), NotConvergedError);
}

TEST_CASE("stable counts do not change with a larger radius") {
  for (const std::string x : {"aB", "aab", "aaB"}) {
    CurveClass c = classOf(x);
    std::uint64_t atDefault = oracleSelfIntersection(c);
    std::uint64_t atLarge = oracleSelfIntersection(c, 200);
    CHECK(atDefault == atLarge);
  }
  CHECK(oracleIntersection(classOf("aB"), classOf("abb"), 100) ==
        oracleIntersection(classOf("aB"), classOf("abb")));
}

TEST_CASE("oracle agrees with the engine on classes up to length 4") {
  auto classes = enumerateClasses(4, {});
  for (const auto& c : classes) {
    INFO(c.str());
    CHECK(oracleSelfIntersection(c) == selfIntersection(c));
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i; j < classes.size(); ++j) {
      INFO(classes[i].str() << " vs " << classes[j].str());
      CHECK(oracleIntersection(classes[i], classes[j]) ==
            intersection(classes[i], classes[j]));
    }
  }
}
