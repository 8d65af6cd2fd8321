#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "pants/curve_class.hpp"

using namespace pants;

namespace {

// Independent naive enumeration: every letter string of a given length,
// filtered and canonicalized by brute force.
// Compares class names with the library's letter order a < A < b < B.
bool nameLess(const std::string& x, const std::string& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    Letter lx = *letterFromChar(x[i]);
    Letter ly = *letterFromChar(y[i]);
    if (lx != ly) return lx < ly;
  }
  return false;
}

std::vector<std::string> naiveClasses(std::size_t maxLen, const EnumerationFilter& f) {
  std::set<std::string> seen;
  std::vector<std::string> out;
  for (std::size_t len = 1; len <= maxLen; ++len) {
    std::vector<std::size_t> idx(len, 0);
    while (true) {
      std::vector<Letter> w;
      for (std::size_t i : idx) w.push_back(static_cast<Letter>(i));
      bool reduced = true;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i + 1] == inverse(w[i])) reduced = false;
      }
      if (reduced && !(w.size() >= 2 && w.back() == inverse(w.front()))) {
        CurveClass c = CurveClass::canonical(ReducedWord::reduce(w), f.mode);
        bool keep = c.length() == len;
        if (keep && f.nonPowerOnly && c.isPower()) keep = false;
        if (keep && f.excludeBoundaryParallel && isBoundaryParallel(c)) keep = false;
        if (keep && seen.insert(c.str()).second) out.push_back(c.str());
      }
      std::size_t pos = 0;
      while (pos < len && ++idx[pos] == 4) idx[pos++] = 0;
      if (pos == len) break;
    }
  }
  std::sort(out.begin(), out.end(), nameLess);
  return out;
}

std::vector<std::string> names(const std::vector<CurveClass>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.str());
  return out;
}

}  // namespace

TEST_CASE("canonicalClass examples") {
  CHECK(classOf("baB").str() == "a");
  CHECK(classOf("Bba").str() == "a");

  CurveClass p = classOf("aBaB");
  CHECK(p.str() == "aBaB");
  CHECK(p.rootLength() == 2);
  CHECK(p.exponent() == 2);
  CHECK(p.primitiveRoot().str() == "aB");

  // Unoriented canonicalization minimizes over the inverse word too.
  CHECK(classOf("bA").str() == "aB");
  CHECK(CurveClass::canonical(parseWord("bA"), Orientation::oriented).str() == "Ab");

  CHECK_THROWS_AS(classOf("aA"), TrivialClassError);
  CHECK_THROWS_AS(classOf("abBA"), TrivialClassError);
}

TEST_CASE("canonicalClass is rotation invariant") {
  for (const std::string s : {"aab", "abaB", "aabab", "aaBB", "abAb"}) {
    CurveClass c = classOf(s);
    const auto& w = c.word();
    for (std::size_t r = 0; r < w.size(); ++r) {
      std::vector<Letter> rot(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
      CHECK(CurveClass::canonical(ReducedWord::reduce(rot), c.mode()) == c);
    }
  }
}

TEST_CASE("exponent is at least 2 exactly for proper-rotation-fixed words") {
  for (const auto& c : enumerateClasses(6, {})) {
    const auto& w = c.word();
    bool fixedByProperRotation = false;
    for (std::size_t r = 1; r < w.size() && !fixedByProperRotation; ++r) {
      std::vector<Letter> rot(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
      fixedByProperRotation = rot == w;
    }
    CHECK((c.exponent() >= 2) == fixedByProperRotation);
  }
}

TEST_CASE("boundary-parallel detection") {
  CHECK(isBoundaryParallel(classOf("a")));
  CHECK(isBoundaryParallel(classOf("b")));
  CHECK(isBoundaryParallel(classOf("ab")));
  CHECK(isBoundaryParallel(classOf("BA")));
  CHECK(isBoundaryParallel(classOf("(ab)^3")));
  CHECK(isBoundaryParallel(classOf("a^4")));
  CHECK_FALSE(isBoundaryParallel(classOf("aB")));
  CHECK_FALSE(isBoundaryParallel(classOf("aab")));
  CHECK_FALSE(isBoundaryParallel(classOf("(aB)^2")));
}

TEST_CASE("enumerateClasses small censuses") {
  EnumerationFilter oriented{false, Orientation::oriented, false};
  auto len1 = enumerateClasses(1, oriented);
  CHECK(names(len1) == std::vector<std::string>{"a", "A", "b", "B"});

  auto len2 = enumerateClasses(2, oriented);
  CHECK(len2.size() == 12);  // 4 of length 1 plus 8 of length 2

  EnumerationFilter filtered{true, Orientation::unoriented, true};
  auto cs = enumerateClasses(3, filtered);
  auto ns = names(cs);
  CHECK(std::find(ns.begin(), ns.end(), "aB") != ns.end());
  CHECK(std::find(ns.begin(), ns.end(), "aab") != ns.end());
  CHECK(std::find(ns.begin(), ns.end(), "abb") != ns.end());
}

TEST_CASE("enumerateClasses matches naive enumeration up to length 6") {
  for (EnumerationFilter f : {EnumerationFilter{false, Orientation::oriented, false},
                              EnumerationFilter{false, Orientation::unoriented, false},
                              EnumerationFilter{true, Orientation::unoriented, true}}) {
    auto fast = names(enumerateClasses(6, f));
    auto naive = naiveClasses(6, f);
    REQUIRE(fast == naive);
  }
}

TEST_CASE("enumerateClasses is deterministic and ordered") {
  auto a = names(enumerateClasses(5, {}));
  auto b = names(enumerateClasses(5, {}));
  CHECK(a == b);
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    CHECK(nameLess(a[i], a[i + 1]));
  }
}

TEST_CASE("enumerateClasses honors the class cap") {
  CHECK_THROWS_AS(enumerateClasses(6, {}, 10), ResourceLimitError);
}
