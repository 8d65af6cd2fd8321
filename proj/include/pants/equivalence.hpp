#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pants/curve_class.hpp"
#include "pants/errors.hpp"
#include "pants/intersection.hpp"
#include "pants/oracle.hpp"

namespace pants {

// The three classes with one self-intersection, in the fixed probe order
// aB, Cb (= abb), aC (= aab).
inline const std::vector<CurveClass>& siOneClasses() {
  static const std::vector<CurveClass> probes = {classOf("aB"), classOf("abb"),
                                                 classOf("aab")};
  return probes;
}

// Ordered triple of intersection numbers against the si = 1 classes.
struct Triple {
  std::uint64_t vAB = 0;
  std::uint64_t vCb = 0;
  std::uint64_t vAC = 0;

  std::array<std::uint64_t, 3> sorted() const {
    std::array<std::uint64_t, 3> s{vAB, vCb, vAC};
    std::sort(s.begin(), s.end());
    return s;
  }
  std::uint64_t minEntry() const { return sorted()[0]; }
  std::uint64_t maxEntry() const { return sorted()[2]; }
  bool allEven() const { return vAB % 2 == 0 && vCb % 2 == 0 && vAC % 2 == 0; }
  bool operator==(const Triple& o) const {
    return vAB == o.vAB && vCb == o.vCb && vAC == o.vAC;
  }
};

inline Triple tripleOf(const CurveClass& c) {
  const auto& probes = siOneClasses();
  return Triple{intersection(c, probes[0]), intersection(c, probes[1]),
                intersection(c, probes[2])};
}

struct SiCensusOptions {
  std::optional<std::size_t> lengthCap;  // default 2k + 2
  std::size_t sweepLengths = 4;          // validation sweep past the cap
};

// All unoriented non-power classes with si = k, in (length, lex) order.
// The default cap 2k + 2 is an empirical contract: a sweep over the next
// `sweepLengths` lengths must find nothing with si <= k, else the census
// is not trusted and CapUnverifiedError is thrown.
inline std::vector<CurveClass> classesWithSI(std::uint64_t k, SiCensusOptions opt = {}) {
  const std::size_t cap = opt.lengthCap.value_or(static_cast<std::size_t>(2 * k + 2));
  EnumerationFilter f{true, Orientation::unoriented, false};
  std::vector<CurveClass> out;
  for (const CurveClass& c : enumerateClasses(cap, f)) {
    if (selfIntersection(c) == k) out.push_back(c);
  }
  if (opt.sweepLengths > 0) {
    ClassEnumerator sweep(f, 100'000'000);
    sweep.visit(cap + 1, cap + opt.sweepLengths, [&](const CurveClass& c) {
      if (selfIntersectionAtMost(c, k)) {
        throw CapUnverifiedError("class " + c.str() + " of length " +
                                 std::to_string(c.length()) + " has si <= " +
                                 std::to_string(k) + "; raise the census cap");
      }
    });
  }
  return out;
}

struct ProbeOptions {
  // Probe classes are non-power by convention; the flag admits
  // power classes d^n with si(d) n^2 + n - 1 = k as probes too.
  bool includePowerProbes = false;
  SiCensusOptions census;
};

inline std::vector<CurveClass> equivalenceProbes(std::uint64_t k, ProbeOptions opt = {}) {
  std::vector<CurveClass> probes = classesWithSI(k, opt.census);
  if (opt.includePowerProbes) {
    for (std::uint64_t e = 2; e - 1 <= k; ++e) {
      const std::uint64_t num = k - (e - 1);
      if (num % (e * e) != 0) continue;
      const std::uint64_t rootSi = num / (e * e);
      for (const CurveClass& root : classesWithSI(rootSi, opt.census)) {
        std::vector<Letter> w;
        for (std::uint64_t rep = 0; rep < e; ++rep) {
          w.insert(w.end(), root.word().begin(), root.word().end());
        }
        probes.push_back(CurveClass::canonical(ReducedWord::reduce(w),
                                               Orientation::unoriented));
      }
    }
    std::sort(probes.begin(), probes.end());
    probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
  }
  return probes;
}

inline bool kEquivalent(const CurveClass& c1, const CurveClass& c2, std::uint64_t k,
                        ProbeOptions opt = {}) {
  const std::vector<CurveClass> probes = equivalenceProbes(k, opt);
  return intersectionVector(c1, probes) == intersectionVector(c2, probes);
}

// Partition of a class set by k-equivalence, together with the verdicts of
// any refinement checks run against it.
struct EquivalenceReport {
  std::uint64_t k = 0;
  std::vector<CurveClass> probeSet;
  std::vector<std::vector<CurveClass>> partition;

  struct RefinementVerdict {
    std::uint64_t j = 0;
    bool pass = true;
    bool passWithPowerProbes = true;
    std::vector<std::pair<CurveClass, CurveClass>> counterexamples;
  };
  std::vector<RefinementVerdict> refinementVerdicts;
};

inline EquivalenceReport equivalencePartition(const std::vector<CurveClass>& classes,
                                              std::uint64_t k, ProbeOptions opt = {}) {
  EquivalenceReport report;
  report.k = k;
  report.probeSet = equivalenceProbes(k, opt);
  std::map<std::vector<std::uint64_t>, std::vector<CurveClass>> cells;
  for (const CurveClass& c : classes) {
    cells[intersectionVector(c, report.probeSet)].push_back(c);
  }
  for (auto& [vec, members] : cells) {
    std::sort(members.begin(), members.end());
    report.partition.push_back(members);
  }
  std::sort(report.partition.begin(), report.partition.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return report;
}

// Checks that every k-equivalent pair in `classes` is also j-equivalent,
// under both probe conventions. Passing on a finite population is
// evidence that k-equivalence refines j-equivalence, not a proof.
inline EquivalenceReport::RefinementVerdict refinementCheck(
    const std::vector<CurveClass>& classes, std::uint64_t k, std::uint64_t j,
    SiCensusOptions census = {}) {
  EquivalenceReport::RefinementVerdict verdict;
  verdict.j = j;

  auto runMode = [&](bool includePowers, bool recordCounterexamples) {
    ProbeOptions po{includePowers, census};
    const auto probesK = equivalenceProbes(k, po);
    const auto probesJ = equivalenceProbes(j, po);
    std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> cellsK;
    std::vector<std::vector<std::uint64_t>> vecJ(classes.size());
    for (std::size_t idx = 0; idx < classes.size(); ++idx) {
      cellsK[intersectionVector(classes[idx], probesK)].push_back(idx);
      vecJ[idx] = intersectionVector(classes[idx], probesJ);
    }
    bool pass = true;
    for (const auto& [vec, members] : cellsK) {
      for (std::size_t m = 1; m < members.size(); ++m) {
        if (vecJ[members[m]] != vecJ[members[0]]) {
          pass = false;
          if (recordCounterexamples) {
            verdict.counterexamples.emplace_back(classes[members[0]],
                                                 classes[members[m]]);
          }
        }
      }
    }
    return pass;
  };

  verdict.pass = runMode(false, true);
  verdict.passWithPowerProbes = runMode(true, false);
  return verdict;
}

// Closed form a(l, n) = l n^2 + n - 1 for the self-intersection of the
// n-th power of a class with si = l.
inline std::uint64_t powerSiFormula(std::uint64_t l, std::uint64_t n) {
  return l * n * n + n - 1;
}

struct FormulaCheck {
  std::string name;
  std::size_t casesChecked = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty() && casesChecked > 0; }
};

// si(a^n B) = n, si(a^n Cb) = n + 1, si(a^n CC) = n + 1, checked with the
// engine and, when requested, the oracle as well.
inline FormulaCheck familyFormulasCheck(std::size_t maxN, bool withOracle) {
  FormulaCheck check{"si(a^nB) = n, si(a^nCb) = n+1, si(a^nCC) = n+1", 0, {}};
  struct Family {
    std::string prefix;
    std::string suffix;
    std::uint64_t offset;
  };
  const std::vector<Family> families = {
      {"a^", "B", 0}, {"a^", "Cb", 1}, {"a^", "CC", 1}};
  for (const auto& fam : families) {
    for (std::size_t n = 1; n <= maxN; ++n) {
      const std::string text = fam.prefix + std::to_string(n) + fam.suffix;
      const CurveClass c = classOf(text);
      const std::uint64_t expected = n + fam.offset;
      ++check.casesChecked;
      const std::uint64_t engine = selfIntersection(c);
      if (engine != expected) {
        check.failures.push_back("engine si(" + text + ") = " + std::to_string(engine) +
                                 ", expected " + std::to_string(expected));
      }
      if (withOracle) {
        const std::uint64_t oracle = oracleSelfIntersection(c);
        if (oracle != expected) {
          check.failures.push_back("oracle si(" + text + ") = " + std::to_string(oracle) +
                                   ", expected " + std::to_string(expected));
        }
      }
    }
  }
  return check;
}

// si(d^n) = si(d) n^2 + n - 1 (direct count versus closed form) and
// i(d^n, b) = n i(d, b) for primitive d.
struct PowerFormulaReport {
  FormulaCheck selfFormula;
  FormulaCheck intersectionFormula;
  FormulaCheck families;
  bool allPass() const {
    return selfFormula.pass() && intersectionFormula.pass() && families.pass();
  }
};

inline PowerFormulaReport verifyPowerFormulas(std::size_t maxRootLen, std::size_t maxExp,
                                              std::size_t probeLen = 4,
                                              bool withOracle = false) {
  PowerFormulaReport report;
  report.selfFormula = {"si(d^n) = si(d) n^2 + n - 1", 0, {}};
  report.intersectionFormula = {"i(d^n, b) = n i(d, b)", 0, {}};

  const EngineOptions direct{true};
  const auto roots = enumerateClasses(maxRootLen, {true, Orientation::unoriented, false});
  const auto probes = enumerateClasses(probeLen, {false, Orientation::unoriented, false});
  for (const CurveClass& d : roots) {
    const std::uint64_t l = selfIntersection(d);
    for (std::size_t n = 2; n <= maxExp; ++n) {
      std::vector<Letter> w;
      for (std::size_t rep = 0; rep < n; ++rep) {
        w.insert(w.end(), d.word().begin(), d.word().end());
      }
      const CurveClass power =
          CurveClass::canonical(ReducedWord::reduce(w), Orientation::unoriented);
      ++report.selfFormula.casesChecked;
      const std::uint64_t viaPairs = selfIntersection(power, direct);
      const std::uint64_t viaFormula = powerSiFormula(l, n);
      if (viaPairs != viaFormula) {
        report.selfFormula.failures.push_back(
            "si(" + d.str() + "^" + std::to_string(n) + ") direct " +
            std::to_string(viaPairs) + " != formula " + std::to_string(viaFormula));
      }
      for (const CurveClass& beta : probes) {
        ++report.intersectionFormula.casesChecked;
        const std::uint64_t direct_i = intersection(power, beta, direct);
        const std::uint64_t scaled = n * intersection(d, beta);
        if (direct_i != scaled) {
          report.intersectionFormula.failures.push_back(
              "i(" + d.str() + "^" + std::to_string(n) + ", " + beta.str() +
              ") direct " + std::to_string(direct_i) + " != " + std::to_string(scaled));
        }
      }
    }
  }
  report.families = familyFormulasCheck(maxExp + 4, withOracle);
  return report;
}

// Full t(a) dataset over non-power, non-boundary-parallel classes, with
// the conjecture verdicts: max <= 2 min everywhere, equality only on
// permutations of (q, q, 2q) with q even, and the expected sorted triples
// all observed.
struct TripleScan {
  struct Row {
    CurveClass cls;
    Triple t;
  };
  std::vector<Row> rows;
  std::set<std::array<std::uint64_t, 3>> sortedTriples;
  bool ratioHolds = true;
  std::vector<Row> ratioCounterexamples;
  bool equalityShapeHolds = true;
  std::vector<Row> equalityCounterexamples;
  bool parityHolds = true;
  std::vector<Row> parityCounterexamples;
};

inline TripleScan scanTriples(std::size_t maxLen) {
  TripleScan scan;
  for (const CurveClass& c : enumerateClasses(maxLen, {true, Orientation::unoriented, true})) {
    TripleScan::Row row{c, tripleOf(c)};
    scan.sortedTriples.insert(row.t.sorted());
    if (!row.t.allEven()) {
      scan.parityHolds = false;
      scan.parityCounterexamples.push_back(row);
    }
    const std::uint64_t lo = row.t.minEntry();
    const std::uint64_t hi = row.t.maxEntry();
    if (hi > 2 * lo) {
      scan.ratioHolds = false;
      scan.ratioCounterexamples.push_back(row);
    } else if (hi == 2 * lo) {
      const auto s = row.t.sorted();
      const bool qq2q = s[0] == s[1] && s[2] == 2 * s[0] && s[0] % 2 == 0 && s[0] > 0;
      if (!qq2q) {
        scan.equalityShapeHolds = false;
        scan.equalityCounterexamples.push_back(row);
      }
    }
    scan.rows.push_back(std::move(row));
  }
  return scan;
}

inline const std::set<std::array<std::uint64_t, 3>>& expectedSortedTriples() {
  static const std::set<std::array<std::uint64_t, 3>> expected = {
      {2, 2, 2}, {2, 2, 4}, {4, 4, 4}, {4, 4, 6}, {4, 4, 8}};
  return expected;
}

// The eight word families C^m a^n b, C^m a^n B, C^m a b^n, C^m a B^n,
// C^m A^n b, C^m A^n B, C^m A b^n, C^m A B^n with m >= 0, n >= 1, matched
// as unoriented cyclic words.
struct TwoIntersectionReport {
  struct Entry {
    CurveClass cls;
    std::vector<std::string> families;
  };
  std::vector<Entry> members;
  std::vector<CurveClass> nonMembers;
  std::vector<std::string> familiesNeverWitnessed;
  bool allMatched() const { return nonMembers.empty(); }
};

inline TwoIntersectionReport classifyTwoIntersections(std::size_t maxLen) {
  struct FamilyShape {
    std::string name;
    Letter mid;
    Letter tail;
    bool repeatMid;  // true: C^m x^n y; false: C^m x y^n
  };
  const std::vector<FamilyShape> shapes = {
      {"C^m a^n b", Letter::a, Letter::b, true},
      {"C^m a^n B", Letter::a, Letter::B, true},
      {"C^m a b^n", Letter::a, Letter::b, false},
      {"C^m a B^n", Letter::a, Letter::B, false},
      {"C^m A^n b", Letter::A, Letter::b, true},
      {"C^m A^n B", Letter::A, Letter::B, true},
      {"C^m A b^n", Letter::A, Letter::b, false},
      {"C^m A B^n", Letter::A, Letter::B, false},
  };

  std::map<std::string, std::vector<std::string>> memberships;
  for (const auto& shape : shapes) {
    for (std::size_t m = 0; 2 * m + 2 <= maxLen; ++m) {
      for (std::size_t n = 1; 2 * m + n + 1 <= maxLen; ++n) {
        std::vector<Letter> w;
        for (std::size_t rep = 0; rep < m; ++rep) {
          w.push_back(Letter::a);
          w.push_back(Letter::b);
        }
        const std::size_t midCount = shape.repeatMid ? n : 1;
        const std::size_t tailCount = shape.repeatMid ? 1 : n;
        for (std::size_t rep = 0; rep < midCount; ++rep) w.push_back(shape.mid);
        for (std::size_t rep = 0; rep < tailCount; ++rep) w.push_back(shape.tail);
        ReducedWord rw = ReducedWord::reduce(w);
        if (rw.empty()) continue;
        CurveClass c = CurveClass::canonical(rw, Orientation::unoriented);
        auto& fams = memberships[c.str()];
        if (std::find(fams.begin(), fams.end(), shape.name) == fams.end()) {
          fams.push_back(shape.name);
        }
      }
    }
  }

  TwoIntersectionReport report;
  const CurveClass figure8 = classOf("aB");
  std::set<std::string> witnessed;
  for (const CurveClass& c : enumerateClasses(maxLen, {true, Orientation::unoriented, false})) {
    if (intersection(c, figure8) != 2) continue;
    auto it = memberships.find(c.str());
    if (it == memberships.end()) {
      report.nonMembers.push_back(c);
    } else {
      report.members.push_back({c, it->second});
      witnessed.insert(it->second.begin(), it->second.end());
    }
  }
  for (const auto& shape : shapes) {
    if (!witnessed.count(shape.name)) {
      report.familiesNeverWitnessed.push_back(shape.name);
    }
  }
  return report;
}

// Empirical membership list of the t = (2, 2, 2) equivalence class.
inline std::vector<CurveClass> equivClass222(std::size_t maxLen) {
  std::vector<CurveClass> out;
  for (const CurveClass& c : enumerateClasses(maxLen, {true, Orientation::unoriented, true})) {
    if (tripleOf(c) == Triple{2, 2, 2}) out.push_back(c);
  }
  return out;
}

}  // namespace pants
