#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pants/equivalence.hpp"
#include "pants/oracle.hpp"

namespace pants {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationSettings {
  std::size_t oracleAgreeLen = 6;   // engine-oracle agreement sweep
  std::size_t parityLen = 7;        // parity and symmetry sweep
  std::size_t refineLen = 7;        // refinement-check population
  std::size_t tripleScanLen = 8;    // triple scan
  std::size_t twoIntLen = 8;        // two-intersection classification
  std::size_t powerRootLen = 5;     // power-law roots
  std::size_t powerProbeLen = 4;    // power-law probes
  std::size_t powerMaxExp = 3;      // power-law exponents
  std::size_t familyMaxN = 8;       // a^n family range
};

namespace verification_detail {

inline std::string plural(std::size_t n, const char* noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

inline CriterionResult censusCriterion(int id, std::uint64_t k,
                                       const std::vector<std::string>& expected) {
  CriterionResult r{id, "si=" + std::to_string(k) + " census", false, ""};
  try {
    std::vector<std::string> got;
    for (const CurveClass& c : classesWithSI(k)) got.push_back(c.str());
    r.pass = got == expected;
    std::ostringstream os;
    os << "expected {";
    for (std::size_t i = 0; i < expected.size(); ++i) os << (i ? ", " : "") << expected[i];
    os << "}, found {";
    for (std::size_t i = 0; i < got.size(); ++i) os << (i ? ", " : "") << got[i];
    os << "}";
    r.detail = os.str();
  } catch (const Error& e) {
    r.detail = e.what();
  }
  return r;
}

}  // namespace verification_detail

inline CriterionResult criterionSiOneCensus() {
  return verification_detail::censusCriterion(1, 1, {"aB", "aab", "abb"});
}

inline CriterionResult criterionSiTwoCensus() {
  return verification_detail::censusCriterion(
      2, 2, {"aaB", "aBB", "aaab", "aabb", "abaB", "abAb", "abbb", "aabab", "ababb"});
}

inline CriterionResult criterionFamilyFormulas(const VerificationSettings& s) {
  CriterionResult r{3, "si family formulas, engine and oracle", false, ""};
  FormulaCheck check = familyFormulasCheck(s.familyMaxN, true);
  r.pass = check.pass();
  r.detail = verification_detail::plural(check.casesChecked, "case") + " checked";
  for (const std::string& f : check.failures) r.detail += "; " + f;
  return r;
}

inline CriterionResult criterionPowerLaws(const VerificationSettings& s) {
  CriterionResult r{4, "power laws for si and i", false, ""};
  PowerFormulaReport report =
      verifyPowerFormulas(s.powerRootLen, s.powerMaxExp, s.powerProbeLen, false);
  r.pass = report.selfFormula.pass() && report.intersectionFormula.pass();
  r.detail = verification_detail::plural(
                 report.selfFormula.casesChecked, "self-intersection case") +
             ", " +
             verification_detail::plural(report.intersectionFormula.casesChecked,
                                         "intersection case");
  for (const std::string& f : report.selfFormula.failures) r.detail += "; " + f;
  for (const std::string& f : report.intersectionFormula.failures) r.detail += "; " + f;
  return r;
}

inline CriterionResult criterionOracleAgreement(const VerificationSettings& s) {
  CriterionResult r{5, "engine-oracle agreement", false, ""};
  std::size_t checks = 0;
  std::size_t mismatches = 0;
  std::string firstMismatch;
  OracleCache cache;
  for (Orientation mode : {Orientation::unoriented, Orientation::oriented}) {
    const auto classes = enumerateClasses(s.oracleAgreeLen, {false, mode, false});
    for (const CurveClass& c : classes) {
      ++checks;
      if (selfIntersection(c) != cache.selfIntersection(c)) {
        ++mismatches;
        if (firstMismatch.empty()) firstMismatch = "si(" + c.str() + ")";
      }
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = i; j < classes.size(); ++j) {
        ++checks;
        if (intersection(classes[i], classes[j]) !=
            cache.intersection(classes[i], classes[j])) {
          ++mismatches;
          if (firstMismatch.empty()) {
            firstMismatch = "i(" + classes[i].str() + ", " + classes[j].str() + ")";
          }
        }
      }
    }
  }
  r.pass = mismatches == 0;
  r.detail = verification_detail::plural(checks, "comparison") + ", " +
             std::to_string(mismatches) + " mismatches";
  if (!firstMismatch.empty()) r.detail += "; first at " + firstMismatch;
  return r;
}

inline CriterionResult criterionParity(const VerificationSettings& s) {
  CriterionResult r{6, "intersection parity and symmetry", false, ""};
  std::size_t pairs = 0;
  std::size_t violations = 0;
  std::string first;
  const auto classes = enumerateClasses(s.parityLen, {});
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i; j < classes.size(); ++j) {
      ++pairs;
      const std::uint64_t ij = intersection(classes[i], classes[j]);
      const std::uint64_t ji = intersection(classes[j], classes[i]);
      if (ij % 2 != 0 || ij != ji) {
        ++violations;
        if (first.empty()) {
          first = "i(" + classes[i].str() + ", " + classes[j].str() + ") = " +
                  std::to_string(ij) + (ij != ji ? " (asymmetric)" : "");
        }
      }
    }
  }
  r.pass = violations == 0;
  r.detail = verification_detail::plural(pairs, "pair") + ", " +
             std::to_string(violations) + " violations";
  if (!first.empty()) r.detail += "; first " + first;
  return r;
}

inline CriterionResult criterionRefinement(const VerificationSettings& s) {
  CriterionResult r{7, "k-equivalence refines 1- and 2-equivalence", false, ""};
  try {
    const auto classes = enumerateClasses(s.refineLen, {true, Orientation::unoriented, false});
    std::size_t counterexamples = 0;
    std::string first;
    for (std::uint64_t k : {2, 3, 4}) {
      for (std::uint64_t j : {1, 2}) {
        auto verdict = refinementCheck(classes, k, j);
        if (!verdict.pass || !verdict.passWithPowerProbes) {
          counterexamples += std::max<std::size_t>(verdict.counterexamples.size(), 1);
          if (first.empty() && !verdict.counterexamples.empty()) {
            first = "k=" + std::to_string(k) + ", j=" + std::to_string(j) + ": " +
                    verdict.counterexamples.front().first.str() + " vs " +
                    verdict.counterexamples.front().second.str();
          }
        }
      }
    }
    r.pass = counterexamples == 0;
    r.detail = std::to_string(classes.size()) + " classes, k in {2,3,4}, j in {1,2}, " +
               std::to_string(counterexamples) + " counterexamples";
    if (!first.empty()) r.detail += "; first " + first;
  } catch (const Error& e) {
    r.detail = e.what();
  }
  return r;
}

inline CriterionResult criterionTripleScan(const VerificationSettings& s) {
  CriterionResult r{8, "triple scan and ratio conjecture", false, ""};
  TripleScan scan = scanTriples(s.tripleScanLen);
  bool expectedSeen = true;
  std::string missing;
  for (const auto& t : expectedSortedTriples()) {
    if (!scan.sortedTriples.count(t)) {
      expectedSeen = false;
      missing += (missing.empty() ? "" : ", ") + std::string("(") +
                 std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                 std::to_string(t[2]) + ")";
    }
  }
  r.pass = scan.ratioHolds && scan.equalityShapeHolds && scan.parityHolds && expectedSeen;
  std::ostringstream os;
  os << scan.rows.size() << " classes, " << scan.sortedTriples.size()
     << " distinct sorted triples";
  if (!scan.ratioHolds) {
    os << "; max > 2*min at " << scan.ratioCounterexamples.front().cls.str();
  }
  if (!scan.equalityShapeHolds) {
    os << "; equality case not (q,q,2q) at "
       << scan.equalityCounterexamples.front().cls.str();
  }
  if (!scan.parityHolds) {
    os << "; odd entry at " << scan.parityCounterexamples.front().cls.str();
  }
  if (!expectedSeen) os << "; missing " << missing;
  r.detail = os.str();
  return r;
}

inline CriterionResult criterionTwoIntersections(const VerificationSettings& s) {
  CriterionResult r{9, "i(.,aB)=2 classes match the eight families", false, ""};
  TwoIntersectionReport report = classifyTwoIntersections(s.twoIntLen);
  r.pass = report.allMatched();
  std::ostringstream os;
  os << report.members.size() << " members";
  if (!report.nonMembers.empty()) {
    os << "; unmatched:";
    for (const auto& c : report.nonMembers) os << ' ' << c.str();
  }
  if (!report.familiesNeverWitnessed.empty()) {
    os << "; families never witnessed:";
    for (const auto& f : report.familiesNeverWitnessed) os << ' ' << f;
  }
  r.detail = os.str();
  return r;
}

// Criteria 1-9; the determinism criterion 10 is byte-level equality of two
// verify-paper runs and lives with the CLI, which owns serialization.
inline std::vector<CriterionResult> runCriteria(const VerificationSettings& s = {}) {
  std::vector<CriterionResult> out;
  out.push_back(criterionSiOneCensus());
  out.push_back(criterionSiTwoCensus());
  out.push_back(criterionFamilyFormulas(s));
  out.push_back(criterionPowerLaws(s));
  out.push_back(criterionOracleAgreement(s));
  out.push_back(criterionParity(s));
  out.push_back(criterionRefinement(s));
  out.push_back(criterionTripleScan(s));
  out.push_back(criterionTwoIntersections(s));
  return out;
}

}  // namespace pants
