#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "pants/equivalence.hpp"
#include "pants/output.hpp"
#include "pants/verification.hpp"

namespace pants::cli {

// Exit codes: 0 success / all-pass, 1 verification failure or
// counterexample found, 2 usage or word-syntax error, 3 resource or
// convergence error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

namespace cli_detail {

struct Emit {
  std::string format = "text";
  bool pretty = false;

  void operator()(std::ostream& out, const OutputRecord& record, const Table& table,
                  const std::function<void(std::ostream&)>& text) const {
    if (format == "json") {
      writeJson(out, record);
    } else if (format == "csv") {
      writeCsv(out, table);
    } else {
      text(out);
    }
  }
};

inline std::optional<std::size_t> envSize(const char* name, std::string& problem) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == nullptr || *end != '\0') {
    problem = std::string(name) + " must be a nonnegative integer, got '" + raw + "'";
    return std::nullopt;
  }
  return static_cast<std::size_t>(v);
}

inline Json classJson(const CurveClass& c, bool pretty) {
  Json j;
  j["word"] = c.str();
  if (pretty) j["pretty"] = prettyWord(c.word());
  j["length"] = c.length();
  j["root"] = c.primitiveRoot().str();
  j["exponent"] = c.exponent();
  j["boundaryParallel"] = isBoundaryParallel(c);
  return j;
}

inline std::vector<std::string> classRow(const CurveClass& c, bool pretty) {
  std::vector<std::string> row{c.str()};
  if (pretty) row.push_back(prettyWord(c.word()));
  row.push_back(std::to_string(c.length()));
  row.push_back(c.primitiveRoot().str());
  row.push_back(std::to_string(c.exponent()));
  row.push_back(isBoundaryParallel(c) ? "true" : "false");
  return row;
}

inline std::vector<std::string> classHeader(bool pretty) {
  std::vector<std::string> h{"word"};
  if (pretty) h.push_back("pretty");
  h.push_back("length");
  h.push_back("root");
  h.push_back("exponent");
  h.push_back("boundary_parallel");
  return h;
}

}  // namespace cli_detail

// Parses argv (without the program name) and executes one subcommand,
// writing results to `out` and diagnostics to `err`.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"intersection numbers of curve classes on the pair of pants"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  bool pretty = false;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_flag("--pretty", pretty, "add a C/c shorthand column to word output");

  std::string envProblem;
  const std::optional<std::size_t> envSiCap =
      cli_detail::envSize("PANTS_SI_CAP", envProblem);
  const std::optional<std::size_t> envMaxRadius =
      cli_detail::envSize("PANTS_MAX_RADIUS", envProblem);
  if (!envProblem.empty()) {
    err << "error: " << envProblem << "\n";
    return kExitUsage;
  }

  // canon
  auto* canon = app.add_subcommand("canon", "canonical form of a word");
  std::string canonWord;
  bool canonOriented = false;
  canon->add_option("word", canonWord, "word in the a A b B C c grammar")->required();
  canon->add_flag("--oriented", canonOriented, "do not identify a class with its inverse");

  // si
  auto* si = app.add_subcommand("si", "minimal self-intersection number");
  std::string siWord;
  bool siOracle = false;
  bool siDirect = false;
  std::size_t siRadius = 0;
  si->add_option("word", siWord)->required();
  si->add_flag("--oracle", siOracle, "also run the hyperbolic oracle and compare");
  si->add_flag("--direct", siDirect, "count linked pairs over the full power word");
  si->add_option("--max-radius", siRadius, "oracle enumeration radius cap");

  // int
  auto* inter = app.add_subcommand("int", "geometric intersection number of two words");
  std::string intWord1, intWord2;
  bool intOracle = false;
  std::size_t intRadius = 0;
  inter->add_option("word1", intWord1)->required();
  inter->add_option("word2", intWord2)->required();
  inter->add_flag("--oracle", intOracle, "also run the hyperbolic oracle and compare");
  inter->add_option("--max-radius", intRadius, "oracle enumeration radius cap");

  // triple
  auto* triple = app.add_subcommand("triple", "intersections with the three si=1 classes");
  std::string tripleWord;
  triple->add_option("word", tripleWord)->required();

  // enum
  auto* enumCmd = app.add_subcommand("enum", "enumerate classes by cyclic length");
  std::size_t enumMaxLen = 0;
  bool enumOriented = false;
  bool enumPowers = false;
  bool enumBoundary = false;
  std::size_t enumCap = 5'000'000;
  enumCmd->add_option("--max-len", enumMaxLen, "maximum cyclic word length")->required();
  enumCmd->add_flag("--oriented", enumOriented, "do not identify a class with its inverse");
  enumCmd->add_flag("--powers", enumPowers, "include proper powers");
  enumCmd->add_flag("--include-boundary", enumBoundary, "include boundary-parallel classes");
  enumCmd->add_option("--cap", enumCap, "abort beyond this many classes");

  // si-classes
  auto* siClasses = app.add_subcommand("si-classes", "all non-power classes with si = k");
  std::uint64_t censusK = 0;
  std::size_t censusCap = 0;
  siClasses->add_option("k", censusK)->required();
  siClasses->add_option("--cap", censusCap, "census length cap (default 2k + 2)");

  // kequiv
  auto* kequiv = app.add_subcommand("kequiv", "decide k-equivalence of two words");
  std::string keqWord1, keqWord2;
  std::uint64_t keqK = 0;
  bool keqPowerProbes = false;
  std::size_t keqCap = 0;
  kequiv->add_option("word1", keqWord1)->required();
  kequiv->add_option("word2", keqWord2)->required();
  kequiv->add_option("--k", keqK, "self-intersection number of the probe set")->required();
  kequiv->add_flag("--include-power-probes", keqPowerProbes,
                   "admit power classes with si = k as probes");
  kequiv->add_option("--cap", keqCap, "probe census length cap");

  // scan-triples
  auto* scan = app.add_subcommand("scan-triples", "triples and the ratio conjecture");
  std::size_t scanLen = 0;
  scan->add_option("--max-len", scanLen, "maximum cyclic word length")->required();

  // classify-two
  auto* classify = app.add_subcommand("classify-two", "classes with i(., aB) = 2");
  std::size_t classifyLen = 0;
  classify->add_option("--max-len", classifyLen, "maximum cyclic word length")->required();

  // class-222
  auto* c222 = app.add_subcommand("class-222", "members of the (2,2,2) equivalence class");
  std::size_t c222Len = 0;
  c222->add_option("--max-len", c222Len, "maximum cyclic word length")->required();

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "run the full verification suite");
  std::size_t verifyLen = 8;
  std::size_t verifyExp = 3;
  verify->add_option("--max-len", verifyLen, "scan length scale (default 8)");
  verify->add_option("--max-exp", verifyExp, "maximum power-law exponent (default 3)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  cli_detail::Emit emit{format, pretty};

  try {
    if (canon->parsed()) {
      const Orientation mode = canonOriented ? Orientation::oriented : Orientation::unoriented;
      const CurveClass c = CurveClass::canonical(parseWord(canonWord), mode);
      OutputRecord record;
      record.command = "canon";
      record.settings = {{"format", format},
                         {"mode", canonOriented ? "oriented" : "unoriented"}};
      record.payload = cli_detail::classJson(c, pretty);
      record.payload["input"] = canonWord;
      Table table{cli_detail::classHeader(pretty), {cli_detail::classRow(c, pretty)}};
      emit(out, record, table, [&](std::ostream& os) {
        os << "canonical " << c.str() << "\n";
        if (pretty) os << "pretty    " << prettyWord(c.word()) << "\n";
        os << "root      " << c.primitiveRoot().str() << "\n";
        os << "exponent  " << c.exponent() << "\n";
        os << "boundary  " << (isBoundaryParallel(c) ? "true" : "false") << "\n";
      });
      return kExitOk;
    }

    if (si->parsed()) {
      const CurveClass c = classOf(siWord);
      const std::uint64_t engine = selfIntersection(c, EngineOptions{siDirect});
      std::optional<std::uint64_t> oracle;
      if (siOracle) {
        std::size_t radius = siRadius ? siRadius : envMaxRadius.value_or(0);
        oracle = oracleSelfIntersection(c, radius);
      }
      OutputRecord record;
      record.command = "si";
      record.settings = {{"format", format},
                         {"mode", "unoriented"},
                         {"path", siDirect ? "direct" : "root-formula"}};
      record.payload["word"] = c.str();
      record.payload["si"] = engine;
      if (oracle) {
        record.payload["oracle"] = *oracle;
        record.payload["agree"] = engine == *oracle;
      }
      Table table{{"word", "si", "oracle"},
                  {{c.str(), std::to_string(engine),
                    oracle ? std::to_string(*oracle) : ""}}};
      emit(out, record, table, [&](std::ostream& os) {
        os << engine << "\n";
        if (oracle) os << "oracle " << *oracle << "\n";
      });
      if (oracle && *oracle != engine) {
        err << "error: engine and oracle disagree on si(" << c.str() << ")\n";
        return kExitVerificationFailure;
      }
      return kExitOk;
    }

    if (inter->parsed()) {
      const CurveClass c1 = classOf(intWord1);
      const CurveClass c2 = classOf(intWord2);
      const std::uint64_t engine = intersection(c1, c2);
      std::optional<std::uint64_t> oracle;
      if (intOracle) {
        std::size_t radius = intRadius ? intRadius : envMaxRadius.value_or(0);
        oracle = oracleIntersection(c1, c2, radius);
      }
      OutputRecord record;
      record.command = "int";
      record.settings = {{"format", format}, {"mode", "unoriented"}};
      record.payload["word1"] = c1.str();
      record.payload["word2"] = c2.str();
      record.payload["intersection"] = engine;
      if (oracle) {
        record.payload["oracle"] = *oracle;
        record.payload["agree"] = engine == *oracle;
      }
      Table table{{"word1", "word2", "intersection", "oracle"},
                  {{c1.str(), c2.str(), std::to_string(engine),
                    oracle ? std::to_string(*oracle) : ""}}};
      emit(out, record, table, [&](std::ostream& os) {
        os << engine << "\n";
        if (oracle) os << "oracle " << *oracle << "\n";
      });
      if (oracle && *oracle != engine) {
        err << "error: engine and oracle disagree on i(" << c1.str() << ", " << c2.str()
            << ")\n";
        return kExitVerificationFailure;
      }
      return kExitOk;
    }

    if (triple->parsed()) {
      const CurveClass c = classOf(tripleWord);
      const Triple t = tripleOf(c);
      OutputRecord record;
      record.command = "triple";
      record.settings = {{"format", format}, {"mode", "unoriented"}};
      record.payload["word"] = c.str();
      record.payload["vAB"] = t.vAB;
      record.payload["vCb"] = t.vCb;
      record.payload["vAC"] = t.vAC;
      Table table{{"word", "i_aB", "i_Cb", "i_aC"},
                  {{c.str(), std::to_string(t.vAB), std::to_string(t.vCb),
                    std::to_string(t.vAC)}}};
      emit(out, record, table, [&](std::ostream& os) {
        os << t.vAB << " " << t.vCb << " " << t.vAC << "\n";
      });
      return kExitOk;
    }

    if (enumCmd->parsed()) {
      EnumerationFilter filter{!enumPowers,
                               enumOriented ? Orientation::oriented : Orientation::unoriented,
                               !enumBoundary};
      const auto classes = enumerateClasses(enumMaxLen, filter, enumCap);
      OutputRecord record;
      record.command = "enum";
      record.settings = {{"format", format},
                         {"maxLen", std::to_string(enumMaxLen)},
                         {"mode", enumOriented ? "oriented" : "unoriented"},
                         {"powers", enumPowers ? "included" : "excluded"},
                         {"boundary", enumBoundary ? "included" : "excluded"}};
      record.payload["count"] = classes.size();
      Json list = Json::array();
      Table table{cli_detail::classHeader(pretty), {}};
      for (const CurveClass& c : classes) {
        list.push_back(cli_detail::classJson(c, pretty));
        table.rows.push_back(cli_detail::classRow(c, pretty));
      }
      record.payload["classes"] = list;
      emit(out, record, table, [&](std::ostream& os) {
        for (const CurveClass& c : classes) {
          os << c.str();
          if (pretty) os << "  " << prettyWord(c.word());
          os << "\n";
        }
      });
      return kExitOk;
    }

    if (siClasses->parsed()) {
      SiCensusOptions opt;
      if (censusCap != 0) {
        opt.lengthCap = censusCap;
      } else if (envSiCap) {
        opt.lengthCap = *envSiCap;
      }
      const auto classes = classesWithSI(censusK, opt);
      OutputRecord record;
      record.command = "si-classes";
      record.settings = {{"format", format},
                         {"k", std::to_string(censusK)},
                         {"cap", std::to_string(opt.lengthCap.value_or(2 * censusK + 2))},
                         {"sweep", std::to_string(opt.sweepLengths)},
                         {"mode", "unoriented"}};
      record.payload["k"] = censusK;
      record.payload["count"] = classes.size();
      Json list = Json::array();
      Table table{cli_detail::classHeader(pretty), {}};
      for (const CurveClass& c : classes) {
        list.push_back(c.str());
        table.rows.push_back(cli_detail::classRow(c, pretty));
      }
      record.payload["classes"] = list;
      emit(out, record, table, [&](std::ostream& os) {
        for (const CurveClass& c : classes) {
          os << c.str();
          if (pretty) os << "  " << prettyWord(c.word());
          os << "\n";
        }
      });
      return kExitOk;
    }

    if (kequiv->parsed()) {
      const CurveClass c1 = classOf(keqWord1);
      const CurveClass c2 = classOf(keqWord2);
      ProbeOptions opt;
      opt.includePowerProbes = keqPowerProbes;
      if (keqCap != 0) {
        opt.census.lengthCap = keqCap;
      } else if (envSiCap) {
        opt.census.lengthCap = *envSiCap;
      }
      const auto probes = equivalenceProbes(keqK, opt);
      const auto v1 = intersectionVector(c1, probes);
      const auto v2 = intersectionVector(c2, probes);
      const bool equivalent = v1 == v2;
      OutputRecord record;
      record.command = "kequiv";
      record.settings = {{"format", format},
                         {"k", std::to_string(keqK)},
                         {"powerProbes", keqPowerProbes ? "included" : "excluded"},
                         {"mode", "unoriented"}};
      record.payload["word1"] = c1.str();
      record.payload["word2"] = c2.str();
      record.payload["k"] = keqK;
      record.payload["equivalent"] = equivalent;
      Json probeNames = Json::array();
      for (const CurveClass& p : probes) probeNames.push_back(p.str());
      record.payload["probes"] = probeNames;
      record.payload["vector1"] = v1;
      record.payload["vector2"] = v2;
      Table table{{"probe", "i_word1", "i_word2"}, {}};
      for (std::size_t i = 0; i < probes.size(); ++i) {
        table.rows.push_back(
            {probes[i].str(), std::to_string(v1[i]), std::to_string(v2[i])});
      }
      emit(out, record, table, [&](std::ostream& os) {
        os << (equivalent ? "true" : "false") << "\n";
      });
      return kExitOk;
    }

    if (scan->parsed()) {
      const TripleScan result = scanTriples(scanLen);
      bool expectedSeen = true;
      for (const auto& t : expectedSortedTriples()) {
        if (!result.sortedTriples.count(t)) expectedSeen = false;
      }
      const bool pass = result.ratioHolds && result.equalityShapeHolds &&
                        result.parityHolds;
      OutputRecord record;
      record.command = "scan-triples";
      record.settings = {{"format", format},
                         {"maxLen", std::to_string(scanLen)},
                         {"mode", "unoriented"}};
      record.payload["count"] = result.rows.size();
      record.payload["ratioHolds"] = result.ratioHolds;
      record.payload["equalityShapeHolds"] = result.equalityShapeHolds;
      record.payload["parityHolds"] = result.parityHolds;
      record.payload["expectedTriplesSeen"] = expectedSeen;
      Json sorted = Json::array();
      for (const auto& t : result.sortedTriples) sorted.push_back({t[0], t[1], t[2]});
      record.payload["sortedTriples"] = sorted;
      Json rows = Json::array();
      Table table{{"word", "i_aB", "i_Cb", "i_aC"}, {}};
      for (const auto& row : result.rows) {
        Json j;
        j["word"] = row.cls.str();
        j["t"] = {row.t.vAB, row.t.vCb, row.t.vAC};
        rows.push_back(j);
        table.rows.push_back({row.cls.str(), std::to_string(row.t.vAB),
                              std::to_string(row.t.vCb), std::to_string(row.t.vAC)});
      }
      record.payload["rows"] = rows;
      emit(out, record, table, [&](std::ostream& os) {
        writeTextTable(os, table);
        os << "ratio max <= 2 min: " << (result.ratioHolds ? "holds" : "violated") << "\n";
        os << "equality cases (q,q,2q), q even: "
           << (result.equalityShapeHolds ? "holds" : "violated") << "\n";
        os << "all entries even: " << (result.parityHolds ? "holds" : "violated") << "\n";
        os << "expected triples observed: " << (expectedSeen ? "yes" : "no") << "\n";
      });
      return pass ? kExitOk : kExitVerificationFailure;
    }

    if (classify->parsed()) {
      const TwoIntersectionReport report = classifyTwoIntersections(classifyLen);
      OutputRecord record;
      record.command = "classify-two";
      record.settings = {{"format", format},
                         {"maxLen", std::to_string(classifyLen)},
                         {"mode", "unoriented"}};
      record.payload["memberCount"] = report.members.size();
      record.payload["allMatched"] = report.allMatched();
      Json members = Json::array();
      Table table{{"word", "families"}, {}};
      for (const auto& entry : report.members) {
        Json j;
        j["word"] = entry.cls.str();
        j["families"] = entry.families;
        members.push_back(j);
        std::string fams;
        for (std::size_t i = 0; i < entry.families.size(); ++i) {
          fams += (i ? "; " : "") + entry.families[i];
        }
        table.rows.push_back({entry.cls.str(), fams});
      }
      record.payload["members"] = members;
      Json nonMembers = Json::array();
      for (const auto& c : report.nonMembers) nonMembers.push_back(c.str());
      record.payload["nonMembers"] = nonMembers;
      record.payload["familiesNeverWitnessed"] = report.familiesNeverWitnessed;
      emit(out, record, table, [&](std::ostream& os) {
        writeTextTable(os, table);
        if (!report.nonMembers.empty()) {
          os << "unmatched classes:";
          for (const auto& c : report.nonMembers) os << ' ' << c.str();
          os << "\n";
        }
        if (!report.familiesNeverWitnessed.empty()) {
          os << "families never witnessed:";
          for (const auto& f : report.familiesNeverWitnessed) os << ' ' << f;
          os << "\n";
        }
        os << (report.allMatched() ? "all classes matched" : "classification incomplete")
           << "\n";
      });
      return report.allMatched() ? kExitOk : kExitVerificationFailure;
    }

    if (c222->parsed()) {
      const auto classes = equivClass222(c222Len);
      OutputRecord record;
      record.command = "class-222";
      record.settings = {{"format", format},
                         {"maxLen", std::to_string(c222Len)},
                         {"mode", "unoriented"}};
      record.payload["count"] = classes.size();
      Json list = Json::array();
      Table table{cli_detail::classHeader(pretty), {}};
      for (const CurveClass& c : classes) {
        list.push_back(c.str());
        table.rows.push_back(cli_detail::classRow(c, pretty));
      }
      record.payload["classes"] = list;
      emit(out, record, table, [&](std::ostream& os) {
        for (const CurveClass& c : classes) {
          os << c.str();
          if (pretty) os << "  " << prettyWord(c.word());
          os << "\n";
        }
      });
      return kExitOk;
    }

    if (verify->parsed()) {
      VerificationSettings settings;
      settings.tripleScanLen = verifyLen;
      settings.twoIntLen = verifyLen;
      settings.parityLen = verifyLen > 1 ? verifyLen - 1 : 1;
      settings.refineLen = verifyLen > 1 ? verifyLen - 1 : 1;
      settings.oracleAgreeLen = verifyLen > 2 ? verifyLen - 2 : 1;
      settings.powerMaxExp = verifyExp;

      std::vector<CriterionResult> rows = runCriteria(settings);

      // Criterion 10: byte-determinism of the serialized report. The
      // cheap censuses are recomputed and the whole record rendered
      // twice; the acceptance suite additionally compares two full
      // process runs.
      auto render = [&](const std::vector<CriterionResult>& rs) {
        Json arr = Json::array();
        for (const auto& c : rs) {
          Json j;
          j["id"] = c.id;
          j["name"] = c.name;
          j["pass"] = c.pass;
          j["detail"] = c.detail;
          arr.push_back(j);
        }
        return arr.dump(2);
      };
      std::vector<CriterionResult> again = rows;
      again[0] = criterionSiOneCensus();
      again[1] = criterionSiTwoCensus();
      CriterionResult det;
      det.id = 10;
      det.name = "deterministic output";
      det.pass = render(rows) == render(again);
      det.detail = det.pass ? "re-ran censuses and re-rendered: byte-identical"
                            : "two renders differ";
      rows.push_back(det);

      bool allPass = true;
      for (const auto& c : rows) allPass = allPass && c.pass;

      OutputRecord record;
      record.command = "verify-paper";
      record.settings = {{"format", format},
                         {"mode", "unoriented"},
                         {"tripleScanLen", std::to_string(settings.tripleScanLen)},
                         {"twoIntLen", std::to_string(settings.twoIntLen)},
                         {"parityLen", std::to_string(settings.parityLen)},
                         {"refineLen", std::to_string(settings.refineLen)},
                         {"oracleAgreeLen", std::to_string(settings.oracleAgreeLen)},
                         {"powerRootLen", std::to_string(settings.powerRootLen)},
                         {"powerProbeLen", std::to_string(settings.powerProbeLen)},
                         {"powerMaxExp", std::to_string(settings.powerMaxExp)},
                         {"familyMaxN", std::to_string(settings.familyMaxN)}};
      Json list = Json::array();
      Table table{{"id", "pass", "name", "detail"}, {}};
      for (const auto& c : rows) {
        Json j;
        j["id"] = c.id;
        j["name"] = c.name;
        j["pass"] = c.pass;
        j["detail"] = c.detail;
        list.push_back(j);
        table.rows.push_back({std::to_string(c.id), c.pass ? "PASS" : "FAIL", c.name,
                              c.detail});
      }
      record.payload["criteria"] = list;
      record.payload["allPass"] = allPass;
      emit(out, record, table, [&](std::ostream& os) {
        for (const auto& c : rows) {
          os << "C" << c.id << " " << (c.pass ? "PASS" : "FAIL") << "  " << c.name
             << " - " << c.detail << "\n";
        }
        os << (allPass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
      });
      return allPass ? kExitOk : kExitVerificationFailure;
    }
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error in " << app.get_subcommands().front()->get_name() << ": " << e.what()
        << "\n";
    return kExitResource;
  }

  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace pants::cli
