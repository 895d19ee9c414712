#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyprod/coefficients.hpp"
#include "polyprod/corpus.hpp"
#include "polyprod/homology.hpp"
#include "polyprod/moment_angle.hpp"
#include "polyprod/simplicial_complex.hpp"
#include "polyprod/spanning.hpp"
#include "polyprod/structure.hpp"
#include "polyprod/tor.hpp"

namespace polyprod {

struct AnalysisOptions {
  std::vector<Coefficients> coefficients = {Coefficients::integers(), Coefficients::prime_field(2),
                                            Coefficients::prime_field(3), Coefficients::rationals()};
  std::uint64_t budget = kDefaultBudget;
  /// Record wall-clock microseconds per stage.
  bool timings = false;
};

struct StructureReport {
  StructureVerdict shellable;
  StructureVerdict vertex_decomposable;
  StructureVerdict shifted;
  StructureVerdict collapsible;
  /// Keyed by coefficient name.
  std::map<std::string, bool> scm;
  /// Field coefficients only; absent when there are ghost vertices.
  std::map<std::string, StructureVerdict> extractible;

  friend bool operator==(const StructureReport&, const StructureReport&) = default;
};

struct BettiReport {
  BigradedBettiTable hochster;
  BigradedBettiTable koszul;
  bool agree = true;

  friend bool operator==(const BettiReport&, const BettiReport&) = default;
};

/// Spanning facets of the Alexander dual and the sphere count they predict
/// for the suspension of K.
struct SpanningReport {
  /// "shelling" or "mod p".
  std::string method;
  Coefficients coefficients = Coefficients::integers();
  std::optional<SpanningFacetCertificate> certificate;
  /// Set when spanning_mod_p refused.
  std::optional<int> not_applicable_degree;
  SphereList predicted;
  /// From H̃_*(ΣK) over the same coefficients.
  SphereList observed;
  bool match = true;

  friend bool operator==(const SpanningReport&, const SpanningReport&) = default;
};

struct GolodReport {
  GolodVerdict verdict;
  bool dual_scm = false;

  friend bool operator==(const GolodReport&, const GolodReport&) = default;
};

/// Everything `analyze` finds out about one complex. Stages that did not
/// run are absent (empty maps, nullopt).
struct AnalysisReport {
  std::string source;
  SimplicialComplex complex = SimplicialComplex::void_complex(Simplex{});
  /// FNV-1a of the canonical rendering, 16 hex digits.
  std::string hash;
  std::vector<std::string> coefficients;
  std::map<std::string, HomologyGroups> homology;
  std::optional<StructureReport> structure;
  std::optional<StructureReport> dual_structure;
  std::map<std::string, BettiReport> betti;
  std::vector<SpanningReport> spanning;
  std::map<std::string, DecompositionReport> decomposition;
  std::optional<DecompositionReport> wedge;
  std::map<std::string, GolodReport> golod;
  /// Failed invariants; nonempty means a bug or a counterexample.
  std::vector<std::string> violations;
  std::map<std::string, std::uint64_t> timings_us;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

std::string complex_hash(const SimplicialComplex& k);

AnalysisReport analyze(const SimplicialComplex& k, const std::string& source, const AnalysisOptions& options = {});
AnalysisReport analyze(const ComplexSource& src, const AnalysisOptions& options = {});

/// Replays every witness and certificate in the report through its
/// verifier. Returns the failures.
std::vector<std::string> reverify(const AnalysisReport& report);

/// Stable key order, every integer a decimal string, absent stages omitted.
std::string to_json(const AnalysisReport& report, int indent = 2);
/// Throws Error(Parse) on malformed input.
AnalysisReport report_from_json(const std::string& text);

std::string to_markdown(const AnalysisReport& report);

}  // namespace polyprod
