#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "sperfect/chordal.hpp"
#include "sperfect/conjecture.hpp"
#include "sperfect/perfection.hpp"
#include "sperfect/solvers.hpp"
#include "sperfect/suns.hpp"

namespace sperfect {

using Json = nlohmann::ordered_json;

struct AnalysisTiming {
  double chordality_ms = 0;
  double alpha_ms = 0;
  double theta_ms = 0;
  double suns_ms = 0;
  double perfection_ms = 0;
};

/// Everything `analyze` says about one graph. Each verdict carries the
/// certificate needed to re-check it.
struct AnalysisReport {
  std::string graph6;
  int order = 0;
  int size = 0;
  ChordalityVerdict chordality;
  AlphaResult alpha;
  ThetaResult theta;
  std::optional<SunCertificate> odd_sun;
  /// Smallest sun of the requested parity.
  Parity sun_parity = Parity::any;
  std::optional<SunCertificate> sun;
  /// Brute force up to kBrutePerfectionLimit vertices, the odd-sun test for
  /// larger chordal graphs, absent otherwise.
  std::optional<PerfectionVerdict> perfection;
  std::optional<AnalysisTiming> timing;
};

struct AnalyzeOptions {
  bool timing = false;
  Parity sun_parity = Parity::any;
  /// Largest sun searched for; negative means order/2.
  int max_sun_k = -1;
};

AnalysisReport analyze(const Graph& g, const AnalyzeOptions& opts = {});

/// Re-checks every certificate in the report against g.
bool report_consistent(const Graph& g, const AnalysisReport& r);

Json to_json(const SunCertificate& c);
Json to_json(const PerfectionVerdict& v, const Graph& g);
Json to_json(const AnalysisReport& r, const Graph& g);
Json to_json(const MinimalImperfectProperties& p);
Json to_json(const MainTheoremVerifier& v);
Json to_json(const ConjectureReport& r);

/// Plain-text renderings for terminals.
std::string to_text(const AnalysisReport& r);
std::string to_text(const MainTheoremVerifier& v);
std::string to_text(const ConjectureReport& r);

}  // namespace sperfect
