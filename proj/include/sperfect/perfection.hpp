#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sperfect/graph.hpp"
#include "sperfect/suns.hpp"

namespace sperfect {

/// Order limit for deciding S-perfection by checking induced subgraphs.
inline constexpr int kBrutePerfectionLimit = 14;

enum class PerfectionMethod { brute, chordal_theorem };
std::string_view method_name(PerfectionMethod m);

/// A minimal S-imperfect induced subgraph, by its vertices in the host.
struct ImperfectWitness {
  VertexSet vertices;
  int alpha = 0;
  int theta = 0;
};

struct PerfectionVerdict {
  bool is_s_perfect = true;
  PerfectionMethod method = PerfectionMethod::brute;
  /// Brute method only, on a negative verdict.
  std::optional<ImperfectWitness> witness;
  /// Chordal-theorem method only, on a negative verdict: an induced odd sun.
  std::optional<SunCertificate> sun;
};

/// Checks alpha_S = theta_S on every connected induced subgraph, smallest
/// first. A negative verdict carries a minimal S-imperfect witness.
/// Throws SizeLimitError above kBrutePerfectionLimit vertices.
PerfectionVerdict is_s_perfect_brute(const Graph& g);

/// Odd-sun-free test for chordal graphs; throws NotChordalError otherwise.
PerfectionVerdict is_s_perfect_chordal(const Graph& g);

/// S-perfection of the induced subgraph G[within] (brute force).
bool is_s_perfect_within(const Graph& g, VertexSet within);

/// alpha_S != theta_S, and deleting any single vertex leaves an S-perfect graph.
bool is_minimal_s_imperfect(const Graph& g);

/// Deletes vertices of an S-imperfect set in ascending label order,
/// restarting after each deletion that keeps it S-imperfect. The result is
/// minimal S-imperfect.
VertexSet minimize_witness(const Graph& g, VertexSet imperfect);

/// Structural checks on a minimal S-imperfect graph.
struct MinimalImperfectProperties {
  bool chordal = false;
  bool is_block = false;
  int alpha = 0;
  int theta = 0;
  /// First ordered pair (u, v), u != v, with N(u) ⊆ N(v); open neighbourhoods.
  std::optional<Edge> nested_pair;
  /// Evaluated only for chordal inputs.
  std::optional<bool> hamiltonian;

  int gap() const { return theta - alpha; }
  bool no_nested_neighborhoods() const { return !nested_pair.has_value(); }
  /// Gap of exactly one; asserted only for chordal inputs.
  bool gap_one() const { return gap() == 1; }
  /// Every check that applies to this graph holds.
  bool all_hold() const {
    return is_block && no_nested_neighborhoods() && (!chordal || (gap_one() && hamiltonian.value_or(false)));
  }
};

/// Throws std::invalid_argument if w is not minimal S-imperfect.
MinimalImperfectProperties minimal_imperfect_properties(const Graph& w);

/// Per-graph outcome of comparing the two S-perfection deciders.
struct TheoremCheck {
  std::string graph6;
  PerfectionVerdict brute;
  PerfectionVerdict theorem;
  bool agree() const { return brute.is_s_perfect == theorem.is_s_perfect; }
};

struct TheoremSweepCounts {
  long graphs = 0;
  long s_perfect = 0;
  long s_imperfect = 0;
  long disagreements = 0;
};

/// Streams chordal graphs through both deciders and aggregates the results.
class MainTheoremVerifier {
 public:
  /// Returns the comparison, or nullopt if the graph was rejected
  /// (non-chordal, or beyond the brute-force limit).
  std::optional<TheoremCheck> check(const Graph& g);

  const std::map<int, TheoremSweepCounts>& per_order() const { return per_order_; }
  const std::vector<TheoremCheck>& disagreements() const { return disagreements_; }
  /// Distinct minimal witnesses seen so far (as induced subgraphs, graph6).
  const std::vector<std::string>& witnesses() const { return witnesses_; }
  long rejected_nonchordal() const { return rejected_nonchordal_; }
  long rejected_too_large() const { return rejected_too_large_; }
  long checked() const;
  bool ok() const { return disagreements_.empty(); }

 private:
  std::map<int, TheoremSweepCounts> per_order_;
  std::vector<TheoremCheck> disagreements_;
  std::vector<std::string> witnesses_;
  long rejected_nonchordal_ = 0;
  long rejected_too_large_ = 0;
};

}  // namespace sperfect
