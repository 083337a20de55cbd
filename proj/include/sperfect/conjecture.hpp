#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sperfect/graph.hpp"
#include "sperfect/perfection.hpp"
#include "sperfect/suns.hpp"

namespace sperfect {

/// How the spoke length of a super sun relates to its cycle length k.
enum class SuperSunReading {
  /// Each spoke independently has 3t + 1 vertices, t >= 1.
  decoupled,
  /// Every spoke has exactly 3k + 1 vertices.
  tied,
};
inline constexpr std::array<SuperSunReading, 2> kSuperSunReadings{SuperSunReading::decoupled, SuperSunReading::tied};
std::string_view reading_name(SuperSunReading r);

/// Smallest odd super sun order under a reading (15 decoupled, 33 tied).
int smallest_odd_super_sun(SuperSunReading r);

/// Odd super suns (chordless inner cycle) of order <= max_n under a
/// reading, one per isomorphism class.
std::vector<Graph> odd_super_sun_patterns(SuperSunReading r, int max_n);

/// Induced cycle C_m with m >= 4 and m mod 3 != 0.
std::optional<std::vector<Vertex>> find_forbidden_cycle(const Graph& g);

struct SuperSunHit {
  std::string pattern;  // graph6 of the pattern
  std::vector<Vertex> image;
};

/// The forbidden-structure side of the conjecture for one graph.
struct ForbiddenScan {
  std::optional<std::vector<Vertex>> cycle;
  /// Indexed by SuperSunReading.
  std::array<bool, 2> super_sun_fits{false, false};
  std::array<std::optional<SuperSunHit>, 2> super_sun;

  bool forbidden_free(SuperSunReading r) const {
    return !cycle && !super_sun[static_cast<std::size_t>(r)].has_value();
  }
};

ForbiddenScan scan_forbidden(const Graph& g);

/// A graph on which the brute verdict and the forbidden-structure side
/// disagree under at least one reading.
struct ConjectureRecord {
  std::string graph6;
  int order = 0;
  PerfectionVerdict perfection;
  ForbiddenScan scan;
  std::array<bool, 2> disagrees{false, false};
  /// Any induced odd sun in the graph, recorded as extra evidence.
  std::optional<SunCertificate> odd_sun;
};

struct ReadingTally {
  long agree_perfect = 0;        // S-perfect and forbidden-structure-free
  long agree_imperfect = 0;      // not S-perfect and holds a forbidden structure
  long perfect_but_forbidden = 0;
  long imperfect_but_free = 0;
  long disagreements() const { return perfect_but_forbidden + imperfect_but_free; }
};

struct ConjectureReport {
  long scanned = 0;
  long skipped_malformed = 0;
  long skipped_disconnected = 0;
  long skipped_too_large = 0;
  int max_order = 0;
  std::array<ReadingTally, 2> tallies{};
  std::vector<ConjectureRecord> counterexamples;
  std::vector<std::string> notes;
};

/// Accumulates the two sides of the conjecture over a stream of graphs.
class ConjectureExplorer {
 public:
  /// Connected graphs up to kBrutePerfectionLimit are scanned; others are
  /// counted as skipped.
  void add(const Graph& g);
  void add_malformed() { ++report_.skipped_malformed; }
  /// Final report with explanatory notes (e.g. no super sun can fit).
  ConjectureReport report() const;

 private:
  ConjectureReport report_;
};

/// Every connected graph on at most max_n (<= 10) vertices.
ConjectureReport explore_conjecture_exhaustive(int max_n);

}  // namespace sperfect
