#include "sperfect/conjecture.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <tuple>

#include "sperfect/enumerate.hpp"
#include "sperfect/families.hpp"
#include "sperfect/graph_io.hpp"

namespace sperfect {
namespace {

constexpr std::size_t idx(SuperSunReading r) { return static_cast<std::size_t>(r); }

// All spoke-size sequences of length k with entries 3t+1 (t >= 1) and total at most budget.
void spoke_sequences(int k, int budget, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  const int left = k - static_cast<int>(cur.size()) - 1;
  for (int s = 4; s + 4 * left <= budget; s += 3) {
    cur.push_back(s);
    spoke_sequences(k, budget - s, cur, out);
    cur.pop_back();
  }
}

struct PatternCache {
  std::mutex mu;
  std::map<std::pair<int, int>, std::vector<std::pair<std::string, Graph>>> cache;
};

PatternCache& pattern_cache() {
  static PatternCache c;
  return c;
}

const std::vector<std::pair<std::string, Graph>>& cached_patterns(SuperSunReading r, int max_n) {
  auto& pc = pattern_cache();
  std::lock_guard lock(pc.mu);
  const auto key = std::make_pair(static_cast<int>(r), max_n);
  auto it = pc.cache.find(key);
  if (it == pc.cache.end()) {
    std::vector<std::pair<std::string, Graph>> entries;
    for (Graph& p : odd_super_sun_patterns(r, max_n)) entries.emplace_back(to_graph6(p), std::move(p));
    it = pc.cache.emplace(key, std::move(entries)).first;
  }
  return it->second;
}

}  // namespace

std::string_view reading_name(SuperSunReading r) {
  return r == SuperSunReading::decoupled ? "decoupled" : "tied";
}

int smallest_odd_super_sun(SuperSunReading r) {
  // k = 3 with the shortest spokes allowed
  return r == SuperSunReading::decoupled ? 3 + 3 * 4 : 3 + 3 * (3 * 3 + 1);
}

std::vector<Graph> odd_super_sun_patterns(SuperSunReading r, int max_n) {
  max_n = std::min(max_n, kMaxVertices);
  std::vector<std::vector<int>> seqs;
  std::vector<std::pair<int, std::vector<int>>> shapes;
  for (int k = 3; k + 4 * k <= max_n; k += 2) {
    if (r == SuperSunReading::tied) {
      const int s = 3 * k + 1;
      if (k + k * s <= max_n) shapes.emplace_back(k, std::vector<int>(k, s));
      continue;
    }
    seqs.clear();
    std::vector<int> cur;
    spoke_sequences(k, max_n - k, cur, seqs);
    for (auto& s : seqs) shapes.emplace_back(k, std::move(s));
  }
  std::set<std::string> seen;
  std::vector<Graph> out;
  for (const auto& [k, sizes] : shapes) {
    Graph g = make_super_sun(k, sizes);
    if (seen.insert(to_graph6(canonical_form(g).graph)).second) out.push_back(std::move(g));
  }
  return out;
}

std::optional<std::vector<Vertex>> find_forbidden_cycle(const Graph& g) {
  return find_induced_cycle(g, [](int len) { return len >= 4 && len % 3 != 0; });
}

ForbiddenScan scan_forbidden(const Graph& g) {
  ForbiddenScan scan;
  scan.cycle = find_forbidden_cycle(g);
  for (SuperSunReading r : kSuperSunReadings) {
    if (g.order() < smallest_odd_super_sun(r)) continue;
    scan.super_sun_fits[idx(r)] = true;
    for (const auto& [name, pattern] : cached_patterns(r, g.order())) {
      if (auto image = find_induced_subgraph(pattern, g)) {
        scan.super_sun[idx(r)] = SuperSunHit{name, std::move(*image)};
        break;
      }
    }
  }
  return scan;
}

void ConjectureExplorer::add(const Graph& g) {
  if (g.order() > kBrutePerfectionLimit) {
    ++report_.skipped_too_large;
    return;
  }
  if (g.order() == 0 || !is_connected(g)) {
    ++report_.skipped_disconnected;
    return;
  }
  ++report_.scanned;
  report_.max_order = std::max(report_.max_order, g.order());
  ConjectureRecord rec;
  rec.perfection = is_s_perfect_brute(g);
  rec.scan = scan_forbidden(g);
  bool any = false;
  for (SuperSunReading r : kSuperSunReadings) {
    ReadingTally& t = report_.tallies[idx(r)];
    const bool free = rec.scan.forbidden_free(r);
    if (rec.perfection.is_s_perfect && free) {
      ++t.agree_perfect;
    } else if (!rec.perfection.is_s_perfect && !free) {
      ++t.agree_imperfect;
    } else if (rec.perfection.is_s_perfect) {
      ++t.perfect_but_forbidden;
      rec.disagrees[idx(r)] = any = true;
    } else {
      ++t.imperfect_but_free;
      rec.disagrees[idx(r)] = any = true;
    }
  }
  if (!any) return;
  rec.graph6 = to_graph6(g);
  rec.order = g.order();
  rec.odd_sun = find_induced_sun(g, Parity::odd);
  report_.counterexamples.push_back(std::move(rec));
}

ConjectureReport ConjectureExplorer::report() const {
  ConjectureReport out = report_;
  std::sort(out.counterexamples.begin(), out.counterexamples.end(), [](const auto& a, const auto& b) {
    return std::tie(a.order, a.graph6) < std::tie(b.order, b.graph6);
  });
  for (SuperSunReading r : kSuperSunReadings) {
    const int smallest = smallest_odd_super_sun(r);
    if (out.max_order < smallest) {
      out.notes.push_back("no odd super sun fits: the smallest under the " + std::string(reading_name(r)) +
                          " reading has " + std::to_string(smallest) + " vertices, scanned graphs have at most " +
                          std::to_string(out.max_order) + "; only the C_{3k+1}, C_{3k+2} clauses were exercised");
    }
  }
  return out;
}

ConjectureReport explore_conjecture_exhaustive(int max_n) {
  if (max_n < 1 || max_n > 10) throw std::invalid_argument("exhaustive conjecture exploration needs 1 <= n <= 10");
  ConjectureExplorer ex;
  for_each_graph(max_n, GraphClass::connected, [&](const Graph& g) { ex.add(g); });
  return ex.report();
}

}  // namespace sperfect
