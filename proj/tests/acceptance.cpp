// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N (and whatever it depends on)

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sperfect/chordal.hpp"
#include "sperfect/conjecture.hpp"
#include "sperfect/enumerate.hpp"
#include "sperfect/families.hpp"
#include "sperfect/graph_io.hpp"
#include "sperfect/perfection.hpp"
#include "sperfect/rng.hpp"
#include "sperfect/solvers.hpp"
#include "sperfect/suns.hpp"

using namespace sperfect;

namespace {

constexpr double kNoLimit = std::numeric_limits<double>::infinity();

// Wall-clock limits in seconds, by criterion.
constexpr double kTimeLimit[11] = {0, 1.0, 300.0, 900.0, 10.0, 60.0, kNoLimit, 1.0, kNoLimit, 1800.0, kNoLimit};

constexpr int kRandomPerOrder = 500;     // criterion 2
constexpr int kRandomChordal = 1000;     // criterion 3
constexpr int kRandomChordalOrder = 12;  // criterion 3
constexpr int kRoundTrips = 10'000;      // criterion 10
constexpr double kFills[] = {0.0, 0.25, 0.5, 0.75, 1.0};

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Shared state: certificate tallies (criterion 8) and minimal witnesses
// from criteria 3 and 4 (criterion 6).
struct Context {
  long packings = 0, covers = 0, suns = 0, failures = 0;
  std::vector<std::string> first_failures;
  std::set<std::string> witness_keys;
  std::vector<Graph> witnesses;

  void note_failure(const std::string& what) {
    ++failures;
    if (first_failures.size() < 5) first_failures.push_back(what);
  }
  void audit_alpha(const Graph& g, const AlphaResult& a) {
    ++packings;
    if (!verify_packing(g, a.packing) || a.packing.size() != a.value) note_failure("packing " + to_graph6(g));
  }
  void audit_theta(const Graph& g, const ThetaResult& t) {
    ++covers;
    if (!verify_cover(g, t.cover) || t.cover.size() != t.value) note_failure("cover " + to_graph6(g));
  }
  void audit_sun(const Graph& g, const SunCertificate& c) {
    ++suns;
    if (!verify_sun_certificate(g, c)) note_failure("sun " + to_graph6(g));
  }
  /// Values with their certificates checked.
  std::pair<int, int> solve(const Graph& g) {
    const AlphaResult a = alpha_s(g);
    const ThetaResult t = theta_s(g);
    audit_alpha(g, a);
    audit_theta(g, t);
    return {a.value, t.value};
  }
  void add_witness(const Graph& host, const PerfectionVerdict& v) {
    if (!v.witness) return;
    const Graph w = induced_subgraph(host, v.witness->vertices).graph;
    if (witness_keys.insert(to_graph6(canonical_form(w).graph)).second) witnesses.push_back(w);
  }
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// 1 -------------------------------------------------------------------------

Outcome closed_forms(Context& ctx) {
  Outcome out;
  int checked = 0;
  for (int k = 1; k <= 18; ++k) {
    const auto [a, t] = ctx.solve(make_path(k));
    const int want = (k + 2) / 3;
    ++checked;
    if (a != want || t != want) {
      out.pass = false;
      out.detail += fmt(" P_%d: alpha %d theta %d want %d;", k, a, t, want);
    }
  }
  for (int n = 3; n <= 18; ++n) {
    const auto [a, t] = ctx.solve(make_cycle(n));
    ++checked;
    if (a != n / 3 || t != (n + 2) / 3 || (a == t) != (n % 3 == 0)) {
      out.pass = false;
      out.detail += fmt(" C_%d: alpha %d theta %d;", n, a, t);
    }
  }
  out.detail = fmt("%d paths and cycles match the closed forms", checked) + out.detail;
  return out;
}

// 2 -------------------------------------------------------------------------

Outcome oracle_equivalence(Context& ctx) {
  Outcome out;
  long graphs = 0, mismatches = 0;
  auto check = [&](const Graph& g) {
    ++graphs;
    const auto [a, t] = ctx.solve(g);
    if (a != brute_alpha(g) || t != brute_theta(g)) {
      if (++mismatches <= 3) out.detail += " mismatch " + to_graph6(g) + ";";
    }
  };
  for_each_graph(7, GraphClass::connected, check);
  for (int n = 8; n <= 12; ++n) {
    for (int i = 0; i < kRandomPerOrder; ++i) {
      check(random_graph(n, 0.1 + 0.1 * (i % 6), 1'000'000ULL * n + i));
    }
  }
  out.pass = mismatches == 0;
  out.detail = fmt("%ld graphs, %ld mismatches", graphs, mismatches) + out.detail;
  return out;
}

// 3 -------------------------------------------------------------------------

Outcome main_theorem(Context& ctx) {
  MainTheoremVerifier v;
  auto run = [&](const Graph& g) {
    const auto r = v.check(g);
    if (!r) return;
    ctx.solve(g);
    if (r->theorem.sun) ctx.audit_sun(g, *r->theorem.sun);
    ctx.add_witness(g, r->brute);
  };
  for_each_graph(8, GraphClass::connected_chordal, run);
  const long exhaustive = v.checked();
  for (int i = 0; i < kRandomChordal; ++i) {
    run(random_chordal(kRandomChordalOrder, kFills[i % 5], 0x5eed0000ULL + i));
  }
  Outcome out;
  const long rejected = v.rejected_nonchordal() + v.rejected_too_large();
  out.pass = v.ok() && rejected == 0 && v.checked() == exhaustive + kRandomChordal;
  out.detail = fmt("%ld exhaustive + %ld random chordal graphs, %zu disagreements, %ld rejected", exhaustive,
                   v.checked() - exhaustive, v.disagreements().size(), rejected);
  for (std::size_t i = 0; i < v.disagreements().size() && i < 3; ++i) {
    out.detail += " " + v.disagreements()[i].graph6;
  }
  return out;
}

// 4 -------------------------------------------------------------------------

Outcome odd_sun_gap(Context& ctx) {
  Outcome out;
  std::ostringstream d;
  for (int k : {3, 5, 7}) {
    const Graph g = make_sun(k, ChordPolicy::fan());
    const auto [a, t] = ctx.solve(g);
    const bool chordal = is_chordal(g);
    const PerfectionVerdict v = is_s_perfect_brute(g);
    ctx.add_witness(g, v);
    if (auto sun = find_induced_sun(g, Parity::odd)) ctx.audit_sun(g, *sun);
    d << " k=" << k << ": alpha " << a << " theta " << t << ";";
    if (!chordal || t != a + 1 || v.is_s_perfect) out.pass = false;
  }
  const Graph s3 = make_sun(3);
  bool restored = is_minimal_s_imperfect(s3);
  for (Vertex v = 0; v < s3.order(); ++v) {
    const Graph h = delete_vertex(s3, v).graph;
    const auto [a, t] = ctx.solve(h);
    restored = restored && a == t && is_s_perfect_brute(h).is_s_perfect;
  }
  d << " 3-sun minimal: " << (restored ? "yes" : "no");
  out.pass = out.pass && restored;
  out.detail = d.str().substr(1);
  return out;
}

// 5 -------------------------------------------------------------------------

Outcome even_extended_sun(Context& ctx) {
  Outcome out;
  std::ostringstream d;
  const std::vector<std::vector<int>> shapes{{1, 1, 1, 1}, {2, 1, 2, 1}, {3, 2, 1, 2}, {1, 1, 1, 1, 1, 1},
                                             {2, 1, 1, 2, 1, 1}};
  for (const auto& sizes : shapes) {
    const int k = static_cast<int>(sizes.size());
    const Graph g = make_extended_sun(k, sizes, ChordPolicy::complete());
    const bool chordal = is_chordal(g);
    const bool three_sun_free = !find_induced_sun(g, Parity::odd, 3).has_value();
    const auto [a, t] = ctx.solve(g);
    const PerfectionVerdict v = is_s_perfect_brute(g);
    const bool ok = chordal && three_sun_free && a == k / 2 && t == k / 2 && v.is_s_perfect;
    d << " k=" << k << " n=" << g.order() << ": alpha " << a << " theta " << t
      << (v.is_s_perfect ? " S-perfect" : " not S-perfect") << (ok ? "" : " (FAILED)") << ";";
    out.pass = out.pass && ok;
  }
  out.detail = d.str().substr(1);
  return out;
}

// 6 -------------------------------------------------------------------------

Outcome witness_structure(Context& ctx) {
  Outcome out;
  std::ostringstream d;
  int failures = 0;
  for (const Graph& w : ctx.witnesses) {
    const MinimalImperfectProperties p = minimal_imperfect_properties(w);
    if (p.all_hold()) continue;
    ++failures;
    d << " " << to_graph6(w) << ":";
    if (!p.is_block) d << " not a block;";
    if (p.nested_pair) d << " N(" << p.nested_pair->first << ") inside N(" << p.nested_pair->second << ");";
    if (p.chordal && !p.gap_one()) d << " gap " << p.gap() << ";";
    if (p.chordal && !p.hamiltonian.value_or(false)) d << " not Hamiltonian;";
  }
  out.pass = failures == 0 && !ctx.witnesses.empty();
  out.detail = fmt("%zu distinct witnesses, %d failing", ctx.witnesses.size(), failures) + d.str();
  return out;
}

// 7 -------------------------------------------------------------------------

Outcome star_non_monotone(Context& ctx) {
  const Graph star = make_star(5);
  const auto [a, t] = ctx.solve(star);
  const auto [a2, t2] = ctx.solve(delete_vertex(star, 0).graph);
  Outcome out;
  out.pass = a == 1 && t == 1 && a2 == 5 && t2 == 5;
  out.detail = fmt("K_{1,5}: alpha %d theta %d; without center: alpha %d theta %d", a, t, a2, t2);
  return out;
}

// 8 -------------------------------------------------------------------------

Outcome certificate_soundness(Context& ctx) {
  Outcome out;
  out.pass = ctx.failures == 0 && ctx.packings > 0 && ctx.covers > 0 && ctx.suns > 0;
  out.detail = fmt("%ld packings, %ld covers, %ld sun certificates verified; %ld failures", ctx.packings,
                   ctx.covers, ctx.suns, ctx.failures);
  for (const auto& f : ctx.first_failures) out.detail += " " + f;
  return out;
}

// 9 -------------------------------------------------------------------------

Outcome conjecture_smoke(Context& ctx) {
  const ConjectureReport r = explore_conjecture_exhaustive(9);
  Outcome out;
  // super suns cannot fit at n <= 9, so both readings reduce to the cycle clauses
  const ReadingTally& t = r.tallies[static_cast<std::size_t>(SuperSunReading::decoupled)];
  const bool notes_ok = r.notes.size() == kSuperSunReadings.size();
  out.pass = notes_ok && r.counterexamples.empty();
  out.detail = fmt("%ld connected graphs; perfect but forbidden %ld, imperfect but free %ld; super-sun note %s",
                   r.scanned, t.perfect_but_forbidden, t.imperfect_but_free, notes_ok ? "present" : "missing");
  int shown = 0;
  for (const ConjectureRecord& c : r.counterexamples) {
    if (shown++ == 5) break;
    out.detail += " " + c.graph6;
    if (c.odd_sun) {
      out.detail += fmt("(odd %d-sun)", c.odd_sun->k);
      ctx.audit_sun(parse_graph6(c.graph6), *c.odd_sun);
    }
  }
  if (r.counterexamples.size() > 5) out.detail += " ...";
  return out;
}

// 10 ------------------------------------------------------------------------

Outcome format_round_trip(Context&) {
  Rng rng(20'240'601);
  long bad = 0;
  std::string first;
  for (int i = 0; i < kRoundTrips; ++i) {
    const int n = static_cast<int>(rng.below(kMaxVertices + 1));
    const Graph g = random_graph(n, rng.unit(), rng.next());
    const std::string g6 = to_graph6(g);
    const std::string el = to_edge_list(g);
    const bool ok = parse_graph6(g6) == g && to_graph6(parse_graph6(g6)) == g6 && parse_edge_list(el) == g &&
                    to_edge_list(parse_edge_list(el)) == el;
    if (!ok && bad++ == 0) first = g6;
  }
  Outcome out;
  out.pass = bad == 0;
  out.detail = fmt("%d random graphs, %ld failures", kRoundTrips, bad) + (first.empty() ? "" : " first " + first);
  return out;
}

struct Criterion {
  const char* title;
  Outcome (*run)(Context&);
  std::vector<int> needs;  // run silently first
};

const Criterion kCriteria[11] = {
    {"", nullptr, {}},
    {"path/cycle closed forms", closed_forms, {}},
    {"oracle equivalence", oracle_equivalence, {}},
    {"main theorem sweep", main_theorem, {}},
    {"odd sun gap", odd_sun_gap, {}},
    {"even extended sun perfection", even_extended_sun, {}},
    {"minimal-witness structural properties", witness_structure, {3, 4}},
    {"non-monotonicity witness", star_non_monotone, {}},
    {"certificate soundness", certificate_soundness, {1, 2, 3, 4, 5, 6, 7}},
    {"conjecture explorer smoke", conjecture_smoke, {}},
    {"format round-trip", format_round_trip, {}},
};

bool run_one(int id, Context& ctx, bool print) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o = kCriteria[id].run(ctx);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs <= kTimeLimit[id];
  const bool pass = o.pass && in_time;
  if (print) {
    std::string limit = kTimeLimit[id] == kNoLimit ? "" : fmt(" / %.0f s", kTimeLimit[id]);
    std::printf("%s criterion %d: %s [%.2f s%s%s] %s\n", pass ? "PASS" : "FAIL", id, kCriteria[id].title, secs,
                limit.c_str(), in_time ? "" : ", over time", o.detail.c_str());
    std::fflush(stdout);
  }
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      const int id = std::atoi(argv[++i]);
      if (id < 1 || id > 10) {
        std::fprintf(stderr, "criterion must be 1..10\n");
        return 2;
      }
      ids.push_back(id);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]...\n", argv[0]);
      return 2;
    }
  }
  Context ctx;
  std::set<int> done;
  bool all = true;
  if (ids.empty()) {
    for (int id = 1; id <= 10; ++id) all = run_one(id, ctx, true) && all;
    return all ? 0 : 1;
  }
  for (int id : ids) {
    for (int dep : kCriteria[id].needs) {
      if (done.insert(dep).second) run_one(dep, ctx, false);
    }
    all = run_one(id, ctx, true) && all;
    done.insert(id);
  }
  return all ? 0 : 1;
}
