#include "doctest.h"
#include "sperfect/chordal.hpp"
#include "sperfect/enumerate.hpp"
#include "sperfect/families.hpp"
#include "sperfect/graph_io.hpp"
#include "sperfect/report.hpp"

using namespace sperfect;

TEST_CASE("analysis of the 3-sun") {
  const Graph g = make_sun(3);
  const AnalysisReport r = analyze(g);
  CHECK(r.graph6 == to_graph6(g));
  CHECK(r.chordality.is_chordal);
  CHECK(r.alpha.value == 1);
  CHECK(r.theta.value == 2);
  REQUIRE(r.odd_sun);
  CHECK(r.odd_sun->k == 3);
  REQUIRE(r.perfection);
  CHECK_FALSE(r.perfection->is_s_perfect);
  CHECK_FALSE(r.timing);
  CHECK(report_consistent(g, r));

  const Json j = to_json(r, g);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"graph6", "order", "size", "chordality", "alpha_s", "theta_s", "suns",
                                         "perfection"});
  CHECK(j["perfection"]["witness"]["alpha_s"] == 1);
  CHECK(j["perfection"]["witness"]["theta_s"] == 2);
  CHECK(j["theta_s"]["cover"].size() == 2);
  CHECK(to_text(r).find("S-perfect: no (brute)") != std::string::npos);
}

TEST_CASE("reports fall back by size and chordality") {
  const Graph big_chordal = make_sun(11, ChordPolicy::fan());
  const AnalysisReport a = analyze(big_chordal, {.timing = false, .sun_parity = Parity::odd, .max_sun_k = 3});
  REQUIRE(a.perfection);
  CHECK(a.perfection->method == PerfectionMethod::chordal_theorem);
  CHECK(report_consistent(big_chordal, a));

  const Graph c15 = make_cycle(15);
  const AnalysisReport b = analyze(c15);
  CHECK_FALSE(b.perfection);
  CHECK_FALSE(b.chordality.is_chordal);
  CHECK(b.chordality.hole.size() == 15);
  CHECK(to_json(b, c15)["perfection"].is_null());
  CHECK(to_json(b, c15)["chordality"].contains("hole"));
  CHECK(report_consistent(c15, b));
}

TEST_CASE("reports are reproducible and self-consistent") {
  for (int seed = 0; seed < 60; ++seed) {
    const Graph g = seed % 2 ? random_graph(4 + seed % 9, 0.35, seed) : random_chordal(4 + seed % 9, 0.5, seed);
    const AnalysisReport r = analyze(g);
    CHECK(report_consistent(g, r));
    CHECK(to_json(r, g).dump() == to_json(analyze(g), g).dump());
  }
}

TEST_CASE("tampered reports are caught") {
  const Graph g = make_path(6);
  AnalysisReport r = analyze(g);
  CHECK(report_consistent(g, r));
  AnalysisReport bad = r;
  bad.alpha.packing.vertices.insert(1);
  bad.alpha.value += 1;
  CHECK_FALSE(report_consistent(g, bad));
  bad = r;
  bad.theta.cover.stars.pop_back();
  bad.theta.value -= 1;
  CHECK_FALSE(report_consistent(g, bad));
  bad = r;
  bad.chordality.peo = {0, 1};
  CHECK_FALSE(report_consistent(g, bad));
}

TEST_CASE("timing appears only on request") {
  const AnalysisReport r = analyze(make_cycle(5), {.timing = true});
  REQUIRE(r.timing);
  CHECK(to_json(r, make_cycle(5)).contains("timing_ms"));
  CHECK(to_text(r).find("timing ms") != std::string::npos);
}

TEST_CASE("sweep and conjecture summaries serialise") {
  MainTheoremVerifier v;
  for (const Graph& g : enumerate_graphs(6, GraphClass::connected_chordal)) v.check(g);
  const Json j = to_json(v);
  CHECK(j["checked"] == 58);
  CHECK(j["disagreements"].empty());
  CHECK(j["witnesses"].size() == 1);
  CHECK(to_text(v).find("zero disagreements") != std::string::npos);

  ConjectureExplorer ex;
  ex.add(make_sun(3));
  ex.add(make_cycle(5));
  const ConjectureReport rep = ex.report();
  const Json c = to_json(rep);
  CHECK(c["scanned"] == 2);
  CHECK(c["counterexamples"].size() == 1);
  CHECK(c["counterexamples"][0]["odd_sun"]["k"] == 3);
  CHECK(c["counterexamples"][0]["scan"]["forbidden_cycle"].is_null());
  CHECK(c["notes"].size() == 2);
  CHECK(to_text(rep).find("note: no odd super sun fits") != std::string::npos);
}
