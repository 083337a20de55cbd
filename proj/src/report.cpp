#include "sperfect/report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "sperfect/graph_io.hpp"

namespace sperfect {
namespace {

template <class F>
auto timed(double& ms, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

Json vertex_list(VertexSet s) { return Json(s.to_vector()); }

std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vs[i]);
  }
  return out;
}

std::string sun_text(const SunCertificate& c) {
  return std::to_string(c.k) + "-sun inner [" + join(c.inner) + "] outer [" + join(c.outer) + "]";
}

}  // namespace

AnalysisReport analyze(const Graph& g, const AnalyzeOptions& opts) {
  AnalysisReport r;
  AnalysisTiming t;
  r.graph6 = to_graph6(g);
  r.order = g.order();
  r.size = g.edge_count();
  r.chordality = timed(t.chordality_ms, [&] { return check_chordal(g); });
  r.alpha = timed(t.alpha_ms, [&] { return alpha_s(g); });
  r.theta = timed(t.theta_ms, [&] { return theta_s(g); });
  timed(t.suns_ms, [&] {
    r.sun_parity = opts.sun_parity;
    r.sun = find_induced_sun(g, opts.sun_parity, opts.max_sun_k);
    r.odd_sun = r.sun && r.sun->parity == Parity::odd ? r.sun : find_induced_sun(g, Parity::odd, opts.max_sun_k);
    return 0;
  });
  r.perfection = timed(t.perfection_ms, [&]() -> std::optional<PerfectionVerdict> {
    if (g.order() <= kBrutePerfectionLimit) return is_s_perfect_brute(g);
    if (r.chordality.is_chordal) return is_s_perfect_chordal(g);
    return std::nullopt;
  });
  if (opts.timing) r.timing = t;
  return r;
}

bool report_consistent(const Graph& g, const AnalysisReport& r) {
  if (r.graph6 != to_graph6(g) || r.order != g.order() || r.size != g.edge_count()) return false;
  if (r.chordality.is_chordal) {
    if (!is_perfect_elimination_ordering(g, r.chordality.peo)) return false;
  } else if (!is_induced_hole(g, r.chordality.hole)) {
    return false;
  }
  if (r.alpha.value != r.alpha.packing.size() || !verify_packing(g, r.alpha.packing)) return false;
  if (r.theta.value != r.theta.cover.size() || !verify_cover(g, r.theta.cover)) return false;
  if (r.alpha.value > r.theta.value) return false;
  for (const auto* sun : {&r.odd_sun, &r.sun}) {
    if (*sun && !verify_sun_certificate(g, **sun)) return false;
  }
  if (r.perfection) {
    const PerfectionVerdict& p = *r.perfection;
    if (p.is_s_perfect != (!p.witness && !p.sun)) return false;
    if (p.witness) {
      const Subgraph w = induced_subgraph(g, p.witness->vertices);
      if (!is_minimal_s_imperfect(w.graph)) return false;
    }
    if (p.sun && (p.sun->parity != Parity::odd || !verify_sun_certificate(g, *p.sun))) return false;
  }
  return true;
}

Json to_json(const SunCertificate& c) {
  Json j;
  j["k"] = c.k;
  j["parity"] = parity_name(c.parity);
  j["inner"] = c.inner;
  j["outer"] = c.outer;
  return j;
}

Json to_json(const PerfectionVerdict& v, const Graph& g) {
  Json j;
  j["is_s_perfect"] = v.is_s_perfect;
  j["method"] = method_name(v.method);
  if (v.witness) {
    Json w;
    w["vertices"] = vertex_list(v.witness->vertices);
    w["graph6"] = to_graph6(induced_subgraph(g, v.witness->vertices).graph);
    w["alpha_s"] = v.witness->alpha;
    w["theta_s"] = v.witness->theta;
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  j["sun"] = v.sun ? to_json(*v.sun) : Json(nullptr);
  return j;
}

Json to_json(const AnalysisReport& r, const Graph& g) {
  Json j;
  j["graph6"] = r.graph6;
  j["order"] = r.order;
  j["size"] = r.size;
  Json ch;
  ch["is_chordal"] = r.chordality.is_chordal;
  if (r.chordality.is_chordal) {
    ch["peo"] = r.chordality.peo;
  } else {
    ch["hole"] = r.chordality.hole;
  }
  j["chordality"] = std::move(ch);
  j["alpha_s"] = {{"value", r.alpha.value}, {"packing", vertex_list(r.alpha.packing.vertices)}};
  Json stars = Json::array();
  for (const Star& s : r.theta.cover.stars) stars.push_back({{"center", s.center}, {"leaves", vertex_list(s.leaves)}});
  j["theta_s"] = {{"value", r.theta.value}, {"cover", std::move(stars)}};
  j["suns"] = {{"odd", r.odd_sun ? to_json(*r.odd_sun) : Json(nullptr)},
               {"requested_parity", parity_name(r.sun_parity)},
               {"smallest", r.sun ? to_json(*r.sun) : Json(nullptr)}};
  j["perfection"] = r.perfection ? to_json(*r.perfection, g) : Json(nullptr);
  if (r.timing) {
    j["timing_ms"] = {{"chordality", r.timing->chordality_ms},
                      {"alpha_s", r.timing->alpha_ms},
                      {"theta_s", r.timing->theta_ms},
                      {"suns", r.timing->suns_ms},
                      {"perfection", r.timing->perfection_ms}};
  }
  return j;
}

Json to_json(const MinimalImperfectProperties& p) {
  Json j;
  j["chordal"] = p.chordal;
  j["alpha_s"] = p.alpha;
  j["theta_s"] = p.theta;
  j["block"] = p.is_block;
  j["gap_one"] = p.gap_one();
  if (p.nested_pair) {
    j["nested_neighborhoods"] = {p.nested_pair->first, p.nested_pair->second};
  } else {
    j["nested_neighborhoods"] = nullptr;
  }
  j["hamiltonian"] = p.hamiltonian ? Json(*p.hamiltonian) : Json(nullptr);
  j["all_hold"] = p.all_hold();
  return j;
}

Json to_json(const MainTheoremVerifier& v) {
  Json j;
  j["checked"] = v.checked();
  j["rejected_nonchordal"] = v.rejected_nonchordal();
  j["rejected_too_large"] = v.rejected_too_large();
  Json orders = Json::array();
  for (const auto& [n, c] : v.per_order()) {
    orders.push_back({{"order", n},
                      {"graphs", c.graphs},
                      {"s_perfect", c.s_perfect},
                      {"s_imperfect", c.s_imperfect},
                      {"disagreements", c.disagreements}});
  }
  j["per_order"] = std::move(orders);
  j["witnesses"] = v.witnesses();
  Json dis = Json::array();
  for (const TheoremCheck& c : v.disagreements()) {
    const Graph g = parse_graph6(c.graph6);
    dis.push_back({{"graph6", c.graph6}, {"brute", to_json(c.brute, g)}, {"theorem", to_json(c.theorem, g)}});
  }
  j["disagreements"] = std::move(dis);
  return j;
}

Json to_json(const ConjectureReport& r) {
  Json j;
  j["scanned"] = r.scanned;
  j["max_order"] = r.max_order;
  j["skipped_malformed"] = r.skipped_malformed;
  j["skipped_disconnected"] = r.skipped_disconnected;
  j["skipped_too_large"] = r.skipped_too_large;
  Json tallies;
  for (SuperSunReading reading : kSuperSunReadings) {
    const ReadingTally& t = r.tallies[static_cast<std::size_t>(reading)];
    tallies[std::string(reading_name(reading))] = {{"agree_perfect", t.agree_perfect},
                                                   {"agree_imperfect", t.agree_imperfect},
                                                   {"perfect_but_forbidden", t.perfect_but_forbidden},
                                                   {"imperfect_but_free", t.imperfect_but_free}};
  }
  j["tallies"] = std::move(tallies);
  Json rows = Json::array();
  for (const ConjectureRecord& c : r.counterexamples) {
    const Graph g = parse_graph6(c.graph6);
    Json scan;
    scan["forbidden_cycle"] = c.scan.cycle ? Json(*c.scan.cycle) : Json(nullptr);
    Json ss;
    for (SuperSunReading reading : kSuperSunReadings) {
      const auto i = static_cast<std::size_t>(reading);
      Json entry;
      entry["fits"] = c.scan.super_sun_fits[i];
      if (c.scan.super_sun[i]) {
        entry["match"] = {{"pattern", c.scan.super_sun[i]->pattern}, {"image", c.scan.super_sun[i]->image}};
      } else {
        entry["match"] = nullptr;
      }
      ss[std::string(reading_name(reading))] = std::move(entry);
    }
    scan["odd_super_sun"] = std::move(ss);
    Json row;
    row["graph6"] = c.graph6;
    row["order"] = c.order;
    row["perfection"] = to_json(c.perfection, g);
    row["scan"] = std::move(scan);
    row["disagrees"] = {{"decoupled", c.disagrees[0]}, {"tied", c.disagrees[1]}};
    row["odd_sun"] = c.odd_sun ? to_json(*c.odd_sun) : Json(nullptr);
    rows.push_back(std::move(row));
  }
  j["counterexamples"] = std::move(rows);
  j["notes"] = r.notes;
  return j;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << r.graph6 << "  n=" << r.order << " m=" << r.size << '\n';
  if (r.chordality.is_chordal) {
    out << "  chordal: yes, peo [" << join(r.chordality.peo) << "]\n";
  } else {
    out << "  chordal: no, hole [" << join(r.chordality.hole) << "]\n";
  }
  out << "  alpha_S = " << r.alpha.value << ", packing [" << join(r.alpha.packing.vertices.to_vector()) << "]\n";
  out << "  theta_S = " << r.theta.value << ", stars";
  for (const Star& s : r.theta.cover.stars) out << " " << s.center << ":[" << join(s.leaves.to_vector()) << "]";
  out << '\n';
  out << "  odd sun: " << (r.odd_sun ? sun_text(*r.odd_sun) : "none") << '\n';
  out << "  smallest " << parity_name(r.sun_parity) << " sun: " << (r.sun ? sun_text(*r.sun) : "none") << '\n';
  if (!r.perfection) {
    out << "  S-perfect: undecided (not chordal, order above " << kBrutePerfectionLimit << ")\n";
  } else {
    const PerfectionVerdict& p = *r.perfection;
    out << "  S-perfect: " << (p.is_s_perfect ? "yes" : "no") << " (" << method_name(p.method) << ")\n";
    if (p.witness) {
      out << "  witness [" << join(p.witness->vertices.to_vector()) << "] alpha_S=" << p.witness->alpha
          << " theta_S=" << p.witness->theta << '\n';
    }
    if (p.sun) out << "  certificate: " << sun_text(*p.sun) << '\n';
  }
  if (r.timing) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "  timing ms: chordality %.3f alpha %.3f theta %.3f suns %.3f perfection %.3f\n",
                  r.timing->chordality_ms, r.timing->alpha_ms, r.timing->theta_ms, r.timing->suns_ms,
                  r.timing->perfection_ms);
    out << buf;
  }
  return out.str();
}

std::string to_text(const MainTheoremVerifier& v) {
  std::ostringstream out;
  out << "checked " << v.checked() << " chordal graphs, rejected " << v.rejected_nonchordal() << " non-chordal, "
      << v.rejected_too_large() << " too large\n";
  for (const auto& [n, c] : v.per_order()) {
    out << "  n=" << n << ": " << c.graphs << " graphs, " << c.s_perfect << " S-perfect, " << c.s_imperfect
        << " not, " << c.disagreements << " disagreements\n";
  }
  out << "minimal witnesses:";
  for (const auto& w : v.witnesses()) out << ' ' << w;
  out << '\n';
  for (const TheoremCheck& c : v.disagreements()) {
    out << "DISAGREE " << c.graph6 << " brute=" << c.brute.is_s_perfect << " theorem=" << c.theorem.is_s_perfect
        << '\n';
  }
  out << (v.ok() ? "zero disagreements\n" : "disagreements found\n");
  return out.str();
}

std::string to_text(const ConjectureReport& r) {
  std::ostringstream out;
  out << "scanned " << r.scanned << " connected graphs (n <= " << r.max_order << "), skipped " << r.skipped_malformed
      << " malformed, " << r.skipped_disconnected << " disconnected, " << r.skipped_too_large << " too large\n";
  for (SuperSunReading reading : kSuperSunReadings) {
    const ReadingTally& t = r.tallies[static_cast<std::size_t>(reading)];
    out << "  " << reading_name(reading) << ": agree " << t.agree_perfect << " perfect + " << t.agree_imperfect
        << " imperfect; perfect but forbidden " << t.perfect_but_forbidden << "; imperfect but free "
        << t.imperfect_but_free << '\n';
  }
  out << "counterexamples: " << r.counterexamples.size() << '\n';
  for (const ConjectureRecord& c : r.counterexamples) {
    out << "  " << c.graph6 << (c.perfection.is_s_perfect ? " S-perfect" : " not S-perfect");
    if (c.perfection.witness) {
      out << ", witness [" << join(c.perfection.witness->vertices.to_vector()) << "]";
    }
    out << ", forbidden cycle " << (c.scan.cycle ? "[" + join(*c.scan.cycle) + "]" : std::string("none"));
    if (c.odd_sun) out << ", " << sun_text(*c.odd_sun);
    out << '\n';
  }
  for (const auto& note : r.notes) out << "note: " << note << '\n';
  return out.str();
}

}  // namespace sperfect
