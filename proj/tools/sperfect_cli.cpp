// Command-line front end: analyze, generate, verify-theorem,
// explore-conjecture, minimal-witness.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sperfect/chordal.hpp"
#include "sperfect/conjecture.hpp"
#include "sperfect/enumerate.hpp"
#include "sperfect/families.hpp"
#include "sperfect/graph_io.hpp"
#include "sperfect/perfection.hpp"
#include "sperfect/report.hpp"
#include "sperfect/rng.hpp"

using namespace sperfect;

namespace {

constexpr int kOk = 0;
constexpr int kFindings = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Io {
  std::string in = "-";
  std::string out = "-";
  bool json = false;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw UsageError("cannot open output file '" + path + "'");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<StreamRecord> read_input(const std::string& path) {
  if (path == "-") return read_graph6_lines(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read input file '" + path + "'");
  return read_graph6_lines(in);
}

/// Parses every record; malformed ones are reported on stderr and counted.
std::vector<Graph> parse_records(const std::string& path, const std::vector<StreamRecord>& records, long& bad) {
  std::vector<Graph> out;
  for (const auto& r : records) {
    try {
      out.push_back(parse_graph6(r.text));
    } catch (const FormatError& e) {
      ++bad;
      std::cerr << path << ":" << r.line << ": " << e.what() << '\n';
    }
  }
  return out;
}

void add_io(CLI::App* cmd, Io& io, bool with_in = true) {
  if (with_in) cmd->add_option("--in", io.in, "graph6 input file, one graph per line ('-' for stdin)");
  cmd->add_option("--out", io.out, "output file ('-' for stdout)");
  cmd->add_flag("--json", io.json, "emit JSON instead of text");
}

// analyze ------------------------------------------------------------------

struct AnalyzeArgs {
  Io io;
  bool timing = false;
  std::string parity = "any";
};

int run_analyze(const AnalyzeArgs& a) {
  const auto records = read_input(a.io.in);
  Output out(a.io.out);
  AnalyzeOptions opts;
  opts.timing = a.timing;
  opts.sun_parity = parse_parity(a.parity);
  long bad = 0;
  for (const Graph& g : parse_records(a.io.in, records, bad)) {
    const AnalysisReport r = analyze(g, opts);
    if (a.io.json) {
      out.stream() << to_json(r, g).dump() << '\n';
    } else {
      out.stream() << to_text(r);
    }
  }
  return bad ? kUsage : kOk;
}

// generate -----------------------------------------------------------------

struct GenerateArgs {
  Io io;
  std::string family;
  std::optional<int> k, n, len;
  std::string sizes, spokes, triangles, inner, chords, format = "graph6";
  double fill = 0.5;
  std::uint64_t seed = 1;
  int count = 1;
};

std::string render(const Graph& g, const std::string& format) {
  if (format == "graph6") return to_graph6(g) + "\n";
  if (format == "edges") return to_edge_list(g);
  if (format == "dot") return to_dot(g);
  throw UsageError("unknown format '" + format + "'");
}

int run_generate(const GenerateArgs& a) {
  std::vector<std::pair<std::string, Graph>> graphs;
  if (a.family == "random-chordal" || a.family == "random_chordal") {
    if (!a.n) throw UsageError("random-chordal needs --n");
    Rng rng(a.seed);
    for (int i = 0; i < a.count; ++i) {
      const std::uint64_t s = rng.next();
      graphs.emplace_back("family=random-chordal n=" + std::to_string(*a.n) + " seed=" + std::to_string(s),
                          random_chordal(*a.n, a.fill, s));
    }
  } else {
    std::string text = "family=" + a.family;
    auto put = [&](const char* key, const std::string& v) {
      if (!v.empty()) text += std::string(" ") + key + "=" + v;
    };
    if (a.k) put("k", std::to_string(*a.k));
    if (a.n) put("n", std::to_string(*a.n));
    if (a.len) put("len", std::to_string(*a.len));
    put("sizes", a.sizes);
    put("spokes", a.spokes);
    put("triangles", a.triangles);
    put("inner", a.inner);
    put("chords", a.chords);
    const FamilySpec spec = parse_family_spec(text);
    graphs.emplace_back(to_string(spec), make_family(spec));
  }
  Output out(a.io.out);
  for (const auto& [spec, g] : graphs) {
    if (a.io.json) {
      Json j;
      j["spec"] = spec;
      j["graph6"] = to_graph6(g);
      j["order"] = g.order();
      j["size"] = g.edge_count();
      out.stream() << j.dump() << '\n';
    } else {
      out.stream() << render(g, a.format);
    }
  }
  return kOk;
}

// verify-theorem -----------------------------------------------------------

struct SweepArgs {
  Io io;
  std::optional<int> exhaustive;
  int random = 0;
  int max_n = 12;
  std::uint64_t seed = 1;
};

constexpr double kFills[] = {0.0, 0.25, 0.5, 0.75, 1.0};

int run_verify_theorem(const SweepArgs& a, bool in_given) {
  if (!a.exhaustive && a.random == 0 && !in_given) throw UsageError("give --exhaustive N, --random COUNT or --in FILE");
  if (a.exhaustive && (*a.exhaustive < 1 || *a.exhaustive > kBrutePerfectionLimit || *a.exhaustive > 12)) {
    throw UsageError("--exhaustive must lie in [1, 12]");
  }
  if (a.max_n < 1 || a.max_n > kBrutePerfectionLimit) throw UsageError("--max-n must lie in [1, 14]");
  MainTheoremVerifier v;
  long bad = 0;
  if (in_given) {
    for (const Graph& g : parse_records(a.io.in, read_input(a.io.in), bad)) v.check(g);
  }
  if (a.exhaustive) for_each_graph(*a.exhaustive, GraphClass::connected_chordal, [&](const Graph& g) { v.check(g); });
  Rng rng(a.seed);
  for (int i = 0; i < a.random; ++i) {
    const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(a.max_n)));
    v.check(random_chordal(n, kFills[i % 5], rng.next()));
  }
  Output out(a.io.out);
  out.stream() << (a.io.json ? to_json(v).dump() + "\n" : to_text(v));
  if (bad) return kUsage;
  return v.ok() ? kOk : kFindings;
}

// explore-conjecture -------------------------------------------------------

int run_explore(const SweepArgs& a, bool in_given) {
  if (!a.exhaustive && !in_given) throw UsageError("give --exhaustive N or --in FILE");
  if (a.exhaustive && (*a.exhaustive < 1 || *a.exhaustive > 10)) throw UsageError("--exhaustive must lie in [1, 10]");
  ConjectureExplorer ex;
  if (in_given) {
    const auto records = read_input(a.io.in);
    for (const auto& r : records) {
      try {
        ex.add(parse_graph6(r.text));
      } catch (const FormatError& e) {
        ex.add_malformed();
        std::cerr << a.io.in << ":" << r.line << ": " << e.what() << '\n';
      }
    }
  }
  if (a.exhaustive) for_each_graph(*a.exhaustive, GraphClass::connected, [&](const Graph& g) { ex.add(g); });
  const ConjectureReport rep = ex.report();
  Output out(a.io.out);
  out.stream() << (a.io.json ? to_json(rep).dump() + "\n" : to_text(rep));
  return rep.counterexamples.empty() ? kOk : kFindings;
}

// minimal-witness ----------------------------------------------------------

int run_minimal_witness(const Io& io) {
  const auto records = read_input(io.in);
  Output out(io.out);
  long bad = 0;
  bool violated = false;
  for (const Graph& g : parse_records(io.in, records, bad)) {
    const std::string g6 = to_graph6(g);
    if (g.order() > kBrutePerfectionLimit) {
      std::cerr << g6 << ": order " << g.order() << " above " << kBrutePerfectionLimit << ", skipped\n";
      ++bad;
      continue;
    }
    const PerfectionVerdict verdict = is_s_perfect_brute(g);
    std::optional<MinimalImperfectProperties> props;
    std::string w6;
    if (verdict.witness) {
      const Graph w = induced_subgraph(g, verdict.witness->vertices).graph;
      w6 = to_graph6(w);
      props = minimal_imperfect_properties(w);
      violated = violated || !props->all_hold();
    }
    if (io.json) {
      Json j;
      j["graph6"] = g6;
      j["perfection"] = to_json(verdict, g);
      j["properties"] = props ? to_json(*props) : Json(nullptr);
      out.stream() << j.dump() << '\n';
    } else if (!props) {
      out.stream() << g6 << " S-perfect\n";
    } else {
      out.stream() << g6 << " witness " << w6 << " alpha_S=" << props->alpha << " theta_S=" << props->theta
                   << " block=" << (props->is_block ? "yes" : "no")
                   << " nested=" << (props->nested_pair ? "yes" : "no") << " gap_one=" << (props->gap_one() ? "yes" : "no");
      if (props->hamiltonian) out.stream() << " hamiltonian=" << (*props->hamiltonian ? "yes" : "no");
      out.stream() << '\n';
    }
  }
  if (bad) return kUsage;
  return violated ? kFindings : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S-perfection toolkit: packing and star-cover numbers, chordality, suns, S-perfection"};
  app.require_subcommand(1);

  AnalyzeArgs an;
  auto* analyze_cmd = app.add_subcommand("analyze", "report chordality, alpha_S, theta_S, suns and S-perfection");
  add_io(analyze_cmd, an.io);
  analyze_cmd->add_flag("--timing", an.timing, "include wall-clock timings (breaks byte-identical output)");
  analyze_cmd->add_option("--parity", an.parity, "parity of the sun to report: any, odd, even")
      ->check(CLI::IsMember({"any", "odd", "even"}));

  GenerateArgs ge;
  auto* gen_cmd = app.add_subcommand("generate", "build a named family member or random chordal graphs");
  add_io(gen_cmd, ge.io, false);
  gen_cmd->add_option("family", ge.family,
                      "path, cycle, complete, star, sun, extended-sun, super-sun, special-path, random-chordal")
      ->required();
  gen_cmd->add_option("--k", ge.k, "cycle length / order parameter");
  gen_cmd->add_option("--n", ge.n, "order (complete, star, random-chordal)");
  gen_cmd->add_option("--len", ge.len, "path length (special-path)");
  gen_cmd->add_option("--sizes", ge.sizes, "extended-sun clique sizes, comma separated");
  gen_cmd->add_option("--spokes", ge.spokes, "super-sun spoke sizes, comma separated");
  gen_cmd->add_option("--triangles", ge.triangles, "special-path edges carrying a triangle");
  gen_cmd->add_option("--inner", ge.inner, "inner chords: none, fan, complete");
  gen_cmd->add_option("--chords", ge.chords, "explicit inner chords, e.g. 0-2,0-3");
  gen_cmd->add_option("--fill", ge.fill, "random-chordal attachment density in [0, 1]");
  gen_cmd->add_option("--seed", ge.seed, "random-chordal seed");
  gen_cmd->add_option("--count", ge.count, "random-chordal instances")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--format", ge.format, "graph6, edges or dot")->check(CLI::IsMember({"graph6", "edges", "dot"}));

  SweepArgs vt;
  auto* vt_cmd = app.add_subcommand("verify-theorem", "compare brute and odd-sun S-perfection on chordal graphs");
  add_io(vt_cmd, vt.io);
  vt_cmd->add_option("--exhaustive", vt.exhaustive, "all connected chordal graphs up to this order");
  vt_cmd->add_option("--random", vt.random, "number of random chordal graphs");
  vt_cmd->add_option("--max-n", vt.max_n, "largest random order");
  vt_cmd->add_option("--seed", vt.seed, "random seed");

  SweepArgs ec;
  auto* ec_cmd = app.add_subcommand("explore-conjecture", "compare S-perfection with the forbidden-structure list");
  add_io(ec_cmd, ec.io);
  ec_cmd->add_option("--exhaustive", ec.exhaustive, "all connected graphs up to this order");

  Io mw;
  auto* mw_cmd = app.add_subcommand("minimal-witness", "find minimal S-imperfect subgraphs and check their structure");
  add_io(mw_cmd, mw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze_cmd) return run_analyze(an);
    if (*gen_cmd) return run_generate(ge);
    if (*vt_cmd) return run_verify_theorem(vt, vt_cmd->count("--in") > 0);
    if (*ec_cmd) return run_explore(ec, ec_cmd->count("--in") > 0);
    if (*mw_cmd) return run_minimal_witness(mw);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const FamilyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
