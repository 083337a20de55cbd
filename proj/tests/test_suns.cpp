#include "doctest.h"
#include "oracles.hpp"
#include "sperfect/chordal.hpp"
#include "sperfect/enumerate.hpp"
#include "sperfect/families.hpp"
#include "sperfect/suns.hpp"

using namespace sperfect;

namespace {

VertexSet vs(std::initializer_list<Vertex> v) { return VertexSet::from(std::vector<Vertex>(v)); }

std::optional<int> smallest(const std::vector<int>& sizes, Parity p) {
  for (int k : sizes)
    if (p == Parity::any || (k % 2 == 1) == (p == Parity::odd)) return k;
  return std::nullopt;
}

void check_finder_against_oracle(const Graph& g) {
  const auto sizes = oracle::sun_sizes(g);
  for (Parity p : {Parity::any, Parity::odd, Parity::even}) {
    const auto cert = find_induced_sun(g, p);
    const auto want = smallest(sizes, p);
    REQUIRE(cert.has_value() == want.has_value());
    if (!cert) continue;
    CHECK(cert->k == *want);
    CHECK(verify_sun_certificate(g, *cert));
    CHECK(oracle::is_sun(oracle::matrix(g), cert->vertices().bits()));
    if (p != Parity::any) CHECK(cert->parity == p);
  }
}

Graph with_pendants(const Graph& g) {
  std::vector<Edge> edges = g.edges();
  const int n = g.order();
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, n + v);
  return Graph::from_edges(2 * n, edges);
}

}  // namespace

TEST_CASE("sun finder examples") {
  const auto s3 = find_induced_sun(make_sun(3));
  REQUIRE(s3);
  CHECK(s3->k == 3);
  CHECK(s3->vertices() == VertexSet::range(6));
  CHECK(s3->parity == Parity::odd);
  CHECK_FALSE(find_induced_sun(make_sun(3), Parity::even));

  const Graph fig1 = make_extended_sun(5, std::vector<int>{2, 1, 1, 1, 2}, ChordPolicy::list({{1, 3}, {1, 4}}));
  const auto odd = find_induced_sun(fig1, Parity::odd);
  REQUIRE(odd);
  CHECK(odd->k == 3);
  CHECK(verify_sun_certificate(fig1, *odd));
  // several 3-suns exist; the one on A_1, v1, v2, v5, v4, A_5 is among them
  CHECK(oracle::is_sun(oracle::matrix(fig1), vs({5, 0, 1, 4, 3, 10}).bits()));

  for (int seed = 0; seed < 20; ++seed) CHECK_FALSE(find_induced_sun(random_chordal(12, 0.0, seed)));
  CHECK_FALSE(find_induced_sun(make_complete(8)));
  CHECK_FALSE(find_induced_sun(make_cycle(8)));
}

TEST_CASE("sun certificates are re-checked") {
  const Graph g = make_sun(4, ChordPolicy::complete());
  SunCertificate c{4, {0, 1, 2, 3}, {4, 5, 6, 7}, Parity::even};
  CHECK(verify_sun_certificate(g, c));
  SunCertificate wrong_parity = c;
  wrong_parity.parity = Parity::odd;
  CHECK_FALSE(verify_sun_certificate(g, wrong_parity));
  SunCertificate swapped = c;
  std::swap(swapped.outer[0], swapped.outer[1]);
  CHECK_FALSE(verify_sun_certificate(g, swapped));
  SunCertificate outside{3, {0, 1, 2}, {4, 5, 9}, Parity::odd};
  CHECK_FALSE(verify_sun_certificate(g, outside));
}

TEST_CASE("sun finder agrees with the subset oracle on all graphs n <= 7") {
  for (int n = 6; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n, GraphClass::connected)) check_finder_against_oracle(g);
  }
}

TEST_CASE("sun finder agrees with the subset oracle on random graphs n <= 10") {
  for (int n = 8; n <= 10; ++n) {
    for (int seed = 0; seed < 60; ++seed) {
      check_finder_against_oracle(random_chordal(n, 0.3 + 0.1 * (seed % 5), seed));
      check_finder_against_oracle(random_graph(n, 0.35 + 0.05 * (seed % 6), seed));
    }
  }
  check_finder_against_oracle(make_sun(5, ChordPolicy::complete()));
  check_finder_against_oracle(make_sun(4, ChordPolicy::list({{0, 2}})));
}

TEST_CASE("constructive 3-sun extraction") {
  const auto s = find_three_sun_chordal(make_sun(3));
  REQUIRE(s);
  CHECK(s->vertices() == VertexSet::range(6));
  CHECK(find_three_sun_constructive(make_sun(3)).has_value());
  CHECK_FALSE(find_three_sun_chordal(make_extended_sun(4, std::vector<int>{1, 1, 1, 1}, ChordPolicy::complete())));
  CHECK_FALSE(find_three_sun_chordal(make_complete(7)));
  CHECK_THROWS_AS(find_three_sun_chordal(make_cycle(5)), NotChordalError);
  // pendants on every vertex leave no simplicial vertex inside the sun
  const Graph padded = with_pendants(make_sun(3));
  const auto p = find_three_sun_chordal(padded);
  REQUIRE(p);
  CHECK(verify_sun_certificate(padded, *p));
}

TEST_CASE("constructive and exhaustive 3-sun searches agree on chordal graphs n <= 12") {
  int constructive_hits = 0;
  for (int n = 6; n <= 12; ++n) {
    for (int seed = 0; seed < 150; ++seed) {
      const Graph g = random_chordal(n, 0.2 + 0.15 * (seed % 5), 7 * n + 1000 * seed);
      const auto fast = find_three_sun_chordal(g);
      const auto full = find_induced_sun(g, Parity::odd, 3);
      CHECK(fast.has_value() == full.has_value());
      if (fast) CHECK(verify_sun_certificate(g, *fast));
      if (auto c = find_three_sun_constructive(g)) {
        ++constructive_hits;
        CHECK(c->k == 3);
        CHECK(verify_sun_certificate(g, *c));
      }
    }
  }
  CHECK(constructive_hits > 0);
}

TEST_CASE("extended sun recognition") {
  const std::vector<int> sizes{2, 1, 3, 1, 2};
  const Graph g = make_extended_sun(5, sizes, ChordPolicy::complete());
  const auto s = recognize_extended_sun(g);
  REQUIRE(s);
  CHECK(s->cycle.size() == 5);
  CHECK(is_extended_sun(g, *s));
  CHECK_FALSE(recognize_extended_sun(make_cycle(5)));
  CHECK_FALSE(recognize_extended_sun(make_complete(5)));
  ExtendedSunStructure broken = *s;
  std::swap(broken.groups[0], broken.groups[1]);
  CHECK_FALSE(is_extended_sun(g, broken));
}

TEST_CASE("embedding examples") {
  const ExtendedSunEmbedding e = embed_in_extended_sun(make_sun(3));
  REQUIRE(e.status == ExtendedSunEmbedding::Status::embedded);
  CHECK(e.added.empty());
  CHECK(e.sun == make_sun(3));

  // drop the outer clique on the last cycle edge; one fresh vertex restores it
  const std::vector<int> sizes{2, 1, 1, 1, 2};
  const Graph full = make_extended_sun(5, sizes, ChordPolicy::complete());
  const Graph cut = induced_subgraph(full, VertexSet::range(10)).graph;
  const ExtendedSunEmbedding r = embed_in_extended_sun(cut);
  REQUIRE(r.status == ExtendedSunEmbedding::Status::embedded);
  CHECK(r.added == std::vector<Vertex>{10});
  CHECK(is_extended_sun(r.sun, r.structure));
  CHECK(are_isomorphic(r.sun, make_extended_sun(5, std::vector<int>{2, 1, 1, 1, 1}, ChordPolicy::complete())));
  CHECK(induced_subgraph(r.sun, VertexSet::range(10)).graph == cut);

  CHECK_THROWS_AS(embed_in_extended_sun(make_cycle(4)), NotChordalError);
  CHECK_THROWS_AS(embed_in_extended_sun(make_path(4)), std::invalid_argument);
  const ExtendedSunEmbedding k4 = embed_in_extended_sun(make_complete(4));
  CHECK(k4.status == ExtendedSunEmbedding::Status::inapplicable);
  CHECK_FALSE(k4.reason.empty());
}

TEST_CASE("embedding round trip on random chordal blocks") {
  int embedded = 0, inapplicable = 0;
  for (int seed = 0; seed < 400; ++seed) {
    const Graph g = random_chordal(5 + seed % 8, 0.4 + 0.1 * (seed % 4), seed);
    if (!is_block(g) || simplicial_vertices(g).empty()) continue;
    const ExtendedSunEmbedding e = embed_in_extended_sun(g);
    if (e.status == ExtendedSunEmbedding::Status::inapplicable) {
      ++inapplicable;
      CHECK_FALSE(e.reason.empty());
      continue;
    }
    ++embedded;
    CHECK(is_extended_sun(e.sun, e.structure));
    CHECK(induced_subgraph(e.sun, g.vertices()).graph == g);
    for (Vertex a : e.added) CHECK(is_simplicial(e.sun, a));
  }
  MESSAGE("embedded " << embedded << ", inapplicable " << inapplicable);
  CHECK(embedded + inapplicable > 0);
}

TEST_CASE("hamiltonicity agrees with permutation search") {
  for (int n = 3; n <= 8; ++n) {
    for (int seed = 0; seed < 40; ++seed) {
      const Graph g = random_graph(n, 0.3 + 0.1 * (seed % 5), 31 * seed + n);
      const bool want = oracle::hamiltonian(g);
      CHECK(is_hamiltonian(g) == want);
      const auto c = hamiltonian_cycle(g);
      CHECK(c.has_value() == want);
      if (c) {
        REQUIRE(c->size() == static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) CHECK(g.adjacent((*c)[i], (*c)[(i + 1) % n]));
      }
    }
  }
  CHECK(is_hamiltonian(make_cycle(30)));
  CHECK_FALSE(is_hamiltonian(make_path(30)));
  const std::vector<Edge> req{{0, 2}};
  CHECK_FALSE(hamiltonian_cycle(make_cycle(4), req));
  const auto k4 = hamiltonian_cycle(make_complete(4), req);
  REQUIRE(k4);
  const auto& cyc = *k4;
  bool uses = false;
  for (int i = 0; i < 4; ++i) {
    const Vertex a = cyc[i], b = cyc[(i + 1) % 4];
    uses = uses || (std::min(a, b) == 0 && std::max(a, b) == 2);
  }
  CHECK(uses);
}

TEST_CASE("induced cycles by length") {
  for (int seed = 0; seed < 100; ++seed) {
    const Graph g = random_graph(8, 0.35, 4000 + seed);
    const auto lens = oracle::induced_cycle_lengths(g);
    for (int want = 4; want <= 8; ++want) {
      const auto c = find_induced_cycle(g, [&](int len) { return len == want; });
      const bool exists = std::find(lens.begin(), lens.end(), want) != lens.end();
      CHECK(c.has_value() == exists);
      if (c) {
        CHECK(c->size() == static_cast<std::size_t>(want));
        CHECK(is_induced_hole(g, *c));
      }
    }
  }
}

TEST_CASE("induced subgraph search") {
  const auto m = find_induced_subgraph(make_sun(3), make_extended_sun(5, std::vector<int>{2, 1, 1, 1, 2},
                                                                      ChordPolicy::list({{1, 3}, {1, 4}})));
  REQUIRE(m);
  CHECK(m->size() == 6);
  CHECK_FALSE(find_induced_subgraph(make_cycle(4), make_complete(6)));
  CHECK_FALSE(find_induced_subgraph(make_path(3), make_complete(6)));
  CHECK(find_induced_subgraph(make_path(4), make_cycle(6)));
  for (int seed = 0; seed < 50; ++seed) {
    const Graph host = random_graph(9, 0.4, seed);
    const VertexSet pick((0x1b3u * (seed + 1)) & 0x1ffu);
    const Graph pattern = induced_subgraph(host, pick).graph;
    const auto img = find_induced_subgraph(pattern, host);
    REQUIRE(img);
    for (int i = 0; i < pattern.order(); ++i)
      for (int j = 0; j < pattern.order(); ++j)
        if (i != j) CHECK(pattern.adjacent(i, j) == host.adjacent((*img)[i], (*img)[j]));
  }
}
