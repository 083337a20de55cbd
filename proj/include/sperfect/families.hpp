#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sperfect/graph.hpp"

namespace sperfect {

/// Invalid family parameters.
class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Which chords the inner Hamiltonian cycle v_1..v_k carries. Chords are
/// given as 0-based inner positions.
struct ChordPolicy {
  enum class Kind { none, fan, complete, explicit_list };

  Kind kind = Kind::none;
  std::vector<Edge> chords;

  static ChordPolicy none() { return {}; }
  /// Every chord from v_1.
  static ChordPolicy fan() { return {Kind::fan, {}}; }
  static ChordPolicy complete() { return {Kind::complete, {}}; }
  static ChordPolicy list(std::vector<Edge> chords) { return {Kind::explicit_list, std::move(chords)}; }
};

// Canonical numbering, frozen for golden certificates:
//   path / cycle: 0..k-1 in order; star: center 0, leaves 1..n.
//   suns: inner v_i at i-1 (0..k-1), then the attached groups A_1, A_2, ...
//     in order, each group's vertices consecutive.
//   super sun: inner 0..k-1, then spoke paths P_1, P_2, ... each listed from
//     the end attached to v_i to the end attached to v_{i+1}.
//   special path: path 0..len-1, then one apex per selected edge in
//     ascending edge order (edge e joins e and e+1).

Graph make_path(int k);
Graph make_cycle(int k);
Graph make_complete(int n);
/// K_{1,n}.
Graph make_star(int n);

/// k-sun: inner cycle with chords per `inner`, outer u_i adjacent to exactly
/// v_i and v_{i+1}.
Graph make_sun(int k, const ChordPolicy& inner = ChordPolicy::none());
/// k-extended sun: group A_i is a clique of sizes[i] vertices joined to
/// v_i and v_{i+1}.
Graph make_extended_sun(int k, std::span<const int> sizes, const ChordPolicy& inner = ChordPolicy::none());
/// k-super sun: spoke i is an induced path of spoke_sizes[i] vertices, each
/// of the form 3t + 1 with t >= 1.
Graph make_super_sun(int k, std::span<const int> spoke_sizes, const ChordPolicy& inner = ChordPolicy::none());
/// Path on path_len vertices; every listed edge index gets a fresh apex.
Graph make_special_path(int path_len, std::span<const int> triangle_edges);

/// Positions of the inner cycle and attached groups in a generated sun.
struct SunLayout {
  std::vector<Vertex> inner;
  std::vector<std::vector<Vertex>> groups;
};

SunLayout extended_sun_layout(int k, std::span<const int> sizes);

enum class FamilyKind { path, cycle, complete, star, sun, extended_sun, super_sun, special_path };

/// Text form: "family=sun k=5 inner=fan", with keys
///   k (path, cycle, sun, extended_sun, super_sun), n (complete, star),
///   sizes=2,1,1 (extended_sun), spokes=4,4,4 (super_sun),
///   inner=none|fan|complete, chords=0-2,1-3 (explicit chords),
///   len=5 triangles=1,3 (special_path).
struct FamilySpec {
  FamilyKind kind = FamilyKind::path;
  int k = 0;
  std::vector<int> sizes;
  ChordPolicy inner;
  std::vector<int> triangles;
};

FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);
Graph make_family(const FamilySpec& spec);

std::string_view family_name(FamilyKind kind);
FamilyKind parse_family_kind(std::string_view name);

}  // namespace sperfect
