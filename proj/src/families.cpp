#include "sperfect/families.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

namespace sperfect {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw FamilyError(what);
}

void add_inner(std::vector<Edge>& edges, int k, const ChordPolicy& inner) {
  for (Vertex i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  switch (inner.kind) {
    case ChordPolicy::Kind::none:
      break;
    case ChordPolicy::Kind::fan:
      for (Vertex j = 2; j + 1 < k; ++j) edges.emplace_back(0, j);
      break;
    case ChordPolicy::Kind::complete:
      for (Vertex i = 0; i < k; ++i) {
        for (Vertex j = i + 1; j < k; ++j) edges.emplace_back(i, j);
      }
      break;
    case ChordPolicy::Kind::explicit_list:
      for (const auto& [a, b] : inner.chords) {
        require(a >= 0 && b >= 0 && a < k && b < k && a != b, "chord (" + std::to_string(a) + "," +
                                                                  std::to_string(b) + ") is not a pair of distinct inner positions");
        edges.emplace_back(a, b);
      }
      break;
  }
}

int parse_int(std::string_view tok) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  require(ec == std::errc{} && ptr == tok.data() + tok.size(), "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const std::size_t at = s.find(sep);
    out.push_back(s.substr(0, at));
    if (at == std::string_view::npos) break;
    s.remove_prefix(at + 1);
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  for (auto tok : split(s, ',')) out.push_back(parse_int(tok));
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

}  // namespace

Graph make_path(int k) {
  require(k >= 1, "path needs k >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(k, edges);
}

Graph make_cycle(int k) {
  require(k >= 3, "cycle needs k >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return Graph::from_edges(k, edges);
}

Graph make_complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(n, edges);
}

Graph make_star(int n) {
  require(n >= 1, "star needs n >= 1 leaves");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= n; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(n + 1, edges);
}

SunLayout extended_sun_layout(int k, std::span<const int> sizes) {
  require(k >= 3, "sun needs k >= 3");
  require(static_cast<int>(sizes.size()) == k, "need exactly k group sizes");
  SunLayout out;
  for (Vertex i = 0; i < k; ++i) out.inner.push_back(i);
  Vertex next = k;
  for (int size : sizes) {
    require(size >= 1, "every attached group needs at least one vertex");
    std::vector<Vertex> group;
    for (int j = 0; j < size; ++j) group.push_back(next++);
    out.groups.push_back(std::move(group));
  }
  return out;
}

Graph make_extended_sun(int k, std::span<const int> sizes, const ChordPolicy& inner) {
  const SunLayout layout = extended_sun_layout(k, sizes);
  const int n = layout.groups.empty() ? k : layout.groups.back().back() + 1;
  require(n <= kMaxVertices, "extended sun exceeds the vertex ceiling");
  std::vector<Edge> edges;
  add_inner(edges, k, inner);
  for (int i = 0; i < k; ++i) {
    const auto& group = layout.groups[i];
    for (std::size_t a = 0; a < group.size(); ++a) {
      edges.emplace_back(group[a], i);
      edges.emplace_back(group[a], (i + 1) % k);
      for (std::size_t b = a + 1; b < group.size(); ++b) edges.emplace_back(group[a], group[b]);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph make_sun(int k, const ChordPolicy& inner) {
  require(k >= 3, "sun needs k >= 3");
  const std::vector<int> ones(static_cast<std::size_t>(k), 1);
  return make_extended_sun(k, ones, inner);
}

Graph make_super_sun(int k, std::span<const int> spoke_sizes, const ChordPolicy& inner) {
  require(k >= 3, "super sun needs k >= 3");
  require(static_cast<int>(spoke_sizes.size()) == k, "need exactly k spoke sizes");
  int n = k;
  for (int s : spoke_sizes) {
    require(s >= 4 && s % 3 == 1, "spoke size " + std::to_string(s) + " is not of the form 3t+1 with t >= 1");
    n += s;
  }
  require(n <= kMaxVertices, "super sun exceeds the vertex ceiling");
  std::vector<Edge> edges;
  add_inner(edges, k, inner);
  Vertex next = k;
  for (int i = 0; i < k; ++i) {
    const Vertex first = next;
    for (int j = 0; j + 1 < spoke_sizes[i]; ++j) edges.emplace_back(next + j, next + j + 1);
    next += spoke_sizes[i];
    edges.emplace_back(first, i);
    edges.emplace_back(next - 1, (i + 1) % k);
  }
  return Graph::from_edges(n, edges);
}

Graph make_special_path(int path_len, std::span<const int> triangle_edges) {
  require(path_len >= 2, "special path needs at least 2 path vertices");
  std::vector<int> picks(triangle_edges.begin(), triangle_edges.end());
  std::sort(picks.begin(), picks.end());
  require(std::adjacent_find(picks.begin(), picks.end()) == picks.end(), "triangle edge indices must be distinct");
  for (int e : picks) require(e >= 0 && e < path_len - 1, "triangle edge index " + std::to_string(e) + " out of range");
  const int n = path_len + static_cast<int>(picks.size());
  require(n <= kMaxVertices, "special path exceeds the vertex ceiling");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < path_len; ++i) edges.emplace_back(i, i + 1);
  Vertex apex = path_len;
  for (int e : picks) {
    edges.emplace_back(apex, e);
    edges.emplace_back(apex, e + 1);
    ++apex;
  }
  return Graph::from_edges(n, edges);
}

std::string_view family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::complete: return "complete";
    case FamilyKind::star: return "star";
    case FamilyKind::sun: return "sun";
    case FamilyKind::extended_sun: return "extended_sun";
    case FamilyKind::super_sun: return "super_sun";
    case FamilyKind::special_path: return "special_path";
  }
  return "?";
}

FamilyKind parse_family_kind(std::string_view name) {
  for (FamilyKind k : {FamilyKind::path, FamilyKind::cycle, FamilyKind::complete, FamilyKind::star, FamilyKind::sun,
                       FamilyKind::extended_sun, FamilyKind::super_sun, FamilyKind::special_path}) {
    if (family_name(k) == name) return k;
  }
  // Accept the hyphenated spellings used on the command line.
  if (name == "extended-sun") return FamilyKind::extended_sun;
  if (name == "super-sun") return FamilyKind::super_sun;
  if (name == "special-path") return FamilyKind::special_path;
  throw FamilyError("unknown family '" + std::string(name) + "'");
}

FamilySpec parse_family_spec(std::string_view text) {
  std::map<std::string, std::string, std::less<>> kv;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    const std::size_t eq = tok.find('=');
    require(eq != std::string::npos && eq > 0, "expected key=value, got '" + tok + "'");
    const std::string key = tok.substr(0, eq);
    require(!kv.contains(key), "duplicate key '" + key + "'");
    kv[key] = tok.substr(eq + 1);
  }
  require(kv.contains("family"), "missing family=");

  FamilySpec spec;
  spec.kind = parse_family_kind(kv.at("family"));
  kv.erase("family");
  auto take = [&](const char* key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    std::string v = it->second;
    kv.erase(it);
    return v;
  };

  if (auto k = take("k")) spec.k = parse_int(*k);
  if (auto n = take("n")) spec.k = parse_int(*n);
  if (auto len = take("len")) spec.k = parse_int(*len);
  if (auto sizes = take("sizes")) spec.sizes = parse_int_list(*sizes);
  if (auto spokes = take("spokes")) spec.sizes = parse_int_list(*spokes);
  if (auto tri = take("triangles")) spec.triangles = *tri == "" ? std::vector<int>{} : parse_int_list(*tri);
  if (auto inner = take("inner")) {
    if (*inner == "none") spec.inner = ChordPolicy::none();
    else if (*inner == "fan") spec.inner = ChordPolicy::fan();
    else if (*inner == "complete") spec.inner = ChordPolicy::complete();
    else throw FamilyError("unknown chord policy '" + *inner + "'");
  }
  if (auto chords = take("chords")) {
    require(spec.inner.kind == ChordPolicy::Kind::none, "chords= conflicts with inner=");
    std::vector<Edge> list;
    if (!chords->empty()) {
      for (auto pair : split(*chords, ',')) {
        const auto ends = split(pair, '-');
        require(ends.size() == 2, "chord must look like a-b");
        list.emplace_back(parse_int(ends[0]), parse_int(ends[1]));
      }
    }
    spec.inner = ChordPolicy::list(std::move(list));
  }
  require(kv.empty(), "unknown key '" + (kv.empty() ? std::string() : kv.begin()->first) + "'");

  if ((spec.kind == FamilyKind::extended_sun || spec.kind == FamilyKind::super_sun) && spec.k == 0) {
    spec.k = static_cast<int>(spec.sizes.size());
  }
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::ostringstream out;
  out << "family=" << family_name(spec.kind);
  switch (spec.kind) {
    case FamilyKind::complete:
    case FamilyKind::star:
      out << " n=" << spec.k;
      break;
    case FamilyKind::special_path:
      out << " len=" << spec.k << " triangles=" << join(spec.triangles);
      break;
    default:
      out << " k=" << spec.k;
  }
  if (spec.kind == FamilyKind::extended_sun) out << " sizes=" << join(spec.sizes);
  if (spec.kind == FamilyKind::super_sun) out << " spokes=" << join(spec.sizes);
  if (spec.kind == FamilyKind::sun || spec.kind == FamilyKind::extended_sun || spec.kind == FamilyKind::super_sun) {
    switch (spec.inner.kind) {
      case ChordPolicy::Kind::none: out << " inner=none"; break;
      case ChordPolicy::Kind::fan: out << " inner=fan"; break;
      case ChordPolicy::Kind::complete: out << " inner=complete"; break;
      case ChordPolicy::Kind::explicit_list: {
        out << " chords=";
        for (std::size_t i = 0; i < spec.inner.chords.size(); ++i) {
          out << (i ? "," : "") << spec.inner.chords[i].first << '-' << spec.inner.chords[i].second;
        }
        break;
      }
    }
  }
  return out.str();
}

Graph make_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::path: return make_path(spec.k);
    case FamilyKind::cycle: return make_cycle(spec.k);
    case FamilyKind::complete: return make_complete(spec.k);
    case FamilyKind::star: return make_star(spec.k);
    case FamilyKind::sun: return make_sun(spec.k, spec.inner);
    case FamilyKind::extended_sun: return make_extended_sun(spec.k, spec.sizes, spec.inner);
    case FamilyKind::super_sun: return make_super_sun(spec.k, spec.sizes, spec.inner);
    case FamilyKind::special_path: return make_special_path(spec.k, spec.triangles);
  }
  throw FamilyError("unknown family");
}

}  // namespace sperfect
