#pragma once

// Level spheres and their essential connectivity graphs. A level sphere
// records the circles in which the companion torus meets a regular level,
// the regions obtained by cutting along the essential circles only, which
// side of the torus each region lies on, and how many knot points each
// region carries. The graph with one vertex per region and one edge per
// essential circle is a tree, bipartite with respect to the sides; its
// degree-one vertices give the trunk of the level.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "plait/error.hpp"
#include "plait/foliation.hpp"
#include "plait/morse.hpp"
#include "plait/satellite.hpp"

namespace plait {

enum class Side : std::uint8_t { inside, outside };  // relative to the companion solid torus

inline char side_label(Side s) { return s == Side::inside ? 'A' : 'B'; }

struct RegionBubble {
  int curve = 0;        // inessential circle sitting in the region
  bool caps_min = true; // true: the disk in the torus holds a minimum; false: a maximum

  friend bool operator==(const RegionBubble&, const RegionBubble&) = default;
};

struct SphereRegion {
  Side side = Side::outside;
  int k_points = 0;
  int signed_points = 0;  // algebraic count of knot points, by strand direction
  std::vector<RegionBubble> bubbles;

  friend bool operator==(const SphereRegion&, const SphereRegion&) = default;
};

struct SphereEdge {
  int curve = 0;  // essential circle separating the two regions
  int region_a = 0;
  int region_b = 0;

  friend bool operator==(const SphereEdge&, const SphereEdge&) = default;
};

class LevelSphere {
 public:
  static LevelSphere validate(std::vector<SphereRegion> regions, std::vector<SphereEdge> edges) {
    if (regions.empty()) throw error(errc::bad_level_sphere, "a level sphere has at least one region");
    std::set<int> curve_ids;
    for (const SphereEdge& e : edges) {
      const int m = static_cast<int>(regions.size());
      if (e.region_a < 0 || e.region_a >= m || e.region_b < 0 || e.region_b >= m)
        throw error(errc::bad_level_sphere, "edge references a missing region");
      if (regions[e.region_a].side == regions[e.region_b].side)
        throw error(errc::bad_level_sphere, "sides must alternate across an essential circle");
      if (!curve_ids.insert(e.curve).second)
        throw error(errc::bad_level_sphere, "circle id used twice");
    }
    int total = 0;
    for (const SphereRegion& r : regions) {
      if (r.k_points < 0) throw error(errc::bad_level_sphere, "negative point count");
      if (std::abs(r.signed_points) > r.k_points || (r.signed_points - r.k_points) % 2 != 0)
        throw error(errc::bad_level_sphere, "signed count incompatible with point count");
      for (const RegionBubble& b : r.bubbles)
        if (!curve_ids.insert(b.curve).second)
          throw error(errc::bad_level_sphere, "circle id used twice");
      total += r.k_points;
    }
    if (total % 2 != 0) throw error(errc::bad_level_sphere, "total point count must be even");
    return LevelSphere(std::move(regions), std::move(edges));
  }

  const std::vector<SphereRegion>& regions() const { return regions_; }
  const std::vector<SphereEdge>& edges() const { return edges_; }

  int total_points() const {
    int t = 0;
    for (const SphereRegion& r : regions_) t += r.k_points;
    return t;
  }

  int signed_balance() const {
    int t = 0;
    for (const SphereRegion& r : regions_) t += r.signed_points;
    return t;
  }

  friend bool operator==(const LevelSphere&, const LevelSphere&) = default;

 private:
  LevelSphere(std::vector<SphereRegion> regions, std::vector<SphereEdge> edges)
      : regions_(std::move(regions)), edges_(std::move(edges)) {}
  std::vector<SphereRegion> regions_;
  std::vector<SphereEdge> edges_;
};

struct ConnectivityGraph {
  std::vector<Side> vertex_side;
  std::vector<std::pair<int, int>> edges;

  std::vector<int> degrees() const {
    std::vector<int> d(vertex_side.size(), 0);
    for (auto [a, b] : edges) {
      ++d[a];
      ++d[b];
    }
    return d;
  }
};

inline ConnectivityGraph build_graph(const LevelSphere& s) {
  ConnectivityGraph g;
  for (const SphereRegion& r : s.regions()) g.vertex_side.push_back(r.side);
  detail::UnionFind uf(static_cast<int>(s.regions().size()));
  for (const SphereEdge& e : s.edges()) {
    if (e.region_a == e.region_b)
      throw error(errc::not_a_tree, "an essential circle must separate two regions");
    if (uf.find(e.region_a) == uf.find(e.region_b))
      throw error(errc::not_a_tree, "essential circles close a cycle");
    uf.unite(e.region_a, e.region_b);
    g.edges.emplace_back(e.region_a, e.region_b);
  }
  if (s.edges().size() + 1 != s.regions().size())
    throw error(errc::not_a_tree, "regions are not connected by the essential circles");
  return g;
}

// Number of degree-one vertices; a single-vertex graph has trunk 0.
inline int trunk_r(const ConnectivityGraph& g) {
  int t = 0;
  for (int d : g.degrees())
    if (d == 1) ++t;
  return t;
}

inline bool bipartite_by_side(const ConnectivityGraph& g) {
  for (auto [a, b] : g.edges)
    if (g.vertex_side[a] == g.vertex_side[b]) return false;
  return true;
}

// Every endpoint region lies inside the solid torus.
inline bool endpoints_inside(const ConnectivityGraph& g) {
  const std::vector<int> d = g.degrees();
  for (std::size_t v = 0; v < d.size(); ++v)
    if (d[v] == 1 && g.vertex_side[v] != Side::inside) return false;
  return true;
}

// Floor on |K ∩ sphere| given the trunk of the level and the winding number:
// n*m for even m, n*(m+1) for odd m.
inline long long winding_trunk_bound(int trunk_of_level, int winding) {
  const long long m = trunk_of_level, n = winding;
  return m % 2 == 0 ? n * m : n * (m + 1);
}

inline bool audit_level(const LevelSphere& s, int winding) {
  const ConnectivityGraph g = build_graph(s);
  const std::vector<int> d = g.degrees();
  for (std::size_t v = 0; v < d.size(); ++v)
    if (d[v] == 1 && s.regions()[v].k_points < winding) return false;
  return s.total_points() >= winding_trunk_bound(trunk_r(g), winding);
}

// First level whose graph has at least three endpoints. Over a knotted
// companion some level must branch; a sweep without one signals an
// unknotted tube.
inline std::size_t branching_witness(const std::vector<LevelSphere>& levels) {
  for (std::size_t i = 0; i < levels.size(); ++i)
    if (trunk_r(build_graph(levels[i])) >= 3) return i;
  throw error(errc::no_witness, "no level sphere meets the torus in a branching pattern");
}

// ---------------------------------------------------------------------------
// Sweep: one level sphere per regular interval of the canonical tube
// foliation, including the empty spheres below and above everything.

namespace detail {

struct TubeWall {
  int curve = 0;
  int sign = 0;  // direction of the companion strand this wall surrounds
};

struct SweepEmitter {
  int winding = 0;
  std::vector<LevelSphere> out;

  void emit(const std::vector<TubeWall>& walls) { emit(walls, -1, true, 0); }

  void emit(const std::vector<TubeWall>& walls, int bubble_curve, bool bubble_is_min, int bubble_points) {
    std::vector<SphereRegion> regions;
    SphereRegion ambient{Side::outside, 0, 0, {}};
    if (bubble_curve >= 0) {
      ambient.k_points = bubble_points;
      ambient.bubbles.push_back({bubble_curve, bubble_is_min});
    }
    regions.push_back(std::move(ambient));
    std::vector<SphereEdge> edges;
    for (const TubeWall& w : walls) {
      edges.push_back({w.curve, 0, static_cast<int>(regions.size())});
      regions.push_back({Side::inside, winding, winding * w.sign, {}});
    }
    out.push_back(LevelSphere::validate(std::move(regions), std::move(edges)));
  }
};

}  // namespace detail

// The sweep replays the companion word in lockstep with the canonical
// foliation; `fw` must equal that foliation up to circle naming (fresh
// output of induced_foliation, or a fixture after saddle elimination).
inline std::vector<LevelSphere> sweep_levels(const FoliationWord& fw, const SatelliteSpec& spec) {
  const FoliationWord canonical = induced_foliation(spec);
  if (!(fw.normalized() == canonical.normalized()))
    throw error(errc::bad_foliation, "sweep requires the canonical foliation of this satellite");

  const int n = spec.pattern.index();
  const WordTrace trace = trace_word(spec.companion.events());
  detail::SweepEmitter sweep{n, {}};
  std::vector<detail::TubeWall> walls;
  int next = 0;

  sweep.emit(walls);  // below every event
  for (std::size_t ci = 0; ci < spec.companion.events().size(); ++ci) {
    const MorseEvent& e = spec.companion.events()[ci];
    switch (e.kind) {
      case MorseEvent::Kind::cup: {
        const int bubble = next++;
        for (int i = 0; i <= n; ++i) sweep.emit(walls, bubble, true, 2 * i);
        const std::vector<int>& row = trace.strands[ci + 1];
        const int left = next++, right = next++;
        walls.insert(walls.begin() + e.pos,
                     {{left, trace.arc_sign[row[e.pos]]}, {right, trace.arc_sign[row[e.pos + 1]]}});
        sweep.emit(walls);
        break;
      }
      case MorseEvent::Kind::cap: {
        const int merged = next++;
        walls.erase(walls.begin() + e.pos, walls.begin() + e.pos + 2);
        for (int i = 0; i <= n; ++i) sweep.emit(walls, merged, false, 2 * (n - i));
        sweep.emit(walls);
        break;
      }
      case MorseEvent::Kind::cross_pos:
      case MorseEvent::Kind::cross_neg:
        std::swap(walls[e.pos], walls[e.pos + 1]);
        break;
    }
  }
  return sweep.out;
}

// ---------------------------------------------------------------------------
// dot export, one graph per level.

inline std::string to_dot(const ConnectivityGraph& g, const LevelSphere& s, const std::string& name) {
  std::string out = "graph " + name + " {\n";
  for (std::size_t v = 0; v < g.vertex_side.size(); ++v)
    out += "  r" + std::to_string(v) + " [label=\"" + side_label(g.vertex_side[v]) +
           " k=" + std::to_string(s.regions()[v].k_points) + "\"];\n";
  for (auto [a, b] : g.edges)
    out += "  r" + std::to_string(a) + " -- r" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

// ---------------------------------------------------------------------------
// .lvl format for sphere fixtures and dumps:
//   region <A|B> <k_points> <signed>
//   edge <curve> <region-i> <region-j>
//   bubble <curve> <region-i> <min|max>
// Regions are numbered in order of appearance; bit-exact round trip.

inline std::string to_lvl_text(const LevelSphere& s) {
  std::string out;
  for (const SphereRegion& r : s.regions())
    out += std::string("region ") + side_label(r.side) + " " + std::to_string(r.k_points) + " " +
           std::to_string(r.signed_points) + "\n";
  for (const SphereEdge& e : s.edges())
    out += "edge " + std::to_string(e.curve) + " " + std::to_string(e.region_a) + " " +
           std::to_string(e.region_b) + "\n";
  for (std::size_t i = 0; i < s.regions().size(); ++i)
    for (const RegionBubble& b : s.regions()[i].bubbles)
      out += "bubble " + std::to_string(b.curve) + " " + std::to_string(i) + " " +
             (b.caps_min ? "min" : "max") + "\n";
  return out;
}

inline LevelSphere parse_lvl(std::istream& in) {
  std::vector<SphereRegion> regions;
  std::vector<SphereEdge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<std::string> tok = detail::tokens(detail::strip_comment(line));
    if (tok.empty()) continue;
    if (tok[0] == "region") {
      if (tok.size() != 4 || (tok[1] != "A" && tok[1] != "B"))
        throw error(errc::parse_error, "expected 'region <A|B> <k> <signed>'", line_no);
      regions.push_back({tok[1] == "A" ? Side::inside : Side::outside,
                         detail::parse_int(tok[2], line_no, "a point count"),
                         detail::parse_int(tok[3], line_no, "a signed count"),
                         {}});
    } else if (tok[0] == "edge") {
      if (tok.size() != 4) throw error(errc::parse_error, "expected 'edge <curve> <i> <j>'", line_no);
      edges.push_back({detail::parse_int(tok[1], line_no, "a circle id"),
                       detail::parse_int(tok[2], line_no, "a region"),
                       detail::parse_int(tok[3], line_no, "a region")});
    } else if (tok[0] == "bubble") {
      if (tok.size() != 4 || (tok[3] != "min" && tok[3] != "max"))
        throw error(errc::parse_error, "expected 'bubble <curve> <region> <min|max>'", line_no);
      const int at = detail::parse_int(tok[2], line_no, "a region");
      if (at < 0 || at >= static_cast<int>(regions.size()))
        throw error(errc::parse_error, "bubble placed in a missing region", line_no);
      regions[at].bubbles.push_back({detail::parse_int(tok[1], line_no, "a circle id"), tok[3] == "min"});
    } else {
      throw error(errc::parse_error, "unknown line '" + tok[0] + "'", line_no);
    }
  }
  return LevelSphere::validate(std::move(regions), std::move(edges));
}

inline LevelSphere parse_lvl(const std::string& text) {
  std::istringstream in(text);
  return parse_lvl(in);
}

}  // namespace plait
