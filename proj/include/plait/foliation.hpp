#pragma once

// Singular foliation of the companion torus as an event word: torus minima
// and maxima (one level circle born or dying), saddles (two circles merge or
// one splits), and markers for the knot's own critical points interleaved in
// height order.
//
// Whether a level circle is essential in the torus is not stored state: it
// is derived from the connectivity graph whose nodes are the torus critical
// events and whose edges are the circles. A circle bounds a disk in the
// torus exactly when its edge is a bridge of that graph; the disk side is
// the component whose Euler count (extrema minus saddles) is one. Saddle
// flags in the word are cross-checked against this analysis on validation.

#include <algorithm>
#include <cstddef>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "plait/error.hpp"
#include "plait/satellite.hpp"

namespace plait {

struct TorusEvent {
  enum class Kind : std::uint8_t { t_min, t_max, saddle, k_cup, k_cap };

  Kind kind = Kind::t_min;
  bool essential = false;      // meaningful for saddles only
  std::vector<int> in_curves;  // circles consumed at this event
  std::vector<int> out_curves; // circles produced at this event

  bool is_torus_critical() const {
    return kind == Kind::t_min || kind == Kind::t_max || kind == Kind::saddle;
  }
  bool is_k_critical() const { return kind == Kind::k_cup || kind == Kind::k_cap; }

  friend bool operator==(const TorusEvent&, const TorusEvent&) = default;
};

inline TorusEvent torus_min(int curve) { return {TorusEvent::Kind::t_min, false, {}, {curve}}; }
inline TorusEvent torus_max(int curve) { return {TorusEvent::Kind::t_max, false, {curve}, {}}; }
inline TorusEvent saddle_merge(int a, int b, int out, bool essential) {
  return {TorusEvent::Kind::saddle, essential, {a, b}, {out}};
}
inline TorusEvent saddle_split(int in, int a, int b, bool essential) {
  return {TorusEvent::Kind::saddle, essential, {in}, {a, b}};
}
inline TorusEvent k_cup_mark() { return {TorusEvent::Kind::k_cup, false, {}, {}}; }
inline TorusEvent k_cap_mark() { return {TorusEvent::Kind::k_cap, false, {}, {}}; }

struct CurveLife {
  std::size_t birth = 0;  // event index producing the circle
  std::size_t death = 0;  // event index consuming it
  bool essential = false;
};

struct FoliationAnalysis {
  std::map<int, CurveLife> curves;

  bool curve_essential(int id) const { return curves.at(id).essential; }
};

namespace detail {

struct ReebGraph {
  // node = index of a torus-critical event; edges labeled by curve id
  std::map<std::size_t, std::vector<std::pair<int, std::size_t>>> adj;

  void add_edge(std::size_t a, std::size_t b, int curve) {
    adj[a].push_back({curve, b});
    adj[b].push_back({curve, a});
  }

  // Nodes reachable from `start` without traversing the edge `skip_curve`.
  std::vector<std::size_t> reach_avoiding(std::size_t start, int skip_curve) const {
    std::vector<std::size_t> out{start};
    std::vector<std::size_t> stack{start};
    std::map<std::size_t, bool> seen{{start, true}};
    while (!stack.empty()) {
      std::size_t at = stack.back();
      stack.pop_back();
      auto it = adj.find(at);
      if (it == adj.end()) continue;
      for (auto [curve, to] : it->second) {
        if (curve == skip_curve) continue;
        if (!seen[to]) {
          seen[to] = true;
          out.push_back(to);
          stack.push_back(to);
        }
      }
    }
    return out;
  }
};

}  // namespace detail

// Structural validation + essentiality analysis of a raw event list.
// Throws on malformed words; does NOT check stored saddle flags (validate()
// layers that on top so that the parser can report a precise mismatch).
inline FoliationAnalysis analyze_foliation(const std::vector<TorusEvent>& events) {
  FoliationAnalysis a;
  std::map<int, bool> live;
  int mins = 0, maxes = 0, saddles = 0;

  for (std::size_t i = 0; i < events.size(); ++i) {
    const TorusEvent& e = events[i];
    switch (e.kind) {
      case TorusEvent::Kind::t_min:
        if (e.in_curves.size() != 0 || e.out_curves.size() != 1)
          throw error(errc::bad_foliation, "a torus minimum produces exactly one circle", i);
        ++mins;
        break;
      case TorusEvent::Kind::t_max:
        if (e.in_curves.size() != 1 || e.out_curves.size() != 0)
          throw error(errc::bad_foliation, "a torus maximum consumes exactly one circle", i);
        ++maxes;
        break;
      case TorusEvent::Kind::saddle: {
        const bool merge = e.in_curves.size() == 2 && e.out_curves.size() == 1;
        const bool split = e.in_curves.size() == 1 && e.out_curves.size() == 2;
        if (!merge && !split)
          throw error(errc::bad_foliation, "a saddle merges two circles or splits one", i);
        if (merge && e.in_curves[0] == e.in_curves[1])
          throw error(errc::bad_foliation, "saddle cannot merge a circle with itself", i);
        if (split && e.out_curves[0] == e.out_curves[1])
          throw error(errc::bad_foliation, "saddle must produce two distinct circles", i);
        ++saddles;
        break;
      }
      case TorusEvent::Kind::k_cup:
      case TorusEvent::Kind::k_cap:
        if (!e.in_curves.empty() || !e.out_curves.empty())
          throw error(errc::bad_foliation, "knot critical markers carry no circles", i);
        break;
    }
    for (int c : e.in_curves) {
      auto it = live.find(c);
      if (it == live.end() || !it->second)
        throw error(errc::bad_foliation, "circle " + std::to_string(c) + " is not alive here", i);
      it->second = false;
      a.curves[c].death = i;
    }
    for (int c : e.out_curves) {
      if (c < 0) throw error(errc::bad_foliation, "circle ids must be non-negative", i);
      if (a.curves.count(c))
        throw error(errc::bad_foliation, "circle id " + std::to_string(c) + " reused", i);
      live[c] = true;
      a.curves[c].birth = i;
    }
  }
  for (auto& [c, alive] : live)
    if (alive)
      throw error(errc::bad_foliation, "circle " + std::to_string(c) + " never dies", events.size());
  if (mins + maxes != saddles)
    throw error(errc::bad_foliation,
                "Euler count is off: " + std::to_string(mins) + "+" + std::to_string(maxes) +
                    " extrema vs " + std::to_string(saddles) + " saddles",
                events.size());

  detail::ReebGraph g;
  for (std::size_t i = 0; i < events.size(); ++i)
    if (events[i].is_torus_critical()) g.adj[i];  // ensure isolated nodes exist
  for (auto& [id, life] : a.curves) g.add_edge(life.birth, life.death, id);

  if (!g.adj.empty()) {
    const auto reached = g.reach_avoiding(g.adj.begin()->first, -1);
    if (reached.size() != g.adj.size())
      throw error(errc::bad_foliation, "the torus events do not form a connected surface");
  }

  // A circle is inessential exactly when it separates the torus, i.e. its
  // edge is a bridge.
  for (auto& [id, life] : a.curves) {
    const auto side = g.reach_avoiding(life.birth, id);
    life.essential = std::find(side.begin(), side.end(), life.death) != side.end();
  }
  return a;
}

inline bool derived_saddle_essential(const TorusEvent& e, const FoliationAnalysis& a) {
  const std::vector<int>& wedge = e.in_curves.size() == 2 ? e.in_curves : e.out_curves;
  return a.curve_essential(wedge[0]) && a.curve_essential(wedge[1]);
}

class FoliationWord {
 public:
  static FoliationWord validate(std::vector<TorusEvent> events) {
    const FoliationAnalysis a = analyze_foliation(events);
    for (std::size_t i = 0; i < events.size(); ++i)
      if (events[i].kind == TorusEvent::Kind::saddle &&
          events[i].essential != derived_saddle_essential(events[i], a))
        throw error(errc::bad_foliation, "saddle flag disagrees with the connectivity analysis", i);
    return FoliationWord(std::move(events));
  }

  const std::vector<TorusEvent>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }

  FoliationAnalysis analysis() const { return analyze_foliation(events_); }

  // Relabels circles in birth order; two words describing the same foliation
  // up to id naming normalize to equal event lists.
  FoliationWord normalized() const {
    std::map<int, int> rename;
    int next = 0;
    std::vector<TorusEvent> out = events_;
    for (const TorusEvent& e : out)
      for (int c : e.out_curves) rename[c] = next++;
    for (TorusEvent& e : out) {
      for (int& c : e.in_curves) c = rename.at(c);
      for (int& c : e.out_curves) c = rename.at(c);
    }
    return FoliationWord(std::move(out));
  }

  friend bool operator==(const FoliationWord&, const FoliationWord&) = default;

 private:
  explicit FoliationWord(std::vector<TorusEvent> events) : events_(std::move(events)) {}
  std::vector<TorusEvent> events_;
};

// Canonical tube foliation of the cabled companion. Each companion cup
// grows a tube bottom: circle born, n knot minima inside it, then the
// circle splits into the two meridians of the new tube walls. Caps mirror
// this. Crossings and pattern letters leave the torus word untouched.
inline FoliationWord induced_foliation(const SatelliteSpec& spec) {
  const int n = spec.pattern.index();
  std::vector<TorusEvent> events;
  std::vector<int> wall;  // meridian circle per companion strand position
  int next = 0;
  for (const MorseEvent& e : spec.companion.events()) {
    switch (e.kind) {
      case MorseEvent::Kind::cup: {
        const int bubble = next++;
        events.push_back(torus_min(bubble));
        for (int i = 0; i < n; ++i) events.push_back(k_cup_mark());
        const int left = next++, right = next++;
        events.push_back(saddle_split(bubble, left, right, true));
        wall.insert(wall.begin() + e.pos, {left, right});
        break;
      }
      case MorseEvent::Kind::cap: {
        const int merged = next++;
        events.push_back(saddle_merge(wall[e.pos], wall[e.pos + 1], merged, true));
        wall.erase(wall.begin() + e.pos, wall.begin() + e.pos + 2);
        for (int i = 0; i < n; ++i) events.push_back(k_cap_mark());
        events.push_back(torus_max(merged));
        break;
      }
      case MorseEvent::Kind::cross_pos:
      case MorseEvent::Kind::cross_neg:
        std::swap(wall[e.pos], wall[e.pos + 1]);
        break;
    }
  }
  return FoliationWord::validate(std::move(events));
}

// Indices of the inessential saddles, bottom-up.
inline std::vector<std::size_t> detect_inessential(const FoliationWord& fw) {
  const FoliationAnalysis a = fw.analysis();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fw.size(); ++i) {
    const TorusEvent& e = fw.events()[i];
    if (e.kind == TorusEvent::Kind::saddle && !derived_saddle_essential(e, a)) out.push_back(i);
  }
  return out;
}

namespace detail {

struct Cancellation {
  std::size_t saddle = 0;
  std::size_t extremum = 0;
  int renamed_from = 0;  // circle id to rewrite ...
  int renamed_to = 0;    // ... into this id
};

// A saddle cancels against an extremum when one of its wedge circles runs
// straight to that extremum: the circle's disk side is then the single
// extremum and removing both events is the slide isotopy, leaving every
// other event (in particular the knot's critical sequence) in place.
inline std::vector<Cancellation> cancellation_candidates(const std::vector<TorusEvent>& events,
                                                         const FoliationAnalysis& a) {
  std::vector<Cancellation> out;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const TorusEvent& e = events[i];
    if (e.kind != TorusEvent::Kind::saddle) continue;
    if (e.in_curves.size() == 2) {  // merge: a wedge circle born at a torus minimum
      for (int w = 0; w < 2; ++w) {
        const int x = e.in_curves[w], y = e.in_curves[1 - w];
        const CurveLife& life = a.curves.at(x);
        if (events[life.birth].kind == TorusEvent::Kind::t_min)
          out.push_back({i, life.birth, e.out_curves[0], y});
      }
    } else {  // split: a wedge circle dying at a torus maximum
      for (int w = 0; w < 2; ++w) {
        const int z = e.out_curves[w], other = e.out_curves[1 - w];
        const CurveLife& life = a.curves.at(z);
        if (events[life.death].kind == TorusEvent::Kind::t_max)
          out.push_back({i, life.death, other, e.in_curves[0]});
      }
    }
  }
  return out;
}

}  // namespace detail

// Removes all inessential saddles by repeatedly canceling one against the
// lone extremum in its disk side. The knot markers are never touched, no
// new critical events appear, and each step deletes exactly two events, so
// the procedure terminates and is idempotent.
inline FoliationWord eliminate_inessential_saddles(const FoliationWord& fw) {
  std::vector<TorusEvent> events = fw.events();
  for (;;) {
    const FoliationAnalysis a = analyze_foliation(events);
    bool any_inessential = false;
    for (const TorusEvent& e : events)
      if (e.kind == TorusEvent::Kind::saddle && !derived_saddle_essential(e, a)) {
        any_inessential = true;
        break;
      }
    if (!any_inessential) break;

    const auto candidates = detail::cancellation_candidates(events, a);
    if (candidates.empty())
      throw error(errc::non_cancelable, "no inessential saddle cancels against a lone extremum");
    const detail::Cancellation c = candidates.front();

    std::vector<TorusEvent> next;
    next.reserve(events.size() - 2);
    for (std::size_t i = 0; i < events.size(); ++i) {
      if (i == c.saddle || i == c.extremum) continue;
      TorusEvent e = events[i];
      for (int& id : e.in_curves)
        if (id == c.renamed_from) id = c.renamed_to;
      for (int& id : e.out_curves)
        if (id == c.renamed_from) id = c.renamed_to;
      next.push_back(std::move(e));
    }
    events = std::move(next);
  }
  return FoliationWord::validate(std::move(events));
}

// With no inessential saddles left, every circle that bounds a disk in the
// torus must cap off a single extremum; this re-derives that fact from the
// connectivity graph as a consistency audit.
inline bool disk_extremum_audit(const FoliationWord& fw) {
  if (!detect_inessential(fw).empty())
    throw error(errc::inessential_saddles_present, "eliminate inessential saddles before auditing");
  const FoliationAnalysis a = fw.analysis();
  detail::ReebGraph g;
  for (std::size_t i = 0; i < fw.size(); ++i)
    if (fw.events()[i].is_torus_critical()) g.adj[i];
  for (auto& [id, life] : a.curves) g.add_edge(life.birth, life.death, id);

  for (auto& [id, life] : a.curves) {
    if (life.essential) continue;
    for (std::size_t anchor : {life.birth, life.death}) {
      const auto side = g.reach_avoiding(anchor, id);
      int extrema = 0, saddles = 0;
      for (std::size_t node : side) {
        const TorusEvent& e = fw.events()[node];
        if (e.kind == TorusEvent::Kind::saddle) ++saddles;
        else ++extrema;
      }
      if (extrema - saddles == 1 && !(extrema == 1 && saddles == 0)) return false;
    }
  }
  return true;
}

// Knot critical markers in order; elimination must preserve this sequence
// exactly.
inline std::vector<TorusEvent::Kind> k_critical_sequence(const FoliationWord& fw) {
  std::vector<TorusEvent::Kind> out;
  for (const TorusEvent& e : fw.events())
    if (e.is_k_critical()) out.push_back(e.kind);
  return out;
}

// ---------------------------------------------------------------------------
// .fol format: `tmin <c>`, `tmax <c>`, `sad <e|i> <in...> -> <out...>`,
// `kcup`, `kcap`; `#` comments; bit-exact round trip.

inline std::string to_fol_text(const FoliationWord& fw) {
  std::string out;
  for (const TorusEvent& e : fw.events()) {
    switch (e.kind) {
      case TorusEvent::Kind::t_min:
        out += "tmin " + std::to_string(e.out_curves[0]);
        break;
      case TorusEvent::Kind::t_max:
        out += "tmax " + std::to_string(e.in_curves[0]);
        break;
      case TorusEvent::Kind::saddle: {
        out += e.essential ? "sad e" : "sad i";
        for (int c : e.in_curves) out += " " + std::to_string(c);
        out += " ->";
        for (int c : e.out_curves) out += " " + std::to_string(c);
        break;
      }
      case TorusEvent::Kind::k_cup: out += "kcup"; break;
      case TorusEvent::Kind::k_cap: out += "kcap"; break;
    }
    out += '\n';
  }
  return out;
}

inline FoliationWord parse_fol(std::istream& in) {
  std::vector<TorusEvent> events;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<std::string> tok = detail::tokens(detail::strip_comment(line));
    if (tok.empty()) continue;
    if (tok[0] == "tmin" || tok[0] == "tmax") {
      if (tok.size() != 2) throw error(errc::parse_error, "expected one circle id", line_no);
      const int c = detail::parse_int(tok[1], line_no, "a circle id");
      events.push_back(tok[0] == "tmin" ? torus_min(c) : torus_max(c));
    } else if (tok[0] == "sad") {
      if (tok.size() < 5 || (tok[1] != "e" && tok[1] != "i"))
        throw error(errc::parse_error, "expected 'sad <e|i> <in...> -> <out...>'", line_no);
      TorusEvent e{TorusEvent::Kind::saddle, tok[1] == "e", {}, {}};
      std::size_t at = 2;
      for (; at < tok.size() && tok[at] != "->"; ++at)
        e.in_curves.push_back(detail::parse_int(tok[at], line_no, "a circle id"));
      if (at == tok.size()) throw error(errc::parse_error, "missing '->' in saddle line", line_no);
      for (++at; at < tok.size(); ++at)
        e.out_curves.push_back(detail::parse_int(tok[at], line_no, "a circle id"));
      events.push_back(std::move(e));
    } else if (tok[0] == "kcup" || tok[0] == "kcap") {
      if (tok.size() != 1) throw error(errc::parse_error, "knot markers take no arguments", line_no);
      events.push_back(tok[0] == "kcup" ? k_cup_mark() : k_cap_mark());
    } else {
      throw error(errc::parse_error, "unknown foliation event '" + tok[0] + "'", line_no);
    }
  }
  return FoliationWord::validate(std::move(events));
}

inline FoliationWord parse_fol(const std::string& text) {
  std::istringstream in(text);
  return parse_fol(in);
}

}  // namespace plait
