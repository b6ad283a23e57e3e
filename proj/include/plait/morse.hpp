#pragma once

// Morse presentations of knots as bottom-to-top event words.
//
// A word is a sequence of cups (minima), caps (maxima) and crossings acting
// on a horizontal row of strands. Cups and caps are the critical points of
// the height function restricted to the knot; crossings are regular. The
// width/bridge/trunk invariants of a presentation are all read off the
// strand-count profile between consecutive critical events.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "plait/error.hpp"

namespace plait {

struct MorseEvent {
  enum class Kind : std::uint8_t { cup, cap, cross_pos, cross_neg };

  Kind kind = Kind::cup;
  int pos = 0;  // 0-based strand position the event acts at

  bool is_critical() const { return kind == Kind::cup || kind == Kind::cap; }
  bool is_crossing() const { return kind == Kind::cross_pos || kind == Kind::cross_neg; }

  friend bool operator==(const MorseEvent&, const MorseEvent&) = default;
};

inline MorseEvent cup(int p) { return {MorseEvent::Kind::cup, p}; }
inline MorseEvent cap(int p) { return {MorseEvent::Kind::cap, p}; }
inline MorseEvent cross_pos(int p) { return {MorseEvent::Kind::cross_pos, p}; }
inline MorseEvent cross_neg(int p) { return {MorseEvent::Kind::cross_neg, p}; }

// Arc-level structure of a word. An arc is a maximal monotone strand piece:
// born at a cup (or rather, two arcs are born joined), killed at a cap.
// Crossings transpose arc positions but the arc keeps its identity, so the
// pairing induced by cups and caps determines the components of the curve.
struct WordTrace {
  int arc_count = 0;
  int component_count = 0;
  // strands[i] = arc ids on the row just before event i; strands[m] = final row.
  std::vector<std::vector<int>> strands;
  std::vector<std::pair<int, int>> cup_pairs;
  std::vector<std::pair<int, int>> cap_pairs;
  // +1 if the knot runs upward through the arc, -1 downward. Filled only for
  // single-component words (orientation is a 2-coloring of the arc cycle).
  std::vector<int> arc_sign;
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

// Structural sweep of a raw event list. Throws plait::error on the first
// violation; the error carries the offending event index.
inline WordTrace trace_word(const std::vector<MorseEvent>& events) {
  if (events.empty()) throw error(errc::empty_word, "a presentation needs at least one event", 0);

  WordTrace t;
  std::vector<int> row;
  int next_arc = 0;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const MorseEvent& e = events[i];
    const int k = static_cast<int>(row.size());
    t.strands.push_back(row);
    switch (e.kind) {
      case MorseEvent::Kind::cup: {
        if (e.pos < 0 || e.pos > k)
          throw error(errc::invalid_position, "cup position out of range", i);
        const int a = next_arc++, b = next_arc++;
        row.insert(row.begin() + e.pos, {a, b});
        t.cup_pairs.emplace_back(a, b);
        break;
      }
      case MorseEvent::Kind::cap: {
        if (k < 2) throw error(errc::negative_strands, "cap with fewer than two strands", i);
        if (e.pos < 0 || e.pos > k - 2)
          throw error(errc::invalid_position, "cap position out of range", i);
        t.cap_pairs.emplace_back(row[e.pos], row[e.pos + 1]);
        row.erase(row.begin() + e.pos, row.begin() + e.pos + 2);
        break;
      }
      case MorseEvent::Kind::cross_pos:
      case MorseEvent::Kind::cross_neg: {
        if (k < 2) throw error(errc::negative_strands, "crossing with fewer than two strands", i);
        if (e.pos < 0 || e.pos > k - 2)
          throw error(errc::invalid_position, "crossing position out of range", i);
        std::swap(row[e.pos], row[e.pos + 1]);
        break;
      }
    }
  }
  t.strands.push_back(row);
  if (!row.empty())
    throw error(errc::non_zero_end, "word ends with " + std::to_string(row.size()) + " open strands",
                events.size() - 1);

  t.arc_count = next_arc;

  // Component count = cycles of the pairing graph (each arc sits in exactly
  // one cup pair and one cap pair).
  detail::UnionFind uf(next_arc);
  for (auto [a, b] : t.cup_pairs) uf.unite(a, b);
  for (auto [a, b] : t.cap_pairs) uf.unite(a, b);
  std::vector<char> seen(next_arc, 0);
  for (int a = 0; a < next_arc; ++a) {
    int r = uf.find(a);
    if (!seen[r]) {
      seen[r] = 1;
      ++t.component_count;
    }
  }

  if (t.component_count == 1) {
    // Orient by alternating around the single arc cycle: the knot enters a
    // critical point along one arc of a pair and leaves along the other.
    t.arc_sign.assign(next_arc, 0);
    std::vector<std::vector<int>> adj(next_arc);
    for (auto [a, b] : t.cup_pairs) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    for (auto [a, b] : t.cap_pairs) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::vector<int> stack{0};
    t.arc_sign[0] = +1;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b : adj[a])
        if (t.arc_sign[b] == 0) {
          t.arc_sign[b] = -t.arc_sign[a];
          stack.push_back(b);
        }
    }
  }
  return t;
}

// A validated knot word. Construction goes through validate(); instances are
// immutable values.
class MorsePresentation {
 public:
  static MorsePresentation validate(std::vector<MorseEvent> events) {
    WordTrace t = trace_word(events);
    if (t.component_count != 1)
      throw error(errc::multi_component,
                  "trace found " + std::to_string(t.component_count) + " components");
    return MorsePresentation(std::move(events));
  }

  const std::vector<MorseEvent>& events() const { return events_; }
  std::size_t size() const { return events_.size(); }

  friend bool operator==(const MorsePresentation&, const MorsePresentation&) = default;

 private:
  explicit MorsePresentation(std::vector<MorseEvent> events) : events_(std::move(events)) {}
  std::vector<MorseEvent> events_;
};

// Strand count just before each event, plus the final zero.
inline std::vector<int> strand_profile(const std::vector<MorseEvent>& events) {
  std::vector<int> profile;
  profile.reserve(events.size() + 1);
  int k = 0;
  for (const MorseEvent& e : events) {
    profile.push_back(k);
    if (e.kind == MorseEvent::Kind::cup) k += 2;
    if (e.kind == MorseEvent::Kind::cap) k -= 2;
  }
  profile.push_back(k);
  return profile;
}

// |K ∩ sphere| at one regular level per gap between consecutive critical
// events. Crossings do not bound levels: the count is constant across them.
inline std::vector<int> level_counts(const MorsePresentation& p) {
  std::vector<int> counts;
  int k = 0;
  bool seen_critical = false;
  for (const MorseEvent& e : p.events()) {
    if (!e.is_critical()) continue;
    if (seen_critical) counts.push_back(k);
    seen_critical = true;
    k += e.kind == MorseEvent::Kind::cup ? 2 : -2;
  }
  return counts;
}

inline long long width(const MorsePresentation& p) {
  long long w = 0;
  for (int c : level_counts(p)) w += c;
  return w;
}

inline long long bridge_count(const MorsePresentation& p) {
  long long cups = 0;
  for (const MorseEvent& e : p.events())
    if (e.kind == MorseEvent::Kind::cup) ++cups;
  return cups;
}

inline long long trunk(const MorsePresentation& p) {
  const std::vector<int> counts = level_counts(p);
  return *std::max_element(counts.begin(), counts.end());
}

// Thick levels are the local maxima of the level-count zigzag, thin levels
// the interior local minima; the virtual counts below the lowest cup and
// above the highest cap are zero.
struct ThickThinDecomposition {
  std::vector<int> thick;
  std::vector<int> thin;

  long long width_from_squares() const {
    long long s = 0;
    for (long long a : thick) s += a * a;
    for (long long b : thin) s -= b * b;
    return s / 2;
  }
};

inline ThickThinDecomposition thick_thin(const MorsePresentation& p) {
  const std::vector<int> c = level_counts(p);
  const auto at = [&](std::ptrdiff_t i) -> int {
    return (i < 0 || i >= static_cast<std::ptrdiff_t>(c.size())) ? 0 : c[i];
  };
  ThickThinDecomposition d;
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(c.size()); ++i) {
    if (c[i] > at(i - 1) && c[i] > at(i + 1)) d.thick.push_back(c[i]);
    if (i > 0 && i + 1 < static_cast<std::ptrdiff_t>(c.size()) && c[i] < at(i - 1) && c[i] < at(i + 1))
      d.thin.push_back(c[i]);
  }
  return d;
}

// Bridge position: all maxima above all minima, i.e. one thick level and no
// thin levels.
inline bool is_bridge_position(const MorsePresentation& p) {
  bool seen_cap = false;
  for (const MorseEvent& e : p.events()) {
    if (e.kind == MorseEvent::Kind::cap) seen_cap = true;
    if (e.kind == MorseEvent::Kind::cup && seen_cap) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// .morse file format: one event per line (`cup <p>`, `cap <p>`, `x+ <p>`,
// `x- <p>`), `#` starts a comment, blank lines ignored. Serialization is
// bit-exact: single spaces, no trailing whitespace, newline-terminated.

inline std::string to_morse_text(const std::vector<MorseEvent>& events) {
  std::string out;
  for (const MorseEvent& e : events) {
    switch (e.kind) {
      case MorseEvent::Kind::cup: out += "cup "; break;
      case MorseEvent::Kind::cap: out += "cap "; break;
      case MorseEvent::Kind::cross_pos: out += "x+ "; break;
      case MorseEvent::Kind::cross_neg: out += "x- "; break;
    }
    out += std::to_string(e.pos);
    out += '\n';
  }
  return out;
}

inline std::string to_morse_text(const MorsePresentation& p) { return to_morse_text(p.events()); }

namespace detail {

inline std::string strip_comment(const std::string& line) {
  const std::size_t h = line.find('#');
  return h == std::string::npos ? line : line.substr(0, h);
}

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline int parse_int(const std::string& tok, std::size_t line_no, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size())
    throw error(errc::parse_error, std::string("expected ") + what + ", got '" + tok + "'", line_no);
  return value;
}

}  // namespace detail

// Parses .morse text. Parse errors carry 1-based line numbers.
inline std::vector<MorseEvent> parse_morse_events(std::istream& in) {
  std::vector<MorseEvent> events;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<std::string> tok = detail::tokens(detail::strip_comment(line));
    if (tok.empty()) continue;
    if (tok.size() != 2)
      throw error(errc::parse_error, "expected '<event> <position>'", line_no);
    MorseEvent e;
    if (tok[0] == "cup") e.kind = MorseEvent::Kind::cup;
    else if (tok[0] == "cap") e.kind = MorseEvent::Kind::cap;
    else if (tok[0] == "x+") e.kind = MorseEvent::Kind::cross_pos;
    else if (tok[0] == "x-") e.kind = MorseEvent::Kind::cross_neg;
    else throw error(errc::parse_error, "unknown event '" + tok[0] + "'", line_no);
    e.pos = detail::parse_int(tok[1], line_no, "a position");
    events.push_back(e);
  }
  return events;
}

inline std::vector<MorseEvent> parse_morse_events(const std::string& text) {
  std::istringstream in(text);
  return parse_morse_events(in);
}

inline MorsePresentation parse_morse(const std::string& text) {
  return MorsePresentation::validate(parse_morse_events(text));
}

}  // namespace plait
