#pragma once

// Local-move width minimization. The move set rearranges a word without
// changing the knot: commuting events whose strand supports are disjoint,
// sliding crossings past independent critical points, and removing or
// inserting a cup/cap zigzag on a single strand. Soundness comes from the
// moves being isotopies; the search therefore yields upper bounds on the
// width of the knot type, never certificates.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "plait/bounds.hpp"
#include "plait/error.hpp"
#include "plait/morse.hpp"

namespace plait {

struct Move {
  enum class Kind : std::uint8_t { far_commute, cancel_pair, create_pair, slide_crossing };

  Kind kind = Kind::far_commute;
  std::size_t index = 0;    // event index the move acts at
  std::size_t partner = 0;  // second event index for commutes
  int pos = 0;              // strand position for create_pair

  friend bool operator==(const Move&, const Move&) = default;
};

inline const char* move_kind_name(Move::Kind k) {
  switch (k) {
    case Move::Kind::far_commute: return "FarCommute";
    case Move::Kind::cancel_pair: return "CancelPair";
    case Move::Kind::create_pair: return "CreatePair";
    case Move::Kind::slide_crossing: return "SlideCrossing";
  }
  return "?";
}

namespace detail {

// Footprints on the row between two adjacent events, in doubled coordinates
// so that strand j sits at 2j and the gap before it at 2j-1. Two adjacent
// events commute as an isotopy exactly when their footprints are disjoint.
struct Footprint {
  int lo = 0, hi = 0;
};

inline Footprint footprint_of_lower(const MorseEvent& e) {
  switch (e.kind) {
    case MorseEvent::Kind::cup: return {2 * e.pos, 2 * e.pos + 2};      // the newborn pair
    case MorseEvent::Kind::cap: return {2 * e.pos - 1, 2 * e.pos - 1};  // the scar gap
    default: return {2 * e.pos, 2 * e.pos + 2};
  }
}

inline Footprint footprint_of_upper(const MorseEvent& e) {
  switch (e.kind) {
    case MorseEvent::Kind::cup: return {2 * e.pos - 1, 2 * e.pos - 1};  // the insertion gap
    default: return {2 * e.pos, 2 * e.pos + 2};                         // the strands it uses
  }
}

inline int count_shift(const MorseEvent& e) {
  if (e.kind == MorseEvent::Kind::cup) return +2;
  if (e.kind == MorseEvent::Kind::cap) return -2;
  return 0;
}

inline std::optional<std::pair<MorseEvent, MorseEvent>> commuted_once(const MorseEvent& lower,
                                                                      const MorseEvent& upper) {
  const Footprint a = footprint_of_lower(lower);
  const Footprint b = footprint_of_upper(upper);
  if (!(a.hi < b.lo || b.hi < a.lo)) return std::nullopt;
  MorseEvent new_lower = upper;
  MorseEvent new_upper = lower;
  if (b.hi < a.lo) {
    // upper event acts below the lower one: its position survives, the
    // other event sees the row shifted by it
    new_upper.pos += count_shift(upper);
  } else {
    new_lower.pos -= count_shift(lower);
  }
  return std::make_pair(new_lower, new_upper);
}

// Swapped pair with adjusted positions, or nothing when the supports meet.
// The swap must invert to the original pair: at a scar/gap coincidence the
// two orders are not in bijection, and such pairs are left alone so that
// the move stays an involution.
inline std::optional<std::pair<MorseEvent, MorseEvent>> commuted(const MorseEvent& lower,
                                                                 const MorseEvent& upper) {
  const auto forward = commuted_once(lower, upper);
  if (!forward) return std::nullopt;
  const auto back = commuted_once(forward->first, forward->second);
  if (!back || !(back->first == lower) || !(back->second == upper)) return std::nullopt;
  return forward;
}

inline bool is_zigzag_pair(const MorseEvent& a, const MorseEvent& b) {
  return a.kind == MorseEvent::Kind::cup && b.kind == MorseEvent::Kind::cap &&
         (b.pos == a.pos + 1 || b.pos == a.pos - 1);
}

inline bool commute_classifies_as(const MorseEvent& a, const MorseEvent& b, Move::Kind kind) {
  const bool any_crossing = a.is_crossing() || b.is_crossing();
  return kind == Move::Kind::slide_crossing ? any_crossing : !any_crossing;
}

}  // namespace detail

inline bool move_applies(const MorsePresentation& p, const Move& m) {
  const std::vector<MorseEvent>& ev = p.events();
  switch (m.kind) {
    case Move::Kind::far_commute:
    case Move::Kind::slide_crossing: {
      if (m.index + 1 >= ev.size() || m.partner != m.index + 1) return false;
      if (!detail::commute_classifies_as(ev[m.index], ev[m.index + 1], m.kind)) return false;
      return detail::commuted(ev[m.index], ev[m.index + 1]).has_value();
    }
    case Move::Kind::cancel_pair:
      return m.index + 1 < ev.size() && detail::is_zigzag_pair(ev[m.index], ev[m.index + 1]);
    case Move::Kind::create_pair: {
      if (m.index > ev.size()) return false;
      const std::vector<int> profile = strand_profile(ev);
      return m.pos >= 0 && m.pos <= profile[m.index] - 1;
    }
  }
  return false;
}

inline MorsePresentation apply_move(const MorsePresentation& p, const Move& m) {
  if (!move_applies(p, m)) throw error(errc::illegal_move, move_kind_name(m.kind), m.index);
  std::vector<MorseEvent> ev = p.events();
  switch (m.kind) {
    case Move::Kind::far_commute:
    case Move::Kind::slide_crossing: {
      const auto swapped = detail::commuted(ev[m.index], ev[m.index + 1]);
      ev[m.index] = swapped->first;
      ev[m.index + 1] = swapped->second;
      break;
    }
    case Move::Kind::cancel_pair:
      ev.erase(ev.begin() + m.index, ev.begin() + m.index + 2);
      break;
    case Move::Kind::create_pair:
      ev.insert(ev.begin() + m.index, {cup(m.pos), cap(m.pos + 1)});
      break;
  }
  return MorsePresentation::validate(std::move(ev));
}

// Exact width change of a legal move, from the count profile alone.
inline long long predicted_width_delta(const MorsePresentation& p, const Move& m) {
  const std::vector<MorseEvent>& ev = p.events();
  const std::vector<int> profile = strand_profile(ev);
  switch (m.kind) {
    case Move::Kind::cancel_pair:
      return -(2LL * profile[m.index] + 2);
    case Move::Kind::create_pair:
      return 2LL * profile[m.index] + 2;
    case Move::Kind::far_commute:
    case Move::Kind::slide_crossing: {
      // crossings bound no levels, so only a critical/critical swap moves
      // the one level between the two events
      if (ev[m.index].is_crossing() || ev[m.index + 1].is_crossing()) return 0;
      return detail::count_shift(ev[m.index + 1]) - detail::count_shift(ev[m.index]);
    }
  }
  return 0;
}

inline std::vector<Move> legal_moves(const MorsePresentation& p) {
  std::vector<Move> out;
  const std::vector<MorseEvent>& ev = p.events();
  const std::vector<int> profile = strand_profile(ev);
  for (std::size_t i = 0; i + 1 < ev.size(); ++i) {
    if (detail::is_zigzag_pair(ev[i], ev[i + 1])) out.push_back({Move::Kind::cancel_pair, i, i + 1, 0});
    if (detail::commuted(ev[i], ev[i + 1])) {
      const Move::Kind kind = ev[i].is_crossing() || ev[i + 1].is_crossing()
                                  ? Move::Kind::slide_crossing
                                  : Move::Kind::far_commute;
      out.push_back({kind, i, i + 1, 0});
    }
  }
  for (std::size_t i = 0; i <= ev.size(); ++i)
    for (int pos = 0; pos + 1 <= profile[i]; ++pos)
      out.push_back({Move::Kind::create_pair, i, 0, pos});
  return out;
}

struct SearchConfig {
  std::uint64_t seed = 1;
  std::size_t max_iterations = 10000;  // total budget, split across chains
  double initial_temperature = 4.0;
  double decay = 0.9995;
  int chains = 1;
};

struct SearchResult {
  MorsePresentation best;
  long long best_width = 0;
  std::size_t iterations_run = 0;
  std::size_t accepted = 0;
};

// Called on every accepted move: iteration (1-based, within the chain),
// width after the move, and the move itself.
using SearchTrace = std::function<void(std::size_t, long long, const Move&)>;

namespace detail {

inline bool lex_less(const std::vector<MorseEvent>& a, const std::vector<MorseEvent>& b) {
  auto key = [](const MorseEvent& e) { return std::pair(static_cast<int>(e.kind), e.pos); };
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [&](const MorseEvent& x, const MorseEvent& y) { return key(x) < key(y); });
}

// (width, word length, lexicographic events): the deterministic merge order.
inline bool search_better(long long wa, const MorsePresentation& a, long long wb,
                          const MorsePresentation& b) {
  if (wa != wb) return wa < wb;
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a.events(), b.events());
}

inline double unit_real(std::mt19937_64& rng) { return std::ldexp(static_cast<double>(rng() >> 11), -53); }

}  // namespace detail

// Annealing with restart chains. Deterministic for a given config: chains
// run from per-chain seeds and merge by (width, length, lexicographic).
// When `winding` is given, every reachable state is checked against the
// satellite width floor; a violation would mean an unsound move and is
// reported as an internal error.
inline SearchResult minimize_width(const MorsePresentation& start, const SearchConfig& cfg,
                                   std::optional<int> winding = {}, const SearchTrace& trace = {}) {
  const long long floor_width = winding ? satellite_width_bound(*winding) : 0;
  const auto check_floor = [&](long long w) {
    if (winding && w < floor_width)
      throw error(errc::bound_violation, "search state of width " + std::to_string(w) +
                                             " below the satellite floor " + std::to_string(floor_width));
  };
  check_floor(width(start));

  SearchResult result{start, width(start), 0, 0};
  const int chains = std::max(1, cfg.chains);
  const std::size_t per_chain = cfg.max_iterations / static_cast<std::size_t>(chains);

  for (int chain = 0; chain < chains; ++chain) {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(chain)};
    std::mt19937_64 rng(seq);
    MorsePresentation current = start;
    long long current_width = width(start);
    MorsePresentation best = current;
    long long best_width = current_width;
    double temperature = cfg.initial_temperature;

    for (std::size_t it = 1; it <= per_chain; ++it) {
      ++result.iterations_run;
      const std::vector<Move> moves = legal_moves(current);
      if (moves.empty()) break;
      const Move& m = moves[rng() % moves.size()];
      const long long delta = predicted_width_delta(current, m);
      const bool accept =
          delta <= 0 || std::exp(-static_cast<double>(delta) / temperature) > detail::unit_real(rng);
      if (accept) {
        current = apply_move(current, m);
        current_width += delta;
        check_floor(current_width);
        ++result.accepted;
        if (trace) trace(it, current_width, m);
        if (detail::search_better(current_width, current, best_width, best)) {
          best = current;
          best_width = current_width;
        }
      }
      temperature *= cfg.decay;
    }
    if (current_width != width(current))
      throw error(errc::bound_violation, "tracked width drifted from the recomputed one");
    if (detail::search_better(best_width, best, result.best_width, result.best)) {
      result.best = best;
      result.best_width = best_width;
    }
  }
  return result;
}

}  // namespace plait
