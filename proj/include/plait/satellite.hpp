#pragma once

// Satellite construction: cable a companion presentation with a braid
// pattern. Every companion strand fattens into a block of n parallel
// strands; companion critical points become nested families, companion
// crossings become block transpositions, and the pattern letters plus
// framing twists are spliced into the tube above one companion cup.

#include <cstdlib>
#include <string>
#include <vector>

#include "plait/braid.hpp"
#include "plait/error.hpp"
#include "plait/morse.hpp"

namespace plait {

// Pattern letters followed by the framing twists, as one braid word. A full
// twist is (s1 ... s_{n-1})^n; twists are pure, so they never change the
// permutation, but the knot-or-link test is defined on the composition.
inline BraidWord pattern_with_twists(const BraidWord& pattern, int framing_twists) {
  std::vector<BraidLetter> letters = pattern.letters();
  for (int t = 0; t < std::abs(framing_twists); ++t)
    for (int round = 0; round < pattern.index(); ++round)
      for (int j = 1; j < pattern.index(); ++j) letters.push_back({j, framing_twists > 0});
  return BraidWord::validate(pattern.index(), std::move(letters));
}

struct SatelliteSpec {
  MorsePresentation companion;
  BraidWord pattern;
  int framing_twists = 0;   // signed full twists
  int insertion_site = 0;   // 0-based index among the companion's cups

  static SatelliteSpec validate(MorsePresentation companion, BraidWord pattern, int framing_twists = 0,
                                int insertion_site = 0) {
    long long cups = bridge_count(companion);
    if (insertion_site < 0 || insertion_site >= cups)
      throw error(errc::invalid_site,
                  "insertion site " + std::to_string(insertion_site) + " but companion has " +
                      std::to_string(cups) + " cups");
    if (!is_single_cycle(braid_permutation(pattern_with_twists(pattern, framing_twists))))
      throw error(errc::not_a_knot, "pattern permutation is not a single cycle; the cable would be a link");
    return SatelliteSpec{std::move(companion), std::move(pattern), framing_twists, insertion_site};
  }
};

namespace detail {

// Swap two adjacent blocks of n strands starting at `base`, preserving the
// order inside each block: n^2 adjacent crossings of uniform sign.
inline void emit_block_transposition(std::vector<MorseEvent>& out, int base, int n, bool positive) {
  for (int i = 0; i < n; ++i)
    for (int j = n + i; j >= i + 1; --j)
      out.push_back(positive ? cross_pos(base + j - 1) : cross_neg(base + j - 1));
}

// One full twist on the block of n strands at `base`: (s1 ... s_{n-1})^n.
inline void emit_full_twist(std::vector<MorseEvent>& out, int base, int n, bool positive) {
  for (int round = 0; round < n; ++round)
    for (int j = 1; j < n; ++j)
      out.push_back(positive ? cross_pos(base + j - 1) : cross_neg(base + j - 1));
}

}  // namespace detail

inline MorsePresentation cable(const SatelliteSpec& spec) {
  const int n = spec.pattern.index();
  std::vector<MorseEvent> out;
  int cup_ordinal = 0;
  for (const MorseEvent& e : spec.companion.events()) {
    switch (e.kind) {
      case MorseEvent::Kind::cup: {
        for (int i = 0; i < n; ++i) out.push_back(cup(n * e.pos + i));
        if (cup_ordinal == spec.insertion_site) {
          const int base = n * e.pos;
          for (const BraidLetter& l : spec.pattern.letters())
            out.push_back(l.positive ? cross_pos(base + l.generator - 1)
                                     : cross_neg(base + l.generator - 1));
          for (int t = 0; t < std::abs(spec.framing_twists); ++t)
            detail::emit_full_twist(out, base, n, spec.framing_twists > 0);
        }
        ++cup_ordinal;
        break;
      }
      case MorseEvent::Kind::cap:
        for (int i = n - 1; i >= 0; --i) out.push_back(cap(n * e.pos + i));
        break;
      case MorseEvent::Kind::cross_pos:
      case MorseEvent::Kind::cross_neg:
        detail::emit_block_transposition(out, n * e.pos, n, e.kind == MorseEvent::Kind::cross_pos);
        break;
    }
  }
  return MorsePresentation::validate(std::move(out));
}

struct SatelliteInvariants {
  long long width = 0;
  long long bridge = 0;
  long long trunk = 0;

  friend bool operator==(const SatelliteInvariants&, const SatelliteInvariants&) = default;
};

// Invariants of the canonical cable. Each level count of the companion
// scales by n and the families interpolate between them, so the closed
// forms are n^2 * w(J), n * b(J), n * trunk(J); we recompute them from the
// built word and insist the two routes agree.
inline SatelliteInvariants canonical_invariants(const SatelliteSpec& spec) {
  const long long n = spec.pattern.index();
  const SatelliteInvariants predicted{n * n * width(spec.companion), n * bridge_count(spec.companion),
                                      n * trunk(spec.companion)};
  const MorsePresentation word = cable(spec);
  const SatelliteInvariants computed{width(word), bridge_count(word), trunk(word)};
  if (!(predicted == computed))
    throw error(errc::bound_violation, "cable invariants disagree with the scaling formulas");
  return computed;
}

}  // namespace plait
