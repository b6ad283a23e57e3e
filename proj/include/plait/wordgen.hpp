#pragma once

// Seeded random generation of valid knot words for property tests:
// rejection sampling over bounded-length words with positions clamped to
// the valid range, retried until the trace finds a single component.

#include <cstdint>
#include <random>
#include <vector>

#include "plait/error.hpp"
#include "plait/morse.hpp"

namespace plait {

inline MorsePresentation random_word(std::mt19937_64& rng, int max_len = 40) {
  for (;;) {
    std::vector<MorseEvent> events;
    const int budget = 4 + static_cast<int>(rng() % std::max(1, max_len - 3));
    int k = 0;
    while (true) {
      const int remaining = budget - static_cast<int>(events.size());
      if (k > 0 && remaining <= k / 2) break;  // out of room: close up
      if (k == 0) {
        if (!events.empty()) break;
        events.push_back(cup(0));
        k = 2;
        continue;
      }
      switch (rng() % 5) {
        case 0:
        case 1:
          events.push_back(cup(static_cast<int>(rng() % (k + 1))));
          k += 2;
          break;
        case 2:
          if (k >= 4) {  // keep the word from closing off mid-way
            events.push_back(cap(static_cast<int>(rng() % (k - 1))));
            k -= 2;
            break;
          }
          [[fallthrough]];
        default:
          events.push_back(rng() % 2 ? cross_pos(static_cast<int>(rng() % (k - 1)))
                                     : cross_neg(static_cast<int>(rng() % (k - 1))));
          break;
      }
    }
    while (k > 0) {
      events.push_back(cap(static_cast<int>(rng() % std::max(1, k - 1))));
      k -= 2;
    }
    const WordTrace t = trace_word(events);
    if (t.component_count == 1) return MorsePresentation::validate(std::move(events));
  }
}

inline std::vector<MorsePresentation> random_words(std::uint64_t seed, int count, int max_len = 40) {
  std::mt19937_64 rng(seed);
  std::vector<MorsePresentation> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(random_word(rng, max_len));
  return out;
}

}  // namespace plait
