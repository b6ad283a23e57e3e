#pragma once

// Finger fixtures for the saddle-elimination tests: splice a disk bubble
// into a clean foliation word, producing exactly one inessential saddle
// per splice. An upward finger is a torus minimum whose circle merges into
// a live circle; a downward finger splits a bubble off that dies at a
// torus maximum. The segment between the two spliced events may contain
// unrelated events.

#include <cstdint>
#include <random>
#include <vector>

#include "plait/foliation.hpp"

namespace plait::fixtures {

inline int fresh_curve_id(const std::vector<TorusEvent>& events) {
  int m = -1;
  for (const TorusEvent& e : events) {
    for (int c : e.in_curves) m = std::max(m, c);
    for (int c : e.out_curves) m = std::max(m, c);
  }
  return m + 1;
}

// tmin(bubble) lands at index i, the merge at index j+1; requires the
// target circle alive over [i, j] of the input word.
inline FoliationWord splice_up_finger(const FoliationWord& fw, std::size_t i, std::size_t j,
                                      int target) {
  std::vector<TorusEvent> ev = fw.events();
  int fresh = fresh_curve_id(ev);
  const int bubble = fresh++, continuation = fresh++;
  for (std::size_t k = j; k < ev.size(); ++k) {
    for (int& c : ev[k].in_curves)
      if (c == target) c = continuation;
    for (int& c : ev[k].out_curves)
      if (c == target) c = continuation;
  }
  ev.insert(ev.begin() + j, saddle_merge(target, bubble, continuation, false));
  ev.insert(ev.begin() + i, torus_min(bubble));
  return FoliationWord::validate(std::move(ev));
}

// split lands at index i, tmax(bubble) at index j+1.
inline FoliationWord splice_down_finger(const FoliationWord& fw, std::size_t i, std::size_t j,
                                        int target) {
  std::vector<TorusEvent> ev = fw.events();
  int fresh = fresh_curve_id(ev);
  const int bubble = fresh++, continuation = fresh++;
  for (std::size_t k = i; k < ev.size(); ++k) {
    for (int& c : ev[k].in_curves)
      if (c == target) c = continuation;
    for (int& c : ev[k].out_curves)
      if (c == target) c = continuation;
  }
  ev.insert(ev.begin() + j, torus_max(bubble));
  ev.insert(ev.begin() + i, saddle_split(target, continuation, bubble, false));
  return FoliationWord::validate(std::move(ev));
}

inline FoliationWord splice_random_fingers(const FoliationWord& start, std::mt19937_64& rng,
                                           int count) {
  FoliationWord fw = start;
  for (int c = 0; c < count; ++c) {
    const FoliationAnalysis a = fw.analysis();
    std::vector<std::pair<int, CurveLife>> curves(a.curves.begin(), a.curves.end());
    const auto& [target, life] = curves[rng() % curves.size()];
    const std::size_t i = life.birth + 1 + rng() % (life.death - life.birth);
    if (rng() % 2) {
      const std::size_t j = i + rng() % (life.death - i + 1);
      fw = splice_up_finger(fw, i, j, target);
    } else {
      const std::size_t j = i + rng() % (fw.size() - i + 1);
      fw = splice_down_finger(fw, i, j, target);
    }
  }
  return fw;
}

}  // namespace plait::fixtures
