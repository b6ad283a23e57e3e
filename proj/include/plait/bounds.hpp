#pragma once

// Numeric floors on the invariants of a presentation, and the audit that
// checks a computed word against every floor that applies to it. The
// conjectured companion-width scaling is reported but never enforced.

#include <optional>
#include <string>
#include <vector>

#include "plait/error.hpp"
#include "plait/morse.hpp"
#include "plait/satellite.hpp"

namespace plait {

// Any presentation has a thick level meeting the knot in trunk points, and
// the alternating decomposition pairs every other thick count against a
// strictly smaller thin count; squaring gives the floor.
inline long long trunk_width_bound(long long trunk_value) { return trunk_value * trunk_value / 2; }

// A satellite of winding n has a level sphere meeting it in at least 4n
// points, so its trunk is at least 4n and its width at least 8n^2.
inline long long satellite_width_bound(long long winding) { return 8 * winding * winding; }

// Bridge number of a satellite scales by the winding number.
inline long long companion_bridge_bound(long long winding, long long companion_bridge) {
  return winding * companion_bridge;
}

// Conjectured: width scales by the square of the winding number.
inline long long conjectured_width_bound(long long winding, long long companion_width) {
  return winding * winding * companion_width;
}

struct BoundCheck {
  std::string name;
  long long bound = 0;
  long long actual = 0;
  bool satisfied = false;
  bool conjectural = false;
};

struct BoundReport {
  long long width = 0;
  long long bridge = 0;
  long long trunk = 0;
  std::optional<int> winding;
  std::optional<long long> companion_width;
  std::optional<long long> companion_bridge;
  std::vector<BoundCheck> checks;

  bool all_required_ok() const {
    for (const BoundCheck& c : checks)
      if (!c.conjectural && !c.satisfied) return false;
    return true;
  }
};

namespace detail {

inline void add_check(BoundReport& r, std::string name, long long bound, long long actual,
                      bool conjectural) {
  r.checks.push_back({std::move(name), bound, actual, actual >= bound, conjectural});
}

}  // namespace detail

// Audits a presentation against every applicable floor. Words produced by
// cable(), or reached from one by search moves, can never fail a required
// check; a failure means the word does not present the claimed satellite
// and is reported as an internal inconsistency.
inline BoundReport audit(const MorsePresentation& p, const std::optional<SatelliteSpec>& spec = {}) {
  BoundReport r;
  r.width = width(p);
  r.bridge = bridge_count(p);
  r.trunk = trunk(p);
  detail::add_check(r, "trunk_squared_over_two", trunk_width_bound(r.trunk), r.width, false);
  if (spec) {
    const int n = spec->pattern.index();
    r.winding = n;
    r.companion_width = width(spec->companion);
    r.companion_bridge = bridge_count(spec->companion);
    detail::add_check(r, "winding_width_floor", satellite_width_bound(n), r.width, false);
    detail::add_check(r, "companion_bridge_scaling", companion_bridge_bound(n, *r.companion_bridge),
                      r.bridge, false);
    detail::add_check(r, "companion_width_scaling", conjectured_width_bound(n, *r.companion_width),
                      r.width, true);
  }
  if (!r.all_required_ok()) {
    std::string failed;
    for (const BoundCheck& c : r.checks)
      if (!c.conjectural && !c.satisfied)
        failed += (failed.empty() ? "" : ", ") + c.name + " (" + std::to_string(c.actual) + " < " +
                  std::to_string(c.bound) + ")";
    throw error(errc::bound_violation, failed);
  }
  return r;
}

inline std::string format_table(const BoundReport& r) {
  std::string out;
  out += "width   " + std::to_string(r.width) + "\n";
  out += "bridge  " + std::to_string(r.bridge) + "\n";
  out += "trunk   " + std::to_string(r.trunk) + "\n";
  if (r.winding) out += "winding " + std::to_string(*r.winding) + "\n";
  if (r.companion_width) out += "companion width  " + std::to_string(*r.companion_width) + "\n";
  if (r.companion_bridge) out += "companion bridge " + std::to_string(*r.companion_bridge) + "\n";
  for (const BoundCheck& c : r.checks) {
    out += "check " + c.name + ": " + std::to_string(c.actual) + " >= " + std::to_string(c.bound) +
           (c.satisfied ? " ok" : " FAILED");
    if (c.conjectural) out += " (conjectural)";
    out += "\n";
  }
  return out;
}

}  // namespace plait
