#include <catch2/catch_amalgamated.hpp>

#include "plait/bounds.hpp"
#include "plait/catalog.hpp"

using namespace plait;

namespace {

BraidWord cycle_pattern(int n) {
  std::vector<BraidLetter> letters;
  for (int j = 1; j < n; ++j) letters.push_back({j, true});
  return BraidWord::validate(n, std::move(letters));
}

SatelliteSpec spec_over(const std::string& companion, int n) {
  return SatelliteSpec::validate(find_catalog(companion)->word(), cycle_pattern(n));
}

const BoundCheck& check_named(const BoundReport& r, const std::string& name) {
  for (const BoundCheck& c : r.checks)
    if (c.name == name) return c;
  FAIL("missing check " + name);
  return r.checks.front();
}

}  // namespace

TEST_CASE("bound formulas") {
  CHECK(trunk_width_bound(4) == 8);
  CHECK(trunk_width_bound(2) == 2);
  CHECK(trunk_width_bound(8) == 32);

  CHECK(satellite_width_bound(1) == 8);
  CHECK(satellite_width_bound(2) == 32);
  CHECK(satellite_width_bound(3) == 72);

  CHECK(companion_bridge_bound(2, 2) == 4);
  CHECK(companion_bridge_bound(1, 3) == 3);
  CHECK(companion_bridge_bound(3, 2) == 6);

  CHECK(conjectured_width_bound(2, 8) == 32);
  CHECK(conjectured_width_bound(1, 16) == 16);
  CHECK(conjectured_width_bound(3, 8) == 72);
}

TEST_CASE("auditing a canonical cable meets every bound with equality") {
  const SatelliteSpec spec = spec_over("trefoil", 2);
  const BoundReport r = audit(cable(spec), spec);
  CHECK(r.width == 32);
  CHECK(r.bridge == 4);
  CHECK(r.trunk == 8);
  REQUIRE(r.winding.has_value());
  CHECK(*r.winding == 2);
  CHECK(r.all_required_ok());

  CHECK(check_named(r, "winding_width_floor").bound == 32);
  CHECK(check_named(r, "winding_width_floor").actual == 32);
  CHECK(check_named(r, "trunk_squared_over_two").bound == 32);
  CHECK(check_named(r, "companion_bridge_scaling").bound == 4);
  const BoundCheck& conj = check_named(r, "companion_width_scaling");
  CHECK(conj.conjectural);
  CHECK(conj.bound == 32);
  CHECK(conj.satisfied);
}

TEST_CASE("equality holds exactly for two-bridge companions") {
  for (const char* name : {"trefoil", "figure-eight"}) {
    for (int n = 1; n <= 3; ++n) {
      const SatelliteSpec spec = spec_over(name, n);
      const BoundReport r = audit(cable(spec), spec);
      for (const BoundCheck& c : r.checks) {
        CHECK(c.satisfied);
        CHECK(c.bound == c.actual);  // tight across the board
      }
    }
  }
}

TEST_CASE("floors go strict over a companion that is not in two-bridge position") {
  // counts (2,4,2,4,2): width 14, bridge 3
  const MorsePresentation humped = parse_morse("cup 0\ncup 1\ncap 2\ncup 1\ncap 2\ncap 0\n");
  const SatelliteSpec spec = SatelliteSpec::validate(humped, BraidWord::validate(2, {{1, true}}));
  const BoundReport r = audit(cable(spec), spec);
  CHECK(r.width == 56);  // 4 * 14
  CHECK(check_named(r, "winding_width_floor").bound == 32);
  CHECK(check_named(r, "winding_width_floor").actual == 56);
  CHECK(check_named(r, "trunk_squared_over_two").bound < r.width);
  // the scaling laws themselves stay exact
  CHECK(check_named(r, "companion_bridge_scaling").bound ==
        check_named(r, "companion_bridge_scaling").actual);
  CHECK(check_named(r, "companion_width_scaling").bound == r.width);
}

TEST_CASE("a plain word gets only the trunk bound") {
  const BoundReport r = audit(parse_morse("cup 0\ncup 1\ncap 2\ncup 1\ncap 2\ncap 0\n"));
  CHECK(r.width == 14);
  CHECK(r.checks.size() == 1);
  CHECK(r.checks[0].name == "trunk_squared_over_two");
  CHECK(r.checks[0].bound == 8);
  CHECK_FALSE(r.winding.has_value());
}

TEST_CASE("claiming a satellite the word cannot be raises a violation") {
  // the bare trefoil word is far too thin to be a winding-two satellite
  try {
    audit(find_catalog("trefoil")->word(), spec_over("trefoil", 2));
    FAIL("expected BoundViolation");
  } catch (const error& e) {
    CHECK(e.code() == errc::bound_violation);
  }
}

TEST_CASE("a conjectural check can fail without failing the report") {
  BoundReport r;
  r.checks.push_back({"companion_width_scaling", 100, 50, false, true});
  CHECK(r.all_required_ok());
  r.checks.push_back({"winding_width_floor", 32, 30, false, false});
  CHECK_FALSE(r.all_required_ok());
}

TEST_CASE("format_table flags conjectural lines") {
  const SatelliteSpec spec = spec_over("figure-eight", 2);
  const std::string table = format_table(audit(cable(spec), spec));
  CHECK(table.find("width   32") != std::string::npos);
  CHECK(table.find("(conjectural)") != std::string::npos);
  CHECK(table.find("FAILED") == std::string::npos);
}
