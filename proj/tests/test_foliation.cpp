#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "foliation_fixtures.hpp"
#include "plait/catalog.hpp"
#include "plait/foliation.hpp"

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

int count_kind(const FoliationWord& fw, TorusEvent::Kind k) {
  int c = 0;
  for (const TorusEvent& e : fw.events())
    if (e.kind == k) ++c;
  return c;
}

}  // namespace

TEST_CASE("canonical foliation of the single tube") {
  const FoliationWord fw = induced_foliation(spec_over("unknot", 1));
  const std::vector<TorusEvent> expected{
      torus_min(0), k_cup_mark(), saddle_split(0, 1, 2, true),
      saddle_merge(1, 2, 3, true), k_cap_mark(), torus_max(3),
  };
  CHECK(fw.events() == expected);
}

TEST_CASE("canonical foliation of the doubled trefoil") {
  const FoliationWord fw = induced_foliation(spec_over("trefoil", 2));
  CHECK(count_kind(fw, TorusEvent::Kind::t_min) == 2);
  CHECK(count_kind(fw, TorusEvent::Kind::t_max) == 2);
  CHECK(count_kind(fw, TorusEvent::Kind::saddle) == 4);
  CHECK(count_kind(fw, TorusEvent::Kind::k_cup) == 4);
  CHECK(count_kind(fw, TorusEvent::Kind::k_cap) == 4);
  for (const TorusEvent& e : fw.events())
    if (e.kind == TorusEvent::Kind::saddle) CHECK(e.essential);
  CHECK(detect_inessential(fw).empty());
}

TEST_CASE("foliation word validation rejects malformed words") {
  // Euler count off: a sphere, not a torus
  CHECK_THROWS_AS(FoliationWord::validate({torus_min(0), torus_max(0)}), error);
  // circle not alive
  CHECK_THROWS_AS(FoliationWord::validate({torus_min(0), torus_max(1)}), error);
  // id reuse
  CHECK_THROWS_AS(FoliationWord::validate({torus_min(0), torus_min(0), saddle_merge(0, 0, 1, false),
                                           torus_max(1)}),
                  error);
  // two disjoint tubes: not a connected surface
  CHECK_THROWS_AS(FoliationWord::validate({
                      torus_min(0), saddle_split(0, 1, 2, true), saddle_merge(1, 2, 3, true),
                      torus_max(3), torus_min(4), saddle_split(4, 5, 6, true),
                      saddle_merge(5, 6, 7, true), torus_max(7),
                  }),
                  error);
  // stored flag contradicting the connectivity analysis
  try {
    parse_fol("tmin 0\nsad i 0 -> 1 2\nsad e 1 2 -> 3\ntmax 3\n");
    FAIL("expected rejection");
  } catch (const error& e) {
    CHECK(e.code() == errc::bad_foliation);
  }
}

TEST_CASE("empty word has nothing to detect") {
  const FoliationWord empty = FoliationWord::validate({});
  CHECK(detect_inessential(empty).empty());
  CHECK(eliminate_inessential_saddles(empty) == empty);
}

TEST_CASE("a spliced finger is detected at its index") {
  const FoliationWord canonical = induced_foliation(spec_over("unknot", 1));
  // circle 1 lives from event 2 (split) to event 3 (merge); splice into that gap
  const FoliationWord finger = fixtures::splice_up_finger(canonical, 3, 3, 1);
  CHECK(finger.size() == canonical.size() + 2);
  CHECK(detect_inessential(finger) == std::vector<std::size_t>{4});
}

TEST_CASE("elimination is the identity on clean words") {
  for (const char* name : {"unknot", "trefoil", "figure-eight"}) {
    const FoliationWord fw = induced_foliation(spec_over(name, 2));
    CHECK(eliminate_inessential_saddles(fw) == fw);
  }
}

TEST_CASE("elimination cancels a finger back to the canonical word") {
  const FoliationWord canonical = induced_foliation(spec_over("trefoil", 2));
  const FoliationWord finger = fixtures::splice_up_finger(canonical, 4, 6, 1);
  REQUIRE(detect_inessential(finger).size() == 1);
  const FoliationWord cleaned = eliminate_inessential_saddles(finger);
  CHECK(detect_inessential(cleaned).empty());
  CHECK(cleaned.size() == canonical.size());
  CHECK(cleaned.normalized() == canonical.normalized());
}

TEST_CASE("two stacked fingers take two eliminations") {
  const FoliationWord canonical = induced_foliation(spec_over("unknot", 2));
  FoliationWord stacked = fixtures::splice_up_finger(canonical, 4, 4, 1);
  stacked = fixtures::splice_up_finger(stacked, 5, 5, 4);  // finger on the finger's bubble
  REQUIRE(detect_inessential(stacked).size() == 2);
  const FoliationWord cleaned = eliminate_inessential_saddles(stacked);
  CHECK(cleaned.normalized() == canonical.normalized());
}

TEST_CASE("downward fingers cancel too") {
  const FoliationWord canonical = induced_foliation(spec_over("figure-eight", 1));
  const FoliationWord finger = fixtures::splice_down_finger(canonical, 3, 5, 1);
  REQUIRE(detect_inessential(finger).size() == 1);
  CHECK(eliminate_inessential_saddles(finger).normalized() == canonical.normalized());
}

TEST_CASE("disk extremum audit") {
  const FoliationWord canonical = induced_foliation(spec_over("trefoil", 2));
  CHECK(disk_extremum_audit(canonical));
  const FoliationWord finger = fixtures::splice_up_finger(canonical, 4, 6, 1);
  CHECK_THROWS_AS(disk_extremum_audit(finger), error);
  CHECK(disk_extremum_audit(eliminate_inessential_saddles(finger)));
}

TEST_CASE("random fixtures: elimination terminates, cleans and preserves the knot", "[property]") {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 50; ++round) {
    const char* names[] = {"unknot", "trefoil", "figure-eight"};
    const SatelliteSpec spec = spec_over(names[round % 3], 1 + round % 3);
    const FoliationWord canonical = induced_foliation(spec);
    const int fingers = 1 + static_cast<int>(rng() % 5);
    const FoliationWord fixture = fixtures::splice_random_fingers(canonical, rng, fingers);
    REQUIRE(static_cast<int>(detect_inessential(fixture).size()) == fingers);

    const FoliationWord cleaned = eliminate_inessential_saddles(fixture);
    REQUIRE(detect_inessential(cleaned).empty());
    REQUIRE(cleaned.size() == fixture.size() - 2 * fingers);
    REQUIRE(cleaned.size() == canonical.size());
    REQUIRE(k_critical_sequence(cleaned) == k_critical_sequence(fixture));
    REQUIRE(disk_extremum_audit(cleaned));
    // a finger's merge may cancel against either adjacent minimum, so the
    // cleaned word can differ from the canonical one by a commutation of
    // independent events; the event census still matches exactly
    for (TorusEvent::Kind kind :
         {TorusEvent::Kind::t_min, TorusEvent::Kind::t_max, TorusEvent::Kind::saddle})
      REQUIRE(count_kind(cleaned, kind) == count_kind(canonical, kind));
    // elimination is idempotent
    REQUIRE(eliminate_inessential_saddles(cleaned) == cleaned);
  }
}

TEST_CASE("fol text round trip is bit exact") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 20; ++round) {
    const SatelliteSpec spec = spec_over(round % 2 ? "trefoil" : "figure-eight", 1 + round % 4);
    FoliationWord fw = induced_foliation(spec);
    if (round % 3 == 0) fw = fixtures::splice_random_fingers(fw, rng, 2);
    const std::string text = to_fol_text(fw);
    const FoliationWord back = parse_fol(text);
    REQUIRE(back == fw);
    REQUIRE(to_fol_text(back) == text);
  }
  // the single-tube word in file form
  const std::string text = "tmin 0\nkcup\nsad e 0 -> 1 2\nsad e 1 2 -> 3\nkcap\ntmax 3\n";
  CHECK(to_fol_text(parse_fol(text)) == text);
  CHECK_THROWS_AS(parse_fol("tmin 0\nsad e 0 -> oops\n"), error);
}
