#pragma once

// Bundled companion knots as plat words. These are fixtures with declared
// invariants, not knot-type certificates; the declared numbers are checked
// against the computed ones the first time the catalog is used.

#include <stdexcept>
#include <string>
#include <vector>

#include "plait/morse.hpp"

namespace plait {

struct CatalogEntry {
  std::string name;
  std::string morse_text;
  long long declared_bridge = 0;
  long long declared_width = 0;
  bool two_bridge = false;

  MorsePresentation word() const { return parse_morse(morse_text); }
};

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> all{
        {"unknot", "cup 0\ncap 0\n", 1, 2, false},
        {"trefoil", "cup 0\ncup 2\nx+ 1\nx+ 1\nx+ 1\ncap 1\ncap 0\n", 2, 8, true},
        {"figure-eight", "cup 0\ncup 2\nx+ 1\nx- 0\nx+ 1\nx- 0\ncap 1\ncap 0\n", 2, 8, true},
    };
    for (const CatalogEntry& e : all) {
      const MorsePresentation p = e.word();
      if (bridge_count(p) != e.declared_bridge || width(p) != e.declared_width)
        throw std::logic_error("catalog self-check failed for '" + e.name + "'");
      if (e.two_bridge && (e.declared_bridge != 2 || e.declared_width != 8))
        throw std::logic_error("catalog entry '" + e.name + "' mislabeled as two-bridge");
    }
    return all;
  }();
  return entries;
}

inline const CatalogEntry* find_catalog(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace plait
