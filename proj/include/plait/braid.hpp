#pragma once

// Braid patterns in the solid torus. A braid of index n meets every meridian
// disk in exactly n points, so its winding number equals the index.

#include <cstddef>
#include <istream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "plait/error.hpp"
#include "plait/morse.hpp"

namespace plait {

struct BraidLetter {
  int generator = 1;  // 1-based, in {1, ..., index-1}
  bool positive = true;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

class BraidWord {
 public:
  static BraidWord validate(int index, std::vector<BraidLetter> letters) {
    if (index < 1) throw error(errc::parse_error, "braid index must be at least 1");
    for (std::size_t i = 0; i < letters.size(); ++i)
      if (letters[i].generator < 1 || letters[i].generator > index - 1)
        throw error(errc::invalid_position,
                    "generator " + std::to_string(letters[i].generator) + " out of range for index " +
                        std::to_string(index),
                    i);
    return BraidWord(index, std::move(letters));
  }

  int index() const { return index_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  BraidWord(int index, std::vector<BraidLetter> letters) : index_(index), letters_(std::move(letters)) {}
  int index_ = 1;
  std::vector<BraidLetter> letters_;
};

inline int winding_number(const BraidWord& b) { return b.index(); }

// Strand permutation of the word: perm[i] = where strand starting at i ends.
inline std::vector<int> braid_permutation(const BraidWord& b) {
  std::vector<int> where(b.index());  // where[i] = current position of strand i
  std::iota(where.begin(), where.end(), 0);
  for (const BraidLetter& l : b.letters())
    for (int& p : where) {
      if (p == l.generator - 1) p = l.generator;
      else if (p == l.generator) p = l.generator - 1;
    }
  return where;
}

inline bool is_single_cycle(const std::vector<int>& perm) {
  if (perm.empty()) return false;
  int at = 0;
  for (std::size_t steps = 1; steps < perm.size(); ++steps) {
    at = perm[at];
    if (at == 0) return false;  // closed early
  }
  return perm[at] == 0;
}

// Plat-style closure: n nested cups, the letters as crossings on the braid
// half of the row, n nested caps. The closure has one component exactly when
// the braid permutation is an n-cycle.
inline MorsePresentation braid_closure(const BraidWord& b) {
  const int n = b.index();
  std::vector<MorseEvent> events;
  for (int i = 0; i < n; ++i) events.push_back(cup(i));
  for (const BraidLetter& l : b.letters()) {
    const int p = (n - 1) + l.generator;
    events.push_back(l.positive ? cross_pos(p) : cross_neg(p));
  }
  for (int i = n - 1; i >= 0; --i) events.push_back(cap(i));
  return MorsePresentation::validate(std::move(events));
}

// ---------------------------------------------------------------------------
// .braid format: `index <n>` first, then one letter per line, `s+ <j>` or
// `s- <j>` with 1 <= j <= n-1; `#` comments; blank lines ignored.

inline std::string to_braid_text(const BraidWord& b) {
  std::string out = "index " + std::to_string(b.index()) + "\n";
  for (const BraidLetter& l : b.letters()) {
    out += l.positive ? "s+ " : "s- ";
    out += std::to_string(l.generator);
    out += '\n';
  }
  return out;
}

inline BraidWord parse_braid(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_index = false;
  int index = 0;
  std::vector<BraidLetter> letters;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<std::string> tok = detail::tokens(detail::strip_comment(line));
    if (tok.empty()) continue;
    if (!have_index) {
      if (tok.size() != 2 || tok[0] != "index")
        throw error(errc::parse_error, "expected 'index <n>' on the first line", line_no);
      index = detail::parse_int(tok[1], line_no, "an index");
      have_index = true;
      continue;
    }
    if (tok.size() != 2 || (tok[0] != "s+" && tok[0] != "s-"))
      throw error(errc::parse_error, "expected 's+ <j>' or 's- <j>'", line_no);
    letters.push_back({detail::parse_int(tok[1], line_no, "a generator"), tok[0] == "s+"});
  }
  if (!have_index) throw error(errc::parse_error, "missing 'index <n>' line", line_no);
  return BraidWord::validate(index, std::move(letters));
}

inline BraidWord parse_braid(const std::string& text) {
  std::istringstream in(text);
  return parse_braid(in);
}

// Inline form used on the command line: semicolons for newlines, e.g.
// "index 2; s+ 1".
inline BraidWord parse_braid_inline(const std::string& text) {
  std::string multi = text;
  for (char& c : multi)
    if (c == ';') c = '\n';
  return parse_braid(multi);
}

}  // namespace plait
