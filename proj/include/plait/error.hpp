#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace plait {

// Every failure mode the library can report. CLI maps these onto exit codes.
enum class errc {
  // Morse word validation
  empty_word,
  negative_strands,
  non_zero_end,
  invalid_position,
  multi_component,
  // file/text parsing
  parse_error,
  // satellite construction
  not_a_knot,
  invalid_site,
  // foliation words
  bad_foliation,
  non_cancelable,
  inessential_saddles_present,
  // level spheres / connectivity graphs
  bad_level_sphere,
  not_a_tree,
  no_witness,
  // search moves
  illegal_move,
  // bound audits
  bound_violation,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::empty_word: return "EmptyWord";
    case errc::negative_strands: return "NegativeStrands";
    case errc::non_zero_end: return "NonZeroEnd";
    case errc::invalid_position: return "InvalidPosition";
    case errc::multi_component: return "MultiComponent";
    case errc::parse_error: return "ParseError";
    case errc::not_a_knot: return "NotAKnot";
    case errc::invalid_site: return "InvalidSite";
    case errc::bad_foliation: return "BadFoliation";
    case errc::non_cancelable: return "NonCancelable";
    case errc::inessential_saddles_present: return "InessentialSaddlesPresent";
    case errc::bad_level_sphere: return "BadLevelSphere";
    case errc::not_a_tree: return "NotATree";
    case errc::no_witness: return "NoWitness";
    case errc::illegal_move: return "IllegalMove";
    case errc::bound_violation: return "BoundViolation";
  }
  return "Unknown";
}

// Structured rejection: code + message, plus the offending event index or
// input line when one exists.
class error : public std::runtime_error {
 public:
  error(errc code, std::string message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  error(errc code, std::string message, std::size_t where)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code), where_(where) {}

  errc code() const noexcept { return code_; }

  // Event index for word errors, 1-based line number for parse errors.
  std::optional<std::size_t> where() const noexcept { return where_; }

 private:
  errc code_;
  std::optional<std::size_t> where_;
};

}  // namespace plait
