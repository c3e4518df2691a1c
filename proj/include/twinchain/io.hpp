#pragma once

// Reading poset pairs and writing facet families.
//
// Line format, one record per poset, P first:
//
//   # comment
//   d = 3
//   3 < 1
//   3 < 2
//   d = 3
//   2 < 1
//
// Each "i < j" line is a cover (any comparability is accepted; the order is
// closed transitively). The JSON alternative is
//   {"P": {"d": 3, "covers": [[3, 1], [3, 2]]}, "Q": {...}}
// or a two-element array [P, Q]; "relation" may be used instead of "covers".

#include <filesystem>
#include <string>
#include <string_view>

#include "twinchain/poset.hpp"
#include "twinchain/twinned.hpp"

namespace twinchain {

struct PosetPair {
  Poset p;
  Poset q;
};

/// Parses either format (JSON when the first non-blank character is '{' or
/// '['). Errors name the offending field, e.g. "Q.d" or "P line 4".
/// Throws ParseError, CycleError, IndexError or DimensionMismatch.
PosetPair parse_pair(std::string_view text);
/// Throws IoError if the file cannot be read, otherwise as parse_pair.
PosetPair read_pair_file(const std::filesystem::path& path);

/// Line format with the cover relations of both posets.
std::string format_pair(const Poset& p, const Poset& q);

/// One chain per line, "P: [1, 3] Q: [2]", or one JSON object per line with
/// keys "P" and "Q".
std::string format_family(const FacetFamily& family, bool json);

}  // namespace twinchain
