#pragma once

// Bundle specification files (JSON):
//
//   { "genus": 1,
//     "summands": [ {"degree": -1, "multiplicity": 1},
//                   {"degree": 0, "multiplicity": 3, "trivial": true} ],
//     "r": 1 }
//
// or, instead of "summands", "hn": [ {"rank": 3, "degree": 0}, ... ] listing
// the HN graded pieces in order. Degrees may be JSON integers or decimal
// strings (for values outside 64 bits). "r" is optional.

#include "grasshadri/hn_core.hpp"

#include <optional>
#include <string>
#include <variant>

namespace grasshadri {

struct BundleSpec {
  long genus = 0;
  std::variant<SplitBundle, HNData> bundle;
  std::optional<Rank> r;

  bool is_split() const { return std::holds_alternative<SplitBundle>(bundle); }
  const SplitBundle& split() const { return std::get<SplitBundle>(bundle); }
  HNData hn() const;
};

/// Throws Error(InvalidInput) with a line/column or field path in the
/// message; constructor validation errors are prefixed with the field.
BundleSpec parse_bundle_spec(const std::string& text);
BundleSpec load_bundle_spec(const std::string& path);

}  // namespace grasshadri
