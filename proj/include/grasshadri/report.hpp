#pragma once

// Machine-readable report sections. Field order is fixed by construction
// (ordered_json), every degree-like value is a "p/q" or "p" string, and
// ranks and indices are JSON integers. The text rendering walks the same
// document, so both carry identical numeric content.

#include "grasshadri/ns_lattice.hpp"
#include "grasshadri/seshadri.hpp"
#include "grasshadri/spec_file.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace grasshadri::report {

using Json = nlohmann::ordered_json;

enum class RSource { Argument, File, Inferred };

Json input_section(const BundleSpec& spec, Rank r, RSource source);
Json hn_section(const HNData& hn);
/// Level, normalization, aligned head, quotient bounds and both criteria.
Json level_section(const HNData& hn, Rank r);
/// Generators in the normalized frame, in both bases, and the pairing matrix.
Json cones_section(const HNData& hn, Rank r);
Json stratum_json(const StratumResult& result);
Json seshadri_section(const SeshadriReport& report, PointStratum requested);
Json oracle_json(const OracleResult& oracle, long box, bool agree);
Json sections_section(const SplitBundle& bundle, Rank r);
Json unique_divisor_section(const UniqueDivisorReport& report);

/// Canonical serialization: two-space indent, trailing newline.
std::string to_json_text(const Json& doc);
std::string to_plain_text(const Json& doc);

}  // namespace grasshadri::report
