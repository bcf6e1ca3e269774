#include "grasshadri/spec_file.hpp"

#include "grasshadri/error.hpp"

#include "json.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace grasshadri {

using nlohmann::json;

HNData BundleSpec::hn() const {
  if (const auto* split = std::get_if<SplitBundle>(&bundle)) {
    return hn_filtration(*split);
  }
  return std::get<HNData>(bundle);
}

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw Error(ErrorCode::InvalidInput, "field '" + field + "': " + message);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path + key, "missing");
  return *it;
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* k : allowed) known = known || key == k;
    if (!known) fail(path + key, "unknown field");
  }
}

Integer read_integer(const json& value, const std::string& field) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) {
      return Integer(std::to_string(value.get<std::uint64_t>()), 10);
    }
    return Integer(std::to_string(value.get<std::int64_t>()), 10);
  }
  if (value.is_string()) {
    try {
      return parse_integer(value.get<std::string>());
    } catch (const Error& e) {
      fail(field, e.what());
    }
  }
  fail(field, "expected an integer, got " + value.dump());
}

long read_small(const json& value, const std::string& field, long minimum) {
  const Integer z = read_integer(value, field);
  if (!z.fits_slong_p() || z < minimum) {
    fail(field, "expected an integer >= " + std::to_string(minimum) + ", got " +
                    to_string(z));
  }
  return z.get_si();
}

bool read_bool(const json& value, const std::string& field) {
  if (!value.is_boolean()) fail(field, "expected true or false, got " + value.dump());
  return value.get<bool>();
}

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

template <typename Build>
auto construct(const std::string& field, Build build) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidInput) fail(field, e.what());
    throw;
  }
}

}  // namespace

BundleSpec parse_bundle_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidInput,
                "malformed JSON at " + line_col(text, e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::InvalidInput, "top level must be a JSON object");
  }
  reject_unknown(doc, {"genus", "summands", "hn", "r"}, "");

  const long genus = read_small(require(doc, "genus", ""), "genus", 0);
  std::optional<Rank> r;
  if (const auto it = doc.find("r"); it != doc.end()) {
    r = read_small(*it, "r", 1);
  }

  const bool has_summands = doc.contains("summands");
  const bool has_hn = doc.contains("hn");
  if (has_summands == has_hn) {
    throw Error(ErrorCode::InvalidInput,
                "exactly one of 'summands' or 'hn' must be present");
  }

  if (has_summands) {
    const json& list = doc.at("summands");
    if (!list.is_array()) fail("summands", "expected an array");
    std::vector<Summand> summands;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string path = "summands[" + std::to_string(i) + "].";
      const json& item = list[i];
      if (!item.is_object()) fail(path.substr(0, path.size() - 1), "expected an object");
      reject_unknown(item, {"degree", "multiplicity", "trivial"}, path);
      Summand s;
      s.degree = read_integer(require(item, "degree", path), path + "degree");
      if (const auto it = item.find("multiplicity"); it != item.end()) {
        s.multiplicity = read_small(*it, path + "multiplicity", 1);
      }
      if (const auto it = item.find("trivial"); it != item.end()) {
        s.trivial = read_bool(*it, path + "trivial");
      }
      summands.push_back(std::move(s));
    }
    return {genus,
            construct("summands", [&] { return SplitBundle(std::move(summands), genus); }),
            r};
  }

  const json& list = doc.at("hn");
  if (!list.is_array()) fail("hn", "expected an array");
  std::vector<HNPiece> pieces;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = "hn[" + std::to_string(i) + "].";
    const json& item = list[i];
    if (!item.is_object()) fail(path.substr(0, path.size() - 1), "expected an object");
    reject_unknown(item, {"rank", "degree"}, path);
    HNPiece p;
    p.rank = read_small(require(item, "rank", path), path + "rank", 1);
    p.degree = read_integer(require(item, "degree", path), path + "degree");
    pieces.push_back(std::move(p));
  }
  return {genus, construct("hn", [&] { return HNData(std::move(pieces), genus); }), r};
}

BundleSpec load_bundle_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_bundle_spec(buffer.str());
}

}  // namespace grasshadri
