#include "grasshadri/report.hpp"

#include <sstream>

namespace grasshadri::report {

namespace {

std::string q(const Rational& v) { return to_string(v); }
std::string z(const Integer& v) { return to_string(v); }

Json divisor_json(const std::string& name, const DivisorClass& c, const Integer& theta) {
  const LMCoords lm = to_lm(c, theta);
  Json out;
  out["name"] = name;
  out["taut"] = q(c.taut);
  out["fib"] = q(c.fib);
  out["a"] = q(lm.a);
  out["b"] = q(lm.b);
  return out;
}

Json curve_json(const std::string& name, const CurveClass& c) {
  Json out;
  out["name"] = name;
  out["n_s"] = q(c.n_s);
  out["n_l"] = q(c.n_l);
  return out;
}

Json pieces_json(const HNData& hn) {
  Json pieces = Json::array();
  for (std::size_t i = 1; i <= hn.length(); ++i) {
    const HNPiece& p = hn.piece(i);
    Json piece;
    piece["index"] = i;
    piece["rank"] = p.rank;
    piece["degree"] = z(p.degree);
    piece["slope"] = q(slope(p));
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

Json entry_json(const ExteriorEntry& e, long genus) {
  const SectionCount h = h0_estimate(e.degree, e.trivial, genus);
  Json out;
  out["degree"] = z(e.degree);
  out["trivial"] = e.trivial;
  out["determined"] = e.determined;
  out["count"] = z(e.count);
  out["h0_each"] = z(h.value);
  out["h0_each_exact"] = h.exact;
  return out;
}

std::string_view source_name(RSource s) {
  switch (s) {
    case RSource::Argument: return "argument";
    case RSource::File: return "file";
    case RSource::Inferred: return "inferred";
  }
  return "argument";
}

}  // namespace

Json input_section(const BundleSpec& spec, Rank r, RSource source) {
  Json out;
  out["genus"] = spec.genus;
  if (spec.is_split()) {
    Json summands = Json::array();
    for (const Summand& s : spec.split().summands()) {
      Json item;
      item["degree"] = z(s.degree);
      item["multiplicity"] = s.multiplicity;
      item["trivial"] = s.trivial;
      summands.push_back(std::move(item));
    }
    out["summands"] = std::move(summands);
  } else {
    Json pieces = Json::array();
    for (const HNPiece& p : std::get<HNData>(spec.bundle).pieces()) {
      Json item;
      item["rank"] = p.rank;
      item["degree"] = z(p.degree);
      pieces.push_back(std::move(item));
    }
    out["hn"] = std::move(pieces);
  }
  out["r"] = r;
  out["r_source"] = source_name(source);
  return out;
}

Json hn_section(const HNData& hn) {
  Json out;
  out["pieces"] = pieces_json(hn);
  out["total_rank"] = hn.total_rank();
  out["total_degree"] = z(hn.total_degree());
  out["slope"] = q(slope_of(hn.total_degree(), hn.total_rank()));
  return out;
}

Json level_section(const HNData& hn, Rank r) {
  const LevelSelection level = select_level(hn, r);
  const Normalized norm = normalize_twist(hn, level);
  const QuotientBounds bounds = quotient_degree_bounds(hn, level);
  const HypothesisCheck gap = check_slope_gap(norm.hn, norm.level);
  const AlignedHeadCheck head = check_aligned_head(hn, r);

  Json out;
  Json lvl;
  lvl["m"] = level.m;
  lvl["r"] = level.r;
  lvl["theta"] = z(level.theta);
  out["level"] = std::move(lvl);

  Json nrm;
  nrm["alpha"] = z(norm.alpha);
  nrm["theta"] = z(norm.level.theta);
  nrm["pieces"] = pieces_json(norm.hn);
  out["normalization"] = std::move(nrm);

  if (head.head) {
    Json h;
    h["c"] = head.head->c;
    h["zeta"] = z(head.head->zeta);
    h["zeta_normalized"] = z(head.head->zeta - norm.alpha * static_cast<long>(r));
    out["aligned_head"] = std::move(h);
  } else {
    out["aligned_head"] = nullptr;
  }

  Json qb;
  qb["base"] = q(bounds.base);
  qb["refined"] = q(bounds.refined);
  out["quotient_bounds"] = std::move(qb);

  Json hyp;
  Json g;
  g["holds"] = gap.holds;
  g["slope_gap"] = q(gap.lhs);
  g["theta"] = q(gap.rhs);
  hyp["slope_gap"] = std::move(g);
  Json a;
  a["holds"] = head.holds;
  a["r"] = head.r;
  if (head.head) {
    a["zeta"] = z(head.head->zeta);
    a["divisible"] = head.holds;
  } else {
    a["zeta"] = nullptr;
    a["divisible"] = false;
  }
  hyp["aligned_head"] = std::move(a);
  out["hypotheses"] = std::move(hyp);
  return out;
}

Json cones_section(const HNData& hn, Rank r) {
  const Normalized norm = normalize_twist(hn, select_level(hn, r));
  const Integer& theta = norm.level.theta;
  const auto head = zeta_if_aligned(norm.hn, r);

  Json out;
  Json frame;
  frame["alpha"] = z(norm.alpha);
  frame["theta"] = z(theta);
  frame["zeta"] = head ? Json(z(head->zeta)) : Json(nullptr);
  out["frame"] = std::move(frame);

  const auto nef = nef_generators(theta);
  Json nef_json = Json::array();
  nef_json.push_back(divisor_json("L", nef[0], theta));
  nef_json.push_back(divisor_json("M", nef[1], theta));
  out["nef"] = std::move(nef_json);

  if (head) {
    const auto ps = pseff_generators(head->zeta);
    Json pseff;
    pseff["status"] = "known";
    Json gens = Json::array();
    gens.push_back(divisor_json("L", ps[0], theta));
    gens.push_back(divisor_json("O(1) - zeta L", ps[1], theta));
    pseff["generators"] = std::move(gens);
    out["pseff"] = std::move(pseff);
  } else {
    Json pseff;
    pseff["status"] = "unknown (no aligned level)";
    pseff["generators"] = nullptr;
    out["pseff"] = std::move(pseff);
  }

  const MoriGenerators mori = curve_cone_generators();
  Json mori_json = Json::array();
  mori_json.push_back(curve_json("Gamma_s", mori.gamma_s));
  mori_json.push_back(curve_json("Gamma_l", mori.gamma_l));
  out["mori"] = std::move(mori_json);

  Json matrix = Json::array();
  for (const auto& row : pairing_matrix(theta)) {
    matrix.push_back(Json::array({q(row[0]), q(row[1])}));
  }
  out["pairing_matrix"] = std::move(matrix);
  return out;
}

Json stratum_json(const StratumResult& result) {
  Json out;
  out["stratum"] = stratum_name(result.stratum);
  out["lower"] = q(result.value.lower);
  out["upper"] = q(result.value.upper);
  out["exact"] = result.value.exact();
  return out;
}

Json seshadri_section(const SeshadriReport& report, PointStratum requested) {
  Json out;
  out["a"] = q(report.a);
  out["b"] = q(report.b);
  out["criterion"] = criterion_name(report.criterion);
  out["authoritative"] = report.authoritative();
  Json strata = Json::array();
  for (const StratumResult& s : report.strata) strata.push_back(stratum_json(s));
  out["strata"] = std::move(strata);
  if (report.authoritative()) {
    out["eps_one"] = q(report.eps_one);
    out["eps_inf"] = q(report.eps_inf);
  } else {
    out["eps_one"] = nullptr;
    out["eps_inf"] = nullptr;
    out["note"] = "neither criterion applies; intervals are bounds only";
  }
  out["requested"] = stratum_json(report.at(requested));
  return out;
}

Json oracle_json(const OracleResult& oracle, long box, bool agree) {
  Json out;
  out["box"] = box;
  out["min"] = q(oracle.min);
  Json w;
  w["family"] = family_name(oracle.witness.family);
  w["n_s"] = z(oracle.witness.n_s);
  w["n_l"] = z(oracle.witness.n_l);
  w["mult"] = z(oracle.witness.mult);
  out["witness"] = std::move(w);
  out["verdict"] = agree ? "AGREE" : "DISAGREE";
  return out;
}

Json sections_section(const SplitBundle& bundle, Rank r) {
  const auto entries = exterior_power_degrees(bundle, r);
  Json list = Json::array();
  for (const ExteriorEntry& e : entries) list.push_back(entry_json(e, bundle.genus()));
  const SectionCount total = h0_exterior_power(bundle, r);
  Json out;
  out["r"] = r;
  out["exterior_power"] = std::move(list);
  out["h0"] = z(total.value);
  out["exact"] = total.exact;
  return out;
}

Json unique_divisor_section(const UniqueDivisorReport& report) {
  Json out;
  out["hypothesis_holds"] = report.hypothesis_holds;
  if (!report.hypothesis_holds) {
    out["reason"] = report.head ? "degree of the aligned head is not divisible by r"
                                : "no HN head has rank r";
    return out;
  }
  out["c"] = report.head->c;
  out["zeta"] = z(report.head->zeta);
  out["alpha_twist"] = z(*report.alpha_twist);
  Json cls;
  cls["taut"] = "1";
  cls["fib"] = z(-report.head->zeta);
  out["class"] = std::move(cls);
  out["class_is_effective"] = report.class_is_effective;
  out["unique"] = report.unique;
  if (report.h0) {
    Json list = Json::array();
    for (const ExteriorEntry& e : report.twisted_entries) {
      Json item;
      item["degree"] = z(e.degree);
      item["trivial"] = e.trivial;
      item["determined"] = e.determined;
      item["count"] = z(e.count);
      list.push_back(std::move(item));
    }
    out["twisted_exterior_power"] = std::move(list);
    out["h0"] = z(report.h0->value);
    out["h0_exact"] = report.h0->exact;
  } else {
    out["h0"] = nullptr;
    out["h0_exact"] = false;
  }
  return out;
}

std::string to_json_text(const Json& doc) { return doc.dump(2) + "\n"; }

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

bool is_flat(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  for (const Json& item : v) {
    if (item.is_object() || (item.is_array() && !is_flat(item))) return false;
  }
  return true;
}

std::string flat_text(const Json& v) {
  if (!v.is_array()) return scalar_text(v);
  std::string out = "[";
  bool first = true;
  for (const Json& item : v) {
    if (!first) out += ", ";
    first = false;
    out += flat_text(item);
  }
  return out + "]";
}

void render(const Json& v, int indent, std::ostringstream& os);

void render_object(const Json& obj, int indent, std::ostringstream& os,
                   bool first_inline) {
  bool first = true;
  for (const auto& [key, value] : obj.items()) {
    const int pad = (first && first_inline) ? 0 : indent;
    os << std::string(static_cast<std::size_t>(pad), ' ') << key << ":";
    first = false;
    if (is_flat(value)) {
      os << " " << flat_text(value) << "\n";
    } else {
      os << "\n";
      render(value, indent + 2, os);
    }
  }
}

void render(const Json& v, int indent, std::ostringstream& os) {
  if (v.is_object()) {
    render_object(v, indent, os, false);
    return;
  }
  for (const Json& item : v) {
    os << std::string(static_cast<std::size_t>(indent), ' ') << "- ";
    if (item.is_object()) {
      render_object(item, indent + 2, os, true);
    } else {
      os << flat_text(item) << "\n";
    }
  }
}

}  // namespace

std::string to_plain_text(const Json& doc) {
  std::ostringstream os;
  render(doc, 0, os);
  return os.str();
}

}  // namespace grasshadri::report
