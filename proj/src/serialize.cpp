#include "planarlab/serialize.hpp"

#include <string_view>

#include "planarlab/error.hpp"

namespace planarlab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::SyntaxError, what); }

Word word_at(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) bad(std::string("missing hex string '") + key + "'");
  return parse_hex_word(j[key].get<std::string>());
}

std::uint32_t uint_at(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) bad(std::string("missing unsigned '") + key + "'");
  return j[key].get<std::uint32_t>();
}

Json hex_map(const std::map<unsigned, std::int64_t>& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

}  // namespace

Field parse_field_spec(const std::string& spec) {
  std::optional<unsigned> m;
  std::optional<Word> modulus;
  std::string_view rest(spec);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) bad("field spec item '" + std::string(item) + "' lacks '='");
    const std::string key(item.substr(0, eq));
    const std::string value(item.substr(eq + 1));
    if (key == "m") {
      if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos || value.size() > 3)
        bad("field degree '" + value + "' is not a small integer");
      m = static_cast<unsigned>(std::stoul(value));
    } else if (key == "modulus") {
      modulus = parse_hex_word(value);
    } else {
      bad("unknown field spec key '" + key + "'");
    }
  }
  if (!m) bad("field spec '" + spec + "' lacks m=");
  return Field::make(*m, modulus);
}

Json to_json(const Field& field) {
  return {{"m", field.m()}, {"modulus", hex_word(field.modulus())}, {"q", field.q()}};
}

Json to_json(const BiPoly& g) {
  Json out = Json::array();
  for (const Term& t : g.terms()) out.push_back(Json::array({t.mono.a, t.mono.b, hex_word(t.coeff)}));
  return out;
}

BiPoly bipoly_from_json(const Field& field, const Json& j) {
  if (!j.is_array()) bad("polynomial must be a list of [a, b, coeff] triples");
  std::vector<Term> terms;
  for (const Json& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() || !t[1].is_number_unsigned() || !t[2].is_string())
      bad("malformed term " + t.dump());
    const Word c = parse_hex_word(t[2].get<std::string>());
    if (c > field.mask()) throw Error(ErrorCode::CoefficientOutOfRange, "coefficient " + hex_word(c) + " outside field");
    terms.push_back(Term{{t[0].get<std::uint32_t>(), t[1].get<std::uint32_t>()}, c});
  }
  return BiPoly::from_terms(field, std::move(terms));
}

Json to_json(const HomogeneousForm& h) { return {{"degree", h.degree()}, {"terms", to_json(h.poly())}}; }

HomogeneousForm cone_from_json(const Field& field, const Json& j) {
  if (!j.is_object() || !j.contains("terms")) bad("tangent cone must be an object with 'terms'");
  HomogeneousForm h(bipoly_from_json(field, j["terms"]));
  if (j.contains("degree") && j["degree"] != h.degree()) bad("tangent cone degree does not match its terms");
  return h;
}

Json to_json(const TransformStep& s) {
  Json out = {{"kind", kind_name(s.kind)}};
  switch (s.kind) {
    case TransformStep::Kind::SubXByXYDivY:
    case TransformStep::Kind::SubYByXYDivX: out["n"] = s.n; break;
    case TransformStep::Kind::ShearY: out["c"] = hex_word(s.c); break;
    case TransformStep::Kind::ShiftX: out["x0"] = hex_word(s.c); break;
    case TransformStep::Kind::SubXByXYPowDivY:
      out["e"] = s.e;
      out["n"] = s.n;
      break;
  }
  return out;
}

TransformStep step_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) bad("step lacks 'kind'");
  const auto kind = kind_from_name(j["kind"].get<std::string>());
  if (!kind) bad("unknown step kind " + j["kind"].dump());
  switch (*kind) {
    case TransformStep::Kind::SubXByXYDivY: return TransformStep::sub_x_xy_div_y(uint_at(j, "n"));
    case TransformStep::Kind::SubYByXYDivX: return TransformStep::sub_y_xy_div_x(uint_at(j, "n"));
    case TransformStep::Kind::ShearY: return TransformStep::shear_y(word_at(j, "c"));
    case TransformStep::Kind::ShiftX: return TransformStep::shift_x(word_at(j, "x0"));
    case TransformStep::Kind::SubXByXYPowDivY: return TransformStep::sub_x_xypow(uint_at(j, "e"), uint_at(j, "n"));
  }
  bad("unknown step kind");
}

Json to_json(const LinearFactor& lf) {
  return {{"a", hex_word(lf.a)}, {"b", hex_word(lf.b)}, {"multiplicity", lf.multiplicity}};
}

Json to_json(const Certificate& cert) {
  const Field& F = cert.f.field();
  const auto d = static_cast<std::uint64_t>(cert.f.degree());
  Json steps = Json::array();
  for (const TransformStep& s : cert.steps) steps.push_back(to_json(s));
  return {
      {"source", to_string(cert.source)},
      {"branch", to_string(cert.branch)},
      {"steps", std::move(steps)},
      {"terminal_cone", to_json(cert.terminal_cone)},
      {"factor", to_json(cert.factor)},
      {"consequence",
       {{"abs_irred", true}, {"not_planar_if", "d<=q^(1/4)"}, {"degree_in_range", d * d * d * d <= F.q()}}},
      {"field", to_json(F)},
      {"f", cert.f.to_string()},
      {"d", d},
      {"q", F.q()},
  };
}

Certificate certificate_from_json(const Json& j) {
  if (!j.is_object()) bad("certificate must be a JSON object");
  for (const char* key : {"source", "branch", "steps", "terminal_cone", "factor", "field", "f"})
    if (!j.contains(key)) bad(std::string("certificate lacks '") + key + "'");
  const Json& fj = j["field"];
  if (!fj.is_object() || !fj.contains("m") || !fj["m"].is_number_unsigned()) bad("certificate field lacks m");
  const Field field = Field::make(fj["m"].get<unsigned>(), fj.contains("modulus") ? std::optional<Word>(word_at(fj, "modulus"))
                                                                                  : std::nullopt);
  if (!j["source"].is_string() || !j["branch"].is_string() || !j["f"].is_string() || !j["steps"].is_array())
    bad("certificate fields have the wrong type");
  const auto source = source_from_string(j["source"].get<std::string>());
  const auto branch = branch_from_string(j["branch"].get<std::string>());
  if (!source) bad("unknown source " + j["source"].dump());
  if (!branch) bad("unknown branch " + j["branch"].dump());
  std::vector<TransformStep> steps;
  for (const Json& s : j["steps"]) steps.push_back(step_from_json(s));
  const Json& fac = j["factor"];
  LinearFactor factor{word_at(fac, "a"), word_at(fac, "b"), fac.contains("multiplicity") ? uint_at(fac, "multiplicity") : 1u};
  return Certificate{*source,
                     *branch,
                     std::move(steps),
                     cone_from_json(field, j["terminal_cone"]),
                     factor,
                     parse_unipoly(j["f"].get<std::string>(), field)};
}

Json to_json(const CurveStats& s) {
  Json lines = Json::array();
  for (const Line& l : s.excluded_lines) lines.push_back(l.describe());
  Json degenerate = Json::array();
  for (Word x : s.degenerate_lines) degenerate.push_back(hex_word(x));
  return {{"q", s.q},
          {"d", s.d},
          {"total_points", s.total_points},
          {"off_line_points", s.off_line_points},
          {"hw_total", s.hw_total},
          {"hw_off_lines", s.hw_off_lines},
          {"excluded_lines", std::move(lines)},
          {"degenerate_lines", std::move(degenerate)}};
}

Json to_json(const PlanarityVerdict& v) {
  Json out = {{"holds", v.holds}, {"witness_epsilon", nullptr}, {"witness_pair", nullptr}};
  if (v.witness_epsilon) out["witness_epsilon"] = hex_word(*v.witness_epsilon);
  if (v.witness_pair) out["witness_pair"] = Json::array({hex_word(v.witness_pair->first), hex_word(v.witness_pair->second)});
  return out;
}

Json to_json(const PipelineReport& r) {
  Json status = Json::array();
  for (const auto& [name, s] : r.lemma_status) status.push_back({{"checkpoint", name}, {"status", to_string(s)}});
  Json z = Json::object();
  for (const auto& [k, v] : r.z_table) z[std::to_string(k)] = v;
  Json shears = Json::array();
  for (Word c : r.shear_constants) shears.push_back(hex_word(c));
  Json out = {
      {"d", r.d},
      {"nu_d", r.nu_d},
      {"t", r.t},
      {"n_seq", r.n_seq},
      {"u", nullptr},
      {"sum_n_identity", nullptr},
      {"o_table", hex_map(r.o_table)},
      {"e_table", hex_map(r.e_table)},
      {"z_table", std::move(z)},
      {"m", nullptr},
      {"lemma_status", std::move(status)},
      {"cone_Ft", nullptr},
      {"F_t2", nullptr},
      {"cone_Ft2", nullptr},
      {"shear_constants", std::move(shears)},
      {"images_checked", r.images_checked},
      {"certificate", nullptr},
      {"violation", nullptr},
  };
  if (r.u) out["u"] = *r.u;
  if (r.sum_n_identity) out["sum_n_identity"] = *r.sum_n_identity;
  if (r.m) out["m"] = *r.m;
  if (r.cone_ft) out["cone_Ft"] = to_json(*r.cone_ft);
  if (r.f_t2) out["F_t2"] = to_json(*r.f_t2);
  if (r.cone_ft2) out["cone_Ft2"] = to_json(*r.cone_ft2);
  if (r.certificate) out["certificate"] = to_json(*r.certificate);
  if (r.violation) out["violation"] = *r.violation;
  return out;
}

Json to_json(const ApnRefutation& r) {
  Json out = {{"status", r.status == ApnRefutation::Status::Confirmed ? "CONFIRMED" : "INCONCLUSIVE"},
              {"reason", r.reason},
              {"degree_in_range", r.degree_in_range},
              {"stats", to_json(r.stats)},
              {"certificate", nullptr}};
  if (r.certificate) out["certificate"] = to_json(*r.certificate);
  return out;
}

Json to_json(const VerifyResult& v) { return {{"valid", v.valid}, {"reason", v.reason}}; }

Json to_json(const CatalogReport& r) {
  Json out = Json::array();
  for (const CatalogEntry& e : r.entries)
    out.push_back({{"function_table_hash", e.table_hash}, {"is_two_poly", e.is_two_poly}, {"sample_poly", e.sample_poly.to_string()}});
  return out;
}

}  // namespace planarlab
