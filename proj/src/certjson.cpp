#include "wqoim/certjson.hpp"

#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace wqoim {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("json: malformed document");
  return j;
}

void require_keys(const json& j, const std::set<std::string>& allowed,
                  const std::set<std::string>& required) {
  if (!j.is_object()) throw std::invalid_argument("json: expected an object");
  for (const auto& item : j.items())
    if (!allowed.count(item.key()))
      throw std::invalid_argument("json: unknown field '" + item.key() + "'");
  for (const auto& key : required)
    if (!j.contains(key)) throw std::invalid_argument("json: missing field '" + key + "'");
}

void require_schema(const json& j) {
  if (!j.at("schema").is_number_integer() || j.at("schema").get<int>() != 1)
    throw std::invalid_argument("json: unsupported schema");
}

json vertices_to_json(std::uint64_t mask) {
  json out = json::array();
  for (; mask != 0; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

std::uint64_t vertices_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("json: expected a vertex array");
  std::uint64_t mask = 0;
  for (const auto& item : j) {
    if (!item.is_number_integer()) throw std::invalid_argument("json: vertex must be an integer");
    const int v = item.get<int>();
    if (v < 0 || v >= Graph::max_vertices)
      throw std::invalid_argument("json: vertex out of range");
    if (mask & (std::uint64_t{1} << v)) throw std::invalid_argument("json: repeated vertex");
    mask |= std::uint64_t{1} << v;
  }
  return mask;
}

std::vector<int> int_list_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("json: expected an array of integers");
  std::vector<int> out;
  for (const auto& item : j) {
    if (!item.is_number_integer()) throw std::invalid_argument("json: expected an integer");
    out.push_back(item.get<int>());
  }
  return out;
}

json model_to_json_value(const ContainmentModel& m) {
  json sets = json::object();
  for (std::size_t p = 0; p < m.branch_sets.size(); ++p)
    sets[std::to_string(p)] = vertices_to_json(m.branch_sets[p]);
  return sets;
}

ContainmentModel model_from_json_value(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("json: model must be an object");
  ContainmentModel m;
  m.branch_sets.assign(j.size(), 0);
  for (const auto& item : j.items()) {
    std::size_t parsed = 0;
    int p = -1;
    try {
      p = std::stoi(item.key(), &parsed);
    } catch (const std::exception&) {
      throw std::invalid_argument("json: model keys must be pattern vertex ids");
    }
    if (parsed != item.key().size() || p < 0 || p >= static_cast<int>(j.size()))
      throw std::invalid_argument("json: model keys must be 0..k-1");
    m.branch_sets[static_cast<std::size_t>(p)] = vertices_from_json(item.value());
  }
  return m;
}

}  // namespace

std::string model_to_json(const ContainmentModel& m) {
  json j;
  j["schema"] = 1;
  j["model"] = model_to_json_value(m);
  return j.dump();
}

ContainmentModel model_from_json(const std::string& text) {
  const json j = parse(text);
  require_keys(j, {"schema", "model"}, {"schema", "model"});
  require_schema(j);
  return model_from_json_value(j.at("model"));
}

std::string k4hat_cert_to_json(const K4HatCertificate& cert) {
  json j;
  j["schema"] = 1;
  switch (cert.kind) {
    case K4HatCase::K4Free:
      j["case"] = "k4-free";
      break;
    case K4HatCase::SubdivisionOf:
      j["case"] = "subdivision";
      j["base"] = cert.base == SubdivisionBase::K4    ? "k4"
                  : cert.base == SubdivisionBase::K33 ? "k33"
                                                      : "prism";
      j["branch_map"] = cert.branch_map;
      break;
    case K4HatCase::CycleMultipartite: {
      j["case"] = "cycle-multipartite";
      j["cycle"] = cert.cycle;
      j["rest"] = vertices_to_json(cert.rest);
      json parts = json::array();
      for (std::uint64_t part : cert.parts) parts.push_back(vertices_to_json(part));
      j["parts"] = parts;
      break;
    }
  }
  return j.dump();
}

K4HatCertificate k4hat_cert_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("case"))
    throw std::invalid_argument("json: certificate needs a case");
  if (!j.at("case").is_string()) throw std::invalid_argument("json: case must be a string");
  const std::string kind = j.at("case").get<std::string>();
  K4HatCertificate cert;
  if (kind == "k4-free") {
    require_keys(j, {"schema", "case"}, {"schema", "case"});
    require_schema(j);
    cert.kind = K4HatCase::K4Free;
  } else if (kind == "subdivision") {
    require_keys(j, {"schema", "case", "base", "branch_map"},
                 {"schema", "case", "base", "branch_map"});
    require_schema(j);
    cert.kind = K4HatCase::SubdivisionOf;
    const std::string base = j.at("base").is_string() ? j.at("base").get<std::string>() : "";
    if (base == "k4") cert.base = SubdivisionBase::K4;
    else if (base == "k33") cert.base = SubdivisionBase::K33;
    else if (base == "prism") cert.base = SubdivisionBase::Prism;
    else throw std::invalid_argument("json: unknown subdivision base");
    cert.branch_map = int_list_from_json(j.at("branch_map"));
  } else if (kind == "cycle-multipartite") {
    require_keys(j, {"schema", "case", "cycle", "rest", "parts"},
                 {"schema", "case", "cycle", "rest", "parts"});
    require_schema(j);
    cert.kind = K4HatCase::CycleMultipartite;
    cert.cycle = int_list_from_json(j.at("cycle"));
    cert.rest = vertices_from_json(j.at("rest"));
    if (!j.at("parts").is_array()) throw std::invalid_argument("json: parts must be an array");
    for (const auto& part : j.at("parts")) cert.parts.push_back(vertices_from_json(part));
  } else {
    throw std::invalid_argument("json: unknown certificate case");
  }
  return cert;
}

std::string gem_cert_to_json(const GemCertificate& cert) {
  json j;
  j["schema"] = 1;
  j["case"] = "deletion-set";
  j["x"] = cert.x;
  json pieces = json::array();
  for (const auto& piece : cert.pieces) {
    json p;
    p["vertices"] = vertices_to_json(piece.vertices);
    p["tag"] = piece.tag == BasicTag::Cograph ? "cograph" : "degree-2-path";
    pieces.push_back(p);
  }
  j["pieces"] = pieces;
  return j.dump();
}

GemCertificate gem_cert_from_json(const std::string& text) {
  const json j = parse(text);
  require_keys(j, {"schema", "case", "x", "pieces"}, {"schema", "case", "x", "pieces"});
  require_schema(j);
  if (!j.at("case").is_string() || j.at("case").get<std::string>() != "deletion-set")
    throw std::invalid_argument("json: unknown certificate case");
  GemCertificate cert;
  cert.x = int_list_from_json(j.at("x"));
  if (!j.at("pieces").is_array()) throw std::invalid_argument("json: pieces must be an array");
  for (const auto& p : j.at("pieces")) {
    require_keys(p, {"vertices", "tag"}, {"vertices", "tag"});
    GemCertificate::Piece piece;
    piece.vertices = vertices_from_json(p.at("vertices"));
    const std::string tag = p.at("tag").is_string() ? p.at("tag").get<std::string>() : "";
    if (tag == "cograph") piece.tag = BasicTag::Cograph;
    else if (tag == "degree-2-path") piece.tag = BasicTag::Degree2Path;
    else throw std::invalid_argument("json: unknown piece tag");
    cert.pieces.push_back(piece);
  }
  return cert;
}

std::string verdict_to_json(const WqoVerdict& v, const FilterReport& filter) {
  json j;
  j["schema"] = 1;
  if (v.wqo) {
    j["verdict"] = "wqo";
    j["witness"] = v.witness == WqoWitness::Gem ? "gem" : "k4hat";
    j["model"] = model_to_json_value(v.model);
  } else {
    j["verdict"] = "not-wqo";
    j["reasons"] = v.reasons;
    json f;
    f["linear-forest"] = filter.linear_forest;
    f["r1"] = filter.r1;
    f["r2"] = filter.r2;
    f["r3"] = filter.r3;
    f["r4"] = filter.r4;
    f["r5"] = filter.r5;
    f["r6"] = filter.r6;
    j["filter"] = f;
  }
  return j.dump();
}

std::string incomparability_report_to_json(const IncomparabilityReport& r) {
  json j;
  j["schema"] = 1;
  j["family"] = family_name(r.family);
  j["count"] = r.count;
  j["budget"] = r.budget;
  json pairs = json::array();
  for (const auto& pair : r.pairs) {
    json p;
    p["a"] = pair.index_a;
    p["b"] = pair.index_b;
    p["outcome"] = pair.outcome == PairOutcome::Incomparable ? "incomparable"
                   : pair.outcome == PairOutcome::Comparable ? "comparable"
                                                             : "unknown";
    p["nodes"] = pair.nodes;
    if (pair.model) p["model"] = model_to_json_value(*pair.model);
    pairs.push_back(p);
  }
  j["pairs"] = pairs;
  j["all-incomparable"] = r.all_incomparable();
  return j.dump();
}

}  // namespace wqoim
