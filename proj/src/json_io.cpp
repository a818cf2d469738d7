#include "eac/json_io.hpp"

#include <algorithm>

namespace eac::json_io {
namespace {

[[noreturn]] void parse_fail(const std::string& message) {
  fail(Errc::ParseError, message);
}

int require_int(const Json& doc, const char* field) {
  if (!doc.contains(field) || !doc[field].is_number_integer())
    parse_fail(std::string("missing or non-integer field \"") + field + "\"");
  return doc[field].get<int>();
}

std::vector<int> int_list(const Json& node, const char* what) {
  if (!node.is_array()) parse_fail(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : node) {
    if (!v.is_number_integer())
      parse_fail(std::string(what) + " must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

ElemSet parse_elemset(const Json& node, const char* what) {
  ElemSet s;
  for (int e : int_list(node, what)) {
    if (e < 1 || e > ElemSet::kMaxGroundSize)
      parse_fail(std::string(what) + " holds element " + std::to_string(e) +
                 " outside 1.." + std::to_string(ElemSet::kMaxGroundSize));
    s.add(e);
  }
  return s;
}

GroundOrder parse_order(const Json& doc, int n) {
  if (!doc.contains("order")) return GroundOrder::natural(ElemSet::full(n));
  return GroundOrder::of_sequence(int_list(doc["order"], "order"));
}

}  // namespace

OrderedMatroid parse_matroid(const Json& doc) {
  if (!doc.is_object()) parse_fail("matroid descriptor must be an object");
  if (!doc.contains("type") || !doc["type"].is_string())
    parse_fail("matroid descriptor needs a string \"type\"");
  const std::string type = doc["type"].get<std::string>();

  if (type == "bases") {
    int n = require_int(doc, "n");
    if (n < 0 || n > ElemSet::kMaxGroundSize)
      parse_fail("n outside 0.." + std::to_string(ElemSet::kMaxGroundSize));
    if (!doc.contains("bases") || !doc["bases"].is_array())
      parse_fail("bases descriptor needs an array \"bases\"");
    std::vector<ElemSet> bases;
    for (const auto& b : doc["bases"]) bases.push_back(parse_elemset(b, "basis"));
    return OrderedMatroid::from_bases(n, parse_order(doc, n), std::move(bases));
  }
  if (type == "graph") {
    int vertices = require_int(doc, "vertices");
    if (!doc.contains("edges") || !doc["edges"].is_array())
      parse_fail("graph descriptor needs an array \"edges\"");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc["edges"]) {
      std::vector<int> pair = int_list(e, "edge");
      if (pair.size() != 2) parse_fail("each edge must be a pair of vertices");
      edges.emplace_back(pair[0], pair[1]);
    }
    OrderedMatroid m = OrderedMatroid::from_graph(vertices, edges);
    if (doc.contains("order"))
      return m.with_order(
          GroundOrder::of_sequence(int_list(doc["order"], "order")));
    return m;
  }
  if (type == "uniform") {
    int n = require_int(doc, "n");
    int k = require_int(doc, "k");
    OrderedMatroid m = OrderedMatroid::uniform(n, k);
    if (doc.contains("order"))
      return m.with_order(
          GroundOrder::of_sequence(int_list(doc["order"], "order")));
    return m;
  }
  parse_fail("unknown matroid type \"" + type + "\"");
}

OrderedMatroid parse_matroid_text(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) parse_fail("input is not valid JSON");
  return parse_matroid(doc);
}

Json elemset_to_json(ElemSet s) {
  Json out = Json::array();
  for (int e : s) out.push_back(e);
  return out;
}

Json face_to_json(const SimplicialComplex& k, std::uint64_t mask) {
  std::vector<int> plain, barred;
  for (int i = 0; i < k.slots; ++i) {
    if (!((mask >> i) & 1)) continue;
    int lab = k.labels[static_cast<std::size_t>(i)];
    (lab > 0 ? plain : barred).push_back(lab);
  }
  std::sort(plain.begin(), plain.end());
  std::sort(barred.begin(), barred.end(), [](int a, int b) { return -a < -b; });
  Json out = Json::array();
  for (int e : plain) out.push_back(e);
  for (int e : barred) out.push_back(e);
  return out;
}

Json activity_to_json(const BasisActivity& act) {
  Json out = Json::object();
  out["basis"] = elemset_to_json(act.basis);
  out["ea"] = elemset_to_json(act.ea);
  out["ep"] = elemset_to_json(act.ep);
  out["ia"] = elemset_to_json(act.ia);
  out["ip"] = elemset_to_json(act.ip);
  return out;
}

Json tutte_to_json(const TuttePolynomial& t) {
  Json out = Json::array();
  for (const TuttePolynomial::Term& term : t.terms()) {
    Json entry = Json::object();
    entry["i"] = term.i;
    entry["j"] = term.j;
    entry["c"] = term.c;
    out.push_back(entry);
  }
  return out;
}

Json complex_to_json(const SimplicialComplex& k) {
  Json out = Json::object();
  out["vertices"] = face_to_json(k, k.universe);
  Json facets = Json::array();
  for (std::uint64_t f : k.facets) facets.push_back(face_to_json(k, f));
  out["facets"] = facets;
  return out;
}

Json shelling_report_to_json(const SimplicialComplex& k,
                             const ShellingReport& report,
                             const std::vector<int>& facet_order) {
  Json out = Json::object();
  out["is_shelling"] = report.is_shelling;
  if (report.is_shelling) {
    Json sets = Json::array();
    for (std::uint64_t r : report.restriction_sets)
      sets.push_back(face_to_json(k, r));
    out["restriction_sets"] = sets;
  } else {
    out["failure_index"] = report.failure_index;
    out["failure_facet"] = face_to_json(
        k, k.facets[static_cast<std::size_t>(
               facet_order[static_cast<std::size_t>(report.failure_index)])]);
  }
  return out;
}

}  // namespace eac::json_io
