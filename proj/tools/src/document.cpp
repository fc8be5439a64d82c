#include "htcover/cli/document.hpp"

#include <map>
#include <sstream>

#include "htcover/error.hpp"

namespace htcover::cli {

namespace {

const char* kind_tag(VertexKind k) { return k == VertexKind::kX ? "x" : "y"; }

VertexKind parse_kind(const std::string& tag) {
  if (tag == "x") return VertexKind::kX;
  if (tag == "y") return VertexKind::kY;
  throw ParseError("vertex kind must be \"x\" or \"y\", got \"" + tag + "\"");
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

void expect_schema(const Json& j, const char* schema) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  if (!j.contains("schema") || j["schema"] != schema) {
    throw ParseError(std::string("expected schema \"") + schema + "\"");
  }
}

Json vector_to_json(const DegreeVector& v) { return Json(v.to_ints()); }

Json names_of(const Ring& ring, IndexSet s) {
  Json out = Json::array();
  for (std::size_t i : s) out.push_back(ring.name(i));
  return out;
}

}  // namespace

std::string tool_version() { return "htcover 0.1.0"; }

GraphDocument GraphDocument::from_graph(const Graph& g) {
  GraphDocument doc;
  doc.name = g.label();
  doc.vertices = g.vertices();
  for (const Edge& e : g.edges()) doc.edges.emplace_back(g.name(e.u), g.name(e.v));
  return doc;
}

Graph GraphDocument::to_graph() const {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!index.emplace(vertices[i].name, i).second) {
      throw ParseError("duplicate vertex name \"" + vertices[i].name + "\"");
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw ParseError("edge {" + a + ", " + b + "} references an undeclared vertex");
    }
    ends.emplace_back(ia->second, ib->second);
  }
  try {
    return Graph(name, vertices, std::move(ends));
  } catch (const ContractError& e) {
    throw ParseError(std::string("invalid graph: ") + e.what());
  }
}

bool GraphDocument::operator==(const GraphDocument& o) const {
  return name == o.name && vertices == o.vertices && edges == o.edges;
}

std::string serialize(const GraphDocument& doc) {
  Json j;
  j["schema"] = kGraphSchema;
  j["name"] = doc.name;
  j["vertices"] = Json::array();
  for (const Vertex& v : doc.vertices) j["vertices"].push_back({{"name", v.name}, {"kind", kind_tag(v.kind)}});
  j["edges"] = Json::array();
  for (const auto& [a, b] : doc.edges) j["edges"].push_back(Json::array({a, b}));
  return j.dump(2) + "\n";
}

GraphDocument parse_graph_document(const std::string& text) {
  const Json j = parse_json(text);
  expect_schema(j, kGraphSchema);
  GraphDocument doc;
  try {
    doc.name = j.at("name").get<std::string>();
    for (const Json& v : j.at("vertices")) {
      doc.vertices.push_back({v.at("name").get<std::string>(), parse_kind(v.at("kind").get<std::string>())});
    }
    for (const Json& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edges are [name, name] pairs");
      doc.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad graph document: ") + e.what());
  }
  doc.to_graph();
  return doc;
}

std::string serialize(const ReportDocument& doc) {
  Json j;
  j["schema"] = kReportSchema;
  j["tool"] = doc.tool;
  j["command"] = doc.command;
  j["ordering"] = "lex";
  j["parameters"] = doc.parameters;
  j["result"] = doc.result;
  return j.dump(2) + "\n";
}

ReportDocument parse_report_document(const std::string& text) {
  const Json j = parse_json(text);
  expect_schema(j, kReportSchema);
  ReportDocument doc;
  try {
    doc.tool = j.at("tool").get<std::string>();
    doc.command = j.at("command").get<std::string>();
    doc.parameters = j.at("parameters");
    doc.result = j.at("result");
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad report document: ") + e.what());
  }
  return doc;
}

Json ideal_to_json(const MonomialIdeal& i) {
  Json j;
  j["ring"] = i.ring()->variables();
  j["count"] = i.size();
  j["generators"] = Json::array();
  for (const DegreeVector& g : i.generators()) j["generators"].push_back(vector_to_json(g));
  return j;
}

MonomialIdeal ideal_from_json(const Json& j) {
  try {
    auto ring = std::make_shared<const Ring>(j.at("ring").get<std::vector<std::string>>());
    std::vector<DegreeVector> gens;
    for (const Json& g : j.at("generators")) {
      const auto ints = g.get<std::vector<int>>();
      if (ints.size() != ring->size()) throw ParseError("generator length does not match the ring");
      gens.push_back(DegreeVector::from_ints(ints));
    }
    return MonomialIdeal(ring, std::move(gens));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad ideal payload: ") + e.what());
  } catch (const ContractError& e) {
    throw ParseError(std::string("bad ideal payload: ") + e.what());
  }
}

Json components_to_json(std::span<const IrreducibleComponent> cs) {
  Json out = Json::array();
  for (const IrreducibleComponent& c : cs) out.push_back(vector_to_json(c.exponents()));
  return out;
}

Json supports_to_json(const Ring& ring, std::span<const PrimeSupport> supports) {
  Json out = Json::array();
  for (PrimeSupport s : supports) out.push_back(names_of(ring, s));
  return out;
}

Json decomposition_report_to_json(const DecompositionReport& rep) {
  Json j;
  j["t"] = rep.t;
  j["n"] = rep.n;
  j["rule"] = to_string(rep.rule);
  j["count_a"] = rep.count_a;
  j["count_b"] = rep.count_b;
  j["count_d"] = Json::object();
  for (const auto& [r, k] : rep.count_d) j["count_d"][std::to_string(r)] = k;
  j["closed_form_count"] = rep.closed_form_count;
  j["irredundant"] = rep.irredundant;
  j["redundant_components"] = components_to_json(rep.redundant_components);
  j["oracle_run"] = rep.oracle_run;
  j["equal"] = rep.equal;
  j["matches_bruteforce"] = rep.matches_bruteforce;
  j["power_generator_count"] = rep.power_generator_count;
  j["bruteforce_component_count"] = rep.bruteforce_component_count;
  j["only_in_closed_form"] = Json::array();
  for (const DegreeVector& m : rep.only_in_closed_form) j["only_in_closed_form"].push_back(vector_to_json(m));
  j["only_in_power"] = Json::array();
  for (const DegreeVector& m : rep.only_in_power) j["only_in_power"].push_back(vector_to_json(m));
  j["missing_components"] = components_to_json(rep.missing_components);
  j["extra_components"] = components_to_json(rep.extra_components);
  j["complete"] = rep.complete;
  j["note"] = rep.note;
  return j;
}

Json stabilization_report_to_json(const StabilizationReport& rep, const Ring& ring) {
  Json j;
  j["horizon"] = rep.horizon;
  j["computed"] = rep.ass_sets.size();
  j["counts"] = Json::array();
  for (const auto& s : rep.ass_sets) j["counts"].push_back(s.size());
  j["first_stable_index"] = rep.first_stable_index;
  j["t"] = rep.t ? Json(*rep.t) : Json(nullptr);
  j["predicted"] = rep.predicted ? Json(*rep.predicted) : Json(nullptr);
  j["agrees_with_classification"] = rep.agrees_with_classification;
  j["monotonicity_violations"] = rep.monotonicity_violations;
  j["full_support_first"] = rep.full_support_first ? Json(*rep.full_support_first) : Json(nullptr);
  j["complete"] = rep.complete;
  j["note"] = rep.note;
  j["ass"] = Json::array();
  for (const auto& s : rep.ass_sets) j["ass"].push_back(supports_to_json(ring, s));
  return j;
}

Json closed_form_to_json(const ClosedForm& cf) {
  Json j;
  j["t"] = cf.t;
  j["n"] = cf.n;
  j["rule"] = to_string(cf.rule);
  const auto all = cf.all();
  j["count"] = all.size();
  j["A"] = components_to_json(cf.a);
  j["B"] = components_to_json(cf.b);
  j["D"] = Json::object();
  for (const auto& [r, cs] : cf.d) j["D"][std::to_string(r)] = components_to_json(cs);
  j["components"] = components_to_json(all);
  return j;
}

std::string export_text(const MonomialIdeal& i) {
  std::ostringstream out;
  out << kExportHeader << "\n";
  out << "R = QQ[";
  const auto& vars = i.ring()->variables();
  for (std::size_t k = 0; k < vars.size(); ++k) out << (k ? "," : "") << vars[k];
  out << "];\n";
  out << "I = ideal(\n";
  if (i.is_zero()) {
    out << "0\n";
  } else {
    for (std::size_t k = 0; k < i.size(); ++k) {
      out << format_monomial(*i.ring(), i.generators()[k]) << (k + 1 < i.size() ? ",\n" : "\n");
    }
  }
  out << ");\n";
  return out.str();
}

}  // namespace htcover::cli
