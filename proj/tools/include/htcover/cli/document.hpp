#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "htcover/decomposition.hpp"
#include "htcover/graph.hpp"
#include "htcover/monomial.hpp"
#include "htcover/theorem.hpp"

namespace htcover::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kGraphSchema = "htcover.graph/1";
inline constexpr const char* kReportSchema = "htcover.report/1";
inline constexpr const char* kExportHeader = "-- htcover-export 1";

/// Tool identification echoed into every report.
std::string tool_version();

struct GraphDocument {
  std::string name;
  std::vector<Vertex> vertices;
  std::vector<std::pair<std::string, std::string>> edges;

  static GraphDocument from_graph(const Graph& g);
  /// Throws ParseError when names repeat or an edge is invalid.
  Graph to_graph() const;

  bool operator==(const GraphDocument& o) const;
};

std::string serialize(const GraphDocument& doc);
/// Throws ParseError on malformed text, wrong schema or invalid content.
GraphDocument parse_graph_document(const std::string& text);

struct ReportDocument {
  std::string tool = tool_version();
  std::string command;
  Json parameters = Json::object();
  Json result = Json::object();

  bool operator==(const ReportDocument& o) const = default;
};

std::string serialize(const ReportDocument& doc);
ReportDocument parse_report_document(const std::string& text);

/// {"ring": [...], "generators": [[...], ...], "count": k}
Json ideal_to_json(const MonomialIdeal& i);
/// Inverse of ideal_to_json; throws ParseError.
MonomialIdeal ideal_from_json(const Json& j);

Json components_to_json(std::span<const IrreducibleComponent> cs);
/// Each support as its sorted variable names.
Json supports_to_json(const Ring& ring, std::span<const PrimeSupport> supports);
Json decomposition_report_to_json(const DecompositionReport& rep);
Json stabilization_report_to_json(const StabilizationReport& rep, const Ring& ring);
Json closed_form_to_json(const ClosedForm& cf);

/// Plain-text ideal definition for external algebra systems.
std::string export_text(const MonomialIdeal& i);

}  // namespace htcover::cli
