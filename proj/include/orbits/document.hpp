#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "orbits/family.hpp"
#include "orbits/graph.hpp"
#include "orbits/poset.hpp"
#include "orbits/singularity.hpp"

namespace orbits {

struct VertexRecord {
  std::size_t id = 0;
  std::string param_text;
  int rank = 0;
  int dim = 0;
  bool closed = false;
  bool open = false;
  std::optional<Verdict> verdict;
};

struct EdgeRecord {
  std::size_t src = 0;  // lower endpoint
  std::size_t dst = 0;
  std::string kind;     // "hasse", "bruhat" or "both"
};

struct PosetDocument {
  Family family;
  std::vector<VertexRecord> vertices;
  std::vector<EdgeRecord> edges;
};

bool operator==(const Witness& a, const Witness& b);
bool operator==(const Verdict& a, const Verdict& b);
bool operator==(const VertexRecord& a, const VertexRecord& b);
bool operator==(const EdgeRecord& a, const EdgeRecord& b);
bool operator==(const PosetDocument& a, const PosetDocument& b);

struct DocumentOptions {
  bool covers = true;       // include Hasse covers
  bool graph_edges = false; // include Bruhat-graph edges that are not covers
  bool verdicts = false;
  std::optional<std::vector<std::size_t>> subset;  // restrict to these vertices (ascending)
};

PosetDocument make_document(const OrbitPoset& poset, const BruhatGraph& graph, const DocumentOptions& opt);

nlohmann::json to_json(const PosetDocument& doc);
// Throws Error(MalformedToken) on schema violations.
PosetDocument document_from_json(const nlohmann::json& j);
std::string to_dot(const PosetDocument& doc);
std::string to_text(const PosetDocument& doc);

nlohmann::json verdict_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);
nlohmann::json family_json(const Family& f);
Family family_from_json(const nlohmann::json& j);

}  // namespace orbits
