#include "orbits/document.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "orbits/error.hpp"
#include "orbits/rank.hpp"

namespace orbits {

using nlohmann::json;

bool operator==(const Witness& a, const Witness& b) {
  return a.description == b.description && a.pattern == b.pattern && a.positions == b.positions;
}

bool operator==(const Verdict& a, const Verdict& b) {
  return a.rationally_smooth == b.rationally_smooth && a.smooth == b.smooth && a.lci == b.lci &&
         a.witness == b.witness && a.decomposition == b.decomposition;
}

bool operator==(const VertexRecord& a, const VertexRecord& b) {
  return a.id == b.id && a.param_text == b.param_text && a.rank == b.rank && a.dim == b.dim &&
         a.closed == b.closed && a.open == b.open && a.verdict == b.verdict;
}

bool operator==(const EdgeRecord& a, const EdgeRecord& b) {
  return a.src == b.src && a.dst == b.dst && a.kind == b.kind;
}

bool operator==(const PosetDocument& a, const PosetDocument& b) {
  return a.family == b.family && a.vertices == b.vertices && a.edges == b.edges;
}

PosetDocument make_document(const OrbitPoset& poset, const BruhatGraph& graph, const DocumentOptions& opt) {
  const Family& f = poset.family();
  PosetDocument doc;
  doc.family = f;
  std::vector<std::size_t> keep;
  if (opt.subset) {
    keep = *opt.subset;
  } else {
    for (std::size_t i = 0; i < poset.size(); ++i) keep.push_back(i);
  }
  std::map<std::size_t, std::size_t> local;
  const Param top = open_orbit(f);
  const int base = closed_dim(f);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    const std::size_t i = keep[k];
    local[i] = k;
    VertexRecord v;
    v.id = k;
    v.param_text = param_text(poset[i]);
    v.rank = poset.rank(i);
    v.dim = base + v.rank;
    v.closed = is_closed_orbit(poset[i], f);
    v.open = poset[i] == top;
    if (opt.verdicts) v.verdict = classify(poset[i], f);
    doc.vertices.push_back(std::move(v));
  }
  std::map<std::pair<std::size_t, std::size_t>, std::string> kinds;
  if (opt.covers) {
    for (auto [a, b] : poset.covers()) {
      if (local.count(a) && local.count(b)) kinds[{local[a], local[b]}] = graph.has_edge(a, b) ? "both" : "hasse";
    }
  }
  if (opt.graph_edges) {
    for (auto [a, b] : graph.edges()) {
      if (!local.count(a) || !local.count(b)) continue;
      auto key = std::make_pair(local[a], local[b]);
      if (!kinds.count(key)) kinds[key] = "bruhat";
    }
  }
  for (const auto& [key, kind] : kinds) doc.edges.push_back({key.first, key.second, kind});
  return doc;
}

json family_json(const Family& f) {
  return json{{"tag", tag_name(f.tag)}, {"n", f.n}, {"p", f.p}, {"q", f.q}, {"name", f.name()}};
}

Family family_from_json(const json& j) {
  Family f;
  if (!parse_tag(j.at("tag").get<std::string>(), f.tag)) throw Error(ErrorKind::MalformedToken, "family tag");
  f.n = j.at("n").get<int>();
  f.p = j.at("p").get<int>();
  f.q = j.at("q").get<int>();
  return f;
}

json verdict_json(const Verdict& v) {
  json j{{"rationally_smooth", v.rationally_smooth}, {"smooth", v.smooth}, {"decomposition", v.decomposition}};
  j["lci"] = v.lci ? json(*v.lci) : json(nullptr);
  if (v.witness) {
    j["witness"] = json{{"description", v.witness->description},
                        {"pattern", v.witness->pattern},
                        {"positions", v.witness->positions}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Verdict verdict_from_json(const json& j) {
  Verdict v;
  v.rationally_smooth = j.at("rationally_smooth").get<bool>();
  v.smooth = j.at("smooth").get<bool>();
  v.decomposition = j.at("decomposition").get<std::string>();
  if (!j.at("lci").is_null()) v.lci = j.at("lci").get<bool>();
  if (!j.at("witness").is_null()) {
    const json& w = j.at("witness");
    v.witness = Witness{w.at("description").get<std::string>(), w.at("pattern").get<std::string>(),
                        w.at("positions").get<std::vector<int>>()};
  }
  return v;
}

json to_json(const PosetDocument& doc) {
  json vs = json::array();
  for (const auto& v : doc.vertices) {
    json jv{{"id", v.id},         {"param_text", v.param_text}, {"rank", v.rank},
            {"dim", v.dim},       {"closed", v.closed},         {"open", v.open}};
    if (v.verdict) jv["verdict"] = verdict_json(*v.verdict);
    vs.push_back(std::move(jv));
  }
  json es = json::array();
  for (const auto& e : doc.edges) es.push_back(json{{"src", e.src}, {"dst", e.dst}, {"kind", e.kind}});
  return json{{"family", family_json(doc.family)}, {"vertices", vs}, {"edges", es}};
}

PosetDocument document_from_json(const json& j) {
  try {
    PosetDocument doc;
    doc.family = family_from_json(j.at("family"));
    for (const auto& jv : j.at("vertices")) {
      VertexRecord v;
      v.id = jv.at("id").get<std::size_t>();
      v.param_text = jv.at("param_text").get<std::string>();
      v.rank = jv.at("rank").get<int>();
      v.dim = jv.at("dim").get<int>();
      v.closed = jv.at("closed").get<bool>();
      v.open = jv.at("open").get<bool>();
      if (jv.contains("verdict")) v.verdict = verdict_from_json(jv.at("verdict"));
      if (v.id != doc.vertices.size()) throw Error(ErrorKind::MalformedToken, "vertex ids must be dense");
      doc.vertices.push_back(std::move(v));
    }
    for (const auto& je : j.at("edges")) {
      EdgeRecord e{je.at("src").get<std::size_t>(), je.at("dst").get<std::size_t>(), je.at("kind").get<std::string>()};
      if (e.kind != "hasse" && e.kind != "bruhat" && e.kind != "both") {
        throw Error(ErrorKind::MalformedToken, "edge kind " + e.kind);
      }
      if (e.src >= doc.vertices.size() || e.dst >= doc.vertices.size()) {
        throw Error(ErrorKind::MalformedToken, "edge endpoint out of range");
      }
      doc.edges.push_back(e);
    }
    return doc;
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::MalformedToken, ex.what());
  }
}

std::string to_dot(const PosetDocument& doc) {
  std::ostringstream out;
  out << "digraph \"" << doc.family.name() << "\" {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  std::map<int, std::vector<std::size_t>> layers;
  for (const auto& v : doc.vertices) layers[v.rank].push_back(v.id);
  for (const auto& [r, ids] : layers) {
    out << "  subgraph rank_" << r << " {\n    rank=same;\n";
    for (std::size_t id : ids) out << "    v" << id << " [label=\"" << doc.vertices[id].param_text << "\"];\n";
    out << "  }\n";
  }
  for (const auto& e : doc.edges) {
    out << "  v" << e.src << " -> v" << e.dst;
    if (e.kind == "bruhat") out << " [style=dashed]";
    else if (e.kind == "hasse") out << " [color=gray]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_text(const PosetDocument& doc) {
  std::ostringstream out;
  out << doc.family.name() << ": " << doc.vertices.size() << " vertices, " << doc.edges.size() << " edges\n";
  for (const auto& v : doc.vertices) {
    out << v.id << ' ' << v.param_text << " rank=" << v.rank << " dim=" << v.dim;
    if (v.closed) out << " closed";
    if (v.open) out << " open";
    out << '\n';
  }
  for (const auto& e : doc.edges) out << e.src << " -> " << e.dst << ' ' << e.kind << '\n';
  return out.str();
}

}  // namespace orbits
