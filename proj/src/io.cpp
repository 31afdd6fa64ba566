#include "hyperent/io.hpp"

#include <fstream>

#include <json.hpp>

namespace hyperent {

UniformHypergraph read_hypergraph_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("k") ||
      !j.contains("edges"))
    fail(Errc::MalformedInput,
         "hypergraph JSON needs object keys n, k and edges");
  if (!j["n"].is_number_integer() || !j["k"].is_number_integer() ||
      !j["edges"].is_array())
    fail(Errc::MalformedInput, "n and k must be integers, edges an array");
  std::vector<Edge> edges;
  for (const auto& item : j["edges"]) {
    if (!item.is_array())
      fail(Errc::MalformedInput, "each edge must be an array of vertices");
    Edge e;
    for (const auto& v : item) {
      if (!v.is_number_integer())
        fail(Errc::MalformedInput, "edge vertices must be integers");
      e.push_back(v.get<int>());
    }
    edges.push_back(std::move(e));
  }
  return UniformHypergraph(j["n"].get<int>(), j["k"].get<int>(),
                           std::move(edges));
}

UniformHypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::MalformedInput, "cannot open '" + path + "'");
  return read_hypergraph_json(in);
}

void write_hypergraph_json(std::ostream& out, const UniformHypergraph& h) {
  nlohmann::ordered_json j;
  j["n"] = h.vertex_count();
  j["k"] = h.uniformity();
  j["edges"] = nlohmann::json::array();
  for (const Edge& e : h.edges()) j["edges"].push_back(e);
  out << j.dump(2) << "\n";
}

}  // namespace hyperent
