#include "hdlap/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "hdlap/errors.hpp"
#include "json.hpp"

namespace hdlap {

std::vector<std::int64_t> InteractionGraph::degrees() const {
  std::vector<std::int64_t> d(static_cast<std::size_t>(m), 0);
  for (const auto& e : edges) {
    ++d[static_cast<std::size_t>(e[0] - 1)];
    ++d[static_cast<std::size_t>(e[1] - 1)];
  }
  return d;
}

double InteractionGraph::mean_squared_degree() const {
  auto d = degrees();
  double acc = 0.0;
  for (auto di : d) acc += static_cast<double>(di) * static_cast<double>(di);
  return acc / static_cast<double>(m);
}

void InteractionGraph::validate() const {
  if (m < 1) throw InputError("graph: vertex count must be positive");
  std::set<std::array<std::int64_t, 2>> seen;
  for (const auto& e : edges) {
    if (e[0] < 1 || e[1] < 1 || e[0] > m || e[1] > m)
      throw InputError("graph: edge endpoint out of range [1," + std::to_string(m) + "]");
    if (e[0] == e[1]) throw InputError("graph: self-loop at vertex " + std::to_string(e[0]));
    std::array<std::int64_t, 2> key{std::min(e[0], e[1]), std::max(e[0], e[1])};
    if (!seen.insert(key).second)
      throw InputError("graph: duplicate edge (" + std::to_string(key[0]) + "," +
                       std::to_string(key[1]) + ")");
  }
}

InteractionGraph complete_graph(std::int64_t m) {
  InteractionGraph g;
  g.m = m;
  for (std::int64_t i = 1; i <= m; ++i)
    for (std::int64_t j = i + 1; j <= m; ++j) g.edges.push_back({i, j});
  g.validate();
  return g;
}

InteractionGraph single_edge_graph() {
  InteractionGraph g;
  g.m = 2;
  g.edges.push_back({1, 2});
  return g;
}

InteractionGraph cycle_graph(std::int64_t m) {
  InteractionGraph g;
  g.m = m;
  for (std::int64_t i = 1; i < m; ++i) g.edges.push_back({i, i + 1});
  if (m > 2) g.edges.push_back({1, m});
  g.validate();
  return g;
}

InteractionGraph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("graph json: ") + e.what());
  }
  if (!j.contains("m") || !j["m"].is_number_integer())
    throw InputError("graph json: missing integer field \"m\"");
  InteractionGraph g;
  g.m = j["m"].get<std::int64_t>();
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw InputError("graph json: \"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw InputError("graph json: each edge must be a pair of integers");
      std::int64_t a = e[0].get<std::int64_t>();
      std::int64_t b = e[1].get<std::int64_t>();
      g.edges.push_back({std::min(a, b), std::max(a, b)});
    }
  }
  g.validate();
  return g;
}

InteractionGraph graph_from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  InteractionGraph g;
  bool have_m = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!have_m) {
      if (!(ls >> g.m))
        throw InputError("graph edge list, line " + std::to_string(line_no) +
                         ": expected vertex count");
      have_m = true;
      continue;
    }
    std::int64_t a, b;
    if (!(ls >> a >> b))
      throw InputError("graph edge list, line " + std::to_string(line_no) +
                       ": expected \"i j\" pair");
    g.edges.push_back({std::min(a, b), std::max(a, b)});
  }
  if (!have_m) throw InputError("graph edge list: empty input");
  try {
    g.validate();
  } catch (const InputError& e) {
    throw InputError(std::string(e.what()) + " (edge list)");
  }
  return g;
}

InteractionGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
    return graph_from_json(buf.str());
  return graph_from_edge_list(buf.str());
}

}  // namespace hdlap
