#include "berge/io.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace berge {

namespace {

// Strict whitespace-separated integer reader used by the text parser.
struct TokenReader {
  std::istringstream in;

  explicit TokenReader(const std::string& text) : in(text) {}

  int next_int(const char* what) {
    long long value = 0;
    if (!(in >> value))
      throw std::invalid_argument(std::string("hypergraph text: missing ") +
                                  what);
    if (value < INT32_MIN || value > INT32_MAX)
      throw std::invalid_argument(std::string("hypergraph text: ") + what +
                                  " out of range");
    return static_cast<int>(value);
  }

  void expect_end() {
    std::string leftover;
    if (in >> leftover)
      throw std::invalid_argument("hypergraph text: trailing content '" +
                                  leftover + "'");
  }
};

}  // namespace

std::string to_text(const Hypergraph& h) {
  std::ostringstream out;
  out << h.vertex_count() << ' ' << h.uniformity() << ' ' << h.edge_count()
      << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i > 0) out << ' ';
      out << e[i];
    }
    out << '\n';
  }
  return out.str();
}

Hypergraph hypergraph_from_text(const std::string& text) {
  TokenReader reader(text);
  const int n = reader.next_int("vertex count");
  const int r = reader.next_int("uniformity");
  const int m = reader.next_int("edge count");
  if (m < 0) throw std::invalid_argument("hypergraph text: negative edge count");
  if (r < 0) throw std::invalid_argument("hypergraph text: negative uniformity");

  std::vector<Hypergraph::Edge> edges(m);
  for (int i = 0; i < m; ++i) {
    edges[i].resize(r);
    for (int j = 0; j < r; ++j) edges[i][j] = reader.next_int("edge vertex");
  }
  reader.expect_end();
  return Hypergraph(n, r, std::move(edges));
}

nlohmann::ordered_json hypergraph_json(const Hypergraph& h) {
  nlohmann::ordered_json j;
  j["n"] = h.vertex_count();
  j["r"] = h.uniformity();
  j["edges"] = h.edges();
  return j;
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("r") ||
      !j.contains("edges"))
    throw std::invalid_argument(
        "hypergraph json: expected object with n, r, edges");
  if (!j["n"].is_number_integer() || !j["r"].is_number_integer() ||
      !j["edges"].is_array())
    throw std::invalid_argument("hypergraph json: wrong field types");
  std::vector<Hypergraph::Edge> edges;
  edges.reserve(j["edges"].size());
  for (const auto& e : j["edges"]) {
    if (!e.is_array())
      throw std::invalid_argument("hypergraph json: edge must be an array");
    Hypergraph::Edge edge;
    edge.reserve(e.size());
    for (const auto& v : e) {
      if (!v.is_number_integer())
        throw std::invalid_argument("hypergraph json: vertex must be integer");
      edge.push_back(v.get<int>());
    }
    edges.push_back(std::move(edge));
  }
  return Hypergraph(j["n"].get<int>(), j["r"].get<int>(), std::move(edges));
}

nlohmann::ordered_json partite_json(const PartiteStructure& p) {
  nlohmann::ordered_json parts = nlohmann::ordered_json::array();
  for (const auto& part : p.parts) parts.push_back(part.members());
  return nlohmann::ordered_json{{"parts", std::move(parts)}};
}

nlohmann::ordered_json witness_json(const Hypergraph& h,
                                    const BergeWitness& w) {
  nlohmann::ordered_json j;
  j["core"] = w.core.members();
  nlohmann::ordered_json assignment = nlohmann::ordered_json::array();
  const auto pairs = core_pairs(w.core);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const int id = w.edge_for_pair[p];
    if (id < 0 || id >= static_cast<int>(h.edge_count()))
      throw std::invalid_argument("witness json: edge index out of range");
    nlohmann::ordered_json entry;
    entry["pair"] = {pairs[p].first, pairs[p].second};
    entry["edge"] = h.edges()[id];
    assignment.push_back(std::move(entry));
  }
  j["assignment"] = std::move(assignment);
  return j;
}

nlohmann::ordered_json violator_json(const HallViolator& v) {
  nlohmann::ordered_json j;
  j["indices"] = v.indices;
  j["union_size"] = v.union_size;
  return j;
}

LabeledSetFamily set_family_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("sets") || !j["sets"].is_array())
    throw std::invalid_argument("set family json: expected {\"sets\":[...]}");

  LabeledSetFamily out;
  std::map<nlohmann::json, int> id_of;
  for (const auto& set : j["sets"]) {
    if (!set.is_array())
      throw std::invalid_argument("set family json: each set must be an array");
    std::vector<int> ids;
    ids.reserve(set.size());
    for (const auto& element : set) {
      if (!element.is_string() && !element.is_number_integer())
        throw std::invalid_argument(
            "set family json: elements must be strings or integers");
      const auto [it, inserted] =
          id_of.emplace(element, static_cast<int>(out.labels.size()));
      if (inserted) out.labels.push_back(element);
      ids.push_back(it->second);
    }
    out.family.sets.push_back(std::move(ids));
  }
  out.family.universe_size = static_cast<int>(out.labels.size());
  return out;
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return hypergraph_from_json(nlohmann::json::parse(text));
  return hypergraph_from_text(text);
}

void write_hypergraph_file(const std::string& path, const Hypergraph& h,
                           bool as_json) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  if (as_json)
    out << hypergraph_json(h).dump() << '\n';
  else
    out << to_text(h);
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace berge
