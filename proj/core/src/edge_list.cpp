#include "kecore/edge_list.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "kecore/errors.hpp"

namespace kecore {

namespace {

constexpr std::string_view kNodeKeyword = "node";

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) tokens.push_back(std::move(token));
  return tokens;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> index;
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen_edges;
  std::unordered_set<std::string> declared_nodes;

  auto intern = [&](const std::string& label, std::size_t line_no) {
    if (label == kNodeKeyword) {
      throw ParseError(line_no, "'node' is reserved and cannot be a label");
    }
    auto [it, inserted] =
        index.emplace(label, static_cast<Vertex>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected 'u v' or 'node w', got " +
                                    std::to_string(tokens.size()) + " tokens");
    }
    if (tokens[0] == kNodeKeyword) {
      if (!declared_nodes.insert(tokens[1]).second) {
        throw ParseError(line_no, "duplicate node declaration '" + tokens[1] + "'");
      }
      intern(tokens[1], line_no);
      continue;
    }
    if (tokens[0] == tokens[1]) {
      throw ParseError(line_no, "self-loop at '" + tokens[0] + "'");
    }
    const Vertex u = intern(tokens[0], line_no);
    const Vertex v = intern(tokens[1], line_no);
    const Edge e(u, v);
    if (!seen_edges.emplace(e.u, e.v).second) {
      throw ParseError(line_no, "duplicate edge " + tokens[0] + " " + tokens[1]);
    }
    edges.push_back(e);
  }
  if (labels.empty()) {
    throw ParseError(line_no == 0 ? 1 : line_no, "empty graph: no vertices declared");
  }
  return Graph::from_edges(std::move(labels), edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path.string() + "'");
  return parse_edge_list(in);
}

std::string serialize(const Graph& g) {
  auto less = [](const std::string& a, const std::string& b) {
    return label_less(a, b);
  };
  std::vector<std::string> isolated;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) isolated.push_back(g.label(v));
  }
  for (const auto& e : g.edges()) {
    auto a = g.label(e.u);
    auto b = g.label(e.v);
    if (less(b, a)) std::swap(a, b);
    pairs.emplace_back(std::move(a), std::move(b));
  }
  std::sort(isolated.begin(), isolated.end(), less);
  std::sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
    if (x.first != y.first) return less(x.first, y.first);
    return less(x.second, y.second);
  });
  std::string out;
  for (const auto& l : isolated) out += "node " + l + "\n";
  for (const auto& [a, b] : pairs) out += a + " " + b + "\n";
  return out;
}

}  // namespace kecore
