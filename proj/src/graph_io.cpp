#include "wood/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "wood/error.hpp"

namespace wood {

ExportFormat parse_export_format(const std::string& name) {
  if (name == "edgelist") return ExportFormat::EdgeList;
  if (name == "dot") return ExportFormat::Dot;
  throw ParameterError("unknown export format '" + name + "' (expected edgelist or dot)");
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& in, std::optional<std::size_t> order) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t max_index = 0;
  bool any = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    long long u = 0, v = 0;
    if (!(ls >> u)) continue;
    std::string extra;
    if (!(ls >> v) || (ls >> extra) || u < 0 || v < 0)
      throw ParameterError("edge list line " + std::to_string(lineno) + ": expected two vertex indices");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    max_index = std::max<std::size_t>(max_index, static_cast<std::size_t>(std::max(u, v)));
    any = true;
  }
  const std::size_t n = order.value_or(any ? max_index + 1 : 0);
  if (any && max_index >= n)
    throw ParameterError("edge list mentions vertex " + std::to_string(max_index) + " but order is " +
                         std::to_string(n));
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

void write_dot(const Graph& g, std::ostream& out) {
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (g.has_labels() && !g.label(v).empty()) out << " [label=\"" << dot_escape(g.label(v)) << "\"]";
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

void export_graph(const Graph& g, ExportFormat format, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  if (format == ExportFormat::EdgeList) write_edge_list(g, out);
  else write_dot(g, out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace wood
