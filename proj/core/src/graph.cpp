#include "rpq/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <utility>

#include "rpq/error.hpp"

namespace rpq {

Index Dictionary::intern(std::string_view name) {
  if (auto it = ids_.find(name); it != ids_.end()) return it->second;
  const auto id = static_cast<Index>(names_.size());
  names_.emplace_back(name);
  ids_.emplace(names_.back(), id);
  return id;
}

std::optional<Index> Dictionary::find(std::string_view name) const {
  if (auto it = ids_.find(name); it != ids_.end()) return it->second;
  return std::nullopt;
}

const std::string& Dictionary::name(Index id) const {
  if (id >= names_.size()) {
    throw LookupError("index " + std::to_string(id) + " out of range [0," +
                      std::to_string(names_.size()) + ")");
  }
  return names_[id];
}

LabeledGraph LabeledGraph::from_edges(const std::vector<Edge>& edges) {
  LabeledGraph g;
  std::vector<std::vector<std::pair<Index, Index>>> per_label;
  for (const auto& e : edges) {
    const Index u = g.vertices_.intern(e.source);
    const Index v = g.vertices_.intern(e.destination);
    const Index a = g.labels_.intern(e.label);
    if (a == per_label.size()) per_label.emplace_back();
    per_label[a].emplace_back(u, v);
  }
  const auto n = static_cast<Index>(g.vertices_.size());
  g.forward_.reserve(per_label.size());
  g.backward_.reserve(per_label.size());
  for (auto& pairs : per_label) {
    g.forward_.push_back(SparseBoolMatrix::from_pairs(n, n, std::move(pairs)));
    g.backward_.push_back(transpose(g.forward_.back()));
  }
  return g;
}

std::size_t LabeledGraph::num_edges() const noexcept {
  std::size_t total = 0;
  for (const auto& m : forward_) total += m.nnz();
  return total;
}

Index LabeledGraph::vertex_index(std::string_view external_id) const {
  if (auto id = vertices_.find(external_id)) return *id;
  throw LookupError("unknown vertex '" + std::string(external_id) + "'");
}

const std::string& LabeledGraph::vertex_name(Index index) const { return vertices_.name(index); }

const SparseBoolMatrix& LabeledGraph::adjacency(Index label, bool inverted) const {
  if (label >= forward_.size()) {
    throw LookupError("label index " + std::to_string(label) + " out of range");
  }
  return inverted ? backward_[label] : forward_[label];
}

LabeledGraph load_graph(std::istream& in) {
  std::vector<Edge> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos) {
      throw FormatError(lineno, "expected source<TAB>label<TAB>destination");
    }
    Edge e{line.substr(0, t1), line.substr(t1 + 1, t2 - t1 - 1), line.substr(t2 + 1)};
    if (e.source.empty() || e.label.empty() || e.destination.empty()) {
      throw FormatError(lineno, "empty field");
    }
    edges.push_back(std::move(e));
  }
  return LabeledGraph::from_edges(edges);
}

LabeledGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file " + path.string());
  return load_graph(in);
}

void write_edge_list(const LabeledGraph& g, std::ostream& out) {
  // Ordering by (max endpoint, forward-before-backward, source, destination)
  // makes vertices first appear in index order, so a reload reproduces the
  // vertex dictionary exactly. Label indices may be permuted on reload.
  std::vector<std::tuple<Index, int, Index, Index, Index>> order;
  for (Index a = 0; a < g.num_labels(); ++a) {
    for (const auto& [u, v] : g.adjacency(a, false).to_pairs()) {
      order.emplace_back(std::max(u, v), u < v ? 0 : 1, u, v, a);
    }
  }
  std::sort(order.begin(), order.end());
  for (const auto& [key, dir, u, v, a] : order) {
    out << g.vertex_name(u) << '\t' << g.labels().name(a) << '\t' << g.vertex_name(v) << '\n';
  }
}

}  // namespace rpq
