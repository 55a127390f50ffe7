#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "rpq/sparse_bool.hpp"

namespace rpq {

// Bijection between external string identifiers and dense indices
// assigned in first-insertion order.
class Dictionary {
 public:
  Index intern(std::string_view name);
  std::optional<Index> find(std::string_view name) const;
  const std::string& name(Index id) const;
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::vector<std::string> names_;
  std::unordered_map<std::string, Index, Hash, std::equal_to<>> ids_;
};

struct Edge {
  std::string source;
  std::string label;
  std::string destination;
};

// Edge-labelled graph held as one |V|x|V| Boolean adjacency matrix per label,
// together with the transposes used for inverse-label traversal.
// Immutable once built.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  // Vertices and labels are interned in order of first appearance
  // (source before destination within an edge).
  static LabeledGraph from_edges(const std::vector<Edge>& edges);

  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_labels() const noexcept { return labels_.size(); }
  std::size_t num_edges() const noexcept;

  const Dictionary& vertices() const noexcept { return vertices_; }
  const Dictionary& labels() const noexcept { return labels_; }

  Index vertex_index(std::string_view external_id) const;
  const std::string& vertex_name(Index index) const;
  std::optional<Index> label_index(std::string_view label) const { return labels_.find(label); }

  // G^a, or (G^a)^T when `inverted`.
  const SparseBoolMatrix& adjacency(Index label, bool inverted) const;

 private:
  Dictionary vertices_;
  Dictionary labels_;
  std::vector<SparseBoolMatrix> forward_;
  std::vector<SparseBoolMatrix> backward_;
};

// Parses `source<TAB>label<TAB>destination` lines. Lines starting with '#'
// and blank lines are skipped; anything else malformed raises FormatError.
LabeledGraph load_graph(std::istream& in);
LabeledGraph load_graph(const std::filesystem::path& path);

// Writes every edge so that reloading yields the same vertex dictionary and
// the same per-label matrices (label indices may be renumbered).
void write_edge_list(const LabeledGraph& g, std::ostream& out);

}  // namespace rpq
