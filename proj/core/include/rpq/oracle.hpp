#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "rpq/automaton.hpp"
#include "rpq/graph.hpp"

namespace rpq {

// Reference evaluators built on explicit sets and adjacency lists. They only
// read their inputs; no matrix kernel or engine code is involved.

struct ProductState {
  Index state;
  Index vertex;
  auto operator<=>(const ProductState&) const = default;
};

// Breadth-first search over (automaton state, vertex) pairs.
std::set<Index> oracle_ssr(const LabeledGraph& g, const TwoNfa& n, Index source);

// Number of product states the last search visited; bounded by |Q||V|.
struct OracleStats {
  std::size_t visited = 0;
};
std::set<Index> oracle_ssr(const LabeledGraph& g, const TwoNfa& n, Index source, OracleStats& stats);

// Every word of length <= max_len accepted by `n`, over the automaton's own
// alphabet. Throws when the enumeration would exceed `max_words` candidates.
std::set<Word> oracle_words(const TwoNfa& n, std::size_t max_len, std::size_t max_words = 1'000'000);

}  // namespace rpq
