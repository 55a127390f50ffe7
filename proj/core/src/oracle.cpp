#include "rpq/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "rpq/error.hpp"

namespace rpq {
namespace {

using AdjacencyList = std::vector<std::vector<Index>>;

AdjacencyList as_lists(const SparseBoolMatrix& m) {
  AdjacencyList out(m.nrows());
  for (Index r = 0; r < m.nrows(); ++r) {
    for (Index c : m.row(r)) out[r].push_back(c);
  }
  return out;
}

std::vector<Index> row_members(const SparseBoolMatrix& sel) {
  std::vector<Index> out;
  if (sel.nrows() > 0) {
    for (Index c : sel.row(0)) out.push_back(c);
  }
  return out;
}

}  // namespace

std::set<Index> oracle_ssr(const LabeledGraph& g, const TwoNfa& n, Index source) {
  OracleStats stats;
  return oracle_ssr(g, n, source, stats);
}

std::set<Index> oracle_ssr(const LabeledGraph& g, const TwoNfa& n, Index source, OracleStats& stats) {
  if (source >= g.num_vertices()) throw LookupError("oracle_ssr: source out of range");

  // Pair each automaton symbol with graph edges carrying it; an inverted
  // symbol walks the forward edges backwards.
  struct Channel {
    AdjacencyList automaton;
    AdjacencyList graph;
  };
  std::vector<Channel> channels;
  for (const auto& [sym, m] : n.transitions) {
    const auto label = g.label_index(sym.label);
    if (!label) continue;
    Channel ch{as_lists(m), AdjacencyList(g.num_vertices())};
    const SparseBoolMatrix& forward = g.adjacency(*label, false);
    for (Index u = 0; u < forward.nrows(); ++u) {
      for (Index v : forward.row(u)) {
        if (sym.inverted) {
          ch.graph[v].push_back(u);
        } else {
          ch.graph[u].push_back(v);
        }
      }
    }
    channels.push_back(std::move(ch));
  }

  std::set<ProductState> visited;
  std::deque<ProductState> queue;
  for (Index q : row_members(n.starts)) {
    if (visited.insert({q, source}).second) queue.push_back({q, source});
  }
  while (!queue.empty()) {
    const ProductState cur = queue.front();
    queue.pop_front();
    for (const auto& ch : channels) {
      for (Index q2 : ch.automaton[cur.state]) {
        for (Index v2 : ch.graph[cur.vertex]) {
          if (visited.insert({q2, v2}).second) queue.push_back({q2, v2});
        }
      }
    }
  }
  stats.visited = visited.size();

  const std::vector<Index> finals = row_members(n.finals);
  const std::set<Index> final_set(finals.begin(), finals.end());
  std::set<Index> out;
  for (const auto& ps : visited) {
    if (final_set.count(ps.state) != 0) out.insert(ps.vertex);
  }
  return out;
}

std::set<Word> oracle_words(const TwoNfa& n, std::size_t max_len, std::size_t max_words) {
  std::vector<Symbol> alphabet;
  std::vector<AdjacencyList> moves;
  for (const auto& [sym, m] : n.transitions) {
    alphabet.push_back(sym);
    moves.push_back(as_lists(m));
  }
  std::size_t candidates = 1;
  std::size_t layer = 1;
  for (std::size_t len = 1; len <= max_len; ++len) {
    layer *= std::max<std::size_t>(alphabet.size(), 1);
    candidates += layer;
    if (candidates > max_words) throw Error("oracle_words: alphabet too large for exhaustive enumeration");
  }

  const std::vector<Index> finals = row_members(n.finals);
  const std::set<Index> final_set(finals.begin(), finals.end());
  auto accepting = [&](const std::set<Index>& states) {
    for (Index q : states) {
      if (final_set.count(q) != 0) return true;
    }
    return false;
  };

  // Depth-first over words, carrying the reachable state set.
  std::set<Word> out;
  Word word;
  auto walk = [&](auto&& self, const std::set<Index>& states) -> void {
    if (accepting(states)) out.insert(word);
    if (word.size() == max_len) return;
    for (std::size_t c = 0; c < alphabet.size(); ++c) {
      std::set<Index> next;
      for (Index q : states) next.insert(moves[c][q].begin(), moves[c][q].end());
      if (next.empty()) continue;
      word.push_back(alphabet[c]);
      self(self, next);
      word.pop_back();
    }
  };
  const std::vector<Index> starts = row_members(n.starts);
  walk(walk, std::set<Index>(starts.begin(), starts.end()));
  return out;
}

}  // namespace rpq
