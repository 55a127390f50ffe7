#include "rpq/automaton.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <set>
#include <utility>

#include "rpq/error.hpp"

namespace rpq {
namespace {

// Thompson automaton with explicit ε-edges. Symbols are interned to ids in
// ascending Symbol order once construction finishes.
class Thompson {
 public:
  struct Fragment {
    Index start;
    Index end;
  };

  explicit Thompson(const RegexAst& ast) {
    const Fragment f = build(ast);
    start_ = f.start;
    final_ = f.end;
  }

  Index start() const { return start_; }
  Index final_state() const { return final_; }
  Index size() const { return static_cast<Index>(eps_.size()); }
  const std::vector<Index>& eps(Index s) const { return eps_[s]; }
  const std::vector<std::pair<Symbol, Index>>& moves(Index s) const { return moves_[s]; }

  std::set<Symbol> symbols() const {
    std::set<Symbol> out;
    for (const auto& edges : moves_) {
      for (const auto& [sym, to] : edges) out.insert(sym);
    }
    return out;
  }

 private:
  Index add_state() {
    eps_.emplace_back();
    moves_.emplace_back();
    return static_cast<Index>(eps_.size() - 1);
  }

  Fragment build(const RegexAst& ast) {
    switch (ast.kind) {
      case RegexKind::Label: {
        const Index s = add_state();
        const Index f = add_state();
        moves_[s].emplace_back(ast.symbol, f);
        return {s, f};
      }
      case RegexKind::Concat: {
        Fragment whole = build(ast.children.front());
        for (std::size_t i = 1; i < ast.children.size(); ++i) {
          const Fragment next = build(ast.children[i]);
          eps_[whole.end].push_back(next.start);
          whole.end = next.end;
        }
        return whole;
      }
      case RegexKind::Alt: {
        const Index s = add_state();
        std::vector<Index> ends;
        for (const auto& c : ast.children) {
          const Fragment part = build(c);
          eps_[s].push_back(part.start);
          ends.push_back(part.end);
        }
        const Index f = add_state();
        for (Index e : ends) eps_[e].push_back(f);
        return {s, f};
      }
      case RegexKind::Star: {
        const Index s = add_state();
        const Fragment body = build(ast.children.front());
        const Index f = add_state();
        eps_[s].push_back(body.start);
        eps_[s].push_back(f);
        eps_[body.end].push_back(body.start);
        eps_[body.end].push_back(f);
        return {s, f};
      }
      case RegexKind::Plus:
        // x+ = x x*
        return build(RegexAst::concat({ast.children.front(), RegexAst::star(ast.children.front())}));
      case RegexKind::Opt: {
        const Index s = add_state();
        const Fragment body = build(ast.children.front());
        const Index f = add_state();
        eps_[s].push_back(body.start);
        eps_[s].push_back(f);
        eps_[body.end].push_back(f);
        return {s, f};
      }
    }
    throw Error("unknown regex node");
  }

  std::vector<std::vector<Index>> eps_;
  std::vector<std::vector<std::pair<Symbol, Index>>> moves_;
  Index start_ = 0;
  Index final_ = 0;
};

std::vector<Index> eps_closure(const Thompson& t, std::vector<Index> seed) {
  std::vector<bool> seen(t.size(), false);
  std::vector<Index> stack = seed;
  for (Index s : seed) seen[s] = true;
  while (!stack.empty()) {
    const Index s = stack.back();
    stack.pop_back();
    for (Index n : t.eps(s)) {
      if (!seen[n]) {
        seen[n] = true;
        seed.push_back(n);
        stack.push_back(n);
      }
    }
  }
  std::sort(seed.begin(), seed.end());
  return seed;
}

SparseBoolMatrix selector(Index n, const std::vector<Index>& states) {
  std::vector<std::pair<Index, Index>> pairs;
  for (Index s : states) pairs.emplace_back(0, s);
  return SparseBoolMatrix::from_pairs(1, n, std::move(pairs));
}

std::vector<Index> selected(const SparseBoolMatrix& sel) {
  const auto r = sel.nrows() == 0 ? std::span<const Index>{} : sel.row(0);
  return {r.begin(), r.end()};
}

}  // namespace

std::vector<Symbol> TwoNfa::alphabet() const {
  std::vector<Symbol> out;
  out.reserve(transitions.size());
  for (const auto& [sym, m] : transitions) out.push_back(sym);
  return out;
}

const SparseBoolMatrix* TwoNfa::transition(const Symbol& s) const {
  auto it = transitions.find(s);
  return it == transitions.end() ? nullptr : &it->second;
}

bool TwoNfa::is_deterministic() const {
  if (starts.nnz() != 1) return false;
  for (const auto& [sym, m] : transitions) {
    for (Index q = 0; q < m.nrows(); ++q) {
      if (m.row(q).size() > 1) return false;
    }
  }
  return true;
}

TwoNfa determinize(const RegexAst& ast) {
  const Thompson t(ast);
  const std::set<Symbol> symbols = t.symbols();

  std::map<std::vector<Index>, Index> ids;
  std::vector<std::vector<Index>> subsets;
  std::map<Symbol, std::vector<std::pair<Index, Index>>> edges;

  auto intern = [&](std::vector<Index> subset) {
    auto [it, inserted] = ids.emplace(subset, static_cast<Index>(subsets.size()));
    if (inserted) subsets.push_back(std::move(subset));
    return it->second;
  };

  intern(eps_closure(t, {t.start()}));
  for (Index cur = 0; cur < subsets.size(); ++cur) {
    for (const Symbol& sym : symbols) {
      std::vector<Index> next;
      for (Index s : subsets[cur]) {
        for (const auto& [label, to] : t.moves(s)) {
          if (label == sym) next.push_back(to);
        }
      }
      if (next.empty()) continue;
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      const Index to = intern(eps_closure(t, std::move(next)));
      edges[sym].emplace_back(cur, to);
    }
  }

  TwoNfa dfa;
  dfa.nstates = static_cast<Index>(subsets.size());
  for (auto& [sym, pairs] : edges) {
    dfa.transitions.emplace(sym, SparseBoolMatrix::from_pairs(dfa.nstates, dfa.nstates, std::move(pairs)));
  }
  std::vector<Index> finals;
  for (Index s = 0; s < subsets.size(); ++s) {
    if (std::binary_search(subsets[s].begin(), subsets[s].end(), t.final_state())) finals.push_back(s);
  }
  dfa.starts = selector(dfa.nstates, {0});
  dfa.finals = selector(dfa.nstates, finals);
  return dfa;
}

TwoNfa minimize(const TwoNfa& dfa) {
  if (!dfa.is_deterministic()) throw Error("minimize: automaton is not deterministic");

  // Complete the automaton with an explicit sink at index n.
  const Index n = dfa.nstates;
  const Index total = n + 1;
  const Index sink = n;
  const std::vector<Symbol> symbols = dfa.alphabet();
  const std::size_t k = symbols.size();

  std::vector<std::vector<Index>> delta(k, std::vector<Index>(total, sink));
  std::vector<std::vector<std::vector<Index>>> inverse(k, std::vector<std::vector<Index>>(total));
  for (std::size_t c = 0; c < k; ++c) {
    const SparseBoolMatrix& m = dfa.transitions.at(symbols[c]);
    for (Index q = 0; q < n; ++q) {
      if (!m.row(q).empty()) delta[c][q] = m.row(q)[0];
    }
    for (Index q = 0; q < total; ++q) inverse[c][delta[c][q]].push_back(q);
  }

  std::vector<bool> is_final(total, false);
  for (Index q : selected(dfa.finals)) is_final[q] = true;

  std::vector<std::vector<Index>> blocks;
  std::vector<std::size_t> block_of(total, 0);
  {
    std::vector<Index> accepting;
    std::vector<Index> rejecting;
    for (Index q = 0; q < total; ++q) (is_final[q] ? accepting : rejecting).push_back(q);
    for (auto* b : {&accepting, &rejecting}) {
      if (b->empty()) continue;
      for (Index q : *b) block_of[q] = blocks.size();
      blocks.push_back(std::move(*b));
    }
  }

  std::deque<std::size_t> work;
  std::vector<bool> in_work(blocks.size(), false);
  if (blocks.size() == 2) {
    const std::size_t smaller = blocks[0].size() <= blocks[1].size() ? 0 : 1;
    work.push_back(smaller);
    in_work[smaller] = true;
  }

  std::vector<bool> marked(total, false);
  while (!work.empty()) {
    const std::size_t splitter = work.front();
    work.pop_front();
    in_work[splitter] = false;
    const std::vector<Index> splitter_states = blocks[splitter];

    for (std::size_t c = 0; c < k; ++c) {
      std::vector<Index> pre;
      for (Index q : splitter_states) {
        for (Index p : inverse[c][q]) {
          if (!marked[p]) {
            marked[p] = true;
            pre.push_back(p);
          }
        }
      }
      std::vector<std::size_t> touched;
      for (Index p : pre) touched.push_back(block_of[p]);
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

      for (std::size_t y : touched) {
        std::vector<Index> inside;
        std::vector<Index> outside;
        for (Index q : blocks[y]) (marked[q] ? inside : outside).push_back(q);
        if (outside.empty()) continue;
        const std::size_t fresh = blocks.size();
        blocks[y] = std::move(inside);
        blocks.push_back(std::move(outside));
        in_work.push_back(false);
        for (Index q : blocks[fresh]) block_of[q] = fresh;
        if (in_work[y]) {
          work.push_back(fresh);
          in_work[fresh] = true;
        } else {
          const std::size_t smaller = blocks[y].size() <= blocks[fresh].size() ? y : fresh;
          work.push_back(smaller);
          in_work[smaller] = true;
        }
      }
      for (Index p : pre) marked[p] = false;
    }
  }

  // Number surviving classes by their smallest member; the sink's class
  // (all dead states) is dropped.
  const std::size_t dead = block_of[sink];
  std::vector<std::pair<Index, std::size_t>> order;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b == dead) continue;
    order.emplace_back(*std::min_element(blocks[b].begin(), blocks[b].end()), b);
  }
  std::sort(order.begin(), order.end());

  const Index start = selected(dfa.starts).front();
  TwoNfa out;
  if (block_of[start] == dead) {
    // Empty language: keep a lone non-accepting start state.
    out.nstates = 1;
    out.starts = selector(1, {0});
    out.finals = zero(1, 1);
    return out;
  }

  constexpr Index kNone = static_cast<Index>(-1);
  std::vector<Index> renumber(blocks.size(), kNone);
  for (Index i = 0; i < order.size(); ++i) renumber[order[i].second] = i;
  out.nstates = static_cast<Index>(order.size());

  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::pair<Index, Index>> pairs;
    for (const auto& [rep, b] : order) {
      const Index target = block_of[delta[c][rep]];
      if (target != dead) pairs.emplace_back(renumber[b], renumber[target]);
    }
    if (!pairs.empty()) {
      out.transitions.emplace(symbols[c], SparseBoolMatrix::from_pairs(out.nstates, out.nstates, std::move(pairs)));
    }
  }
  std::vector<Index> finals;
  for (const auto& [rep, b] : order) {
    if (is_final[rep]) finals.push_back(renumber[b]);
  }
  out.starts = selector(out.nstates, {renumber[block_of[start]]});
  out.finals = selector(out.nstates, finals);
  return out;
}

TwoNfa compile(const RegexAst& ast) { return minimize(determinize(ast)); }

TwoNfa compile(std::string_view pattern) { return compile(parse_query(pattern)); }

TwoNfa reverse(const TwoNfa& n) {
  TwoNfa out;
  out.nstates = n.nstates;
  for (const auto& [sym, m] : n.transitions) out.transitions.emplace(sym.flipped(), transpose(m));
  out.starts = n.finals;
  out.finals = n.starts;
  return out;
}

bool accepts(const TwoNfa& n, const Word& word) {
  std::vector<Index> current = selected(n.starts);
  std::vector<bool> seen(n.nstates, false);
  for (const Symbol& sym : word) {
    const SparseBoolMatrix* m = n.transition(sym);
    if (m == nullptr) return false;
    std::vector<Index> next;
    for (Index q : current) {
      for (Index to : m->row(q)) {
        if (!seen[to]) {
          seen[to] = true;
          next.push_back(to);
        }
      }
    }
    for (Index q : next) seen[q] = false;
    if (next.empty()) return false;
    current = std::move(next);
  }
  const auto fin = selected(n.finals);
  return std::any_of(current.begin(), current.end(),
                     [&](Index q) { return std::binary_search(fin.begin(), fin.end(), q); });
}

void write_transitions(const TwoNfa& n, std::ostream& out) {
  auto list = [](const std::vector<Index>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  out << "states=" << n.nstates << " start=" << list(selected(n.starts))
      << " final=" << list(selected(n.finals)) << '\n';
  for (const auto& [sym, m] : n.transitions) {
    for (const auto& [from, to] : m.to_pairs()) out << from << ' ' << to_string(sym) << ' ' << to << '\n';
  }
}

}  // namespace rpq
