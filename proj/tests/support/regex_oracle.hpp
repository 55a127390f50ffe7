#pragma once

#include <set>

#include "rpq/regex.hpp"

namespace rpq::testing {

// Positions j such that word[i, j) matches `ast`. Works on the syntax tree
// directly; no automaton is involved.
inline std::set<std::size_t> match_ends(const RegexAst& ast, const Word& word, std::size_t i) {
  std::set<std::size_t> out;
  switch (ast.kind) {
    case RegexKind::Label:
      if (i < word.size() && word[i] == ast.symbol) out.insert(i + 1);
      break;
    case RegexKind::Concat: {
      std::set<std::size_t> cur{i};
      for (const auto& c : ast.children) {
        std::set<std::size_t> next;
        for (std::size_t p : cur) {
          const auto ends = match_ends(c, word, p);
          next.insert(ends.begin(), ends.end());
        }
        cur = std::move(next);
      }
      out = std::move(cur);
      break;
    }
    case RegexKind::Alt:
      for (const auto& c : ast.children) {
        const auto ends = match_ends(c, word, i);
        out.insert(ends.begin(), ends.end());
      }
      break;
    case RegexKind::Star:
    case RegexKind::Plus: {
      std::set<std::size_t> frontier{i};
      std::set<std::size_t> reached;
      if (ast.kind == RegexKind::Star) reached.insert(i);
      while (!frontier.empty()) {
        std::set<std::size_t> next;
        for (std::size_t p : frontier) {
          for (std::size_t e : match_ends(ast.children[0], word, p)) {
            if (reached.insert(e).second) next.insert(e);
          }
        }
        frontier = std::move(next);
      }
      out = std::move(reached);
      break;
    }
    case RegexKind::Opt:
      out = match_ends(ast.children[0], word, i);
      out.insert(i);
      break;
  }
  return out;
}

inline bool ast_matches(const RegexAst& ast, const Word& word) {
  return match_ends(ast, word, 0).count(word.size()) != 0;
}

}  // namespace rpq::testing
