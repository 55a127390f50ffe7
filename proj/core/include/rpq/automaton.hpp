#pragma once

#include <iosfwd>
#include <map>
#include <string_view>
#include <vector>

#include "rpq/regex.hpp"
#include "rpq/sparse_bool.hpp"

namespace rpq {

// Two-way automaton in Boolean-decomposed form: one nstates x nstates
// transition matrix per symbol of the two-way alphabet, plus 1 x nstates
// start and final selectors.
struct TwoNfa {
  Index nstates = 0;
  std::map<Symbol, SparseBoolMatrix> transitions;
  SparseBoolMatrix starts;
  SparseBoolMatrix finals;

  std::vector<Symbol> alphabet() const;

  // nullptr when the symbol has no transitions.
  const SparseBoolMatrix* transition(const Symbol& s) const;

  // One start state and at most one successor per (state, symbol).
  bool is_deterministic() const;

  bool operator==(const TwoNfa&) const = default;
};

// Thompson construction followed by subset construction. States are numbered
// in breadth-first discovery order from the start subset, exploring symbols
// in ascending order. Only states reachable from the start exist.
TwoNfa determinize(const RegexAst& ast);

// Hopcroft partition refinement over a deterministic automaton. Dead states
// are dropped; the surviving classes are numbered by their smallest member.
TwoNfa minimize(const TwoNfa& dfa);

// determinize + minimize.
TwoNfa compile(const RegexAst& ast);
TwoNfa compile(std::string_view pattern);

// Automaton for the reversed language: transitions transposed with symbol
// directions flipped, starts and finals exchanged.
TwoNfa reverse(const TwoNfa& n);

// Word membership by state-set simulation.
bool accepts(const TwoNfa& n, const Word& word);

// Human-readable dump: a header line followed by one `from symbol to` line
// per transition, ordered by symbol then source state.
void write_transitions(const TwoNfa& n, std::ostream& out);

}  // namespace rpq
