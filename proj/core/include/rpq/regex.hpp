#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace rpq {

// One letter of the two-way alphabet: an edge label, optionally traversed
// against edge direction.
struct Symbol {
  std::string label;
  bool inverted = false;

  Symbol flipped() const { return {label, !inverted}; }
  auto operator<=>(const Symbol&) const = default;
};

std::string to_string(const Symbol& s);

using Word = std::vector<Symbol>;

enum class RegexKind { Label, Concat, Alt, Star, Plus, Opt };

// Pattern syntax tree. Concat and Alt always hold at least two children;
// Star, Plus and Opt hold exactly one.
struct RegexAst {
  RegexKind kind = RegexKind::Label;
  Symbol symbol;                   // Label only
  std::vector<RegexAst> children;  // everything else

  static RegexAst label(std::string name, bool inverted = false);
  static RegexAst concat(std::vector<RegexAst> parts);
  static RegexAst alt(std::vector<RegexAst> parts);
  static RegexAst star(RegexAst child);
  static RegexAst plus(RegexAst child);
  static RegexAst opt(RegexAst child);

  bool operator==(const RegexAst&) const = default;
};

// Grammar:
//   pattern := alt
//   alt     := concat ('|' concat)*
//   concat  := closure+
//   closure := atom ('*' | '+' | '?')?
//   atom    := LABEL | '^' LABEL | '(' alt ')'
//   LABEL   := [A-Za-z0-9_:.]+ | '...' (single-quoted, '' escapes a quote)
// Throws ParseError carrying a 1-based column.
RegexAst parse_query(std::string_view text);

// Fully parenthesised rendering that parse_query reads back to the same tree.
std::string to_string(const RegexAst& ast);

// Pattern for the reversed language: concatenations reversed and every label
// direction flipped.
RegexAst reverse(const RegexAst& ast);

// Whether the empty word belongs to the pattern's language.
bool nullable(const RegexAst& ast);

}  // namespace rpq
