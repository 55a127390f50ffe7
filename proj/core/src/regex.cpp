#include "rpq/regex.hpp"

#include <algorithm>
#include <cctype>

#include "rpq/error.hpp"

namespace rpq {
namespace {

bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':' || c == '.';
}

bool needs_quotes(const std::string& label) {
  return label.empty() || !std::all_of(label.begin(), label.end(), is_label_char);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RegexAst parse() {
    skip_space();
    if (at_end()) fail("empty pattern");
    RegexAst ast = parse_alt();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return ast;
  }

 private:
  RegexAst parse_alt() {
    std::vector<RegexAst> parts;
    parts.push_back(parse_concat());
    skip_space();
    while (!at_end() && peek() == '|') {
      ++pos_;
      parts.push_back(parse_concat());
      skip_space();
    }
    return parts.size() == 1 ? std::move(parts.front()) : RegexAst::alt(std::move(parts));
  }

  RegexAst parse_concat() {
    std::vector<RegexAst> parts;
    for (;;) {
      skip_space();
      if (at_end() || peek() == '|' || peek() == ')') break;
      parts.push_back(parse_closure());
    }
    if (parts.empty()) fail(at_end() ? "unexpected end of pattern" : std::string("expected label before '") + peek() + "'");
    return parts.size() == 1 ? std::move(parts.front()) : RegexAst::concat(std::move(parts));
  }

  RegexAst parse_closure() {
    RegexAst atom = parse_atom();
    if (at_end()) return atom;
    switch (peek()) {
      case '*': ++pos_; return RegexAst::star(std::move(atom));
      case '+': ++pos_; return RegexAst::plus(std::move(atom));
      case '?': ++pos_; return RegexAst::opt(std::move(atom));
      default: return atom;
    }
  }

  RegexAst parse_atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      RegexAst inner = parse_alt();
      skip_space();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '^') {
      ++pos_;
      if (at_end() || !(is_label_char(peek()) || peek() == '\'')) fail("expected label after '^'");
      return RegexAst::label(parse_label(), true);
    }
    if (is_label_char(c) || c == '\'') return RegexAst::label(parse_label(), false);
    fail(std::string("unexpected '") + c + "'");
  }

  std::string parse_label() {
    if (peek() == '\'') {
      const std::size_t open = pos_++;
      std::string out;
      for (;;) {
        if (at_end()) {
          pos_ = open;
          fail("unterminated quoted label");
        }
        const char c = text_[pos_++];
        if (c == '\'') {
          if (!at_end() && peek() == '\'') {
            out.push_back('\'');
            ++pos_;
            continue;
          }
          break;
        }
        out.push_back(c);
      }
      if (out.empty()) {
        pos_ = open;
        fail("empty quoted label");
      }
      return out;
    }
    const std::size_t start = pos_;
    while (!at_end() && is_label_char(peek())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_ + 1, what); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Symbol& s) {
  std::string out = s.inverted ? "^" : "";
  if (needs_quotes(s.label)) {
    out.push_back('\'');
    for (char c : s.label) {
      if (c == '\'') out.push_back('\'');
      out.push_back(c);
    }
    out.push_back('\'');
  } else {
    out += s.label;
  }
  return out;
}

RegexAst RegexAst::label(std::string name, bool inverted) {
  RegexAst n;
  n.kind = RegexKind::Label;
  n.symbol = Symbol{std::move(name), inverted};
  return n;
}

RegexAst RegexAst::concat(std::vector<RegexAst> parts) {
  if (parts.size() < 2) throw Error("concatenation needs at least two operands");
  RegexAst n;
  n.kind = RegexKind::Concat;
  n.children = std::move(parts);
  return n;
}

RegexAst RegexAst::alt(std::vector<RegexAst> parts) {
  if (parts.size() < 2) throw Error("alternation needs at least two operands");
  RegexAst n;
  n.kind = RegexKind::Alt;
  n.children = std::move(parts);
  return n;
}

namespace {
RegexAst unary(RegexKind kind, RegexAst child) {
  RegexAst n;
  n.kind = kind;
  n.children.push_back(std::move(child));
  return n;
}
}  // namespace

RegexAst RegexAst::star(RegexAst child) { return unary(RegexKind::Star, std::move(child)); }
RegexAst RegexAst::plus(RegexAst child) { return unary(RegexKind::Plus, std::move(child)); }
RegexAst RegexAst::opt(RegexAst child) { return unary(RegexKind::Opt, std::move(child)); }

RegexAst parse_query(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const RegexAst& ast) {
  switch (ast.kind) {
    case RegexKind::Label:
      return to_string(ast.symbol);
    case RegexKind::Concat:
    case RegexKind::Alt: {
      const char* sep = ast.kind == RegexKind::Concat ? " " : " | ";
      std::string out = "(";
      for (std::size_t i = 0; i < ast.children.size(); ++i) {
        if (i > 0) out += sep;
        out += to_string(ast.children[i]);
      }
      return out + ")";
    }
    case RegexKind::Star: return "(" + to_string(ast.children[0]) + ")*";
    case RegexKind::Plus: return "(" + to_string(ast.children[0]) + ")+";
    case RegexKind::Opt: return "(" + to_string(ast.children[0]) + ")?";
  }
  return {};
}

RegexAst reverse(const RegexAst& ast) {
  if (ast.kind == RegexKind::Label) return RegexAst::label(ast.symbol.label, !ast.symbol.inverted);
  RegexAst out;
  out.kind = ast.kind;
  out.children.reserve(ast.children.size());
  for (const auto& c : ast.children) out.children.push_back(reverse(c));
  if (ast.kind == RegexKind::Concat) std::reverse(out.children.begin(), out.children.end());
  return out;
}

bool nullable(const RegexAst& ast) {
  switch (ast.kind) {
    case RegexKind::Label: return false;
    case RegexKind::Concat:
      return std::all_of(ast.children.begin(), ast.children.end(), [](const auto& c) { return nullable(c); });
    case RegexKind::Alt:
      return std::any_of(ast.children.begin(), ast.children.end(), [](const auto& c) { return nullable(c); });
    case RegexKind::Star:
    case RegexKind::Opt: return true;
    case RegexKind::Plus: return nullable(ast.children[0]);
  }
  return false;
}

}  // namespace rpq
