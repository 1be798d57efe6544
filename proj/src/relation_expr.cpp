#include "symgen/relation_expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace symgen {

RelationExpr RelationExpr::make_product(std::vector<RelationExpr> factors) {
  if (factors.size() == 1) return std::move(factors[0]);
  RelationExpr e;
  e.kind = Kind::product;
  e.args = std::move(factors);
  return e;
}

RelationExpr RelationExpr::make_power(RelationExpr base, int k) {
  RelationExpr e;
  e.kind = Kind::power;
  e.exponent = k;
  e.args.push_back(std::move(base));
  return e;
}

RelationExpr RelationExpr::make_symmetric(std::string label) {
  RelationExpr e;
  e.kind = Kind::symmetric;
  e.text = std::move(label);
  return e;
}

RelationExpr RelationExpr::make_cycles(std::vector<std::vector<std::string>> cycles) {
  RelationExpr e;
  e.kind = Kind::cycles;
  e.cycles = std::move(cycles);
  return e;
}

bool operator==(const RelationExpr& a, const RelationExpr& b) {
  return a.kind == b.kind && a.exponent == b.exponent && a.text == b.text && a.cycles == b.cycles &&
         a.args == b.args;
}

namespace {

bool is_cycle_char(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == ' ' || c == ',' || c == '\t';
}

class ExprParser {
 public:
  ExprParser(std::string_view text, std::size_t line, std::size_t column)
      : text_(text), line_(line), column_(column) {}

  RelationExpr parse_all() {
    RelationExpr e = parse_relation();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

  RelationExpr parse_relation() {
    skip_ws();
    const auto start = pos_;
    RelationExpr lhs = parse_expr();
    skip_ws();
    if (peek() == '=') {
      ++pos_;
      RelationExpr eq;
      eq.kind = RelationExpr::Kind::equation;
      locate(eq, start);
      eq.args.push_back(std::move(lhs));
      eq.args.push_back(parse_expr());
      return eq;
    }
    return lhs;
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }

  [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const {
    std::size_t line = line_, col = column_;
    for (std::size_t i = 0; i < pos && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

 private:
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void locate(RelationExpr& e, std::size_t pos) const {
    std::size_t line = line_, col = column_;
    for (std::size_t i = 0; i < pos && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    e.line = line;
    e.column = col;
  }

  bool starts_atom() {
    skip_ws();
    const char c = peek();
    return c == '(' || c == '[' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  RelationExpr parse_expr() {
    skip_ws();
    const auto start = pos_;
    std::vector<RelationExpr> factors;
    factors.push_back(parse_term());
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        factors.push_back(parse_term());
      } else if (starts_atom()) {
        factors.push_back(parse_term());
      } else {
        break;
      }
    }
    auto e = RelationExpr::make_product(std::move(factors));
    if (e.kind == RelationExpr::Kind::product) locate(e, start);
    return e;
  }

  RelationExpr parse_term() {
    skip_ws();
    const auto start = pos_;
    RelationExpr e = parse_atom();
    for (;;) {
      skip_ws();
      if (peek() != '^') return e;
      ++pos_;
      skip_ws();
      const auto at = pos_;
      if (peek() == '-') fail("exponents must be at least 1");
      int k = 0;
      auto [p, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), k);
      if (ec != std::errc()) fail("expected an exponent");
      pos_ = static_cast<std::size_t>(p - text_.data());
      if (k < 1) fail_at(at, "exponents must be at least 1");
      e = RelationExpr::make_power(std::move(e), k);
      locate(e, start);
    }
  }

  // Index of the ')' closing the '(' at pos_, or npos.
  std::size_t matching_paren(std::size_t open) const {
    int depth = 0;
    for (std::size_t i = open; i < text_.size(); ++i) {
      if (text_[i] == '(') ++depth;
      if (text_[i] == ')' && --depth == 0) return i;
    }
    return std::string_view::npos;
  }

  bool is_cycle_at(std::size_t open) const {
    const auto close = matching_paren(open);
    if (close == std::string_view::npos) return false;
    for (std::size_t i = open + 1; i < close; ++i)
      if (!is_cycle_char(text_[i])) return false;
    return true;
  }

  std::vector<std::string> parse_cycle_body(std::string_view body) const {
    std::vector<std::string> pts;
    const bool separated = body.find_first_of(" ,\t") != std::string_view::npos;
    if (separated) {
      std::size_t i = 0;
      while (i < body.size()) {
        while (i < body.size() && (body[i] == ' ' || body[i] == ',' || body[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < body.size() && body[j] != ' ' && body[j] != ',' && body[j] != '\t') ++j;
        if (j > i) pts.emplace_back(body.substr(i, j - i));
        i = j;
      }
    } else {
      for (char c : body) pts.emplace_back(1, c);
    }
    return pts;
  }

  std::string read_bracketed(const char* what) {
    // pos_ is just after '['.
    const auto close = text_.find(']', pos_);
    const auto bad = text_.find_first_of("[()\n", pos_);
    if (close == std::string_view::npos || (bad != std::string_view::npos && bad < close))
      fail_at(bad != std::string_view::npos && bad < close ? bad : text_.size(),
              std::string("expected ']' to close the ") + what);
    std::string s(text_.substr(pos_, close - pos_));
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    if (s.empty()) fail(std::string("empty ") + what);
    pos_ = close + 1;
    return s;
  }

  RelationExpr parse_atom() {
    skip_ws();
    const auto start = pos_;
    const char c = peek();
    RelationExpr e;
    if (c == '(') {
      if (is_cycle_at(pos_)) {
        e.kind = RelationExpr::Kind::cycles;
        while (peek() == '(' && is_cycle_at(pos_)) {
          const auto close = matching_paren(pos_);
          auto pts = parse_cycle_body(text_.substr(pos_ + 1, close - pos_ - 1));
          if (!pts.empty()) e.cycles.push_back(std::move(pts));
          pos_ = close + 1;
        }
        locate(e, start);
        return e;
      }
      ++pos_;
      e = parse_expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (c == '[') {
      ++pos_;
      e.kind = RelationExpr::Kind::commutator;
      e.args.push_back(parse_expr());
      skip_ws();
      if (peek() != ',') fail("expected ',' in commutator");
      ++pos_;
      e.args.push_back(parse_expr());
      skip_ws();
      if (peek() != ']') fail("expected ']' closing commutator");
      ++pos_;
      locate(e, start);
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = pos_;
      while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) ++j;
      const std::string ident(text_.substr(pos_, j - pos_));
      pos_ = j;
      if ((ident == "t" || ident == "g") && peek() == '[') {
        ++pos_;
        e.kind = ident == "t" ? RelationExpr::Kind::symmetric : RelationExpr::Kind::generator;
        e.text = read_bracketed(ident == "t" ? "symmetric generator label" : "generator name");
      } else {
        e.kind = RelationExpr::Kind::name;
        e.text = ident;
      }
      locate(e, start);
      return e;
    }
    if (c == '\0') fail("unexpected end of relation");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t column_;
  std::size_t pos_ = 0;
};

void print(const RelationExpr& e, std::string& out);

void print_operand(const RelationExpr& e, std::string& out) {
  const bool wrap = e.kind == RelationExpr::Kind::product || e.kind == RelationExpr::Kind::equation;
  if (wrap) out += '(';
  print(e, out);
  if (wrap) out += ')';
}

void print(const RelationExpr& e, std::string& out) {
  using K = RelationExpr::Kind;
  switch (e.kind) {
    case K::product:
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += " * ";
        print_operand(e.args[i], out);
      }
      break;
    case K::power:
      print_operand(e.args[0], out);
      out += '^' + std::to_string(e.exponent);
      break;
    case K::commutator:
      out += '[';
      print(e.args[0], out);
      out += ", ";
      print(e.args[1], out);
      out += ']';
      break;
    case K::equation:
      print(e.args[0], out);
      out += " = ";
      print(e.args[1], out);
      break;
    case K::cycles:
      if (e.cycles.empty()) out += "()";
      for (const auto& c : e.cycles) {
        out += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
          if (i) out += ' ';
          out += c[i];
        }
        out += ')';
      }
      break;
    case K::symmetric:
      out += "t[" + e.text + "]";
      break;
    case K::generator:
      out += "g[" + e.text + "]";
      break;
    case K::name:
      out += e.text;
      break;
  }
}

}  // namespace

RelationExpr parse_relation(std::string_view text, std::size_t line, std::size_t column) {
  return ExprParser(text, line, column).parse_all();
}

std::vector<RelationExpr> parse_relations(std::string_view text, std::size_t line, std::size_t column) {
  std::vector<RelationExpr> out;
  int depth = 0;
  std::size_t start = 0;
  std::size_t seg_line = line, seg_col = column;
  std::size_t cur_line = line, cur_col = column;
  auto flush = [&](std::size_t end) {
    const auto piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t\r\n") != std::string_view::npos)
      out.push_back(parse_relation(piece, seg_line, seg_col));
  };
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : '\n';
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    const bool split = i == text.size() || c == ';' || c == '\n' || (c == ',' && depth == 0);
    if (split && (depth <= 0 || i == text.size())) {
      flush(i);
      start = i + 1;
      if (c == '\n') {
        seg_line = cur_line + 1;
        seg_col = 1;
      } else {
        seg_line = cur_line;
        seg_col = cur_col + 1;
      }
    }
    if (c == '\n') {
      ++cur_line;
      cur_col = 1;
    } else {
      ++cur_col;
    }
  }
  return out;
}

std::string to_string(const RelationExpr& e) {
  std::string out;
  print(e, out);
  return out;
}

std::size_t t_length(const RelationExpr& e) {
  using K = RelationExpr::Kind;
  switch (e.kind) {
    case K::symmetric:
      return 1;
    case K::power:
      return t_length(e.args[0]) * static_cast<std::size_t>(e.exponent);
    case K::commutator:
      return 2 * (t_length(e.args[0]) + t_length(e.args[1]));
    default: {
      std::size_t n = 0;
      for (const auto& a : e.args) n += t_length(a);
      return n;
    }
  }
}

bool mentions(const RelationExpr& e, std::string_view name) {
  if (e.kind == RelationExpr::Kind::name && e.text == name) return true;
  return std::any_of(e.args.begin(), e.args.end(), [&](const auto& a) { return mentions(a, name); });
}

namespace {
void collect_labels(const RelationExpr& e, std::vector<std::string>& out) {
  if (e.kind == RelationExpr::Kind::symmetric && std::find(out.begin(), out.end(), e.text) == out.end())
    out.push_back(e.text);
  for (const auto& a : e.args) collect_labels(a, out);
}
}  // namespace

std::vector<std::string> symmetric_labels(const RelationExpr& e) {
  std::vector<std::string> out;
  collect_labels(e, out);
  return out;
}

}  // namespace symgen
