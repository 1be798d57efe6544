#include "symgen/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace symgen {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& x : out) x = inverse_letter(x);
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == inverse_letter(x))
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == inverse_letter(r[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word power(const Word& w, std::int64_t k) {
  const Word base = k < 0 ? inverse(w) : w;
  const std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Word out;
  out.reserve(base.size() * n);
  for (std::uint64_t i = 0; i < n; ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word commutator(const Word& a, const Word& b) {
  return concat(concat(inverse(a), inverse(b)), concat(a, b));
}

std::optional<std::size_t> Presentation::find_generator(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name) return i;
  return std::nullopt;
}

void Presentation::validate() const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].empty()) throw std::invalid_argument("empty generator name");
    for (std::size_t j = 0; j < i; ++j)
      if (generators[i] == generators[j])
        throw std::invalid_argument("duplicate generator '" + generators[i] + "'");
  }
  for (const auto& r : relators)
    for (Letter x : r)
      if (generator_of(x) >= generators.size())
        throw std::invalid_argument("relator letter out of range");
}

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, std::size_t base, std::string_view full, const Presentation& p)
      : text_(text), base_(base), full_(full), p_(p) {}

  Word parse_relation() {
    Word lhs = parse_product();
    skip_ws();
    if (peek() == '=') {
      ++pos_;
      Word rhs = parse_product();
      lhs = concat(lhs, inverse(rhs));
    }
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return lhs;
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }

  [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const {
    const std::size_t abs = base_ + pos;
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < abs && i < full_.size(); ++i) {
      if (full_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool starts_factor() {
    skip_ws();
    const char c = peek();
    return c == '(' || c == '[' || c == '1' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  Word parse_product() {
    Word w = parse_factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        w = concat(w, parse_factor());
      } else if (starts_factor()) {
        w = concat(w, parse_factor());
      } else {
        return w;
      }
    }
  }

  Word parse_factor() {
    Word w = parse_primary();
    for (;;) {
      skip_ws();
      if (peek() != '^') return w;
      ++pos_;
      skip_ws();
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
        skip_ws();
      }
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer exponent");
      std::int64_t k = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        k = k * 10 + (text_[pos_] - '0');
        if (k > 1'000'000) fail("exponent too large");
        ++pos_;
      }
      w = power(w, neg ? -k : k);
    }
  }

  Word parse_primary() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Word w = parse_product();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word a = parse_product();
      skip_ws();
      if (peek() != ',') fail("expected ',' in commutator");
      ++pos_;
      Word b = parse_product();
      skip_ws();
      if (peek() != ']') fail("expected ']'");
      ++pos_;
      return commutator(a, b);
    }
    if (c == '1') {
      ++pos_;
      return {};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (auto g = p_.find_generator(name)) return {static_cast<Letter>(*g)};
      // Juxtaposed one-character generators, e.g. "abab": take one letter and
      // leave the rest (and any exponent) to the following factors.
      auto g = p_.find_generator(name.substr(0, 1));
      if (!g) fail_at(start, "unknown generator '" + std::string(name) + "'");
      pos_ = start + 1;
      return {static_cast<Letter>(*g)};
    }
    if (c == '\0') fail("unexpected end of word");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t base_;
  std::string_view full_;
  const Presentation& p_;
  std::size_t pos_ = 0;
};

// Splits [begin, end) of `text` at top-level occurrences of `sep`.
std::vector<std::pair<std::size_t, std::size_t>> split_top(std::string_view text, std::size_t begin,
                                                           std::size_t end, char sep) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  int depth = 0;
  std::size_t start = begin;
  for (std::size_t i = begin; i < end; ++i) {
    const char c = text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back({start, i});
      start = i + 1;
    }
  }
  out.push_back({start, end});
  return out;
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Word parse_word(std::string_view text, const Presentation& p) {
  WordParser parser(text, 0, text, p);
  return parser.parse_relation();
}

PresentationJob parse_presentation_job(std::string_view text) {
  PresentationJob job;
  Presentation& p = job.presentation;
  WordParser err(text, 0, text, p);
  bool have_gens = false;
  struct Pending {
    std::size_t begin, end;
    bool subgroup;
  };
  std::vector<Pending> words;

  // Strip '#' comments by treating them as whitespace.
  std::string clean(text);
  for (std::size_t i = 0; i < clean.size(); ++i)
    if (clean[i] == '#')
      while (i < clean.size() && clean[i] != '\n') clean[i++] = ' ';
  const std::string_view src(clean);

  for (auto [b, e] : split_top(src, 0, src.size(), ';')) {
    if (blank(src.substr(b, e - b))) continue;
    const std::size_t colon = src.find(':', b);
    if (colon == std::string_view::npos || colon >= e) {
      WordParser(src.substr(b, e - b), b, text, p).fail_at(0, "expected 'gens:', 'rels:' or 'sub:'");
    }
    const std::string key(trim(src.substr(b, colon - b)));
    if (key == "gens" || key == "generators") {
      have_gens = true;
      std::size_t i = colon + 1;
      while (i < e) {
        while (i < e && (std::isspace(static_cast<unsigned char>(src[i])) || src[i] == ',')) ++i;
        const std::size_t s = i;
        while (i < e && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
        if (s == i) {
          if (i < e) WordParser(src, 0, text, p).fail_at(i, "invalid generator name");
          break;
        }
        if (std::isdigit(static_cast<unsigned char>(src[s])))
          WordParser(src, 0, text, p).fail_at(s, "generator names must start with a letter");
        const std::string name(src.substr(s, i - s));
        if (p.find_generator(name)) WordParser(src, 0, text, p).fail_at(s, "duplicate generator '" + name + "'");
        p.generators.push_back(name);
      }
    } else if (key == "rels" || key == "relators" || key == "sub" || key == "subgroup") {
      const bool sub = key == "sub" || key == "subgroup";
      for (auto [wb, we] : split_top(src, colon + 1, e, ','))
        if (!blank(src.substr(wb, we - wb))) words.push_back({wb, we, sub});
    } else {
      std::size_t at = b;
      while (at < colon && std::isspace(static_cast<unsigned char>(src[at]))) ++at;
      WordParser(src, 0, text, p).fail_at(at, "unknown section '" + key + "'");
    }
  }
  if (!have_gens) err.fail_at(0, "missing 'gens:' section");
  for (const auto& pw : words) {
    WordParser wp(src.substr(pw.begin, pw.end - pw.begin), pw.begin, text, p);
    Word w = wp.parse_relation();
    if (pw.subgroup)
      job.subgroup.push_back(free_reduce(w));
    else
      p.relators.push_back(w);
  }
  return job;
}

std::string format_word(const Word& w, std::span<const std::string> names) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += '*';
    out += names[generator_of(w[i])];
    const std::size_t run = j - i;
    if (w[i] < 0)
      out += "^-" + std::to_string(run);
    else if (run > 1)
      out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

std::string format_presentation_job(const PresentationJob& job) {
  const auto& p = job.presentation;
  std::string out = "gens:";
  for (const auto& g : p.generators) out += " " + g;
  out += ";\nrels: ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i) out += ", ";
    out += format_word(p.relators[i], p.generators);
  }
  out += ";\nsub: ";
  for (std::size_t i = 0; i < job.subgroup.size(); ++i) {
    if (i) out += ", ";
    out += format_word(job.subgroup[i], p.generators);
  }
  out += ";\n";
  return out;
}

Permutation evaluate(const Word& w, std::span<const Permutation> images) {
  std::vector<Permutation> inv;
  inv.reserve(images.size());
  for (const auto& g : images) inv.push_back(g.inverse());
  return evaluate(w, images, inv);
}

Permutation evaluate(const Word& w, std::span<const Permutation> images,
                     std::span<const Permutation> inverse_images) {
  if (images.empty()) throw std::invalid_argument("evaluate: no generator images");
  const std::size_t n = images[0].degree();
  std::vector<Point> acc(n);
  for (Point x = 0; x < n; ++x) acc[x] = x;
  for (Letter l : w) {
    const std::size_t g = generator_of(l);
    if (g >= images.size()) throw std::invalid_argument("evaluate: letter out of range");
    const auto img = (l >= 0 ? images[g] : inverse_images[g]).images();
    for (auto& y : acc) y = img[y];
  }
  return Permutation::unchecked(std::move(acc));
}

namespace {

using Matrix = std::vector<std::vector<Integer>>;

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Diagonal of the Smith normal form (nonzero entries only), as absolute values.
std::vector<Integer> smith_diagonal(Matrix a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Pivot: smallest nonzero absolute value in the lower-right block.
      std::size_t pr = rows, pc = cols;
      Integer best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (best == 0 || abs_int(a[i][j]) < best)) {
            best = abs_int(a[i][j]);
            pr = i;
            pc = j;
          }
      if (pr == rows) return diag;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const Integer q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const Integer q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the remaining block by the pivot.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    diag.push_back(abs_int(a[t][t]));
  }
  return diag;
}

}  // namespace

std::vector<Integer> abelian_invariants(const Presentation& p) {
  const std::size_t n = p.num_generators();
  Matrix a;
  for (const auto& r : p.relators) {
    std::vector<Integer> row(n, 0);
    for (Letter x : r) row[generator_of(x)] += x >= 0 ? 1 : -1;
    if (std::any_of(row.begin(), row.end(), [](const Integer& v) { return v != 0; }))
      a.push_back(std::move(row));
  }
  auto diag = smith_diagonal(std::move(a), n);
  std::vector<Integer> out;
  for (const auto& d : diag)
    if (d != 1) out.push_back(d);
  for (std::size_t i = diag.size(); i < n; ++i) out.push_back(0);
  return out;
}

std::optional<Integer> abelianization_order(const Presentation& p) {
  Integer n = 1;
  for (const auto& d : abelian_invariants(p)) {
    if (d == 0) return std::nullopt;
    n *= d;
  }
  return n;
}

}  // namespace symgen
