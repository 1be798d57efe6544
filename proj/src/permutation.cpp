#include "symgen/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symgen {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Point x = c[i];
      if (x >= degree) throw std::out_of_range("cycle point out of range");
      if (used[x]) throw std::invalid_argument("point repeated in cycle notation");
      used[x] = true;
      img[x] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (Point x = 0; x < images_.size(); ++x) inv[images_[x]] = x;
  return unchecked(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (Point x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (Point x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (Point y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation Permutation::power(std::int64_t k) const {
  Permutation base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Permutation result(degree());
  while (e) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    std::vector<Point> c;
    for (Point y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      c.push_back(y);
    }
    out.push_back(std::move(c));
  }
  return out;
}

Point Permutation::first_moved() const noexcept {
  for (Point x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return x;
  return static_cast<Point>(images_.size());
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out;
  compose_into(a, b, out);
  return out;
}

void compose_into(const Permutation& a, const Permutation& b, Permutation& out) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("cannot compose permutations of different degree");
  auto ai = a.images();
  auto bi = b.images();
  if (&out == &a || &out == &b) {
    std::vector<Point> img(a.degree());
    for (std::size_t x = 0; x < img.size(); ++x) img[x] = bi[ai[x]];
    out.images_ = std::move(img);
    return;
  }
  out.images_.resize(a.degree());
  for (std::size_t x = 0; x < out.images_.size(); ++x) out.images_[x] = bi[ai[x]];
}

Permutation conjugate(const Permutation& a, const Permutation& g) {
  if (a.degree() != g.degree())
    throw std::invalid_argument("cannot conjugate permutations of different degree");
  // g^-1 a g maps g(x) -> g(a(x)).
  std::vector<Point> img(a.degree());
  for (Point x = 0; x < a.degree(); ++x) img[g(x)] = g(a(x));
  return Permutation::unchecked(std::move(img));
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

std::string to_cycle_string(const Permutation& p) {
  auto cs = p.cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i] + 1;
    }
    os << ')';
  }
  return os.str();
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("expected '(' at column " + std::to_string(i + 1) +
                                  " in cycle notation");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("expected point at column " + std::to_string(i + 1) +
                                    " in cycle notation");
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + static_cast<std::uint64_t>(text[i++] - '0');
      if (v == 0 || v > degree)
        throw std::out_of_range("cycle point " + std::to_string(v) + " outside 1.." +
                                std::to_string(degree));
      cycle.push_back(static_cast<Point>(v - 1));
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return Permutation::from_cycles(degree, cycles);
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace symgen
