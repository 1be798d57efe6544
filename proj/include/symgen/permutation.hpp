#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symgen {

using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1}, stored as its image array.
///
/// Products compose left to right: `(a * b)(x) == b(a(x))`, so conjugation
/// `x^g = g^-1 x g` relabels points the way `t_i^g = t_{g(i)}` does.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);
  /// Skips the bijection check; callers guarantee `images` is a permutation.
  static Permutation unchecked(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  /// Builds from 0-based cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const noexcept { return images_[x]; }
  Point operator[](Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  /// Order as the lcm of cycle lengths.
  std::uint64_t order() const;
  Permutation power(std::int64_t k) const;
  std::vector<std::vector<Point>> cycles() const;
  /// Smallest moved point, or degree() for the identity.
  Point first_moved() const noexcept;

  friend void compose_into(const Permutation& a, const Permutation& b, Permutation& out);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// x -> b(a(x)).  Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return compose(a, b);
}
/// g^-1 a g
Permutation conjugate(const Permutation& a, const Permutation& g);
/// a^-1 b^-1 a b
Permutation commutator(const Permutation& a, const Permutation& b);

/// In-place `out = a * b` without allocation when sizes already match.
void compose_into(const Permutation& a, const Permutation& b, Permutation& out);

/// 1-based cycle notation, "()" for the identity.
std::string to_cycle_string(const Permutation& p);
/// Parses "(1 2 3)(4 5)" (1-based; commas also separate points).
Permutation parse_cycles(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace symgen
