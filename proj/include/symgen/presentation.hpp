#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symgen/permutation.hpp"
#include "symgen/stabilizer_chain.hpp"

namespace symgen {

/// Generator g is the letter g; its inverse is ~g (always negative).
using Letter = std::int32_t;
using Word = std::vector<Letter>;

constexpr Letter inverse_letter(Letter x) noexcept { return ~x; }
constexpr std::size_t generator_of(Letter x) noexcept {
  return static_cast<std::size_t>(x >= 0 ? x : ~x);
}

Word inverse(const Word& w);
Word free_reduce(const Word& w);
/// Free reduction followed by cancelling letters across the wrap-around.
Word cyclic_reduce(const Word& w);
/// w^k for any integer k.
Word power(const Word& w, std::int64_t k);
Word concat(const Word& a, const Word& b);
/// a^-1 b^-1 a b
Word commutator(const Word& a, const Word& b);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t num_generators() const noexcept { return generators.size(); }
  std::optional<std::size_t> find_generator(std::string_view name) const;
  /// Throws std::invalid_argument on out-of-range letters or empty relators.
  void validate() const;
};

/// A presentation plus subgroup generators, as read from the plain text format
/// `gens: a b; rels: a^2, b^3, (a*b)^7, [a,b]^4; sub: a`.
struct PresentationJob {
  Presentation presentation;
  std::vector<Word> subgroup;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

PresentationJob parse_presentation_job(std::string_view text);
/// Parses one word; `lhs = rhs` yields lhs * rhs^-1.
Word parse_word(std::string_view text, const Presentation& p);

std::string format_word(const Word& w, std::span<const std::string> names);
std::string format_presentation_job(const PresentationJob& job);

/// Image of a word under generator images (left-to-right products).
Permutation evaluate(const Word& w, std::span<const Permutation> images);
/// Same, with precomputed inverses of the images.
Permutation evaluate(const Word& w, std::span<const Permutation> images,
                     std::span<const Permutation> inverse_images);

/// Invariants d_1 | d_2 | ... of the abelianization (0 marks a free factor).
/// Trivial factors are omitted.
std::vector<Integer> abelian_invariants(const Presentation& p);
/// Order of the abelianization, or nullopt when it is infinite.
std::optional<Integer> abelianization_order(const Presentation& p);

}  // namespace symgen
