#pragma once

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "symgen/action.hpp"
#include "symgen/control.hpp"
#include "symgen/relation_expr.hpp"
#include "symgen/todd_coxeter.hpp"

namespace symgen {

/// One orbit of the control group on the symmetric generators.
struct SymOrbit {
  Point rep;                        // t_rep is the orbit's distinguished generator
  std::vector<Point> points;        // BFS order from rep
  std::vector<Word> stabilizer_words;  // generate Stab_N(rep)
};

/// The progenitor 2^*n : N for a control group N acting on n points.  Every
/// orbit contributes one generator t of the ordinary presentation; t_i is
/// sigma_i^-1 t sigma_i with sigma_i a control word taking the orbit
/// representative to i.
class Progenitor {
 public:
  Progenitor(ControlGroup control, Action action);

  const ControlGroup& control() const noexcept { return control_; }
  const Action& action() const noexcept { return action_; }
  std::size_t degree() const noexcept { return action_.degree(); }
  /// Control generators acting on the symmetric generators.
  const std::vector<Permutation>& action_images() const noexcept { return action_images_; }
  const PermutationGroup& action_group() const noexcept { return action_group_; }
  bool transitive() const noexcept { return orbits_.size() == 1; }
  const std::vector<SymOrbit>& orbits() const noexcept { return orbits_; }
  std::size_t orbit_of(Point i) const { return orbit_index_.at(i); }

  /// Letter of the orbit's t in the expanded presentation.
  Letter t_letter(std::size_t orbit) const {
    return static_cast<Letter>(control_.presentation.num_generators() + orbit);
  }
  const Word& sigma(Point i) const { return sigma_.at(i); }
  /// sigma_i^-1 t sigma_i
  Word t_word(Point i) const;
  bool is_t_letter(Letter x) const { return generator_of(x) >= control_.presentation.num_generators(); }

  /// Control presentation, plus t^2 and [t, s] for each stabilizer word s.
  Presentation presentation() const;
  /// The control generators (the enumeration counts cosets of N).
  std::vector<Word> subgroup() const;
  Permutation induce(const Permutation& base) const { return action_.induce(base); }

 private:
  ControlGroup control_;
  Action action_;
  std::vector<Permutation> action_images_;
  PermutationGroup action_group_;
  std::vector<SymOrbit> orbits_;
  std::vector<std::size_t> orbit_index_;
  std::vector<Word> sigma_;
};

/// Values for bare names in relations (`pi`, or names from a config file).
struct Bindings {
  std::map<std::string, RelationExpr> names;
  std::map<std::string, Permutation> permutations;  // base permutations, e.g. a searched pi
};

/// Base permutation written in cycle notation over the control's base points.
Permutation resolve_cycles(const RelationExpr& cycles, std::size_t base_degree);
/// The relator word of a relation: permutations are encoded in the control
/// generators, t[label] becomes t_word(label), lhs = rhs becomes lhs rhs^-1.
/// Throws std::invalid_argument for unknown labels, names or permutations outside N.
Word relator_word(const Progenitor& p, const RelationExpr& e, const Bindings& b = {});

/// An element pi w of the progenitor: pi in N (base permutation) followed by t_{w_1} ... t_{w_k}.
struct ProgElement {
  Permutation pi;
  std::vector<Point> w;
  friend bool operator==(const ProgElement&, const ProgElement&) = default;
};
/// (pi1, w1)(pi2, w2) = (pi1 pi2, w1^pi2 w2), using t_i^pi = t_{pi(i)}.
ProgElement multiply(const Progenitor& p, const ProgElement& a, const ProgElement& b);
/// (pi, w)^-1 = (pi^-1, reverse(w)^(pi^-1)).
ProgElement invert(const Progenitor& p, const ProgElement& a);
/// Word in the expanded presentation.
Word element_word(const Progenitor& p, const ProgElement& e);

struct EnumerationReport {
  std::size_t index = 0;
  bool control_embeds = false;     // N acts on the cosets with image of order |N|
  Integer control_image_order;     // order of that image
  Integer order;                   // index * control_image_order
  EnumerationStats stats;
  double seconds = 0;
};

/// A finished enumeration of the cosets of N in the target group.
struct SymEnumeration {
  std::shared_ptr<const Progenitor> progenitor;
  Presentation presentation;       // expanded, including the relators
  std::shared_ptr<const CosetTable> table;
  EnumerationReport report;

  /// Permutation of the cosets induced by a word in the expanded presentation.
  Permutation coset_permutation(const Word& w) const;
  /// Control generators acting on the cosets.
  std::vector<Permutation> control_on_cosets() const;
  /// t_i acting on the cosets, for every symmetric generator i.
  std::vector<Permutation> t_on_cosets() const;
};

using SymResult = std::variant<SymEnumeration, Overflow>;

/// Plain coset enumeration over the expanded presentation, or double coset
/// enumeration (see double_coset_enum.hpp).
enum class Method { cosets, double_cosets };

/// Expands the relators and enumerates the cosets of N.
SymResult enumerate(std::shared_ptr<const Progenitor> p, const std::vector<Word>& relators,
                    const EnumerationLimits& limits = {});

/// Double cosets N w N as N-orbits on the coset space.
struct DoubleCoset {
  std::uint32_t coset;             // first coset of the orbit reached by t-edges
  std::vector<Point> word;         // shortest t-word reaching it
  std::size_t size = 0;            // |N : N^(w)|, the single cosets in the orbit
  Integer stabilizer_order;        // |N^(w)|
  std::map<std::size_t, std::vector<Point>> edges;  // target double coset -> points i with coset * t_i there
};
struct DoubleCosetTable {
  std::vector<DoubleCoset> cosets;  // in BFS order; cosets[0] is N itself
  std::vector<std::size_t> coset_class;  // single coset -> double coset index
  std::size_t index() const;
  bool connected() const;
};
DoubleCosetTable double_coset_analysis(const SymEnumeration& e);
/// `[1]`-style name of a double coset from its t-word and the action labels.
std::string double_coset_name(const Progenitor& p, const DoubleCoset& d);
/// Deterministic DOT rendering of the double-coset Cayley graph.
std::string to_dot(const Progenitor& p, const DoubleCosetTable& t, const std::string& title = "G");

/// C_N(Stab_N(points)) inside N acting on the symmetric generators.
PermutationGroup lemma_centralizer(const Progenitor& p, const std::vector<Point>& points);

/// Checks image(t_i)^image(g) = image(t_{g(i)}) for random control elements g and points i.
std::size_t conjugation_law_violations(const SymEnumeration& e, std::size_t samples, std::mt19937_64& rng);

/// Every element of <t_i, t_j> that lies in N must centralize Stab_N(i, j).
struct CentralizerCheck {
  std::size_t pairs = 0;
  std::size_t words = 0;
  std::size_t hits = 0;        // words landing in N
  std::size_t violations = 0;
};
/// Runs over representative pairs (i, j), words in t_i, t_j up to length
/// max(min_length, the full dihedral group <t_i, t_j>).
CentralizerCheck centralizer_property(const SymEnumeration& e, std::size_t min_length = 8);

/// Abelianization of the target group against the perfect-control criterion.
struct PerfectnessReport {
  bool control_perfect = false;
  bool odd_relation = false;          // some relator has odd t-length
  std::optional<Integer> abelianization;  // nullopt when infinite
  /// When the control is perfect: abelianization in {1, 2}, and 1 with an odd relation.
  std::optional<bool> consistent;
};
PerfectnessReport perfectness(const Progenitor& p, const std::vector<Word>& relators);

/// Result of enumerating with one candidate permutation for `pi`.
struct SearchHit {
  Permutation pi;
  std::optional<std::size_t> index;  // nullopt on overflow
};
struct SearchResult {
  std::size_t candidates = 0;
  std::vector<SearchHit> all;        // in candidate order
  std::vector<SearchHit> survivors;  // index in (1, cap)
};
/// Elements of N of the given order, one per class under conjugation by the
/// stabilizer of `fixed` (so relations referring to those t's are unchanged).
std::vector<Permutation> candidates_of_order(const Progenitor& p, std::uint64_t order,
                                             const std::vector<Point>& fixed);
/// Nontrivial elements of C_N(Stab_N(points)), one per class under Stab_N(points).
std::vector<Permutation> candidates_from_centralizer(const Progenitor& p, const std::vector<Point>& points);
/// Enumerates with each candidate bound to `pi` (concurrently), capped at `cap` cosets.
SearchResult relation_search(std::shared_ptr<const Progenitor> p, const std::vector<RelationExpr>& relations,
                             const std::vector<Permutation>& candidates, std::size_t cap,
                             const Bindings& bindings = {}, Strategy strategy = Strategy::felsch,
                             Method method = Method::cosets);

}  // namespace symgen
