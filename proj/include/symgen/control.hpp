#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symgen/perm_group.hpp"
#include "symgen/presentation.hpp"

namespace symgen {

/// A control group N: a finite presentation together with a faithful
/// permutation representation ("base") of its generators, and optionally a
/// way to write any base permutation as a word in the generators.
struct ControlGroup {
  using Encoder = std::function<std::optional<Word>(const Permutation&)>;

  std::string name;
  std::size_t degree = 0;            // base degree
  Presentation presentation;
  std::vector<Permutation> images;   // one per presentation generator
  Integer order;
  Encoder encoder;                   // empty when words are not available

  PermutationGroup group() const { return PermutationGroup(degree, images, order); }
  bool can_encode() const { return static_cast<bool>(encoder); }
  /// Throws std::invalid_argument if there is no encoder or g is not in N.
  Word encode(const Permutation& g) const;
  Permutation evaluate(const Word& w) const {
    return w.empty() ? Permutation(degree) : symgen::evaluate(w, images);
  }
};

/// S_n on n points with the Coxeter presentation on s_i = (i, i+1).
ControlGroup symmetric_control(std::size_t n);

/// A presentation read off a base and strong generating set of `group`
/// (Schreier relators at every level, on a pruned strong generating set).
/// Generators are named prefix1, prefix2, ...
ControlGroup bsgs_control(std::string name, const PermutationGroup& group, const std::string& prefix = "g");

/// A control group whose presentation is supplied by the caller; no encoder.
ControlGroup presented_control(std::string name, Presentation presentation, std::vector<Permutation> images,
                               Integer order);

struct ControlCertificate {
  bool relators_hold = false;     // every relator is trivial on the images
  bool order_matches = false;     // the images generate a group of the stated order
  std::optional<bool> enumerated; // coset enumeration over the trivial subgroup gave |N|
  bool ok() const { return relators_hold && order_matches && enumerated.value_or(true); }
};
/// Shortest words in the generators (and their inverses) for every element
/// of <images>, from a breadth-first search of the Cayley graph run on first
/// use.  Only sensible for groups of moderate order.
ControlGroup::Encoder cayley_encoder(std::vector<Permutation> images);

/// Checks the homomorphism and image order; also runs a full coset
/// enumeration when |N| is at most `enumerate_up_to`.
ControlCertificate certify(const ControlGroup& control, std::size_t enumerate_up_to = 200000);

/// M22 fixing points 0 and 1 of the Golay code's 24, on the two-generator
/// presentation a^2 = b^4 = (ab)^11 = (ab^2)^5 = [a, bab]^3 = (ababab^-1)^5 = 1.
ControlGroup m22_control();

/// Built-in control groups: S<n>, A<n>, L3(2), GL4(2), L2(16):4, M22, M24.
/// Returns nullopt for unknown names.
std::optional<ControlGroup> builtin_control(const std::string& name);

/// Lifts permutations of an action back to the group they came from, using a
/// chain of the diagonal group on [action points | base points].
class PairedLifter {
 public:
  /// The action of the generators must be faithful; otherwise
  /// std::domain_error is thrown.
  PairedLifter(const std::vector<Permutation>& action_gens, const std::vector<Permutation>& base_gens,
               std::optional<Integer> order = std::nullopt);

  /// Base permutation inducing `action_perm`, or nullopt if it is outside the image.
  std::optional<Permutation> lift(const Permutation& action_perm) const;
  std::size_t action_degree() const noexcept { return action_degree_; }
  const Integer& order() const { return order_; }

 private:
  std::size_t action_degree_;
  std::size_t base_degree_;
  StabilizerChain chain_;
  Integer order_;
};

}  // namespace symgen
