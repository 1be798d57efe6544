#pragma once

#include <memory>
#include <vector>

#include "symgen/progenitor.hpp"

namespace symgen {

struct DoubleCosetLimits {
  std::size_t max_double_cosets = 20'000;// defined double cosets, dead or alive
  std::size_t max_single_cosets = 20'000'000;  // size of the expanded table
};

/// Statistics of a double coset enumeration.
struct DoubleCosetStats {
  std::size_t defined = 0;      // double cosets ever defined
  std::size_t merged = 0;       // double cosets found equal to earlier ones
  std::size_t live = 0;         // double cosets at the end
  std::size_t enlargements = 0; // coset stabilizers grown by a deduction
  std::size_t conditions = 0;   // relator conjugates traced
};

/// The relation as a progenitor element pi t_{w_1} ... t_{w_k}.  Cycles and
/// control generators become elements of N, t[label] becomes t_label.
/// Throws std::invalid_argument for unknown labels, names or permutations outside N.
ProgElement relation_element(const Progenitor& p, const RelationExpr& e, const Bindings& b = {});

/// Enumerates the double cosets N w N of N in the target group, keeping one
/// representative coset per double coset together with its coset stabilizer
/// N^(w), and deducing stabilizer elements from the relations rather than
/// visiting every single coset.  The finished enumeration is expanded to the
/// full single-coset table and checked against the expanded presentation, so
/// the result has the same meaning as enumerate().  Each relation must involve
/// at least one symmetric generator, and the control group needs an encoder.
SymResult enumerate_double_cosets(std::shared_ptr<const Progenitor> p, const std::vector<ProgElement>& relations,
                                  const DoubleCosetLimits& limits = {}, DoubleCosetStats* stats = nullptr);

}  // namespace symgen
