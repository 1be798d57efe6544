#include "symgen/symrep.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace symgen {

SymContext::SymContext(const SymEnumeration& e, std::size_t max_index) : progenitor_(e.progenitor) {
  const std::size_t index = e.report.index;
  if (index > max_index)
    throw std::length_error("symrep: index " + std::to_string(index) + " exceeds the bound " +
                            std::to_string(max_index));
  if (!e.report.control_embeds) throw std::domain_error("symrep: the control group does not embed");
  const auto& p = *progenitor_;
  t_images_ = e.t_on_cosets();
  const auto control = e.control_on_cosets();
  auto gens = control;
  gens.insert(gens.end(), t_images_.begin(), t_images_.end());
  if (PermutationGroup(index, gens, e.report.order).order() != e.report.order)
    throw std::domain_error("symrep: the action on the cosets is not faithful");

  // Breadth-first t-words: t_0, t_1, ... in order from each coset.
  words_.assign(index, {});
  std::vector<bool> seen(index, false);
  std::vector<std::uint32_t> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto c = queue[head];
    for (Point i = 0; i < p.degree(); ++i) {
      const auto d = t_images_[i](c);
      if (seen[d]) continue;
      seen[d] = true;
      words_[d] = words_[c];
      words_[d].push_back(i);
      diameter_ = std::max(diameter_, words_[d].size());
      queue.push_back(d);
    }
  }
  if (queue.size() != index) throw std::domain_error("symrep: the t-edges do not reach every coset");

  const auto& base = p.control().images;
  to_cosets_.emplace(base, control, p.control().order);
  from_cosets_.emplace(control, base, p.control().order);
}

Permutation SymContext::image(const SymElement& e) const {
  auto g = to_cosets_->lift(e.pi);
  if (!g) throw std::invalid_argument("symrep: pi is not in the control group");
  for (Point i : e.w) {
    if (i >= t_images_.size()) throw std::invalid_argument("symrep: symmetric generator out of range");
    g = *g * t_images_[i];
  }
  return *g;
}

SymElement SymContext::canonicalize(const SymElement& e) const {
  Permutation h = image(e);
  const auto& w = words_[h(0)];
  for (auto it = w.rbegin(); it != w.rend(); ++it) h = h * t_images_[*it];
  auto pi = from_cosets_->lift(h);
  if (!pi) throw std::logic_error("symrep: cannot recover pi; the context is corrupted");
  return {std::move(*pi), w};
}

SymElement SymContext::multiply(const SymElement& a, const SymElement& b) const {
  return canonicalize(symgen::multiply(*progenitor_, a, b));
}

SymElement SymContext::invert(const SymElement& a) const { return canonicalize(symgen::invert(*progenitor_, a)); }

SymElement SymContext::identity() const { return {Permutation(progenitor_->control().degree), {}}; }

SymElement SymContext::random_element(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::size_t> coset(0, index() - 1);
  const auto c = coset(rng);
  return canonicalize({progenitor_->control().group().random_element(rng), words_[c]});
}

std::string format_element(const SymElement& e) {
  std::string s = "pi = " + to_cycle_string(e.pi) + " ; w =";
  for (Point i : e.w) s += " t" + std::to_string(i + 1);
  return s;
}

SymElement parse_element(const Progenitor& p, std::string_view text) {
  const auto semi = text.find(';');
  auto part = [&](std::string_view s, std::string_view key) {
    const auto eq = s.find('=');
    std::string_view k = s.substr(0, eq == std::string_view::npos ? 0 : eq);
    while (!k.empty() && k.front() == ' ') k.remove_prefix(1);
    while (!k.empty() && k.back() == ' ') k.remove_suffix(1);
    if (eq == std::string_view::npos || k != key)
      throw std::invalid_argument("element: expected `" + std::string(key) + " = ...`");
    return s.substr(eq + 1);
  };
  if (semi == std::string_view::npos) throw std::invalid_argument("element: expected `pi = (...) ; w = ...`");
  SymElement e;
  std::string cycles(part(text.substr(0, semi), "pi"));
  if (cycles.find_first_not_of(" ") == std::string::npos) throw std::invalid_argument("element: missing pi");
  e.pi = parse_cycles(cycles, p.control().degree);
  if (!p.control().group().contains(e.pi)) throw std::invalid_argument("element: pi is not in the control group");
  std::istringstream is{std::string(part(text.substr(semi + 1), "w"))};
  for (std::string tok; is >> tok;) {
    std::optional<Point> i;
    if (tok.size() > 3 && tok.rfind("t[", 0) == 0 && tok.back() == ']') {
      i = p.action().find(tok.substr(2, tok.size() - 3));
    } else if (tok.size() > 1 && tok[0] == 't') {
      std::size_t k = 0;
      auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), k);
      if (ec == std::errc() && ptr == tok.data() + tok.size() && k >= 1 && k <= p.degree()) i = static_cast<Point>(k - 1);
    }
    if (!i) throw std::invalid_argument("element: bad symmetric generator '" + tok + "'");
    e.w.push_back(*i);
  }
  return e;
}

}  // namespace symgen
