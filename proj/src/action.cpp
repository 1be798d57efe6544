#include "symgen/action.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace symgen {

namespace {

constexpr std::string_view kAlphabet = "1234567890xy";

std::string tuple_key(const SetTuple& t) {
  return std::string(reinterpret_cast<const char*>(t.data()), t.size() * sizeof(std::uint32_t));
}

std::optional<Point> parse_index_label(std::string_view s, std::size_t degree) {
  if (s.size() < 2 || s[0] != '#') return std::nullopt;
  std::size_t k = 0;
  auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), k);
  if (ec != std::errc() || ptr != s.data() + s.size() || k == 0 || k > degree) return std::nullopt;
  return static_cast<Point>(k - 1);
}

// A single base point written as a decimal number or, for small degrees, an alphabet letter.
std::optional<Point> parse_point(std::string_view tok, std::size_t base_degree) {
  if (tok.empty()) return std::nullopt;
  if (base_degree <= kAlphabet.size() && tok.size() == 1) {
    const auto pos = kAlphabet.find(tok[0]);
    if (pos != std::string_view::npos && pos < base_degree) return static_cast<Point>(pos);
  }
  std::size_t k = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), k);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || k == 0 || k > base_degree) return std::nullopt;
  return static_cast<Point>(k - 1);
}

// Parses "1234|5678" style labels into set tuples.
std::optional<SetTuple> parse_tuple(std::string_view s, std::size_t base_degree) {
  SetTuple out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t bar = s.find('|', start);
    const std::string_view block = s.substr(start, bar == std::string_view::npos ? s.npos : bar - start);
    std::uint32_t mask = 0;
    const bool separated = block.find_first_of(" .,") != std::string_view::npos;
    if (separated || base_degree > kAlphabet.size()) {
      std::size_t i = 0;
      while (i < block.size()) {
        while (i < block.size() && (block[i] == ' ' || block[i] == '.' || block[i] == ',')) ++i;
        std::size_t j = i;
        while (j < block.size() && block[j] != ' ' && block[j] != '.' && block[j] != ',') ++j;
        if (j > i) {
          auto p = parse_point(block.substr(i, j - i), base_degree);
          if (!p) return std::nullopt;
          mask |= 1u << *p;
        }
        i = j;
      }
    } else {
      for (char c : block) {
        auto p = parse_point(std::string_view(&c, 1), base_degree);
        if (!p) return std::nullopt;
        mask |= 1u << *p;
      }
    }
    if (mask == 0) return std::nullopt;
    out.push_back(mask);
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return out;
}

}  // namespace

Action::Action(std::string kind, std::size_t base_degree, std::size_t degree, Induce induce,
               std::vector<std::string> labels, Finder finder, PointImage image)
    : kind_(std::move(kind)),
      base_degree_(base_degree),
      degree_(degree),
      induce_(std::move(induce)),
      labels_(std::make_shared<const std::vector<std::string>>(std::move(labels))),
      finder_(std::move(finder)),
      image_(std::move(image)) {
  if (labels_->size() != degree_) throw std::invalid_argument("action: one label per point required");
}

std::vector<Permutation> Action::induce(const std::vector<Permutation>& base) const {
  std::vector<Permutation> out;
  out.reserve(base.size());
  for (const auto& g : base) out.push_back(induce_(g));
  return out;
}

std::optional<Point> Action::find(std::string_view label) const {
  if (auto p = parse_index_label(label, degree_)) return p;
  if (finder_) return finder_(label);
  for (Point p = 0; p < degree_; ++p)
    if ((*labels_)[p] == label) return p;
  return std::nullopt;
}

std::string point_label(Point p, std::size_t base_degree) {
  if (base_degree <= kAlphabet.size()) return std::string(1, kAlphabet[p]);
  return std::to_string(p + 1);
}

std::string set_label(std::uint32_t mask, std::size_t base_degree) {
  std::string out;
  for (Point p = 0; p < 32; ++p) {
    if (!(mask >> p & 1u)) continue;
    if (base_degree > kAlphabet.size() && !out.empty()) out += '.';
    out += point_label(p, base_degree);
  }
  return out;
}

std::uint32_t image_mask(const Permutation& g, std::uint32_t mask) {
  std::uint32_t out = 0;
  while (mask) {
    const int p = std::countr_zero(mask);
    mask &= mask - 1;
    out |= 1u << g(static_cast<Point>(p));
  }
  return out;
}

Action family_action(std::string kind, std::size_t base_degree, std::vector<SetTuple> objects,
                     bool unordered) {
  if (base_degree > 32) throw std::invalid_argument("family_action: base degree above 32");
  struct State {
    std::vector<SetTuple> objects;
    std::unordered_map<std::string, Point> index;
    std::unordered_map<std::uint32_t, Point> single;  // when every object is one set
    bool unordered;
    std::size_t base_degree;
  };
  auto st = std::make_shared<State>();
  st->unordered = unordered;
  st->base_degree = base_degree;
  std::vector<std::string> labels;
  for (auto& o : objects) {
    if (unordered) std::sort(o.begin(), o.end());
    const auto idx = static_cast<Point>(st->objects.size());
    if (!st->index.emplace(tuple_key(o), idx).second)
      throw std::invalid_argument("family_action: duplicate object");
    std::string label;
    for (std::size_t i = 0; i < o.size(); ++i) {
      if (i) label += '|';
      label += set_label(o[i], base_degree);
    }
    labels.push_back(std::move(label));
    st->objects.push_back(std::move(o));
  }
  const std::size_t degree = st->objects.size();
  if (std::all_of(st->objects.begin(), st->objects.end(), [](const SetTuple& o) { return o.size() == 1; }))
    for (std::size_t i = 0; i < degree; ++i) st->single.emplace(st->objects[i][0], static_cast<Point>(i));
  auto image = [st](Point p, const Permutation& g) {
    if (g.degree() != st->base_degree) throw std::invalid_argument("image: base degree mismatch");
    if (!st->single.empty()) {
      auto it = st->single.find(image_mask(g, st->objects[p][0]));
      if (it == st->single.end()) throw std::invalid_argument("image: permutation does not preserve the family");
      return it->second;
    }
    SetTuple t;
    for (auto m : st->objects[p]) t.push_back(image_mask(g, m));
    if (st->unordered) std::sort(t.begin(), t.end());
    auto it = st->index.find(tuple_key(t));
    if (it == st->index.end()) throw std::invalid_argument("image: permutation does not preserve the family");
    return it->second;
  };
  auto induce = [st](const Permutation& g) {
    if (g.degree() != st->base_degree) throw std::invalid_argument("induce: base degree mismatch");
    std::vector<Point> img(st->objects.size());
    SetTuple t;
    for (std::size_t i = 0; i < st->objects.size(); ++i) {
      t.clear();
      for (auto m : st->objects[i]) t.push_back(image_mask(g, m));
      if (st->unordered) std::sort(t.begin(), t.end());
      auto it = st->index.find(tuple_key(t));
      if (it == st->index.end()) throw std::invalid_argument("induce: permutation does not preserve the family");
      img[i] = it->second;
    }
    return Permutation::unchecked(std::move(img));
  };
  auto finder = [st](std::string_view s) -> std::optional<Point> {
    auto t = parse_tuple(s, st->base_degree);
    if (!t) return std::nullopt;
    if (st->unordered) std::sort(t->begin(), t->end());
    auto it = st->index.find(tuple_key(*t));
    if (it == st->index.end()) return std::nullopt;
    return it->second;
  };
  return Action(std::move(kind), base_degree, degree, induce, std::move(labels), finder, image);
}

Action identity_action(std::size_t n) {
  std::vector<std::string> labels;
  for (Point p = 0; p < n; ++p) labels.push_back(std::to_string(p + 1));
  auto induce = [n](const Permutation& g) {
    if (g.degree() != n) throw std::invalid_argument("induce: base degree mismatch");
    return g;
  };
  auto finder = [n](std::string_view s) { return parse_point(s, n); };
  return Action("identity", n, n, induce, std::move(labels), finder, [](Point p, const Permutation& g) { return g(p); });
}

Action natural_action(std::size_t n) {
  std::vector<std::string> labels;
  for (Point p = 0; p < n; ++p) labels.push_back(point_label(p, n));
  auto finder = [n](std::string_view s) { return parse_point(s, n); };
  return Action("natural", n, n, [n](const Permutation& g) {
    if (g.degree() != n) throw std::invalid_argument("induce: base degree mismatch");
    return g;
  }, std::move(labels), finder, [](Point p, const Permutation& g) { return g(p); });
}

Action subsets_action(std::size_t n, std::size_t k) {
  if (k == 0 || k > n || n > 32) throw std::invalid_argument("subsets_action: bad parameters");
  std::vector<SetTuple> objs;
  std::vector<Point> c(k);
  for (Point i = 0; i < k; ++i) c[i] = i;
  for (;;) {
    std::uint32_t m = 0;
    for (Point x : c) m |= 1u << x;
    objs.push_back({m});
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(k) - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + static_cast<std::size_t>(i)) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return family_action("subsets " + std::to_string(k), n, std::move(objs), false);
}

Action partitions_action(std::size_t n, const std::vector<std::size_t>& shape) {
  std::size_t total = 0;
  for (auto s : shape) total += s;
  if (total != n || n > 32 || shape.empty()) throw std::invalid_argument("partitions_action: shape must sum to n");
  std::vector<std::size_t> sizes(shape);
  std::sort(sizes.begin(), sizes.end());
  std::vector<SetTuple> objs;
  SetTuple current;
  // The block holding the smallest unused point is chosen first, so each
  // partition is produced exactly once.
  std::function<void(std::uint32_t, std::vector<std::size_t>&)> rec = [&](std::uint32_t used,
                                                                       std::vector<std::size_t>& left) {
    if (left.empty()) {
      objs.push_back(current);
      return;
    }
    const auto first = static_cast<Point>(std::countr_one(used));
    for (std::size_t si = 0; si < left.size(); ++si) {
      if (si > 0 && left[si] == left[si - 1]) continue;
      const std::size_t sz = left[si];
      std::vector<std::size_t> rest(left);
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(si));
      std::vector<Point> free;
      for (Point p = first + 1; p < n; ++p)
        if (!(used >> p & 1u)) free.push_back(p);
      if (free.size() < sz - 1) continue;
      std::vector<std::size_t> idx(sz - 1);
      for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = j;
      for (;;) {
        std::uint32_t block = 1u << first;
        for (auto j : idx) block |= 1u << free[j];
        current.push_back(block);
        rec(used | block, rest);
        current.pop_back();
        std::ptrdiff_t i = static_cast<std::ptrdiff_t>(idx.size()) - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == free.size() - idx.size() + static_cast<std::size_t>(i)) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  };
  rec(0, sizes);
  std::string kind = "partitions";
  for (auto s : shape) kind += " " + std::to_string(s);
  return family_action(kind, n, std::move(objs), true);
}

Action union_action(const std::vector<Action>& parts) {
  if (parts.empty()) throw std::invalid_argument("union_action: no parts");
  const std::size_t base = parts[0].base_degree();
  std::size_t degree = 0;
  std::vector<std::string> labels;
  std::string kind = "union";
  for (const auto& a : parts) {
    if (a.base_degree() != base) throw std::invalid_argument("union_action: base degrees differ");
    for (Point p = 0; p < a.degree(); ++p) labels.push_back(a.label(p));
    degree += a.degree();
    kind += " (" + a.kind() + ")";
  }
  auto ps = std::make_shared<const std::vector<Action>>(parts);
  auto induce = [ps, degree](const Permutation& g) {
    std::vector<Point> img;
    img.reserve(degree);
    Point off = 0;
    for (const auto& a : *ps) {
      const auto part = a.induce(g);
      for (Point p = 0; p < a.degree(); ++p) img.push_back(part(p) + off);
      off += static_cast<Point>(a.degree());
    }
    return Permutation::unchecked(std::move(img));
  };
  auto finder = [ps](std::string_view s) -> std::optional<Point> {
    Point off = 0;
    std::optional<Point> hit;
    for (const auto& a : *ps) {
      if (!(s.size() > 1 && s[0] == '#'))
        if (auto p = a.find(s)) {
          if (hit) return std::nullopt;  // ambiguous
          hit = *p + off;
        }
      off += static_cast<Point>(a.degree());
    }
    return hit;
  };
  auto image = [ps](Point p, const Permutation& g) {
    Point off = 0;
    for (const auto& a : *ps) {
      if (p < off + a.degree()) return a.image(p - off, g) + off;
      off += static_cast<Point>(a.degree());
    }
    throw std::out_of_range("image: point out of range");
  };
  return Action(kind, base, degree, induce, std::move(labels), finder, image);
}

Action coset_space_action(const PermutationGroup& group, const PermutationGroup& subgroup) {
  if (group.degree() != subgroup.degree()) throw std::invalid_argument("coset_space_action: degree mismatch");
  struct State {
    std::vector<Point> base;
    StabilizerChain hchain;
    std::vector<Permutation> reps;
    std::unordered_map<std::string, Point> index;
    std::size_t base_degree;
  };
  const auto base = group.chain().base();
  auto st = std::make_shared<State>(State{base, subgroup.chain_with_base(base), {}, {}, group.degree()});

  // Canonical representative of H g: greedily minimise the images of the base.
  auto canonical = [st](Permutation g) {
    const auto& ch = st->hchain;
    for (std::size_t i = 0; i < ch.length(); ++i) {
      const auto& orb = ch.orbit(i);
      Point best = orb[0];
      for (Point b : orb)
        if (g(b) < g(best)) best = b;
      if (best != ch.base_point(i)) g = compose(ch.transversal(i, best), g);
    }
    return g;
  };
  auto key = [st](const Permutation& g) {
    std::vector<Point> img;
    img.reserve(st->base.size());
    for (Point b : st->base) img.push_back(g(b));
    return std::string(reinterpret_cast<const char*>(img.data()), img.size() * sizeof(Point));
  };
  st->reps.push_back(Permutation(group.degree()));
  st->index.emplace(key(st->reps[0]), 0);
  for (std::size_t k = 0; k < st->reps.size(); ++k)
    for (const auto& s : group.generators()) {
      Permutation c = canonical(compose(st->reps[k], s));
      auto kk = key(c);
      if (st->index.find(kk) == st->index.end()) {
        st->index.emplace(std::move(kk), static_cast<Point>(st->reps.size()));
        st->reps.push_back(std::move(c));
      }
    }
  const std::size_t degree = st->reps.size();
  auto induce = [st, canonical, key](const Permutation& x) {
    if (x.degree() != st->base_degree) throw std::invalid_argument("induce: base degree mismatch");
    std::vector<Point> img(st->reps.size());
    for (std::size_t c = 0; c < st->reps.size(); ++c) {
      auto it = st->index.find(key(canonical(compose(st->reps[c], x))));
      if (it == st->index.end()) throw std::invalid_argument("induce: permutation outside the group");
      img[c] = it->second;
    }
    return Permutation::unchecked(std::move(img));
  };
  auto image = [st, canonical, key](Point p, const Permutation& x) {
    auto it = st->index.find(key(canonical(compose(st->reps.at(p), x))));
    if (it == st->index.end()) throw std::invalid_argument("image: permutation outside the group");
    return it->second;
  };
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < degree; ++c) labels.push_back(std::to_string(c + 1));
  auto finder = [degree](std::string_view s) -> std::optional<Point> {
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), k);
    if (ec != std::errc() || ptr != s.data() + s.size() || k == 0 || k > degree) return std::nullopt;
    return static_cast<Point>(k - 1);
  };
  return Action("cosets", group.degree(), degree, induce, std::move(labels), finder, image);
}

}  // namespace symgen
