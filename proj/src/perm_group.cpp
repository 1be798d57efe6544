#include "symgen/perm_group.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>

namespace symgen {

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                                   std::optional<Integer> order_bound)
    : degree_(degree),
      generators_(std::move(generators)),
      order_bound_(std::move(order_bound)),
      cache_(std::make_shared<Cache>()) {
  if (degree_ == 0) throw std::invalid_argument("permutation group of degree 0");
  for (const auto& g : generators_)
    if (g.degree() != degree_)
      throw std::invalid_argument("generator degree does not match group degree");
}

PermutationGroup PermutationGroup::trivial(std::size_t degree) {
  return PermutationGroup(degree, {}, Integer(1));
}

PermutationGroup PermutationGroup::symmetric(std::size_t n) {
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
  if (n >= 3) {
    std::vector<Point> cyc(n);
    for (Point i = 0; i < n; ++i) cyc[i] = i;
    gens.push_back(Permutation::from_cycles(n, {cyc}));
  }
  Integer f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return PermutationGroup(n, std::move(gens), f);
}

PermutationGroup PermutationGroup::alternating(std::size_t n) {
  std::vector<Permutation> gens;
  for (Point i = 2; i < n; ++i) gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
  Integer f = 1;
  for (std::size_t i = 3; i <= n; ++i) f *= i;
  return PermutationGroup(n, std::move(gens), f);
}

PermutationGroup PermutationGroup::cyclic(std::size_t n) {
  std::vector<Point> cyc(n);
  for (Point i = 0; i < n; ++i) cyc[i] = i;
  std::vector<Permutation> gens;
  if (n > 1) gens.push_back(Permutation::from_cycles(n, {cyc}));
  return PermutationGroup(n, std::move(gens), Integer(n));
}

const StabilizerChain& PermutationGroup::chain() const {
  std::call_once(cache_->once, [this] {
    ChainOptions opt;
    opt.order_bound = order_bound_;
    cache_->chain = std::make_unique<StabilizerChain>(degree_, generators_, opt);
  });
  return *cache_->chain;
}

StabilizerChain PermutationGroup::chain_with_base(std::span<const Point> prefix) const {
  ChainOptions opt;
  opt.base_prefix.assign(prefix.begin(), prefix.end());
  // A chain already built for this group pins the order exactly.
  opt.order_bound = order();
  return StabilizerChain(degree_, generators_, opt);
}

bool PermutationGroup::is_trivial() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Permutation& g) { return g.is_identity(); });
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup& g) const {
  if (g.degree() != degree_) return false;
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Permutation& x) { return g.contains(x); });
}

std::vector<Point> PermutationGroup::orbit(Point x) const {
  if (x >= degree_) throw std::out_of_range("orbit: point out of range");
  std::vector<bool> seen(degree_, false);
  std::vector<Point> orb{x};
  seen[x] = true;
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (const auto& g : generators_) {
      const Point y = g(orb[k]);
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
  return orb;
}

std::vector<std::vector<Point>> PermutationGroup::orbits() const {
  std::vector<bool> seen(degree_, false);
  std::vector<std::vector<Point>> out;
  for (Point x = 0; x < degree_; ++x) {
    if (seen[x]) continue;
    auto orb = orbit(x);
    for (Point y : orb) seen[y] = true;
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermutationGroup::is_transitive() const { return orbit(0).size() == degree_; }

PermutationGroup PermutationGroup::point_stabilizer(std::span<const Point> points) const {
  for (Point p : points)
    if (p >= degree_) throw std::out_of_range("point_stabilizer: point out of range");
  auto ch = chain_with_base(points);
  const std::size_t depth = std::min(points.size(), ch.length());
  // Levels beyond the chain length only arise when the stabilizer is trivial.
  std::vector<Permutation> gens = ch.level_generators(depth);
  Integer ord = 1;
  for (std::size_t i = depth; i < ch.length(); ++i) ord *= ch.orbit(i).size();
  return PermutationGroup(degree_, std::move(gens), ord);
}

void PermutationGroup::for_each_element(const std::function<void(const Permutation&)>& f) const {
  const auto& ch = chain();
  std::vector<std::vector<Permutation>> trans(ch.length());
  for (std::size_t i = 0; i < ch.length(); ++i)
    for (Point b : ch.orbit(i)) trans[i].push_back(ch.transversal(i, b));
  std::function<void(std::size_t, const Permutation&)> rec = [&](std::size_t i,
                                                                 const Permutation& p) {
    if (i == trans.size()) {
      f(p);
      return;
    }
    for (const auto& u : trans[i]) rec(i + 1, compose(u, p));
  };
  rec(0, Permutation(degree_));
}

std::vector<Permutation> PermutationGroup::elements() const {
  std::vector<Permutation> out;
  for_each_element([&](const Permutation& p) { out.push_back(p); });
  return out;
}

namespace {

// Base prefix that runs through the orbits of h, so that h-images of earlier
// base points are themselves base points and constrain the search.
std::vector<Point> orbit_closed_prefix(const PermutationGroup& h) {
  std::vector<Point> prefix;
  std::vector<bool> in(h.degree(), false);
  for (Point start = 0; start < h.degree(); ++start) {
    bool moved = false;
    for (const auto& g : h.generators()) moved = moved || g(start) != start;
    if (!moved || in[start]) continue;
    const std::size_t first = prefix.size();
    prefix.push_back(start);
    in[start] = true;
    for (std::size_t k = first; k < prefix.size(); ++k)
      for (const auto& g : h.generators()) {
        const Point y = g(prefix[k]);
        if (!in[y]) {
          in[y] = true;
          prefix.push_back(y);
        }
      }
  }
  return prefix;
}

}  // namespace

PermutationGroup centralizer(const PermutationGroup& g, const PermutationGroup& h) {
  if (h.degree() != g.degree() || !h.is_subgroup_of(g))
    throw std::invalid_argument("centralizer: h is not a subgroup of g");
  if (h.is_trivial()) return g;

  std::vector<Permutation> hgens;
  for (const auto& x : h.generators())
    if (!x.is_identity()) {
      hgens.push_back(x);
      hgens.push_back(x.inverse());
    }
  const auto prefix = orbit_closed_prefix(h);
  StabilizerChain ch = g.chain_with_base(prefix);
  const std::size_t depth = ch.length();

  // constraints[k]: pairs (j, h) with h(b_j) == b_k, j < k, forcing g(b_k) = h(g(b_j)).
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> constraints(depth);
  std::vector<std::ptrdiff_t> level_of(g.degree(), -1);
  for (std::size_t i = 0; i < depth; ++i) level_of[ch.base_point(i)] = static_cast<std::ptrdiff_t>(i);
  for (std::size_t j = 0; j < depth; ++j)
    for (std::size_t hi = 0; hi < hgens.size(); ++hi) {
      const auto k = level_of[hgens[hi](ch.base_point(j))];
      if (k > static_cast<std::ptrdiff_t>(j)) constraints[static_cast<std::size_t>(k)].push_back({j, hi});
    }

  std::vector<std::vector<Permutation>> trans(depth);
  for (std::size_t i = 0; i < depth; ++i)
    for (Point b : ch.orbit(i)) trans[i].push_back(ch.transversal(i, b));

  std::vector<Permutation> found;
  std::optional<PermutationGroup> current;
  std::vector<Point> images(depth);
  auto commutes = [&](const Permutation& x) {
    for (const auto& y : hgens)
      for (Point p = 0; p < x.degree(); ++p)
        if (x(y(p)) != y(x(p))) return false;
    return true;
  };
  std::function<void(std::size_t, const Permutation&)> rec = [&](std::size_t i,
                                                                 const Permutation& p) {
    if (i == depth) {
      if (p.is_identity() || !commutes(p)) return;
      if (current && current->contains(p)) return;
      found.push_back(p);
      current.emplace(g.degree(), found);
      return;
    }
    const auto& orb = ch.orbit(i);
    for (std::size_t oi = 0; oi < orb.size(); ++oi) {
      const Point img = p(orb[oi]);
      bool ok = true;
      for (auto [j, hi] : constraints[i])
        if (img != hgens[hi](images[j])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      images[i] = img;
      rec(i + 1, compose(trans[i][oi], p));
    }
  };
  rec(0, Permutation(g.degree()));
  if (found.empty()) return PermutationGroup::trivial(g.degree());
  return PermutationGroup(g.degree(), found);
}

PermutationGroup normal_closure(const PermutationGroup& g, std::vector<Permutation> generators) {
  std::vector<Permutation> gens;
  for (auto& x : generators)
    if (!x.is_identity()) gens.push_back(std::move(x));
  if (gens.empty()) return PermutationGroup::trivial(g.degree());
  PermutationGroup k(g.degree(), gens);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (const auto& s : g.generators()) {
      Permutation y = conjugate(gens[i], s);
      if (!k.contains(y)) {
        gens.push_back(std::move(y));
        k = PermutationGroup(g.degree(), gens);
      }
    }
  return k;
}

PermutationGroup derived_subgroup(const PermutationGroup& g) {
  std::vector<Permutation> comms;
  const auto& gs = g.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) comms.push_back(commutator(gs[i], gs[j]));
  return normal_closure(g, std::move(comms));
}

std::vector<Point> minimal_block(const PermutationGroup& g, Point a, Point b) {
  std::vector<Point> parent(g.degree());
  for (Point i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<Point, Point>> queue;
  auto unite = [&](Point x, Point y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    parent[std::max(x, y)] = std::min(x, y);
    queue.emplace_back(x, y);
  };
  unite(a, b);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const auto [x, y] = queue[k];
    for (const auto& s : g.generators()) unite(s(x), s(y));
  }
  std::vector<Point> block;
  const Point root = find(a);
  for (Point i = 0; i < parent.size(); ++i)
    if (find(i) == root) block.push_back(i);
  return block;
}

bool is_primitive(const PermutationGroup& g) {
  if (!g.is_transitive()) return false;
  if (g.degree() <= 2) return true;
  // Blocks through 0 are unions of orbits of the stabilizer of 0.
  const std::array<Point, 1> zero{0};
  const auto stab = g.point_stabilizer(zero);
  std::vector<char> seen(g.degree(), 0);
  seen[0] = 1;
  for (Point b = 1; b < g.degree(); ++b) {
    if (seen[b]) continue;
    for (Point x : stab.orbit(b)) seen[x] = 1;
    if (minimal_block(g, 0, b).size() != g.degree()) return false;
  }
  return true;
}

Integer abelianization_order(const PermutationGroup& g) {
  return g.order() / derived_subgroup(g).order();
}

}  // namespace symgen
