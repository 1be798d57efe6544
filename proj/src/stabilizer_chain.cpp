#include "symgen/stabilizer_chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace symgen {

namespace {

bool is_identity(const std::vector<Point>& r) {
  for (Point x = 0; x < r.size(); ++x)
    if (r[x] != x) return false;
  return true;
}

// Product replacement with an accumulator ("rattle").
class RandomProducts {
 public:
  RandomProducts(std::span<const Permutation> gens, std::size_t degree, std::uint64_t seed)
      : rng_(seed), acc_(degree) {
    for (const auto& g : gens)
      if (!g.is_identity()) state_.push_back(g);
    if (state_.empty()) state_.push_back(Permutation(degree));
    const std::size_t base = state_.size();
    for (std::size_t i = 0; state_.size() < 10; ++i) state_.push_back(state_[i % base]);
    for (int i = 0; i < 60; ++i) next();
  }

  const Permutation& next() {
    std::uniform_int_distribution<std::size_t> pick(0, state_.size() - 1);
    std::size_t i = pick(rng_), j = pick(rng_);
    while (j == i) j = pick(rng_);
    const bool left = rng_() & 1;
    const bool inv = rng_() & 1;
    Permutation other = inv ? state_[j].inverse() : state_[j];
    if (left)
      state_[i] = compose(other, state_[i]);
    else
      state_[i] = compose(state_[i], other);
    acc_ = compose(acc_, state_[i]);
    return acc_;
  }

 private:
  std::mt19937_64 rng_;
  std::vector<Permutation> state_;
  Permutation acc_;
};

}  // namespace

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                                 const ChainOptions& options)
    : degree_(degree),
      base_limit_(static_cast<Point>(std::min<std::size_t>(options.base_limit, degree))) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree does not match group degree");
  for (Point b : options.base_prefix) {
    if (b >= base_limit_) throw std::out_of_range("base prefix point out of range");
    add_level(b);
  }
  random_phase(generators, options);
  if (!certified_ && options.verify) verify_phase();
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  b.reserve(levels_.size());
  for (const auto& l : levels_) b.push_back(l.base);
  return b;
}

Integer StabilizerChain::order() const {
  Integer n = 1;
  for (const auto& l : levels_) n *= l.orbit.size();
  return n;
}

std::vector<Permutation> StabilizerChain::level_generators(std::size_t level) const {
  std::vector<Permutation> out;
  if (level >= levels_.size()) {
    // Past the last level only the identity fixes every base point.
    return out;
  }
  for (auto s : levels_[level].gens) out.push_back(strong_[s]);
  return out;
}

void StabilizerChain::add_level(Point base) {
  Level lv;
  lv.base = base;
  lv.label.assign(degree_, kOutside);
  for (std::uint32_t s = 0; s < strong_.size(); ++s) {
    bool fixes = true;
    for (const auto& prev : levels_)
      if (strong_[s][prev.base] != prev.base) {
        fixes = false;
        break;
      }
    if (fixes) lv.gens.push_back(s);
  }
  levels_.push_back(std::move(lv));
  rebuild_level(levels_.size() - 1);
}

void StabilizerChain::rebuild_level(std::size_t i) {
  Level& lv = levels_[i];
  for (Point x : lv.orbit) lv.label[x] = kOutside;
  lv.orbit.clear();
  lv.orbit.push_back(lv.base);
  lv.label[lv.base] = kRoot;
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    const Point x = lv.orbit[k];
    for (auto s : lv.gens) {
      const Point y = strong_[s][x];
      if (lv.label[y] == kOutside) {
        lv.label[y] = static_cast<std::int32_t>(s);
        lv.orbit.push_back(y);
      }
    }
  }
}

Point StabilizerChain::new_base_point(const std::vector<Point>& r) const {
  for (Point x = 0; x < base_limit_; ++x)
    if (r[x] != x) return x;
  throw std::domain_error("group element acts trivially on the base range (action not faithful)");
}

void StabilizerChain::add_strong(const Permutation& g, std::size_t upto_level) {
  const auto idx = static_cast<std::uint32_t>(strong_.size());
  strong_.push_back(g);
  strong_inv_.push_back(g.inverse());
  const std::size_t existing = levels_.size();
  for (std::size_t i = 0; i < std::min(upto_level + 1, existing); ++i) levels_[i].gens.push_back(idx);
  if (upto_level >= existing) {
    std::vector<Point> img(g.images().begin(), g.images().end());
    add_level(new_base_point(img));
  }
  for (std::size_t i = 0; i < std::min(upto_level + 1, existing); ++i) rebuild_level(i);
}

void StabilizerChain::strip(std::size_t level, Point x, std::vector<Point>& r) const {
  const Level& lv = levels_[level];
  while (lv.label[x] != kRoot) {
    const auto s = static_cast<std::size_t>(lv.label[x]);
    const auto& inv = strong_inv_[s].images();
    for (auto& y : r) y = inv[y];
    x = inv[x];
  }
}

std::size_t StabilizerChain::sift_in_place(std::vector<Point>& r, std::size_t from_level) const {
  for (std::size_t i = from_level; i < levels_.size(); ++i) {
    const Point beta = r[levels_[i].base];
    if (levels_[i].label[beta] == kOutside) return i;
    strip(i, beta, r);
  }
  return levels_.size();
}

StabilizerChain::SiftResult StabilizerChain::sift(const Permutation& g) const {
  if (g.degree() != degree_) throw std::invalid_argument("sift: degree mismatch");
  std::vector<Point> r(g.images().begin(), g.images().end());
  const std::size_t lvl = sift_in_place(r, 0);
  return {Permutation::unchecked(std::move(r)), lvl};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto res = sift(g);
  return res.level == levels_.size() && res.residue.is_identity();
}

Permutation StabilizerChain::transversal(std::size_t level, Point x) const {
  const Level& lv = levels_[level];
  if (lv.label[x] == kOutside) throw std::out_of_range("point not in basic orbit");
  std::vector<std::uint32_t> path;
  while (lv.label[x] != kRoot) {
    const auto s = static_cast<std::uint32_t>(lv.label[x]);
    path.push_back(s);
    x = strong_inv_[s][x];
  }
  std::vector<Point> u(degree_);
  for (Point y = 0; y < degree_; ++y) u[y] = y;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const auto& s = strong_[*it].images();
    for (auto& y : u) y = s[y];
  }
  return Permutation::unchecked(std::move(u));
}

Permutation StabilizerChain::random_element(std::mt19937_64& rng) const {
  // g = u_{k-1} * ... * u_0 with u_i a uniform transversal element.
  Permutation g(degree_);
  for (std::size_t i = levels_.size(); i-- > 0;) {
    const auto& orb = levels_[i].orbit;
    std::uniform_int_distribution<std::size_t> pick(0, orb.size() - 1);
    g = compose(g, transversal(i, orb[pick(rng)]));
  }
  return g;
}

bool StabilizerChain::reached_bound(const ChainOptions& opt) const {
  return opt.order_bound && order() >= *opt.order_bound;
}

void StabilizerChain::random_phase(std::span<const Permutation> generators,
                                   const ChainOptions& opt) {
  for (const auto& g : generators) {
    if (g.is_identity()) continue;
    std::vector<Point> r(g.images().begin(), g.images().end());
    const std::size_t lvl = sift_in_place(r, 0);
    if (lvl < levels_.size() || !is_identity(r)) add_strong(Permutation::unchecked(std::move(r)), lvl);
  }
  if (strong_.empty()) {
    certified_ = true;
    return;
  }
  if (reached_bound(opt)) {
    certified_ = true;
    return;
  }
  RandomProducts gen(generators, degree_, opt.seed);
  const int needed = opt.verify ? 24 : 64;
  int streak = 0;
  while (streak < needed) {
    const Permutation& g = gen.next();
    std::vector<Point> r(g.images().begin(), g.images().end());
    const std::size_t lvl = sift_in_place(r, 0);
    if (lvl == levels_.size() && is_identity(r)) {
      ++streak;
      continue;
    }
    streak = 0;
    add_strong(Permutation::unchecked(std::move(r)), lvl);
    if (reached_bound(opt)) {
      certified_ = true;
      return;
    }
  }
}

void StabilizerChain::verify_phase() {
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  std::vector<Point> r(degree_);
  while (i >= 0) {
    bool restarted = false;
    const auto li = static_cast<std::size_t>(i);
    for (std::size_t oi = 0; oi < levels_[li].orbit.size() && !restarted; ++oi) {
      const Point beta = levels_[li].orbit[oi];
      Permutation u = transversal(li, beta);
      for (std::size_t gi = 0; gi < levels_[li].gens.size(); ++gi) {
        const auto s = levels_[li].gens[gi];
        const Point gamma = strong_[s][beta];
        if (levels_[li].label[gamma] == static_cast<std::int32_t>(s) &&
            strong_inv_[s][gamma] == beta)
          continue;
        const auto& si = strong_[s].images();
        for (Point y = 0; y < degree_; ++y) r[y] = si[u[y]];
        strip(li, gamma, r);
        const std::size_t lvl = sift_in_place(r, li + 1);
        if (lvl < levels_.size() || !is_identity(r)) {
          add_strong(Permutation::unchecked(r), lvl);
          i = static_cast<std::ptrdiff_t>(lvl);
          restarted = true;
          break;
        }
      }
    }
    if (!restarted) --i;
  }
  certified_ = true;
}

}  // namespace symgen
