#include "symgen/control.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "symgen/geometry.hpp"
#include "symgen/golay.hpp"
#include "symgen/todd_coxeter.hpp"

namespace symgen {

Word ControlGroup::encode(const Permutation& g) const {
  if (!encoder) throw std::invalid_argument("control group " + name + " has no word encoder");
  auto w = encoder(g);
  if (!w) throw std::invalid_argument("permutation is not in the control group " + name);
  return *w;
}

ControlGroup symmetric_control(std::size_t n) {
  if (n == 0) throw std::invalid_argument("symmetric_control: n must be positive");
  ControlGroup c;
  c.name = "S" + std::to_string(n);
  c.degree = n;
  c.order = 1;
  for (std::size_t k = 2; k <= n; ++k) c.order *= k;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    c.presentation.generators.push_back("s" + std::to_string(i + 1));
    c.images.push_back(Permutation::from_cycles(n, {{static_cast<Point>(i), static_cast<Point>(i + 1)}}));
  }
  const auto m = static_cast<Letter>(c.images.size());
  for (Letter i = 0; i < m; ++i) {
    c.presentation.relators.push_back({i, i});
    for (Letter j = i + 1; j < m; ++j)
      c.presentation.relators.push_back(power(Word{i, j}, j == i + 1 ? 3 : 2));
  }
  // Bubble sort: p = s_{i1} s_{i2} ... where each step removes one inversion.
  c.encoder = [n](const Permutation& g) -> std::optional<Word> {
    if (g.degree() != n) return std::nullopt;
    std::vector<Point> q(g.images().begin(), g.images().end());
    Word w;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < n; ++i)
        if (q[i] > q[i + 1]) {
          std::swap(q[i], q[i + 1]);
          w.push_back(static_cast<Letter>(i));
          changed = true;
        }
    }
    return w;
  };
  return c;
}

namespace {

// A base and strong generating set with breadth-first Schreier trees whose
// transversal words are shortest words in the level generators.
struct WordChain {
  struct Level {
    Point base;
    std::vector<std::size_t> gens;           // indices into strong
    std::vector<std::int32_t> via;           // generator index reaching the point, -1 outside, -2 root
    std::vector<Point> parent;
    std::vector<Point> orbit;                // BFS order
    std::vector<Permutation> u;              // indexed by point; valid on the orbit
    std::vector<Word> word;                  // transversal words, indexed by point
  };
  std::size_t degree;
  std::vector<Permutation> strong;
  std::vector<Level> levels;

  WordChain(std::size_t n, std::vector<Point> base, std::vector<Permutation> gens)
      : degree(n), strong(std::move(gens)) {
    for (std::size_t i = 0; i < base.size(); ++i) {
      Level lv;
      lv.base = base[i];
      for (std::size_t s = 0; s < strong.size(); ++s) {
        bool fixes = true;
        for (std::size_t j = 0; j < i && fixes; ++j) fixes = strong[s](base[j]) == base[j];
        if (fixes) lv.gens.push_back(s);
      }
      lv.via.assign(n, -1);
      lv.parent.assign(n, 0);
      lv.u.assign(n, Permutation());
      lv.word.assign(n, Word());
      lv.via[lv.base] = -2;
      lv.u[lv.base] = Permutation(n);
      lv.orbit.push_back(lv.base);
      for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
        const Point x = lv.orbit[k];
        for (auto s : lv.gens) {
          const Point y = strong[s](x);
          if (lv.via[y] != -1) continue;
          lv.via[y] = static_cast<std::int32_t>(s);
          lv.parent[y] = x;
          lv.u[y] = lv.u[x] * strong[s];
          lv.word[y] = lv.word[x];
          lv.word[y].push_back(static_cast<Letter>(s));
          lv.orbit.push_back(y);
        }
      }
      levels.push_back(std::move(lv));
    }
  }

  // g = u_k ... u_1 with u_i from level i, so its word is word(u_k)...word(u_1).
  std::optional<Word> sift_word(Permutation g, std::size_t from) const {
    std::vector<const Word*> parts;
    for (std::size_t i = from; i < levels.size(); ++i) {
      const auto& lv = levels[i];
      const Point beta = g(lv.base);
      if (lv.via[beta] == -1) return std::nullopt;
      g = g * lv.u[beta].inverse();
      parts.push_back(&lv.word[beta]);
    }
    if (!g.is_identity()) return std::nullopt;
    Word w;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) w.insert(w.end(), (*it)->begin(), (*it)->end());
    return w;
  }
};

std::vector<std::size_t> orbit_sizes(std::size_t n, const std::vector<Point>& base,
                                     const std::vector<Permutation>& gens) {
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < base.size(); ++i) {
    std::vector<const Permutation*> lg;
    for (const auto& g : gens) {
      bool fixes = true;
      for (std::size_t j = 0; j < i && fixes; ++j) fixes = g(base[j]) == base[j];
      if (fixes) lg.push_back(&g);
    }
    std::vector<char> seen(n, 0);
    std::vector<Point> orb{base[i]};
    seen[base[i]] = 1;
    for (std::size_t k = 0; k < orb.size(); ++k)
      for (auto* g : lg) {
        const Point y = (*g)(orb[k]);
        if (!seen[y]) {
          seen[y] = 1;
          orb.push_back(y);
        }
      }
    sizes.push_back(orb.size());
  }
  return sizes;
}

}  // namespace

ControlGroup bsgs_control(std::string name, const PermutationGroup& group, const std::string& prefix) {
  const std::size_t n = group.degree();
  const auto& chain = group.chain();
  const auto base = chain.base();
  // Generators first, so that they survive pruning where possible.
  std::vector<Permutation> strong;
  for (const auto& g : group.generators())
    if (!g.is_identity() && std::find(strong.begin(), strong.end(), g) == strong.end()) strong.push_back(g);
  for (const auto& g : chain.strong_generators())
    if (!g.is_identity() && std::find(strong.begin(), strong.end(), g) == strong.end()) strong.push_back(g);
  // Dropping a generator keeps a strong generating set as long as every
  // basic orbit is unchanged.
  const auto target = orbit_sizes(n, base, strong);
  for (std::size_t k = strong.size(); k-- > 0;) {
    auto trial = strong;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(k));
    if (orbit_sizes(n, base, trial) == target) strong = std::move(trial);
  }
  auto wc = std::make_shared<const WordChain>(n, base, strong);

  ControlGroup c;
  c.name = std::move(name);
  c.degree = n;
  c.order = group.order();
  c.images = strong;
  for (std::size_t s = 0; s < strong.size(); ++s) c.presentation.generators.push_back(prefix + std::to_string(s + 1));

  std::set<Word> seen;
  auto add = [&](Word r) {
    r = cyclic_reduce(free_reduce(r));
    if (!r.empty() && seen.insert(r).second) c.presentation.relators.push_back(std::move(r));
  };
  for (std::size_t s = 0; s < strong.size(); ++s)
    add(power(Word{static_cast<Letter>(s)}, static_cast<int>(strong[s].order())));
  for (std::size_t i = 0; i < wc->levels.size(); ++i) {
    const auto& lv = wc->levels[i];
    for (Point beta : lv.orbit)
      for (auto s : lv.gens) {
        const Point img = strong[s](beta);
        if (lv.via[img] == static_cast<std::int32_t>(s) && lv.parent[img] == beta) continue;  // tree edge
        const Permutation h = lv.u[beta] * strong[s] * lv.u[img].inverse();
        auto hw = wc->sift_word(h, i + 1);
        if (!hw) throw std::logic_error("bsgs_control: Schreier generator does not sift");
        Word r = lv.word[beta];
        r.push_back(static_cast<Letter>(s));
        r = concat(r, inverse(lv.word[img]));
        r = concat(r, inverse(*hw));
        add(std::move(r));
      }
  }
  c.encoder = [wc](const Permutation& g) -> std::optional<Word> {
    if (g.degree() != wc->degree) return std::nullopt;
    return wc->sift_word(g, 0);
  };
  return c;
}

ControlGroup presented_control(std::string name, Presentation presentation, std::vector<Permutation> images,
                               Integer order) {
  if (images.size() != presentation.num_generators())
    throw std::invalid_argument("presented_control: one image per generator required");
  if (images.empty()) throw std::invalid_argument("presented_control: no generators");
  ControlGroup c;
  c.name = std::move(name);
  c.degree = images[0].degree();
  c.presentation = std::move(presentation);
  c.images = std::move(images);
  c.order = std::move(order);
  return c;
}

namespace {

// Cayley graph search keyed by base images; records the last letter used.
struct CayleyWords {
  std::vector<Permutation> images;
  std::once_flag built;
  std::vector<Point> base;
  std::vector<std::pair<Letter, Permutation>> letters;
  std::unordered_map<std::string, Letter> last;

  std::string key(const Permutation& g) const {
    std::string k(base.size() * sizeof(Point), '\0');
    for (std::size_t i = 0; i < base.size(); ++i) {
      const Point y = g(base[i]);
      std::memcpy(k.data() + i * sizeof(Point), &y, sizeof(Point));
    }
    return k;
  }

  void build() {
    const std::size_t n = images[0].degree();
    base = PermutationGroup(n, images).chain().base();
    for (std::size_t g = 0; g < images.size(); ++g) {
      letters.emplace_back(static_cast<Letter>(g), images[g]);
      if (images[g].order() > 2) letters.emplace_back(inverse_letter(static_cast<Letter>(g)), images[g].inverse());
    }
    const Permutation one(n);
    last.emplace(key(one), 0);
    std::vector<Permutation> layer{one};
    while (!layer.empty()) {
      std::vector<Permutation> next;
      for (const auto& x : layer)
        for (const auto& [l, g] : letters) {
          auto y = x * g;
          if (last.emplace(key(y), l).second) next.push_back(std::move(y));
        }
      layer = std::move(next);
    }
  }

  std::optional<Word> word(const Permutation& g) {
    std::call_once(built, [this] { build(); });
    if (g.degree() != images[0].degree()) return std::nullopt;
    Word w;
    Permutation x = g;
    while (!x.is_identity()) {
      const auto it = last.find(key(x));
      if (it == last.end() || w.size() > last.size()) return std::nullopt;
      w.push_back(it->second);
      const auto& step = std::find_if(letters.begin(), letters.end(), [&](const auto& p) { return p.first == it->second; });
      x = x * step->second.inverse();
    }
    std::reverse(w.begin(), w.end());
    return w;
  }
};

}  // namespace

ControlGroup::Encoder cayley_encoder(std::vector<Permutation> images) {
  if (images.empty()) throw std::invalid_argument("cayley_encoder: no generators");
  auto words = std::make_shared<CayleyWords>();
  words->images = std::move(images);
  return [words](const Permutation& g) { return words->word(g); };
}

ControlGroup m22_control() {
  const auto g = m22(0, 1);
  Presentation p;
  p.generators = {"a", "b"};
  for (const char* r : {"a^2", "b^4", "(a*b)^11", "(a*b^2)^5", "[a, b*a*b]^3", "(a*b*a*b*a*b^-1)^5"})
    p.relators.push_back(parse_word(r, p));
  // Seeded search for a pair satisfying the relators and generating M22.
  std::mt19937_64 rng(22);
  for (;;) {
    const auto a = g.random_element(rng);
    if (a.order() != 2) continue;
    const auto b = g.random_element(rng);
    if (b.order() != 4) continue;
    const std::vector<Permutation> images{a, b};
    if (!std::all_of(p.relators.begin(), p.relators.end(),
                     [&](const Word& r) { return evaluate(r, images).is_identity(); }))
      continue;
    if (PermutationGroup(g.degree(), images).order() != g.order()) continue;
    auto c = presented_control("M22", std::move(p), images, g.order());
    c.encoder = cayley_encoder(images);
    return c;
  }
}

ControlCertificate certify(const ControlGroup& control, std::size_t enumerate_up_to) {
  ControlCertificate cert;
  cert.relators_hold = std::all_of(control.presentation.relators.begin(), control.presentation.relators.end(),
                                   [&](const Word& r) { return control.evaluate(r).is_identity(); });
  cert.order_matches = PermutationGroup(control.degree, control.images).order() == control.order;
  if (control.order <= enumerate_up_to) {
    const auto want = static_cast<std::size_t>(control.order);
    auto r = todd_coxeter(control.presentation, {}, {std::max<std::size_t>(4 * want, 1024), Strategy::hlt_lookahead});
    cert.enumerated = std::holds_alternative<CosetTable>(r) && std::get<CosetTable>(r).index() == want;
  }
  return cert;
}

std::optional<ControlGroup> builtin_control(const std::string& name) {
  auto number = [&](std::size_t from) -> std::optional<std::size_t> {
    std::size_t k = 0;
    auto [p, ec] = std::from_chars(name.data() + from, name.data() + name.size(), k);
    if (ec != std::errc() || p != name.data() + name.size() || k == 0 || k > 32) return std::nullopt;
    return k;
  };
  if (name.size() > 1 && name[0] == 'S') {
    if (auto k = number(1)) return symmetric_control(*k);
  }
  if (name.size() > 1 && name[0] == 'A') {
    if (auto k = number(1); k && *k >= 3) return bsgs_control(name, PermutationGroup::alternating(*k));
  }
  if (name == "L3(2)") return bsgs_control(name, l3_2());
  if (name == "GL4(2)" || name == "L4(2)") return bsgs_control(name, gl4_2());
  if (name == "L2(16):4") return bsgs_control(name, l2_16_4());
  if (name == "M22") return m22_control();
  if (name == "M24") return bsgs_control(name, m24());
  return std::nullopt;
}

PairedLifter::PairedLifter(const std::vector<Permutation>& action_gens, const std::vector<Permutation>& base_gens,
                           std::optional<Integer> order)
    : action_degree_(action_gens.empty() ? 0 : action_gens[0].degree()),
      base_degree_(base_gens.empty() ? 0 : base_gens[0].degree()),
      chain_([&] {
        if (action_gens.size() != base_gens.size() || action_gens.empty())
          throw std::invalid_argument("PairedLifter: generator lists must match and be nonempty");
        const std::size_t a = action_gens[0].degree();
        const std::size_t b = base_gens[0].degree();
        std::vector<Permutation> paired;
        for (std::size_t i = 0; i < action_gens.size(); ++i) {
          std::vector<Point> img(a + b);
          for (Point x = 0; x < a; ++x) img[x] = action_gens[i](x);
          for (Point x = 0; x < b; ++x) img[a + x] = static_cast<Point>(a) + base_gens[i](x);
          paired.push_back(Permutation::unchecked(std::move(img)));
        }
        ChainOptions opt;
        opt.base_limit = static_cast<Point>(a);
        opt.order_bound = order;
        return StabilizerChain(a + b, paired, opt);
      }()),
      order_(chain_.order()) {}

std::optional<Permutation> PairedLifter::lift(const Permutation& action_perm) const {
  if (action_perm.degree() != action_degree_) return std::nullopt;
  std::vector<Point> img(action_degree_ + base_degree_);
  for (Point x = 0; x < action_degree_; ++x) img[x] = action_perm(x);
  for (Point x = 0; x < base_degree_; ++x) img[action_degree_ + x] = static_cast<Point>(action_degree_ + x);
  const auto res = chain_.sift(Permutation::unchecked(std::move(img)));
  for (Point x = 0; x < action_degree_; ++x)
    if (res.residue(x) != x) return std::nullopt;
  std::vector<Point> base(base_degree_);
  for (Point x = 0; x < base_degree_; ++x)
    base[x] = res.residue(static_cast<Point>(action_degree_ + x)) - static_cast<Point>(action_degree_);
  return Permutation(std::move(base)).inverse();
}

}  // namespace symgen
