#include "symgen/double_coset_enum.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace symgen {

namespace {

ProgElement eval_element(const Progenitor& p, const RelationExpr& e, const Bindings& b, int depth) {
  using K = RelationExpr::Kind;
  if (depth > 64) throw std::invalid_argument("relation names are nested too deeply (cyclic definition?)");
  auto where = [&] { return " (line " + std::to_string(e.line) + ", column " + std::to_string(e.column) + ")"; };
  const std::size_t deg = p.control().degree;
  auto in_control = [&](const Permutation& g, const std::string& what) {
    if (!p.control().group().contains(g)) throw std::invalid_argument(what + " is not an element of " + p.control().name);
    return ProgElement{g, {}};
  };
  switch (e.kind) {
    case K::product: {
      ProgElement acc{Permutation(deg), {}};
      for (const auto& a : e.args) acc = multiply(p, acc, eval_element(p, a, b, depth));
      return acc;
    }
    case K::power: {
      ProgElement base = eval_element(p, e.args[0], b, depth);
      if (e.exponent < 0) base = invert(p, base);
      ProgElement acc{Permutation(deg), {}};
      for (std::int64_t k = 0; k < (e.exponent < 0 ? -e.exponent : e.exponent); ++k) acc = multiply(p, acc, base);
      return acc;
    }
    case K::commutator: {
      const auto x = eval_element(p, e.args[0], b, depth);
      const auto y = eval_element(p, e.args[1], b, depth);
      return multiply(p, multiply(p, invert(p, x), invert(p, y)), multiply(p, x, y));
    }
    case K::equation:
      return multiply(p, eval_element(p, e.args[0], b, depth), invert(p, eval_element(p, e.args[1], b, depth)));
    case K::cycles:
      return in_control(resolve_cycles(e, deg), "permutation " + to_string(e) + where());
    case K::symmetric: {
      const auto i = p.action().find(e.text);
      if (!i) throw std::invalid_argument("unknown symmetric generator t[" + e.text + "]" + where());
      return {Permutation(deg), {*i}};
    }
    case K::generator: {
      const auto g = p.control().presentation.find_generator(e.text);
      if (!g) throw std::invalid_argument("unknown control generator g[" + e.text + "]" + where());
      return {p.control().images[*g], {}};
    }
    case K::name: {
      if (auto it = b.permutations.find(e.text); it != b.permutations.end()) return in_control(it->second, "'" + e.text + "'");
      if (auto it = b.names.find(e.text); it != b.names.end()) return eval_element(p, it->second, b, depth + 1);
      throw std::invalid_argument("unbound name '" + e.text + "'" + where());
    }
  }
  throw std::logic_error("unreachable");
}

// A single coset R_dc * g: the representative coset of double coset dc moved by g in N.
struct Coset {
  std::uint32_t dc;
  Permutation g;
};

class DoubleCosetEnumerator {
 public:
  DoubleCosetEnumerator(const Progenitor& p, const std::vector<ProgElement>& relations, const DoubleCosetLimits& limits);
  bool run();
  /// Control generators followed by one t per orbit, acting on the single cosets.
  std::optional<std::vector<Permutation>> expand();
  const DoubleCosetStats& stats() const { return stats_; }

 private:
  struct Relator {
    std::vector<Point> v;  // t_{v_1} ... t_{v_m} tail = 1
    Permutation tail;
    std::size_t head;      // index into heads_
  };
  // Elements of Stab_N(point) for a relator's first point, indexed for lookup.
  struct Head {
    Point point;
    std::vector<Permutation> elements;
    std::unordered_map<Permutation, std::uint32_t, PermutationHash> index;
  };
  struct DC {
    std::uint32_t fwd;  // == own index while alive
    Permutation fwd_g;  // R_this = R_fwd * fwd_g
    std::vector<Permutation> gens;        // generate the coset stabilizer S
    std::vector<Permutation> omega_gens;  // the same on the symmetric generators
    std::unique_ptr<StabilizerChain> chain;
    std::vector<std::uint32_t> orbit_id;  // point -> orbit
    std::vector<Point> parent;
    std::vector<std::int32_t> via;        // generator reaching the point from parent, -1 at the orbit rep
    std::vector<std::vector<Point>> orbits;  // orbits[k][0] is the representative
    std::unordered_map<Point, Coset> edges;  // rep r -> R t_r
  };
  struct Event {
    bool assign;
    std::uint32_t dc;
    Point point;  // assign: R_dc t_point = a
    Coset a, b;   // coincidence: a = b
  };

  Permutation identity() const { return Permutation(deg_); }
  Point image(Point i, const Permutation& g) const { return p_.action().image(i, g); }
  bool alive(std::uint32_t d) const { return dcs_[d].fwd == d; }
  Coset resolve(Coset c) const;

  void rebuild(std::uint32_t d);
  Permutation transversal(std::uint32_t d, Point q) const;
  std::vector<Permutation> stabilizer_elements(std::uint32_t d, Point r) const;
  void consequences(std::uint32_t d, Point r);

  std::optional<Coset> step(const Coset& c, Point j) const;
  bool define(const Coset& c, Point j);
  void push_coincidence(Coset a, Coset b) { queue_.push_back({false, 0, 0, std::move(a), std::move(b)}); }
  void push_assign(std::uint32_t d, Point i, Coset e) { queue_.push_back({true, d, i, std::move(e), {}}); }
  void process();
  void do_assign(std::uint32_t d, Point i, Coset e);
  void do_coincidence(Coset a, Coset b);
  void merge(std::uint32_t a, std::uint32_t b, const Permutation& theta);

  bool scan(std::uint32_t k, const Relator& r, const Permutation& pi);
  bool process_dc(std::uint32_t k);
  std::vector<Permutation> conditions(std::uint32_t k, const Relator& r) const;

  const Progenitor& p_;
  DoubleCosetLimits limits_;
  std::size_t deg_;
  std::size_t n_;
  std::vector<Permutation> sigma_;  // base permutations taking the orbit rep to each point
  std::vector<Relator> relators_;
  std::vector<Head> heads_;
  std::vector<DC> dcs_;
  std::deque<Event> queue_;
  DoubleCosetStats stats_;
  bool overflow_ = false;
};

DoubleCosetEnumerator::DoubleCosetEnumerator(const Progenitor& p, const std::vector<ProgElement>& relations,
                                             const DoubleCosetLimits& limits)
    : p_(p), limits_(limits), deg_(p.control().degree), n_(p.degree()) {
  for (Point i = 0; i < n_; ++i) sigma_.push_back(p.control().evaluate(p.sigma(i)));
  for (const auto& rel : relations) {
    if (rel.pi.degree() != deg_) throw std::invalid_argument("double coset enumeration: relation of the wrong degree");
    if (rel.w.empty()) {
      if (rel.pi.is_identity()) continue;
      throw std::invalid_argument("double coset enumeration: every relation needs a symmetric generator");
    }
    // pi t_{u_1} ... t_{u_m} = t_{v_1} ... t_{v_m} pi with v_i = u_i^(pi^-1).
    Relator r;
    const Permutation inv = rel.pi.inverse();
    for (Point u : rel.w) r.v.push_back(image(u, inv));
    r.tail = rel.pi;
    r.head = heads_.size();
    for (std::size_t h = 0; h < heads_.size(); ++h)
      if (heads_[h].point == r.v[0]) r.head = h;
    if (r.head == heads_.size()) {
      const Point v = r.v[0];
      const auto& orb = p.orbits()[p.orbit_of(v)];
      std::vector<Permutation> gens;
      const Permutation sv = sigma_[v];
      for (const auto& w : orb.stabilizer_words) gens.push_back(conjugate(p.control().evaluate(w), sv));
      if (gens.empty()) gens.push_back(identity());
      Head head{v, PermutationGroup(deg_, gens, p.control().order / orb.points.size()).elements(), {}};
      for (std::uint32_t k = 0; k < head.elements.size(); ++k) head.index.emplace(head.elements[k], k);
      heads_.push_back(std::move(head));
    }
    relators_.push_back(std::move(r));
  }
  DC root;
  root.fwd = 0;
  root.gens = p.control().images;
  dcs_.push_back(std::move(root));
  rebuild(0);
  stats_.defined = 1;
}

Coset DoubleCosetEnumerator::resolve(Coset c) const {
  while (dcs_[c.dc].fwd != c.dc) {
    c.g = dcs_[c.dc].fwd_g * c.g;
    c.dc = dcs_[c.dc].fwd;
  }
  return c;
}

void DoubleCosetEnumerator::rebuild(std::uint32_t d) {
  auto& x = dcs_[d];
  ChainOptions opt;
  opt.order_bound = p_.control().order;
  x.chain = std::make_unique<StabilizerChain>(deg_, x.gens, opt);
  x.omega_gens = p_.action().induce(x.gens);
  x.orbit_id.assign(n_, static_cast<std::uint32_t>(-1));
  x.parent.assign(n_, 0);
  x.via.assign(n_, -1);
  x.orbits.clear();
  for (Point s = 0; s < n_; ++s) {
    if (x.orbit_id[s] != static_cast<std::uint32_t>(-1)) continue;
    const auto id = static_cast<std::uint32_t>(x.orbits.size());
    std::vector<Point> orb{s};
    x.orbit_id[s] = id;
    for (std::size_t k = 0; k < orb.size(); ++k)
      for (std::size_t g = 0; g < x.omega_gens.size(); ++g) {
        const Point y = x.omega_gens[g](orb[k]);
        if (x.orbit_id[y] != static_cast<std::uint32_t>(-1)) continue;
        x.orbit_id[y] = id;
        x.parent[y] = orb[k];
        x.via[y] = static_cast<std::int32_t>(g);
        orb.push_back(y);
      }
    x.orbits.push_back(std::move(orb));
  }
}

Permutation DoubleCosetEnumerator::transversal(std::uint32_t d, Point q) const {
  const auto& x = dcs_[d];
  std::vector<std::int32_t> path;
  for (; x.via[q] >= 0; q = x.parent[q]) path.push_back(x.via[q]);
  Permutation s = identity();
  for (auto it = path.rbegin(); it != path.rend(); ++it) s = s * x.gens[static_cast<std::size_t>(*it)];
  return s;
}

// Schreier generators of Stab_S(r).
std::vector<Permutation> DoubleCosetEnumerator::stabilizer_elements(std::uint32_t d, Point r) const {
  const auto& x = dcs_[d];
  const auto& orb = x.orbits[x.orbit_id[r]];
  std::unordered_map<Point, Permutation> trans;
  trans.emplace(orb[0], identity());
  for (std::size_t k = 1; k < orb.size(); ++k)
    trans.emplace(orb[k], trans.at(x.parent[orb[k]]) * x.gens[static_cast<std::size_t>(x.via[orb[k]])]);
  // Re-base at r: Stab(r) = s_r^-1 Stab(rep) s_r.
  const Permutation sr = trans.at(r), sr_inv = sr.inverse();
  std::vector<Permutation> out;
  for (Point y : orb)
    for (std::size_t g = 0; g < x.gens.size(); ++g) {
      const Point z = x.omega_gens[g](y);
      if (x.via[z] == static_cast<std::int32_t>(g) && x.parent[z] == y) continue;  // tree edge
      Permutation h = sr_inv * trans.at(y) * x.gens[g] * trans.at(z).inverse() * sr;
      if (!h.is_identity()) out.push_back(std::move(h));
    }
  return out;
}

// For kappa in Stab_S(r): R t_r kappa = R t_r.
void DoubleCosetEnumerator::consequences(std::uint32_t d, Point r) {
  const Coset e = resolve(dcs_[d].edges.at(r));
  const auto& target = dcs_[e.dc];
  const Permutation inv = e.g.inverse();
  for (const auto& k : stabilizer_elements(d, r)) {
    Permutation h = e.g * k * inv;
    if (!target.chain->contains(h)) push_coincidence({e.dc, e.g * k}, e);
  }
}

std::optional<Coset> DoubleCosetEnumerator::step(const Coset& c0, Point j) const {
  const Coset c = resolve(c0);
  const auto& x = dcs_[c.dc];
  const Point q = image(j, c.g.inverse());
  const Point r = x.orbits[x.orbit_id[q]][0];
  auto it = x.edges.find(r);
  if (it == x.edges.end()) return std::nullopt;
  Coset e = resolve(it->second);
  e.g = e.g * transversal(c.dc, q) * c.g;
  return e;
}

// Defines R_new = R_d t_r for the orbit rep r of c * t_j.
bool DoubleCosetEnumerator::define(const Coset& c0, Point j) {
  if (dcs_.size() >= limits_.max_double_cosets) {
    overflow_ = true;
    return false;
  }
  const Coset c = resolve(c0);
  const Point q = image(j, c.g.inverse());
  const Point r = dcs_[c.dc].orbits[dcs_[c.dc].orbit_id[q]][0];
  std::vector<Permutation> gens;
  std::unique_ptr<StabilizerChain> chain;
  ChainOptions opt;
  opt.order_bound = p_.control().order;
  for (auto& h : stabilizer_elements(c.dc, r)) {
    if (chain && chain->contains(h)) continue;
    gens.push_back(std::move(h));
    chain = std::make_unique<StabilizerChain>(deg_, gens, opt);
  }
  const auto id = static_cast<std::uint32_t>(dcs_.size());
  DC nd;
  nd.fwd = id;
  nd.gens = std::move(gens);
  dcs_.push_back(std::move(nd));
  rebuild(id);
  dcs_[c.dc].edges.emplace(r, Coset{id, identity()});
  dcs_[id].edges.emplace(r, Coset{c.dc, identity()});
  ++stats_.defined;
  return true;
}

void DoubleCosetEnumerator::process() {
  while (!queue_.empty()) {
    Event ev = std::move(queue_.front());
    queue_.pop_front();
    if (ev.assign)
      do_assign(ev.dc, ev.point, std::move(ev.a));
    else
      do_coincidence(std::move(ev.a), std::move(ev.b));
  }
}

void DoubleCosetEnumerator::do_assign(std::uint32_t d, Point i, Coset e) {
  while (!alive(d)) {
    const Permutation inv = dcs_[d].fwd_g.inverse();
    i = image(i, inv);
    e.g = e.g * inv;
    d = dcs_[d].fwd;
  }
  e = resolve(std::move(e));
  auto& x = dcs_[d];
  const Point r = x.orbits[x.orbit_id[i]][0];
  const Permutation s_inv = transversal(d, i).inverse();
  e.g = e.g * s_inv;
  if (auto it = x.edges.find(r); it != x.edges.end()) {
    push_coincidence(it->second, std::move(e));
    return;
  }
  x.edges.emplace(r, e);
  consequences(d, r);
  const Permutation rho_inv = e.g.inverse();
  push_assign(e.dc, image(r, rho_inv), Coset{d, rho_inv});
}

void DoubleCosetEnumerator::do_coincidence(Coset a, Coset b) {
  a = resolve(std::move(a));
  b = resolve(std::move(b));
  if (a.dc == b.dc) {
    Permutation h = b.g * a.g.inverse();
    auto& x = dcs_[a.dc];
    if (x.chain->contains(h)) return;
    ++stats_.enlargements;
    x.gens.push_back(std::move(h));
    auto old = std::move(x.edges);
    x.edges.clear();
    rebuild(a.dc);
    for (auto& [r, e] : old) push_assign(a.dc, r, std::move(e));
    return;
  }
  // R_a ga = R_b gb: keep the older double coset.
  if (a.dc > b.dc) std::swap(a, b);
  merge(a.dc, b.dc, a.g * b.g.inverse());
}

void DoubleCosetEnumerator::merge(std::uint32_t a, std::uint32_t b, const Permutation& theta) {
  ++stats_.merged;
  auto& y = dcs_[b];
  y.fwd = a;
  y.fwd_g = theta;
  for (const auto& s : y.gens) push_coincidence({a, theta * s}, {a, theta});
  for (auto& [r, e] : y.edges) push_assign(b, r, std::move(e));
  y.edges.clear();
  y.gens.clear();
  y.omega_gens.clear();
  y.chain.reset();
  y.orbit_id = {};
  y.parent = {};
  y.via = {};
  y.orbits = {};
}

// Coset R_k pi: t_{v_1} ... t_{v_m} must lead to R_k pi tail^-1.
bool DoubleCosetEnumerator::scan(std::uint32_t k, const Relator& r, const Permutation& pi) {
  ++stats_.conditions;
  const std::size_t m = r.v.size();
  Coset f{k, pi};
  Coset b{k, pi * r.tail.inverse()};
  std::size_t i = 0, j = m;  // f has read v[0, i), b has read v[j, m) backwards
  for (;;) {
    while (i < j) {
      auto nx = step(f, r.v[i]);
      if (!nx) break;
      f = std::move(*nx);
      ++i;
    }
    while (j > i) {
      auto nx = step(b, r.v[j - 1]);
      if (!nx) break;
      b = std::move(*nx);
      --j;
    }
    if (i == j) {
      push_coincidence(f, b);
      process();
      return true;
    }
    if (i + 1 == j) {
      const Coset fr = resolve(f);
      const Permutation inv = fr.g.inverse();
      push_assign(fr.dc, image(r.v[i], inv), Coset{b.dc, b.g * inv});
      process();
      return true;
    }
    if (!define(f, r.v[i])) return false;
  }
}

// Representatives x = pi^-1 of the conditions at R_k: v_1^x runs over the S-orbit reps.
std::vector<Permutation> DoubleCosetEnumerator::conditions(std::uint32_t k, const Relator& r) const {
  const Head& head = heads_[r.head];
  const auto& x = dcs_[k];
  const std::size_t orbit = p_.orbit_of(head.point);
  const Permutation sv_inv = sigma_[head.point].inverse();
  std::vector<Permutation> out;
  std::vector<char> seen(head.elements.size());
  for (const auto& orb : x.orbits) {
    const Point rj = orb[0];
    if (p_.orbit_of(rj) != orbit) continue;
    const Permutation tau = sv_inv * sigma_[rj];
    const Permutation tau_inv = tau.inverse();
    std::vector<Permutation> kgens;
    for (const auto& h : stabilizer_elements(k, rj)) kgens.push_back(tau * h * tau_inv);
    if (kgens.empty()) {
      for (const auto& h : head.elements) out.push_back(h * tau);
      continue;
    }
    const auto kel = PermutationGroup(deg_, kgens).elements();
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < head.elements.size(); ++a) {
      if (seen[a]) continue;
      const auto& h = head.elements[a];
      out.push_back(h * tau);
      for (const auto& kk : kel) seen[head.index.at(h * kk)] = 1;
    }
  }
  return out;
}

bool DoubleCosetEnumerator::process_dc(std::uint32_t k) {
  for (const auto& r : relators_) {
    if (!alive(k)) return true;
    for (const auto& x : conditions(k, r)) {
      if (!alive(k)) return true;
      if (!scan(k, r, x.inverse())) return false;
    }
  }
  // Close the row: every orbit of the stabilizer gets its edge.
  while (alive(k)) {
    const auto& x = dcs_[k];
    auto it = std::find_if(x.orbits.begin(), x.orbits.end(), [&](const auto& o) { return !x.edges.count(o[0]); });
    if (it == x.orbits.end()) break;
    if (!define(Coset{k, identity()}, (*it)[0])) return false;
    process();
  }
  return true;
}

bool DoubleCosetEnumerator::run() {
  for (std::uint32_t k = 0; k < dcs_.size(); ++k) {
    if (!alive(k)) continue;
    if (!process_dc(k)) return false;
  }
  return !overflow_;
}

std::optional<std::vector<Permutation>> DoubleCosetEnumerator::expand() {
  // Right cosets S g of each live coset stabilizer, keyed by a canonical representative.
  struct Part {
    std::uint32_t dc;
    StabilizerChain chain;
    std::vector<Point> base;
  };
  std::vector<Part> parts;
  std::vector<std::uint32_t> part_of(dcs_.size(), static_cast<std::uint32_t>(-1));
  std::vector<Point> full(deg_);
  for (Point i = 0; i < deg_; ++i) full[i] = i;
  for (std::uint32_t d = 0; d < dcs_.size(); ++d) {
    if (!alive(d)) continue;
    ChainOptions opt;
    opt.base_prefix = full;
    opt.order_bound = p_.control().order;
    StabilizerChain ch(deg_, dcs_[d].gens, opt);
    part_of[d] = static_cast<std::uint32_t>(parts.size());
    parts.push_back({d, std::move(ch), {}});
    parts.back().base = parts.back().chain.base();
  }
  auto canonical = [&](const Part& pt, Permutation g) {
    for (std::size_t i = 0; i < pt.chain.length(); ++i) {
      const auto& orb = pt.chain.orbit(i);
      Point best = orb[0];
      for (Point b : orb)
        if (g(b) < g(best)) best = b;
      if (best != pt.chain.base_point(i)) g = pt.chain.transversal(i, best) * g;
    }
    return g;
  };
  std::unordered_map<std::string, std::uint32_t> index;
  std::vector<Coset> cosets;
  auto key = [&](std::uint32_t part, const Permutation& g) {
    std::string s(reinterpret_cast<const char*>(&part), sizeof part);
    s.append(reinterpret_cast<const char*>(g.images().data()), g.images().size() * sizeof(Point));
    return s;
  };
  auto lookup = [&](const Coset& c0) -> std::uint32_t {
    const Coset c = resolve(c0);
    const auto part = part_of[c.dc];
    Permutation g = canonical(parts[part], c.g);
    auto [it, fresh] = index.emplace(key(part, g), static_cast<std::uint32_t>(cosets.size()));
    if (fresh) cosets.push_back({c.dc, std::move(g)});
    return it->second;
  };
  const auto& gens = p_.control().images;
  for (std::size_t pt = 0; pt < parts.size(); ++pt) {
    const std::size_t start = cosets.size();
    lookup({parts[pt].dc, identity()});
    for (std::size_t k = start; k < cosets.size(); ++k) {
      if (cosets.size() > limits_.max_single_cosets) return std::nullopt;
      for (const auto& g : gens) lookup({cosets[k].dc, cosets[k].g * g});
    }
  }
  const std::size_t total = cosets.size();
  std::vector<Permutation> out;
  for (const auto& g : gens) {
    std::vector<Point> img(total);
    for (std::uint32_t c = 0; c < total; ++c) img[c] = lookup({cosets[c].dc, cosets[c].g * g});
    out.push_back(Permutation(std::move(img)));
  }
  for (const auto& orb : p_.orbits()) {
    std::vector<Point> img(total);
    for (std::uint32_t c = 0; c < total; ++c) {
      auto e = step(cosets[c], orb.rep);
      if (!e) throw std::logic_error("double coset enumeration: incomplete edge table");
      img[c] = lookup(*e);
    }
    if (cosets.size() != total) throw std::logic_error("double coset enumeration: edge leaves the coset space");
    out.push_back(Permutation(std::move(img)));
  }
  stats_.live = parts.size();
  return out;
}

}  // namespace

ProgElement relation_element(const Progenitor& p, const RelationExpr& e, const Bindings& b) {
  return eval_element(p, e, b, 0);
}

SymResult enumerate_double_cosets(std::shared_ptr<const Progenitor> p, const std::vector<ProgElement>& relations,
                                  const DoubleCosetLimits& limits, DoubleCosetStats* stats) {
  const auto start = std::chrono::steady_clock::now();
  DoubleCosetEnumerator en(*p, relations, limits);
  const bool ok = en.run();
  auto fill_stats = [&](EnumerationStats& s) {
    s.defined = en.stats().defined;
    s.merges = en.stats().merged + en.stats().enlargements;
    s.max_live = en.stats().defined;
  };
  if (!ok) {
    if (stats) *stats = en.stats();
    Overflow o;
    fill_stats(o.stats);
    o.max_cosets = limits.max_double_cosets;
    return o;
  }
  auto perms = en.expand();
  if (stats) *stats = en.stats();
  if (!perms) {
    Overflow o;
    fill_stats(o.stats);
    o.max_cosets = limits.max_single_cosets;
    return o;
  }
  SymEnumeration e;
  e.progenitor = p;
  e.presentation = p->presentation();
  for (const auto& r : relations) {
    auto w = cyclic_reduce(element_word(*p, r));
    if (!w.empty()) e.presentation.relators.push_back(std::move(w));
  }
  EnumerationStats st;
  fill_stats(st);
  auto table = CosetTable::from_permutations(*perms, st);
  if (!table.verify(e.presentation, p->subgroup()))
    throw std::logic_error("double coset enumeration produced an inconsistent table");
  e.table = std::make_shared<const CosetTable>(std::move(table));
  auto& r = e.report;
  r.index = e.table->index();
  r.stats = e.table->stats();
  r.control_image_order = PermutationGroup(r.index, e.control_on_cosets(), p->control().order).order();
  r.control_embeds = r.control_image_order == p->control().order;
  r.order = r.control_image_order * r.index;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return e;
}

}  // namespace symgen
