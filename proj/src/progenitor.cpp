#include "symgen/progenitor.hpp"

#include "symgen/double_coset_enum.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace symgen {

namespace {

std::string fresh_name(const Presentation& p, const std::string& preferred) {
  for (const std::string& cand : {preferred, std::string("u"), std::string("v"), std::string("T")})
    if (!p.find_generator(cand)) return cand;
  for (int k = 1;; ++k)
    if (!p.find_generator("T" + std::to_string(k))) return "T" + std::to_string(k);
}

}  // namespace

Progenitor::Progenitor(ControlGroup control, Action action)
    : control_(std::move(control)),
      action_(std::move(action)),
      action_images_(action_.induce(control_.images)),
      action_group_(action_.degree(), action_images_) {
  if (action_.base_degree() != control_.degree)
    throw std::invalid_argument("progenitor: action base degree differs from the control degree");
  if (control_.images.empty()) throw std::invalid_argument("progenitor: control group has no generators");
  const std::size_t n = action_.degree();
  orbit_index_.assign(n, static_cast<std::size_t>(-1));
  sigma_.assign(n, Word());
  // Generators and inverses of non-involutions: shorter words for sigma.
  std::vector<Letter> letters;
  std::vector<Permutation> letter_images;
  for (std::size_t g = 0; g < action_images_.size(); ++g) {
    letters.push_back(static_cast<Letter>(g));
    letter_images.push_back(action_images_[g]);
    if (control_.images[g].order() > 2) {
      letters.push_back(inverse_letter(static_cast<Letter>(g)));
      letter_images.push_back(action_images_[g].inverse());
    }
  }
  for (Point start = 0; start < n; ++start) {
    if (orbit_index_[start] != static_cast<std::size_t>(-1)) continue;
    SymOrbit orb;
    orb.rep = start;
    orb.points.push_back(start);
    orbit_index_[start] = orbits_.size();
    for (std::size_t k = 0; k < orb.points.size(); ++k) {
      const Point x = orb.points[k];
      for (std::size_t k2 = 0; k2 < letters.size(); ++k2) {
        const Point y = letter_images[k2](x);
        if (orbit_index_[y] != static_cast<std::size_t>(-1)) continue;
        orbit_index_[y] = orbits_.size();
        sigma_[y] = sigma_[x];
        sigma_[y].push_back(letters[k2]);
        orb.points.push_back(y);
      }
    }
    // Shortest Schreier generators until they generate the whole stabilizer.
    std::set<std::pair<std::size_t, Word>> schreier;
    for (Point x : orb.points)
      for (std::size_t k2 = 0; k2 < letters.size(); ++k2) {
        const Point y = letter_images[k2](x);
        Word w = sigma_[x];
        w.push_back(letters[k2]);
        w = free_reduce(concat(w, inverse(sigma_[y])));
        if (!w.empty()) schreier.emplace(w.size(), std::move(w));
      }
    const Integer target = control_.order / orb.points.size();
    std::vector<Permutation> chosen;
    Integer have = 1;
    for (const auto& [len, w] : schreier) {
      if (have == target) break;
      const Permutation g = control_.evaluate(w);
      if (g.is_identity()) continue;
      if (!chosen.empty()) {
        ChainOptions opt;
        opt.order_bound = target;
        opt.verify = false;
        if (StabilizerChain(control_.degree, chosen, opt).contains(g)) continue;
      }
      chosen.push_back(g);
      orb.stabilizer_words.push_back(w);
      ChainOptions opt;
      opt.order_bound = target;
      opt.verify = false;
      have = StabilizerChain(control_.degree, chosen, opt).order();
    }
    if (have != target) {
      // A randomized chain may undercount; settle it deterministically.
      if (PermutationGroup(control_.degree, chosen, target).order() != target)
        throw std::logic_error("progenitor: stabilizer words do not generate the point stabilizer");
    }
    orbits_.push_back(std::move(orb));
  }
}

Word Progenitor::t_word(Point i) const {
  Word w = inverse(sigma_.at(i));
  w.push_back(t_letter(orbit_of(i)));
  return free_reduce(concat(w, sigma_[i]));
}

Presentation Progenitor::presentation() const {
  Presentation p = control_.presentation;
  const std::size_t base = p.num_generators();
  for (std::size_t k = 0; k < orbits_.size(); ++k) {
    const auto name = fresh_name(p, orbits_.size() == 1 ? "t" : "t" + std::to_string(k + 1));
    p.generators.push_back(name);
  }
  for (std::size_t k = 0; k < orbits_.size(); ++k) {
    const auto t = static_cast<Letter>(base + k);
    p.relators.push_back({t, t});
    for (const auto& s : orbits_[k].stabilizer_words) {
      auto r = cyclic_reduce(commutator(Word{t}, s));
      if (!r.empty()) p.relators.push_back(std::move(r));
    }
  }
  return p;
}

std::vector<Word> Progenitor::subgroup() const {
  std::vector<Word> h;
  for (std::size_t g = 0; g < control_.presentation.num_generators(); ++g) h.push_back({static_cast<Letter>(g)});
  return h;
}

Permutation resolve_cycles(const RelationExpr& e, std::size_t n) {
  if (e.kind != RelationExpr::Kind::cycles) throw std::invalid_argument("resolve_cycles: not a cycle expression");
  constexpr std::string_view alphabet = "1234567890xy";
  Permutation result(n);
  for (const auto& cyc : e.cycles) {
    std::vector<Point> pts;
    for (const auto& tok : cyc) {
      std::optional<Point> p;
      if (n <= alphabet.size() && tok.size() == 1) {
        const auto k = alphabet.find(tok[0]);
        if (k != std::string_view::npos) p = static_cast<Point>(k);
      } else if (!tok.empty() && std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        const auto v = std::stoul(tok);
        if (v >= 1) p = static_cast<Point>(v - 1);
      }
      if (!p || *p >= n)
        throw std::invalid_argument("point '" + tok + "' is not one of the " + std::to_string(n) + " base points");
      if (std::find(pts.begin(), pts.end(), *p) != pts.end())
        throw std::invalid_argument("point '" + tok + "' repeated in a cycle");
      pts.push_back(*p);
    }
    std::vector<Point> img(n);
    for (Point x = 0; x < n; ++x) img[x] = x;
    for (std::size_t i = 0; i < pts.size(); ++i) img[pts[i]] = pts[(i + 1) % pts.size()];
    result = result * Permutation(std::move(img));
  }
  return result;
}

namespace {

Word eval_relation(const Progenitor& p, const RelationExpr& e, const Bindings& b, int depth) {
  using K = RelationExpr::Kind;
  if (depth > 64) throw std::invalid_argument("relation names are nested too deeply (cyclic definition?)");
  auto where = [&] { return " (line " + std::to_string(e.line) + ", column " + std::to_string(e.column) + ")"; };
  switch (e.kind) {
    case K::product: {
      Word w;
      for (const auto& a : e.args) w = concat(w, eval_relation(p, a, b, depth));
      return w;
    }
    case K::power:
      return power(eval_relation(p, e.args[0], b, depth), e.exponent);
    case K::commutator:
      return commutator(eval_relation(p, e.args[0], b, depth), eval_relation(p, e.args[1], b, depth));
    case K::equation:
      return concat(eval_relation(p, e.args[0], b, depth), inverse(eval_relation(p, e.args[1], b, depth)));
    case K::cycles: {
      const Permutation g = resolve_cycles(e, p.control().degree);
      auto w = p.control().can_encode() ? p.control().encoder(g) : std::nullopt;
      if (!w) throw std::invalid_argument("permutation " + to_string(e) + " is not expressible in " + p.control().name + where());
      return *w;
    }
    case K::symmetric: {
      const auto i = p.action().find(e.text);
      if (!i) throw std::invalid_argument("unknown symmetric generator t[" + e.text + "]" + where());
      return p.t_word(*i);
    }
    case K::generator: {
      const auto g = p.control().presentation.find_generator(e.text);
      if (!g) throw std::invalid_argument("unknown control generator g[" + e.text + "]" + where());
      return {static_cast<Letter>(*g)};
    }
    case K::name: {
      if (auto it = b.permutations.find(e.text); it != b.permutations.end()) {
        auto w = p.control().can_encode() ? p.control().encoder(it->second) : std::nullopt;
        if (!w) throw std::invalid_argument("'" + e.text + "' is not expressible in " + p.control().name);
        return *w;
      }
      if (auto it = b.names.find(e.text); it != b.names.end()) return eval_relation(p, it->second, b, depth + 1);
      throw std::invalid_argument("unbound name '" + e.text + "'" + where());
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Word relator_word(const Progenitor& p, const RelationExpr& e, const Bindings& b) {
  return free_reduce(eval_relation(p, e, b, 0));
}

ProgElement multiply(const Progenitor& p, const ProgElement& a, const ProgElement& b) {
  ProgElement out{a.pi * b.pi, {}};
  const Permutation act = p.induce(b.pi);
  for (Point i : a.w) out.w.push_back(act(i));
  out.w.insert(out.w.end(), b.w.begin(), b.w.end());
  return out;
}

ProgElement invert(const Progenitor& p, const ProgElement& a) {
  ProgElement out{a.pi.inverse(), {}};
  const Permutation act = p.induce(out.pi);
  for (auto it = a.w.rbegin(); it != a.w.rend(); ++it) out.w.push_back(act(*it));
  return out;
}

Word element_word(const Progenitor& p, const ProgElement& e) {
  Word w = p.control().encode(e.pi);
  for (Point i : e.w) w = concat(w, p.t_word(i));
  return free_reduce(w);
}

Permutation SymEnumeration::coset_permutation(const Word& w) const {
  std::vector<Point> img(table->index());
  for (std::uint32_t c = 0; c < img.size(); ++c) img[c] = table->act(c, w);
  return Permutation::unchecked(std::move(img));
}

std::vector<Permutation> SymEnumeration::control_on_cosets() const {
  std::vector<Permutation> out;
  for (std::size_t g = 0; g < progenitor->control().presentation.num_generators(); ++g)
    out.push_back(table->generator_permutation(g));
  return out;
}

std::vector<Permutation> SymEnumeration::t_on_cosets() const {
  const auto& p = *progenitor;
  const auto gens = control_on_cosets();
  std::vector<Permutation> sigma(p.degree()), out(p.degree());
  for (const auto& orb : p.orbits()) {
    sigma[orb.rep] = Permutation(table->index());
    const Permutation t = table->generator_permutation(generator_of(p.t_letter(p.orbit_of(orb.rep))));
    for (Point q : orb.points) {
      const Word& w = p.sigma(q);
      if (!w.empty()) {
        // sigma_q extends the word of the point it was reached from.
        const Letter l = w.back();
        const auto g = generator_of(l);
        const bool inv = l < 0;
        const Point from = inv ? p.action_images()[g](q) : p.action_images()[g].inverse()(q);
        sigma[q] = sigma[from] * (inv ? gens[g].inverse() : gens[g]);
      }
      out[q] = sigma[q].inverse() * t * sigma[q];
    }
  }
  return out;
}

SymResult enumerate(std::shared_ptr<const Progenitor> p, const std::vector<Word>& relators,
                    const EnumerationLimits& limits) {
  const auto start = std::chrono::steady_clock::now();
  Presentation pres = p->presentation();
  for (const auto& r : relators) {
    auto c = cyclic_reduce(r);
    if (!c.empty()) pres.relators.push_back(std::move(c));
  }
  auto res = todd_coxeter(pres, p->subgroup(), limits);
  if (auto* o = std::get_if<Overflow>(&res)) return *o;
  SymEnumeration e;
  e.progenitor = p;
  e.presentation = std::move(pres);
  e.table = std::make_shared<const CosetTable>(std::move(std::get<CosetTable>(res)));
  auto& r = e.report;
  r.index = e.table->index();
  r.stats = e.table->stats();
  r.control_image_order = PermutationGroup(r.index, e.control_on_cosets(), p->control().order).order();
  r.control_embeds = r.control_image_order == p->control().order;
  r.order = r.control_image_order * r.index;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return e;
}

std::size_t DoubleCosetTable::index() const {
  std::size_t n = 0;
  for (const auto& d : cosets) n += d.size;
  return n;
}

bool DoubleCosetTable::connected() const {
  if (cosets.empty()) return false;
  std::vector<char> seen(cosets.size(), 0);
  std::vector<std::size_t> q{0};
  seen[0] = 1;
  for (std::size_t k = 0; k < q.size(); ++k)
    for (const auto& [to, pts] : cosets[q[k]].edges)
      if (!seen[to]) {
        seen[to] = 1;
        q.push_back(to);
      }
  return q.size() == cosets.size();
}

DoubleCosetTable double_coset_analysis(const SymEnumeration& e) {
  const auto& p = *e.progenitor;
  const std::size_t index = e.table->index();
  const auto gens = e.control_on_cosets();
  const auto ts = e.t_on_cosets();
  constexpr auto none = static_cast<std::size_t>(-1);

  // N-orbits on cosets.
  std::vector<std::size_t> orbit(index, none);
  std::vector<std::size_t> orbit_size;
  for (std::uint32_t c = 0; c < index; ++c) {
    if (orbit[c] != none) continue;
    const std::size_t id = orbit_size.size();
    std::vector<std::uint32_t> q{c};
    orbit[c] = id;
    for (std::size_t k = 0; k < q.size(); ++k)
      for (const auto& g : gens) {
        const auto d = g(q[k]);
        if (orbit[d] == none) {
          orbit[d] = id;
          q.push_back(d);
        }
      }
    orbit_size.push_back(q.size());
  }

  // BFS over t-edges from N; the first coset met in each orbit represents it.
  DoubleCosetTable out;
  std::vector<std::size_t> dc_of_orbit(orbit_size.size(), none);
  std::vector<std::uint32_t> parent(index, 0);
  std::vector<Point> via(index, 0);
  std::vector<char> seen(index, 0);
  std::vector<std::uint32_t> q{0};
  seen[0] = 1;
  for (std::size_t k = 0; k < q.size(); ++k) {
    const auto c = q[k];
    if (dc_of_orbit[orbit[c]] == none) {
      dc_of_orbit[orbit[c]] = out.cosets.size();
      DoubleCoset d;
      d.coset = c;
      for (auto x = c; x != 0; x = parent[x]) d.word.push_back(via[x]);
      std::reverse(d.word.begin(), d.word.end());
      d.size = orbit_size[orbit[c]];
      d.stabilizer_order = p.control().order / d.size;
      out.cosets.push_back(std::move(d));
    }
    for (Point i = 0; i < p.degree(); ++i) {
      const auto d = ts[i](c);
      if (!seen[d]) {
        seen[d] = 1;
        parent[d] = c;
        via[d] = i;
        q.push_back(d);
      }
    }
  }
  if (q.size() != index) throw std::logic_error("double_coset_analysis: t-edges do not reach every coset");
  out.coset_class.resize(index);
  for (std::uint32_t c = 0; c < index; ++c) out.coset_class[c] = dc_of_orbit[orbit[c]];
  for (auto& d : out.cosets)
    for (Point i = 0; i < p.degree(); ++i) d.edges[out.coset_class[ts[i](d.coset)]].push_back(i);
  return out;
}

std::string double_coset_name(const Progenitor& p, const DoubleCoset& d) {
  if (d.word.empty()) return "[*]";
  bool compact = true;
  for (Point i : d.word) compact = compact && p.action().label(i).size() == 1;
  std::string s = "[";
  for (std::size_t k = 0; k < d.word.size(); ++k) {
    if (k && !compact) s += ',';
    s += p.action().label(d.word[k]);
  }
  return s + "]";
}

std::string to_dot(const Progenitor& p, const DoubleCosetTable& t, const std::string& title) {
  std::string out = "digraph \"" + title + "\" {\n  node [shape=ellipse];\n";
  for (std::size_t k = 0; k < t.cosets.size(); ++k)
    out += "  d" + std::to_string(k) + " [label=\"" + double_coset_name(p, t.cosets[k]) + "\\n" +
           std::to_string(t.cosets[k].size) + "\"];\n";
  for (std::size_t k = 0; k < t.cosets.size(); ++k)
    for (const auto& [to, pts] : t.cosets[k].edges)
      out += "  d" + std::to_string(k) + " -> d" + std::to_string(to) + " [label=\"" + std::to_string(pts.size()) +
             "\"];\n";
  return out + "}\n";
}

PermutationGroup lemma_centralizer(const Progenitor& p, const std::vector<Point>& points) {
  for (Point x : points)
    if (x >= p.degree()) throw std::out_of_range("lemma_centralizer: point out of range");
  const auto stab = p.action_group().point_stabilizer(points);
  return centralizer(p.action_group(), stab);
}

std::size_t conjugation_law_violations(const SymEnumeration& e, std::size_t samples, std::mt19937_64& rng) {
  const auto& p = *e.progenitor;
  const auto gens = e.control_on_cosets();
  const auto ts = e.t_on_cosets();
  std::size_t bad = 0;
  std::uniform_int_distribution<std::size_t> pick_gen(0, gens.size() - 1), pick_pt(0, p.degree() - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    Permutation on_cosets(e.table->index());
    Permutation on_points(p.degree());
    for (int k = 0; k < 20; ++k) {
      const auto g = pick_gen(rng);
      on_cosets = on_cosets * gens[g];
      on_points = on_points * p.action_images()[g];
    }
    const auto i = static_cast<Point>(pick_pt(rng));
    if (conjugate(ts[i], on_cosets) != ts[on_points(i)]) ++bad;
  }
  return bad;
}

CentralizerCheck centralizer_property(const SymEnumeration& e, std::size_t min_length) {
  const auto& p = *e.progenitor;
  if (!e.report.control_embeds) throw std::invalid_argument("centralizer_property: control does not embed");
  const PairedLifter lift(e.control_on_cosets(), p.action_images(), p.control().order);
  const auto ts = e.t_on_cosets();
  CentralizerCheck out;
  for (const auto& orb : p.orbits()) {
    const Point i = orb.rep;
    const std::array<Point, 1> fix{i};
    const auto stab = p.action_group().point_stabilizer(fix);
    std::vector<char> seen(p.degree(), 0);
    seen[i] = 1;
    for (Point j = 0; j < p.degree(); ++j) {
      if (seen[j]) continue;
      for (Point x : stab.orbit(j)) seen[x] = 1;
      ++out.pairs;
      const auto cent = lemma_centralizer(p, {i, j});
      const std::size_t m = (ts[i] * ts[j]).order();
      const std::size_t len = std::max(min_length, 2 * m);
      for (const Point first : {i, j}) {
        Permutation w(e.table->index());
        for (std::size_t k = 0; k < len; ++k) {
          w = w * ts[(k % 2 == 0) == (first == i) ? i : j];
          ++out.words;
          if (w(0) != 0) continue;
          ++out.hits;
          const auto pi = lift.lift(w);
          if (!pi || !cent.contains(*pi)) ++out.violations;
        }
      }
    }
  }
  return out;
}

PerfectnessReport perfectness(const Progenitor& p, const std::vector<Word>& relators) {
  PerfectnessReport r;
  r.control_perfect = abelianization_order(p.control().group()) == 1;
  Presentation pres = p.presentation();
  for (const auto& w : relators) {
    pres.relators.push_back(w);
    const auto ts = std::count_if(w.begin(), w.end(), [&](Letter x) { return p.is_t_letter(x); });
    if (ts % 2 == 1) r.odd_relation = true;
  }
  r.abelianization = abelianization_order(pres);
  if (r.control_perfect) {
    const bool small = r.abelianization && (*r.abelianization == 1 || *r.abelianization == 2);
    r.consistent = small && (!r.odd_relation || *r.abelianization == 1);
  }
  return r;
}

namespace {

// Representatives of the classes of `elems` under conjugation by `by`.
std::vector<Permutation> conjugacy_reps(const std::vector<Permutation>& elems, const std::vector<Permutation>& by) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> reps;
  for (const auto& x : elems) {
    if (seen.count(x)) continue;
    reps.push_back(x);
    std::vector<Permutation> q{x};
    seen.insert(x);
    for (std::size_t k = 0; k < q.size(); ++k)
      for (const auto& h : by) {
        auto y = conjugate(q[k], h);
        if (seen.insert(y).second) q.push_back(std::move(y));
      }
  }
  return reps;
}

// Generators of Stab_N(points) as base permutations.
std::vector<Permutation> base_stabilizer(const Progenitor& p, const std::vector<Point>& points) {
  const auto stab = p.action_group().point_stabilizer(points);
  const PairedLifter lift(p.action_images(), p.control().images, p.control().order);
  std::vector<Permutation> out;
  for (const auto& g : stab.generators()) {
    auto b = lift.lift(g);
    if (!b) throw std::logic_error("base_stabilizer: lift failed");
    out.push_back(std::move(*b));
  }
  return out;
}

}  // namespace

std::vector<Permutation> candidates_of_order(const Progenitor& p, std::uint64_t order,
                                             const std::vector<Point>& fixed) {
  std::vector<Permutation> elems;
  p.control().group().for_each_element([&](const Permutation& g) {
    if (g.order() == order) elems.push_back(g);
  });
  std::sort(elems.begin(), elems.end());
  return conjugacy_reps(elems, base_stabilizer(p, fixed));
}

std::vector<Permutation> candidates_from_centralizer(const Progenitor& p, const std::vector<Point>& points) {
  const auto cent = lemma_centralizer(p, points);
  const PairedLifter lift(p.action_images(), p.control().images, p.control().order);
  std::vector<Permutation> elems;
  cent.for_each_element([&](const Permutation& a) {
    if (a.is_identity()) return;
    auto b = lift.lift(a);
    if (!b) throw std::logic_error("candidates_from_centralizer: lift failed");
    elems.push_back(std::move(*b));
  });
  std::sort(elems.begin(), elems.end());
  return conjugacy_reps(elems, base_stabilizer(p, points));
}

SearchResult relation_search(std::shared_ptr<const Progenitor> p, const std::vector<RelationExpr>& relations,
                             const std::vector<Permutation>& candidates, std::size_t cap, const Bindings& bindings,
                             Strategy strategy, Method method) {
  SearchResult out;
  out.candidates = candidates.size();
  out.all.resize(candidates.size());
  auto run = [&](std::size_t k) {
    Bindings b = bindings;
    b.permutations.insert_or_assign("pi", candidates[k]);
    SymResult res;
    if (method == Method::double_cosets) {
      std::vector<ProgElement> rels;
      for (const auto& r : relations) rels.push_back(relation_element(*p, r, b));
      DoubleCosetLimits lim;
      lim.max_single_cosets = cap;
      res = enumerate_double_cosets(p, rels, lim);
    } else {
      std::vector<Word> rels;
      for (const auto& r : relations) rels.push_back(relator_word(*p, r, b));
      res = enumerate(p, rels, {cap, strategy});
    }
    SearchHit hit{candidates[k], std::nullopt};
    if (auto* e = std::get_if<SymEnumeration>(&res)) hit.index = e->report.index;
    return hit;
  };
  const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t first = 0; first < candidates.size(); first += width) {
    std::vector<std::future<SearchHit>> batch;
    const std::size_t last = std::min(candidates.size(), first + width);
    for (std::size_t k = first; k < last; ++k) batch.push_back(std::async(std::launch::async, run, k));
    for (std::size_t k = first; k < last; ++k) out.all[k] = batch[k - first].get();
  }
  for (const auto& h : out.all)
    if (h.index && *h.index > 1 && *h.index < cap) out.survivors.push_back(h);
  return out;
}

}  // namespace symgen
