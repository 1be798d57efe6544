#include "symgen/todd_coxeter.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace symgen {

std::string Overflow::message() const {
  return "coset enumeration overflow at " + std::to_string(max_cosets) +
         " cosets (index possibly infinite; raise the cap): defined " + std::to_string(stats.defined) +
         ", max live " + std::to_string(stats.max_live) + ", merges " + std::to_string(stats.merges);
}

Permutation CosetTable::generator_permutation(std::size_t g) const {
  std::vector<Point> img(index_);
  for (std::uint32_t c = 0; c < index_; ++c) img[c] = table_[c * 2 * ngens_ + 2 * g];
  return Permutation::unchecked(std::move(img));
}

Word CosetTable::representative_word(std::uint32_t c) const {
  if (c >= index_) throw std::out_of_range("representative_word: coset out of range");
  Word w;
  while (c != 0) {
    w.push_back(parent_letter_[c]);
    c = parent_[c];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

bool CosetTable::verify(const Presentation& p, const std::vector<Word>& subgroup) const {
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i] >= index_) return false;
  for (const auto& h : subgroup)
    if (act(0, h) != 0) return false;
  for (const auto& r : p.relators)
    for (std::uint32_t c = 0; c < index_; ++c)
      if (act(c, r) != c) return false;
  return true;
}

CosetTable CosetTable::from_permutations(const std::vector<Permutation>& gens, EnumerationStats stats) {
  constexpr auto undef = std::numeric_limits<std::uint32_t>::max();
  if (gens.empty()) throw std::invalid_argument("from_permutations: no generators");
  const std::size_t n = gens[0].degree();
  std::vector<Permutation> inv;
  for (const auto& g : gens) {
    if (g.degree() != n) throw std::invalid_argument("from_permutations: degrees differ");
    inv.push_back(g.inverse());
  }
  CosetTable t;
  t.index_ = n;
  t.ngens_ = gens.size();
  t.table_.assign(n * 2 * gens.size(), 0);
  t.parent_.assign(n, 0);
  t.parent_letter_.assign(n, 0);
  std::vector<std::uint32_t> order{0}, newidx(n, undef);
  newidx[0] = 0;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (int s = 0; s < 2; ++s) {
        const std::uint32_t d = (s == 0 ? gens[g] : inv[g])(order[k]);
        if (newidx[d] != undef) continue;
        newidx[d] = static_cast<std::uint32_t>(order.size());
        t.parent_[newidx[d]] = newidx[order[k]];
        t.parent_letter_[newidx[d]] = s == 0 ? static_cast<Letter>(g) : ~static_cast<Letter>(g);
        order.push_back(d);
      }
  if (order.size() != n) throw std::invalid_argument("from_permutations: action is not transitive");
  for (std::uint32_t c = 0; c < n; ++c)
    for (std::size_t g = 0; g < gens.size(); ++g) {
      t.table_[std::size_t{newidx[c]} * 2 * t.ngens_ + 2 * g] = newidx[gens[g](c)];
      t.table_[std::size_t{newidx[c]} * 2 * t.ngens_ + 2 * g + 1] = newidx[inv[g](c)];
    }
  stats.live = n;
  t.stats_ = stats;
  return t;
}

class CosetEnumerator {
 public:
  CosetEnumerator(const Presentation& p, const std::vector<Word>& subgroup,
                  const EnumerationLimits& limits);
  EnumerationResult run();

 private:
  static constexpr std::uint32_t kUndef = std::numeric_limits<std::uint32_t>::max();
  using ColWord = std::vector<std::uint32_t>;

  std::uint32_t& at(std::uint32_t c, std::uint32_t x) { return table_[std::size_t{c} * ncols_ + x]; }
  bool dead(std::uint32_t c) const { return fwd_[c] != c; }
  std::uint32_t rep(std::uint32_t c);

  ColWord to_columns(const Word& w) const;
  ColWord reduce(const ColWord& w, bool cyclic) const;
  void build_conjugates();

  bool ensure_space(std::size_t k);
  void compact();
  void lookahead();
  std::uint32_t define(std::uint32_t c, std::uint32_t x);
  void deduce(std::uint32_t f, std::uint32_t x, std::uint32_t b);
  void scan_and_fill(std::uint32_t c, const std::uint32_t* w, std::size_t len);
  void scan_check(std::uint32_t c, const std::uint32_t* w, std::size_t len);
  void coincidence(std::uint32_t a, std::uint32_t b);
  void merge(std::uint32_t a, std::uint32_t b);
  void process_deductions();

  bool run_felsch();
  bool run_hlt();
  CosetTable finish();

  const Presentation& p_;
  std::size_t ngens_;
  std::size_t ncols_ = 0;
  std::vector<std::uint32_t> col_pos_, col_neg_, inv_col_;
  std::vector<ColWord> rels_, subs_;
  // Felsch: relator variants written twice so that every rotation is contiguous.
  std::vector<ColWord> doubled_;
  std::vector<std::size_t> variant_len_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> conj_;

  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> fwd_;
  std::size_t rows_ = 0;
  std::size_t max_rows_;
  bool felsch_;
  std::vector<std::uint32_t> queue_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> deductions_;
  std::size_t cursor_ = 0;
  bool cursor_died_ = false;
  EnumerationStats stats_;
};

CosetEnumerator::CosetEnumerator(const Presentation& p, const std::vector<Word>& subgroup,
                                 const EnumerationLimits& limits)
    : p_(p),
      ngens_(p.num_generators()),
      max_rows_(limits.max_cosets),
      felsch_(limits.strategy == Strategy::felsch) {
  if (limits.max_cosets == 0) throw std::invalid_argument("max_cosets must be at least 1");
  if (limits.max_cosets >= kUndef) throw std::invalid_argument("max_cosets too large");
  p.validate();
  for (const auto& h : subgroup)
    for (Letter x : h)
      if (generator_of(x) >= ngens_) throw std::invalid_argument("subgroup word letter out of range");

  // A generator with a relator x^2 gets a single self-inverse column.
  std::vector<bool> involution(ngens_, false);
  for (const auto& r : p.relators) {
    const Word c = cyclic_reduce(r);
    if (c.size() == 2 && c[0] == c[1]) involution[generator_of(c[0])] = true;
  }
  col_pos_.resize(ngens_);
  col_neg_.resize(ngens_);
  for (std::size_t g = 0; g < ngens_; ++g) {
    col_pos_[g] = static_cast<std::uint32_t>(ncols_++);
    if (involution[g]) {
      col_neg_[g] = col_pos_[g];
      inv_col_.push_back(col_pos_[g]);
    } else {
      col_neg_[g] = static_cast<std::uint32_t>(ncols_++);
      inv_col_.push_back(col_neg_[g]);
      inv_col_.push_back(col_pos_[g]);
    }
  }
  for (const auto& r : p.relators) {
    ColWord c = reduce(to_columns(r), true);
    if (!c.empty() && std::find(rels_.begin(), rels_.end(), c) == rels_.end()) rels_.push_back(std::move(c));
  }
  for (const auto& h : subgroup) {
    ColWord c = reduce(to_columns(h), false);
    if (!c.empty()) subs_.push_back(std::move(c));
  }
  if (felsch_) build_conjugates();
}

CosetEnumerator::ColWord CosetEnumerator::to_columns(const Word& w) const {
  ColWord out;
  out.reserve(w.size());
  for (Letter x : w) out.push_back(x >= 0 ? col_pos_[generator_of(x)] : col_neg_[generator_of(x)]);
  return out;
}

CosetEnumerator::ColWord CosetEnumerator::reduce(const ColWord& w, bool cyclic) const {
  ColWord out;
  for (auto x : w) {
    if (!out.empty() && out.back() == inv_col_[x])
      out.pop_back();
    else
      out.push_back(x);
  }
  if (!cyclic) return out;
  std::size_t lo = 0, hi = out.size();
  while (hi - lo >= 2 && out[lo] == inv_col_[out[hi - 1]]) {
    ++lo;
    --hi;
  }
  return ColWord(out.begin() + static_cast<std::ptrdiff_t>(lo), out.begin() + static_cast<std::ptrdiff_t>(hi));
}

void CosetEnumerator::build_conjugates() {
  conj_.assign(ncols_, {});
  auto rotation_equal = [](const ColWord& a, const ColWord& b, std::size_t shift) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
      if (a[(i + shift) % n] != b[i]) return false;
    return true;
  };
  for (const auto& r : rels_) {
    const std::size_t n = r.size();
    ColWord inv(r.rbegin(), r.rend());
    for (auto& x : inv) x = inv_col_[x];
    std::size_t period = n;
    for (std::size_t d = 1; d < n; ++d)
      if (n % d == 0 && rotation_equal(r, r, d)) {
        period = d;
        break;
      }
    bool inv_is_rotation = false;
    for (std::size_t s = 0; s < n && !inv_is_rotation; ++s) inv_is_rotation = rotation_equal(r, inv, s);
    std::vector<const ColWord*> variants{&r};
    if (!inv_is_rotation) variants.push_back(&inv);
    for (const ColWord* v : variants) {
      const auto id = static_cast<std::uint32_t>(doubled_.size());
      ColWord dd(*v);
      dd.insert(dd.end(), v->begin(), v->end());
      doubled_.push_back(std::move(dd));
      variant_len_.push_back(n);
      for (std::size_t o = 0; o < period; ++o) conj_[(*v)[o]].push_back({id, static_cast<std::uint32_t>(o)});
    }
  }
}

std::uint32_t CosetEnumerator::rep(std::uint32_t c) {
  std::uint32_t r = c;
  while (fwd_[r] != r) r = fwd_[r];
  while (fwd_[c] != r) {
    const std::uint32_t next = fwd_[c];
    fwd_[c] = r;
    c = next;
  }
  return r;
}

bool CosetEnumerator::ensure_space(std::size_t k) {
  if (rows_ + k > max_rows_) {
    if (!felsch_) lookahead();
    compact();
    if (rows_ + k > max_rows_) return false;
  }
  const std::size_t cap = fwd_.size();
  if (rows_ + k > cap) {
    const std::size_t want = std::min(max_rows_, std::max({cap * 2, rows_ + k, std::size_t{1024}}));
    table_.resize(want * ncols_, kUndef);
    fwd_.resize(want);
  }
  return true;
}

void CosetEnumerator::compact() {
  ++stats_.compactions;
  std::vector<std::uint32_t> newidx(rows_, kUndef);
  std::uint32_t n = 0;
  for (std::uint32_t r = 0; r < rows_; ++r)
    if (!dead(r)) newidx[r] = n++;
  if (cursor_ < rows_) {
    cursor_died_ = dead(static_cast<std::uint32_t>(cursor_));
    std::size_t before = 0;
    for (std::size_t r = 0; r < cursor_; ++r) before += !dead(static_cast<std::uint32_t>(r));
    cursor_ = before;
  } else {
    cursor_ = n;
  }
  for (std::uint32_t r = 0; r < rows_; ++r) {
    if (dead(r)) continue;
    const std::uint32_t nr = newidx[r];
    for (std::uint32_t x = 0; x < ncols_; ++x) {
      const std::uint32_t v = at(r, x);
      at(nr, x) = v == kUndef ? kUndef : newidx[v];
    }
  }
  for (std::size_t r = n; r < rows_; ++r)
    std::fill_n(table_.begin() + static_cast<std::ptrdiff_t>(r * ncols_), ncols_, kUndef);
  for (std::uint32_t r = 0; r < n; ++r) fwd_[r] = r;
  rows_ = n;
}

void CosetEnumerator::lookahead() {
  ++stats_.lookaheads;
  for (std::uint32_t c = 0; c < rows_; ++c)
    for (const auto& r : rels_) {
      if (dead(c)) break;
      scan_check(c, r.data(), r.size());
    }
}

std::uint32_t CosetEnumerator::define(std::uint32_t c, std::uint32_t x) {
  const auto n = static_cast<std::uint32_t>(rows_++);
  fwd_[n] = n;
  std::fill_n(table_.begin() + static_cast<std::ptrdiff_t>(std::size_t{n} * ncols_), ncols_, kUndef);
  at(c, x) = n;
  at(n, inv_col_[x]) = c;
  ++stats_.defined;
  ++stats_.live;
  stats_.max_live = std::max(stats_.max_live, stats_.live);
  if (felsch_) deductions_.push_back({c, x});
  return n;
}

void CosetEnumerator::deduce(std::uint32_t f, std::uint32_t x, std::uint32_t b) {
  at(f, x) = b;
  at(b, inv_col_[x]) = f;
  if (felsch_) deductions_.push_back({f, x});
}

void CosetEnumerator::scan_and_fill(std::uint32_t c, const std::uint32_t* w, std::size_t len) {
  std::uint32_t f = c, b = c;
  std::size_t i = 0, j = len;
  for (;;) {
    while (i < j && at(f, w[i]) != kUndef) f = at(f, w[i++]);
    if (i == j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j > i && at(b, inv_col_[w[j - 1]]) != kUndef) b = at(b, inv_col_[w[--j]]);
    if (j == i) {
      coincidence(f, b);
      return;
    }
    if (j == i + 1) {
      deduce(f, w[i], b);
      return;
    }
    define(f, w[i]);
  }
}

void CosetEnumerator::scan_check(std::uint32_t c, const std::uint32_t* w, std::size_t len) {
  std::uint32_t f = c;
  std::size_t i = 0, j = len;
  while (i < j && at(f, w[i]) != kUndef) f = at(f, w[i++]);
  if (i == j) {
    if (f != c) coincidence(f, c);
    return;
  }
  std::uint32_t b = c;
  while (j > i && at(b, inv_col_[w[j - 1]]) != kUndef) b = at(b, inv_col_[w[--j]]);
  if (j == i) {
    coincidence(f, b);
  } else if (j == i + 1) {
    deduce(f, w[i], b);
  }
}

void CosetEnumerator::merge(std::uint32_t a, std::uint32_t b) {
  a = rep(a);
  b = rep(b);
  if (a == b) return;
  const std::uint32_t lo = std::min(a, b), hi = std::max(a, b);
  fwd_[hi] = lo;
  queue_.push_back(hi);
  ++stats_.merges;
  --stats_.live;
}

void CosetEnumerator::coincidence(std::uint32_t a, std::uint32_t b) {
  if (a == b) return;
  merge(a, b);
  for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
    const std::uint32_t g = queue_[qi];
    for (std::uint32_t x = 0; x < ncols_; ++x) {
      const std::uint32_t d = at(g, x);
      if (d == kUndef) continue;
      const std::uint32_t xi = inv_col_[x];
      at(d, xi) = kUndef;
      const std::uint32_t mu = rep(g), nu = rep(d);
      if (at(mu, x) != kUndef) {
        merge(nu, at(mu, x));
      } else if (at(nu, xi) != kUndef) {
        merge(mu, at(nu, xi));
      } else {
        at(mu, x) = nu;
        at(nu, xi) = mu;
        if (felsch_) deductions_.push_back({mu, x});
      }
    }
  }
  queue_.clear();
}

void CosetEnumerator::process_deductions() {
  while (!deductions_.empty()) {
    const auto [a0, x] = deductions_.back();
    deductions_.pop_back();
    std::uint32_t a = rep(a0);
    for (auto [v, o] : conj_[x]) {
      scan_check(a, doubled_[v].data() + o, variant_len_[v]);
      a = rep(a);
    }
    const std::uint32_t b0 = at(a, x);
    if (b0 == kUndef) continue;
    std::uint32_t b = b0;
    for (auto [v, o] : conj_[inv_col_[x]]) {
      scan_check(b, doubled_[v].data() + o, variant_len_[v]);
      b = rep(b);
    }
  }
}

bool CosetEnumerator::run_felsch() {
  for (const auto& h : subs_) {
    if (!ensure_space(h.size())) return false;
    scan_and_fill(0, h.data(), h.size());
    process_deductions();
  }
  cursor_ = 0;
  for (;;) {
    process_deductions();
    if (!ensure_space(1)) return false;
    std::uint32_t col = kUndef;
    while (cursor_ < rows_) {
      const auto c = static_cast<std::uint32_t>(cursor_);
      if (!dead(c))
        for (std::uint32_t x = 0; x < ncols_; ++x)
          if (at(c, x) == kUndef) {
            col = x;
            break;
          }
      if (col != kUndef) break;
      ++cursor_;
    }
    if (cursor_ == rows_) return true;
    define(static_cast<std::uint32_t>(cursor_), col);
  }
}

bool CosetEnumerator::run_hlt() {
  cursor_ = 0;
  for (const auto& h : subs_) {
    if (!ensure_space(h.size())) return false;
    scan_and_fill(0, h.data(), h.size());
  }
  cursor_ = 0;
  while (cursor_ < rows_) {
    if (dead(static_cast<std::uint32_t>(cursor_))) {
      ++cursor_;
      continue;
    }
    bool skip = false;
    for (const auto& r : rels_) {
      cursor_died_ = false;
      if (!ensure_space(r.size())) return false;
      const auto c = static_cast<std::uint32_t>(cursor_);
      if (cursor_died_ || cursor_ >= rows_ || dead(c)) {
        skip = true;
        break;
      }
      scan_and_fill(c, r.data(), r.size());
    }
    if (skip) {
      if (!cursor_died_) ++cursor_;
      cursor_died_ = false;
      continue;
    }
    for (std::uint32_t x = 0; x < ncols_; ++x) {
      cursor_died_ = false;
      if (!ensure_space(1)) return false;
      const auto c = static_cast<std::uint32_t>(cursor_);
      if (cursor_died_ || cursor_ >= rows_ || dead(c)) break;
      if (at(c, x) == kUndef) define(c, x);
    }
    if (!cursor_died_) ++cursor_;
    cursor_died_ = false;
  }
  return true;
}

CosetTable CosetEnumerator::finish() {
  compact();
  CosetTable t;
  t.index_ = rows_;
  t.ngens_ = ngens_;
  t.table_.assign(rows_ * 2 * ngens_, 0);
  t.parent_.assign(rows_, 0);
  t.parent_letter_.assign(rows_, 0);
  // Renumber in BFS order with letters g_0, g_0^-1, g_1, ...
  std::vector<std::uint32_t> order{0};
  std::vector<std::uint32_t> newidx(rows_, kUndef);
  newidx[0] = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::uint32_t c = order[k];
    for (std::size_t g = 0; g < ngens_; ++g)
      for (int s = 0; s < 2; ++s) {
        const std::uint32_t d = at(c, s == 0 ? col_pos_[g] : col_neg_[g]);
        if (newidx[d] != kUndef) continue;
        newidx[d] = static_cast<std::uint32_t>(order.size());
        t.parent_[newidx[d]] = newidx[c];
        t.parent_letter_[newidx[d]] = s == 0 ? static_cast<Letter>(g) : ~static_cast<Letter>(g);
        order.push_back(d);
      }
  }
  if (order.size() != rows_) throw std::logic_error("coset table is not connected");
  for (std::uint32_t c = 0; c < rows_; ++c)
    for (std::size_t g = 0; g < ngens_; ++g) {
      t.table_[std::size_t{newidx[c]} * 2 * ngens_ + 2 * g] = newidx[at(c, col_pos_[g])];
      t.table_[std::size_t{newidx[c]} * 2 * ngens_ + 2 * g + 1] = newidx[at(c, col_neg_[g])];
    }
  stats_.live = rows_;
  t.stats_ = stats_;
  return t;
}

EnumerationResult CosetEnumerator::run() {
  if (!ensure_space(1)) return Overflow{stats_, max_rows_};
  rows_ = 1;
  fwd_[0] = 0;
  std::fill_n(table_.begin(), ncols_, kUndef);
  stats_.defined = stats_.live = stats_.max_live = 1;
  const bool ok = felsch_ ? run_felsch() : run_hlt();
  if (!ok) return Overflow{stats_, max_rows_};
  return finish();
}

EnumerationResult todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                               const EnumerationLimits& limits) {
  CosetEnumerator e(p, subgroup, limits);
  EnumerationResult r = e.run();
  if (auto* t = std::get_if<CosetTable>(&r))
    if (!t->verify(p, subgroup)) throw std::logic_error("coset enumeration produced an inconsistent table");
  return r;
}

PermutationGroup coset_action(const CosetTable& t) {
  std::vector<Permutation> gens;
  for (std::size_t g = 0; g < t.num_generators(); ++g) gens.push_back(t.generator_permutation(g));
  return PermutationGroup(t.index(), std::move(gens));
}

}  // namespace symgen
