#include "symgen/golay.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace symgen {

namespace {

// Generators of M24 as image lists on the lexicode point labeling.
constexpr std::array<std::array<Point, 24>, 4> kM24Generators{{
    {1, 2, 3, 4, 8, 23, 12, 19, 14, 17, 10, 21, 5, 0, 7, 6, 11, 16, 20, 15, 22, 18, 13, 9},
    {0, 2, 4, 14, 19, 1, 20, 9, 6, 8, 10, 12, 13, 22, 5, 21, 15, 7, 17, 16, 11, 23, 18, 3},
    {10, 13, 12, 17, 11, 22, 16, 23, 15, 21, 0, 4, 2, 1, 18, 8, 6, 3, 14, 20, 19, 9, 5, 7},
    {0, 21, 14, 3, 2, 19, 7, 8, 22, 11, 10, 12, 18, 9, 1, 5, 23, 17, 13, 16, 6, 4, 20, 15},
}};

// Rank of a 5-subset of {0..23} in the combinatorial number system.
std::size_t rank5(const std::array<int, 5>& c) {
  static const auto binom = [] {
    std::array<std::array<std::size_t, 6>, 25> b{};
    for (std::size_t n = 0; n < 25; ++n) {
      b[n][0] = 1;
      for (std::size_t k = 1; k < 6 && k <= n; ++k) b[n][k] = b[n - 1][k - 1] + (k < n ? b[n - 1][k] : 0);
    }
    return b;
  }();
  std::size_t r = 0;
  for (std::size_t i = 0; i < 5; ++i) r += binom[static_cast<std::size_t>(c[i])][i + 1];
  return r;
}

}  // namespace

GolayCode::GolayCode() {
  // Lexicode: the next codeword is the least word at distance >= 8 from all
  // codewords so far.  `covered` marks the union of radius-7 balls.
  std::vector<std::uint8_t> covered(std::size_t{1} << 24, 0);
  for (std::uint32_t v = 0; v < (1u << 24); ++v)
    if (std::popcount(v) <= 7) covered[v] = 1;
  std::uint32_t next = 0;
  std::size_t k = 0;
  for (;;) {
    while (next < (1u << 24) && covered[next]) ++next;
    if (next == (1u << 24)) break;
    if (k == 12) throw std::logic_error("golay: lexicode has more than 12 basis words");
    basis_[k++] = next;
    for (std::uint32_t v = 0; v < (1u << 24); ++v) covered[v] |= covered[v ^ next];
  }
  if (k != 12) throw std::logic_error("golay: lexicode dimension is not 12");

  words_.push_back(0);
  for (auto b : basis_) {
    const std::size_t n = words_.size();
    for (std::size_t i = 0; i < n; ++i) words_.push_back(words_[i] ^ b);
  }
  std::sort(words_.begin(), words_.end());
  for (auto w : words_) {
    if (std::popcount(w) == 8) octads_.push_back(w);
    if (std::popcount(w) == 12) dodecads_.push_back(w);
  }
  // Linearity is by construction; distance 8 follows from the weights.
  const auto wd = weight_distribution();
  std::array<std::size_t, 25> expected{};
  expected[0] = 1;
  expected[8] = 759;
  expected[12] = 2576;
  expected[16] = 759;
  expected[24] = 1;
  if (wd != expected) throw std::logic_error("golay: wrong weight distribution");
}

const GolayCode& GolayCode::instance() {
  static const GolayCode code;
  return code;
}

bool GolayCode::contains(Block24 w) const { return std::binary_search(words_.begin(), words_.end(), w); }

std::array<std::size_t, 25> GolayCode::weight_distribution() const {
  std::array<std::size_t, 25> wd{};
  for (auto w : words_) ++wd[static_cast<std::size_t>(std::popcount(w))];
  return wd;
}

bool steiner_check(const std::vector<Block24>& octads) {
  std::vector<std::uint8_t> hits(42504, 0);
  for (auto o : octads) {
    if (std::popcount(o) != 8 || (o & ~kAll24)) return false;
    std::array<int, 8> pts{};
    int n = 0;
    for (Block24 m = o; m; m &= m - 1) pts[static_cast<std::size_t>(n++)] = std::countr_zero(m);
    for (int sub = 0; sub < 256; ++sub) {
      if (std::popcount(static_cast<unsigned>(sub)) != 5) continue;
      std::array<int, 5> c{};
      int j = 0;
      for (int i = 0; i < 8; ++i)
        if (sub >> i & 1) c[static_cast<std::size_t>(j++)] = pts[static_cast<std::size_t>(i)];
      auto& h = hits[rank5(c)];
      if (h) return false;
      h = 1;
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](auto h) { return h == 1; });
}

bool steiner_check(const GolayCode& code) { return steiner_check(code.octads()); }

std::vector<Trio> trios(const GolayCode& code) {
  const auto& oct = code.octads();
  std::vector<Trio> out;
  for (std::size_t i = 0; i < oct.size(); ++i)
    for (std::size_t j = i + 1; j < oct.size(); ++j) {
      if (oct[i] & oct[j]) continue;
      const Block24 third = kAll24 ^ oct[i] ^ oct[j];
      if (third > oct[j] && std::binary_search(oct.begin(), oct.end(), third))
        out.push_back({oct[i], oct[j], third});
    }
  return out;
}

const PermutationGroup& m24() {
  static const PermutationGroup group = [] {
    const auto& code = GolayCode::instance();
    std::vector<Permutation> gens;
    for (const auto& g : kM24Generators) {
      Permutation p(std::vector<Point>(g.begin(), g.end()));
      for (auto o : code.octads())
        if (!std::binary_search(code.octads().begin(), code.octads().end(), image_mask(p, o)))
          throw std::logic_error("m24: embedded generator does not preserve the octads");
      gens.push_back(std::move(p));
    }
    PermutationGroup g(24, std::move(gens));
    if (g.order() != kM24Order) throw std::logic_error("m24: embedded generators have the wrong order");
    return g;
  }();
  return group;
}

PermutationGroup m22(Point a, Point b) {
  if (a == b || a >= 24 || b >= 24) throw std::invalid_argument("m22: need two distinct points below 24");
  const std::array<Point, 2> pts{a, b};
  return m24().point_stabilizer(pts);
}

namespace {

Action block_action(std::string kind, const std::vector<Block24>& blocks) {
  std::vector<SetTuple> objs;
  objs.reserve(blocks.size());
  for (auto b : blocks) objs.push_back({b});
  return family_action(std::move(kind), 24, std::move(objs), false);
}

}  // namespace

Action octad_action(const GolayCode& code) { return block_action("octads", code.octads()); }
Action dodecad_action(const GolayCode& code) { return block_action("dodecads", code.dodecads()); }

Action trio_action(const GolayCode& code) {
  std::vector<SetTuple> objs;
  for (const auto& t : trios(code)) objs.push_back({t[0], t[1], t[2]});
  return family_action("trios", 24, std::move(objs), true);
}

PermutationGroup DodecadFamily::induced() const {
  return PermutationGroup(action.degree(), action.induce(m22.generators()));
}

DodecadFamily dodecads_672(const GolayCode& code, Point a, Point b) {
  std::vector<Block24> ds;
  for (auto d : code.dodecads())
    if ((d >> a & 1u) && !(d >> b & 1u)) ds.push_back(d);
  auto action = block_action("dodecads " + std::to_string(a + 1) + " not " + std::to_string(b + 1), ds);
  return DodecadFamily{a, b, std::move(ds), m22(a, b), std::move(action)};
}

DodecadPairs dodecad_pairs_meeting_in_8(const DodecadFamily& family, Point rep) {
  DodecadPairs out;
  out.rep = rep;
  const Block24 a = family.dodecads.at(rep);
  for (Point i = 0; i < family.dodecads.size(); ++i) {
    const int k = std::popcount(a & family.dodecads[i]);
    ++out.intersection_sizes[k];
    if (k == 8) out.meeting_in_8.push_back(i);
  }
  const std::array<Point, 1> fix{rep};
  const auto stab = family.induced().point_stabilizer(fix);
  std::vector<char> seen(family.dodecads.size(), 0);
  for (Point b : out.meeting_in_8) {
    if (seen[b]) continue;
    auto orb = stab.orbit(b);
    for (Point x : orb) seen[x] = 1;
    std::sort(orb.begin(), orb.end());
    out.orbits.push_back(std::move(orb));
  }
  return out;
}

std::string bitstring(Block24 w) {
  std::string s(24, '0');
  for (std::size_t i = 0; i < 24; ++i)
    if (w >> i & 1u) s[i] = '1';
  return s;
}

std::string golay_dump(const GolayCode& code) {
  std::string out;
  for (auto o : code.octads()) out += bitstring(o) + '\n';
  for (auto w : code.codewords())
    if (std::popcount(w) != 8) out += bitstring(w) + '\n';
  return out;
}

}  // namespace symgen
