#include "symgen/geometry.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace symgen {

namespace {

// Multiplication in GF(2^n) modulo the given polynomial (with its top bit).
std::uint32_t gf_mul(std::uint32_t a, std::uint32_t b, std::uint32_t poly, int n) {
  std::uint32_t r = 0;
  while (b) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> n & 1u) a ^= poly;
  }
  return r;
}

// Permutation of the nonzero vectors of GF(2)^n (vector v is point v-1).
template <class F>
Permutation on_nonzero_vectors(int n, F f) {
  const std::uint32_t q = 1u << n;
  std::vector<Point> img(q - 1);
  for (std::uint32_t v = 1; v < q; ++v) img[v - 1] = f(v) - 1;
  return Permutation(std::move(img));
}

PermutationGroup projective_linear(int n, std::uint32_t poly) {
  // A Singer cycle, a transvection and a coordinate shift generate GL_n(2).
  auto singer = on_nonzero_vectors(n, [&](std::uint32_t v) { return gf_mul(v, 2, poly, n); });
  auto transvection = on_nonzero_vectors(n, [](std::uint32_t v) { return v ^ ((v & 1u) << 1); });
  const std::uint32_t mask = (1u << n) - 1;
  auto shift = on_nonzero_vectors(n, [&](std::uint32_t v) { return ((v << 1) | (v >> (n - 1))) & mask; });
  return PermutationGroup(static_cast<std::size_t>((1u << n) - 1), {singer, transvection, shift});
}

constexpr std::uint32_t kGF16Poly = 0b10011;  // x^4 + x + 1
constexpr Point kInfinity = 16;

std::uint32_t gf16_inv(std::uint32_t a) {
  for (std::uint32_t b = 1; b < 16; ++b)
    if (gf_mul(a, b, kGF16Poly, 4) == 1) return b;
  throw std::logic_error("gf16: zero has no inverse");
}

}  // namespace

PermutationGroup gl4_2() { return projective_linear(4, kGF16Poly); }

PermutationGroup l3_2() { return projective_linear(3, 0b1011); }

MatchstickGeometry matchsticks() {
  auto g = gl4_2();
  std::vector<std::uint32_t> planes;
  for (std::uint32_t u = 1; u < 16; ++u)
    for (std::uint32_t v = u + 1; v < 16; ++v) {
      const std::uint32_t w = u ^ v;
      if (w < v) continue;
      planes.push_back((1u << (u - 1)) | (1u << (v - 1)) | (1u << (w - 1)));
    }
  std::sort(planes.begin(), planes.end());
  std::vector<SetTuple> plane_objs, sticks;
  for (auto p : planes) {
    plane_objs.push_back({p});
    for (std::uint32_t m = p; m; m &= m - 1) sticks.push_back({p, m & (~m + 1)});
  }
  auto pa = family_action("planes", 15, std::move(plane_objs), false);
  auto ma = family_action("matchsticks", 15, std::move(sticks), false);
  return MatchstickGeometry{std::move(g), std::move(planes), std::move(pa), std::move(ma)};
}

PermutationGroup l2_16_4() {
  auto make = [](auto f) {
    std::vector<Point> img(17);
    for (Point z = 0; z < 17; ++z) img[z] = f(z);
    return Permutation(std::move(img));
  };
  auto shift = make([](Point z) { return z == kInfinity ? z : z ^ 1u; });
  auto scale = make([](Point z) { return z == kInfinity ? z : gf_mul(z, 2, kGF16Poly, 4); });
  auto invert = make([](Point z) -> Point {
    if (z == 0) return kInfinity;
    if (z == kInfinity) return 0;
    return gf16_inv(z);
  });
  auto frobenius = make([](Point z) { return z == kInfinity ? z : gf_mul(z, z, kGF16Poly, 4); });
  return PermutationGroup(17, {shift, scale, invert, frobenius});
}

PermutationGroup l2_16_4_normalizer_17() {
  const auto g = l2_16_4();
  const auto elems = g.elements();
  const auto x = std::find_if(elems.begin(), elems.end(), [](const auto& e) { return e.order() == 17; });
  if (x == elems.end()) throw std::logic_error("l2_16_4: no element of order 17");
  std::vector<Permutation> cyc;
  for (int k = 0; k < 17; ++k) cyc.push_back(x->power(k));
  std::sort(cyc.begin(), cyc.end());
  std::vector<Permutation> gens;
  for (const auto& e : elems)
    if (std::binary_search(cyc.begin(), cyc.end(), conjugate(*x, e))) gens.push_back(e);
  PermutationGroup n(17, std::move(gens));
  if (n.order() != 136) throw std::logic_error("l2_16_4: normalizer of a 17-cycle is not 17:8");
  return n;
}

Action l2_16_4_on_120() { return coset_space_action(l2_16_4(), l2_16_4_normalizer_17()); }

}  // namespace symgen
