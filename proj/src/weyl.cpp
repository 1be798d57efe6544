#include "symgen/weyl.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace symgen {

namespace {

struct VectorLess {
  bool operator()(const Eigen::VectorXi& a, const Eigen::VectorXi& b) const {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
  }
};

}  // namespace

WeylGroup weyl_oracle(char type, std::size_t rank) {
  std::size_t branch = 0;
  switch (type) {
    case 'A':
      if (rank < 1) throw std::invalid_argument("weyl_oracle: A needs rank >= 1");
      branch = 0;
      break;
    case 'D':
      if (rank < 4) throw std::invalid_argument("weyl_oracle: D needs rank >= 4");
      branch = 1;
      break;
    case 'E':
      if (rank < 6 || rank > 8) throw std::invalid_argument("weyl_oracle: E needs rank 6, 7 or 8");
      branch = 2;
      break;
    default:
      throw std::invalid_argument(std::string("weyl_oracle: unknown type ") + type);
  }
  WeylGroup w{type, rank, Eigen::MatrixXi::Zero(rank, rank), {}, {}};
  for (std::size_t i = 0; i < rank; ++i) w.cartan(i, i) = 2;
  for (std::size_t i = 0; i + 2 < rank; ++i) w.cartan(i, i + 1) = w.cartan(i + 1, i) = -1;
  if (rank > 1) w.cartan(rank - 1, branch) = w.cartan(branch, rank - 1) = -1;

  // Close the simple roots under the simple reflections s_i(v) = v - <v, a_i> a_i.
  auto reflect = [&](const Eigen::VectorXi& v, std::size_t i) {
    Eigen::VectorXi r = v;
    r(i) -= w.cartan.row(i).dot(v);
    return r;
  };
  std::map<Eigen::VectorXi, std::size_t, VectorLess> index;
  for (std::size_t i = 0; i < rank; ++i) {
    Eigen::VectorXi e = Eigen::VectorXi::Zero(rank);
    e(i) = 1;
    index.emplace(e, w.roots.size());
    w.roots.push_back(e);
  }
  for (std::size_t k = 0; k < w.roots.size(); ++k)
    for (std::size_t i = 0; i < rank; ++i) {
      auto r = reflect(w.roots[k], i);
      if (index.emplace(r, w.roots.size()).second) w.roots.push_back(std::move(r));
    }
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<Point> img(w.roots.size());
    for (std::size_t k = 0; k < w.roots.size(); ++k) img[k] = static_cast<Point>(index.at(reflect(w.roots[k], i)));
    w.reflections.emplace_back(std::move(img));
  }
  return w;
}

std::vector<std::vector<int>> coxeter_matrix(const WeylGroup& w) {
  std::vector<std::vector<int>> m(w.rank, std::vector<int>(w.rank, 2));
  for (std::size_t i = 0; i < w.rank; ++i)
    for (std::size_t j = 0; j < w.rank; ++j) m[i][j] = i == j ? 1 : (w.cartan(i, j) == -1 ? 3 : 2);
  return m;
}

bool satisfies_coxeter_relations(const std::vector<Permutation>& images, const std::vector<std::vector<int>>& m) {
  if (images.size() != m.size()) return false;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i; j < images.size(); ++j)
      if (!(images[i] * images[j]).power(m[i][j]).is_identity()) return false;
  return true;
}

}  // namespace symgen
