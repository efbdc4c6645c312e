#include "orbits/poset.hpp"

#include <algorithm>
#include <numeric>

#include "orbits/order.hpp"
#include "orbits/rank.hpp"

namespace orbits {

OrbitPoset::OrbitPoset(const Family& f) : f_(f), vertices_(enumerate(f)) { build(); }

OrbitPoset::OrbitPoset(const Family& f, std::vector<Param> vertices) : f_(f), vertices_(std::move(vertices)) {
  build();
}

void OrbitPoset::build() {
  const std::size_t n = vertices_.size();
  rank_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    rank_[i] = orbits::rank(vertices_[i], f_);
    index_.emplace(vertices_[i], i);
  }
  OrderOracle oracle(f_, vertices_);
  up_.assign(n, Bitset(n));
  down_.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (oracle.leq(i, j)) {
        up_[i].set(j);
        down_[j].set(i);
      }
    }
  }
  covers_ = transitive_reduction(up_);
}

std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const Relation& up) {
  const std::size_t n = up.size();
  Relation down(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = up[i].find_first(); j != Bitset::npos; j = up[i].find_next(j)) down[j].set(i);
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    Bitset strict = up[i];
    strict.reset(i);
    for (std::size_t j = strict.find_first(); j != Bitset::npos; j = strict.find_next(j)) {
      // j covers i iff nothing strictly above i lies strictly below j
      Bitset mid = strict & down[j];
      mid.reset(j);
      if (mid.none()) out.emplace_back(i, j);
    }
  }
  return out;
}

std::optional<std::size_t> OrbitPoset::index_of(const Param& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> OrbitPoset::minimal() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (down_[i].count() == 1) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> OrbitPoset::maximal() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (up_[i].count() == 1) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> OrbitPoset::interval(std::size_t i, std::size_t j) const {
  std::vector<std::size_t> out;
  Bitset b = up_[i] & down_[j];
  for (std::size_t k = b.find_first(); k != Bitset::npos; k = b.find_next(k)) out.push_back(k);
  return out;
}

std::vector<int> OrbitPoset::heights() const {
  const std::size_t n = size();
  // a linear extension: fewer elements below comes first
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> below(n);
  for (std::size_t i = 0; i < n; ++i) below[i] = down_[i].count();
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  std::vector<std::vector<std::size_t>> lower(n);
  for (auto [a, b] : covers_) lower[b].push_back(a);
  std::vector<int> h(n, 0);
  for (std::size_t v : order) {
    for (std::size_t a : lower[v]) h[v] = std::max(h[v], h[a] + 1);
  }
  return h;
}

}  // namespace orbits
