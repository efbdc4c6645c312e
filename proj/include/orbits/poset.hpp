#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "orbits/family.hpp"
#include "orbits/param.hpp"

namespace orbits {

using Bitset = boost::dynamic_bitset<>;
// rows[i][j] is set iff vertex i <= vertex j.
using Relation = std::vector<Bitset>;

// The closure order on all orbits of a family, with covers from transitive reduction.
class OrbitPoset {
 public:
  explicit OrbitPoset(const Family& f);
  OrbitPoset(const Family& f, std::vector<Param> vertices);

  const Family& family() const { return f_; }
  const std::vector<Param>& vertices() const { return vertices_; }
  const Param& operator[](std::size_t i) const { return vertices_[i]; }
  std::size_t size() const { return vertices_.size(); }
  int rank(std::size_t i) const { return rank_[i]; }
  const std::vector<int>& ranks() const { return rank_; }
  bool leq(std::size_t i, std::size_t j) const { return up_[i][j]; }
  const Bitset& up(std::size_t i) const { return up_[i]; }
  const Bitset& down(std::size_t i) const { return down_[i]; }
  const Relation& relation() const { return up_; }
  // Pairs (i, j) with i covered by j, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
  std::optional<std::size_t> index_of(const Param& x) const;

  std::vector<std::size_t> minimal() const;
  std::vector<std::size_t> maximal() const;
  // Vertices x with i <= x <= j; empty when i is not below j.
  std::vector<std::size_t> interval(std::size_t i, std::size_t j) const;
  // Longest cover chain from a minimal vertex.
  std::vector<int> heights() const;

 private:
  void build();

  Family f_;
  std::vector<Param> vertices_;
  std::vector<int> rank_;
  Relation up_;
  Relation down_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
  std::map<Param, std::size_t> index_;
};

// Transitive reduction of a relation given as up-sets (reflexive, antisymmetric).
std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const Relation& up);

}  // namespace orbits
