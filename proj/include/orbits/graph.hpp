#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "orbits/family.hpp"
#include "orbits/moves.hpp"
#include "orbits/param.hpp"
#include "orbits/poset.hpp"

namespace orbits {

// Simple reflections acting on parameters: Swap i exchanges coordinates i and i+1
// (left-half coordinates with their mirrors for the mirrored clan families);
// SignChange i flips coordinate i in types B, C and D.
struct Generator {
  enum class Kind { Swap, SignChange };
  Kind kind = Kind::Swap;
  int i = 1;
};

std::vector<Generator> generators(const Family& f);

// Image of v, or nothing when the image is not a parameter of the family.
// Throws InvalidGenerator when g does not belong to the Weyl group of f.
std::optional<Param> w_action(const Generator& g, const Param& v, const Family& f);

// AI/AII graph neighbours: t w t when it differs from w; for AI also t w when t commutes
// with w and no fixed point of w lies strictly between the two letters of t.
// Some of these pairs are incomparable; BruhatGraph keeps only comparable ones.
std::vector<std::pair<Move, Involution>> involution_neighbors(const Involution& w, const Family& f);

class BruhatGraph {
 public:
  explicit BruhatGraph(const OrbitPoset& poset);

  const OrbitPoset& poset() const { return *poset_; }
  // Unordered edges stored as (lower rank, higher rank), sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  const std::vector<std::vector<std::size_t>>& adjacency() const { return adj_; }
  bool has_edge(std::size_t a, std::size_t b) const;

  // Closure of the minimal vertices under the W-action.
  const std::vector<std::size_t>& conjugates_of_minimal() const { return conj_; }
  std::vector<std::size_t> minimal_conjugates(std::size_t d) const;
  // Degree of c in the graph induced on [c, d]; throws NotComparable unless c <= d.
  int brion_degree(std::size_t c, std::size_t d) const;
  bool brion_check(std::size_t d) const;
  // Coefficient k counts x <= d of rank k.
  std::vector<int> poincare(std::size_t d) const;

 private:
  const OrbitPoset* poset_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::set<std::pair<std::size_t, std::size_t>> edge_set_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> conj_;
};

bool is_palindromic(const std::vector<int>& coefficients);

}  // namespace orbits
