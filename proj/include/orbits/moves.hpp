#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "orbits/clan.hpp"
#include "orbits/family.hpp"
#include "orbits/param.hpp"
#include "orbits/poset.hpp"

namespace orbits {

// Move ids: 1..10 are the ten clan rewrites, 11..14 the supplementary CI moves S1..S4,
// and kTransposition marks an AI/AII step given by a transposition (i j).
constexpr int kTransposition = 0;
constexpr int kS1 = 11;
constexpr int kS4 = 14;

std::string move_name(int id);  // "7", "S2", "t"

struct Move {
  int id = 1;
  std::vector<int> index_set;  // ascending, 1-based
  bool mirrored = false;
};

// A family move: a short word of single rewrites whose intermediate clans leave the family.
struct MoveWord {
  std::vector<Move> steps;
  // Two steps on reflected index sets.
  bool mirrored(int length) const;
  std::string text() const;  // e.g. "2@{2,3} 1@{6,7}"
};

struct Successor {
  Param target;
  MoveWord word;
  bool graph = false;  // reached by a word of graph moves only
};

// Maximum word length for the family move system.
int move_depth(const Family& f);

// Whether a move type contributes Bruhat-graph edges.
bool is_graph_move(int id, const Family& f);

// Single rewrites of c ignoring family validity (signature is always preserved).
std::vector<std::pair<Move, Clan>> wyser_moves(const Clan& c);
// Supplementary moves S1..S4 on index sets symmetric about the midpoint.
std::vector<std::pair<Move, Clan>> supplementary_moves(const Clan& c);

// Successor generator with per-instance caches; not thread-safe.
class MoveSystem {
 public:
  explicit MoveSystem(const Family& f);
  // Throws FamilyMismatch when x is not valid for the family.
  std::vector<Successor> successors(const Param& x);
  const Family& family() const { return f_; }

 private:
  const std::vector<std::pair<Move, Clan>>& single(const Clan& c);
  bool reach_within(const Clan& from, const Clan& to, int k);
  std::vector<Successor> clan_successors(const Clan& c);
  std::vector<Successor> involution_successors(const Involution& w);

  Family f_;
  int depth_;
  std::unordered_map<Clan, std::vector<std::pair<Move, Clan>>, ClanHash> cache_;
  std::unordered_map<Clan, std::unordered_set<Clan, ClanHash>, ClanHash> reach_;
};

std::vector<Successor> successors(const Param& x, const Family& f);

// Reflexive-transitive closure of the successor relation on the given vertices.
// Throws InternalInvariant if a successor falls outside the list.
Relation order_from_moves(const Family& f, const std::vector<Param>& vertices);

}  // namespace orbits
