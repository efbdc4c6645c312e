#pragma once

#include "orbits/clan.hpp"
#include "orbits/family.hpp"
#include "orbits/involution.hpp"
#include "orbits/param.hpp"

namespace orbits {

struct RankInfo {
  int rank = 0;
  int dim = 0;
  int closed_dim = 0;  // dimension of the flag variety of K
};

// Per-parameter counts feeding the rank formulas.
struct PairStats {
  int a = 0;          // pairs with s < N/2 < t < N+1-s
  int b = 0;          // pairs with s < N/2 < t <= N+1-s
  int self_mirror = 0;  // pairs with s + t = N+1
  int mid_cross = 0;  // pairs with s <= N/2 < t <= N+1-s
  int inv = 0;
  int exc = 0;
};

PairStats pair_stats(const Clan& c);
PairStats pair_stats(const Involution& w);

int rank_aiii(const Clan& c);
int dim_aiii(const Clan& c);
int rank_ai(const Involution& w);
// floor(n^2/4) - (inv + exc)/2
int rank_ai_alt(const Involution& w);
int rank_aii(const Involution& w);
int rank_cii(const Clan& c);
int rank_ci(const Clan& c);
int rank_bdi(const Clan& c);
int rank_diii(const Clan& c);

int closed_dim(const Family& f);
// Dimension of the full flag variety G/B.
int flag_dim(const Family& f);

int rank(const Param& x, const Family& f);
RankInfo rank_info(const Param& x, const Family& f);

}  // namespace orbits
