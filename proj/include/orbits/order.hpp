#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "orbits/clan.hpp"
#include "orbits/family.hpp"
#include "orbits/involution.hpp"
#include "orbits/param.hpp"

namespace orbits {

// Index 0 is unused in every table so that positions stay 1-based.
struct ClosureCounts {
  std::vector<int> plus;                // signs + and closed pairs among c_1..c_i
  std::vector<int> minus;               // signs - and closed pairs among c_1..c_i
  std::vector<std::vector<int>> cross;  // cross[i][j]: pairs with s <= i < j < t
  std::vector<int> mid;                 // pairs with s <= N/2 < t <= N+1-s and t <= i
};

ClosureCounts counts(const Clan& c, const Family& f);
ClosureCounts counts(const Clan& c);

// Throws SignatureMismatch when the signatures differ.
bool leq_aiii(const Clan& c, const Clan& d);
bool leq_aiii(const ClosureCounts& c, const ClosureCounts& d);

// Isotropic-position data of an even-length mirrored clan, keyed per prefix.
struct LagrangianData {
  using Key = std::tuple<int, int, int, int, int>;
  struct Entry {
    bool middle = false;  // the isotropic span is Lagrangian itself
    std::vector<std::vector<int>> dims;  // one or two dimension profiles over i = 1..N
  };
  int half = 0;
  std::map<Key, Entry> entries;
};

LagrangianData lagrangian_data(const Clan& c);
bool lagrangian_ok(const LagrangianData& c, const LagrangianData& d);

bool leq_family(const Clan& c, const Clan& d, const Family& f);
bool leq_family(const Param& c, const Param& d, const Family& f);

// Closure order on involutions is reverse Bruhat order.
bool leq_ai(const Involution& v, const Involution& w);
bool leq_aii(const Involution& v, const Involution& w);

bool bruhat_leq_A(const Permutation& v, const Permutation& w);
bool bruhat_leq_BC(const SignedPermutation& v, const SignedPermutation& w);
bool bruhat_leq_D(const SignedPermutation& v, const SignedPermutation& w);

enum class Comparison { Less, Equal, Greater, Incomparable };
Comparison compare(const Param& c, const Param& d, const Family& f);

// Precomputed comparator for a fixed list of family parameters.
class OrderOracle {
 public:
  OrderOracle(const Family& f, const std::vector<Param>& params);
  bool leq(std::size_t i, std::size_t j) const;

 private:
  Family f_;
  const std::vector<Param>* params_;
  std::vector<ClosureCounts> counts_;
  std::vector<ClosureCounts> twin_counts_;
  std::vector<LagrangianData> lag_;
  std::vector<LagrangianData> twin_lag_;
  bool even_bd_ = false;
};

}  // namespace orbits
