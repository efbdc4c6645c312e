#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "orbits/family.hpp"

namespace orbits {

// Entry encoding: labels are positive integers, signs are negative sentinels.
constexpr int kPlus = -1;
constexpr int kMinus = -2;

inline bool is_sign(int x) { return x < 0; }
inline int flip_sign(int x) { return x == kPlus ? kMinus : x == kMinus ? kPlus : x; }

// A clan in canonical form: pair labels are 1, 2, ... in order of first occurrence.
class Clan {
 public:
  Clan() = default;
  // Canonicalizes; throws LabelCountError if a label does not occur exactly twice.
  explicit Clan(std::vector<int> entries);

  const std::vector<int>& entries() const { return e_; }
  int size() const { return static_cast<int>(e_.size()); }
  int operator[](int pos) const { return e_[pos - 1]; }  // 1-based

  int num_pairs() const { return npairs_; }
  int p() const;
  int q() const;
  // Pairs (s, t) with s < t, 1-based, sorted by s.
  std::vector<std::pair<int, int>> pairs() const;
  // Position of the other endpoint of the pair at pos, or 0 for a sign.
  int partner(int pos) const;

  friend auto operator<=>(const Clan& a, const Clan& b) { return a.e_ <=> b.e_; }
  friend bool operator==(const Clan& a, const Clan& b) { return a.e_ == b.e_; }

 private:
  std::vector<int> e_;
  int npairs_ = 0;
};

struct ClanHash {
  std::size_t operator()(const Clan& c) const;
};

Clan parse_clan(const std::string& text);
std::string print_clan(const Clan& c);

// All signs exchanged.
Clan negate(const Clan& c);
// Entries N/2 and N/2+1 exchanged (N even).
Clan twin(const Clan& c);

// Throws LengthMismatch when the clan length does not fit the family.
bool validate_family(const Clan& c, const Family& f);
// Same test without the length exception.
bool fits_family(const Clan& c, const Family& f);

// All valid canonical clans, in lexicographic order with + < - < labels.
std::vector<Clan> enumerate_clans(const Family& f);
Clan open_orbit_clan(const Family& f);
bool is_closed_clan(const Clan& c, const Family& f);

}  // namespace orbits
