#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orbits/clan.hpp"
#include "orbits/family.hpp"
#include "orbits/involution.hpp"
#include "orbits/param.hpp"

namespace orbits {

using Positions = std::vector<int>;  // ascending, 1-based

// Subsequence occurrence whose selected pairs are complete and which canonicalizes to pattern.
std::optional<Positions> clan_includes(const Clan& c, const Clan& pattern);
// Occurrence on an index set stable under w; throws PatternNotInvolution.
std::optional<Positions> involution_includes(const Involution& w, const Involution& pattern);
// Calls visit on every involution-sense occurrence until it returns false.
void for_each_involution_occurrence(const Involution& w, const Involution& pattern,
                                    const std::function<bool(const Positions&)>& visit);
// Classical permutation pattern containment.
std::optional<Positions> schubert_includes(const Permutation& w, const Permutation& pattern);
void for_each_schubert_occurrence(const Permutation& w, const Permutation& pattern,
                                  const std::function<bool(const Positions&)>& visit);

struct Witness {
  std::string description;
  std::string pattern;  // empty when the failure is structural
  Positions positions;
};

struct Verdict {
  bool rationally_smooth = true;
  bool smooth = true;
  std::optional<bool> lci;         // AIII clans avoiding 1212 only
  std::optional<Witness> witness;  // present iff a flag is false
  std::string decomposition;       // the admissible shape found, if any
};

// Pattern lists, as printed.
const std::vector<std::string>& aiii_bad_patterns();
const std::vector<std::string>& ai_bad_patterns();  // without the conditional 2143
const std::vector<std::string>& aii_bad_patterns(bool theorem_only);
const std::vector<std::string>& lci_bad_patterns();  // duplicates removed, negatives not included

enum class AiiPatternList { Extended, TheoremOnly };

Verdict classify_aiii(const Clan& c);
Verdict classify_ai(const Involution& w);
Verdict classify_aii(const Involution& w, AiiPatternList list = AiiPatternList::Extended);
Verdict classify_cii(const Clan& c, const Family& f);
Verdict classify_ci(const Clan& c, const Family& f);
Verdict classify_bdi(const Clan& c, const Family& f);
Verdict classify_diii(const Clan& c, const Family& f);
// Absent when c includes 1212.
std::optional<bool> classify_lci_aiii(const Clan& c);
// Dispatch by family; throws FamilyMismatch for an invalid parameter.
Verdict classify(const Param& x, const Family& f);

struct PatternDiscrepancy {
  Involution w;
  std::string pattern;
  bool involution_sense = false;
  bool schubert_sense = false;
};

// Involutions where the two inclusion notions disagree on some bad pattern of the family
// list (AI includes 2143 with its fixed-point parity exception in both senses).
std::vector<PatternDiscrepancy> conjecture41_report(const Family& f);

}  // namespace orbits
