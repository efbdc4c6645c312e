#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "orbits/family.hpp"
#include "orbits/graph.hpp"
#include "orbits/poset.hpp"

namespace orbits {

struct SuiteResult {
  std::string suite;
  std::string family;
  bool passed = true;
  bool informational = false;  // never fails verification
  std::string detail;
  std::string counterexample;  // first failure in enumeration order
};

// All families of the tag whose parameter length is between 1 and max_size.
std::vector<Family> families_up_to(Tag t, int max_size);

SuiteResult check_rank_height(const OrbitPoset& poset);
SuiteResult check_moves_counting(const OrbitPoset& poset);
SuiteResult check_edges_comparable(const BruhatGraph& graph);
SuiteResult check_brion_lower_bound(const BruhatGraph& graph);
// Hard for AIII, AI and AII; informational for the mirrored clan families.
SuiteResult check_classifier_oracle(const BruhatGraph& graph);
SuiteResult check_conjecture41(const Family& f);
SuiteResult check_richardson(const Family& f);

std::vector<SuiteResult> verify_family(const Family& f);
// Suites for every family up to max_size, smallest first.
std::vector<SuiteResult> verify(Tag t, int max_size);

nlohmann::json suite_json(const SuiteResult& r);
// True when no hard suite failed.
bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace orbits
