#include "orbits/verify.hpp"

#include <map>
#include <set>
#include <sstream>

#include "orbits/error.hpp"
#include "orbits/moves.hpp"
#include "orbits/rank.hpp"
#include "orbits/richardson.hpp"
#include "orbits/singularity.hpp"

namespace orbits {

namespace {

SuiteResult start(const std::string& suite, const Family& f) {
  SuiteResult r;
  r.suite = suite;
  r.family = f.name();
  return r;
}

void fail(SuiteResult& r, const std::string& what) {
  if (r.passed) r.counterexample = what;
  r.passed = false;
}

}  // namespace

std::vector<Family> families_up_to(Tag t, int max_size) {
  std::vector<Family> out;
  switch (t) {
    case Tag::AI:
      for (int n = 1; n <= max_size; ++n) out.push_back(Family::ai(n));
      break;
    case Tag::AII:
      for (int n = 2; n <= max_size; n += 2) out.push_back(Family::aii(n));
      break;
    case Tag::AIII:
    case Tag::BDI:
      for (int s = 1; s <= max_size; ++s) {
        for (int p = s; p >= 0; --p) out.push_back(t == Tag::AIII ? Family::aiii(p, s - p) : Family::bdi(p, s - p));
      }
      break;
    case Tag::CII:
      for (int s = 1; 2 * s <= max_size; ++s) {
        for (int p = s; p >= 0; --p) out.push_back(Family::cii(p, s - p));
      }
      break;
    case Tag::CI:
      for (int m = 1; 2 * m <= max_size; ++m) out.push_back(Family::ci(m));
      break;
    case Tag::DIII:
      for (int n = 1; 2 * n <= max_size; ++n) out.push_back(Family::diii(n));
      break;
  }
  return out;
}

SuiteResult check_rank_height(const OrbitPoset& P) {
  SuiteResult r = start("rank-height", P.family());
  const auto h = P.heights();
  for (auto [a, b] : P.covers()) {
    if (P.rank(b) != P.rank(a) + 1) {
      fail(r, "cover " + param_text(P[a]) + " < " + param_text(P[b]) + " changes rank by " +
                  std::to_string(P.rank(b) - P.rank(a)));
    }
  }
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (h[i] != P.rank(i)) {
      fail(r, param_text(P[i]) + ": rank " + std::to_string(P.rank(i)) + " height " + std::to_string(h[i]));
    }
  }
  for (std::size_t m : P.minimal()) {
    if (P.rank(m) != 0) fail(r, "minimal " + param_text(P[m]) + " has rank " + std::to_string(P.rank(m)));
  }
  const auto top = P.maximal();
  const auto open = P.index_of(open_orbit(P.family()));
  if (top.size() != 1 || !open || top[0] != *open) fail(r, "open orbit is not the unique maximum");
  r.detail = std::to_string(P.size()) + " vertices, " + std::to_string(P.covers().size()) + " covers";
  return r;
}

SuiteResult check_moves_counting(const OrbitPoset& P) {
  SuiteResult r = start("moves-counting", P.family());
  if (!P.family().uses_clans()) {
    r.informational = true;
    r.detail = "no move list for involution families";
    return r;
  }
  const Relation R = order_from_moves(P.family(), P.vertices());
  std::size_t diff = 0;
  for (std::size_t i = 0; i < P.size(); ++i) {
    for (std::size_t j = 0; j < P.size(); ++j) {
      if (R[i][j] == P.leq(i, j)) continue;
      ++diff;
      fail(r, param_text(P[i]) + (R[i][j] ? " reaches " : " does not reach ") + param_text(P[j]) +
                  (P.leq(i, j) ? " but is below it" : " but is not below it"));
    }
  }
  r.detail = std::to_string(diff) + " disagreeing pairs of " + std::to_string(P.size() * P.size());
  return r;
}

SuiteResult check_edges_comparable(const BruhatGraph& G) {
  const OrbitPoset& P = G.poset();
  SuiteResult r = start("edges-comparable", P.family());
  for (auto [a, b] : G.edges()) {
    if (!P.leq(a, b)) fail(r, param_text(P[a]) + " -- " + param_text(P[b]));
  }
  r.detail = std::to_string(G.edges().size()) + " edges";
  return r;
}

SuiteResult check_brion_lower_bound(const BruhatGraph& G) {
  const OrbitPoset& P = G.poset();
  SuiteResult r = start("brion-lower-bound", P.family());
  std::size_t checked = 0;
  for (std::size_t d = 0; d < P.size(); ++d) {
    for (std::size_t c : G.minimal_conjugates(d)) {
      ++checked;
      const int deg = G.brion_degree(c, d);
      if (deg < P.rank(d) - P.rank(c)) {
        fail(r, "deg(" + param_text(P[c]) + ") in [" + param_text(P[c]) + "," + param_text(P[d]) +
                    "] = " + std::to_string(deg));
      }
    }
  }
  r.detail = std::to_string(checked) + " (c, d) pairs";
  return r;
}

SuiteResult check_classifier_oracle(const BruhatGraph& G) {
  const OrbitPoset& P = G.poset();
  const Family& f = P.family();
  SuiteResult r = start("classifier-oracle", f);
  r.informational = !(f.tag == Tag::AIII || f.tag == Tag::AI || f.tag == Tag::AII);
  std::size_t diff = 0;
  const auto bottom = P.index_of(Param(longest_involution(f.length())));
  for (std::size_t d = 0; d < P.size(); ++d) {
    const Verdict v = classify(P[d], f);
    if (v.smooth && !v.rationally_smooth) fail(r, param_text(P[d]) + ": smooth but not rationally smooth");
    const bool brion = G.brion_check(d);
    bool agree = v.rationally_smooth == brion;
    std::string extra;
    if (f.tag == Tag::AII) {
      const bool bottom_ok = G.brion_degree(*bottom, d) == P.rank(d) - P.rank(*bottom);
      const bool pal = is_palindromic(G.poincare(d));
      agree = v.rationally_smooth == bottom_ok && bottom_ok == pal;
      extra = " bottom-degree=" + std::to_string(bottom_ok) + " palindromic=" + std::to_string(pal);
    }
    if (agree) continue;
    ++diff;
    fail(r, param_text(P[d]) + ": classifier=" + std::to_string(v.rationally_smooth) +
                " brion=" + std::to_string(brion) + extra);
  }
  r.detail = std::to_string(diff) + " discrepancies over " + std::to_string(P.size()) + " parameters";
  if (r.informational) r.passed = true;
  return r;
}

SuiteResult check_conjecture41(const Family& f) {
  SuiteResult r = start("conjecture41-report", f);
  r.informational = true;
  const auto rep = conjecture41_report(f);
  std::ostringstream out;
  out << rep.size() << " discrepancies";
  for (const auto& d : rep) {
    out << "; " << print_permutation(d.w) << " " << d.pattern << " involution=" << d.involution_sense
        << " schubert=" << d.schubert_sense;
  }
  r.detail = out.str();
  return r;
}

SuiteResult check_richardson(const Family& f) {
  SuiteResult r = start("richardson-grassmannian", f);
  std::size_t checked = 0, violations = 0;
  std::set<std::pair<Permutation, Permutation>> images;
  const Clan c1212 = parse_clan("1212");
  for (const auto& x : enumerate(f)) {
    const Clan& c = as_clan(x);
    if (clan_includes(c, c1212)) continue;
    ++checked;
    const auto rp = richardson_pair_unchecked(c);
    images.insert({rp.u, rp.v});
    if (!rp.grassmannian) {
      ++violations;
      fail(r, print_clan(c) + ": u=" + print_permutation(rp.u) + " v=" + print_permutation(rp.v) +
                  " p=" + std::to_string(rp.p));
    }
  }
  r.detail = std::to_string(violations) + " of " + std::to_string(checked) + " clans avoiding 1212 fail, " +
             std::to_string(images.size()) + " distinct (u,v)";
  return r;
}

std::vector<SuiteResult> verify_family(const Family& f) {
  std::vector<SuiteResult> out;
  OrbitPoset P(f);
  BruhatGraph G(P);
  out.push_back(check_rank_height(P));
  out.push_back(check_moves_counting(P));
  out.push_back(check_edges_comparable(G));
  out.push_back(check_brion_lower_bound(G));
  out.push_back(check_classifier_oracle(G));
  if (!f.uses_clans()) out.push_back(check_conjecture41(f));
  if (f.tag == Tag::AIII) out.push_back(check_richardson(f));
  return out;
}

std::vector<SuiteResult> verify(Tag t, int max_size) {
  std::vector<SuiteResult> out;
  for (const auto& f : families_up_to(t, max_size)) {
    auto part = verify_family(f);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

nlohmann::json suite_json(const SuiteResult& r) {
  return nlohmann::json{{"suite", r.suite},
                        {"family", r.family},
                        {"status", r.informational ? "informational" : (r.passed ? "pass" : "fail")},
                        {"detail", r.detail},
                        {"counterexample", r.counterexample}};
}

bool all_passed(const std::vector<SuiteResult>& results) {
  for (const auto& r : results) {
    if (!r.informational && !r.passed) return false;
  }
  return true;
}

}  // namespace orbits
