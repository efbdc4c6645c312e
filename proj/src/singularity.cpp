#include "orbits/singularity.hpp"

#include <algorithm>
#include <set>

#include "orbits/error.hpp"

namespace orbits {

namespace {

const std::vector<std::string> kAiii = {"1+-1", "1-+1", "1212", "1+221", "1-221", "122+1", "122-1", "122331"};

const std::vector<std::string> kAi = {
    "14325",   "21543",   "32154",   "154326",   "124356",   "351624",   "132546",   "426153",
    "153624",  "351426",  "1243576", "2135467",  "2137654",  "4321576",  "5276143",  "5472163",
    "1657324", "4651327", "57681324", "65872143", "13247856", "34125768", "34127856", "64827153"};

const std::vector<std::string> kAiiTheorem = {"351624",   "64827153", "57681324", "53281764", "43218765",
                                              "65872143", "21654387", "21563487", "34127856", "36154287",
                                              "21754836", "63287154", "54821763", "46513287", "21768435"};

std::vector<std::string> aii_extended() {
  std::vector<std::string> out = kAiiTheorem;
  out.push_back("43217856");
  out.push_back("34128765");
  return out;
}

std::vector<std::string> lci_list() {
  const std::vector<std::string> printed = {
      "1++-1",    "1+--1",    "1-22+1",   "1++221",   "1+-221",   "122--1",   "122+-1",
      "12+2-1",   "1+2-21",   "1+23321",  "12332-1",  "1-22331",  "12+2331",  "122+331",
      "1223-31",  "12233+1",  "1223-31",  "12233+1",  "12332441", "12234431", "12233441"};
  std::vector<std::string> out;
  for (const auto& s : printed) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

bool is_label(int x) { return x > 0; }

// Every label of the segment occurs twice in it.
bool internal(const std::vector<int>& seg) {
  for (int x : seg) {
    if (is_label(x) && std::count(seg.begin(), seg.end(), x) != 2) return false;
  }
  return true;
}

std::vector<int> slice(const Clan& c, int from, int to) {  // 0-based [from, to)
  return {c.entries().begin() + from, c.entries().begin() + to};
}

std::optional<Witness> first_aiii_pattern(const std::vector<int>& seg) {
  if (seg.empty()) return std::nullopt;
  Clan c(seg);
  for (const auto& p : kAiii) {
    if (auto pos = clan_includes(c, parse_clan(p))) return Witness{"bad pattern", p, *pos};
  }
  return std::nullopt;
}

bool avoids_aiii(const std::vector<int>& seg) { return !first_aiii_pattern(seg); }

// Strips a trailing run of labels that occur once in g; returns the rest if it is internal.
std::optional<std::vector<int>> split_singletons(std::vector<int> g) {
  std::size_t k = g.size();
  while (k > 0 && is_label(g[k - 1]) && std::count(g.begin(), g.end(), g[k - 1]) == 1) --k;
  g.resize(k);
  if (!internal(g)) return std::nullopt;
  return g;
}

Clan diii_open_shape(int m) {
  const int k = m / 2;
  std::vector<int> e;
  for (int i = 1; i <= 2 * k; ++i) e.push_back(i);
  if (m % 2) {
    e.push_back(kPlus);
    e.push_back(kMinus);
  }
  for (int j = k; j >= 1; --j) {
    e.push_back(2 * j - 1);
    e.push_back(2 * j);
  }
  return Clan(e);
}

Verdict structural(bool rs, bool smooth, const std::string& shape) {
  Verdict v;
  v.rationally_smooth = rs;
  v.smooth = smooth;
  v.decomposition = shape;
  if (!rs) v.witness = Witness{"no admissible decomposition", "", {}};
  return v;
}

std::string join(const std::vector<int>& seg) {
  if (seg.empty()) return "()";
  return "(" + print_clan(Clan(seg)) + ")";
}

void require(const Clan& c, const Family& f, Tag t) {
  if (f.tag != t || !fits_family(c, f)) throw Error(ErrorKind::FamilyMismatch, print_clan(c) + " for " + f.name());
}

// An occurrence of 2143 is harmless when an odd number of fixed points of w lie
// strictly between its second and third positions.
std::optional<Positions> bad_2143(const Involution& w, bool stable) {
  std::optional<Positions> found;
  auto visit = [&](const Positions& k) {
    int fixed = 0;
    for (int i = k[1] + 1; i < k[2]; ++i) fixed += w[i - 1] == i;
    if (fixed % 2 == 0) {
      found = k;
      return false;
    }
    return true;
  };
  const Permutation pat{2, 1, 4, 3};
  if (stable) for_each_involution_occurrence(w, pat, visit);
  else for_each_schubert_occurrence(w, pat, visit);
  return found;
}

}  // namespace

const std::vector<std::string>& aiii_bad_patterns() { return kAiii; }
const std::vector<std::string>& ai_bad_patterns() { return kAi; }
const std::vector<std::string>& aii_bad_patterns(bool theorem_only) {
  static const std::vector<std::string> ext = aii_extended();
  return theorem_only ? kAiiTheorem : ext;
}
const std::vector<std::string>& lci_bad_patterns() {
  static const std::vector<std::string> list = lci_list();
  return list;
}

std::optional<Positions> clan_includes(const Clan& c, const Clan& pattern) {
  const int n = c.size();
  const int m = pattern.size();
  if (m > n) return std::nullopt;
  Positions pos(m);
  std::vector<int> bind(pattern.num_pairs() + 1, 0);  // pattern label -> position of its first occurrence
  std::vector<char> used_label(c.num_pairs() + 1, 0);
  std::function<bool(int, int)> dfs = [&](int k, int from) -> bool {
    if (k == m) return true;
    const int want = pattern[k + 1];
    for (int i = from; i <= n - (m - k - 1); ++i) {
      const int x = c[i];
      if (is_sign(want)) {
        if (x != want) continue;
        pos[k] = i;
        if (dfs(k + 1, i + 1)) return true;
      } else if (bind[want] == 0) {
        if (is_sign(x) || used_label[x] || c.partner(i) < i) continue;
        bind[want] = i;
        used_label[x] = 1;
        pos[k] = i;
        if (dfs(k + 1, i + 1)) return true;
        bind[want] = 0;
        used_label[x] = 0;
      } else {
        // second occurrence must be the partner of the first
        if (i != c.partner(bind[want])) continue;
        pos[k] = i;
        if (dfs(k + 1, i + 1)) return true;
      }
    }
    return false;
  };
  if (dfs(0, 1)) return pos;
  return std::nullopt;
}

void for_each_involution_occurrence(const Involution& w, const Involution& pattern,
                                    const std::function<bool(const Positions&)>& visit) {
  if (!is_involution(pattern)) throw Error(ErrorKind::PatternNotInvolution, print_permutation(pattern));
  const int n = static_cast<int>(w.size());
  const int m = static_cast<int>(pattern.size());
  if (m > n) return;
  Positions k(m);
  bool stop = false;
  // w(k_a) = k_{pattern(a)}, which is stability plus order-isomorphism
  std::function<void(int, int)> dfs = [&](int a, int from) {
    if (stop) return;
    if (a == m) {
      if (!visit(k)) stop = true;
      return;
    }
    const int target = pattern[a];  // 1-based index into k
    for (int i = from; i <= n - (m - a - 1) && !stop; ++i) {
      const int wi = w[i - 1];
      if (target - 1 < a && wi != k[target - 1]) continue;
      if (target - 1 == a && wi != i) continue;
      if (target - 1 > a && wi <= i) continue;
      k[a] = i;
      dfs(a + 1, i + 1);
    }
  };
  dfs(0, 1);
}

std::optional<Positions> involution_includes(const Involution& w, const Involution& pattern) {
  std::optional<Positions> out;
  for_each_involution_occurrence(w, pattern, [&](const Positions& k) {
    out = k;
    return false;
  });
  return out;
}

void for_each_schubert_occurrence(const Permutation& w, const Permutation& pattern,
                                  const std::function<bool(const Positions&)>& visit) {
  const int n = static_cast<int>(w.size());
  const int m = static_cast<int>(pattern.size());
  if (m > n) return;
  Positions k(m);
  bool stop = false;
  std::function<void(int, int)> dfs = [&](int a, int from) {
    if (stop) return;
    if (a == m) {
      if (!visit(k)) stop = true;
      return;
    }
    for (int i = from; i <= n - (m - a - 1) && !stop; ++i) {
      bool ok = true;
      for (int b = 0; b < a && ok; ++b) ok = (w[k[b] - 1] < w[i - 1]) == (pattern[b] < pattern[a]);
      if (!ok) continue;
      k[a] = i;
      dfs(a + 1, i + 1);
    }
  };
  dfs(0, 1);
}

std::optional<Positions> schubert_includes(const Permutation& w, const Permutation& pattern) {
  std::optional<Positions> out;
  for_each_schubert_occurrence(w, pattern, [&](const Positions& k) {
    out = k;
    return false;
  });
  return out;
}

Verdict classify_aiii(const Clan& c) {
  Verdict v;
  if (auto wit = first_aiii_pattern(c.entries())) {
    v.rationally_smooth = v.smooth = false;
    v.witness = wit;
  }
  v.lci = classify_lci_aiii(c);
  return v;
}

std::optional<bool> classify_lci_aiii(const Clan& c) {
  if (clan_includes(c, parse_clan("1212"))) return std::nullopt;
  for (const auto& s : lci_bad_patterns()) {
    const Clan p = parse_clan(s);
    if (clan_includes(c, p) || clan_includes(c, negate(p))) return false;
  }
  return true;
}

Verdict classify_ai(const Involution& w) {
  if (!is_involution(w)) throw Error(ErrorKind::FamilyMismatch, print_permutation(w) + " is not an involution");
  Verdict v;
  for (const auto& p : kAi) {
    if (auto pos = involution_includes(w, parse_permutation(p))) {
      v.rationally_smooth = v.smooth = false;
      v.witness = Witness{"bad pattern", p, *pos};
      return v;
    }
  }
  if (auto pos = bad_2143(w, true)) {
    v.rationally_smooth = v.smooth = false;
    v.witness = Witness{"2143 with an even number of fixed points between 21 and 43", "2143", *pos};
    return v;
  }
  for (const auto& p : {"1324", "2143"}) {
    if (auto pos = involution_includes(w, parse_permutation(p))) {
      v.smooth = false;
      v.witness = Witness{"smoothness pattern", p, *pos};
      return v;
    }
  }
  return v;
}

Verdict classify_aii(const Involution& w, AiiPatternList list) {
  if (w.size() % 2 || !is_involution(w) || fixed_points(w)) {
    throw Error(ErrorKind::NotFixedPointFree, print_permutation(w));
  }
  Verdict v;
  for (const auto& p : aii_bad_patterns(list == AiiPatternList::TheoremOnly)) {
    if (auto pos = involution_includes(w, parse_permutation(p))) {
      v.rationally_smooth = v.smooth = false;
      v.witness = Witness{"bad pattern", p, *pos};
      return v;
    }
  }
  return v;
}

Verdict classify_cii(const Clan& d, const Family& f) {
  require(d, f, Tag::CII);
  const int n = d.size();
  const int h = n / 2;
  for (int l = 0; l <= h; ++l) {
    const auto g = slice(d, 0, l);
    const auto mid = slice(d, l, n - l);
    if (!internal(g) || !internal(mid) || !avoids_aiii(g)) continue;
    if (mid.empty()) return structural(true, true, join(g) + " " + join(mid));
    const Clan m(mid);
    if (m.p() % 2 || m.q() % 2) continue;
    if (m == open_orbit_clan(Family::cii(m.p() / 2, m.q() / 2))) {
      return structural(true, true, join(g) + " " + join(mid) + " mirror");
    }
  }
  return structural(false, false, "");
}

Verdict classify_ci(const Clan& d, const Family& f) {
  require(d, f, Tag::CI);
  const int n = d.size();
  const int h = n / 2;
  if (auto a = split_singletons(slice(d, 0, h)); a && avoids_aiii(*a)) {
    return structural(true, true, join(*a) + " + singletons, empty middle");
  }
  if (n >= 4) {
    const int l = h - 2;
    const auto g = slice(d, 0, l);
    const auto mid = slice(d, l, n - l);
    if (internal(g) && internal(mid) && avoids_aiii(g)) {
      const Clan m(mid);
      for (const char* s : {"1+-1", "1-+1", "1212"}) {
        if (m != parse_clan(s)) continue;
        Verdict v = structural(true, std::string(s) == "1212", join(g) + " " + join(mid) + " mirror");
        if (!v.smooth) v.witness = Witness{"middle block", s, {l + 1, l + 2, l + 3, l + 4}};
        return v;
      }
    }
  }
  return structural(false, false, "");
}

Verdict classify_bdi(const Clan& d, const Family& f) {
  require(d, f, Tag::BDI);
  const int n = d.size();
  const int h = n / 2;
  std::vector<int> lh = slice(d, 0, h + n % 2);
  std::size_t k = lh.size();
  if (k && is_sign(lh[k - 1])) {
    const int s = lh[k - 1];
    while (k > 0 && lh[k - 1] == s) --k;
  }
  if (auto a = split_singletons({lh.begin(), lh.begin() + static_cast<long>(k)}); a && avoids_aiii(*a)) {
    return structural(true, true, join(*a) + " + singletons + equal signs, empty middle");
  }
  if (n % 2 && n >= 5) {
    const int l = h - 2;
    const auto g = slice(d, 0, l);
    const auto mid = slice(d, l, n - l);
    if (internal(g) && internal(mid) && avoids_aiii(g)) {
      const Clan m(mid);
      for (const char* s : {"1+-+1", "1-+-1", "12+12", "12-12"}) {
        if (m != parse_clan(s)) continue;
        const bool smooth = s[1] == '2';
        Verdict v = structural(true, smooth, join(g) + " " + join(mid) + " mirror");
        if (!smooth) v.witness = Witness{"middle block", s, {l + 1, l + 2, l + 3, l + 4, l + 5}};
        return v;
      }
    }
  }
  return structural(false, false, "");
}

Verdict classify_diii(const Clan& d, const Family& f) {
  require(d, f, Tag::DIII);
  const int n = d.size();
  const int h = n / 2;
  for (int l = 0; l <= h; ++l) {
    const auto g = slice(d, 0, l);
    const auto mid = slice(d, l, n - l);
    if (!internal(g) || !internal(mid) || !avoids_aiii(g)) continue;
    const int m2 = static_cast<int>(mid.size()) / 2;
    if (m2 == 0) return structural(true, true, join(g) + " () mirror");
    const Clan m(mid);
    const Clan o = diii_open_shape(m2);
    if (m == o || m == negate(o)) return structural(true, true, join(g) + " " + join(mid) + " mirror");
  }
  // (1, g, 2, 1, g', 2): outer pairs at positions 1, h+1 and h, n
  if (n >= 4 && is_label(d[1]) && d[1] == d[h + 1] && d[h] == d[n] && d[1] != d[h]) {
    const auto g = slice(d, 1, h - 1);
    if (internal(g) && avoids_aiii(g)) {
      bool ok = true;
      if (!g.empty()) {
        const Clan cg(g);
        for (const char* s : {"+11", "-11", "11+", "11-", "1122"}) ok = ok && !clan_includes(cg, parse_clan(s));
      }
      if (ok) return structural(true, true, "(1 " + join(g) + " 2 | 1 " + join(g) + "' 2)");
    }
  }
  return structural(false, false, "");
}

Verdict classify(const Param& x, const Family& f) {
  if (!is_valid(x, f)) throw Error(ErrorKind::FamilyMismatch, param_text(x) + " for " + f.name());
  switch (f.tag) {
    case Tag::AI: return classify_ai(as_involution(x));
    case Tag::AII: return classify_aii(as_involution(x));
    case Tag::AIII: return classify_aiii(as_clan(x));
    case Tag::CI: return classify_ci(as_clan(x), f);
    case Tag::CII: return classify_cii(as_clan(x), f);
    case Tag::BDI: return classify_bdi(as_clan(x), f);
    case Tag::DIII: return classify_diii(as_clan(x), f);
  }
  return {};
}

std::vector<PatternDiscrepancy> conjecture41_report(const Family& f) {
  if (f.uses_clans()) throw Error(ErrorKind::FamilyMismatch, "involution families only");
  const bool ai = f.tag == Tag::AI;
  const auto& list = ai ? kAi : aii_bad_patterns(false);
  std::vector<PatternDiscrepancy> out;
  for (const auto& w : enumerate_involutions(f.n, !ai)) {
    for (const auto& p : list) {
      const Permutation pat = parse_permutation(p);
      const bool inv = involution_includes(w, pat).has_value();
      const bool sch = schubert_includes(w, pat).has_value();
      if (inv != sch) out.push_back({w, p, inv, sch});
    }
    if (ai) {
      const bool inv = bad_2143(w, true).has_value();
      const bool sch = bad_2143(w, false).has_value();
      if (inv != sch) out.push_back({w, "2143", inv, sch});
    }
  }
  return out;
}

}  // namespace orbits
