#include "orbits/moves.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "orbits/error.hpp"
#include "orbits/graph.hpp"
#include "orbits/order.hpp"
#include "orbits/rank.hpp"

namespace orbits {

namespace {

struct Rewrite {
  const char* from;
  const char* to;
};

// Index 0 unused; 11..14 are S1..S4.
constexpr std::array<Rewrite, 15> kRewrites{{
    {"", ""},
    {"+-", "aa"},
    {"-+", "aa"},
    {"aa+", "a+a"},
    {"aa-", "a-a"},
    {"+aa", "a+a"},
    {"-aa", "a-a"},
    {"aabb", "abab"},
    {"aabb", "a+-a"},
    {"aabb", "a-+a"},
    {"abab", "abba"},
    {"+aa-", "abab"},
    {"-aa+", "abab"},
    {"+-+-", "abab"},
    {"-+-+", "abab"},
}};

// Fresh labels stay above any label of a clan of length <= 2000.
constexpr int kFreshA = 1001;
constexpr int kFreshB = 1002;

bool match(const Clan& c, const std::vector<int>& pos, const char* pat) {
  int la = 0, lb = 0;
  for (std::size_t k = 0; k < pos.size(); ++k) {
    const int x = c[pos[k]];
    const char ch = pat[k];
    if (ch == '+' || ch == '-') {
      if (x != (ch == '+' ? kPlus : kMinus)) return false;
      continue;
    }
    if (is_sign(x)) return false;
    int& bound = ch == 'a' ? la : lb;
    const int other = ch == 'a' ? lb : la;
    if (bound == 0) {
      if (x == other) return false;
      bound = x;
    } else if (bound != x) {
      return false;
    }
  }
  // both endpoints of every bound pair lie in the index set
  for (int label : {la, lb}) {
    if (label == 0) continue;
    int seen = 0;
    for (int p : pos) seen += c[p] == label;
    if (seen != 2) return false;
  }
  return true;
}

Clan apply(const Clan& c, const std::vector<int>& pos, const char* res) {
  std::vector<int> e = c.entries();
  for (std::size_t k = 0; k < pos.size(); ++k) {
    const char ch = res[k];
    e[pos[k] - 1] = ch == '+' ? kPlus : ch == '-' ? kMinus : ch == 'a' ? kFreshA : kFreshB;
  }
  return Clan(std::move(e));
}

// Calls fn on every ascending k-subset of 1..n.
template <class Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k > n) return;
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) pos[i] = i + 1;
  while (true) {
    fn(pos);
    int i = k - 1;
    while (i >= 0 && pos[i] == n - k + i + 1) --i;
    if (i < 0) return;
    ++pos[i];
    for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
  }
}

void rewrite_all(const Clan& c, int id, std::vector<std::pair<Move, Clan>>& out, bool self_symmetric_only) {
  const Rewrite& r = kRewrites[id];
  const int k = static_cast<int>(std::char_traits<char>::length(r.from));
  const int n = c.size();
  for_each_subset(n, k, [&](const std::vector<int>& pos) {
    if (self_symmetric_only) {
      for (std::size_t i = 0; i < pos.size(); ++i) {
        if (pos[i] + pos[pos.size() - 1 - i] != n + 1) return;
      }
    }
    if (!match(c, pos, r.from)) return;
    out.emplace_back(Move{id, pos, false}, apply(c, pos, r.to));
  });
}

}  // namespace

std::string move_name(int id) {
  if (id == kTransposition) return "t";
  if (id >= kS1 && id <= kS4) return "S" + std::to_string(id - kS1 + 1);
  return std::to_string(id);
}

bool MoveWord::mirrored(int length) const {
  if (steps.size() != 2) return false;
  std::vector<int> a = steps[0].index_set;
  for (int& x : a) x = length + 1 - x;
  std::sort(a.begin(), a.end());
  return a == steps[1].index_set;
}

std::string MoveWord::text() const {
  std::string out;
  for (const auto& m : steps) {
    if (!out.empty()) out += ' ';
    out += move_name(m.id) + "@{";
    for (std::size_t i = 0; i < m.index_set.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(m.index_set[i]);
    }
    out += '}';
  }
  return out;
}

int move_depth(const Family& f) {
  switch (f.tag) {
    case Tag::CII:
    case Tag::DIII: return 2;
    case Tag::CI: return 3;
    case Tag::BDI: return 4;
    default: return 1;
  }
}

bool is_graph_move(int id, const Family& f) {
  if (id == kTransposition) return !f.uses_clans();
  if (id >= 1 && id <= 7) return f.uses_clans();
  return f.tag == Tag::CI && id >= kS1 && id <= kS4;
}

std::vector<std::pair<Move, Clan>> wyser_moves(const Clan& c) {
  std::vector<std::pair<Move, Clan>> out;
  for (int id = 1; id <= 10; ++id) rewrite_all(c, id, out, false);
  return out;
}

std::vector<std::pair<Move, Clan>> supplementary_moves(const Clan& c) {
  std::vector<std::pair<Move, Clan>> out;
  for (int id = kS1; id <= kS4; ++id) rewrite_all(c, id, out, true);
  return out;
}

MoveSystem::MoveSystem(const Family& f) : f_(f), depth_(move_depth(f)) {}

const std::vector<std::pair<Move, Clan>>& MoveSystem::single(const Clan& c) {
  auto it = cache_.find(c);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(c, wyser_moves(c)).first->second;
}

bool MoveSystem::reach_within(const Clan& from, const Clan& to, int k) {
  auto it = reach_.find(from);
  if (it == reach_.end()) {
    std::unordered_set<Clan, ClanHash> seen;
    std::vector<Clan> frontier{from};
    for (int step = 0; step < k; ++step) {
      std::vector<Clan> next;
      for (const auto& x : frontier) {
        for (const auto& [m, y] : single(x)) {
          if (seen.insert(y).second) next.push_back(y);
        }
      }
      frontier = std::move(next);
    }
    it = reach_.emplace(from, std::move(seen)).first;
  }
  return it->second.count(to) > 0;
}

std::vector<Successor> MoveSystem::clan_successors(const Clan& c) {
  const int n = c.size();
  if (f_.tag == Tag::AIII) {
    std::map<Clan, Successor> found;
    for (const auto& [m, y] : single(c)) {
      auto [it, fresh] = found.try_emplace(y, Successor{y, MoveWord{{m}}, is_graph_move(m.id, f_)});
      if (!fresh && !it->second.graph && is_graph_move(m.id, f_)) it->second = {y, MoveWord{{m}}, true};
    }
    std::vector<Successor> out;
    for (auto& [k, s] : found) out.push_back(std::move(s));
    return out;
  }

  // Breadth-first search over (clan, all-steps-are-graph-moves) states; only the
  // last clan of a word may be valid for the family.
  struct State {
    Clan clan;
    bool graph;
    MoveWord word;
  };
  std::map<Clan, Successor> found;
  auto record = [&](const Clan& y, bool g, const MoveWord& w) {
    auto [it, fresh] = found.try_emplace(y, Successor{y, w, g});
    if (!fresh && g && !it->second.graph) it->second = Successor{y, w, true};
  };
  std::unordered_set<Clan, ClanHash> seen_graph, seen_plain;
  std::vector<State> frontier{{c, true, {}}};
  (void)seen_graph.insert(c);
  for (int step = 0; step < depth_ && !frontier.empty(); ++step) {
    std::vector<State> next;
    for (const auto& s : frontier) {
      for (const auto& [m, y] : single(s.clan)) {
        const bool g = s.graph && is_graph_move(m.id, f_);
        auto& seen = g ? seen_graph : seen_plain;
        if (!seen.insert(y).second) continue;
        MoveWord w = s.word;
        w.steps.push_back(m);
        if (fits_family(y, f_)) record(y, g, w);
        else next.push_back({y, g, std::move(w)});
      }
    }
    frontier = std::move(next);
  }
  if (f_.tag == Tag::CI) {
    for (const auto& [m, y] : supplementary_moves(c)) {
      if (fits_family(y, f_)) record(y, true, MoveWord{{m}});
    }
  }

  const int rc = rank(c, f_);
  const bool gated = f_.tag == Tag::BDI && n % 2 == 0;
  std::vector<Successor> out;
  for (auto& [d, s] : found) {
    if (rank(d, f_) <= rc) continue;
    if (gated) {
      const Clan tc = twin(c);
      const Clan td = twin(d);
      if (!reach_within(tc, td, depth_)) continue;
      if (!lagrangian_ok(lagrangian_data(c), lagrangian_data(d))) continue;
      if (!lagrangian_ok(lagrangian_data(tc), lagrangian_data(td))) continue;
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Successor> MoveSystem::involution_successors(const Involution& w) {
  std::vector<Successor> out;
  const int rw = rank(w, f_);
  for (auto& [m, v] : involution_neighbors(w, f_)) {
    if (rank(v, f_) > rw && leq_family(Param(w), Param(v), f_)) out.push_back(Successor{v, MoveWord{{m}}, true});
  }
  return out;
}

std::vector<Successor> MoveSystem::successors(const Param& x) {
  if (!is_valid(x, f_)) throw Error(ErrorKind::FamilyMismatch, param_text(x) + " for " + f_.name());
  if (f_.uses_clans()) return clan_successors(as_clan(x));
  return involution_successors(as_involution(x));
}

std::vector<Successor> successors(const Param& x, const Family& f) {
  MoveSystem ms(f);
  return ms.successors(x);
}

Relation order_from_moves(const Family& f, const std::vector<Param>& vertices) {
  const std::size_t n = vertices.size();
  std::map<Param, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(vertices[i], i);
  std::vector<int> rk(n);
  for (std::size_t i = 0; i < n; ++i) rk[i] = rank(vertices[i], f);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rk[a] > rk[b]; });
  MoveSystem ms(f);
  Relation reach(n, Bitset(n));
  for (std::size_t v : order) {
    reach[v].set(v);
    for (const auto& s : ms.successors(vertices[v])) {
      auto it = index.find(s.target);
      if (it == index.end()) {
        throw Error(ErrorKind::InternalInvariant, "successor " + param_text(s.target) + " not enumerated");
      }
      // successors have strictly larger rank, so their rows are complete
      reach[v] |= reach[it->second];
    }
  }
  return reach;
}

}  // namespace orbits
