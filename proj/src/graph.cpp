#include "orbits/graph.hpp"

#include <algorithm>
#include <deque>

#include "orbits/error.hpp"
#include "orbits/rank.hpp"

namespace orbits {

namespace {

bool mirrored_family(const Family& f) { return f.uses_clans() && f.tag != Tag::AIII; }

std::optional<Param> act_on_clan(const Generator& g, const Clan& c, const Family& f) {
  const int n = c.size();
  std::vector<int> e = c.entries();
  if (g.kind == Generator::Kind::Swap) {
    std::swap(e[g.i - 1], e[g.i]);
    if (mirrored_family(f)) std::swap(e[n - g.i], e[n - g.i - 1]);
  } else {
    const int j = n + 1 - g.i;
    e[g.i - 1] = flip_sign(e[g.i - 1]);
    if (j != g.i) e[j - 1] = flip_sign(e[j - 1]);
  }
  Clan out(std::move(e));
  if (!fits_family(out, f)) return std::nullopt;
  return out;
}

Involution conjugate(const Involution& w, int a, int b) {
  auto t = [&](int x) { return x == a ? b : x == b ? a : x; };
  Involution out(w.size());
  for (int i = 1; i <= static_cast<int>(w.size()); ++i) out[i - 1] = t(w[t(i) - 1]);
  return out;
}

}  // namespace

std::vector<Generator> generators(const Family& f) {
  std::vector<Generator> out;
  const int n = f.length();
  if (!mirrored_family(f)) {
    for (int i = 1; i < n; ++i) out.push_back({Generator::Kind::Swap, i});
    return out;
  }
  const int h = n / 2;
  for (int i = 1; i < h; ++i) out.push_back({Generator::Kind::Swap, i});
  for (int i = 1; i <= h; ++i) out.push_back({Generator::Kind::SignChange, i});
  return out;
}

std::optional<Param> w_action(const Generator& g, const Param& v, const Family& f) {
  const int n = f.length();
  const int limit = mirrored_family(f) ? n / 2 : n;
  const bool swap = g.kind == Generator::Kind::Swap;
  if (g.i < 1 || (swap && g.i + 1 > limit) || (!swap && (g.i > limit || !mirrored_family(f)))) {
    throw Error(ErrorKind::InvalidGenerator, f.name());
  }
  if (f.uses_clans()) return act_on_clan(g, as_clan(v), f);
  return Param(conjugate(as_involution(v), g.i, g.i + 1));
}

std::vector<std::pair<Move, Involution>> involution_neighbors(const Involution& w, const Family& f) {
  std::vector<std::pair<Move, Involution>> out;
  const int n = static_cast<int>(w.size());
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      Move m{kTransposition, {a, b}, false};
      Involution c = conjugate(w, a, b);
      if (c != w) {
        out.emplace_back(m, std::move(c));
        continue;
      }
      if (f.tag != Tag::AI) continue;
      int fixed_between = 0;
      for (int k = a + 1; k < b; ++k) fixed_between += w[k - 1] == k;
      if (fixed_between) continue;
      Involution nu = w;
      for (int& x : nu) x = x == a ? b : x == b ? a : x;
      out.emplace_back(m, std::move(nu));
    }
  }
  return out;
}

BruhatGraph::BruhatGraph(const OrbitPoset& poset) : poset_(&poset) {
  const Family& f = poset.family();
  const std::size_t n = poset.size();
  adj_.assign(n, {});
  auto add = [&](std::size_t a, std::size_t b) {
    if (poset.rank(a) > poset.rank(b)) std::swap(a, b);
    if (!poset.leq(a, b)) return;
    if (edge_set_.insert({a, b}).second) {
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
  };
  if (f.uses_clans()) {
    MoveSystem ms(f);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& s : ms.successors(poset[i])) {
        if (!s.graph) continue;
        if (auto j = poset.index_of(s.target)) add(i, *j);
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [m, v] : involution_neighbors(as_involution(poset[i]), f)) {
        if (auto j = poset.index_of(Param(v))) add(i, *j);
      }
    }
  }
  edges_.assign(edge_set_.begin(), edge_set_.end());
  for (auto& a : adj_) std::sort(a.begin(), a.end());

  std::vector<char> seen(n, 0);
  std::deque<std::size_t> queue;
  for (std::size_t m : poset.minimal()) {
    seen[m] = 1;
    queue.push_back(m);
  }
  const auto gens = generators(f);
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      auto img = w_action(g, poset[v], f);
      if (!img) continue;
      auto j = poset.index_of(*img);
      if (j && !seen[*j]) {
        seen[*j] = 1;
        queue.push_back(*j);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) conj_.push_back(i);
  }
}

bool BruhatGraph::has_edge(std::size_t a, std::size_t b) const {
  if (poset_->rank(a) > poset_->rank(b)) std::swap(a, b);
  return edge_set_.count({a, b}) > 0;
}

std::vector<std::size_t> BruhatGraph::minimal_conjugates(std::size_t d) const {
  std::vector<std::size_t> out;
  for (std::size_t c : conj_) {
    if (poset_->leq(c, d)) out.push_back(c);
  }
  return out;
}

int BruhatGraph::brion_degree(std::size_t c, std::size_t d) const {
  if (!poset_->leq(c, d)) {
    throw Error(ErrorKind::NotComparable, param_text((*poset_)[c]) + " is not below " + param_text((*poset_)[d]));
  }
  int deg = 0;
  for (std::size_t x : adj_[c]) deg += poset_->leq(c, x) && poset_->leq(x, d);
  return deg;
}

bool BruhatGraph::brion_check(std::size_t d) const {
  for (std::size_t c : minimal_conjugates(d)) {
    if (brion_degree(c, d) != poset_->rank(d) - poset_->rank(c)) return false;
  }
  return true;
}

std::vector<int> BruhatGraph::poincare(std::size_t d) const {
  std::vector<int> co(static_cast<std::size_t>(poset_->rank(d)) + 1, 0);
  const Bitset& below = poset_->down(d);
  for (std::size_t x = below.find_first(); x != Bitset::npos; x = below.find_next(x)) ++co[poset_->rank(x)];
  return co;
}

bool is_palindromic(const std::vector<int>& co) {
  for (std::size_t i = 0, j = co.size(); i < j; ++i) {
    --j;
    if (co[i] != co[j]) return false;
  }
  return true;
}

}  // namespace orbits
