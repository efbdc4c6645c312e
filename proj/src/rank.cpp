#include "orbits/rank.hpp"

#include "orbits/error.hpp"

namespace orbits {

PairStats pair_stats(const Clan& c) {
  PairStats st;
  const int n = c.size();
  for (auto [s, t] : c.pairs()) {
    // 2s < n < 2t encodes s < N/2 < t without fractions
    if (2 * s < n && n < 2 * t) {
      if (t < n + 1 - s) ++st.a;
      if (t <= n + 1 - s) ++st.b;
    }
    if (s + t == n + 1) ++st.self_mirror;
    if (2 * s <= n && n < 2 * t && t <= n + 1 - s) ++st.mid_cross;
  }
  return st;
}

PairStats pair_stats(const Involution& w) {
  PairStats st;
  const int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i) {
    if (w[i] > i + 1) ++st.exc;
    for (int j = i + 1; j < n; ++j) st.inv += w[i] > w[j];
  }
  return st;
}

int rank_aiii(const Clan& c) {
  const auto pr = c.pairs();
  int total = 0;
  for (auto [i, j] : pr) {
    int nested = 0;
    for (auto [s, t] : pr) nested += s < i && i < t && t < j;
    total += j - i - nested;
  }
  return total;
}

int dim_aiii(const Clan& c) {
  const int p = c.p();
  const int q = c.q();
  return (p * (p - 1) + q * (q - 1)) / 2 + rank_aiii(c);
}

int rank_ai(const Involution& w) {
  const int n = static_cast<int>(w.size());
  int sum = 0;
  for (int i = 1; i <= n; ++i) {
    const int j = w[i - 1];
    if (i >= j) continue;
    int below = 0;
    for (int k = i + 1; k < j; ++k) below += w[k - 1] < i;
    sum += j - i - below;
  }
  return n * n / 4 - sum;
}

int rank_ai_alt(const Involution& w) {
  const int n = static_cast<int>(w.size());
  PairStats st = pair_stats(w);
  if ((st.inv + st.exc) % 2) throw Error(ErrorKind::InternalInvariant, "inv + exc is odd");
  return n * n / 4 - (st.inv + st.exc) / 2;
}

int rank_aii(const Involution& w) {
  if (w.size() % 2 || fixed_points(w) != 0) {
    throw Error(ErrorKind::NotFixedPointFree, print_permutation(w));
  }
  return rank_ai(w);
}

namespace {

int halve(int num, const Clan& c) {
  if (num % 2 || num < 0) throw Error(ErrorKind::InternalInvariant, "odd rank numerator at " + print_clan(c));
  return num / 2;
}

}  // namespace

int rank_cii(const Clan& c) {
  if (c.size() % 2) throw Error(ErrorKind::FamilyMismatch, "odd clan length");
  return halve(rank_aiii(c) + pair_stats(c).mid_cross, c);
}

int rank_ci(const Clan& c) { return rank_cii(c); }

int rank_bdi(const Clan& c) {
  PairStats st = pair_stats(c);
  const int sigma = c.size() % 2 == 0 ? st.self_mirror % 2 : 0;
  return halve(rank_aiii(c) - st.a - sigma, c);
}

int rank_diii(const Clan& c) {
  if (c.size() % 2) throw Error(ErrorKind::FamilyMismatch, "odd clan length");
  return rank_bdi(c);
}

namespace {

// Flag variety dimension of SO(k).
int so_flag(int k) {
  const int r = k / 2;
  return k % 2 ? r * r : r * (r - 1);
}

}  // namespace

int closed_dim(const Family& f) {
  switch (f.tag) {
    case Tag::AI: {
      const int m = f.n / 2;
      return f.n % 2 ? m * m : m * (m - 1);
    }
    case Tag::AII: return (f.n / 2) * (f.n / 2);
    case Tag::AIII: return (f.p * (f.p - 1) + f.q * (f.q - 1)) / 2;
    case Tag::CI:
    case Tag::DIII: return f.n * (f.n - 1) / 2;
    case Tag::CII: return f.p * f.p + f.q * f.q;
    case Tag::BDI: return so_flag(f.p) + so_flag(f.q);
  }
  return 0;
}

int flag_dim(const Family& f) {
  switch (f.tag) {
    case Tag::AI:
    case Tag::AII: return f.n * (f.n - 1) / 2;
    case Tag::AIII: return (f.p + f.q) * (f.p + f.q - 1) / 2;
    case Tag::CI: return f.n * f.n;
    case Tag::CII: return (f.p + f.q) * (f.p + f.q);
    case Tag::BDI: return so_flag(f.p + f.q);
    case Tag::DIII: return so_flag(2 * f.n);
  }
  return 0;
}

int rank(const Param& x, const Family& f) {
  switch (f.tag) {
    case Tag::AI: return rank_ai(as_involution(x));
    case Tag::AII: return rank_aii(as_involution(x));
    case Tag::AIII: return rank_aiii(as_clan(x));
    case Tag::CI: return rank_ci(as_clan(x));
    case Tag::CII: return rank_cii(as_clan(x));
    case Tag::BDI: return rank_bdi(as_clan(x));
    case Tag::DIII: return rank_diii(as_clan(x));
  }
  return 0;
}

RankInfo rank_info(const Param& x, const Family& f) {
  RankInfo r;
  r.rank = rank(x, f);
  r.closed_dim = closed_dim(f);
  r.dim = r.closed_dim + r.rank;
  return r;
}

}  // namespace orbits
