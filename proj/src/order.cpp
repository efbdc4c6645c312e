#include "orbits/order.hpp"

#include <algorithm>
#include <set>

#include "orbits/error.hpp"

namespace orbits {

ClosureCounts counts(const Clan& c) {
  const int n = c.size();
  ClosureCounts k;
  k.plus.assign(n + 1, 0);
  k.minus.assign(n + 1, 0);
  k.mid.assign(n + 1, 0);
  k.cross.assign(n + 1, std::vector<int>(n + 1, 0));
  const auto pr = c.pairs();
  for (int i = 1; i <= n; ++i) {
    k.plus[i] = k.plus[i - 1];
    k.minus[i] = k.minus[i - 1];
    int x = c[i];
    if (x == kPlus) ++k.plus[i];
    else if (x == kMinus) ++k.minus[i];
    else if (c.partner(i) < i) {
      ++k.plus[i];
      ++k.minus[i];
    }
  }
  for (auto [s, t] : pr) {
    for (int i = s; i < t; ++i) {
      for (int j = i + 1; j < t; ++j) ++k.cross[i][j];
    }
    if (2 * s <= n && n < 2 * t && t <= n + 1 - s) {
      for (int i = t; i <= n; ++i) ++k.mid[i];
    }
  }
  return k;
}

ClosureCounts counts(const Clan& c, const Family& f) {
  if (!fits_family(c, f)) throw Error(ErrorKind::FamilyMismatch, print_clan(c) + " for " + f.name());
  return counts(c);
}

bool leq_aiii(const ClosureCounts& a, const ClosureCounts& b) {
  const std::size_t n = a.plus.size();
  for (std::size_t i = 1; i < n; ++i) {
    if (a.plus[i] < b.plus[i] || a.minus[i] < b.minus[i]) return false;
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a.cross[i][j] > b.cross[i][j]) return false;
    }
  }
  return true;
}

bool leq_aiii(const Clan& c, const Clan& d) {
  if (c.size() != d.size() || c.p() != d.p() || c.q() != d.q()) {
    throw Error(ErrorKind::SignatureMismatch, print_clan(c) + " vs " + print_clan(d));
  }
  return leq_aiii(counts(c), counts(d));
}

namespace {

// Coordinates: sign position k is k; pair number r (0-based) contributes the two
// vectors u = n+2r+1 and w = n+2r+2, with e_s = u + w and e_t = u - w.
struct Coords {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> mirror_pair;  // index of the mirror pair
  std::vector<char> sign;

  explicit Coords(const Clan& c) : n(c.size()), pairs(c.pairs()), sign(n + 1, 0) {
    for (int k = 1; k <= n; ++k) sign[k] = is_sign(c[k]);
    mirror_pair.assign(pairs.size(), -1);
    for (std::size_t r = 0; r < pairs.size(); ++r) {
      std::pair<int, int> m{n + 1 - pairs[r].second, n + 1 - pairs[r].first};
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (pairs[k] == m) mirror_pair[r] = static_cast<int>(k);
      }
      if (mirror_pair[r] < 0) throw Error(ErrorKind::InternalInvariant, "clan is not mirrored");
    }
  }
  int u(int r) const { return n + 2 * r + 1; }
  int w(int r) const { return n + 2 * r + 2; }
  int pair_of(int x) const { return (x - n - 1) / 2; }
  int partner(int x) const {
    if (x <= n) return n + 1 - x;
    const int r = pair_of(x);
    return (x - n - 1) % 2 == 0 ? u(mirror_pair[r]) : w(mirror_pair[r]);
  }
  // dim(span(S) meet V_i) for i = 1..n, S a set of coordinates
  std::vector<int> profile(const std::set<int>& s) const {
    std::vector<int> d(n, 0);
    for (int i = 1; i <= n; ++i) {
      int v = 0;
      for (int x : s) {
        if (x <= n && x <= i) ++v;
      }
      for (std::size_t r = 0; r < pairs.size(); ++r) {
        const int has = static_cast<int>(s.count(u(static_cast<int>(r)))) +
                        static_cast<int>(s.count(w(static_cast<int>(r))));
        if (pairs[r].second <= i) v += has;
        else if (pairs[r].first <= i && has == 2) v += 1;
      }
      d[i - 1] = v;
    }
    return d;
  }
};

}  // namespace

LagrangianData lagrangian_data(const Clan& c) {
  LagrangianData out;
  const int n = c.size();
  const int h = n / 2;
  out.half = h;
  Coords co(c);
  const int np = static_cast<int>(co.pairs.size());
  for (int j = 1; j <= n; ++j) {
    std::set<int> mset;
    int ap = 0, am = 0, nb = 0;
    for (int k = 1; k <= j; ++k) {
      if (co.sign[k] && n + 1 - k > j) {
        (c[k] == kPlus ? ap : am) += 1;
        mset.insert(k);
      }
    }
    int closed_plus = 0, closed_minus = 0;
    for (int k = 1; k <= j; ++k) {
      if (c[k] == kPlus) ++closed_plus;
      if (c[k] == kMinus) ++closed_minus;
    }
    for (int r = 0; r < np; ++r) {
      if (co.pairs[r].first <= j) {
        ++closed_plus;
        ++closed_minus;
      }
      if (co.pairs[r].first <= j && co.pairs[co.mirror_pair[r]].first > j) {
        ++nb;
        mset.insert(co.u(r));
        mset.insert(co.w(r));
      }
    }
    const int m = ap + am + 2 * nb;
    if (m < h - 1 || m == 0) continue;
    LagrangianData::Key key{j, closed_plus, closed_minus, ap + nb, am + nb};
    LagrangianData::Entry entry;
    if (m == h) {
      entry.middle = true;
      entry.dims.push_back(co.profile(mset));
      out.entries[key] = entry;
      continue;
    }
    std::vector<int> rest;
    for (int x = 1; x <= n + 2 * np; ++x) {
      if (x <= n && !co.sign[x]) continue;
      if (!mset.count(x) && !mset.count(co.partner(x))) rest.push_back(x);
    }
    if (rest.size() != 2) throw Error(ErrorKind::InternalInvariant, "isotropic complement at " + print_clan(c));
    const int x = rest[0];
    const int y = rest[1];
    std::vector<int> l1, l2;
    if (co.partner(x) == y && x != y) {
      std::set<int> s1 = mset, s2 = mset;
      s1.insert(x);
      s2.insert(y);
      l1 = co.profile(s1);
      l2 = co.profile(s2);
    } else {
      if (co.partner(x) != x || co.partner(y) != y || x <= n || y <= n) {
        throw Error(ErrorKind::InternalInvariant, "unexpected isotropic complement at " + print_clan(c));
      }
      std::vector<int> base = co.profile(mset);
      l1 = base;
      l2 = base;
      const auto px = co.pairs[co.pair_of(x)];
      const auto py = co.pairs[co.pair_of(y)];
      for (int i = 1; i <= n; ++i) {
        if (co.pair_of(x) == co.pair_of(y)) {
          l1[i - 1] += px.first <= i;   // line e_s
          l2[i - 1] += px.second <= i;  // line e_t
        } else {
          const int add = px.second <= i && py.second <= i;
          l1[i - 1] += add;
          l2[i - 1] += add;
        }
      }
    }
    if ((l1[h - 1] - h) % 2 != 0) std::swap(l1, l2);
    entry.dims = {l1, l2};
    out.entries[key] = entry;
  }
  return out;
}

bool lagrangian_ok(const LagrangianData& a, const LagrangianData& b) {
  const int h = a.half;
  for (const auto& [key, ea] : a.entries) {
    auto it = b.entries.find(key);
    if (it == b.entries.end()) continue;
    const auto& eb = it->second;
    for (std::size_t k = 0; k < ea.dims.size() && k < eb.dims.size(); ++k) {
      const auto& x = ea.dims[k];
      const auto& y = eb.dims[k];
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < y[i]) return false;
      }
      if (ea.middle && (x[h - 1] - y[h - 1]) % 2 != 0) return false;
    }
  }
  return true;
}

namespace {

bool is_bd(const Family& f) { return f.tag == Tag::BDI || f.tag == Tag::DIII; }

}  // namespace

bool leq_family(const Clan& c, const Clan& d, const Family& f) {
  if (!fits_family(c, f) || !fits_family(d, f)) {
    throw Error(ErrorKind::FamilyMismatch, print_clan(c) + " / " + print_clan(d) + " for " + f.name());
  }
  if (!leq_aiii(c, d)) return false;
  if (!is_bd(f) || c.size() % 2) return true;
  return leq_aiii(twin(c), twin(d)) && lagrangian_ok(lagrangian_data(c), lagrangian_data(d)) &&
         lagrangian_ok(lagrangian_data(twin(c)), lagrangian_data(twin(d)));
}

bool bruhat_leq_A(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw Error(ErrorKind::SizeMismatch, "bruhat_leq_A");
  const std::size_t n = v.size();
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<int> a(v.begin(), v.begin() + static_cast<long>(i));
    std::vector<int> b(w.begin(), w.begin() + static_cast<long>(i));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t j = 0; j < i; ++j) {
      if (a[j] > b[j]) return false;
    }
  }
  return true;
}

namespace {

// Suffix condition shared by types B/C and D; when parity is requested, also the
// sign-parity test on initial segments of the sorted suffixes.
bool signed_suffix_leq(const SignedPermutation& v, const SignedPermutation& w, bool parity) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> a(v.begin() + static_cast<long>(i), v.end());
    std::vector<int> b(w.begin() + static_cast<long>(i), w.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] < b[j]) return false;
    }
    if (!parity) continue;
    for (std::size_t k = 1; k <= a.size(); ++k) {
      std::vector<int> aa, bb;
      for (std::size_t r = 0; r < k; ++r) {
        aa.push_back(std::abs(a[r]));
        bb.push_back(std::abs(b[r]));
      }
      std::sort(aa.begin(), aa.end());
      std::sort(bb.begin(), bb.end());
      bool initial = true;
      for (std::size_t r = 0; r < k; ++r) {
        initial = initial && aa[r] == static_cast<int>(r) + 1 && bb[r] == static_cast<int>(r) + 1;
      }
      if (!initial) continue;
      int na = 0, nb = 0;
      for (std::size_t r = 0; r < k; ++r) {
        na += a[r] < 0;
        nb += b[r] < 0;
      }
      if ((na - nb) % 2 != 0) return false;
    }
  }
  return true;
}

}  // namespace

bool bruhat_leq_BC(const SignedPermutation& v, const SignedPermutation& w) {
  if (v.size() != w.size()) throw Error(ErrorKind::SizeMismatch, "bruhat_leq_BC");
  return signed_suffix_leq(v, w, false);
}

bool bruhat_leq_D(const SignedPermutation& v, const SignedPermutation& w) {
  if (v.size() != w.size()) throw Error(ErrorKind::SizeMismatch, "bruhat_leq_D");
  auto negs = [](const SignedPermutation& x) {
    return std::count_if(x.begin(), x.end(), [](int y) { return y < 0; });
  };
  if (negs(v) % 2 || negs(w) % 2) throw Error(ErrorKind::OddSignCount, "bruhat_leq_D");
  return signed_suffix_leq(v, w, true);
}

bool leq_ai(const Involution& v, const Involution& w) {
  if (!is_involution(v) || !is_involution(w)) throw Error(ErrorKind::FamilyMismatch, "not an involution");
  return bruhat_leq_A(w, v);
}

bool leq_aii(const Involution& v, const Involution& w) {
  if (fixed_points(v) || fixed_points(w)) throw Error(ErrorKind::FamilyMismatch, "fixed point in AII");
  return leq_ai(v, w);
}

bool leq_family(const Param& c, const Param& d, const Family& f) {
  if (f.uses_clans()) return leq_family(as_clan(c), as_clan(d), f);
  if (!is_valid(c, f) || !is_valid(d, f)) throw Error(ErrorKind::FamilyMismatch, "parameter not in " + f.name());
  return leq_ai(as_involution(c), as_involution(d));
}

Comparison compare(const Param& c, const Param& d, const Family& f) {
  if (c == d) return Comparison::Equal;
  if (leq_family(c, d, f)) return Comparison::Less;
  if (leq_family(d, c, f)) return Comparison::Greater;
  return Comparison::Incomparable;
}

OrderOracle::OrderOracle(const Family& f, const std::vector<Param>& params) : f_(f), params_(&params) {
  if (!f.uses_clans()) return;
  even_bd_ = is_bd(f) && f.length() % 2 == 0;
  for (const auto& x : params) {
    const Clan& c = as_clan(x);
    counts_.push_back(counts(c));
    if (even_bd_) {
      Clan t = twin(c);
      twin_counts_.push_back(counts(t));
      lag_.push_back(lagrangian_data(c));
      twin_lag_.push_back(lagrangian_data(t));
    }
  }
}

bool OrderOracle::leq(std::size_t i, std::size_t j) const {
  if (i == j) return true;
  if (!f_.uses_clans()) return leq_ai(as_involution((*params_)[i]), as_involution((*params_)[j]));
  if (!leq_aiii(counts_[i], counts_[j])) return false;
  if (!even_bd_) return true;
  return leq_aiii(twin_counts_[i], twin_counts_[j]) && lagrangian_ok(lag_[i], lag_[j]) &&
         lagrangian_ok(twin_lag_[i], twin_lag_[j]);
}

}  // namespace orbits
