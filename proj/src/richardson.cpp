#include "orbits/richardson.hpp"

#include "orbits/error.hpp"
#include "orbits/singularity.hpp"

namespace orbits {

namespace {

void require_1212_free(const Clan& c) {
  if (clan_includes(c, parse_clan("1212"))) throw Error(ErrorKind::Contains1212, print_clan(c));
}

// Positions in the first class (ascending), then the rest (ascending).
Permutation split_positions(const Clan& c, bool plus_with_first) {
  Permutation head, tail;
  for (int i = 1; i <= c.size(); ++i) {
    const int x = c[i];
    bool front;
    if (x == kPlus) front = true;
    else if (x == kMinus) front = false;
    else front = (c.partner(i) > i) == plus_with_first;
    (front ? head : tail).push_back(i);
  }
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

}  // namespace

Permutation v_of_clan(const Clan& c) { return split_positions(c, true);
}

Permutation u_of_clan(const Clan& c) { return split_positions(c, false);
}

bool is_grassmannian(const Permutation& w, int p) {
  for (int i = 1; i < static_cast<int>(w.size()); ++i) {
    if (w[i - 1] > w[i] && i != p) return false;
  }
  return true;
}

RichardsonPair richardson_pair_unchecked(const Clan& c) {
  require_1212_free(c);
  const int p = c.p();
  const int n = c.size();
  Permutation w0k(n);
  for (int i = 1; i <= n; ++i) w0k[i - 1] = i <= p ? p + 1 - i : n + p + 1 - i;
  RichardsonPair r;
  r.p = p;
  r.u = compose(w0k, inverse(u_of_clan(c)));
  r.v = inverse(v_of_clan(c));
  r.grassmannian = is_grassmannian(r.u, p) && is_grassmannian(r.v, p);
  return r;
}

RichardsonPair richardson_pair(const Clan& c) {
  RichardsonPair r = richardson_pair_unchecked(c);
  if (!r.grassmannian) {
    throw Error(ErrorKind::GrassmannianViolation,
                print_clan(c) + ": u=" + print_permutation(r.u) + " v=" + print_permutation(r.v));
  }
  return r;
}

}  // namespace orbits
