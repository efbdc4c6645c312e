#pragma once

#include "orbits/clan.hpp"
#include "orbits/involution.hpp"

namespace orbits {

struct RichardsonPair {
  Permutation u;
  Permutation v;
  int p = 0;  // the only possible descent
  bool grassmannian = false;
};

// Defined for every clan; the worked example (12+-12) itself includes 1212.
Permutation v_of_clan(const Clan& c);
Permutation u_of_clan(const Clan& c);

// u = w0K o u(c)^-1 and v = v(c)^-1 with (f o g)(i) = f(g(i)); w0K reverses 1..p and p+1..p+q.
// Throws Contains1212, and GrassmannianViolation if either result has a descent away from p.
RichardsonPair richardson_pair(const Clan& c);
// Same construction without the assertion; grassmannian records the check.
RichardsonPair richardson_pair_unchecked(const Clan& c);

// Every descent of w is at position p.
bool is_grassmannian(const Permutation& w, int p);

}  // namespace orbits
