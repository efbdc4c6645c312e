#pragma once

#include <string>
#include <vector>

#include "orbits/family.hpp"

namespace orbits {

// One-line notation, values 1..n.
using Permutation = std::vector<int>;
// Self-inverse permutation; AII parameters have no fixed points.
using Involution = std::vector<int>;
// Values are nonzero and their absolute values form a permutation of 1..n.
using SignedPermutation = std::vector<int>;

bool is_permutation(const std::vector<int>& w);
bool is_involution(const std::vector<int>& w);
int fixed_points(const Permutation& w);

// Accepts "2143", "[2,1,4,3]", "2,1,4,3" or space-separated values.
Permutation parse_permutation(const std::string& text);
// Contiguous digits when n <= 9, comma-separated otherwise.
std::string print_permutation(const Permutation& w);
SignedPermutation parse_signed_permutation(const std::string& text);
std::string print_signed_permutation(const SignedPermutation& w);

// (f o g)(i) = f(g(i))
Permutation compose(const Permutation& f, const Permutation& g);
Permutation inverse(const Permutation& w);

// Throws NotPermutation for non-permutations and LengthMismatch for a wrong degree.
bool validate_involution(const Involution& w, const Family& f);

// Lexicographic order of one-line notation.
std::vector<Involution> enumerate_involutions(int n, bool fixed_point_free);
Involution open_orbit_involution(const Family& f);
Involution longest_involution(int n);

}  // namespace orbits
