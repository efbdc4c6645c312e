#include "orbits/involution.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "orbits/error.hpp"

namespace orbits {

bool is_permutation(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<char> seen(n + 1, 0);
  for (int x : w) {
    if (x < 1 || x > n || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

bool is_involution(const std::vector<int>& w) {
  if (!is_permutation(w)) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[w[i] - 1] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

int fixed_points(const Permutation& w) {
  int k = 0;
  for (std::size_t i = 0; i < w.size(); ++i) k += w[i] == static_cast<int>(i) + 1;
  return k;
}

namespace {

std::vector<int> parse_values(const std::string& text, bool allow_sign) {
  std::string s;
  for (char ch : text) {
    if (ch != '[' && ch != ']' && ch != '(' && ch != ')') s += ch;
  }
  const bool separated = s.find(',') != std::string::npos || s.find(' ') != std::string::npos;
  std::vector<int> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char ch = s[i];
    if (ch == ',' || ch == ' ') {
      ++i;
      continue;
    }
    int sign = 1;
    if (ch == '-') {
      if (!allow_sign) throw Error(ErrorKind::MalformedToken, "negative entry");
      sign = -1;
      ++i;
    }
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw Error(ErrorKind::MalformedToken, "expected a digit in '" + text + "'");
    }
    std::size_t j = i + 1;
    if (separated) {
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    }
    if (j - i > 6) throw Error(ErrorKind::MalformedToken, "entry too long");
    out.push_back(sign * std::stoi(s.substr(i, j - i)));
    i = j;
  }
  if (out.empty()) throw Error(ErrorKind::MalformedToken, "empty permutation");
  return out;
}

}  // namespace

Permutation parse_permutation(const std::string& text) {
  Permutation w = parse_values(text, false);
  if (!is_permutation(w)) throw Error(ErrorKind::NotPermutation, text);
  return w;
}

std::string print_permutation(const Permutation& w) {
  std::string out;
  const bool sep = w.size() > 9;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (sep && i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

SignedPermutation parse_signed_permutation(const std::string& text) {
  SignedPermutation w = parse_values(text, true);
  std::vector<int> a(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) a[i] = std::abs(w[i]);
  if (!is_permutation(a)) throw Error(ErrorKind::NotPermutation, text);
  return w;
}

std::string print_signed_permutation(const SignedPermutation& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) throw Error(ErrorKind::SizeMismatch, "compose");
  Permutation h(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) h[i] = f[g[i] - 1];
  return h;
}

Permutation inverse(const Permutation& w) {
  Permutation v(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) v[w[i] - 1] = static_cast<int>(i) + 1;
  return v;
}

bool validate_involution(const Involution& w, const Family& f) {
  if (!is_permutation(w)) throw Error(ErrorKind::NotPermutation, print_permutation(w));
  if (f.uses_clans()) throw Error(ErrorKind::FamilyMismatch, f.name() + " is a clan family");
  if (static_cast<int>(w.size()) != f.n) throw Error(ErrorKind::LengthMismatch, "degree of " + f.name());
  if (!is_involution(w)) return false;
  if (f.tag == Tag::AII) return w.size() % 2 == 0 && fixed_points(w) == 0;
  return true;
}

std::vector<Involution> enumerate_involutions(int n, bool fixed_point_free) {
  std::vector<Involution> out;
  Involution w(n, 0);
  std::function<void()> rec = [&]() {
    int i = 0;
    while (i < n && w[i] != 0) ++i;
    if (i == n) {
      out.push_back(w);
      return;
    }
    if (!fixed_point_free) {
      w[i] = i + 1;
      rec();
      w[i] = 0;
    }
    for (int j = i + 1; j < n; ++j) {
      if (w[j] != 0) continue;
      w[i] = j + 1;
      w[j] = i + 1;
      rec();
      w[i] = w[j] = 0;
    }
  };
  if (!(fixed_point_free && n % 2)) rec();
  std::sort(out.begin(), out.end());
  return out;
}

Involution longest_involution(int n) {
  Involution w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return w;
}

Involution open_orbit_involution(const Family& f) {
  Involution w(f.n);
  std::iota(w.begin(), w.end(), 1);
  if (f.tag == Tag::AII) {
    for (int i = 0; i + 1 < f.n; i += 2) std::swap(w[i], w[i + 1]);
  } else if (f.tag != Tag::AI) {
    throw Error(ErrorKind::FamilyMismatch, f.name() + " is a clan family");
  }
  return w;
}

}  // namespace orbits
