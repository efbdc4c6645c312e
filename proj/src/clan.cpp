#include "orbits/clan.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "orbits/error.hpp"

namespace orbits {

Clan::Clan(std::vector<int> entries) {
  int top = 0;
  for (int x : entries) {
    if (x == 0 || x < kMinus) throw Error(ErrorKind::MalformedToken, "bad clan entry");
    top = std::max(top, x);
  }
  std::vector<int> count(static_cast<std::size_t>(top) + 1, 0);
  for (int x : entries) {
    if (!is_sign(x)) ++count[x];
  }
  for (int label = 1; label <= top; ++label) {
    if (count[label] != 0 && count[label] != 2) {
      throw Error(ErrorKind::LabelCountError,
                  "label " + std::to_string(label) + " occurs " + std::to_string(count[label]) + " times");
    }
  }
  // count[] is reused as the relabeling table
  std::fill(count.begin(), count.end(), 0);
  int next = 0;
  for (int& x : entries) {
    if (is_sign(x)) continue;
    if (count[x] == 0) count[x] = ++next;
    x = count[x];
  }
  e_ = std::move(entries);
  npairs_ = next;
}

int Clan::p() const { return npairs_ + static_cast<int>(std::count(e_.begin(), e_.end(), kPlus)); }
int Clan::q() const { return npairs_ + static_cast<int>(std::count(e_.begin(), e_.end(), kMinus)); }

std::vector<std::pair<int, int>> Clan::pairs() const {
  std::vector<int> first(npairs_ + 1, 0);
  std::vector<std::pair<int, int>> out;
  out.reserve(npairs_);
  for (int i = 1; i <= size(); ++i) {
    int x = e_[i - 1];
    if (is_sign(x)) continue;
    if (first[x] == 0) {
      first[x] = i;
      out.emplace_back(i, 0);
    } else {
      out[x - 1].second = i;  // labels are numbered by first occurrence
    }
  }
  return out;
}

int Clan::partner(int pos) const {
  int x = e_[pos - 1];
  if (is_sign(x)) return 0;
  for (int i = 1; i <= size(); ++i) {
    if (i != pos && e_[i - 1] == x) return i;
  }
  return 0;
}

std::size_t ClanHash::operator()(const Clan& c) const {
  std::size_t h = 1469598103934665603ull;
  for (int x : c.entries()) h = (h ^ static_cast<std::size_t>(x + 3)) * 1099511628211ull;
  return h;
}

Clan parse_clan(const std::string& text) {
  const bool spaced = text.find(' ') != std::string::npos;
  std::vector<int> e;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == ' ') {
      ++i;
    } else if (ch == '+') {
      e.push_back(kPlus);
      ++i;
    } else if (ch == '-') {
      e.push_back(kMinus);
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i + 1;
      if (spaced) {
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      }
      std::string tok = text.substr(i, j - i);
      if (tok[0] == '0') throw Error(ErrorKind::MalformedToken, "label '" + tok + "'");
      if (tok.size() > 6) throw Error(ErrorKind::MalformedToken, "label too long");
      e.push_back(std::stoi(tok));
      i = j;
    } else {
      throw Error(ErrorKind::MalformedToken, std::string("unexpected character '") + ch + "'");
    }
  }
  if (e.empty()) throw Error(ErrorKind::MalformedToken, "empty clan");
  return Clan(std::move(e));
}

std::string print_clan(const Clan& c) {
  const bool spaced = c.num_pairs() > 9;
  std::string out;
  for (int x : c.entries()) {
    if (spaced && !out.empty()) out += ' ';
    if (x == kPlus) out += '+';
    else if (x == kMinus) out += '-';
    else out += std::to_string(x);
  }
  return out;
}

Clan negate(const Clan& c) {
  std::vector<int> e = c.entries();
  for (int& x : e) x = flip_sign(x);
  return Clan(std::move(e));
}

Clan twin(const Clan& c) {
  std::vector<int> e = c.entries();
  int h = c.size() / 2;
  if (h > 0) std::swap(e[h - 1], e[h]);
  return Clan(std::move(e));
}

namespace {

// Mirror condition: position i and N+1-i hold equal signs (skew: opposite signs),
// and the mirror of every pair is a pair.
bool mirrored(const Clan& c, bool skew) {
  const int n = c.size();
  for (int i = 1; i <= n; ++i) {
    int x = c[i];
    int y = c[n + 1 - i];
    if (is_sign(x) != is_sign(y)) return false;
    if (is_sign(x) && (skew ? x == y : x != y)) return false;
  }
  for (auto [s, t] : c.pairs()) {
    if (c.partner(n + 1 - t) != n + 1 - s) return false;
  }
  return true;
}

bool has_self_mirror_pair(const Clan& c) {
  for (auto [s, t] : c.pairs()) {
    if (s + t == c.size() + 1) return true;
  }
  return false;
}

bool even_left_half(const Clan& c) {
  const int h = c.size() / 2;
  int count = 0;
  for (int i = 1; i <= h; ++i) {
    if (c[i] == kPlus) ++count;
  }
  for (auto [s, t] : c.pairs()) {
    if (t <= h) ++count;
  }
  return count % 2 == 0;
}

}  // namespace

bool fits_family(const Clan& c, const Family& f) {
  if (!f.uses_clans() || c.size() != f.length()) return false;
  const int n = c.size();
  switch (f.tag) {
    case Tag::AIII: return c.p() == f.p && c.q() == f.q;
    case Tag::CII:
      return c.p() == 2 * f.p && c.q() == 2 * f.q && mirrored(c, false) && !has_self_mirror_pair(c);
    case Tag::CI: return mirrored(c, true);
    case Tag::BDI:
      if (c.p() != f.p || c.q() != f.q || !mirrored(c, false)) return false;
      return n % 2 == 0 || is_sign(c[n / 2 + 1]);
    case Tag::DIII: return mirrored(c, true) && !has_self_mirror_pair(c) && even_left_half(c);
    default: return false;
  }
}

bool validate_family(const Clan& c, const Family& f) {
  if (!f.uses_clans()) throw Error(ErrorKind::FamilyMismatch, f.name() + " is not a clan family");
  if (c.size() != f.length()) {
    throw Error(ErrorKind::LengthMismatch, "clan length " + std::to_string(c.size()) + " for " + f.name());
  }
  return fits_family(c, f);
}

std::vector<Clan> enumerate_clans(const Family& f) {
  std::vector<Clan> out;
  if (!f.uses_clans()) return out;
  const int n = f.length();
  std::vector<int> cur;
  std::vector<int> open;  // labels opened but not yet closed, ascending
  int next = 1;
  // Options at each position in encoding order: +, -, then labels ascending
  // (closing an open label, or opening the next fresh one, which is the largest).
  std::function<void()> rec = [&]() {
    const int pos = static_cast<int>(cur.size());
    if (pos == n) {
      if (open.empty()) {
        Clan c(cur);
        if (fits_family(c, f)) out.push_back(std::move(c));
      }
      return;
    }
    const int remaining = n - pos;
    if (static_cast<int>(open.size()) < remaining) {
      for (int s : {kPlus, kMinus}) {
        cur.push_back(s);
        rec();
        cur.pop_back();
      }
    }
    for (std::size_t k = 0; k < open.size(); ++k) {
      int label = open[k];
      cur.push_back(label);
      open.erase(open.begin() + static_cast<long>(k));
      rec();
      open.insert(open.begin() + static_cast<long>(k), label);
      cur.pop_back();
    }
    if (static_cast<int>(open.size()) + 1 < remaining) {
      cur.push_back(next);
      open.push_back(next);
      ++next;
      rec();
      --next;
      open.pop_back();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

namespace {

std::vector<int> nested(int p, int q) {
  std::vector<int> e;
  const int k = std::min(p, q);
  for (int i = 1; i <= k; ++i) e.push_back(i);
  for (int i = 0; i < std::abs(p - q); ++i) e.push_back(p >= q ? kPlus : kMinus);
  for (int i = k; i >= 1; --i) e.push_back(i);
  return e;
}

}  // namespace

Clan open_orbit_clan(const Family& f) {
  switch (f.tag) {
    case Tag::AIII:
    case Tag::BDI: return Clan(nested(f.p, f.q));
    case Tag::CI: return Clan(nested(f.n, f.n));
    case Tag::CII: {
      const int k = std::min(f.p, f.q);
      std::vector<int> e;
      for (int i = 1; i <= 2 * k; ++i) e.push_back(i);
      for (int i = 0; i < 2 * std::abs(f.p - f.q); ++i) e.push_back(f.p >= f.q ? kPlus : kMinus);
      for (int j = k; j >= 1; --j) {
        e.push_back(2 * j - 1);
        e.push_back(2 * j);
      }
      return Clan(e);
    }
    case Tag::DIII: {
      const int k = f.n / 2;
      std::vector<int> e;
      for (int i = 1; i <= 2 * k; ++i) e.push_back(i);
      if (f.n % 2) {
        e.push_back(kPlus);
        e.push_back(kMinus);
      }
      for (int j = k; j >= 1; --j) {
        e.push_back(2 * j - 1);
        e.push_back(2 * j);
      }
      Clan c(e);
      return fits_family(c, f) ? c : negate(c);
    }
    default: throw Error(ErrorKind::FamilyMismatch, f.name() + " is not a clan family");
  }
}

bool is_closed_clan(const Clan& c, const Family& f) {
  if (c.num_pairs() == 0) return true;
  const int n = c.size();
  if (f.tag == Tag::BDI && n % 2 == 0 && c.num_pairs() == 1) {
    return c[n / 2] > 0 && c[n / 2] == c[n / 2 + 1];
  }
  return false;
}

}  // namespace orbits
