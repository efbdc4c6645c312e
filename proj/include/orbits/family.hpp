#pragma once

#include <string>

namespace orbits {

enum class Tag { AI, AII, AIII, CI, CII, BDI, DIII };

// Sizes per tag: AI(n) and AII(n) use the matrix degree n (even for AII);
// AIII, CII and BDI use (p, q); CI(m) stores m in n; DIII(n) has clans of length 2n.
struct Family {
  Tag tag = Tag::AIII;
  int n = 0;
  int p = 0;
  int q = 0;

  static Family ai(int n);
  static Family aii(int n);
  static Family aiii(int p, int q);
  static Family ci(int m);
  static Family cii(int p, int q);
  static Family bdi(int p, int q);
  static Family diii(int n);

  bool uses_clans() const { return tag != Tag::AI && tag != Tag::AII; }
  // Length of a parameter: clan length or permutation degree.
  int length() const;
  std::string name() const;  // e.g. "AIII(2,2)"

  friend bool operator==(const Family&, const Family&) = default;
};

const char* tag_name(Tag t);
bool parse_tag(const std::string& s, Tag& out);

}  // namespace orbits
