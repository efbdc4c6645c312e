#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "orbits/family.hpp"
#include "orbits/poset.hpp"
#include "orbits/param.hpp"

namespace fixture {

// A Hasse diagram as text: "family TAG sizes...", then "vertex X" and "cover LOWER UPPER" lines.
struct Hasse {
  orbits::Family family;
  std::set<std::string> vertices;
  std::set<std::pair<std::string, std::string>> covers;
};

inline Hasse load_hasse(const std::string& name) {
  std::ifstream in(std::string(ORBITS_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  Hasse h;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string kind;
    ss >> kind;
    if (kind == "family") {
      std::string tag;
      int a = 0, b = 0;
      ss >> tag >> a >> b;
      if (tag == "AIII") h.family = orbits::Family::aiii(a, b);
      else if (tag == "AI") h.family = orbits::Family::ai(a);
      else if (tag == "CI") h.family = orbits::Family::ci(a);
      else throw std::runtime_error("fixture family " + tag);
    } else if (kind == "vertex") {
      std::string v;
      ss >> v;
      h.vertices.insert(v);
    } else if (kind == "cover") {
      std::string a, b;
      ss >> a >> b;
      h.covers.emplace(a, b);
    }
  }
  return h;
}

// The same shape computed by the library.
inline Hasse compute_hasse(const orbits::Family& f) {
  orbits::OrbitPoset poset(f);
  Hasse h;
  h.family = f;
  for (const auto& x : poset.vertices()) h.vertices.insert(orbits::param_text(x));
  for (auto [i, j] : poset.covers()) h.covers.emplace(orbits::param_text(poset[i]), orbits::param_text(poset[j]));
  return h;
}

}  // namespace fixture
