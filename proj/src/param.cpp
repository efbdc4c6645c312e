#include "orbits/param.hpp"

#include "orbits/error.hpp"

namespace orbits {

const Clan& as_clan(const Param& x) {
  if (auto* c = std::get_if<Clan>(&x)) return *c;
  throw Error(ErrorKind::FamilyMismatch, "expected a clan");
}

const Involution& as_involution(const Param& x) {
  if (auto* w = std::get_if<Involution>(&x)) return *w;
  throw Error(ErrorKind::FamilyMismatch, "expected an involution");
}

std::string param_text(const Param& x) {
  if (auto* c = std::get_if<Clan>(&x)) return print_clan(*c);
  return print_permutation(std::get<Involution>(x));
}

Param parse_param(const std::string& text, const Family& f) {
  if (f.uses_clans()) {
    Clan c = parse_clan(text);
    if (!validate_family(c, f)) throw Error(ErrorKind::FamilyMismatch, text + " is not valid for " + f.name());
    return c;
  }
  Permutation w = parse_permutation(text);
  if (!validate_involution(w, f)) throw Error(ErrorKind::FamilyMismatch, text + " is not valid for " + f.name());
  return w;
}

bool is_valid(const Param& x, const Family& f) {
  if (auto* c = std::get_if<Clan>(&x)) return fits_family(*c, f);
  const auto& w = std::get<Involution>(x);
  if (f.uses_clans() || static_cast<int>(w.size()) != f.n || !is_involution(w)) return false;
  return f.tag == Tag::AI || fixed_points(w) == 0;
}

std::vector<Param> enumerate(const Family& f) {
  std::vector<Param> out;
  if (f.uses_clans()) {
    for (auto& c : enumerate_clans(f)) out.emplace_back(std::move(c));
  } else {
    for (auto& w : enumerate_involutions(f.n, f.tag == Tag::AII)) out.emplace_back(std::move(w));
  }
  return out;
}

Param open_orbit(const Family& f) {
  if (f.uses_clans()) return open_orbit_clan(f);
  return open_orbit_involution(f);
}

bool is_closed_orbit(const Param& x, const Family& f) {
  if (auto* c = std::get_if<Clan>(&x)) return is_closed_clan(*c, f);
  return std::get<Involution>(x) == longest_involution(f.n);
}

}  // namespace orbits
