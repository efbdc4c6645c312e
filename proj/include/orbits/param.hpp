#pragma once

#include <string>
#include <variant>
#include <vector>

#include "orbits/clan.hpp"
#include "orbits/family.hpp"
#include "orbits/involution.hpp"

namespace orbits {

// Orbit parameter: a clan for AIII/CI/CII/BDI/DIII, an involution for AI/AII.
using Param = std::variant<Clan, Involution>;

const Clan& as_clan(const Param& x);
const Involution& as_involution(const Param& x);

std::string param_text(const Param& x);
// Parses and validates; throws Error (FamilyMismatch when the parameter is not valid for f).
Param parse_param(const std::string& text, const Family& f);
bool is_valid(const Param& x, const Family& f);

std::vector<Param> enumerate(const Family& f);
Param open_orbit(const Family& f);
bool is_closed_orbit(const Param& x, const Family& f);

}  // namespace orbits
