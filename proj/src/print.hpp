#pragma once

#include <string>

#include "term.hpp"

namespace minimod {

// Canonical text form. Binders are renamed to y0, y1, ... by nesting depth
// (suffixing '_' on collision with a constant or free variable in t), so
// alpha-equivalent terms print identically.
std::string print_term(const Term& t);

}  // namespace minimod
