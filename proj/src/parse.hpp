#pragma once

#include <string>

#include "term.hpp"
#include "types.hpp"

namespace minimod {

// Grammar:
//   Type  ::= "o" | Type "->" Type (right assoc) | "(" Type ")"
//   Term  ::= ident | "\" ident ":" Type "." Term | Term Term (left assoc)
//           | "(" Term ")"
//   ident ::= [A-Za-z][A-Za-z0-9_]* ; a leading "#" marks generated constants
Type parse_type(const std::string& text);

// Identifiers resolve innermost binder first, then constants of sig. The
// result is closed and canonical (beta-normal, eta-long).
Term parse_term(const std::string& text, const Signature& sig);

}  // namespace minimod
