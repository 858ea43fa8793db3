#pragma once

#include <map>
#include <string>

#include "term.hpp"
#include "types.hpp"

namespace minimod {

// Ceiling on intermediate term sizes during reduction.
inline constexpr long kDefaultMaxTermNodes = 1'000'000;

// Leftmost-outermost reduction to the unique beta-normal form.
Term beta_normalize(const Term& t, long max_nodes = kDefaultMaxTermNodes);

// Type-directed full eta-expansion of a beta-normal term: every spine ends
// at ground type, every arrow-typed position is an abstraction.
Term eta_expand(const Term& t);

// Canonical form: eta_expand of beta_normalize. Idempotent.
Term canonicalize(const Term& t, long max_nodes = kDefaultMaxTermNodes);

bool is_beta_normal(const Term& t);
bool is_eta_long(const Term& t);
bool is_canonical(const Term& t);

using TypingEnv = std::map<std::string, Type>;

// Re-derives the type bottom-up, validating the cached types along the way.
Type type_of(const Term& t, const TypingEnv& env);

struct Substitution {
  std::map<std::string, Term> free_vars;   // name -> locally closed term
  std::map<std::string, Term> constants;   // name -> locally closed ground term
};

// Simultaneous capture-free substitution followed by canonicalization.
Term substitute(const Term& t, const Substitution& subst);

}  // namespace minimod
