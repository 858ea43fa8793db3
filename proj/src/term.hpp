#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "types.hpp"

namespace minimod {

enum class TermKind { BVar, FVar, Const, Lam, App, Hole };

// Immutable shared term nodes. Bound variables are de Bruijn indices, so
// structural equality is alpha-equivalence. Free variables are named and
// typed; constants and holes are ground.
class Term {
 public:
  Term() = default;  // null handle; every accessor requires a real node

  static Term bvar(int index, Type type);
  static Term fvar(std::string name, Type type);
  static Term constant(std::string name);
  static Term lam(Type param_type, Term body);
  static Term app(Term fun, Term arg);
  static Term hole(int index);

  bool valid() const { return node_ != nullptr; }
  explicit operator bool() const { return valid(); }

  TermKind kind() const;
  const Type& type() const;
  long node_count() const;
  // Max over bound-variable occurrences of (index - binder depth), or a large
  // negative sentinel when there is none. Negative means locally closed.
  int max_dangling() const;
  bool locally_closed() const { return max_dangling() < 0; }
  bool has_fvar() const;
  bool has_hole() const;
  bool is_ground() const { return type().is_ground(); }

  int index() const;                // BVar, Hole
  const std::string& name() const;  // FVar, Const
  Type param_type() const;          // Lam
  Term body() const;                // Lam
  Term fun() const;                 // App
  Term arg() const;                 // App

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  const Node& node() const;
  std::shared_ptr<const Node> node_;
};

// Adds delta to bound indices >= cutoff. A negative delta must not land any
// index below the cutoff.
Term shift(const Term& t, int delta, int cutoff = 0);

// One beta step: replaces index 0 of `body` by `value` (shifted under
// binders) and decrements the remaining dangling indices.
Term instantiate(const Term& body, const Term& value);

// Turns free variable `name` into a new innermost binder index; `t` must be
// locally closed.
Term abstract_fvar(const Term& t, const std::string& name, const Type& type);

// Simultaneous and capture-free; every replacement must be locally closed.
Term subst_fvars(const Term& t, const std::map<std::string, Term>& repl);
Term subst_consts(const Term& t, const std::map<std::string, Term>& repl);

struct Spine {
  Term head;  // never an App
  std::vector<Term> args;
};
Spine spine(const Term& t);
Term build_spine(Term head, const std::vector<Term>& args);

// A path step selects the lambda body (0), the application function (0), or
// the application argument (1).
using Path = std::vector<int>;
Term subterm_at(const Term& t, const Path& path);
int binder_depth_at(const Term& t, const Path& path);
// Capture-permitting: dangling indices in the replacement bind to lambdas
// along the path.
Term replace_at(const Term& t, const Path& path, const Term& replacement);
// Pre-order paths of all subterms, root first.
std::vector<Path> all_paths(const Term& t);

struct OpenedTerm {
  std::vector<std::string> names;
  std::vector<Type> types;
  Term body;
};
// Peels every leading lambda of a locally closed term, replacing parameters
// with free variables y1..yn (outermost first).
OpenedTerm open_telescope(const Term& t);
Term close_telescope(const OpenedTerm& opened);

// Sorted distinct names of the free variables occurring in t.
std::vector<std::string> fvar_names(const Term& t);

}  // namespace minimod
