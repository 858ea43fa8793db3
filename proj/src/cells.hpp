#pragma once

#include <string>
#include <vector>

#include "term.hpp"
#include "types.hpp"

namespace minimod {

// Multi-hole context: a term skeleton whose Hole leaves are numbered
// 0..hole_count-1 in leftmost-outermost order, each index occurring once.
struct MultiContext {
  Term skeleton;
  int hole_count = 0;
  std::vector<Path> hole_paths;
  std::vector<int> hole_depths;  // binder depth of each hole in the skeleton
};

// A subterm remembered together with the binder depth it was cut from; its
// dangling indices are relative to that depth.
struct Located {
  Term term;
  int depth = 0;
};

// Validates the hole numbering of a skeleton and records hole positions.
MultiContext make_context(Term skeleton);

// Fills hole k with fillers[k], shifting each filler from its recorded depth
// to the hole's depth. Capture-permitting: a filler's dangling indices bind
// to lambdas of the skeleton above its hole.
Term plug(const MultiContext& ctx, const std::vector<Located>& fillers);

// head (C_1 ...) ... (C_p ...): a head variable applied to closed multi-hole
// argument contexts; holes are numbered across the whole spine.
struct Cell {
  std::string head_name;
  Type head_type;
  MultiContext body;  // skeleton = the full applied spine
  int hole_count() const { return body.hole_count; }
};

// Argument contexts C_1..C_p of the cell (subtrees of the spine skeleton).
std::vector<Term> cell_args(const Cell& cell);

// The closed term \x_1...x_K. C_j[x_1]...[x_K]: every hole of the cell
// becomes a bound variable, whether or not it occurs in C_j.
Term cell_context_term(const Cell& cell, std::size_t arg_index);

struct CellSplit {
  Cell cell;
  std::vector<Located> fillers;
};

struct ShellSplit {
  MultiContext shell;
  std::vector<Located> fillers;
};

// True iff every subterm of the opened body headed by one of the leading
// binders is closed under the telescope (free variables only among the
// leading binders). Input must be closed.
bool is_cellular(const Term& t);

// Cellular, or a head spine each of whose argument closures (abstraction of
// the argument over the full telescope) is cellular.
bool is_semi_cellular(const Term& t);

// Cellular, and every cell's argument contexts and fillers are hereditarily
// cellular once closed.
bool is_hereditary_cellular(const Term& t);

// Factors a ground spine t = (y v_1...v_p), y named in `outer`, into a cell
// with closed argument contexts and the carved fillers: the maximal ground
// subterms of the v_j headed by an outer variable or by a binder outside t.
// Fillers never reference binders inside the cell; a term where one would
// have to is not factorable and is rejected.
CellSplit factor_cell(const Term& t, const std::vector<std::string>& outer);

// Splits a ground spine u = (y_i u_1...u_p) into the minimal context M with
// holes exactly at the maximal proper ground subterms headed by variables in
// `outer`, strictly below the root. Fillers may dangle into M's binders.
ShellSplit minimal_shell(const Term& u, const std::vector<std::string>& outer);

// t = \y...M[u] with u the ground subterm at hole_path; returns \y...M[M[u]].
Term stretch(const Term& t, const Path& hole_path);

// t = \y...M[S[w_1..w_K]] with a second occurrence of the same cell S inside
// filler k: ...[N[S[v_1..v_K]]]... at inner_cell. Collapses the inner
// occurrence to v_k. The common cell is inferred as the least general cell
// matching both occurrences; holes are numbered from 0.
Term shrink(const Term& t, const Path& outer_cell, const Path& inner_cell, int k);

// Equivalent cellular form of a semi-cellular term; cellular input is
// returned unchanged.
Term cellularize_semi(const Term& t);

// Equivalent cellular form of any closed canonical term.
Term cellularize(const Term& t);

}  // namespace minimod
