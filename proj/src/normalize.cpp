#include "normalize.hpp"

#include <vector>

#include "errors.hpp"

namespace minimod {

namespace {

struct Limit {
  long max_nodes;
  void check(const Term& t) const {
    if (t.node_count() > max_nodes)
      throw budget_error("term size limit exceeded during normalization");
  }
};

Term whnf(Term t, const Limit& lim) {
  std::vector<Term> pending;  // arguments, innermost first
  while (true) {
    while (t.kind() == TermKind::App) {
      pending.push_back(t.arg());
      t = t.fun();
    }
    if (t.kind() == TermKind::Lam && !pending.empty()) {
      t = instantiate(t.body(), pending.back());
      pending.pop_back();
      lim.check(t);
      continue;
    }
    break;
  }
  for (auto it = pending.rbegin(); it != pending.rend(); ++it)
    t = Term::app(t, *it);
  return t;
}

Term normalize_rec(const Term& t0, const Limit& lim) {
  Term t = whnf(t0, lim);
  switch (t.kind()) {
    case TermKind::Lam:
      return Term::lam(t.param_type(), normalize_rec(t.body(), lim));
    case TermKind::App: {
      Spine s = spine(t);  // head is not a lambda after whnf
      std::vector<Term> args;
      args.reserve(s.args.size());
      for (const Term& a : s.args) args.push_back(normalize_rec(a, lim));
      return build_spine(s.head, args);
    }
    default:
      return t;
  }
}

}  // namespace

Term beta_normalize(const Term& t, long max_nodes) {
  require(t.valid(), "null term");
  Limit lim{max_nodes};
  lim.check(t);
  return normalize_rec(t, lim);
}

Term eta_expand(const Term& t) {
  require(t.valid(), "null term");
  if (t.kind() == TermKind::Lam)
    return Term::lam(t.param_type(), eta_expand(t.body()));
  Spine s = spine(t);
  require(s.head.kind() != TermKind::Lam, "eta expansion of a beta redex");
  std::vector<Term> args;
  args.reserve(s.args.size());
  for (const Term& a : s.args) args.push_back(eta_expand(a));
  Term core = build_spine(s.head, args);
  std::vector<Type> missing = t.type().argument_types();
  int n = static_cast<int>(missing.size());
  if (n == 0) return core;
  core = shift(core, n);
  for (int i = 0; i < n; ++i)
    core = Term::app(core, eta_expand(Term::bvar(n - 1 - i,
                                                 missing[static_cast<std::size_t>(i)])));
  for (int i = n; i-- > 0;) core = Term::lam(missing[static_cast<std::size_t>(i)], core);
  return core;
}

Term canonicalize(const Term& t, long max_nodes) {
  require(t.valid(), "null term");
  if (is_canonical(t)) return t;
  return eta_expand(beta_normalize(t, max_nodes));
}

namespace {

bool beta_normal_rec(const Term& t) {
  switch (t.kind()) {
    case TermKind::Lam:
      return beta_normal_rec(t.body());
    case TermKind::App:
      return t.fun().kind() != TermKind::Lam && beta_normal_rec(t.fun()) &&
             beta_normal_rec(t.arg());
    default:
      return true;
  }
}

bool eta_long_rec(const Term& t, bool fun_position) {
  if (t.type().is_arrow() && t.kind() != TermKind::Lam && !fun_position)
    return false;
  switch (t.kind()) {
    case TermKind::Lam:
      return eta_long_rec(t.body(), false);
    case TermKind::App:
      return eta_long_rec(t.fun(), true) && eta_long_rec(t.arg(), false);
    default:
      return true;
  }
}

}  // namespace

bool is_beta_normal(const Term& t) {
  require(t.valid(), "null term");
  return beta_normal_rec(t);
}

bool is_eta_long(const Term& t) {
  require(t.valid(), "null term");
  return eta_long_rec(t, false);
}

bool is_canonical(const Term& t) { return is_beta_normal(t) && is_eta_long(t); }

namespace {

Type type_of_rec(const Term& t, const TypingEnv& env, std::vector<Type>& binders) {
  switch (t.kind()) {
    case TermKind::BVar: {
      int i = t.index();
      if (i >= static_cast<int>(binders.size()))
        throw type_error("unbound variable (dangling index)");
      const Type& ty = binders[binders.size() - 1 - static_cast<std::size_t>(i)];
      if (ty != t.type())
        throw type_error("bound variable annotation does not match its binder");
      return ty;
    }
    case TermKind::FVar: {
      auto it = env.find(t.name());
      if (it == env.end())
        throw type_error("unbound variable '" + t.name() + "'");
      if (it->second != t.type())
        throw type_error("variable '" + t.name() + "' annotation mismatch");
      return it->second;
    }
    case TermKind::Const:
      return Type::ground();
    case TermKind::Hole:
      throw type_error("hole in term");
    case TermKind::Lam: {
      Type param = t.param_type();
      binders.push_back(param);
      Type body = type_of_rec(t.body(), env, binders);
      binders.pop_back();
      return Type::arrow(param, body);
    }
    case TermKind::App: {
      Type f = type_of_rec(t.fun(), env, binders);
      Type a = type_of_rec(t.arg(), env, binders);
      if (!f.is_arrow() || f.domain() != a)
        throw type_error("ill-typed application");
      return f.codomain();
    }
  }
  throw internal_error("unreachable term kind");
}

struct SubstMaps {
  const std::map<std::string, Term>& free_vars;
  const std::map<std::string, Term>& constants;
};

void validate_subst_occurrences(const Term& t, const SubstMaps& maps) {
  switch (t.kind()) {
    case TermKind::FVar: {
      auto it = maps.free_vars.find(t.name());
      if (it != maps.free_vars.end() && it->second.type() != t.type())
        throw type_error("replacement for '" + t.name() + "' has type " +
                         it->second.type().to_string() + ", expected " +
                         t.type().to_string());
      break;
    }
    case TermKind::Lam:
      validate_subst_occurrences(t.body(), maps);
      break;
    case TermKind::App:
      validate_subst_occurrences(t.fun(), maps);
      validate_subst_occurrences(t.arg(), maps);
      break;
    default:
      break;
  }
}

Term subst_all_rec(const Term& t, const SubstMaps& maps) {
  switch (t.kind()) {
    case TermKind::FVar: {
      auto it = maps.free_vars.find(t.name());
      return it == maps.free_vars.end() ? t : it->second;
    }
    case TermKind::Const: {
      auto it = maps.constants.find(t.name());
      return it == maps.constants.end() ? t : it->second;
    }
    case TermKind::Lam:
      return Term::lam(t.param_type(), subst_all_rec(t.body(), maps));
    case TermKind::App:
      return Term::app(subst_all_rec(t.fun(), maps), subst_all_rec(t.arg(), maps));
    default:
      return t;
  }
}

}  // namespace

Type type_of(const Term& t, const TypingEnv& env) {
  require(t.valid(), "null term");
  std::vector<Type> binders;
  Type derived = type_of_rec(t, env, binders);
  require(derived == t.type(), "cached type disagrees with derivation");
  return derived;
}

Term substitute(const Term& t, const Substitution& subst) {
  require(t.valid(), "null term");
  for (const auto& entry : subst.free_vars) {
    require(entry.second.valid(), "null replacement");
    if (!entry.second.locally_closed())
      throw invalid_argument_error("replacement for '" + entry.first +
                                   "' has dangling indices");
  }
  for (const auto& entry : subst.constants) {
    require(entry.second.valid(), "null replacement");
    if (!entry.second.locally_closed())
      throw invalid_argument_error("replacement for '" + entry.first +
                                   "' has dangling indices");
    if (!entry.second.type().is_ground())
      throw type_error("constant '" + entry.first +
                       "' must be replaced by a ground term");
  }
  SubstMaps maps{subst.free_vars, subst.constants};
  validate_subst_occurrences(t, maps);
  return canonicalize(subst_all_rec(t, maps));
}

}  // namespace minimod
