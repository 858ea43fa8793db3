#include "term.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "errors.hpp"

namespace minimod {

namespace {
constexpr int kNoDangling = std::numeric_limits<int>::min() / 2;
}

struct Term::Node {
  Node(TermKind k, Type t) : kind(k), type(std::move(t)) {}
  TermKind kind;
  Type type;
  int index = 0;
  std::string name;
  std::shared_ptr<const Node> child0, child1;
  long node_count = 1;
  int max_dangling = kNoDangling;
  bool has_fvar = false;
  bool has_hole = false;
};

const Term::Node& Term::node() const {
  require(node_ != nullptr, "null term handle");
  return *node_;
}

Term Term::bvar(int index, Type type) {
  if (index < 0) throw invalid_argument_error("negative de Bruijn index");
  auto n = std::make_shared<Node>(TermKind::BVar, std::move(type));
  n->index = index;
  n->max_dangling = index;
  return Term(std::move(n));
}

Term Term::fvar(std::string name, Type type) {
  if (name.empty()) throw invalid_argument_error("empty free variable name");
  auto n = std::make_shared<Node>(TermKind::FVar, std::move(type));
  n->name = std::move(name);
  n->has_fvar = true;
  return Term(std::move(n));
}

Term Term::constant(std::string name) {
  if (name.empty()) throw invalid_argument_error("empty constant name");
  auto n = std::make_shared<Node>(TermKind::Const, Type::ground());
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::lam(Type param_type, Term body) {
  require(body.valid(), "null lambda body");
  auto n = std::make_shared<Node>(TermKind::Lam,
                                  Type::arrow(std::move(param_type), body.type()));
  n->node_count = 1 + body.node_count();
  n->max_dangling =
      body.max_dangling() == kNoDangling ? kNoDangling : body.max_dangling() - 1;
  n->has_fvar = body.has_fvar();
  n->has_hole = body.has_hole();
  n->child0 = body.node_;
  return Term(std::move(n));
}

Term Term::app(Term fun, Term arg) {
  require(fun.valid() && arg.valid(), "null application part");
  const Type& ft = fun.type();
  if (!ft.is_arrow()) throw type_error("cannot apply a term of ground type");
  if (ft.domain() != arg.type())
    throw type_error("argument type " + arg.type().to_string() +
                     " does not match expected " + ft.domain().to_string());
  auto n = std::make_shared<Node>(TermKind::App, ft.codomain());
  n->node_count = 1 + fun.node_count() + arg.node_count();
  n->max_dangling = std::max(fun.max_dangling(), arg.max_dangling());
  n->has_fvar = fun.has_fvar() || arg.has_fvar();
  n->has_hole = fun.has_hole() || arg.has_hole();
  n->child0 = fun.node_;
  n->child1 = arg.node_;
  return Term(std::move(n));
}

Term Term::hole(int index) {
  if (index < 0) throw invalid_argument_error("negative hole index");
  auto n = std::make_shared<Node>(TermKind::Hole, Type::ground());
  n->index = index;
  n->has_hole = true;
  return Term(std::move(n));
}

TermKind Term::kind() const { return node().kind; }
const Type& Term::type() const { return node().type; }
long Term::node_count() const { return node().node_count; }
int Term::max_dangling() const { return node().max_dangling; }
bool Term::has_fvar() const { return node().has_fvar; }
bool Term::has_hole() const { return node().has_hole; }

int Term::index() const {
  require(kind() == TermKind::BVar || kind() == TermKind::Hole, "no index here");
  return node().index;
}

const std::string& Term::name() const {
  require(kind() == TermKind::FVar || kind() == TermKind::Const, "no name here");
  return node().name;
}

Type Term::param_type() const {
  require(kind() == TermKind::Lam, "not a lambda");
  return node().type.domain();
}

Term Term::body() const {
  require(kind() == TermKind::Lam, "not a lambda");
  return Term(node().child0);
}

Term Term::fun() const {
  require(kind() == TermKind::App, "not an application");
  return Term(node().child0);
}

Term Term::arg() const {
  require(kind() == TermKind::App, "not an application");
  return Term(node().child1);
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (node_->kind != other.node_->kind) return false;
  if (node_->node_count != other.node_->node_count) return false;
  switch (node_->kind) {
    case TermKind::BVar:
      return node_->index == other.node_->index && node_->type == other.node_->type;
    case TermKind::FVar:
      return node_->name == other.node_->name && node_->type == other.node_->type;
    case TermKind::Const:
      return node_->name == other.node_->name;
    case TermKind::Hole:
      return node_->index == other.node_->index;
    case TermKind::Lam:
      return node_->type.domain() == other.node_->type.domain() &&
             body() == other.body();
    case TermKind::App:
      return fun() == other.fun() && arg() == other.arg();
  }
  return false;
}

namespace {

Term shift_rec(const Term& t, int delta, int cutoff) {
  if (t.max_dangling() < cutoff) return t;
  switch (t.kind()) {
    case TermKind::BVar: {
      int i = t.index();
      if (i < cutoff) return t;
      if (delta < 0 && i + delta < cutoff)
        throw internal_error("shift would move a bound index out of scope");
      return Term::bvar(i + delta, t.type());
    }
    case TermKind::Lam:
      return Term::lam(t.param_type(), shift_rec(t.body(), delta, cutoff + 1));
    case TermKind::App:
      return Term::app(shift_rec(t.fun(), delta, cutoff),
                       shift_rec(t.arg(), delta, cutoff));
    default:
      return t;
  }
}

}  // namespace

Term shift(const Term& t, int delta, int cutoff) {
  require(t.valid(), "null term");
  require(cutoff >= 0, "negative shift cutoff");
  if (delta == 0) return t;
  return shift_rec(t, delta, cutoff);
}

namespace {

Term inst_rec(const Term& t, const Term& value, int depth) {
  if (t.max_dangling() < depth) return t;
  switch (t.kind()) {
    case TermKind::BVar: {
      int i = t.index();
      if (i == depth) {
        require(t.type() == value.type(), "instantiation type mismatch");
        return shift(value, depth);
      }
      if (i > depth) return Term::bvar(i - 1, t.type());
      return t;
    }
    case TermKind::Lam:
      return Term::lam(t.param_type(), inst_rec(t.body(), value, depth + 1));
    case TermKind::App:
      return Term::app(inst_rec(t.fun(), value, depth),
                       inst_rec(t.arg(), value, depth));
    default:
      return t;
  }
}

}  // namespace

Term instantiate(const Term& body, const Term& value) {
  require(body.valid() && value.valid(), "null term");
  return inst_rec(body, value, 0);
}

namespace {

Term abstract_rec(const Term& t, const std::string& name, const Type& type,
                  int depth) {
  if (!t.has_fvar()) return t;
  switch (t.kind()) {
    case TermKind::FVar:
      if (t.name() == name) {
        require(t.type() == type, "abstraction type mismatch");
        return Term::bvar(depth, type);
      }
      return t;
    case TermKind::Lam:
      return Term::lam(t.param_type(), abstract_rec(t.body(), name, type, depth + 1));
    case TermKind::App:
      return Term::app(abstract_rec(t.fun(), name, type, depth),
                       abstract_rec(t.arg(), name, type, depth));
    default:
      return t;
  }
}

Term subst_fvars_rec(const Term& t, const std::map<std::string, Term>& repl) {
  if (!t.has_fvar()) return t;
  switch (t.kind()) {
    case TermKind::FVar: {
      auto it = repl.find(t.name());
      if (it == repl.end()) return t;
      require(it->second.type() == t.type(), "substitution type mismatch");
      return it->second;
    }
    case TermKind::Lam:
      return Term::lam(t.param_type(), subst_fvars_rec(t.body(), repl));
    case TermKind::App:
      return Term::app(subst_fvars_rec(t.fun(), repl),
                       subst_fvars_rec(t.arg(), repl));
    default:
      return t;
  }
}

Term subst_consts_rec(const Term& t, const std::map<std::string, Term>& repl) {
  switch (t.kind()) {
    case TermKind::Const: {
      auto it = repl.find(t.name());
      if (it == repl.end()) return t;
      return it->second;
    }
    case TermKind::Lam:
      return Term::lam(t.param_type(), subst_consts_rec(t.body(), repl));
    case TermKind::App:
      return Term::app(subst_consts_rec(t.fun(), repl),
                       subst_consts_rec(t.arg(), repl));
    default:
      return t;
  }
}

}  // namespace

Term subst_fvars(const Term& t, const std::map<std::string, Term>& repl) {
  require(t.valid(), "null term");
  for (const auto& entry : repl)
    require(entry.second.valid() && entry.second.locally_closed(),
            "replacement must be locally closed");
  return subst_fvars_rec(t, repl);
}

Term subst_consts(const Term& t, const std::map<std::string, Term>& repl) {
  require(t.valid(), "null term");
  for (const auto& entry : repl) {
    require(entry.second.valid() && entry.second.locally_closed(),
            "replacement must be locally closed");
    require(entry.second.is_ground(), "constants are ground");
  }
  return subst_consts_rec(t, repl);
}

Term abstract_fvar(const Term& t, const std::string& name, const Type& type) {
  require(t.valid(), "null term");
  require(t.locally_closed(), "abstraction over a term with dangling indices");
  return abstract_rec(t, name, type, 0);
}

Spine spine(const Term& t) {
  require(t.valid(), "null term");
  Spine s;
  std::vector<Term> rev;
  Term cur = t;
  while (cur.kind() == TermKind::App) {
    rev.push_back(cur.arg());
    cur = cur.fun();
  }
  s.head = cur;
  s.args.assign(rev.rbegin(), rev.rend());
  return s;
}

Term build_spine(Term head, const std::vector<Term>& args) {
  Term cur = std::move(head);
  for (const auto& a : args) cur = Term::app(cur, a);
  return cur;
}

Term subterm_at(const Term& t, const Path& path) {
  Term cur = t;
  for (int step : path) {
    switch (cur.kind()) {
      case TermKind::Lam:
        if (step != 0) throw invalid_argument_error("path step out of range");
        cur = cur.body();
        break;
      case TermKind::App:
        if (step == 0)
          cur = cur.fun();
        else if (step == 1)
          cur = cur.arg();
        else
          throw invalid_argument_error("path step out of range");
        break;
      default:
        throw invalid_argument_error("path descends into a leaf");
    }
  }
  return cur;
}

int binder_depth_at(const Term& t, const Path& path) {
  int depth = 0;
  Term cur = t;
  for (int step : path) {
    switch (cur.kind()) {
      case TermKind::Lam:
        if (step != 0) throw invalid_argument_error("path step out of range");
        ++depth;
        cur = cur.body();
        break;
      case TermKind::App:
        if (step == 0)
          cur = cur.fun();
        else if (step == 1)
          cur = cur.arg();
        else
          throw invalid_argument_error("path step out of range");
        break;
      default:
        throw invalid_argument_error("path descends into a leaf");
    }
  }
  return depth;
}

namespace {

Term replace_rec(const Term& t, const Path& path, std::size_t at, const Term& r) {
  if (at == path.size()) {
    if (r.type() != t.type())
      throw type_error("replacement type " + r.type().to_string() +
                       " does not match " + t.type().to_string());
    return r;
  }
  int step = path[at];
  switch (t.kind()) {
    case TermKind::Lam:
      if (step != 0) throw invalid_argument_error("path step out of range");
      return Term::lam(t.param_type(), replace_rec(t.body(), path, at + 1, r));
    case TermKind::App:
      if (step == 0)
        return Term::app(replace_rec(t.fun(), path, at + 1, r), t.arg());
      if (step == 1)
        return Term::app(t.fun(), replace_rec(t.arg(), path, at + 1, r));
      throw invalid_argument_error("path step out of range");
    default:
      throw invalid_argument_error("path descends into a leaf");
  }
}

void paths_rec(const Term& t, Path& cur, std::vector<Path>& out) {
  out.push_back(cur);
  switch (t.kind()) {
    case TermKind::Lam:
      cur.push_back(0);
      paths_rec(t.body(), cur, out);
      cur.pop_back();
      break;
    case TermKind::App:
      cur.push_back(0);
      paths_rec(t.fun(), cur, out);
      cur.back() = 1;
      paths_rec(t.arg(), cur, out);
      cur.pop_back();
      break;
    default:
      break;
  }
}

}  // namespace

Term replace_at(const Term& t, const Path& path, const Term& replacement) {
  require(t.valid() && replacement.valid(), "null term");
  return replace_rec(t, path, 0, replacement);
}

std::vector<Path> all_paths(const Term& t) {
  require(t.valid(), "null term");
  std::vector<Path> out;
  Path cur;
  paths_rec(t, cur, out);
  return out;
}

OpenedTerm open_telescope(const Term& t) {
  require(t.valid(), "null term");
  require(t.locally_closed(), "telescope of a term with dangling indices");
  OpenedTerm o;
  Term cur = t;
  while (cur.kind() == TermKind::Lam) {
    o.types.push_back(cur.param_type());
    cur = cur.body();
  }
  o.names.reserve(o.types.size());
  for (std::size_t i = 0; i < o.types.size(); ++i)
    o.names.push_back("y" + std::to_string(i + 1));
  o.body = cur;
  for (std::size_t i = o.types.size(); i-- > 0;)
    o.body = instantiate(o.body, Term::fvar(o.names[i], o.types[i]));
  return o;
}

Term close_telescope(const OpenedTerm& opened) {
  require(opened.body.valid(), "null term");
  require(opened.names.size() == opened.types.size(), "telescope shape mismatch");
  require(opened.body.locally_closed(), "telescope body with dangling indices");
  Term cur = opened.body;
  for (std::size_t i = opened.names.size(); i-- > 0;)
    cur = Term::lam(opened.types[i],
                    abstract_fvar(cur, opened.names[i], opened.types[i]));
  return cur;
}

namespace {

void fvars_rec(const Term& t, std::set<std::string>& out) {
  if (!t.has_fvar()) return;
  switch (t.kind()) {
    case TermKind::FVar:
      out.insert(t.name());
      break;
    case TermKind::Lam:
      fvars_rec(t.body(), out);
      break;
    case TermKind::App:
      fvars_rec(t.fun(), out);
      fvars_rec(t.arg(), out);
      break;
    default:
      break;
  }
}

}  // namespace

std::vector<std::string> fvar_names(const Term& t) {
  require(t.valid(), "null term");
  std::set<std::string> names;
  fvars_rec(t, names);
  return std::vector<std::string>(names.begin(), names.end());
}

}  // namespace minimod
