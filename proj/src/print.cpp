#include "print.hpp"

#include <set>
#include <vector>

#include "errors.hpp"

namespace minimod {

namespace {

void collect_leaf_names(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::FVar:
    case TermKind::Const:
      out.insert(t.name());
      break;
    case TermKind::Lam:
      collect_leaf_names(t.body(), out);
      break;
    case TermKind::App:
      collect_leaf_names(t.fun(), out);
      collect_leaf_names(t.arg(), out);
      break;
    default:
      break;
  }
}

struct Printer {
  const std::set<std::string>& taken;
  std::vector<std::string> binders;  // innermost last

  std::string binder_name() const {
    std::string name = "y" + std::to_string(binders.size());
    while (taken.count(name)) name += '_';
    return name;
  }

  void print(const Term& t, std::string& out) {
    switch (t.kind()) {
      case TermKind::BVar: {
        int i = t.index();
        if (i < static_cast<int>(binders.size()))
          out += binders[binders.size() - 1 - static_cast<std::size_t>(i)];
        else  // dangling reference; debug form only, not reparseable
          out += "^" + std::to_string(i - static_cast<int>(binders.size()));
        break;
      }
      case TermKind::FVar:
      case TermKind::Const:
        out += t.name();
        break;
      case TermKind::Hole:
        out += "[]" + std::to_string(t.index());
        break;
      case TermKind::Lam: {
        std::string name = binder_name();
        out += '\\';
        out += name;
        out += ':';
        out += t.param_type().to_string();
        out += ". ";
        binders.push_back(name);
        print(t.body(), out);
        binders.pop_back();
        break;
      }
      case TermKind::App: {
        if (t.fun().kind() == TermKind::Lam) {
          out += '(';
          print(t.fun(), out);
          out += ')';
        } else {
          print(t.fun(), out);
        }
        out += ' ';
        TermKind ak = t.arg().kind();
        if (ak == TermKind::App || ak == TermKind::Lam) {
          out += '(';
          print(t.arg(), out);
          out += ')';
        } else {
          print(t.arg(), out);
        }
        break;
      }
    }
  }
};

}  // namespace

std::string print_term(const Term& t) {
  require(t.valid(), "null term");
  std::set<std::string> taken;
  collect_leaf_names(t, taken);
  Printer printer{taken, {}};
  std::string out;
  printer.print(t, out);
  return out;
}

}  // namespace minimod
