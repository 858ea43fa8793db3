#include "types.hpp"

#include <algorithm>

#include "errors.hpp"

namespace minimod {

Type Type::ground() {
  static const auto node = std::make_shared<const Node>(Node{nullptr, nullptr, 0, 1});
  return Type(node);
}

Type Type::arrow(Type domain, Type codomain) {
  auto node = std::make_shared<const Node>(
      Node{domain.node_, codomain.node_, codomain.arity() + 1,
           std::max(domain.order() + 1, codomain.order())});
  return Type(std::move(node));
}

Type Type::function(const std::vector<Type>& arguments) {
  Type result = ground();
  for (auto it = arguments.rbegin(); it != arguments.rend(); ++it)
    result = arrow(*it, result);
  return result;
}

Type Type::domain() const {
  require(is_arrow(), "domain of ground type");
  return Type(node_->dom);
}

Type Type::codomain() const {
  require(is_arrow(), "codomain of ground type");
  return Type(node_->cod);
}

std::vector<Type> Type::argument_types() const {
  std::vector<Type> args;
  args.reserve(static_cast<std::size_t>(arity()));
  Type cur = *this;
  while (cur.is_arrow()) {
    args.push_back(cur.domain());
    cur = cur.codomain();
  }
  return args;
}

bool Type::operator==(const Type& other) const {
  if (node_ == other.node_) return true;
  if (is_ground() || other.is_ground()) return is_ground() && other.is_ground();
  return domain() == other.domain() && codomain() == other.codomain();
}

namespace {

void print_type(const Type& t, std::string& out) {
  if (t.is_ground()) {
    out += 'o';
    return;
  }
  if (t.domain().is_arrow()) {
    out += '(';
    print_type(t.domain(), out);
    out += ')';
  } else {
    print_type(t.domain(), out);
  }
  out += "->";
  print_type(t.codomain(), out);
}

}  // namespace

std::string Type::to_string() const {
  std::string out;
  print_type(*this, out);
  return out;
}

Signature::Signature(std::vector<std::string> constants) : names_(std::move(constants)) {
  if (names_.empty()) throw invalid_argument_error("signature needs at least one constant");
  for (const auto& name : names_) {
    if (!valid_name(name, /*allow_generated=*/true))
      throw invalid_argument_error("invalid constant name: '" + name + "'");
  }
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw invalid_argument_error("duplicate constant name: '" + names_[i] + "'");
}

bool Signature::contains(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::size_t Signature::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  require(it != names_.end(), "constant not in signature");
  return static_cast<std::size_t>(it - names_.begin());
}

Signature Signature::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> all = names_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Signature(std::move(all));
}

std::string Signature::key() const {
  std::string out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += ',';
    out += names_[i];
  }
  return out;
}

bool Signature::valid_name(const std::string& name, bool allow_generated) {
  if (name.empty()) return false;
  std::size_t start = 0;
  if (name[0] == '#') {
    if (!allow_generated || name.size() == 1) return false;
    start = 1;
  }
  for (std::size_t i = start; i < name.size(); ++i) {
    char c = name[i];
    bool alpha = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    bool digit = (c >= '0' && c <= '9');
    if (i == start && !alpha) return false;
    if (!alpha && !digit && c != '_') return false;
  }
  return true;
}

}  // namespace minimod
