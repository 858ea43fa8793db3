#pragma once

#include <memory>
#include <string>
#include <vector>

namespace minimod {

// Simple types over the single ground type `o`.
class Type {
 public:
  static Type ground();
  static Type arrow(Type domain, Type codomain);
  // Builds arguments[0] -> ... -> arguments[n-1] -> o.
  static Type function(const std::vector<Type>& arguments);

  bool is_ground() const { return node_->dom == nullptr; }
  bool is_arrow() const { return !is_ground(); }
  Type domain() const;
  Type codomain() const;

  // Number of leading arrows in A1 -> ... -> An -> o.
  int arity() const { return node_->arity; }
  // Ground is order 1; an arrow has order max(order(dom) + 1, order(cod)).
  int order() const { return node_->order; }
  // The A1..An of the unique decomposition A1 -> ... -> An -> o.
  std::vector<Type> argument_types() const;

  bool operator==(const Type& other) const;
  bool operator!=(const Type& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  struct Node {
    std::shared_ptr<const Node> dom, cod;
    int arity;
    int order;
  };
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// An ordered set of distinct ground constant names.
class Signature {
 public:
  explicit Signature(std::vector<std::string> constants);

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  bool contains(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;
  Signature extended(const std::vector<std::string>& extra) const;

  // Stable cache key: names joined with commas.
  std::string key() const;

  // Plain identifiers only; generated names carry a leading '#'.
  static bool valid_name(const std::string& name, bool allow_generated);

 private:
  std::vector<std::string> names_;
};

}  // namespace minimod
