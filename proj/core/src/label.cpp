#include "mcat/label.hpp"

#include <cassert>

namespace mcat {

struct Label::Node {
  Kind kind;
  std::string name;                           // Atom
  std::shared_ptr<const Node> first, second;  // Tagged: first; Pair: both
  int side = 0;                               // Tagged
};

Label Label::atom(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->name = std::move(name);
  return Label(std::move(node));
}

Label Label::tagged(Label inner, int side) {
  assert(side == 1 || side == 2);
  auto node = std::make_shared<Node>();
  node->kind = Kind::Tagged;
  node->first = std::move(inner.node_);
  node->side = side;
  return Label(std::move(node));
}

Label Label::pair(Label left, Label right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Pair;
  node->first = std::move(left.node_);
  node->second = std::move(right.node_);
  return Label(std::move(node));
}

Label::Kind Label::kind() const { return node_->kind; }

const std::string& Label::atom_name() const {
  assert(node_->kind == Kind::Atom);
  return node_->name;
}

Label Label::inner() const {
  assert(node_->kind == Kind::Tagged);
  return Label(node_->first);
}

int Label::side() const {
  assert(node_->kind == Kind::Tagged);
  return node_->side;
}

Label Label::left() const {
  assert(node_->kind == Kind::Pair);
  return Label(node_->first);
}

Label Label::right() const {
  assert(node_->kind == Kind::Pair);
  return Label(node_->second);
}

std::strong_ordering Label::compare(const Node* a, const Node* b) {
  if (a == b) return std::strong_ordering::equal;
  if (auto c = static_cast<int>(a->kind) <=> static_cast<int>(b->kind); c != 0) return c;
  switch (a->kind) {
    case Kind::Atom:
      return a->name.compare(b->name) <=> 0;
    case Kind::Tagged:
      if (auto c = a->side <=> b->side; c != 0) return c;
      return compare(a->first.get(), b->first.get());
    case Kind::Pair:
      if (auto c = compare(a->first.get(), b->first.get()); c != 0) return c;
      return compare(a->second.get(), b->second.get());
  }
  return std::strong_ordering::equal;
}

bool Label::operator==(const Label& other) const {
  return compare(node_.get(), other.node_.get()) == 0;
}

std::strong_ordering Label::operator<=>(const Label& other) const {
  return compare(node_.get(), other.node_.get());
}

std::string Label::str() const {
  switch (node_->kind) {
    case Kind::Atom:
      return node_->name;
    case Kind::Tagged:
      return "(" + inner().str() + "," + std::to_string(node_->side) + ")";
    case Kind::Pair:
      return "(" + left().str() + "," + right().str() + ")";
  }
  return {};
}

}  // namespace mcat
