#pragma once

#include <compare>
#include <memory>
#include <string>

namespace mcat {

/**
 * Element label of a finite-set object.
 *
 * Labels are either atoms (plain user strings) or structured values produced
 * by the monoidal constructions: tagged labels (x,1)/(x,2) from disjoint
 * unions and pairs (x,y) from cartesian products. Equality and ordering are
 * structural, so a tagged label never equals a pair whose display happens to
 * coincide. Immutable and cheap to copy.
 */
class Label {
 public:
  enum class Kind { Atom, Tagged, Pair };

  Label() : Label(atom("")) {}

  static Label atom(std::string name);
  static Label tagged(Label inner, int side);  // side is 1 or 2
  static Label pair(Label left, Label right);

  Kind kind() const;
  bool is_atom() const { return kind() == Kind::Atom; }

  const std::string& atom_name() const;  // Atom only
  Label inner() const;                   // Tagged only
  int side() const;                      // Tagged only
  Label left() const;                    // Pair only
  Label right() const;                   // Pair only

  /// Display form: atoms verbatim, "(x,1)" for tags, "(x,y)" for pairs.
  std::string str() const;

  bool operator==(const Label& other) const;
  std::strong_ordering operator<=>(const Label& other) const;

 private:
  struct Node;
  explicit Label(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static std::strong_ordering compare(const Node* a, const Node* b);

  std::shared_ptr<const Node> node_;
};

}  // namespace mcat
