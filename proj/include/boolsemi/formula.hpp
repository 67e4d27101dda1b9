#ifndef BOOLSEMI_FORMULA_HPP
#define BOOLSEMI_FORMULA_HPP

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "boolsemi/algebra.hpp"

namespace boolsemi {

/// Immutable propositional formula tree. Copies share nodes.
class Formula {
 public:
  enum class Kind { constant, atom, negation, conjunction, disjunction, implication, equivalence };

  static Formula constant(bool value);
  static Formula atom(std::string name);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);

  Kind kind() const noexcept;
  /// Constants only.
  bool value() const;
  /// Atoms only.
  const std::string& name() const;
  std::size_t arity() const noexcept;
  const Formula& operand(std::size_t i) const;

  /// Structural equality.
  friend bool operator==(const Formula& lhs, const Formula& rhs);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Precedence, loosest first: <->, -> (right-assoc), |, &, !.
/// Unicode aliases ¬ ∧ ∨ → ↔ and the constants ⊤ ⊥ are accepted.
/// Throws ParseError with a byte offset.
Formula parse(std::string_view text);

/// Minimal-parenthesis rendering; parse(print(f)) == f.
std::string print(const Formula& f);

using AtomBinding = std::map<std::string, unsigned, std::less<>>;

/// Canonical truth-table element of `f` in a free Boolean algebra.
/// Throws NameError for unbound atoms and UnsupportedError for table algebras.
Element evaluate(const Formula& f, const Algebra& algebra, const AtomBinding& binding);
/// Binds atoms by the algebra's own atom names.
Element evaluate(const Formula& f, const Algebra& algebra);

/// Atom names in first-occurrence order.
std::vector<std::string> atoms_of(const Formula& f);

/// Element by display name, or for free algebras by any formula text.
ElementId resolve_element(const Algebra& algebra, std::string_view text);

}  // namespace boolsemi

#endif  // BOOLSEMI_FORMULA_HPP
