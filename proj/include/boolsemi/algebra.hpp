#ifndef BOOLSEMI_ALGEBRA_HPP
#define BOOLSEMI_ALGEBRA_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "boolsemi/errors.hpp"

namespace boolsemi {

using ElementId = std::uint32_t;

/// Largest atom count accepted by free_boolean_algebra (carrier 2^16).
inline constexpr unsigned kMaxAtoms = 4;
/// Largest carrier accepted for table-defined algebras.
inline constexpr std::size_t kMaxTableSize = 4096;

/// A member of one specific algebra. `owner` is the fingerprint of the
/// algebra the element was drawn from; mixing owners is a domain error.
struct Element {
  ElementId id = 0;
  std::uint64_t owner = 0;

  friend bool operator==(const Element&, const Element&) = default;
};

enum class Op { add, mul };

/// Plain description of a table-defined semiring, row-major in element order.
/// `zero` names the additive identity (the ⊤ role) and `one` the
/// multiplicative identity (the ⊥ role).
struct TableSpec {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<std::string>> add;
  std::vector<std::vector<std::string>> mul;
  std::string zero;
  std::string one;
  std::optional<std::vector<std::string>> complement;
  std::optional<std::vector<std::vector<int>>> order;
};

/// A finite semiring with + and × tables, ⊤ (additive identity) and ⊥
/// (multiplicative identity). For the free Boolean algebra on n atoms,
/// + is ∧, × is ∨, ⊤ is constant-true and ⊥ is constant-false; elements
/// are identified with their truth tables read as integers, so bit k of
/// an id is the value under assignment k (bit i of k = value of atom i).
///
/// Algebras are immutable and cheap to copy; copies share storage.
class Algebra {
 public:
  enum class Kind { free_boolean, table };

  Kind kind() const noexcept { return impl_->kind; }
  bool is_free() const noexcept { return impl_->kind == Kind::free_boolean; }
  const std::string& name() const noexcept { return impl_->name; }
  std::size_t size() const noexcept { return impl_->size; }
  std::uint64_t fingerprint() const noexcept { return impl_->fingerprint; }
  bool has_complement() const noexcept { return impl_->has_complement; }

  /// Atom names in lexical order; empty for table algebras.
  const std::vector<std::string>& atom_names() const noexcept { return impl_->atoms; }
  unsigned atom_count() const noexcept { return static_cast<unsigned>(impl_->atoms.size()); }
  /// Number of truth-table rows (2^n) of a free algebra.
  std::size_t row_count() const noexcept { return std::size_t{1} << impl_->atoms.size(); }

  ElementId top_id() const noexcept { return impl_->top; }
  ElementId bot_id() const noexcept { return impl_->bot; }
  Element top() const noexcept { return {impl_->top, impl_->fingerprint}; }
  Element bot() const noexcept { return {impl_->bot, impl_->fingerprint}; }

  Element element(ElementId id) const;
  bool owns(Element x) const noexcept { return x.owner == impl_->fingerprint && x.id < impl_->size; }

  Element combine(Op op, Element x, Element y) const;
  Element add(Element x, Element y) const { return combine(Op::add, x, y); }
  Element mul(Element x, Element y) const { return combine(Op::mul, x, y); }
  Element complement(Element x) const;

  // Unchecked id-level operations for exhaustive scans. Ids must be < size().
  ElementId add_id(ElementId a, ElementId b) const noexcept {
    return is_free() ? (a & b) : impl_->add[a * impl_->size + b];
  }
  ElementId mul_id(ElementId a, ElementId b) const noexcept {
    return is_free() ? (a | b) : impl_->mul[a * impl_->size + b];
  }
  ElementId op_id(Op op, ElementId a, ElementId b) const noexcept {
    return op == Op::add ? add_id(a, b) : mul_id(a, b);
  }
  /// Throws UnsupportedError when the algebra has no complement.
  ElementId complement_id(ElementId a) const;

  /// Display name. Free algebras use "⊤", "⊥", literals, or a
  /// disjunctive normal form that the formula parser reads back.
  std::string element_name(ElementId id) const;
  std::optional<ElementId> find(std::string_view name) const;
  /// Like find, but throws DomainError naming the algebra.
  ElementId lookup(std::string_view name) const;

  /// Free algebras only: the truth table as a bit string, highest
  /// assignment first, so "a & b" over {a, b} prints as "1000".
  std::string truth_table(ElementId id) const;

  /// Order matrix supplied with a table description, if any.
  const std::optional<std::vector<std::vector<int>>>& declared_order() const noexcept {
    return impl_->order;
  }

  /// Export as a table description (carrier capped at kMaxTableSize).
  TableSpec to_table_spec() const;

  friend Algebra free_boolean_algebra(std::vector<std::string> atom_names);
  friend Algebra table_semiring(const TableSpec& spec);

 private:
  struct Impl {
    Kind kind = Kind::table;
    std::string name;
    std::size_t size = 0;
    std::uint64_t fingerprint = 0;
    std::vector<std::string> atoms;
    std::vector<ElementId> add;
    std::vector<ElementId> mul;
    std::vector<ElementId> complement;
    bool has_complement = false;
    ElementId top = 0;
    ElementId bot = 0;
    std::vector<std::string> names;
    std::unordered_map<std::string, ElementId> index;
    std::optional<std::vector<std::vector<int>>> order;
  };

  explicit Algebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  void require_owned(Element x, std::string_view what) const;

  std::shared_ptr<const Impl> impl_;
};

/// All Boolean functions on n atoms named a, b, c, d. 0 <= n <= kMaxAtoms.
Algebra free_boolean_algebra(unsigned atoms);
/// Same, with explicit atom names (sorted lexically before use).
Algebra free_boolean_algebra(std::vector<std::string> atom_names);

/// Validates names, closure and the left identity laws ⊤ + p = p and
/// ⊥ × p = p. Every other axiom is left to the property checkers.
Algebra table_semiring(const TableSpec& spec);

Element combine(const Algebra& algebra, Op op, Element x, Element y);
Element complement(const Algebra& algebra, Element x);

/// A subset of a parent carrier closed under +, × (and ¬ when
/// `bpa_closed`) that contains ⊤ and ⊥.
class Subalgebra {
 public:
  /// Validates closure; throws DomainError otherwise.
  Subalgebra(Algebra parent, std::vector<ElementId> members, bool bpa_closed);

  const Algebra& parent() const noexcept { return parent_; }
  /// Sorted ascending.
  const std::vector<ElementId>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool bpa_closed() const noexcept { return bpa_closed_; }
  bool contains(ElementId id) const;

  /// The subalgebra as a standalone table algebra, elements in member order.
  Algebra as_algebra() const;

 private:
  Algebra parent_;
  std::vector<ElementId> members_;
  bool bpa_closed_;
};

/// Smallest subalgebra containing `generators`, ⊤ and ⊥.
Subalgebra subalgebra_closure(const Algebra& algebra, std::span<const Element> generators,
                              bool bpa_closed);
Subalgebra subalgebra_closure_ids(const Algebra& algebra, std::span<const ElementId> generators,
                                  bool bpa_closed);

}  // namespace boolsemi

#endif  // BOOLSEMI_ALGEBRA_HPP
