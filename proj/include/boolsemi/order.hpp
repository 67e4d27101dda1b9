#ifndef BOOLSEMI_ORDER_HPP
#define BOOLSEMI_ORDER_HPP

#include <cstdint>
#include <vector>

#include "boolsemi/algebra.hpp"
#include "boolsemi/report.hpp"

namespace boolsemi {

/// Largest carrier for which a dense order matrix is built.
inline constexpr std::size_t kMaxOrderSize = 4096;

/// A binary relation ≼ on an algebra's carrier, stored as a dense matrix.
/// Construction does not require the poset axioms; check_poset judges them.
class OrderRelation {
 public:
  OrderRelation(Algebra algebra, std::vector<std::uint8_t> leq);

  /// From a 0/1 matrix, row p column q set iff p ≼ q.
  static OrderRelation from_matrix(Algebra algebra, const std::vector<std::vector<int>>& matrix);

  const Algebra& algebra() const noexcept { return algebra_; }
  std::size_t size() const noexcept { return algebra_.size(); }
  bool leq(ElementId p, ElementId q) const noexcept { return leq_[p * size() + q] != 0; }
  std::vector<std::vector<int>> matrix() const;

  /// The relation restricted to a subalgebra, over `sub.as_algebra()`.
  OrderRelation restrict_to(const Subalgebra& sub) const;

  friend bool operator==(const OrderRelation& a, const OrderRelation& b) {
    return a.algebra_.fingerprint() == b.algebra_.fingerprint() && a.leq_ == b.leq_;
  }

 private:
  Algebra algebra_;
  std::vector<std::uint8_t> leq_;
};

/// p ≼ q iff p + q = q. For free algebras this is reverse implication
/// (q → p is a tautology), with ⊤ the least and ⊥ the greatest element.
/// Throws UnsupportedError unless + is idempotent and commutative.
OrderRelation canonical_order(const Algebra& algebra);

/// p ≼ q iff p = q.
OrderRelation discrete_order(const Algebra& algebra);

/// reflexive (p), antisymmetric (p, q), transitive (p, q, r).
std::vector<PropertyReport> check_poset(const OrderRelation& order);
bool is_poset(const OrderRelation& order);

/// monotony_add: p ≼ q ⇒ p + r ≼ q + r; monotony_mul: p ≼ q ⇒ p × r ≼ q × r.
/// Witness (p, q, r). Throws PreconditionError if the relation is not a poset.
std::vector<PropertyReport> check_monotony(const Algebra& algebra, const OrderRelation& order,
                                           const ScanPolicy& policy = {});

/// p ≼ p + q and p × q ≼ q for all p, q. Witness (p, q); `note` names the
/// failing part.
PropertyReport verify_lemma_bounds(const Algebra& algebra, const OrderRelation& order);

/// p + q ≼ r ⇒ p ≼ r ∧ q ≼ r, and p ≼ q × r ⇒ p ≼ q ∧ p ≼ r. Witness (p, q, r).
PropertyReport verify_decomposition(const Algebra& algebra, const OrderRelation& order,
                                    const ScanPolicy& policy = {});

/// p ≼ q ∧ r ≼ s ⇒ p + r ≼ q + s ∧ p × r ≼ q × s. Witness (p, q, r, s).
/// Exhaustive up to carrier size 16, sampled (and flagged) above.
PropertyReport verify_pairwise_monotony(const Algebra& algebra, const OrderRelation& order,
                                        const ScanPolicy& policy = quad_policy());

struct Cones {
  std::vector<ElementId> positive;  ///< {p | p ≼ p + q for all q}
  std::vector<ElementId> negative;  ///< {p | p + q ≼ p for all q}
};

Cones cones(const Algebra& algebra, const OrderRelation& order);

/// Component checks relating a subalgebra B̂ to its parent B under B's order.
struct SubalgebraOrderReport {
  /// Poset and monotony laws of the order restricted to B̂.
  std::vector<PropertyReport> restriction;
  /// B ∖ B̂, ascending.
  std::vector<ElementId> difference;
  bool difference_within_top = false;
  std::vector<ElementId> cancellable;
  bool top_cancellable = false;
  bool equal = false;

  bool restriction_holds() const;
};

SubalgebraOrderReport subalgebra_order_report(const Algebra& parent, const Subalgebra& sub,
                                              const OrderRelation& order);

/// PropertyReport schema ("subalgebra_equals_parent") with a "restriction" object.
Json to_json(const SubalgebraOrderReport& report, const Algebra& parent);

}  // namespace boolsemi

#endif  // BOOLSEMI_ORDER_HPP
