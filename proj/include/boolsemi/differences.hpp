#ifndef BOOLSEMI_DIFFERENCES_HPP
#define BOOLSEMI_DIFFERENCES_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "boolsemi/algebra.hpp"
#include "boolsemi/morphism.hpp"
#include "boolsemi/order.hpp"
#include "boolsemi/report.hpp"

namespace boolsemi {

/// Largest pair set |carrier| × |⊖| a difference construction will handle.
inline constexpr std::size_t kMaxDifferencePairs = 4096;

/// Contains ⊤, closed under +, and absorbing under × on both sides.
/// Witness: (⊤) if missing, (i, j) for +, (p, i) for ×; `note` says which.
PropertyReport is_ideal(const Algebra& algebra, const std::vector<ElementId>& members);

/// An ideal of additively cancellable elements, each with an additive
/// opposite (α + ¬α = ⊤).
struct SubtrahendIdeal {
  std::vector<ElementId> members;              ///< ascending
  std::map<ElementId, ElementId> opposites;    ///< α ↦ ¬α

  bool contains(ElementId x) const;
};

/// The largest ideal whose members are cancellable and have opposites.
/// Always contains ⊤; for free algebras it is exactly {⊤}.
SubtrahendIdeal subtrahend_ideal(const Algebra& algebra);

/// Validates a user-chosen ⊖. Throws DomainError naming the first problem.
SubtrahendIdeal make_subtrahend_ideal(const Algebra& algebra, std::vector<ElementId> members);

/// D(P, ⊖): pairs (p, α) modulo p + β = q + α, with
/// (p,α) ⊕ (q,β) = (p+q, α+β) and (p,α) ⊗ (q,β) = (p×q + α×β, p×β + α×q).
struct DifferenceSemiring {
  Algebra parent;
  SubtrahendIdeal subtrahends;
  Algebra quotient;
  /// First pair met for each class, indexed by class id.
  std::vector<std::pair<ElementId, ElementId>> representatives;
  /// Class id of every pair, indexed [subtrahend index][p] with ⊤ first.
  std::vector<std::vector<ElementId>> class_of;
  /// p ↦ class(p, ⊤).
  Morphism embedding;

  ElementId class_of_pair(ElementId p, ElementId alpha) const;
};

/// Builds the quotient as a table algebra. Classes holding some (p, ⊤) are
/// named after p, the rest "p-α". Throws ConstructionError if the relation
/// is not an equivalence or ⊕/⊗ depend on representatives, and
/// SizeLimitError above kMaxDifferencePairs pairs.
DifferenceSemiring difference_semiring(const Algebra& algebra, const SubtrahendIdeal& subtrahends);

/// Table file form plus a "provenance" block.
Json to_json(const DifferenceSemiring& d);

enum class Quantifier { existential, universal };

const char* to_string(Quantifier quantifier);

struct ExtendedOrder {
  Quantifier quantifier;
  OrderRelation relation;
  std::vector<PropertyReport> poset;
  /// p ≼′ q ⇔ p + ξ ≼′ q + ξ for all ξ ∈ ⊖. Witness (p, q, ξ).
  PropertyReport stability;
  /// p ≼ q ⇔ p + ξ ≼ q + ξ for all ξ ∈ ⊖, on the original order.
  PropertyReport base_stability;
  bool similar = false;  ///< ≼′ equals ≼
  /// similar ⇔ base_stability.
  bool similarity_criterion = false;
};

/// p ≼′ q iff p + Δ ≼ q + Δ for some Δ ∈ ⊖ (or every Δ, with
/// Quantifier::universal). Throws PreconditionError unless the base order is
/// a poset satisfying both monotony laws; DomainError on algebra mismatch.
ExtendedOrder extended_order(const Algebra& algebra, const OrderRelation& order,
                             const SubtrahendIdeal& subtrahends,
                             Quantifier quantifier = Quantifier::existential);

Json to_json(const ExtendedOrder& ext);

/// c × a = c × b ⇒ a = b for every c ≠ ⊤. Witness (c, a, b).
PropertyReport mult_left_cancellative(const Algebra& algebra);

/// Δ ≠ c ∧ a ≠ b ⇒ c×a + Δ×b ≠ c×b + Δ×a over a, b, c and Δ ∈ ⊖.
/// Witness (a, b, c, Δ).
PropertyReport cancellation_criterion(const Algebra& algebra, const SubtrahendIdeal& subtrahends);

/// Left-cancellativity of D(P, ⊖) against the criterion above, under the
/// hypothesis that P itself is left cancellative.
struct DifferenceCancellationReport {
  PropertyReport hypothesis;
  PropertyReport difference_cancellative;
  PropertyReport criterion;
  std::size_t classes = 0;

  bool hypothesis_met() const noexcept { return hypothesis.holds(); }
  bool biconditional() const noexcept {
    return difference_cancellative.holds() == criterion.holds();
  }
};

DifferenceCancellationReport verify_difference_cancellation(const Algebra& algebra,
                                                            const SubtrahendIdeal& subtrahends);

Json to_json(const DifferenceCancellationReport& report);

}  // namespace boolsemi

#endif  // BOOLSEMI_DIFFERENCES_HPP
