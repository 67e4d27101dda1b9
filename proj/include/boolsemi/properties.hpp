#ifndef BOOLSEMI_PROPERTIES_HPP
#define BOOLSEMI_PROPERTIES_HPP

#include <vector>

#include "boolsemi/algebra.hpp"
#include "boolsemi/report.hpp"

namespace boolsemi {

// Classification checkers. Every scan is exhaustive in lexicographic
// carrier order (subject to ScanPolicy), so failing witnesses are the least
// ones and replay through Algebra::combine.
//
// Throughout, the semiring zero is ⊤ (additive identity, logical true) and
// the semiring one is ⊥ (multiplicative identity, logical false). "Non-zero"
// therefore means "≠ ⊤".

/// One report per law, in this order:
///   add_commutative (p,q), add_associative (p,q,r), mul_associative (p,q,r),
///   mul_commutative (p,q), left_distributive (p,q,r) p×(q+r) = p×q + p×r,
///   right_distributive (p,q,r) (q+r)×p = q×p + r×p, add_identity (p),
///   mul_identity (p), top_absorbing (p) ⊤×p = ⊤ = p×⊤.
std::vector<PropertyReport> check_semiring_axioms(const Algebra& algebra,
                                                  const ScanPolicy& policy = {});

/// p + q = ⊤ implies p = q = ⊤. Witness (p, q).
PropertyReport is_zerosumfree(const Algebra& algebra, const ScanPolicy& policy = {});

/// No p, q ≠ ⊤ with p × q = ⊤. Witness (p, q).
PropertyReport is_entire(const Algebra& algebra, const ScanPolicy& policy = {});

/// p + ⊥ = ⊥ for every p. Witness (p).
PropertyReport is_simple(const Algebra& algebra);

/// {p | p × q = q × p for all q}, ascending.
std::vector<ElementId> compute_center(const Algebra& algebra);

/// Holds iff the center is the whole carrier; witness is the least
/// non-commuting pair.
PropertyReport is_commutative(const Algebra& algebra);

/// {a | a + x = a + y implies x = y}, ascending.
std::vector<ElementId> additively_cancellable_elements(const Algebra& algebra);

/// Holds iff every element is additively cancellable; witness (a, x, y)
/// with a + x = a + y and x ≠ y.
PropertyReport is_additively_cancellative(const Algebra& algebra);

/// ⊤ × a = a × ⊤ = ⊤ for all a. Witness (a).
PropertyReport is_multiplicatively_absorbing(const Algebra& algebra);

}  // namespace boolsemi

#endif  // BOOLSEMI_PROPERTIES_HPP
