#ifndef BOOLSEMI_MORPHISM_HPP
#define BOOLSEMI_MORPHISM_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "boolsemi/algebra.hpp"
#include "boolsemi/order.hpp"
#include "boolsemi/report.hpp"

namespace boolsemi {

/// Structure a map must preserve: + and × with ⊤ and ⊥ fixed (semiring),
/// or additionally ¬ (bpa).
enum class HomKind { semiring, bpa };

/// monotone: x ≼ y ⇒ ψx ≼ ψy. embedding: x ≼ y ⇔ ψx ≼ ψy.
enum class OrderMode { monotone, embedding };

/// Upper bound on candidate maps tried by enumerate_homs.
inline constexpr std::uint64_t kMaxHomCandidates = 10'000'000;

/// A total map between two algebra carriers.
class Morphism {
 public:
  /// Throws DomainError unless `map` has one in-range image per source element.
  Morphism(Algebra source, Algebra target, std::vector<ElementId> map);

  static Morphism identity(const Algebra& algebra);

  const Algebra& source() const noexcept { return source_; }
  const Algebra& target() const noexcept { return target_; }
  const std::vector<ElementId>& map() const noexcept { return map_; }
  ElementId operator()(ElementId x) const { return map_.at(x); }

  bool is_surjective() const;
  bool is_injective() const;

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.source_.fingerprint() == b.source_.fingerprint() &&
           a.target_.fingerprint() == b.target_.fingerprint() && a.map_ == b.map_;
  }

 private:
  Algebra source_;
  Algebra target_;
  std::vector<ElementId> map_;
};

/// (second ∘ first)(x) = second(first(x)).
Morphism compose(const Morphism& second, const Morphism& first);

/// Checks ψ(a+b) = ψa+ψb, ψ(a×b) = ψa×ψb, ψ⊤ = ⊤, ψ⊥ = ⊥ and, for bpa,
/// ψ(¬a) = ¬ψa. `note` names the failing condition; the witness holds source
/// elements. Throws UnsupportedError for bpa on complement-free algebras.
PropertyReport check_morphism(const Morphism& psi, HomKind kind);

/// Partition of the source carrier into blocks of equal image. Blocks are
/// ordered by their least element; members ascend.
struct KernelRelation {
  std::vector<std::vector<ElementId>> blocks;
  std::vector<std::size_t> block_of;
  std::uint64_t source_fingerprint = 0;
};

KernelRelation kernel(const Morphism& psi);

/// True iff every block of `finer` lies inside a block of `coarser`.
/// Throws DomainError when the two relations live on different carriers.
bool refines(const KernelRelation& finer, const KernelRelation& coarser);

/// ψ with ψ ∘ ψ₁ = ψ₂, if one exists (exactly when kernel(ψ₁) refines
/// kernel(ψ₂)). Throws PreconditionError if ψ₁ is not onto and DomainError
/// if the two maps have different sources.
std::optional<Morphism> factor(const Morphism& psi1, const Morphism& psi2);

PropertyReport order_relation_of_map(const Morphism& psi, const OrderRelation& source_order,
                                     const OrderRelation& target_order, OrderMode mode);

/// Bijective homomorphism whose inverse map is also a homomorphism.
PropertyReport is_isomorphism(const Morphism& psi, HomKind kind);

/// ψ(P) as a subalgebra of the target. Throws PreconditionError unless ψ is
/// a semiring homomorphism.
Subalgebra image_subalgebra(const Morphism& psi);

/// Every homomorphism of `kind`, in a fixed candidate order. Free sources
/// under bpa choose atom images and extend; everything else is brute force
/// with ⊤ and ⊥ pinned. Throws SizeLimitError above kMaxHomCandidates.
std::vector<Morphism> enumerate_homs(const Algebra& source, const Algebra& target, HomKind kind);

struct IsoTheoremCase {
  Morphism psi;
  bool onto = false;
  bool order_preserving = false;
  bool isomorphism = false;
};

/// Tests "onto ∧ order-preserving ⇔ isomorphism" over every enumerated
/// homomorphism, using canonical orders on both sides.
struct IsoTheoremReport {
  OrderMode mode = OrderMode::embedding;
  std::size_t homs_checked = 0;
  std::vector<IsoTheoremCase> counterexamples;

  bool holds() const noexcept { return counterexamples.empty(); }
};

IsoTheoremReport verify_iso_theorem(const Algebra& source, const Algebra& target, HomKind kind,
                                    OrderMode mode);

/// {"source", "target", "map": {src: dst}} using display names.
Json to_json(const Morphism& psi, const std::string& source_label,
             const std::string& target_label);
Json to_json(const KernelRelation& tau, const Algebra& source);
Json to_json(const IsoTheoremReport& report);

const char* to_string(HomKind kind);
const char* to_string(OrderMode mode);

}  // namespace boolsemi

#endif  // BOOLSEMI_MORPHISM_HPP
