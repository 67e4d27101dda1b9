#include "boolsemi/morphism.hpp"

#include <algorithm>
#include <unordered_map>

namespace boolsemi {

namespace {

// Upper bound on candidates × |source|² spent validating enumerated maps.
constexpr long double kMaxHomWork = 4e9L;

struct HomFailure {
  std::string condition;
  std::vector<ElementId> witness;
};

// First violated homomorphism condition, in the order: ⊤, ⊥, ¬, +, ×.
std::optional<HomFailure> first_hom_failure(const Algebra& S, const Algebra& T,
                                            const std::vector<ElementId>& f, HomKind kind,
                                            std::uint64_t* checked = nullptr) {
  std::uint64_t count = 0;
  auto done = [&](std::optional<HomFailure> r) {
    if (checked) *checked = count;
    return r;
  };
  ++count;
  if (f[S.top_id()] != T.top_id()) return done(HomFailure{"ψ(⊤) = ⊤", {S.top_id()}});
  ++count;
  if (f[S.bot_id()] != T.bot_id()) return done(HomFailure{"ψ(⊥) = ⊥", {S.bot_id()}});
  const auto n = static_cast<ElementId>(S.size());
  if (kind == HomKind::bpa) {
    for (ElementId a = 0; a < n; ++a) {
      ++count;
      if (f[S.complement_id(a)] != T.complement_id(f[a])) {
        return done(HomFailure{"ψ(¬a) = ¬ψ(a)", {a}});
      }
    }
  }
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      ++count;
      if (f[S.add_id(a, b)] != T.add_id(f[a], f[b])) {
        return done(HomFailure{"ψ(a + b) = ψ(a) + ψ(b)", {a, b}});
      }
    }
  }
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      ++count;
      if (f[S.mul_id(a, b)] != T.mul_id(f[a], f[b])) {
        return done(HomFailure{"ψ(a × b) = ψ(a) × ψ(b)", {a, b}});
      }
    }
  }
  return done(std::nullopt);
}

void require_complements(const Algebra& S, const Algebra& T, HomKind kind) {
  if (kind != HomKind::bpa) return;
  if (!S.has_complement() || !T.has_complement()) {
    throw UnsupportedError("bpa homomorphisms need complements on both '" + S.name() +
                           "' and '" + T.name() + "'");
  }
}

std::string kind_label(HomKind kind) { return to_string(kind); }

void check_cap(long double candidates, std::size_t source_size) {
  if (candidates > static_cast<long double>(kMaxHomCandidates)) {
    throw SizeLimitError("homomorphism search needs " + std::to_string(static_cast<double>(candidates)) +
                         " candidates, above the cap of " + std::to_string(kMaxHomCandidates));
  }
  const long double work = candidates * source_size * source_size;
  if (work > kMaxHomWork) {
    throw SizeLimitError("homomorphism search would validate " +
                         std::to_string(static_cast<double>(work)) + " equations, above the cap");
  }
}

long double power(std::size_t base, std::size_t exp) {
  long double r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= static_cast<long double>(base);
  return r;
}

}  // namespace

const char* to_string(HomKind kind) { return kind == HomKind::bpa ? "bpa" : "semiring"; }
const char* to_string(OrderMode mode) {
  return mode == OrderMode::embedding ? "embedding" : "monotone";
}

Morphism::Morphism(Algebra source, Algebra target, std::vector<ElementId> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.size() != source_.size()) {
    throw DomainError("map has " + std::to_string(map_.size()) + " images, source '" +
                      source_.name() + "' has " + std::to_string(source_.size()) + " elements");
  }
  for (auto y : map_) {
    if (y >= target_.size()) {
      throw DomainError("image id " + std::to_string(y) + " out of range for '" +
                        target_.name() + "'");
    }
  }
}

Morphism Morphism::identity(const Algebra& algebra) {
  std::vector<ElementId> map(algebra.size());
  for (ElementId i = 0; i < map.size(); ++i) map[i] = i;
  return Morphism(algebra, algebra, std::move(map));
}

bool Morphism::is_surjective() const {
  std::vector<char> hit(target_.size(), 0);
  for (auto y : map_) hit[y] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool Morphism::is_injective() const {
  std::vector<char> hit(target_.size(), 0);
  for (auto y : map_) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

Morphism compose(const Morphism& second, const Morphism& first) {
  if (first.target().fingerprint() != second.source().fingerprint()) {
    throw DomainError("cannot compose: '" + first.target().name() + "' is not '" +
                      second.source().name() + "'");
  }
  std::vector<ElementId> map(first.map().size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = second.map()[first.map()[i]];
  return Morphism(first.source(), second.target(), std::move(map));
}

PropertyReport check_morphism(const Morphism& psi, HomKind kind) {
  const auto& S = psi.source();
  const auto& T = psi.target();
  require_complements(S, T, kind);
  PropertyReport r;
  r.property = std::string("homomorphism[") + kind_label(kind) + "]";
  if (auto fail = first_hom_failure(S, T, psi.map(), kind, &r.checked)) {
    r.verdict = Verdict::fails;
    r.witness = fail->witness;
    r.witness_names = element_names(S, r.witness);
    r.note = "violates " + fail->condition;
  }
  return r;
}

KernelRelation kernel(const Morphism& psi) {
  KernelRelation tau;
  tau.source_fingerprint = psi.source().fingerprint();
  std::unordered_map<ElementId, std::size_t> block_of_image;
  tau.block_of.resize(psi.map().size());
  for (ElementId x = 0; x < psi.map().size(); ++x) {
    auto [it, fresh] = block_of_image.emplace(psi.map()[x], tau.blocks.size());
    if (fresh) tau.blocks.emplace_back();
    tau.blocks[it->second].push_back(x);
    tau.block_of[x] = it->second;
  }
  return tau;
}

bool refines(const KernelRelation& finer, const KernelRelation& coarser) {
  if (finer.source_fingerprint != coarser.source_fingerprint ||
      finer.block_of.size() != coarser.block_of.size()) {
    throw DomainError("kernel relations live on different carriers");
  }
  for (const auto& block : finer.blocks) {
    const auto target = coarser.block_of[block.front()];
    for (auto x : block) {
      if (coarser.block_of[x] != target) return false;
    }
  }
  return true;
}

std::optional<Morphism> factor(const Morphism& psi1, const Morphism& psi2) {
  if (psi1.source().fingerprint() != psi2.source().fingerprint()) {
    throw DomainError("factor: ψ₁ and ψ₂ must share a source");
  }
  if (!psi1.is_surjective()) throw PreconditionError("factor: ψ₁ is not onto");
  if (!refines(kernel(psi1), kernel(psi2))) return std::nullopt;

  const auto& P1 = psi1.target();
  std::vector<ElementId> map(P1.size());
  for (ElementId a = 0; a < psi1.map().size(); ++a) map[psi1.map()[a]] = psi2.map()[a];
  Morphism psi(P1, psi2.target(), std::move(map));

  for (ElementId a = 0; a < psi1.map().size(); ++a) {
    if (psi(psi1(a)) != psi2(a)) {
      throw ConstructionError("factor: ψ ∘ ψ₁ differs from ψ₂ at " +
                              psi1.source().element_name(a));
    }
  }
  if (check_morphism(psi1, HomKind::semiring).holds() &&
      check_morphism(psi2, HomKind::semiring).holds() &&
      !check_morphism(psi, HomKind::semiring).holds()) {
    throw ConstructionError("factor: induced map is not a homomorphism");
  }
  return psi;
}

PropertyReport order_relation_of_map(const Morphism& psi, const OrderRelation& Rs,
                                     const OrderRelation& Rt, OrderMode mode) {
  if (Rs.algebra().fingerprint() != psi.source().fingerprint() ||
      Rt.algebra().fingerprint() != psi.target().fingerprint()) {
    throw DomainError("order relations do not match the map's source and target");
  }
  if (!is_poset(Rs) || !is_poset(Rt)) {
    throw PreconditionError("order_relation_of_map: both relations must be partial orders");
  }
  PropertyReport r;
  r.property = std::string("order_") + to_string(mode);
  const auto n = static_cast<ElementId>(psi.source().size());
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      ++r.checked;
      const bool src = Rs.leq(x, y);
      const bool dst = Rt.leq(psi(x), psi(y));
      const bool ok = mode == OrderMode::monotone ? (!src || dst) : (src == dst);
      if (!ok) {
        r.verdict = Verdict::fails;
        r.witness = {x, y};
        r.witness_names = element_names(psi.source(), r.witness);
        r.note = src ? "x ≼ y but not ψ(x) ≼ ψ(y)" : "ψ(x) ≼ ψ(y) but not x ≼ y";
        return r;
      }
    }
  }
  if (mode == OrderMode::embedding && psi.is_injective()) r.note = "injective";
  return r;
}

PropertyReport is_isomorphism(const Morphism& psi, HomKind kind) {
  PropertyReport r;
  r.property = std::string("isomorphism[") + kind_label(kind) + "]";
  const auto hom = check_morphism(psi, kind);
  r.checked = hom.checked;
  auto fail = [&](std::vector<ElementId> ids, const Algebra& where, std::string why) {
    r.verdict = Verdict::fails;
    r.witness = std::move(ids);
    r.witness_names = element_names(where, r.witness);
    r.note = std::move(why);
    return r;
  };
  if (!hom.holds()) return fail(hom.witness, psi.source(), "not a homomorphism: " + hom.note);

  const auto& S = psi.source();
  const auto& T = psi.target();
  std::vector<std::optional<ElementId>> inverse(T.size());
  for (ElementId x = 0; x < S.size(); ++x) {
    auto& slot = inverse[psi(x)];
    if (slot) return fail({*slot, x}, S, "not injective");
    slot = x;
  }
  for (ElementId y = 0; y < T.size(); ++y) {
    if (!inverse[y]) return fail({y}, T, "not surjective");
  }
  std::vector<ElementId> inv(T.size());
  for (ElementId y = 0; y < T.size(); ++y) inv[y] = *inverse[y];
  const auto back = check_morphism(Morphism(T, S, std::move(inv)), kind);
  r.checked += back.checked;
  if (!back.holds()) {
    return fail(back.witness, T, "inverse map is not a homomorphism: " + back.note);
  }
  return r;
}

Subalgebra image_subalgebra(const Morphism& psi) {
  if (!check_morphism(psi, HomKind::semiring).holds()) {
    throw PreconditionError("image_subalgebra: map is not a homomorphism");
  }
  const bool closed = psi.source().has_complement() && psi.target().has_complement() &&
                      check_morphism(psi, HomKind::bpa).holds();
  return Subalgebra(psi.target(), psi.map(), closed);
}

std::vector<Morphism> enumerate_homs(const Algebra& S, const Algebra& T, HomKind kind) {
  require_complements(S, T, kind);
  std::vector<Morphism> out;
  const auto m = T.size();

  if (kind == HomKind::bpa && S.is_free()) {
    // Atoms generate a free algebra under +, × and ¬: pick atom images,
    // extend through the disjunctive normal form, then re-validate.
    const auto n = S.atom_count();
    const auto rows = S.row_count();
    const long double candidates = power(m, n);
    check_cap(candidates, S.size());
    std::vector<ElementId> images(n, 0);
    std::vector<ElementId> minterm(rows);
    std::vector<ElementId> map(S.size());
    for (std::uint64_t c = 0; c < static_cast<std::uint64_t>(candidates); ++c) {
      // The first atom varies slowest.
      std::uint64_t rest = c;
      for (std::size_t i = n; i-- > 0;) {
        images[i] = static_cast<ElementId>(rest % m);
        rest /= m;
      }
      for (std::size_t k = 0; k < rows; ++k) {
        ElementId term = T.top_id();
        for (std::size_t i = 0; i < n; ++i) {
          term = T.add_id(term, ((k >> i) & 1U) ? images[i] : T.complement_id(images[i]));
        }
        minterm[k] = term;
      }
      for (ElementId f = 0; f < S.size(); ++f) {
        ElementId value = T.bot_id();
        for (std::size_t k = 0; k < rows; ++k) {
          if ((f >> k) & 1U) value = T.mul_id(value, minterm[k]);
        }
        map[f] = value;
      }
      if (!first_hom_failure(S, T, map, kind)) out.emplace_back(S, T, map);
    }
    return out;
  }

  if (S.top_id() == S.bot_id() && T.top_id() != T.bot_id()) return out;
  std::vector<ElementId> free_slots;
  for (ElementId x = 0; x < S.size(); ++x) {
    if (x != S.top_id() && x != S.bot_id()) free_slots.push_back(x);
  }
  const long double candidates = power(m, free_slots.size());
  check_cap(candidates, S.size());
  std::vector<ElementId> map(S.size(), 0);
  map[S.top_id()] = T.top_id();
  map[S.bot_id()] = T.bot_id();
  std::vector<ElementId> digits(free_slots.size(), 0);
  for (;;) {
    for (std::size_t i = 0; i < free_slots.size(); ++i) map[free_slots[i]] = digits[i];
    if (!first_hom_failure(S, T, map, kind)) out.emplace_back(S, T, map);
    std::size_t pos = digits.size();
    bool carry = true;
    while (carry && pos > 0) {
      --pos;
      if (++digits[pos] < m) {
        carry = false;
      } else {
        digits[pos] = 0;
      }
    }
    if (carry) break;
  }
  return out;
}

IsoTheoremReport verify_iso_theorem(const Algebra& S, const Algebra& T, HomKind kind,
                                    OrderMode mode) {
  IsoTheoremReport report;
  report.mode = mode;
  const auto Rs = canonical_order(S);
  const auto Rt = canonical_order(T);
  for (auto& psi : enumerate_homs(S, T, kind)) {
    ++report.homs_checked;
    IsoTheoremCase c{psi};
    c.onto = psi.is_surjective();
    c.order_preserving = order_relation_of_map(psi, Rs, Rt, mode).holds();
    c.isomorphism = is_isomorphism(psi, kind).holds();
    if ((c.onto && c.order_preserving) != c.isomorphism) {
      report.counterexamples.push_back(std::move(c));
    }
  }
  return report;
}

Json to_json(const Morphism& psi, const std::string& source_label,
             const std::string& target_label) {
  Json j;
  j["source"] = source_label;
  j["target"] = target_label;
  Json map = Json::object();
  for (ElementId x = 0; x < psi.map().size(); ++x) {
    map[psi.source().element_name(x)] = psi.target().element_name(psi(x));
  }
  j["map"] = std::move(map);
  return j;
}

Json to_json(const KernelRelation& tau, const Algebra& source) {
  Json blocks = Json::array();
  for (const auto& b : tau.blocks) blocks.push_back(element_names(source, b));
  return blocks;
}

Json to_json(const IsoTheoremReport& report) {
  Json j;
  j["property"] = "onto_order_preserving_iff_isomorphism";
  j["verdict"] = report.holds() ? "holds" : "fails";
  if (report.holds()) {
    j["witness"] = nullptr;
  } else {
    std::vector<std::string> w;
    const auto& psi = report.counterexamples.front().psi;
    for (ElementId x = 0; x < psi.map().size(); ++x) {
      w.push_back(psi.source().element_name(x) + " ↦ " + psi.target().element_name(psi(x)));
    }
    j["witness"] = w;
  }
  j["checked"] = report.homs_checked;
  j["mode"] = to_string(report.mode);
  Json cases = Json::array();
  for (const auto& c : report.counterexamples) {
    Json cj = to_json(c.psi, c.psi.source().name(), c.psi.target().name());
    cj["onto"] = c.onto;
    cj["order_preserving"] = c.order_preserving;
    cj["isomorphism"] = c.isomorphism;
    cases.push_back(std::move(cj));
  }
  j["counterexamples"] = std::move(cases);
  return j;
}

}  // namespace boolsemi
