// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "boolsemi/differences.hpp"
#include "boolsemi/formula.hpp"
#include "boolsemi/morphism.hpp"
#include "boolsemi/order.hpp"
#include "boolsemi/properties.hpp"
#include "test_support.hpp"

using namespace boolsemi;

namespace {

bool all_hold(const std::vector<PropertyReport>& rs) {
  for (const auto& r : rs) {
    if (!r.holds()) return false;
  }
  return true;
}

std::vector<ElementId> carrier(const Algebra& A) {
  std::vector<ElementId> v(A.size());
  for (ElementId i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

// ---- 1: semiring laws on free(0..2), exhaustive
std::string semiring_laws() {
  for (unsigned n = 0; n <= 2; ++n) {
    const auto F = free_boolean_algebra(n);
    const auto rs = check_semiring_axioms(F);
    if (rs.size() != 9) return "expected 9 law reports";
    for (const auto& r : rs) {
      if (!r.holds()) return r.property + " fails on n=" + std::to_string(n);
      if (!r.note.empty()) return r.property + " was sampled";
    }
  }
  return {};
}

// ---- 2: classification of free(a,b)
std::string classification() {
  const auto F = free_boolean_algebra(2);
  if (!is_zerosumfree(F).holds()) return "zerosumfree fails";
  if (!is_simple(F).holds()) return "simple fails";
  if (!is_commutative(F).holds() || compute_center(F).size() != F.size()) {
    return "center is not the carrier";
  }
  if (!is_multiplicatively_absorbing(F).holds()) return "absorption fails";
  const auto e = is_entire(F);
  if (e.holds()) return "entire unexpectedly holds";
  const auto p = e.witness[0], q = e.witness[1];
  if (F.complement_id(p) != q || F.mul_id(p, q) != F.top_id()) {
    return "entire witness is not a complementary pair";
  }
  // At carrier size 2 there is nothing non-zero to multiply.
  if (!is_entire(free_boolean_algebra(0)).holds()) return "entire fails at size 2";
  return {};
}

// ---- 3: order laws on free(0..2) with the canonical order
std::string order_laws() {
  for (unsigned n = 0; n <= 2; ++n) {
    const auto F = free_boolean_algebra(n);
    const auto R = canonical_order(F);
    const auto tag = " on n=" + std::to_string(n);
    if (!all_hold(check_poset(R))) return "poset laws fail" + tag;
    if (!all_hold(check_monotony(F, R))) return "monotony fails" + tag;
    if (!verify_lemma_bounds(F, R).holds()) return "lemma bounds fail" + tag;
    if (!verify_decomposition(F, R).holds()) return "decomposition fails" + tag;
    const auto pw = verify_pairwise_monotony(F, R);
    if (!pw.holds() || !pw.note.empty()) return "pairwise monotony fails or sampled" + tag;
    const std::uint64_t s = F.size();
    if (pw.checked != s * s * s * s) return "pairwise scan incomplete" + tag;
  }
  return {};
}

// ---- 4: cones on free(a,b)
std::string cone_check() {
  const auto F = free_boolean_algebra(2);
  const auto c = cones(F, canonical_order(F));
  if (c.positive != carrier(F)) return "positive cone is not the carrier";
  if (c.negative != std::vector<ElementId>{F.bot_id()}) return "negative cone is not {⊥}";
  return {};
}

// ---- 5: cancellable elements
std::string cancellable() {
  for (unsigned n = 1; n <= 2; ++n) {
    const auto F = free_boolean_algebra(n);
    if (additively_cancellable_elements(F) != std::vector<ElementId>{F.top_id()}) {
      return "cancellable set is not {⊤} on n=" + std::to_string(n);
    }
  }
  return {};
}

// ---- 6: bpa homomorphism counts
std::string hom_counts() {
  const auto F0 = free_boolean_algebra(0);
  const auto h1 = enumerate_homs(free_boolean_algebra(1), F0, HomKind::bpa);
  const auto h2 = enumerate_homs(free_boolean_algebra(2), F0, HomKind::bpa);
  if (h1.size() != 2) return "free(a) → free() gave " + std::to_string(h1.size());
  if (h2.size() != 4) return "free(a,b) → free() gave " + std::to_string(h2.size());
  for (unsigned n = 0; n <= 2; ++n) {
    for (unsigned m = 0; m <= 2; ++m) {
      for (const auto& h :
           enumerate_homs(free_boolean_algebra(n), free_boolean_algebra(m), HomKind::bpa)) {
        const auto img = image_subalgebra(h);
        const auto again = subalgebra_closure_ids(h.target(), img.members(), true);
        if (again.members() != img.members()) return "an image is not closed";
      }
    }
  }
  return {};
}

// ---- 7: factorization against kernel refinement
std::string factorization() {
  std::size_t pairs = 0;
  for (unsigned n = 1; n <= 2; ++n) {
    const auto S = free_boolean_algebra(n);
    std::vector<Morphism> homs;
    for (unsigned m = 0; m <= 2; ++m) {
      for (auto& h : enumerate_homs(S, free_boolean_algebra(m), HomKind::bpa)) homs.push_back(h);
    }
    for (const auto& p1 : homs) {
      if (!p1.is_surjective()) continue;
      for (const auto& p2 : homs) {
        ++pairs;
        const auto psi = factor(p1, p2);
        if (psi.has_value() != refines(kernel(p1), kernel(p2))) return "refinement mismatch";
        if (!psi) continue;
        for (ElementId a = 0; a < S.size(); ++a) {
          if ((*psi)(p1(a)) != p2(a)) return "ψ ∘ ψ₁ differs from ψ₂";
        }
      }
    }
  }
  return pairs == 0 ? "no pairs examined" : std::string{};
}

// ---- 8: iso theorem under both readings
std::string iso_theorem() {
  for (unsigned n = 0; n <= 2; ++n) {
    for (unsigned m = 0; m <= 2; ++m) {
      if (!verify_iso_theorem(free_boolean_algebra(n), free_boolean_algebra(m), HomKind::bpa,
                              OrderMode::embedding)
               .holds()) {
        return "embedding reading fails for n=" + std::to_string(n) + ", m=" + std::to_string(m);
      }
    }
  }
  const auto F1 = free_boolean_algebra(1);
  const auto F0 = free_boolean_algebra(0);
  const auto mono = verify_iso_theorem(F1, F0, HomKind::bpa, OrderMode::monotone);
  for (const auto& c : mono.counterexamples) {
    if (c.psi(F1.lookup("a")) == F0.top_id() && c.psi(F1.lookup("!a")) == F0.bot_id() &&
        c.onto && c.order_preserving && !c.isomorphism) {
      return {};
    }
  }
  return "evaluate-at-⊤ counterexample not reported";
}

// ---- 9: difference semirings
std::string differences() {
  const auto F1 = free_boolean_algebra(1);
  const auto SF = subtrahend_ideal(F1);
  const auto DF = difference_semiring(F1, SF);
  if (!is_isomorphism(DF.embedding, HomKind::semiring).holds()) return "D(free(a)) ≇ free(a)";
  if (!extended_order(F1, canonical_order(F1), SF).stability.holds()) {
    return "stability fails on free(a)";
  }
  for (int p : {2, 3, 5}) {
    const auto Z = testing::zmod(p);
    const auto S = subtrahend_ideal(Z);
    if (S.members != carrier(Z)) return "⊖ is not all of Z" + std::to_string(p);
    const auto D = difference_semiring(Z, S);
    if (!is_isomorphism(D.embedding, HomKind::semiring).holds()) {
      return "D(Z" + std::to_string(p) + ") is not isomorphic to Z" + std::to_string(p);
    }
    if (!extended_order(Z, discrete_order(Z), S).stability.holds()) {
      return "stability fails on Z" + std::to_string(p);
    }
    const auto t = verify_difference_cancellation(Z, S);
    if (!t.hypothesis_met() || !t.biconditional() || !t.criterion.holds()) {
      return "cancellation biconditional fails on Z" + std::to_string(p);
    }
  }
  return {};
}

// ---- 10: parser round trip and evaluation
std::string parser() {
  std::mt19937_64 rng(testing::kFormulaSeed);
  const std::vector<std::string> atoms{"a", "b", "c"};
  const auto A = free_boolean_algebra(atoms);
  for (int i = 0; i < 1000; ++i) {
    const auto f = testing::random_formula(rng, 5, atoms);
    const auto text = print(f);
    if (!(parse(text) == f)) return "round trip fails on " + text;
    const auto id = evaluate(f, A).id;
    for (unsigned row = 0; row < A.row_count(); ++row) {
      if ((((id >> row) & 1U) != 0) != testing::truth_under(f, atoms, row)) {
        return "evaluation differs on " + text;
      }
    }
  }
  return {};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria{
      {"semiring laws on free algebras up to two atoms", 5, semiring_laws},
      {"classification of free(a,b), entire refuted by a complementary pair", 0, classification},
      {"canonical order laws, lemma and both order theorems", 30, order_laws},
      {"positive cone is the carrier, negative cone is {⊥}", 0, cone_check},
      {"only ⊤ is additively cancellable", 0, cancellable},
      {"bpa homomorphism counts 2 and 4, images closed", 10, hom_counts},
      {"factorization exists exactly under kernel refinement", 0, factorization},
      {"iso theorem: embedding reading holds, monotone reading refuted", 0, iso_theorem},
      {"difference semirings and the cancellation criterion", 10, differences},
      {"parser round trip and evaluation on 1000 formulas", 0, parser},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = c.run();
    } catch (const std::exception& e) {
      problem = std::string("threw: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && c.limit_seconds > 0 && secs > c.limit_seconds) {
      problem = "took longer than " + std::to_string(static_cast<int>(c.limit_seconds)) + " s";
    }
    const bool ok = problem.empty();
    if (!ok) ++failed;
    std::printf("%s [%zu] %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", i + 1, c.name, secs,
                ok ? "" : ": ", problem.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
