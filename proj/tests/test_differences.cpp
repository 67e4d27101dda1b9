#include "boolsemi/differences.hpp"
#include "boolsemi/table_io.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace boolsemi;
using boolsemi::testing::zmod;

namespace {

std::vector<ElementId> all_ids(const Algebra& A) {
  std::vector<ElementId> v(A.size());
  for (ElementId i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

// In ℤ/p the pair (a, α) stands for a - α mod p.
int pair_value(const Algebra& Z, int p, ElementId a, ElementId alpha) {
  const int x = std::stoi(Z.element_name(a));
  const int y = std::stoi(Z.element_name(alpha));
  return ((x - y) % p + p) % p;
}

}  // namespace

TEST_CASE("is_ideal") {
  const auto F1 = free_boolean_algebra(1);
  const auto a = F1.lookup("a");
  CHECK(is_ideal(F1, {F1.top_id()}).holds());
  CHECK(is_ideal(F1, {F1.top_id(), a}).holds());
  const auto missing = is_ideal(F1, {a});
  CHECK_FALSE(missing.holds());
  CHECK(missing.note == "⊤ missing");
  // {⊤, a, ¬a} is not closed: a + ¬a = ⊥.
  const auto open = is_ideal(F1, {F1.top_id(), a, F1.lookup("!a")});
  CHECK_FALSE(open.holds());
  CHECK(open.note == "not closed under +");
  // Ideals of a free algebra are exactly the ×-upsets closed under +.
  CHECK(is_ideal(F1, all_ids(F1)).holds());
  const auto Z3 = zmod(3);
  CHECK(is_ideal(Z3, all_ids(Z3)).holds());
  CHECK_FALSE(is_ideal(Z3, {Z3.top_id(), Z3.lookup("1")}).holds());
}

TEST_CASE("subtrahend ideal") {
  for (unsigned n = 0; n <= 3; ++n) {
    const auto F = free_boolean_algebra(n);
    const auto S = subtrahend_ideal(F);
    CHECK(S.members == std::vector<ElementId>{F.top_id()});
    CHECK(S.opposites.at(F.top_id()) == F.top_id());
  }
  for (int p : {2, 3, 5}) {
    const auto Z = zmod(p);
    const auto S = subtrahend_ideal(Z);
    CHECK(S.members.size() == static_cast<std::size_t>(p));
    for (const auto& [a, b] : S.opposites) CHECK(Z.add_id(a, b) == Z.top_id());
  }
  const auto F1 = free_boolean_algebra(1);
  CHECK_THROWS_AS(make_subtrahend_ideal(F1, {F1.lookup("a")}), DomainError);
  CHECK_THROWS_AS(make_subtrahend_ideal(F1, {F1.top_id(), F1.lookup("a")}), DomainError);
  CHECK(make_subtrahend_ideal(F1, {F1.top_id()}).members.size() == 1);
}

TEST_CASE("difference semiring of free algebras") {
  for (unsigned n = 0; n <= 2; ++n) {
    const auto F = free_boolean_algebra(n);
    const auto D = difference_semiring(F, subtrahend_ideal(F));
    CHECK(D.quotient.size() == F.size());
    CHECK(D.quotient.has_complement());
    CHECK(check_morphism(D.embedding, HomKind::semiring).holds());
    CHECK(is_isomorphism(D.embedding, HomKind::semiring).holds());
    CHECK(is_isomorphism(D.embedding, HomKind::bpa).holds());
    for (ElementId p = 0; p < F.size(); ++p) {
      CHECK(D.quotient.element_name(D.embedding(p)) == F.element_name(p));
    }
  }
  CHECK(difference_semiring(free_boolean_algebra(0), subtrahend_ideal(free_boolean_algebra(0)))
            .quotient.size() == 2);
}

TEST_CASE("difference semiring of cyclic tables") {
  for (int p : {2, 3, 5}) {
    const auto Z = zmod(p);
    const auto S = subtrahend_ideal(Z);
    const auto D = difference_semiring(Z, S);
    CHECK(D.quotient.size() == static_cast<std::size_t>(p));
    CHECK(is_isomorphism(D.embedding, HomKind::semiring).holds());
    // Two pairs share a class exactly when their differences agree mod p.
    for (ElementId a = 0; a < Z.size(); ++a) {
      for (auto alpha : S.members) {
        for (ElementId b = 0; b < Z.size(); ++b) {
          for (auto beta : S.members) {
            const bool same = D.class_of_pair(a, alpha) == D.class_of_pair(b, beta);
            CHECK(same == (pair_value(Z, p, a, alpha) == pair_value(Z, p, b, beta)));
          }
        }
      }
    }
  }
}

TEST_CASE("difference semiring json round trip") {
  const auto Z3 = zmod(3);
  const auto D = difference_semiring(Z3, subtrahend_ideal(Z3));
  const auto j = to_json(D);
  CHECK(j["provenance"]["parent"] == "Z3");
  CHECK(j["provenance"]["subtrahends"].size() == 3);
  const auto again = table_semiring(table_spec_from_json(j));
  CHECK(again.fingerprint() == D.quotient.fingerprint());
}

TEST_CASE("difference construction rejects non-cancellable subtrahends") {
  // Bypass the validating constructor to feed in a bad ⊖ = whole of free(a).
  const auto F1 = free_boolean_algebra(1);
  SubtrahendIdeal S;
  S.members = all_ids(F1);
  for (auto m : S.members) S.opposites[m] = F1.top_id();
  CHECK_THROWS_AS(difference_semiring(F1, S), ConstructionError);
  CHECK_THROWS_AS(difference_semiring(F1, SubtrahendIdeal{}), ConstructionError);
}

TEST_CASE("extended order") {
  const auto F1 = free_boolean_algebra(1);
  const auto R = canonical_order(F1);
  const auto e = extended_order(F1, R, subtrahend_ideal(F1));
  CHECK(e.relation == R);
  CHECK(e.similar);
  CHECK(e.stability.holds());
  CHECK(e.similarity_criterion);
  for (const auto& r : e.poset) CHECK(r.holds());

  const auto Z3 = zmod(3);
  const auto D3 = discrete_order(Z3);
  for (auto q : {Quantifier::existential, Quantifier::universal}) {
    const auto z = extended_order(Z3, D3, subtrahend_ideal(Z3), q);
    CHECK(z.relation == D3);
    CHECK(z.stability.holds());
    CHECK(z.base_stability.holds());
    CHECK(z.similarity_criterion);
  }
  const auto j = to_json(e);
  CHECK(j["quantifier"] == "existential");
  CHECK(j["similar"] == true);

  CHECK_THROWS_AS(extended_order(Z3, R, subtrahend_ideal(Z3)), DomainError);
}

TEST_CASE("multiplicative left cancellation") {
  const auto F1 = free_boolean_algebra(1);
  const auto r = mult_left_cancellative(F1);
  REQUIRE_FALSE(r.holds());
  CHECK(testing::replays(F1, r));
  CHECK(r.witness[0] != F1.top_id());
  CHECK(mult_left_cancellative(zmod(3)).holds());
  CHECK(mult_left_cancellative(zmod(5)).holds());
  CHECK(mult_left_cancellative(free_boolean_algebra(0)).holds());
  CHECK_FALSE(mult_left_cancellative(zmod(4)).holds());
}

TEST_CASE("cancellation criterion") {
  const auto Z3 = zmod(3);
  const auto c3 = cancellation_criterion(Z3, subtrahend_ideal(Z3));
  CHECK(c3.holds());
  CHECK(c3.checked == 81);

  const auto F1 = free_boolean_algebra(1);
  const auto f = cancellation_criterion(F1, subtrahend_ideal(F1));
  REQUIRE_FALSE(f.holds());
  REQUIRE(f.witness.size() == 4);
  const auto [a, b, c, d] = std::array{f.witness[0], f.witness[1], f.witness[2], f.witness[3]};
  CHECK(a != b);
  CHECK(c != d);
  CHECK(F1.add_id(F1.mul_id(c, a), F1.mul_id(d, b)) == F1.add_id(F1.mul_id(c, b), F1.mul_id(d, a)));

  CHECK(cancellation_criterion(free_boolean_algebra(0), subtrahend_ideal(free_boolean_algebra(0)))
            .holds());
}

TEST_CASE("difference cancellation biconditional") {
  for (int p : {2, 3, 5}) {
    const auto Z = zmod(p);
    const auto r = verify_difference_cancellation(Z, subtrahend_ideal(Z));
    CHECK(r.hypothesis_met());
    CHECK(r.difference_cancellative.holds());
    CHECK(r.criterion.holds());
    CHECK(r.biconditional());
  }
  const auto F1 = free_boolean_algebra(1);
  const auto r = verify_difference_cancellation(F1, subtrahend_ideal(F1));
  CHECK_FALSE(r.hypothesis_met());
  CHECK_FALSE(r.difference_cancellative.holds());
  CHECK_FALSE(r.criterion.holds());
  const auto j = to_json(r);
  CHECK(j["hypothesis_met"] == false);
  CHECK(j["verdict"] == "holds");
}
