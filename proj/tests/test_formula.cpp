#include <random>

#include "boolsemi/formula.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace boolsemi;
using boolsemi::testing::random_formula;
using boolsemi::testing::truth_under;

namespace {

Formula A(const char* n) { return Formula::atom(n); }

std::size_t error_position(std::string_view text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected a parse error for '" << text << "'");
  return 0;
}

}  // namespace

TEST_CASE("parse honours precedence and associativity") {
  CHECK(parse("a & !b | c") ==
        Formula::disjunction(Formula::conjunction(A("a"), Formula::negation(A("b"))), A("c")));
  CHECK(parse("a -> b -> c") ==
        Formula::implication(A("a"), Formula::implication(A("b"), A("c"))));
  CHECK(parse("a & b & c") ==
        Formula::conjunction(Formula::conjunction(A("a"), A("b")), A("c")));
  CHECK(parse("a | b | c") ==
        Formula::disjunction(Formula::disjunction(A("a"), A("b")), A("c")));
  CHECK(parse("a <-> b <-> c") ==
        Formula::equivalence(Formula::equivalence(A("a"), A("b")), A("c")));
  CHECK(parse("a | b -> c <-> d") ==
        Formula::equivalence(Formula::implication(Formula::disjunction(A("a"), A("b")), A("c")),
                             A("d")));
  CHECK(parse("(a | b) & c") ==
        Formula::conjunction(Formula::disjunction(A("a"), A("b")), A("c")));
  CHECK(parse("!!a") == Formula::negation(Formula::negation(A("a"))));
  CHECK(parse(" 1 ") == Formula::constant(true));
  CHECK(parse("x_1&0") == Formula::conjunction(A("x_1"), Formula::constant(false)));
}

TEST_CASE("unicode aliases") {
  CHECK(parse("¬a ∧ b ∨ c → d ↔ e") == parse("!a & b | c -> d <-> e"));
  CHECK(parse("⊤ ∧ ⊥") == parse("1 & 0"));
}

TEST_CASE("parse errors report byte positions") {
  CHECK(error_position("a & & b") == 4);
  CHECK(error_position("(a | b") == 6);
  CHECK(error_position("a)") == 1);
  CHECK(error_position("") == 0);
  CHECK(error_position("a $ b") == 2);
  CHECK(error_position("a & 2") == 4);
  CHECK(error_position("a - b") == 2);
  try {
    parse("a $ b");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::lexical);
  }
  try {
    parse("a & & b");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::syntax);
  }
}

TEST_CASE("print uses minimal parentheses") {
  CHECK(print(Formula::disjunction(Formula::conjunction(A("a"), A("b")), A("c"))) == "a & b | c");
  CHECK(print(Formula::conjunction(Formula::disjunction(A("a"), A("b")), A("c"))) ==
        "(a | b) & c");
  CHECK(print(Formula::negation(Formula::negation(A("a")))) == "!!a");
  CHECK(print(Formula::conjunction(A("a"), Formula::conjunction(A("b"), A("c")))) ==
        "a & (b & c)");
  CHECK(print(Formula::implication(Formula::implication(A("a"), A("b")), A("c"))) ==
        "(a -> b) -> c");
  CHECK(print(parse("a -> b -> c")) == "a -> b -> c");
  CHECK(print(Formula::negation(Formula::conjunction(A("a"), A("b")))) == "!(a & b)");
}

TEST_CASE("print/parse round trip on random trees") {
  std::mt19937_64 rng(7);
  const std::vector<std::string> atoms{"a", "b", "c"};
  for (int i = 0; i < 500; ++i) {
    const auto f = random_formula(rng, 5, atoms);
    CHECK(parse(print(f)) == f);
  }
}

TEST_CASE("evaluate") {
  const auto F1 = free_boolean_algebra(1);
  const auto F2 = free_boolean_algebra(2);
  CHECK(evaluate(parse("1"), F1) == F1.top());
  CHECK(F1.truth_table(evaluate(parse("1"), F1).id) == "11");
  CHECK(evaluate(parse("a | !a"), F1) == F1.top());
  CHECK(evaluate(parse("a & !a"), F1) == F1.bot());
  CHECK(F2.truth_table(evaluate(parse("a & b"), F2).id) == "1000");
  CHECK(evaluate(parse("a -> b"), F2) == evaluate(parse("!a | b"), F2));
  CHECK(evaluate(parse("a <-> b"), F2) == evaluate(parse("(a -> b) & (b -> a)"), F2));

  AtomBinding swapped{{"a", 1}, {"b", 0}};
  CHECK(evaluate(parse("a"), F2, swapped) == evaluate(parse("b"), F2));

  CHECK_THROWS_AS(evaluate(parse("z"), F2), NameError);
  CHECK_THROWS_AS(evaluate(parse("a"), F2, AtomBinding{{"a", 5}}), NameError);
  CHECK_THROWS_AS(evaluate(parse("1"), boolsemi::testing::zmod(3)), UnsupportedError);
}

TEST_CASE("evaluate agrees with per-row evaluation") {
  std::mt19937_64 rng(11);
  for (unsigned n = 0; n <= 3; ++n) {
    const auto F = free_boolean_algebra(n);
    const auto& atoms = F.atom_names();
    for (int i = 0; i < 200; ++i) {
      const auto f = random_formula(rng, 4, atoms);
      const auto bits = evaluate(f, F).id;
      for (std::size_t k = 0; k < F.row_count(); ++k) {
        CHECK(static_cast<bool>((bits >> k) & 1U) == truth_under(f, atoms, k));
      }
    }
  }
}

TEST_CASE("conjunction is + and disjunction is ×") {
  std::mt19937_64 rng(3);
  const auto F = free_boolean_algebra(2);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_formula(rng, 3, F.atom_names());
    const auto g = random_formula(rng, 3, F.atom_names());
    CHECK(evaluate(Formula::conjunction(f, g), F) ==
          combine(F, Op::add, evaluate(f, F), evaluate(g, F)));
    CHECK(evaluate(Formula::disjunction(f, g), F) ==
          combine(F, Op::mul, evaluate(f, F), evaluate(g, F)));
  }
}

TEST_CASE("resolve_element accepts names and formulas") {
  const auto F = free_boolean_algebra(2);
  CHECK(resolve_element(F, "⊤") == F.top_id());
  CHECK(resolve_element(F, "b -> a") == evaluate(parse("a | !b"), F).id);
  CHECK_THROWS_AS(resolve_element(F, "z"), DomainError);
  const auto Z3 = boolsemi::testing::zmod(3);
  CHECK(resolve_element(Z3, "2") == Z3.lookup("2"));
  CHECK_THROWS_AS(resolve_element(Z3, "a"), DomainError);
}

TEST_CASE("atoms_of") {
  CHECK(atoms_of(parse("b & a | b")) == std::vector<std::string>{"b", "a"});
}
