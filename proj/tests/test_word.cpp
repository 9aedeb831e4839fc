#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trigpi1/word.hpp"

using namespace trigpi1;

TEST_CASE("free reduction on append") {
  Word w;
  w.push(1);
  w.push(2);
  w.push(-2);
  CHECK(w == Word::gen(1));
  w.push(-1);
  CHECK(w.trivial());
}

TEST_CASE("inverse and product") {
  Word w = parse_word("a1 a2^-1 a3", standard_gens());
  CHECK((w * w.inverse()).trivial());
  CHECK(w.inverse() == parse_word("a3^-1 a2 a1^-1", standard_gens()));
}

TEST_CASE("powers and conjugates") {
  Word a = Word::gen(1), b = Word::gen(2);
  CHECK(a.pow(3) == parse_word("a1^3", standard_gens()));
  CHECK(a.pow(-2) == parse_word("a1^-2", standard_gens()));
  CHECK(a.conj_by(b) == parse_word("a2 a1 a2^-1", standard_gens()));
  CHECK(a.pow(0).trivial());
}

TEST_CASE("cyclic reduction") {
  Word w = parse_word("a2^-1 a1 a3 a1^-1 a2", standard_gens());
  CHECK(w.cyclically_reduced() == parse_word("a3", standard_gens()));
  Word u = parse_word("a1 a2 a3 a2", standard_gens());
  CHECK(u.cyclically_reduced() == u);
}

TEST_CASE("named constants expand") {
  CHECK(parse_word("r", standard_gens()) == Word({1, 2, 3}));
  CHECK(parse_word("d", standard_gens()) == Word({2, 3, -2}));
  CHECK(parse_word("r^-1 d r", standard_gens()) ==
        rho_word().inverse() * delta_word() * rho_word());
}

TEST_CASE("print parse roundtrip") {
  Word w = parse_word("a1^2 a2^-3 a3 a1^-1", standard_gens());
  CHECK(parse_word(print_word(w, standard_gens()), standard_gens()) == w);
  CHECK(print_word(Word(), standard_gens()) == "1");
  CHECK(parse_word("1", standard_gens()).trivial());
}

TEST_CASE("syntax errors carry kind") {
  CHECK_THROWS_WITH_AS(parse_word("a4", standard_gens()), doctest::Contains("Syntax"),
                       Error);
  CHECK_THROWS_AS(parse_word("a1^x", standard_gens()), Error);
}

TEST_CASE("exponent sums") {
  Word w = parse_word("a1 a2 a1 a2^-1 a3", standard_gens());
  CHECK(w.exponent_sum(1) == 2);
  CHECK(w.exponent_sum(2) == 0);
  CHECK(w.exponent_sum(3) == 1);
  CHECK(w.max_generator() == 3);
}
