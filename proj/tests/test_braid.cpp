#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trigpi1/braid.hpp"

using namespace trigpi1;

namespace {

Word w(const std::string& s) { return parse_word(s, standard_gens()); }

Braid random_braid(std::mt19937& rng, int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen);
  std::uniform_int_distribution<int> let(0, 3);
  static const int letters[4] = {1, -1, 2, -2};
  std::vector<int> ls;
  int n = len(rng);
  for (int i = 0; i < n; ++i) ls.push_back(letters[let(rng)]);
  return Braid(ls);
}

}  // namespace

TEST_CASE("Artin generator images") {
  CHECK(act(Braid::sigma(1), w("a1")) == w("a1 a2 a1^-1"));
  CHECK(act(Braid::sigma(1), w("a2")) == w("a1"));
  CHECK(act(Braid::sigma(1), w("a3")) == w("a3"));
  CHECK(act(Braid::sigma(2), w("a2")) == w("a2 a3 a2^-1"));
  CHECK(act(Braid::sigma(2), w("a3")) == w("a2"));
  CHECK(act(Braid::sigma(1, -1), w("a1")) == w("a2"));
  CHECK(act(Braid::sigma(1, -1), w("a2")) == w("a2^-1 a1 a2"));
  CHECK(act(Braid::sigma(2, -1), w("a2")) == w("a3"));
  CHECK(act(Braid::sigma(2, -1), w("a3")) == w("a3^-1 a2 a3"));
}

TEST_CASE("action fixes r") {
  std::mt19937 rng(20260823);
  for (int i = 0; i < 100; ++i) {
    Braid b = random_braid(rng, 40);
    CHECK(act(b, rho_word()) == rho_word());
  }
}

TEST_CASE("full twist conjugates by r") {
  Braid full = (Braid::sigma(1) * Braid::sigma(2)).pow(3);
  for (int j = 1; j <= 3; ++j) {
    Word expect = Word::gen(j).conj_by(rho_word());
    CHECK(act(full, Word::gen(j)) == expect);
  }
  CHECK(normal_form(full).identity_class());
  CHECK(normal_form(full).degree == 6);
}

TEST_CASE("action is an anti-ordered composition: rightmost letter first") {
  // act(uv, w) = act(u, act(v, w))
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Braid u = random_braid(rng, 10), v = random_braid(rng, 10);
    Word x = Word::gen(1 + i % 3);
    CHECK(act(u * v, x) == act(u, act(v, x)));
  }
}

TEST_CASE("normal form separates elements and matches action") {
  CHECK(normal_form(Braid::sigma(1) * Braid::sigma(2) * Braid::sigma(1)) ==
        normal_form(Braid::sigma(2) * Braid::sigma(1) * Braid::sigma(2)));
  CHECK(normal_form(Braid::sigma(1) * Braid::sigma(2, -1)).degree == 0);
  std::mt19937 rng(99);
  for (int i = 0; i < 500; ++i) {
    Braid u = random_braid(rng, 20), v = random_braid(rng, 20);
    bool same_nf = normal_form(u) == normal_form(v);
    bool same_action = assignment_of(u).img == assignment_of(v).img &&
                       u.degree() == v.degree();
    CHECK(same_nf == same_action);
  }
}

TEST_CASE("braid action is degree-insensitive only through the center") {
  // sigma3 as a word equals sigma1^-1 sigma2 sigma1
  CHECK(Braid::sigma(3) == parse_braid("s1^-1 s2 s1"));
  CHECK(parse_braid("s3^-2") == Braid::sigma(3, -2));
}

TEST_CASE("translation edges") {
  CHECK(translation_edge(1, 2) == Braid::sigma(1));
  CHECK(translation_edge(2, 1) == Braid::sigma(1, -1));
  CHECK(translation_edge(2, 3) == Braid::sigma(2));
  CHECK(translation_edge(3, 2) == Braid::sigma(2, -1));
  CHECK(translation_edge(3, 1) == Braid::sigma(3));
  CHECK(translation_edge(1, 3) == Braid::sigma(3, -1));
  CHECK(translation_edge(3, 3) ==
        Braid::sigma(3) * Braid::sigma(2) * Braid::sigma(3));
  CHECK(translation_edge(2, 2) ==
        Braid::sigma(2) * Braid::sigma(1) * Braid::sigma(2));
  CHECK(translation_edge(1, 1) ==
        Braid::sigma(1) * Braid::sigma(3) * Braid::sigma(1));
}

// The three path displays that pin the composition convention.  Paths are
// listed factor-first: the step at the far end comes first.
TEST_CASE("path basis: single edge") {
  Braid t = translation_path({{3, 1}});
  Assignment a = assignment_of(t);
  CHECK(a.img[0] == w("d"));
  CHECK(a.img[1] == w("a2"));
  CHECK(a.img[2] == w("a3^-1 a2^-1 a1 a2 a3"));
}

TEST_CASE("path basis: two edges") {
  Braid t = translation_path({{3, 1}, {3, 1}});
  Assignment a = assignment_of(t);
  CHECK(a.img[0] == w("d^-1 a1 d"));
  CHECK(a.img[1] == w("a2"));
  CHECK(a.img[2] == w("r^-1 d r"));
}

TEST_CASE("path basis: three edges") {
  Braid t = translation_path({{2, 1}, {3, 1}, {3, 1}});
  Assignment a = assignment_of(t);
  CHECK(a.img[0] == w("d^-1 r a2 r^-1 d"));
  CHECK(a.img[1] == w("d^-1 a1 d"));
  CHECK(a.img[2] == w("r^-1 d r"));
}

TEST_CASE("path basis: four edges") {
  Braid t = translation_path({{2, 1}, {3, 1}, {3, 1}, {3, 1}});
  Assignment a = assignment_of(t);
  CHECK(a.img[0] == w("d^-1 a1^-1 d r a2 r^-1 d^-1 a1 d"));
  CHECK(a.img[1] == w("d^-1 a1^-1 d a1 d"));
  CHECK(a.img[2] == w("r^-1 d^-1 a1 d r"));
}

TEST_CASE("reversed path is central") {
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      Braid fwd = translation_edge(i, j);
      Braid back = translation_edge(j, i);
      BraidClass nf = normal_form(fwd * back);
      CHECK(nf.m == std::array<std::int64_t, 4>{1, 0, 0, 1});
      CHECK(nf.degree % 6 == 0);
    }
}

TEST_CASE("braid print parse roundtrip") {
  Braid b = parse_braid("s1^2 s2^-1 s1");
  CHECK(parse_braid(print_braid(b)) == b);
  CHECK(print_braid(Braid()) == "1");
}
