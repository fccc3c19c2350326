#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wrep/fn_action.hpp"

using namespace wrep;

TEST_CASE("generator substitutions") {
  FreeAut s1 = generator_aut(sigma(1), 3);
  CHECK(s1.images[0] == free_letter(3, 2));
  CHECK(s1.images[1] == free_reduce(3, {{2, -1}, {1, 1}, {2, 1}}));
  CHECK(s1.images[2] == free_letter(3, 3));
  FreeAut a1 = generator_aut(alpha(1), 3);
  CHECK(a1.images[2] == free_letter(3, 3));
  CHECK(a1.images[0] == free_letter(3, 2));
  FreeAut s1inv = generator_aut(sigma(1, -1), 3);
  CHECK(compose(s1, s1inv, 1000).is_identity());
  CHECK(compose(s1inv, s1, 1000).is_identity());
}

TEST_CASE("word to automorphism") {
  CHECK(word_to_aut(GroupWord(3)).is_identity());
  GroupWord lhs(3, {alpha(1), alpha(2), alpha(1)});
  GroupWord rhs(3, {alpha(2), alpha(1), alpha(2)});
  CHECK(word_to_aut(lhs) == word_to_aut(rhs));
  // the group has trivial center, so theta^n fails to commute with some alpha
  GroupWord thn = theta(3).power(3);
  bool found = false;
  for (int i = 1; i <= 2; ++i) {
    GroupWord c = thn.commutator(GroupWord(3, {alpha(i)}));
    if (!word_to_aut(c).is_identity()) found = true;
  }
  CHECK(found);
}

TEST_CASE("equality oracle") {
  CHECK(words_equal_in_wbn(GroupWord(3, {sigma(1), sigma(2), sigma(1)}),
                           GroupWord(3, {sigma(2), sigma(1), sigma(2)})));
  CHECK_FALSE(words_equal_in_wbn(GroupWord(3, {sigma(1)}), GroupWord(3, {sigma(2)})));
  CHECK(words_equal_in_wbn(GroupWord(3, {alpha(1), alpha(2), sigma(1)}),
                           GroupWord(3, {sigma(2), alpha(1), alpha(2)})));
}

TEST_CASE("all defining relations and derived identities hold") {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& rel : relators(n)) {
      INFO("n=", n, " relation ", rel.id);
      CHECK(words_equal_in_wbn(rel.lhs, rel.rhs));
    }
    for (const auto& rel : derived_identities(n)) {
      INFO("n=", n, " identity ", rel.id);
      CHECK(words_equal_in_wbn(rel.lhs, rel.rhs));
    }
  }
}

TEST_CASE("composition is a homomorphism") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> len(0, 8), idx(1, 5), kind(0, 2);
  auto random_word = [&](int n) {
    std::vector<Generator> ls;
    int m = len(rng);
    for (int i = 0; i < m; ++i) {
      int ix = std::min(idx(rng), n - 1);
      int which = kind(rng);
      if (which == 0)
        ls.push_back(alpha(ix));
      else
        ls.push_back(sigma(ix, which == 1 ? 1 : -1));
    }
    return GroupWord(n, std::move(ls));
  };
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);  // up to n = 6
    GroupWord u = random_word(n), v = random_word(n);
    CHECK(word_to_aut(u.concat(v)) ==
          compose(word_to_aut(u), word_to_aut(v), 1000000));
  }
}

TEST_CASE("images keep the conjugate shape") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> len(1, 12), idx(1, 4), kind(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Generator> ls;
    int m = len(rng);
    for (int i = 0; i < m; ++i) {
      int which = kind(rng);
      if (which == 0)
        ls.push_back(alpha(idx(rng)));
      else
        ls.push_back(sigma(idx(rng), which == 1 ? 1 : -1));
    }
    FreeAut aut = word_to_aut(GroupWord(5, std::move(ls)));
    std::vector<int> perm;
    CHECK(is_conjugating_aut(aut, &perm));
    std::vector<char> seen(6, 0);
    for (int p : perm) seen[static_cast<std::size_t>(p)] = 1;
    for (int i = 1; i <= 5; ++i) CHECK(seen[static_cast<std::size_t>(i)] == 1);
  }
}

TEST_CASE("letter limit fails loudly") {
  // powers of s1 S2 blow up the image length exponentially
  GroupWord w(3);
  for (int i = 0; i < 12; ++i)
    w = w.concat(GroupWord(3, {sigma(1), sigma(2, -1)}));
  CHECK_THROWS_AS(word_to_aut(w, 500), WordLengthLimit);
  CHECK_NOTHROW(word_to_aut(w, 1000000));
}
