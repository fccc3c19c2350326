#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wrep/words.hpp"

using namespace wrep;

namespace {

int formula_count(int n) { return (n - 1) + 3 * (n - 2) * (n - 3) / 2 + 4 * (n - 2); }

bool contains_pair(const std::vector<RelationPair>& rels, const GroupWord& lhs,
                   const GroupWord& rhs) {
  for (const auto& r : rels)
    if ((r.lhs == lhs && r.rhs == rhs) || (r.lhs == rhs && r.rhs == lhs)) return true;
  return false;
}

}  // namespace

TEST_CASE("relator enumeration at n = 3") {
  auto rels = relators(3);
  CHECK(rels.size() == 6);
  int inv = 0, braid_a = 0, braid_s = 0, mixed7 = 0, mixed8 = 0;
  for (const auto& r : rels) {
    if (r.id[1] == '1') ++inv;
    if (r.id[1] == '3') ++braid_a;
    if (r.id[1] == '5') ++braid_s;
    if (r.id[1] == '7') ++mixed7;
    if (r.id[1] == '8') ++mixed8;
  }
  CHECK(inv == 2);
  CHECK(braid_a == 1);
  CHECK(braid_s == 1);
  CHECK(mixed7 == 1);
  CHECK(mixed8 == 1);
  // the involution pair is spelled out, not pre-reduced
  CHECK(rels[0].lhs.letters().size() == 2);
  CHECK(rels[0].rhs.empty());
}

TEST_CASE("relator count formula") {
  for (int n = 3; n <= 8; ++n) CHECK(static_cast<int>(relators(n).size()) == formula_count(n));
  CHECK(relators(6).size() + derived_identities(6).size() == 55);
  CHECK_THROWS_AS(relators(2), BadStrandCount);
}

TEST_CASE("specific relators appear") {
  CHECK(contains_pair(relators(4), GroupWord(4, {alpha(1), sigma(3)}),
                      GroupWord(4, {sigma(3), alpha(1)})));
  CHECK(contains_pair(relators(5), GroupWord(5, {sigma(2), sigma(3), alpha(2)}),
                      GroupWord(5, {alpha(3), sigma(2), sigma(3)})));
}

TEST_CASE("derived identities") {
  auto d3 = derived_identities(3);
  CHECK(d3.size() == 4);
  GroupWord th = theta(3);
  CHECK(contains_pair(d3, GroupWord(3, {alpha(2)}),
                      th.concat(GroupWord(3, {alpha(1)})).concat(th.inverted())));
  CHECK(contains_pair(d3, GroupWord(3, {alpha(1), alpha(2)}).power(3), GroupWord(3)));
  GroupWord th4 = theta(4);
  CHECK(contains_pair(derived_identities(4), GroupWord(4, {sigma(2)}),
                      th4.concat(GroupWord(4, {sigma(1)})).concat(th4.inverted())));
  CHECK(derived_identities(5).size() == 12);
}

TEST_CASE("word operations") {
  GroupWord s1(3, {sigma(1)});
  CHECK(s1.concat(s1.inverted()).empty());
  CHECK(theta(3).inverted().to_string() == "S2 S1");
  GroupWord c = theta(3).power(3).commutator(GroupWord(3, {alpha(1)}));
  CHECK(c.letters().size() == 14);
  // alpha letters are involutive at the word level
  GroupWord aa(3, {alpha(1), alpha(1)});
  CHECK(aa.empty());
  CHECK_THROWS_AS(GroupWord(3, {sigma(1)}).concat(GroupWord(4, {sigma(1)})), StrandMismatch);
  CHECK_THROWS_AS(GroupWord(3, {sigma(5)}), IndexOutOfRange);
}

TEST_CASE("redundant braid generator") {
  GroupWord s0 = sigma_zero(4);
  CHECK_FALSE(s0.empty());
  // theta s3 theta^-1 at n = 4 reduces to s1 s2 s3 s3 S2 S1... spot-check length parity
  CHECK(s0.letters().size() % 2 == 1);
}

TEST_CASE("parsing") {
  GroupWord w = parse_word("s1 s2 a1", 3);
  CHECK(w.letters().size() == 3);
  CHECK(w.letters()[2].kind == Generator::Alpha);
  CHECK(parse_word("theta", 4) == theta(4));
  CHECK(parse_word("theta THETA", 4).empty());
  CHECK(parse_word("a1 a1", 3).empty());
  CHECK(parse_word("s1 S1", 3).empty());
  CHECK(parse_word("s1 s2 # trailing comment", 3).letters().size() == 2);
  CHECK_THROWS_AS(parse_word("s1 bogus", 3), WordSyntaxError);
  CHECK_THROWS_AS(parse_word("s9", 3), IndexOutOfRange);
  CHECK_THROWS_AS(parse_word("sx", 3), WordSyntaxError);
}

TEST_CASE("free reduction is confluent over concatenation order") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> len(0, 6), idx(1, 3), kind(0, 2);
  auto random_word = [&](int n) {
    std::vector<Generator> ls;
    int m = len(rng);
    for (int i = 0; i < m; ++i) {
      int which = kind(rng);
      int ix = std::min(idx(rng), n - 1);
      if (which == 0)
        ls.push_back(alpha(ix));
      else
        ls.push_back(sigma(ix, which == 1 ? 1 : -1));
    }
    return GroupWord(n, std::move(ls));
  };
  for (int trial = 0; trial < 300; ++trial) {
    GroupWord a = random_word(4), b = random_word(4), c = random_word(4);
    CHECK(a.concat(b).concat(c) == a.concat(b.concat(c)));
  }
}
