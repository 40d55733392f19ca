#include "braidverify/braid.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace braidverify;

TEST_SUITE("braid") {

TEST_CASE("word parsing and round trips") {
  BraidWord w = BraidWord::parse(4, "1 2 -3");
  CHECK(w.letters() == std::vector<int>{1, 2, -3});
  CHECK(w.text() == "1 2 -3");
  CHECK(BraidWord::parse(4, w.text()).letters() == w.letters());
  CHECK(BraidWord::parse(3, "").empty());
  CHECK_THROWS(BraidWord::parse(3, "3"));
  CHECK_THROWS(BraidWord::parse(3, "0"));
  CHECK_THROWS(BraidWord::parse(3, "1 x"));
  CHECK_THROWS(BraidWord(2, {2}));
}

TEST_CASE("inverse, power and product") {
  BraidWord w = BraidWord::parse(4, "1 -2 3");
  CHECK(w.inverse().letters() == std::vector<int>{-3, 2, -1});
  CHECK(w.pow(0).empty());
  CHECK(w.pow(2).letters() == std::vector<int>{1, -2, 3, 1, -2, 3});
  CHECK(w.pow(-1).letters() == w.inverse().letters());
  CHECK((w * w.inverse()).length() == 6);
  CHECK_THROWS(w * BraidWord(3));
}

TEST_CASE("underlying permutation is a homomorphic image") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    BraidWord u = oracle::random_word(rng, n, 1 + static_cast<int>(rng() % 10));
    BraidWord v = oracle::random_word(rng, n, 1 + static_cast<int>(rng() % 10));
    CHECK(permutation_of(u * v) == permutation_of(u) * permutation_of(v));
    CHECK(permutation_of(u.inverse()) == permutation_of(u).inverse());
  }
  CHECK(permutation_of(BraidWord::parse(3, "1")) == Perm(3, {2, 1, 3}));
}

TEST_CASE("exponent sum") {
  CHECK(exponent_sum(BraidWord::parse(4, "1 2 -3 -3 1")) == 1);
  CHECK(exponent_sum(BraidWord::parse(4, "-1 2 -3 -3 -1")) == -3);
  CHECK(exponent_sum(half_twist_word(5)) == 10);
  CHECK(exponent_sum(zeta(5, 5)) == 20);
}

TEST_CASE("normal form of elementary words") {
  GarsideForm trivial = normal_form(BraidWord(3));
  CHECK(trivial.is_trivial());
  CHECK(trivial.infimum() == 0);
  CHECK(trivial.canonical_length() == 0);

  GarsideForm gen = normal_form(BraidWord::parse(3, "1"));
  CHECK(gen.infimum() == 0);
  CHECK(gen.canonical_length() == 1);
  CHECK(gen.factors().front() == Perm(3, {2, 1, 3}));

  GarsideForm geninv = normal_form(BraidWord::parse(3, "-1"));
  CHECK(geninv.infimum() == -1);
  CHECK(geninv.canonical_length() == 1);

  GarsideForm half = normal_form(half_twist_word(4));
  CHECK(half.infimum() == 1);
  CHECK(half.canonical_length() == 0);
}

TEST_CASE("full twist is a power of delta") {
  for (int n = 2; n <= 6; ++n) {
    GarsideForm f = normal_form(zeta(n, n));
    CHECK(f.infimum() == 2);
    CHECK(f.canonical_length() == 0);
  }
}

TEST_CASE("normal form kills w times w inverse") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    BraidWord w = oracle::random_word(rng, n, 1 + static_cast<int>(rng() % 14));
    CHECK(is_trivial(w * w.inverse()));
    CHECK(is_trivial(w.inverse() * w));
  }
}

TEST_CASE("normal form is a complete invariant (artin action oracle)") {
  std::mt19937_64 rng(33);
  int equal_seen = 0, distinct_seen = 0;
  for (int trial = 0; trial < 250; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    BraidWord u = oracle::random_word(rng, n, 1 + static_cast<int>(rng() % 9));
    BraidWord v = trial % 2 == 0
                      ? oracle::scramble(rng, u, 6)
                      : oracle::random_word(rng, n, 1 + static_cast<int>(rng() % 9));
    bool expected = oracle::artin_equal(u, v);
    CHECK(equals(u, v) == expected);
    (expected ? equal_seen : distinct_seen) += 1;
  }
  // the sample genuinely exercises both outcomes
  CHECK(equal_seen >= 80);
  CHECK(distinct_seen >= 80);
}

TEST_CASE("normal form round trips through its own word") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    BraidWord w = oracle::random_word(rng, n, 1 + static_cast<int>(rng() % 12));
    GarsideForm f = normal_form(w);
    CHECK(normal_form(f.word()) == f);
    CHECK(equals(f.word(), w));
  }
}

TEST_CASE("normal form factors are proper left weighted simples") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    BraidWord w = oracle::random_word(rng, n, 1 + static_cast<int>(rng() % 12));
    GarsideForm f = normal_form(w);
    Perm delta = garside::half_twist_perm(n);
    for (const Perm& p : f.factors()) {
      CHECK_FALSE(p.is_identity());
      CHECK_FALSE(p == delta);
    }
    for (std::size_t i = 0; i + 1 < f.factors().size(); ++i) {
      CHECK(garside::is_left_weighted(f.factors()[i], f.factors()[i + 1]));
      CHECK(oracle::left_weighted_oracle(f.factors()[i], f.factors()[i + 1]));
    }
  }
}

TEST_CASE("multiplying by delta shifts the infimum") {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    BraidWord w = oracle::random_word(rng, n, 1 + static_cast<int>(rng() % 10));
    GarsideForm f = normal_form(w);
    GarsideForm g = normal_form(half_twist_word(n) * half_twist_word(n) * w);
    CHECK(g.infimum() == f.infimum() + 2);
    CHECK(g.canonical_length() == f.canonical_length());
  }
}

TEST_CASE("meet of simples matches the exhaustive oracle") {
  auto perms4 = all_perms(4);
  for (const Perm& a : perms4)
    for (const Perm& b : perms4) CHECK(garside::meet(a, b) == oracle::meet_oracle(a, b));

  std::mt19937_64 rng(37);
  auto perms5 = all_perms(5);
  for (int trial = 0; trial < 150; ++trial) {
    const Perm& a = perms5[rng() % perms5.size()];
    const Perm& b = perms5[rng() % perms5.size()];
    CHECK(garside::meet(a, b) == oracle::meet_oracle(a, b));
  }
}

TEST_CASE("meet is the lattice meet") {
  std::mt19937_64 rng(38);
  auto perms = all_perms(4);
  for (int trial = 0; trial < 150; ++trial) {
    const Perm& a = perms[rng() % perms.size()];
    const Perm& b = perms[rng() % perms.size()];
    Perm m = garside::meet(a, b);
    CHECK(garside::is_prefix(m, a));
    CHECK(garside::is_prefix(m, b));
    CHECK(garside::meet(a, a) == a);
    CHECK(m == garside::meet(b, a));
  }
}

TEST_CASE("complement pairs with delta") {
  for (const Perm& a : all_perms(5)) {
    Perm c = garside::complement(a);
    CHECK(a * c == garside::half_twist_perm(5));
    CHECK(oracle::inversions(a) + oracle::inversions(c) == 10);
  }
}

TEST_CASE("tau is conjugation by the half twist") {
  for (const Perm& p : all_perms(5)) {
    Perm w0 = garside::half_twist_perm(5);
    CHECK(garside::tau_conjugate(p) == w0 * p * w0);
  }
}

TEST_CASE("positive word spells its permutation") {
  std::mt19937_64 rng(39);
  auto perms = all_perms(5);
  for (const Perm& p : perms) {
    auto word = garside::positive_word(p);
    CHECK(static_cast<int>(word.size()) == oracle::inversions(p));
    Perm acc(5);
    for (int letter : word) {
      CHECK(letter >= 1);
      CHECK(letter <= 4);
      acc = acc * Perm::transposition(5, letter, letter + 1);
    }
    CHECK(acc == p);
  }
}

TEST_CASE("half twist word and permutation agree") {
  for (int n = 2; n <= 6; ++n) {
    CHECK(permutation_of(half_twist_word(n)) == garside::half_twist_perm(n));
    std::vector<int> reversed(n);
    for (int i = 1; i <= n; ++i) reversed[i - 1] = n + 1 - i;
    CHECK(garside::half_twist_perm(n) == Perm(n, reversed));
  }
}

TEST_CASE("zeta is central") {
  for (int n = 3; n <= 5; ++n) {
    BraidWord z = zeta(n, n);
    for (int i = 1; i < n; ++i) {
      BraidWord s = BraidWord(n, {i});
      CHECK(equals(z * s, s * z));
    }
  }
  CHECK(zeta(4, 1).empty());
  CHECK(equals(zeta(4, 2), BraidWord::parse(4, "1 1")));
}

TEST_CASE("pure braid generators are pure with unit linking") {
  for (int n = 3; n <= 5; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        BraidWord a = pure_braid_generator(n, i, j);
        CHECK(permutation_of(a).is_identity());
        StrandPairMatrix lk = linking_numbers(a);
        for (int p = 1; p < n; ++p)
          for (int q = p + 1; q <= n; ++q)
            CHECK(lk.at(p, q) == ((p == i && q == j) ? 1 : 0));
      }
}

TEST_CASE("linking numbers match the strand tracking oracle") {
  std::mt19937_64 rng(40);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    BraidWord u = oracle::random_word(rng, n, static_cast<int>(rng() % 12));
    // close up into a pure braid
    BraidWord w = u * BraidWord(n, garside::positive_word(permutation_of(u).inverse()));
    REQUIRE(permutation_of(w).is_identity());
    auto expected = oracle::linking_oracle(w);
    REQUIRE(expected.has_value());
    StrandPairMatrix lk = linking_numbers(w);
    long total = 0;
    for (int p = 1; p < n; ++p)
      for (int q = p + 1; q <= n; ++q) {
        auto it = expected->find({p, q});
        long want = it == expected->end() ? 0 : it->second;
        CHECK(lk.at(p, q) == want);
        total += 2 * lk.at(p, q);
      }
    CHECK(total == exponent_sum(w));
  }
  CHECK_THROWS(linking_numbers(BraidWord::parse(3, "1")));
}

TEST_CASE("linking numbers are invariant under rewriting") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + static_cast<int>(rng() % 2);
    BraidWord u = oracle::random_word(rng, n, static_cast<int>(rng() % 8));
    BraidWord w = u * BraidWord(n, garside::positive_word(permutation_of(u).inverse()));
    BraidWord w2 = oracle::scramble(rng, w, 8);
    CHECK(linking_numbers(w) == linking_numbers(w2));
  }
}

TEST_CASE("substitution respects products") {
  std::mt19937_64 rng(42);
  std::vector<BraidWord> images;
  for (int i = 1; i <= 3; ++i) images.push_back(zeta(5, 2) * BraidWord(5, {i}));
  for (int trial = 0; trial < 50; ++trial) {
    BraidWord u = oracle::random_word(rng, 4, 1 + static_cast<int>(rng() % 6));
    BraidWord v = oracle::random_word(rng, 4, 1 + static_cast<int>(rng() % 6));
    BraidWord lhs = substitute(u * v, images);
    BraidWord rhs = substitute(u, images) * substitute(v, images);
    CHECK(lhs.letters() == rhs.letters());
    CHECK(equals(substitute(u.inverse(), images), substitute(u, images).inverse()));
  }
}

} // TEST_SUITE
