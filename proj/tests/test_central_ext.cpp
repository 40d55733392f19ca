#include "braidverify/central_ext.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace braidverify;

TEST_SUITE("central_ext") {

TEST_CASE("free pair words reduce and parse") {
  CHECK(FreePairWord::parse("xX").empty());
  CHECK(FreePairWord::parse("xyXY").letters() == std::vector<int>{1, 2, -1, -2});
  CHECK(FreePairWord::parse("x y X Y").letters() == std::vector<int>{1, 2, -1, -2});
  CHECK(FreePairWord({1, -1, 2}).letters() == std::vector<int>{2});
  CHECK_THROWS(FreePairWord::parse("xz"));
  CHECK_THROWS(FreePairWord({3}));
  CHECK(FreePairWord::parse("xyXY").text() == "xyXY");
  CHECK(FreePairWord::parse(FreePairWord::parse("xxYx").text()) ==
        FreePairWord::parse("xxYx"));
}

TEST_CASE("free pair word group operations") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    FreePairWord u = random_commutator_word(rng, 10);
    FreePairWord v = random_commutator_word(rng, 10);
    CHECK((u * u.inverse()).empty());
    CHECK((u * v).inverse() == v.inverse() * u.inverse());
    CHECK(u.exponent_sum_x() == 0);
    CHECK(u.exponent_sum_y() == 0);
    CHECK(u.is_commutator_word());
    CHECK(u.size() % 2 == 0);
    CHECK(u.size() <= 10);
  }
  CHECK(FreePairWord::parse("xy").exponent_sum_x() == 1);
  CHECK(FreePairWord::parse("xyX").exponent_sum_x() == 0);
  CHECK_FALSE(FreePairWord::parse("xy").is_commutator_word());
}

TEST_CASE("random commutator words are deterministic per seed") {
  std::mt19937_64 a(99), b(99), c(100);
  FreePairWord wa = random_commutator_word(a, 12);
  FreePairWord wb = random_commutator_word(b, 12);
  CHECK(wa == wb);
  bool any_different = false;
  for (int k = 0; k < 10; ++k)
    if (random_commutator_word(c, 12) != random_commutator_word(b, 12))
      any_different = true;
  CHECK(any_different);
}

TEST_CASE("free pair word evaluation substitutes braids") {
  FreePairWord f = FreePairWord::parse("xyXY");
  BraidWord a = BraidWord::parse(3, "1");
  BraidWord b = BraidWord::parse(3, "2");
  BraidWord image = f.evaluate(a, b);
  CHECK(image.letters() == std::vector<int>{1, 2, -1, -2});
  BraidWord z = zeta(3, 3);
  CHECK(is_trivial(FreePairWord::parse("xyXY").evaluate(a * z, a * z)));
}

TEST_CASE("twisting a generator multiplies exponent sums by nu") {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);
    long e = static_cast<long>(rng() % 7) - 3;
    std::vector<int> letters;
    for (int k = 0, len = 1 + static_cast<int>(rng() % 8); k < len; ++k) {
      int g = 1 + static_cast<int>(rng() % (n - 1));
      letters.push_back(rng() % 2 == 0 ? g : -g);
    }
    BraidWord w(n, letters);
    BraidWord image = phi_nu_apply(w, e);
    CHECK(exponent_sum(image) == exponent_sum(w) * phi_nu_ab_exponent(n, e));
  }
}

TEST_CASE("abelianized exponent values") {
  CHECK(phi_nu_ab_exponent(4, 1) == 13);
  CHECK(phi_nu_ab_exponent(4, -1) == -11);
  CHECK(phi_nu_ab_exponent(3, 2) == 13);
  CHECK(phi_nu_ab_exponent(5, 0) == 1);
  for (int n = 3; n <= 6; ++n)
    for (long e = -3; e <= 3; ++e)
      if (e != 0) CHECK(phi_nu_ab_exponent(n, e) != 1);
}

TEST_CASE("twisted endomorphisms respect the relations") {
  for (int n = 3; n <= 5; ++n)
    for (long e = -2; e <= 2; ++e) CHECK(phi_nu_verify(n, e));
}

TEST_CASE("composition law on the twist parameters") {
  CHECK(phi_compose_law(3, 1, 1));
  CHECK(phi_compose_law(4, -1, 2));
  CHECK(phi_compose_law(5, 2, -1));
  // the law mirrors integer arithmetic: 13 * 13 = 169 = 1 + 12 * 14
  CHECK(phi_nu_ab_exponent(4, 1) * phi_nu_ab_exponent(4, 1) ==
        phi_nu_ab_exponent(4, 14));
}

TEST_CASE("relator constraints pin all twists equal") {
  for (int n = 3; n <= 6; ++n) CHECK(relator_constraints_force_equal_twists(n));
}

TEST_CASE("splitting search over small moduli") {
  CHECK(splitting_search(4, 1) == 0);
  CHECK(splitting_search(4, 5) == 2); // 1 + 12*2 = 25
  CHECK(splitting_search(3, 7) == 1); // 1 + 6 = 7
  CHECK_FALSE(splitting_search(4, 2).has_value());
  CHECK_FALSE(splitting_search(4, 3).has_value());
  CHECK_FALSE(splitting_search(3, 9).has_value());
  for (int n = 3; n <= 5; ++n)
    for (long d = 1; d <= 20; ++d) {
      bool coprime = std::gcd(static_cast<long>(n) * (n - 1), d) == 1;
      CHECK(splitting_search(n, d).has_value() == coprime);
    }
}

TEST_CASE("order of the extension class") {
  CHECK(class_order(4, 12) == 12);
  CHECK(class_order(4, 5) == 1);
  CHECK(class_order(3, 4) == 2);
  for (int n = 3; n <= 5; ++n) {
    long nn = static_cast<long>(n) * (n - 1);
    CHECK(class_order(n, nn) == nn);
    for (long d = 1; d <= 20; ++d) CHECK(class_order(n, d) == std::gcd(nn, d));
  }
}

TEST_CASE("transgression cokernel sizes") {
  AbelianGroup t = transgression_cokernel(4, 12);
  CHECK(t.free_rank == 0);
  CHECK(t.torsion == std::vector<mpz_class>{12});
  CHECK(transgression_cokernel(4, 5) == AbelianGroup{});
  for (int n = 3; n <= 5; ++n) {
    long nn = static_cast<long>(n) * (n - 1);
    for (long k = 1; k <= 3; ++k) {
      AbelianGroup g = transgression_cokernel(n, k * nn);
      CHECK(g.free_rank == 0);
      CHECK(g.torsion == std::vector<mpz_class>{nn});
    }
  }
}

TEST_CASE("commutation with the twisted endomorphism") {
  CHECK(gt_commutation_check(4, FreePairWord::parse("xyXY"), 3, 1));
  CHECK(gt_commutation_check(3, FreePairWord::parse("xyXYxyXY"), -1, 2));
  CHECK(gt_commutation_check(4, FreePairWord(), 2, 1));
  // words outside the commutator subgroup are rejected outright
  CHECK_THROWS(gt_commutation_check(3, FreePairWord::parse("x"), 1, 1));
  CHECK_THROWS(gt_commutation_check(3, FreePairWord::parse("xyX"), 1, 1));
}

TEST_CASE("centrality insensitivity of commutator words") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 10; ++trial) {
    FreePairWord f = random_commutator_word(rng, 8);
    for (int n : {3, 4})
      for (long e = -1; e <= 1; ++e) CHECK(f_centrality_insensitive(n, f, e));
  }
}

} // TEST_SUITE
