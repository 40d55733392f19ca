#include "braidverify/hom_enum.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace braidverify;

namespace {

GroupHom hom_from(const Presentation& p, std::vector<Perm> images) {
  GroupHom h(p, PermImages{std::move(images)});
  REQUIRE(h.verify());
  return h;
}

} // namespace

TEST_SUITE("hom_enum") {

TEST_CASE("all homomorphisms from the three strand braid group to S3") {
  // images (a, b) with aba = bab: six diagonal pairs plus six pairs of
  // distinct transpositions
  HomClassification cls = enumerate_homs(braid_presentation(3), 3, false);
  CHECK(cls.total == 12);
  CHECK(cls.classes.size() == 4);
  long sum = 0;
  for (const HomClass& c : cls.classes) {
    sum += c.orbit_size;
    GroupHom h(braid_presentation(3), PermImages{c.representative.entries()});
    CHECK(h.verify());
    CHECK(canonical_under_conjugation(c.representative) == c.representative);
  }
  CHECK(sum == cls.total);
}

TEST_CASE("surjections from B3 to S3 form a single class") {
  HomClassification cls = enumerate_homs(braid_presentation(3), 3, true);
  CHECK(cls.classes.size() == 1);
  CHECK(cls.classes.front().orbit_size == 6);
  CHECK(cls.total == 6);
}

TEST_CASE("homomorphisms to S2 factor through the sign") {
  HomClassification all = enumerate_homs(braid_presentation(3), 2, false);
  CHECK(all.total == 2);
  HomClassification onto = enumerate_homs(braid_presentation(3), 2, true);
  CHECK(onto.total == 1);
}

TEST_CASE("free involution products map freely to S2") {
  Presentation f = free_product_three_involutions();
  HomClassification all = enumerate_homs(f, 2, false);
  CHECK(all.total == 8);
  CHECK(all.classes.size() == 8);
  HomClassification onto = enumerate_homs(f, 2, true);
  CHECK(onto.total == 7);
}

TEST_CASE("surjections from B4 to S4 and the conjugacy shortcut") {
  HomClassification cls = enumerate_homs(braid_presentation(4), 4, true);
  CHECK(cls.classes.size() == 3);
  for (const HomClass& c : cls.classes) CHECK(c.orbit_size == 24);

  EnumOptions opt;
  opt.assume_generators_conjugate = true;
  HomClassification fast = enumerate_homs(braid_presentation(4), 4, true, opt);
  CHECK(fast.classes.size() == cls.classes.size());
  CHECK(fast.total == cls.total);
  for (std::size_t i = 0; i < cls.classes.size(); ++i)
    CHECK(fast.classes[i].representative == cls.classes[i].representative);
}

TEST_CASE("degree limits and budgets") {
  CHECK_THROWS(enumerate_homs(braid_presentation(3), 7, false));
  CHECK_THROWS(enumerate_homs(braid_presentation(3), 0, false));
  CHECK_THROWS(enumerate_homs(braid_presentation(3), 6, false)); // gated
  EnumOptions tiny;
  tiny.node_budget = 3;
  CHECK_THROWS_AS(enumerate_homs(braid_presentation(4), 4, false, tiny),
                  std::runtime_error);
}

TEST_CASE("kernel membership for the standard projection") {
  Presentation b4 = braid_presentation(4);
  GroupHom pi = hom_from(b4, {Perm::transposition(4, 1, 2),
                              Perm::transposition(4, 2, 3),
                              Perm::transposition(4, 3, 4)});
  CHECK(kernel_contains(pi, pure_braid_generator(4, 1, 3).letters()));
  CHECK(kernel_contains(pi, zeta(4, 4).letters()));
  std::vector<int> sigma1 = {1};
  CHECK_FALSE(kernel_contains(pi, sigma1));
}

TEST_CASE("kernel comparison distinguishes the exotic surjections") {
  Presentation b4 = braid_presentation(4);
  Perm a = Perm::parse_cycles("(1 2 3 4)", 4);
  Perm b = Perm::parse_cycles("(2 1 3 4)", 4);
  GroupHom pi = hom_from(b4, {Perm::transposition(4, 1, 2),
                              Perm::transposition(4, 2, 3),
                              Perm::transposition(4, 3, 4)});
  GroupHom e2 = hom_from(b4, {a, b, a});
  GroupHom e3 = hom_from(b4, {a, b, a.inverse()});

  CHECK(kernels_equal(pi, pi));
  CHECK_FALSE(kernels_equal(pi, e2));
  CHECK_FALSE(kernels_equal(pi, e3));
  CHECK_FALSE(kernels_equal(e2, e3));

  // conjugating a homomorphism never changes its kernel
  std::mt19937_64 rng(61);
  auto perms = all_perms(4);
  for (int trial = 0; trial < 20; ++trial) {
    Perm g = perms[rng() % perms.size()];
    GroupHom conj = hom_from(b4, {conjugate(a, g), conjugate(b, g), conjugate(a, g)});
    CHECK(kernels_equal(e2, conj));
    CHECK_FALSE(kernels_equal(e3, conj));
  }
}

TEST_CASE("kernel comparison catches different image sizes") {
  Presentation b3 = braid_presentation(3);
  GroupHom onto = hom_from(b3, {Perm::transposition(3, 1, 2),
                                Perm::transposition(3, 2, 3)});
  GroupHom sign = hom_from(b3, {Perm::transposition(3, 1, 2),
                                Perm::transposition(3, 1, 2)});
  CHECK_FALSE(kernels_equal(onto, sign));
  CHECK(kernels_equal(sign, sign));
}

TEST_CASE("kernel comparison requires matching sources") {
  GroupHom f = hom_from(braid_presentation(3), {Perm::transposition(3, 1, 2),
                                                Perm::transposition(3, 2, 3)});
  GroupHom g = hom_from(braid_presentation(4), {Perm::transposition(4, 1, 2),
                                                Perm::transposition(4, 2, 3),
                                                Perm::transposition(4, 3, 4)});
  CHECK_THROWS(kernels_equal(f, g));
}

TEST_CASE("orbit sizes are the index of the simultaneous centralizer") {
  HomClassification cls = enumerate_homs(braid_presentation(4), 4, false);
  for (const HomClass& c : cls.classes) {
    long stabilizer = 0;
    for (const Perm& g : all_perms(4))
      if (conjugate(c.representative, g) == c.representative) ++stabilizer;
    CHECK(c.orbit_size * stabilizer == 24);
  }
}

} // TEST_SUITE
