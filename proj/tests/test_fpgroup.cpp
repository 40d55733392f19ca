#include "braidverify/fpgroup.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

using namespace braidverify;

namespace {

GroupHom symmetric_quotient(int n) {
  std::vector<Perm> images;
  for (int i = 1; i < n; ++i) images.push_back(Perm::transposition(n, i, i + 1));
  GroupHom hom(braid_presentation(n), PermImages{std::move(images)});
  REQUIRE(hom.verify());
  return hom;
}

} // namespace

TEST_SUITE("fpgroup") {

TEST_CASE("presentation construction validates relators") {
  CHECK_THROWS(Presentation({}, {}));
  CHECK_THROWS(Presentation({"a"}, {{2}}));
  CHECK_THROWS(Presentation({"a"}, {{0}}));
  CHECK_THROWS(Presentation({"a", ""}, {}));
  Presentation p({"a", "b"}, {{1, 2, -1, -2}});
  CHECK(p.generator_count() == 2);
  CHECK(p.with_relator({1, 1}).relators.size() == 2);
}

TEST_CASE("presentation text round trip") {
  Presentation p = braid_presentation(4);
  Presentation q = Presentation::parse(p.serialize());
  CHECK(q.generators == p.generators);
  CHECK(q.relators == p.relators);
  CHECK_THROWS(Presentation::parse("relators:\n1 1\n"));
  CHECK_THROWS(Presentation::parse("generators: a\nrelators:\n2\n"));
}

TEST_CASE("presentation file round trip") {
  auto path = std::filesystem::temp_directory_path() / "braidverify_load_test.txt";
  Presentation p = mcg_sphere_presentation(5);
  {
    std::ofstream out(path);
    out << p.serialize();
  }
  Presentation q = Presentation::load(path.string());
  CHECK(q.generators == p.generators);
  CHECK(q.relators == p.relators);
  std::filesystem::remove(path);
  CHECK_THROWS(Presentation::load("/nonexistent/path/nope.txt"));
}

TEST_CASE("builtin presentations") {
  CHECK(builtin_presentation_names().size() == 4);
  for (const char* name : {"braid:4", "mcg:5", "symmetric:4", "free222"})
    CHECK_NOTHROW(builtin_presentation(name));
  CHECK(builtin_presentation("braid:4").generator_count() == 3);
  CHECK(builtin_presentation("free222").generator_count() == 3);
  CHECK_THROWS(builtin_presentation("nope"));
  CHECK_THROWS(builtin_presentation("braid:1"));
}

TEST_CASE("braid presentation relators hold in the braid group") {
  for (int n = 2; n <= 5; ++n) {
    Presentation p = braid_presentation(n);
    CHECK(p.generator_count() == n - 1);
    std::size_t expected = static_cast<std::size_t>(n - 2) +
                           static_cast<std::size_t>((n - 2) * (n - 3)) / 2;
    CHECK(p.relators.size() == std::max<std::size_t>(expected, 0));
    for (const auto& r : p.relators)
      CHECK(is_trivial(BraidWord(n, r)));
  }
}

TEST_CASE("sphere mapping class relators hold under the symmetric quotient") {
  Presentation p = mcg_sphere_presentation(4);
  CHECK(p.generator_count() == 3);
  CHECK(p.relators.size() == braid_presentation(4).relators.size() + 2);
  std::vector<Perm> images;
  for (int i = 1; i < 4; ++i) images.push_back(Perm::transposition(4, i, i + 1));
  GroupHom hom(p, PermImages{std::move(images)});
  CHECK(hom.verify());
}

TEST_CASE("homomorphism verification catches failures") {
  GroupHom good = symmetric_quotient(4);
  CHECK(good.verified());
  CHECK(good.is_perm_target());

  GroupHom bad(braid_presentation(4),
               PermImages{{Perm::transposition(4, 1, 2), Perm::transposition(4, 1, 2),
                           Perm::transposition(4, 3, 4)}});
  CHECK_FALSE(bad.verify());

  CHECK_THROWS(GroupHom(braid_presentation(4),
                        PermImages{{Perm::transposition(4, 1, 2)}}));
  CHECK_THROWS(GroupHom(braid_presentation(4),
                        PermImages{{Perm::transposition(4, 1, 2),
                                    Perm::transposition(4, 2, 3),
                                    Perm::transposition(5, 3, 4)}}));
}

TEST_CASE("homomorphism evaluation folds words") {
  GroupHom hom = symmetric_quotient(4);
  std::vector<int> word = {1, 2, -1};
  Perm expected = Perm::transposition(4, 1, 2) * Perm::transposition(4, 2, 3) *
                  Perm::transposition(4, 1, 2);
  CHECK(hom.eval_perm(word) == expected);

  GroupHom ident(braid_presentation(3),
                 BraidImages{{BraidWord(3, {1}), BraidWord(3, {2})}});
  CHECK(ident.verify());
  CHECK(equals(ident.eval_braid(std::vector<int>{1, 2, 1}),
               BraidWord::parse(3, "2 1 2")));

  GroupHom fp(free_product_three_involutions(),
              FreeProductImages{{FPWord({1}), FPWord({2}), FPWord({3})}});
  CHECK(fp.verify());
  CHECK(fp.eval_fp(std::vector<int>{1, 2, -1}) == FPWord({1, 2, 1}));
}

TEST_CASE("coset enumeration of finite symmetric quotients") {
  for (int n = 2; n <= 4; ++n) {
    Presentation p = coxeter_symmetric_presentation(n);
    CosetTable t = todd_coxeter(p, {}, 500);
    long order = 1;
    for (int k = 2; k <= n; ++k) order *= k;
    CHECK(t.size() == order);
    CHECK(t.is_consistent_with(p));
  }
}

TEST_CASE("coset enumeration with subgroup generators") {
  Presentation s3 = coxeter_symmetric_presentation(3);
  CosetTable t = todd_coxeter(s3, {{1}}, 100);
  CHECK(t.size() == 3);
  CHECK(t.act(0, 1) == 0); // subgroup coset fixed by its generator
  CHECK(t.is_consistent_with(s3));

  Presentation z({"a"}, {{1, 1, 1, 1, 1}});
  CHECK(todd_coxeter(z, {}, 100).size() == 5);
  CHECK(todd_coxeter(z, {{1, 1}}, 100).size() == 1); // gcd(2,5) = 1
  CHECK(todd_coxeter(Presentation({"a"}, {{1}}), {}, 100).size() == 1);
}

TEST_CASE("coset enumeration reports blowups") {
  CHECK_THROWS_AS(todd_coxeter(braid_presentation(3), {}, 60), CosetLimitExceeded);
  CHECK_THROWS_AS(todd_coxeter(coxeter_symmetric_presentation(4), {}, 10),
                  CosetLimitExceeded);
}

TEST_CASE("coset table validation and tracing") {
  // Z/2 regular action
  CosetTable t(1, {{1}, {0}}, {{1}, {0}});
  CHECK(t.size() == 2);
  CHECK(t.act(0, 1) == 1);
  CHECK(t.act(0, -1) == 1);
  std::vector<int> word = {1, 1};
  CHECK(t.trace(0, word) == 0);
  CHECK_THROWS(CosetTable(1, {{1}, {0}}, {{0}, {1}}));
  CHECK_THROWS(CosetTable(1, {{2}, {0}}, {{1}, {0}}));
  CHECK_THROWS(t.act(2, 1));
  CHECK_THROWS(t.act(0, 2));
}

TEST_CASE("regular coset table from a finite quotient") {
  GroupHom hom = symmetric_quotient(3);
  CosetTable t = coset_table_from_quotient(braid_presentation(3), hom);
  CHECK(t.size() == 6);
  CHECK(t.is_consistent_with(braid_presentation(3)));
  // all cosets reachable from the identity coset
  std::vector<int> seen(static_cast<std::size_t>(t.size()), 0);
  seen[0] = 1;
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    for (int g = 1; g <= 2; ++g)
      for (int sg : {g, -g}) {
        int d = t.act(c, sg);
        if (!seen[static_cast<std::size_t>(d)]) {
          seen[static_cast<std::size_t>(d)] = 1;
          stack.push_back(d);
        }
      }
  }
  for (int v : seen) CHECK(v == 1);
}

TEST_CASE("rewriting an index two subgroup of the infinite cyclic group") {
  Presentation z({"a"}, {});
  // no relators: build the table by hand, cosets swap under a
  CosetTable t(1, {{1}, {0}}, {{1}, {0}});
  Presentation sub = reidemeister_schreier(z, t);
  CHECK(sub.generator_count() == 1);
  CHECK(sub.relators.empty());
  AbelianGroup ab = abelianization(sub);
  CHECK(ab.free_rank == 1);
  CHECK(ab.torsion.empty());
}

TEST_CASE("rewriting the trivial subgroup of Z mod 2") {
  Presentation p({"t"}, {{1, 1}});
  CosetTable t = todd_coxeter(p, {}, 50);
  CHECK(t.size() == 2);
  Presentation sub = reidemeister_schreier(p, t);
  CHECK(sub.generator_count() == 1);
  CHECK(sub.relators == std::vector<std::vector<int>>{{1}, {1}});
  CHECK(abelianization(sub) == AbelianGroup{});
}

TEST_CASE("rewriting the pure braid group on three strands") {
  GroupHom hom = symmetric_quotient(3);
  CosetTable t = coset_table_from_quotient(braid_presentation(3), hom);
  for (TreePolicy policy :
       {TreePolicy::bfs_smallest_first, TreePolicy::bfs_largest_first}) {
    Presentation p3 = reidemeister_schreier(braid_presentation(3), t, policy);
    AbelianGroup ab = abelianization(p3);
    CHECK(ab.free_rank == 3);
    CHECK(ab.torsion.empty());
  }
}

TEST_CASE("relator exponent matrix and abelianizations") {
  Presentation b4 = braid_presentation(4);
  IntMatrix m = relator_exponent_matrix(b4);
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 3);
  AbelianGroup ab = abelianization(b4);
  CHECK(ab.free_rank == 1);
  CHECK(ab.torsion.empty());

  AbelianGroup sym = abelianization(coxeter_symmetric_presentation(4));
  CHECK(sym.free_rank == 0);
  CHECK(sym.torsion == std::vector<mpz_class>{2});

  AbelianGroup mcg = abelianization(mcg_sphere_presentation(4));
  CHECK(mcg.free_rank == 0);
  CHECK(mcg.torsion == std::vector<mpz_class>{6});

  AbelianGroup f222 = abelianization(free_product_three_involutions());
  CHECK(f222.free_rank == 0);
  CHECK(f222.torsion == std::vector<mpz_class>{2, 2, 2});

  AbelianGroup free2 = abelianization(Presentation({"a", "b"}, {}));
  CHECK(free2.free_rank == 2);
}

} // TEST_SUITE
