#pragma once

#include <cstdint>
#include <vector>

#include "braidverify/fpgroup.hpp"
#include "braidverify/perm.hpp"

namespace braidverify {

struct HomClass {
  PermTuple representative; // canonical_under_conjugation fixed point
  long orbit_size = 0;
};

struct HomClassification {
  int degree = 0;
  std::vector<HomClass> classes;
  long total = 0; // sum of orbit sizes
};

struct EnumOptions {
  bool allow_degree_6 = false;
  // Sound for braid-like presentations where a relator forces all
  // generator images into one conjugacy class; cuts the search space.
  bool assume_generators_conjugate = false;
  std::uint64_t node_budget = 500'000'000;
};

// Backtracking search over generator-image tuples in S_m. The first
// generator ranges over conjugacy-class representatives only; relators are
// checked as soon as all their letters are assigned. Classes are keyed by
// canonical_under_conjugation and orbit sizes counted directly.
HomClassification enumerate_homs(const Presentation& p, int m,
                                 bool surjective_only,
                                 const EnumOptions& options = {});

// True iff h(w) = 1. Requires h verified and permutation-valued.
bool kernel_contains(const GroupHom& h, std::span<const int> word);

// True iff ker f = ker g, via the closure of paired generator images in
// Im(f) x Im(g): the kernels agree exactly when that closure is the graph
// of a bijection.
bool kernels_equal(const GroupHom& f, const GroupHom& g);

} // namespace braidverify
