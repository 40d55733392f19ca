#pragma once

#include "braidverify/braid.hpp"
#include "braidverify/freeprod2.hpp"
#include "braidverify/intmat.hpp"
#include "braidverify/perm.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace braidverify {

// Finite presentation: named generators and relators as words of signed
// 1-based generator indices.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::vector<int>> relators;

  Presentation(std::vector<std::string> gens, std::vector<std::vector<int>> rels);

  int generator_count() const { return static_cast<int>(generators.size()); }
  Presentation with_relator(std::vector<int> relator) const;

  // Text format:
  //   generators: a b c
  //   relators:
  //   1 1
  //   2 -1 2 -1
  // Blank lines and lines starting with '#' are ignored.
  static Presentation parse(std::string_view text);
  static Presentation load(const std::string& path);
  std::string serialize() const;
};

Presentation braid_presentation(int n);          // n >= 2
Presentation mcg_sphere_presentation(int n);     // n >= 3
Presentation coxeter_symmetric_presentation(int n); // n >= 2
Presentation free_product_three_involutions();

// Built-in lookup by name ("braid:4", "mcg:5", "symmetric:4", "free222").
Presentation builtin_presentation(std::string_view name);
std::vector<std::string> builtin_presentation_names();

// Closed coset table: a total right action of the generators on cosets
// 0..size-1, with coset 0 the subgroup itself.
class CosetTable {
public:
  CosetTable(int generator_count, std::vector<std::vector<int>> forward,
             std::vector<std::vector<int>> backward);

  int generator_count() const { return ngens_; }
  int size() const { return static_cast<int>(fwd_.size()); }
  int act(int coset, int signed_gen) const;
  int trace(int coset, std::span<const int> word) const;
  bool is_consistent_with(const Presentation& p) const;

private:
  int ngens_;
  std::vector<std::vector<int>> fwd_, bwd_; // [coset][gen-1]
};

class CosetLimitExceeded : public std::runtime_error {
public:
  explicit CosetLimitExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

// HLT coset enumeration with lookahead; deterministic. Throws
// CosetLimitExceeded when the live coset count would exceed max_cosets
// even after lookahead.
CosetTable todd_coxeter(const Presentation& p,
                        const std::vector<std::vector<int>>& subgroup_words,
                        int max_cosets);

struct PermImages {
  std::vector<Perm> images;
};
struct BraidImages {
  std::vector<BraidWord> images;
};
struct FreeProductImages {
  std::vector<FPWord> images;
};

// Homomorphism candidate from a presentation, with target-specific
// images. verify() evaluates every relator with the target's own
// equality oracle and records the outcome.
class GroupHom {
public:
  using Images = std::variant<PermImages, BraidImages, FreeProductImages>;

  GroupHom(Presentation source, Images images);

  const Presentation& source() const { return source_; }
  const Images& images() const { return images_; }
  bool verified() const { return verified_; }
  bool verify();

  Perm eval_perm(std::span<const int> word) const;
  BraidWord eval_braid(std::span<const int> word) const;
  FPWord eval_fp(std::span<const int> word) const;

  bool is_perm_target() const;
  const std::vector<Perm>& perm_images() const;

private:
  Presentation source_;
  Images images_;
  bool verified_ = false;
};

// Coset table of ker(q) for a verified q with finite permutation image:
// cosets are the image elements acting on themselves by right translation.
CosetTable coset_table_from_quotient(const Presentation& p, const GroupHom& q);

enum class TreePolicy {
  bfs_smallest_first, // breadth-first, smallest generator first
  bfs_largest_first,  // alternative used to test tree independence
};

// Schreier-generator presentation of the subgroup described by a closed
// coset table. All rewritten relators are kept unsimplified.
Presentation reidemeister_schreier(const Presentation& p, const CosetTable& t,
                                   TreePolicy policy = TreePolicy::bfs_smallest_first);

// Column j is the exponent vector of relator j (rows = generators).
IntMatrix relator_exponent_matrix(const Presentation& p);

AbelianGroup abelianization(const Presentation& p);

} // namespace braidverify
