#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace braidverify {

// Permutation of {1,...,m} in one-line notation.
//
// The product convention is left-to-right throughout the project:
// (p * q)(x) = q(p(x)), i.e. p acts first.
class Perm {
public:
  explicit Perm(int degree);                 // identity
  Perm(int degree, std::vector<int> images); // validates bijection

  static Perm transposition(int degree, int a, int b);

  // Cycle notation, e.g. "(1 2)(3 4)"; the empty string is the identity.
  // Unmentioned points are fixed. Throws on malformed text, repeated
  // points, or points outside [1, degree].
  static Perm parse_cycles(std::string_view text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int point) const; // 1-based
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  friend Perm operator*(const Perm& p, const Perm& q);

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm&, const Perm&) = default;

  std::string cycle_string() const;

private:
  std::vector<int> images_; // images_[i] = image of point i+1
};

// Ordered, nonempty tuple of permutations of uniform degree.
class PermTuple {
public:
  explicit PermTuple(std::vector<Perm> entries);

  int degree() const { return entries_.front().degree(); }
  std::size_t size() const { return entries_.size(); }
  const Perm& at(std::size_t i) const { return entries_.at(i); }
  const std::vector<Perm>& entries() const { return entries_; }

  friend bool operator==(const PermTuple&, const PermTuple&) = default;
  friend std::strong_ordering operator<=>(const PermTuple&,
                                          const PermTuple&) = default;

private:
  std::vector<Perm> entries_;
};

Perm conjugate(const Perm& p, const Perm& g); // g^-1 * p * g
PermTuple conjugate(const PermTuple& t, const Perm& g);

// Lexicographically smallest simultaneous conjugate of t, comparing
// concatenated one-line images. Exhaustive over S_m; requires m <= 8.
PermTuple canonical_under_conjugation(const PermTuple& t);

// All elements of the subgroup generated by t, via breadth-first closure.
std::vector<Perm> closure_elements(const PermTuple& t);
long closure_order(const PermTuple& t);

// All m! permutations of degree m in lexicographic order (m <= 8).
std::vector<Perm> all_perms(int degree);

} // namespace braidverify
