#pragma once

#include "braidverify/perm.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace braidverify {

// Word in the Artin generators of the braid group on `strands` strands.
// Letter k (1 <= |k| < strands) stands for sigma_|k| when positive and
// sigma_|k|^-1 when negative.
class BraidWord {
public:
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<int> letters);

  // Whitespace-separated signed letters, e.g. "1 2 -3".
  static BraidWord parse(int strands, std::string_view text);

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  BraidWord pow(int k) const;
  friend BraidWord operator*(const BraidWord& u, const BraidWord& v);

  std::string text() const;

private:
  int strands_;
  std::vector<int> letters_;
};

// Left-greedy normal form delta^inf . f_1 ... f_l with each f_i a
// permutation braid, f_i != identity, f_i != delta, and each adjacent
// pair left-weighted. The trivial braid has inf 0 and no factors.
class GarsideForm {
public:
  GarsideForm(int strands, long infimum, std::vector<Perm> factors);

  int strands() const { return strands_; }
  long infimum() const { return infimum_; }
  const std::vector<Perm>& factors() const { return factors_; }
  int canonical_length() const { return static_cast<int>(factors_.size()); }
  long supremum() const { return infimum_ + canonical_length(); }
  bool is_trivial() const { return infimum_ == 0 && factors_.empty(); }

  // A braid word spelling the same element (delta power then factors).
  BraidWord word() const;

  friend bool operator==(const GarsideForm&, const GarsideForm&) = default;
  std::string to_string() const;

private:
  int strands_;
  long infimum_;
  std::vector<Perm> factors_;
};

GarsideForm normal_form(const BraidWord& w);
bool equals(const BraidWord& u, const BraidWord& v);
bool is_trivial(const BraidWord& w);

// Underlying permutation: strand at position i ends at permutation_of(w)(i).
Perm permutation_of(const BraidWord& w);

long exponent_sum(const BraidWord& w);

// Replaces letter +-k of w by images[k-1]^{+-1}. All images must share a
// strand count, which becomes the strand count of the result.
BraidWord substitute(const BraidWord& w, const std::vector<BraidWord>& images);

// Pure braid generator a_{ij} for 1 <= i < j <= n:
// sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1}^-1 ... sigma_{j-1}^-1.
BraidWord pure_braid_generator(int n, int i, int j);

// zeta(n, n) is the full twist on n strands; zeta(n, i) for i <= n is the
// full twist of the first i strands, (sigma_1 ... sigma_{i-1})^i. By
// convention zeta(n, 1) is the empty word.
BraidWord zeta(int n, int i);

// Symmetric table of pair invariants e_{ij}, 1 <= i < j <= n.
class StrandPairMatrix {
public:
  explicit StrandPairMatrix(int n);
  int n() const { return n_; }
  long at(int i, int j) const;
  void set(int i, int j, long v);
  friend bool operator==(const StrandPairMatrix&, const StrandPairMatrix&) = default;
  std::string to_string() const;

private:
  long& slot(int i, int j);
  int n_;
  std::vector<long> entries_;
};

// Linking numbers of a pure braid: e_{ij} is half the signed number of
// crossings between the strands starting at positions i and j. Throws if
// w is not pure.
StrandPairMatrix linking_numbers(const BraidWord& w);

// Half twist as a positive word: (sigma_1)(sigma_2 sigma_1)...(sigma_{n-1}...sigma_1).
BraidWord half_twist_word(int n);

// Building blocks of the normal form, exposed for testing and tooling.
// Simples (permutation braids) are identified with their permutations.
namespace garside {

Perm half_twist_perm(int n);
Perm tau_conjugate(const Perm& p);          // conjugation by the half twist
Perm complement(const Perm& a);             // c with a * c = delta
Perm meet(const Perm& a, const Perm& b);    // greatest common prefix
bool is_prefix(const Perm& c, const Perm& a);
bool is_left_weighted(const Perm& a, const Perm& b);
std::vector<int> positive_word(const Perm& p);

} // namespace garside

} // namespace braidverify
