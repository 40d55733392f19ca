#pragma once

#include <array>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace braidverify {

// Element of <t1, t2, t3 | t_i^2 = 1>, stored in normal form (no two
// adjacent letters equal). Letters are 1, 2, 3.
class FPWord {
public:
  FPWord() = default;
  explicit FPWord(std::vector<int> letters); // cancels adjacent pairs

  // Whitespace-separated letters, e.g. "1 2 1"; empty string is identity.
  static FPWord parse(std::string_view text);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  FPWord inverse() const; // reversal (letters are involutions)
  friend FPWord operator*(const FPWord&, const FPWord&);
  friend bool operator==(const FPWord&, const FPWord&) = default;
  friend auto operator<=>(const FPWord&, const FPWord&) = default;

  std::string text() const;

private:
  std::vector<int> letters_;
};

// Parity of the number of occurrences of t1, t2, t3.
std::array<int, 3> fp_ab(const FPWord& w);

// Membership in the pullback of the diagonal Z/2 under abelianization:
// all three parities equal.
bool is_in_pi04(const FPWord& w);

// Strips matching first/last letters until none match.
FPWord cyclic_reduction(const FPWord& w);

// 0 when w has infinite order (or is trivial); otherwise the single
// letter its cyclic reduction collapses to.
int torsion_class(const FPWord& w);

struct TorsionScanResult {
  int maxlen = 0;
  long words_scanned = 0;
  std::vector<FPWord> involutions; // nontrivial w with w*w trivial
  std::set<int> class_labels;      // torsion classes observed
  bool all_single_letter = true;   // every involution reduces to one letter
};

// Enumerates every normal-form word of length <= maxlen (maxlen <= 15).
TorsionScanResult torsion_scan(int maxlen);

} // namespace braidverify
