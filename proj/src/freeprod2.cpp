#include "braidverify/freeprod2.hpp"

#include <sstream>
#include <stdexcept>

namespace braidverify {

namespace {

void check_letter(int l) {
  if (l < 1 || l > 3)
    throw std::invalid_argument("letters must be 1, 2 or 3");
}

} // namespace

FPWord::FPWord(std::vector<int> letters) {
  for (int l : letters) check_letter(l);
  for (int l : letters) {
    if (!letters_.empty() && letters_.back() == l)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

FPWord FPWord::parse(std::string_view text) {
  std::vector<int> letters;
  std::istringstream in{std::string(text)};
  int v = 0;
  while (in >> v) letters.push_back(v);
  if (!in.eof()) throw std::invalid_argument("bad free-product word");
  return FPWord(std::move(letters));
}

FPWord FPWord::inverse() const {
  return FPWord(std::vector<int>(letters_.rbegin(), letters_.rend()));
}

FPWord operator*(const FPWord& u, const FPWord& v) {
  std::vector<int> letters = u.letters_;
  letters.insert(letters.end(), v.letters_.begin(), v.letters_.end());
  return FPWord(std::move(letters));
}

std::string FPWord::text() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out << ' ';
    out << letters_[i];
  }
  return out.str();
}

std::array<int, 3> fp_ab(const FPWord& w) {
  std::array<int, 3> parity{0, 0, 0};
  for (int l : w.letters())
    parity[static_cast<std::size_t>(l - 1)] ^= 1;
  return parity;
}

bool is_in_pi04(const FPWord& w) {
  auto p = fp_ab(w);
  return p[0] == p[1] && p[1] == p[2];
}

FPWord cyclic_reduction(const FPWord& w) {
  std::vector<int> letters = w.letters();
  while (letters.size() >= 2 && letters.front() == letters.back()) {
    letters.erase(letters.begin());
    letters.pop_back();
  }
  return FPWord(std::move(letters));
}

int torsion_class(const FPWord& w) {
  FPWord core = cyclic_reduction(w);
  if (core.length() == 1) return core.letters().front();
  return 0;
}

TorsionScanResult torsion_scan(int maxlen) {
  if (maxlen < 1 || maxlen > 15)
    throw std::invalid_argument("scan bound must be in [1, 15]");
  TorsionScanResult result;
  result.maxlen = maxlen;
  std::vector<std::vector<int>> frontier;
  frontier.push_back({}); // identity; counted but never an involution
  result.words_scanned = 1;
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier)
      for (int l = 1; l <= 3; ++l) {
        if (!w.empty() && w.back() == l) continue;
        std::vector<int> ext = w;
        ext.push_back(l);
        ++result.words_scanned;
        FPWord word(ext);
        if ((word * word).is_identity()) {
          int label = torsion_class(word);
          if (label == 0) result.all_single_letter = false;
          else result.class_labels.insert(label);
          result.involutions.push_back(word);
        }
        next.push_back(std::move(ext));
      }
    frontier = std::move(next);
  }
  return result;
}

} // namespace braidverify
