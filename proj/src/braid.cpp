#include "braidverify/braid.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace braidverify {

namespace {

void check_strands(int n) {
  if (n < 1) throw std::invalid_argument("strand count must be positive");
}

void check_letter(int n, int letter) {
  if (letter == 0 || std::abs(letter) > n - 1)
    throw std::invalid_argument("letter out of range for strand count");
}

Perm w0_perm(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = n - i;
  return Perm(n, std::move(images));
}

Perm adjacent(int n, int i) { return Perm::transposition(n, i, i + 1); }

Perm tau(const Perm& p, const Perm& w0) { return w0 * p * w0; }

// Right complement: the simple c with a * c = delta.
Perm right_complement(const Perm& a, const Perm& w0) { return a.inverse() * w0; }

// Greatest common prefix of two simples, by greedy atom extension.
Perm meet_simple(const Perm& a, const Perm& b) {
  const int n = a.degree();
  std::vector<int> c(static_cast<std::size_t>(n));      // one-line images of meet
  std::vector<int> cinv(static_cast<std::size_t>(n));   // positions of values
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = cinv[static_cast<std::size_t>(i)] = i + 1;
  const std::vector<int>& ia = a.images();
  const std::vector<int>& ib = b.images();
  bool progress = true;
  while (progress) {
    progress = false;
    for (int m = 1; m < n; ++m) {
      int i0 = cinv[static_cast<std::size_t>(m - 1)];
      int j0 = cinv[static_cast<std::size_t>(m)];
      if (i0 >= j0) continue; // c * s_m would shorten
      if (ia[static_cast<std::size_t>(i0 - 1)] > ia[static_cast<std::size_t>(j0 - 1)] &&
          ib[static_cast<std::size_t>(i0 - 1)] > ib[static_cast<std::size_t>(j0 - 1)]) {
        std::swap(c[static_cast<std::size_t>(i0 - 1)], c[static_cast<std::size_t>(j0 - 1)]);
        std::swap(cinv[static_cast<std::size_t>(m - 1)], cinv[static_cast<std::size_t>(m)]);
        progress = true;
      }
    }
  }
  return Perm(n, std::move(c));
}

// Shortest positive word spelling the permutation braid p.
std::vector<int> simple_to_letters(Perm p) {
  std::vector<int> rev;
  const int n = p.degree();
  while (!p.is_identity()) {
    Perm inv = p.inverse();
    int m = 0;
    for (int k = 1; k < n; ++k)
      if (inv.apply(k) > inv.apply(k + 1)) {
        m = k;
        break;
      }
    rev.push_back(m);
    p = p * adjacent(n, m);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

// Incremental left-greedy normalizer. Factors are appended one simple at
// a time; a worklist keeps adjacent pairs left-weighted and full half
// twists are absorbed into the delta exponent once they reach the front.
struct NFBuilder {
  int n;
  Perm w0;
  long delta = 0;
  std::vector<Perm> fs;

  explicit NFBuilder(int strands) : n(strands), w0(w0_perm(strands)) {}

  void push(const Perm& s) {
    if (s.is_identity()) return;
    if (s == w0 && fs.empty()) {
      ++delta;
      return;
    }
    fs.push_back(s);
    stabilize(fs.size() - 1);
    while (!fs.empty() && fs.front() == w0) {
      ++delta;
      fs.erase(fs.begin());
    }
  }

  GarsideForm finish() { return GarsideForm(n, delta, fs); }

private:
  // Re-establish left-weightedness around right-index `start`.
  void stabilize(std::size_t start) {
    std::set<std::size_t> pending;
    if (start >= 1) pending.insert(start);
    while (!pending.empty()) {
      std::size_t j = *pending.rbegin();
      pending.erase(std::prev(pending.end()));
      if (j < 1 || j >= fs.size()) continue;
      if (fs[j - 1] == w0) continue; // (delta, b) is always left-weighted
      if (fs[j] == w0) {             // (a, delta) -> (delta, tau(a))
        fs[j] = tau(fs[j - 1], w0);
        fs[j - 1] = w0;
        if (j >= 2) pending.insert(j - 1);
        if (j + 1 < fs.size()) pending.insert(j + 1);
        continue;
      }
      Perm t = meet_simple(right_complement(fs[j - 1], w0), fs[j]);
      if (t.is_identity()) continue;
      fs[j - 1] = fs[j - 1] * t;
      Perm rest = t.inverse() * fs[j];
      if (rest.is_identity()) {
        fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(j));
        std::set<std::size_t> shifted;
        for (std::size_t q : pending) shifted.insert(q > j ? q - 1 : q);
        pending = std::move(shifted);
        if (j >= 1) pending.insert(j - 1);
        if (j < fs.size()) pending.insert(j);
      } else {
        fs[j] = std::move(rest);
        if (j >= 2) pending.insert(j - 1);
        if (j + 1 < fs.size()) pending.insert(j + 1);
      }
    }
  }
};

} // namespace

BraidWord::BraidWord(int strands) : strands_(strands) { check_strands(strands); }

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  check_strands(strands);
  for (int l : letters_) check_letter(strands_, l);
}

BraidWord BraidWord::parse(int strands, std::string_view text) {
  std::vector<int> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad letter '" + token + "'");
    }
    if (used != token.size())
      throw std::invalid_argument("bad letter '" + token + "'");
    letters.push_back(value);
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord BraidWord::inverse() const {
  std::vector<int> letters(letters_.rbegin(), letters_.rend());
  for (int& l : letters) l = -l;
  return BraidWord(strands_, std::move(letters));
}

BraidWord BraidWord::pow(int k) const {
  const BraidWord& base = k >= 0 ? *this : inverse();
  int reps = std::abs(k);
  std::vector<int> letters;
  letters.reserve(length() * static_cast<std::size_t>(reps));
  for (int i = 0; i < reps; ++i)
    letters.insert(letters.end(), base.letters_.begin(), base.letters_.end());
  return BraidWord(strands_, std::move(letters));
}

BraidWord operator*(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands())
    throw std::invalid_argument("strand count mismatch");
  std::vector<int> letters = u.letters_;
  letters.insert(letters.end(), v.letters_.begin(), v.letters_.end());
  return BraidWord(u.strands(), std::move(letters));
}

std::string BraidWord::text() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out << ' ';
    out << letters_[i];
  }
  return out.str();
}

GarsideForm::GarsideForm(int strands, long infimum, std::vector<Perm> factors)
    : strands_(strands), infimum_(infimum), factors_(std::move(factors)) {
  check_strands(strands);
  for (const Perm& f : factors_) {
    if (f.degree() != strands)
      throw std::invalid_argument("factor degree mismatch");
    if (f.is_identity() || f == w0_perm(strands))
      throw std::invalid_argument("factors must be proper simples");
  }
}

BraidWord GarsideForm::word() const {
  BraidWord out(strands_);
  if (infimum_ != 0) {
    BraidWord d = half_twist_word(strands_);
    out = out * d.pow(static_cast<int>(infimum_));
  }
  for (const Perm& f : factors_)
    out = out * BraidWord(strands_, simple_to_letters(f));
  return out;
}

std::string GarsideForm::to_string() const {
  std::ostringstream out;
  out << "D^" << infimum_;
  for (const Perm& f : factors_) {
    out << " | ";
    std::vector<int> letters = simple_to_letters(f);
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i) out << ' ';
      out << letters[i];
    }
  }
  return out.str();
}

GarsideForm normal_form(const BraidWord& w) {
  const int n = w.strands();
  if (n == 1) return GarsideForm(1, 0, {});
  const Perm w0 = w0_perm(n);
  long total_neg = 0;
  for (int l : w.letters())
    if (l < 0) ++total_neg;

  NFBuilder builder(n);
  builder.delta = -total_neg;
  long neg_after = total_neg;

  // Maximal positive runs are accumulated into single simples before the
  // push; run_pos tracks value positions so the length-additivity test and
  // the append are O(1) per letter.
  std::vector<int> run_img, run_pos;
  auto run_flush = [&] {
    if (run_img.empty()) return;
    Perm s(n, run_img);
    if (neg_after % 2 != 0) s = tau(s, w0);
    builder.push(s);
    run_img.clear();
  };
  auto run_start = [&] {
    run_img.resize(static_cast<std::size_t>(n));
    run_pos.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      run_img[static_cast<std::size_t>(i)] = run_pos[static_cast<std::size_t>(i)] = i + 1;
  };

  for (int l : w.letters()) {
    if (l > 0) {
      if (run_img.empty()) run_start();
      int m = l;
      if (run_pos[static_cast<std::size_t>(m - 1)] >=
          run_pos[static_cast<std::size_t>(m)]) {
        run_flush();
        run_start();
      }
      int p = run_pos[static_cast<std::size_t>(m - 1)];
      int q = run_pos[static_cast<std::size_t>(m)];
      std::swap(run_img[static_cast<std::size_t>(p - 1)],
                run_img[static_cast<std::size_t>(q - 1)]);
      std::swap(run_pos[static_cast<std::size_t>(m - 1)],
                run_pos[static_cast<std::size_t>(m)]);
    } else {
      run_flush();
      Perm s = w0 * adjacent(n, -l);
      --neg_after; // this letter's own delta does not shift it
      if (neg_after % 2 != 0) s = tau(s, w0);
      builder.push(s);
    }
  }
  run_flush();
  return builder.finish();
}

bool equals(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands())
    throw std::invalid_argument("strand count mismatch");
  if (exponent_sum(u) != exponent_sum(v)) return false;
  if (!(permutation_of(u) == permutation_of(v))) return false;
  return normal_form(u) == normal_form(v);
}

bool is_trivial(const BraidWord& w) {
  if (exponent_sum(w) != 0) return false;
  return normal_form(w).is_trivial();
}

Perm permutation_of(const BraidWord& w) {
  Perm p(w.strands());
  for (int l : w.letters()) p = p * adjacent(w.strands(), std::abs(l));
  return p;
}

long exponent_sum(const BraidWord& w) {
  long s = 0;
  for (int l : w.letters()) s += l > 0 ? 1 : -1;
  return s;
}

BraidWord substitute(const BraidWord& w, const std::vector<BraidWord>& images) {
  if (images.size() != static_cast<std::size_t>(w.strands() - 1))
    throw std::invalid_argument("need one image per generator");
  int m = images.front().strands();
  for (const BraidWord& b : images)
    if (b.strands() != m)
      throw std::invalid_argument("image strand counts differ");
  std::vector<int> letters;
  for (int l : w.letters()) {
    const BraidWord& img = images[static_cast<std::size_t>(std::abs(l) - 1)];
    BraidWord piece = l > 0 ? img : img.inverse();
    letters.insert(letters.end(), piece.letters().begin(), piece.letters().end());
  }
  return BraidWord(m, std::move(letters));
}

BraidWord pure_braid_generator(int n, int i, int j) {
  check_strands(n);
  if (i < 1 || j <= i || j > n)
    throw std::invalid_argument("need 1 <= i < j <= n");
  std::vector<int> letters;
  for (int k = j - 1; k > i; --k) letters.push_back(k);
  letters.push_back(i);
  letters.push_back(i);
  for (int k = i + 1; k <= j - 1; ++k) letters.push_back(-k);
  return BraidWord(n, std::move(letters));
}

BraidWord zeta(int n, int i) {
  check_strands(n);
  if (i < 1 || i > n)
    throw std::invalid_argument("need 1 <= i <= n");
  std::vector<int> letters;
  for (int rep = 0; rep < i; ++rep)
    for (int k = 1; k < i; ++k) letters.push_back(k);
  return BraidWord(n, std::move(letters));
}

BraidWord half_twist_word(int n) {
  check_strands(n);
  std::vector<int> letters;
  for (int k = 1; k < n; ++k)
    for (int m = k; m >= 1; --m) letters.push_back(m);
  return BraidWord(n, std::move(letters));
}

StrandPairMatrix::StrandPairMatrix(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("need at least two strands");
  entries_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
}

long& StrandPairMatrix::slot(int i, int j) {
  if (i < 1 || j <= i || j > n_)
    throw std::out_of_range("need 1 <= i < j <= n");
  // Row-major upper triangle.
  std::size_t before = static_cast<std::size_t>(i - 1) *
                       (static_cast<std::size_t>(2 * n_ - i)) / 2;
  return entries_[before + static_cast<std::size_t>(j - i - 1)];
}

long StrandPairMatrix::at(int i, int j) const {
  return const_cast<StrandPairMatrix*>(this)->slot(i, j);
}

void StrandPairMatrix::set(int i, int j, long v) { slot(i, j) = v; }

std::string StrandPairMatrix::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 1; i < n_; ++i)
    for (int j = i + 1; j <= n_; ++j) {
      if (!first) out << ' ';
      out << 'e' << i << j << '=' << at(i, j);
      first = false;
    }
  return out.str();
}

StrandPairMatrix linking_numbers(const BraidWord& w) {
  if (!permutation_of(w).is_identity())
    throw std::invalid_argument("linking numbers need a pure braid");
  const int n = w.strands();
  StrandPairMatrix sums(n);
  std::vector<int> strand_at(static_cast<std::size_t>(n)); // position -> strand label
  for (int i = 0; i < n; ++i) strand_at[static_cast<std::size_t>(i)] = i + 1;
  for (int l : w.letters()) {
    int k = std::abs(l);
    int s = strand_at[static_cast<std::size_t>(k - 1)];
    int t = strand_at[static_cast<std::size_t>(k)];
    int i = std::min(s, t), j = std::max(s, t);
    sums.set(i, j, sums.at(i, j) + (l > 0 ? 1 : -1));
    std::swap(strand_at[static_cast<std::size_t>(k - 1)],
              strand_at[static_cast<std::size_t>(k)]);
  }
  StrandPairMatrix out(n);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      long s = sums.at(i, j);
      if (s % 2 != 0)
        throw std::logic_error("odd crossing sum for a pure braid");
      out.set(i, j, s / 2);
    }
  return out;
}

namespace garside {

Perm half_twist_perm(int n) { return w0_perm(n); }

Perm tau_conjugate(const Perm& p) { return tau(p, w0_perm(p.degree())); }

Perm complement(const Perm& a) { return right_complement(a, w0_perm(a.degree())); }

Perm meet(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch in meet");
  return meet_simple(a, b);
}

bool is_prefix(const Perm& c, const Perm& a) {
  // Inversion set containment.
  const int n = c.degree();
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (c.apply(i) > c.apply(j) && a.apply(i) < a.apply(j)) return false;
  return true;
}

bool is_left_weighted(const Perm& a, const Perm& b) {
  return meet(complement(a), b).is_identity();
}

std::vector<int> positive_word(const Perm& p) { return simple_to_letters(p); }

} // namespace garside

} // namespace braidverify
