#include "braidverify/central_ext.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "braidverify/fpgroup.hpp"

namespace braidverify {

namespace {

int checked_int(long v) {
  if (v > 1'000'000 || v < -1'000'000)
    throw std::invalid_argument("exponent out of supported range");
  return static_cast<int>(v);
}

} // namespace

FreePairWord::FreePairWord(std::vector<int> letters) {
  for (int l : letters) {
    if (l == 0 || std::abs(l) > 2)
      throw std::invalid_argument("free pair word letters are +-1, +-2");
    if (!letters_.empty() && letters_.back() == -l)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

FreePairWord FreePairWord::parse(std::string_view text) {
  std::vector<int> letters;
  for (char c : text) {
    switch (c) {
    case 'x': letters.push_back(1); break;
    case 'X': letters.push_back(-1); break;
    case 'y': letters.push_back(2); break;
    case 'Y': letters.push_back(-2); break;
    case ' ': break;
    default:
      throw std::invalid_argument("free pair word text uses x, y, X, Y");
    }
  }
  return FreePairWord(std::move(letters));
}

int FreePairWord::exponent_sum_x() const {
  int s = 0;
  for (int l : letters_)
    if (std::abs(l) == 1) s += l > 0 ? 1 : -1;
  return s;
}

int FreePairWord::exponent_sum_y() const {
  int s = 0;
  for (int l : letters_)
    if (std::abs(l) == 2) s += l > 0 ? 1 : -1;
  return s;
}

bool FreePairWord::is_commutator_word() const {
  return exponent_sum_x() == 0 && exponent_sum_y() == 0;
}

FreePairWord FreePairWord::inverse() const {
  std::vector<int> rev(letters_.rbegin(), letters_.rend());
  for (int& l : rev) l = -l;
  return FreePairWord(std::move(rev));
}

FreePairWord operator*(const FreePairWord& u, const FreePairWord& v) {
  std::vector<int> cat = u.letters_;
  cat.insert(cat.end(), v.letters_.begin(), v.letters_.end());
  return FreePairWord(std::move(cat));
}

std::string FreePairWord::text() const {
  std::string out;
  for (int l : letters_) {
    switch (l) {
    case 1: out += 'x'; break;
    case -1: out += 'X'; break;
    case 2: out += 'y'; break;
    case -2: out += 'Y'; break;
    }
  }
  return out;
}

BraidWord FreePairWord::evaluate(const BraidWord& a, const BraidWord& b) const {
  if (a.strands() != b.strands())
    throw std::invalid_argument("mixed strand counts in substitution");
  BraidWord acc(a.strands());
  for (int l : letters_) {
    switch (l) {
    case 1: acc = acc * a; break;
    case -1: acc = acc * a.inverse(); break;
    case 2: acc = acc * b; break;
    case -2: acc = acc * b.inverse(); break;
    }
  }
  return acc;
}

FreePairWord random_commutator_word(std::mt19937_64& rng, int maxlen) {
  if (maxlen < 4) throw std::invalid_argument("maxlen must be at least 4");
  const int slots = (maxlen - 4) / 2 + 1;
  static const int alphabet[4] = {1, -1, 2, -2};
  for (int attempt = 0; attempt < 1'000'000; ++attempt) {
    int len = 4 + 2 * static_cast<int>(rng() % static_cast<unsigned>(slots));
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(len));
    while (static_cast<int>(letters.size()) < len) {
      int pick = alphabet[rng() % 4];
      if (!letters.empty() && pick == -letters.back()) continue;
      letters.push_back(pick);
    }
    FreePairWord w(std::move(letters));
    if (!w.empty() && w.is_commutator_word()) return w;
  }
  throw std::logic_error("commutator word sampling failed to converge");
}

BraidWord phi_nu_apply(const BraidWord& w, long e) {
  int n = w.strands();
  BraidWord zpos = zeta(n, n).pow(checked_int(e));
  BraidWord zneg = zeta(n, n).pow(checked_int(-e));
  std::vector<int> out;
  out.reserve(w.length() * (1 + zpos.length()));
  for (int l : w.letters()) {
    out.push_back(l);
    const auto& tail = (l > 0 ? zpos : zneg).letters();
    out.insert(out.end(), tail.begin(), tail.end());
  }
  return BraidWord(n, std::move(out));
}

long phi_nu_ab_exponent(int n, long e) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  long nu = 1 + static_cast<long>(n) * (n - 1) * e;
  if ((nu != 1) != (e != 0))
    throw std::logic_error("twist exponent triviality mismatch");
  return nu;
}

bool phi_nu_verify(int n, long e) {
  Presentation p = braid_presentation(n);
  for (const auto& r : p.relators)
    if (!is_trivial(phi_nu_apply(BraidWord(n, r), e))) return false;
  BraidWord z = zeta(n, n);
  return equals(phi_nu_apply(z, e), z.pow(checked_int(phi_nu_ab_exponent(n, e))));
}

bool phi_compose_law(int n, long e1, long e2) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  long e12 = e1 + e2 + static_cast<long>(n) * (n - 1) * e1 * e2;
  BraidWord z = zeta(n, n);
  for (int i = 1; i <= n - 1; ++i) {
    BraidWord gen(n, {i});
    BraidWord lhs = phi_nu_apply(phi_nu_apply(gen, e2), e1);
    BraidWord rhs = gen * z.pow(checked_int(e12));
    if (!equals(lhs, rhs)) return false;
  }
  return true;
}

bool relator_constraints_force_equal_twists(int n) {
  Presentation p = braid_presentation(n);
  IntMatrix from_relators = relator_exponent_matrix(p);
  int g = p.generator_count();
  // expected constraint lattice: differences of consecutive coordinates
  int diff_cols = std::max(1, g - 1);
  IntMatrix expected(g, diff_cols);
  for (int i = 0; i + 1 < g; ++i) {
    expected.at(i, i) = 1;
    expected.at(i + 1, i) = -1;
  }
  auto spans = [](const IntMatrix& lattice, const IntMatrix& vectors) {
    for (int j = 0; j < vectors.cols(); ++j) {
      std::vector<mpz_class> col(static_cast<std::size_t>(vectors.rows()));
      bool zero = true;
      for (int i = 0; i < vectors.rows(); ++i) {
        col[static_cast<std::size_t>(i)] = vectors.at(i, j);
        if (col[static_cast<std::size_t>(i)] != 0) zero = false;
      }
      if (zero) continue;
      std::vector<mpz_class> x;
      if (!solve(lattice, col, x)) return false;
    }
    return true;
  };
  return spans(expected, from_relators) && spans(from_relators, expected);
}

std::optional<long> splitting_search(int n, long d) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  if (d < 1) throw std::invalid_argument("need d >= 1");
  const long nn = static_cast<long>(n) * (n - 1);
  std::optional<long> found;
  for (long a = 0; a < d; ++a)
    if ((1 + nn * a) % d == 0) {
      found = a;
      break;
    }
  if (!found) return std::nullopt;

  if (!relator_constraints_force_equal_twists(n))
    throw std::logic_error("relator constraint derivation failed");

  long a = *found;
  long exponent = 1 + nn * a;
  BraidWord z = zeta(n, n);
  BraidWord za = z.pow(checked_int(a));
  BraidWord block(n);
  for (int i = 1; i <= n - 1; ++i) block = block * BraidWord(n, {i}) * za;
  if (!equals(block.pow(n), z.pow(checked_int(exponent))))
    throw std::logic_error("splitting certificate failed");
  if (exponent % d != 0) throw std::logic_error("splitting residue arithmetic failed");
  return found;
}

long class_order(int n, long d) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  if (d < 1) throw std::invalid_argument("need d >= 1");
  const long nn = static_cast<long>(n) * (n - 1);
  long order = 0;
  for (long k = 1; k <= d && order == 0; ++k)
    for (long a = 0; a < d; ++a)
      if ((k + nn * a) % d == 0) {
        order = k;
        break;
      }
  if (order != std::gcd(nn, d))
    throw std::logic_error("class order disagrees with gcd cross-check");
  return order;
}

AbelianGroup transgression_cokernel(int n, long N) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  if (N < 1) throw std::invalid_argument("need N >= 1");
  IntMatrix m(1, 2);
  m.at(0, 0) = static_cast<long>(n) * (n - 1);
  m.at(0, 1) = N;
  return cokernel(m);
}

bool gt_commutation_check(int n, const FreePairWord& f, long lambda, long e) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  if (!f.is_commutator_word())
    throw std::invalid_argument("f must have zero exponent sums");
  BraidWord zn = zeta(n, n);
  BraidWord central = zn.pow(checked_int(lambda * e));
  for (int i = 1; i <= n - 1; ++i) {
    BraidWord si(n, {i});
    BraidWord zi = zeta(n, i);
    BraidWord g = f.evaluate(si, zi) * si.pow(checked_int(lambda)) *
                  f.evaluate(zi, si);
    if (!equals(phi_nu_apply(g, e), g * central)) return false;
  }
  return true;
}

bool f_centrality_insensitive(int n, const FreePairWord& f, long e) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  if (!f.is_commutator_word())
    throw std::invalid_argument("f must have zero exponent sums");
  BraidWord twist = zeta(n, n).pow(checked_int(e));
  for (int i = 1; i <= n - 1; ++i) {
    BraidWord si(n, {i});
    BraidWord zi = zeta(n, i);
    if (!equals(f.evaluate(si * twist, zi), f.evaluate(si, zi))) return false;
  }
  return true;
}

} // namespace braidverify
