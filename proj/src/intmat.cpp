#include "braidverify/intmat.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace braidverify {

namespace {

void check_shape(int rows, int cols) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("matrix dimensions must be positive");
}

} // namespace

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  check_shape(rows, cols);
  data_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<mpz_class> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  check_shape(rows, cols);
  if (data_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
    throw std::invalid_argument("entry count does not match shape");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_int_rows(const std::vector<std::vector<long>>& rows) {
  if (rows.empty() || rows.front().empty())
    throw std::invalid_argument("matrix dimensions must be positive");
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int r = 0; r < m.rows(); ++r) {
    if (rows[static_cast<std::size_t>(r)].size() != static_cast<std::size_t>(m.cols()))
      throw std::invalid_argument("ragged rows");
    for (int c = 0; c < m.cols(); ++c)
      m.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  return m;
}

const mpz_class& IntMatrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("matrix index out of range");
  return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c)];
}

mpz_class& IntMatrix::at(int r, int c) {
  return const_cast<mpz_class&>(std::as_const(*this).at(r, c));
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("shape mismatch in product");
  IntMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int k = 0; k < a.cols(); ++k) {
      const mpz_class& ark = a.at(r, k);
      if (ark == 0) continue;
      for (int c = 0; c < b.cols(); ++c) out.at(r, c) += ark * b.at(k, c);
    }
  return out;
}

void IntMatrix::swap_rows(int a, int b) {
  for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntMatrix::swap_cols(int a, int b) {
  for (int r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void IntMatrix::negate_row(int r) {
  for (int c = 0; c < cols_; ++c) at(r, c) = -at(r, c);
}

void IntMatrix::negate_col(int c) {
  for (int r = 0; r < rows_; ++r) at(r, c) = -at(r, c);
}

void IntMatrix::add_row_multiple(int dst, int src, const mpz_class& k) {
  if (dst == src) throw std::invalid_argument("row indices must differ");
  for (int c = 0; c < cols_; ++c) at(dst, c) += k * at(src, c);
}

void IntMatrix::add_col_multiple(int dst, int src, const mpz_class& k) {
  if (dst == src) throw std::invalid_argument("column indices must differ");
  for (int r = 0; r < rows_; ++r) at(r, dst) += k * at(r, src);
}

bool IntMatrix::is_zero() const {
  for (const mpz_class& v : data_)
    if (v != 0) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (int r = 0; r < rows_; ++r) {
    if (r) out << "; ";
    for (int c = 0; c < cols_; ++c) {
      if (c) out << ' ';
      out << at(r, c);
    }
  }
  out << ']';
  return out.str();
}

std::vector<mpz_class> SmithForm::diagonal() const {
  std::vector<mpz_class> out;
  int n = std::min(d.rows(), d.cols());
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(d.at(i, i));
  return out;
}

int SmithForm::rank() const {
  int r = 0;
  for (const mpz_class& v : diagonal())
    if (v != 0) ++r;
  return r;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm f{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  IntMatrix& d = f.d;
  IntMatrix& u = f.u;
  IntMatrix& v = f.v;
  const int n = std::min(d.rows(), d.cols());

  for (int t = 0; t < n; ++t) {
    // Pivot: nonzero entry of least magnitude in the trailing block.
    int pr = -1, pc = -1;
    mpz_class best;
    for (int r = t; r < d.rows(); ++r)
      for (int c = t; c < d.cols(); ++c) {
        if (d.at(r, c) == 0) continue;
        mpz_class m = abs(d.at(r, c));
        if (pr < 0 || m < best) {
          best = m;
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) break; // trailing block is zero

    if (pr != t) {
      d.swap_rows(t, pr);
      u.swap_rows(t, pr);
    }
    if (pc != t) {
      d.swap_cols(t, pc);
      v.swap_cols(t, pc);
    }

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int r = t + 1; r < d.rows(); ++r) {
        if (d.at(r, t) == 0) continue;
        mpz_class q = d.at(r, t) / d.at(t, t); // truncated; |rem| < |pivot|
        if (q != 0) {
          d.add_row_multiple(r, t, -q);
          u.add_row_multiple(r, t, -q);
        }
        if (d.at(r, t) != 0) {
          d.swap_rows(t, r);
          u.swap_rows(t, r);
          dirty = true;
        }
      }
      for (int c = t + 1; c < d.cols(); ++c) {
        if (d.at(t, c) == 0) continue;
        mpz_class q = d.at(t, c) / d.at(t, t);
        if (q != 0) {
          d.add_col_multiple(c, t, -q);
          v.add_col_multiple(c, t, -q);
        }
        if (d.at(t, c) != 0) {
          d.swap_cols(t, c);
          v.swap_cols(t, c);
          dirty = true;
        }
      }
      if (dirty) continue;

      // Divisibility fix: the pivot must divide the trailing block.
      for (int r = t + 1; r < d.rows() && !dirty; ++r)
        for (int c = t + 1; c < d.cols() && !dirty; ++c)
          if (d.at(r, c) % d.at(t, t) != 0) {
            d.add_row_multiple(t, r, 1);
            u.add_row_multiple(t, r, 1);
            dirty = true;
          }
    }
    if (d.at(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return f;
}

AbelianGroup cokernel(const IntMatrix& a) {
  SmithForm f = smith_normal_form(a);
  AbelianGroup g;
  g.free_rank = a.rows() - f.rank();
  for (const mpz_class& v : f.diagonal())
    if (v >= 2) g.torsion.push_back(v);
  return g;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SmithForm f = smith_normal_form(a);
  int rank = f.rank();
  int dim = a.cols() - rank;
  IntMatrix out(a.cols(), dim > 0 ? dim : 1);
  if (dim == 0) return IntMatrix(a.cols(), 1); // single zero column
  for (int c = 0; c < dim; ++c)
    for (int r = 0; r < a.cols(); ++r) out.at(r, c) = f.v.at(r, rank + c);
  return out;
}

mpz_class determinant(const IntMatrix& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant needs a square matrix");
  int n = a.rows();
  IntMatrix m = a;
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int r = k + 1;
      while (r < n && m.at(r, k) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a) {
  if (a.rows() != a.cols()) return false;
  mpz_class det = determinant(a);
  return det == 1 || det == -1;
}

bool solve(const IntMatrix& a, const std::vector<mpz_class>& b,
           std::vector<mpz_class>& x) {
  if (b.size() != static_cast<std::size_t>(a.rows()))
    throw std::invalid_argument("rhs length does not match matrix");
  SmithForm f = smith_normal_form(a);
  std::vector<mpz_class> c(static_cast<std::size_t>(a.rows()), 0);
  for (int r = 0; r < a.rows(); ++r)
    for (int k = 0; k < a.rows(); ++k)
      c[static_cast<std::size_t>(r)] += f.u.at(r, k) * b[static_cast<std::size_t>(k)];
  std::vector<mpz_class> y(static_cast<std::size_t>(a.cols()), 0);
  int n = std::min(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    const mpz_class& ci = c[static_cast<std::size_t>(i)];
    if (i < n && f.d.at(i, i) != 0) {
      if (ci % f.d.at(i, i) != 0) return false;
      y[static_cast<std::size_t>(i)] = ci / f.d.at(i, i);
    } else if (ci != 0) {
      return false;
    }
  }
  x.assign(static_cast<std::size_t>(a.cols()), 0);
  for (int r = 0; r < a.cols(); ++r)
    for (int k = 0; k < a.cols(); ++k)
      x[static_cast<std::size_t>(r)] += f.v.at(r, k) * y[static_cast<std::size_t>(k)];
  return true;
}

std::string AbelianGroup::to_string() const {
  std::ostringstream out;
  bool first = true;
  if (free_rank > 0) {
    out << "Z";
    if (free_rank > 1) out << "^" << free_rank;
    first = false;
  }
  for (const mpz_class& t : torsion) {
    if (!first) out << " + ";
    out << "Z/" << t;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

} // namespace braidverify
