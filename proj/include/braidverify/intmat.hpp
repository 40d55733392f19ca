#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace braidverify {

// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
public:
  IntMatrix(int rows, int cols); // zero matrix
  IntMatrix(int rows, int cols, std::vector<mpz_class> entries); // row-major

  static IntMatrix identity(int n);
  static IntMatrix from_int_rows(const std::vector<std::vector<long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const mpz_class& at(int r, int c) const;
  mpz_class& at(int r, int c);

  IntMatrix transposed() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  void negate_row(int r);
  void negate_col(int c);
  void add_row_multiple(int dst, int src, const mpz_class& k); // row dst += k*row src
  void add_col_multiple(int dst, int src, const mpz_class& k);

  bool is_zero() const;
  std::string to_string() const;

private:
  int rows_, cols_;
  std::vector<mpz_class> data_;
};

// d = u * a * v with u, v unimodular, d diagonal, d(i,i) >= 0,
// and d(i,i) divides d(i+1,i+1).
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  std::vector<mpz_class> diagonal() const; // min(rows, cols) entries
  int rank() const;                        // nonzero diagonal entries
};

SmithForm smith_normal_form(const IntMatrix& a);

// Isomorphism type of a finitely generated abelian group, as
// Z^free_rank + sum of Z/torsion[i] with each torsion entry >= 2 and
// torsion[i] dividing torsion[i+1].
struct AbelianGroup {
  int free_rank = 0;
  std::vector<mpz_class> torsion;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
  std::string to_string() const;
};

// coker(a) = Z^rows / column span of a.
AbelianGroup cokernel(const IntMatrix& a);

// Basis for { x in Z^cols : a x = 0 }, one basis vector per column.
IntMatrix kernel_basis(const IntMatrix& a);

// Determinant by fraction-free elimination; requires a square matrix.
mpz_class determinant(const IntMatrix& a);

bool is_unimodular(const IntMatrix& a);

// x solving a x = b over Z, if one exists.
bool solve(const IntMatrix& a, const std::vector<mpz_class>& b,
           std::vector<mpz_class>& x);

} // namespace braidverify
