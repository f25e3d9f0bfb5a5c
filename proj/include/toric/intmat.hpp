#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace toric {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
  public:
    IntMatrix(int rows, int cols);
    IntMatrix(int rows, int cols, std::vector<mpz_class> entries);
    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const mpz_class& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
    mpz_class& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    int rows_, cols_;
    std::vector<mpz_class> e_;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

// Rank over the rationals, fraction-free (Bareiss with full pivoting).
int rank(const IntMatrix& m);

// Exact determinant (Bareiss). Throws NonSquare.
mpz_class det(const IntMatrix& m);

struct HnfResult {
    IntMatrix h;  // unimodular, |det h| = 1
    IntMatrix u;  // u = m * h, upper triangular, canonical
};

// Canonical column Hermite triangularization of a nonsingular square matrix:
// u = m * h with h unimodular, u upper triangular, diagonal d_i > 0 and
// 0 <= u(i,j) < d_i for j > i. Throws NonSquare / SingularMinor.
HnfResult column_hnf_triangularize(const IntMatrix& m);

// Exact integer inverse of a matrix with determinant +-1. Throws NotUnimodular.
IntMatrix unimodular_inverse(const IntMatrix& h);

// Lexicographically first set of rank-many independent columns, completed to
// a permutation of 0..cols-1 that moves them to the front and keeps the rest
// in order. Requires rank(m) == rows; throws RankDeficient otherwise.
std::vector<int> select_pivot_columns(const IntMatrix& m);

bool is_upper_triangular(const IntMatrix& m);

}  // namespace toric
