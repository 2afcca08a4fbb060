#pragma once

#include <optional>
#include <vector>

#include "quiva/field.hpp"

namespace quiva {

/// Dense row-major matrix over a fixed exact field. Matrices act on column
/// vectors throughout the library: a map V -> W has dim(W) rows and dim(V)
/// columns, and composition is matrix product in the same order.
class Matrix {
  public:
    Matrix() = default;
    Matrix(const FieldSpec& f, int rows, int cols);

    static Matrix identity(const FieldSpec& f, int n);
    static Matrix from_rows(const FieldSpec& f,
                            const std::vector<std::vector<long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    bool is_zero() const;
    bool is_identity() const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Scalar& c) const;
    Matrix operator-() const;

    Matrix transpose() const;
    Matrix pow(int k) const;

    /// Stacks rows of `o` below this matrix (column counts must agree).
    Matrix vstack(const Matrix& o) const;
    /// Puts `o` to the right of this matrix (row counts must agree).
    Matrix hstack(const Matrix& o) const;
    Matrix submatrix(int r0, int c0, int nrows, int ncols) const;
    Matrix row(int i) const { return submatrix(i, 0, 1, cols_); }
    Matrix col(int j) const { return submatrix(0, j, rows_, 1); }

    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string str() const;

  private:
    int rows_ = 0, cols_ = 0;
    FieldSpec field_;
    std::vector<Scalar> e_;
};

/// A subspace of k^n, stored as an RREF row basis with strictly increasing
/// pivot columns; two equal subspaces compare equal componentwise.
class Subspace {
  public:
    Subspace() = default;
    /// Zero subspace of k^n.
    Subspace(const FieldSpec& f, int ambient);
    /// Span of the rows of `gens` (reduced here; zero rows dropped).
    static Subspace span_of_rows(const Matrix& gens);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const FieldSpec& field() const { return basis_.field(); }

    bool contains_vector(const Matrix& row_vec) const;
    bool contains(const Subspace& other) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersection(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b);

  private:
    int ambient_ = 0;
    Matrix basis_;  // dim x ambient, RREF
};

struct RrefResult {
    Matrix rref;
    int rank = 0;
    std::vector<int> pivots;
    /// Present iff a right-hand side was supplied and the system is solvable;
    /// an inconsistent system is a verdict, not an error.
    std::optional<Matrix> solution;
    bool consistent = true;
    Subspace kernel;  // of A, inside k^cols
    Subspace image;   // column space of A, inside k^rows
};

/// Row-reduces A, solving A x = b for every column of b when given.
RrefResult rref_solve(const Matrix& A, const std::optional<Matrix>& b = std::nullopt);

/// In-place Gauss-Jordan; returns the pivot columns.
std::vector<int> rref_in_place(Matrix& m);

int rank(const Matrix& m);

/// Right kernel { x : A x = 0 } as row vectors of length cols(A).
Subspace kernel_space(const Matrix& A);

/// Solves A X = B exactly; empty when inconsistent.
std::optional<Matrix> solve(const Matrix& A, const Matrix& B);

/// Inverse of a square matrix; empty when singular.
std::optional<Matrix> inverse(const Matrix& A);

struct SubspaceOps {
    Subspace sum;
    Subspace intersection;
    bool contains = false;  // V <= U for subspace_ops(U, V)
};

SubspaceOps subspace_ops(const Subspace& U, const Subspace& V);

}  // namespace quiva
