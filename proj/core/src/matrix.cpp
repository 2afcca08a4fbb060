#include "quiva/matrix.hpp"

#include <sstream>

namespace quiva {

Matrix::Matrix(const FieldSpec& f, int rows, int cols)
    : rows_(rows), cols_(cols), field_(f),
      e_(size_t(rows) * size_t(cols), Scalar::zero(f)) {
    if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
}

Matrix Matrix::identity(const FieldSpec& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const FieldSpec& f,
                         const std::vector<std::vector<long>>& rows) {
    int r = (int)rows.size();
    int c = r == 0 ? 0 : (int)rows[0].size();
    Matrix m(f, r, c);
    for (int i = 0; i < r; ++i) {
        if ((int)rows[i].size() != c) throw Error("ragged row list");
        for (int j = 0; j < c; ++j) m.at(i, j) = Scalar(f, rows[i][j]);
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in +");
    Matrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in -");
    Matrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix shape mismatch in *");
    Matrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

Matrix Matrix::operator*(const Scalar& c) const {
    Matrix r = *this;
    for (auto& x : r.e_) x *= c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::pow(int k) const {
    if (rows_ != cols_) throw Error("pow of non-square matrix");
    Matrix acc = identity(field_, rows_);
    Matrix base = *this;
    for (; k > 0; k >>= 1) {
        if (k & 1) acc = acc * base;
        if (k > 1) base = base * base;
    }
    return acc;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (cols_ != o.cols_) throw Error("vstack column mismatch");
    Matrix r(field_, rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

Matrix Matrix::hstack(const Matrix& o) const {
    if (rows_ != o.rows_) throw Error("hstack row mismatch");
    Matrix r(field_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

Matrix Matrix::submatrix(int r0, int c0, int nrows, int ncols) const {
    if (r0 < 0 || c0 < 0 || r0 + nrows > rows_ || c0 + ncols > cols_)
        throw Error("submatrix out of range");
    Matrix r(field_, nrows, ncols);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.field_ == b.field_))
        return false;
    return a.e_ == b.e_;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).str();
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<int> rref_in_place(Matrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int sel = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
        Scalar inv = m.at(r, c).inverse();
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(const Matrix& m) {
    Matrix c = m;
    return (int)rref_in_place(c).size();
}

Subspace kernel_space(const Matrix& A) {
    Matrix r = A;
    std::vector<int> pivots = rref_in_place(r);
    std::vector<bool> is_pivot(A.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    Matrix basis(A.field(), A.cols() - (int)pivots.size(), A.cols());
    int row = 0;
    for (int c = 0; c < A.cols(); ++c) {
        if (is_pivot[c]) continue;
        basis.at(row, c) = Scalar::one(A.field());
        for (int k = 0; k < (int)pivots.size(); ++k)
            basis.at(row, pivots[k]) = -r.at(k, c);
        ++row;
    }
    return Subspace::span_of_rows(basis);
}

RrefResult rref_solve(const Matrix& A, const std::optional<Matrix>& b) {
    RrefResult res;
    if (b) {
        if (b->rows() != A.rows()) throw Error("rhs row count mismatch");
        Matrix aug = A.hstack(*b);
        std::vector<int> pivots = rref_in_place(aug);
        res.consistent = true;
        for (int p : pivots)
            if (p >= A.cols()) res.consistent = false;
        if (res.consistent) {
            Matrix sol(A.field(), A.cols(), b->cols());
            int row = 0;
            for (int p : pivots) {
                for (int j = 0; j < b->cols(); ++j)
                    sol.at(p, j) = aug.at(row, A.cols() + j);
                ++row;
            }
            res.solution = sol;
        }
    }
    Matrix r = A;
    res.pivots = rref_in_place(r);
    res.rank = (int)res.pivots.size();
    res.rref = r;
    res.kernel = kernel_space(A);
    res.image = Subspace::span_of_rows(A.transpose());
    return res;
}

std::optional<Matrix> solve(const Matrix& A, const Matrix& B) {
    return rref_solve(A, B).solution;
}

std::optional<Matrix> inverse(const Matrix& A) {
    if (A.rows() != A.cols()) return std::nullopt;
    auto s = solve(A, Matrix::identity(A.field(), A.rows()));
    return s;
}

Subspace::Subspace(const FieldSpec& f, int ambient)
    : ambient_(ambient), basis_(f, 0, ambient) {}

Subspace Subspace::span_of_rows(const Matrix& gens) {
    Matrix r = gens;
    std::vector<int> pivots = rref_in_place(r);
    Subspace s(gens.field(), gens.cols());
    s.basis_ = r.submatrix(0, 0, (int)pivots.size(), gens.cols());
    return s;
}

bool Subspace::contains_vector(const Matrix& row_vec) const {
    if (row_vec.cols() != ambient_ || row_vec.rows() != 1)
        throw Error("vector/ambient mismatch");
    Matrix v = row_vec;
    // reduce against the RREF basis
    for (int r = 0, c = 0; r < basis_.rows(); ++r) {
        while (c < ambient_ && basis_.at(r, c).is_zero()) ++c;
        if (c >= ambient_) break;
        if (!v.at(0, c).is_zero()) {
            Scalar f = v.at(0, c);
            for (int j = 0; j < ambient_; ++j) v.at(0, j) -= f * basis_.at(r, j);
        }
    }
    return v.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw Error("ambient dimension mismatch");
    for (int i = 0; i < other.dim(); ++i)
        if (!contains_vector(other.basis_.row(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw Error("ambient dimension mismatch");
    return span_of_rows(basis_.vstack(other.basis_));
}

Subspace Subspace::intersection(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw Error("ambient dimension mismatch");
    // Zassenhaus: RREF of [U|U; V|0], read intersection under the zero block.
    const FieldSpec& f = basis_.field();
    int n = ambient_;
    Matrix block(f, dim() + other.dim(), 2 * n);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < n; ++j) {
            block.at(i, j) = basis_.at(i, j);
            block.at(i, n + j) = basis_.at(i, j);
        }
    for (int i = 0; i < other.dim(); ++i)
        for (int j = 0; j < n; ++j) block.at(dim() + i, j) = other.basis_.at(i, j);
    rref_in_place(block);
    std::vector<int> keep;
    for (int i = 0; i < block.rows(); ++i) {
        bool left_zero = true;
        for (int j = 0; j < n && left_zero; ++j)
            if (!block.at(i, j).is_zero()) left_zero = false;
        bool right_zero = true;
        for (int j = 0; j < n && right_zero; ++j)
            if (!block.at(i, n + j).is_zero()) right_zero = false;
        if (left_zero && !right_zero) keep.push_back(i);
    }
    Matrix gens(f, (int)keep.size(), n);
    for (int k = 0; k < (int)keep.size(); ++k)
        for (int j = 0; j < n; ++j) gens.at(k, j) = block.at(keep[k], n + j);
    return span_of_rows(gens);
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

SubspaceOps subspace_ops(const Subspace& U, const Subspace& V) {
    SubspaceOps r;
    r.sum = U.sum(V);
    r.intersection = U.intersection(V);
    r.contains = U.contains(V);
    return r;
}

}  // namespace quiva
