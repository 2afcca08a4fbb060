#pragma once

#include "quiva/matrix.hpp"

namespace quiva {

/// A finite-dimensional unital associative algebra presented by structure
/// constants: basis_i * basis_j = sum_k c[k][i][j] basis_k. Used for corner
/// algebras A(x,x) and endomorphism algebras End(M); path-algebra tables have
/// their own richer type.
class StructureAlgebra {
  public:
    /// mult[i][j] is the coordinate column (length dim) of basis_i * basis_j.
    StructureAlgebra(const FieldSpec& f, std::vector<std::vector<Matrix>> mult);

    int dim() const { return dim_; }
    const FieldSpec& field() const { return field_; }

    /// Column coordinates of the multiplicative unit, solved for at
    /// construction; construction throws if the algebra is not unital.
    const Matrix& unit() const { return unit_; }

    /// Left multiplication operator of the element with coordinate column v.
    Matrix left_mult(const Matrix& v) const;
    /// Right multiplication operator.
    Matrix right_mult(const Matrix& v) const;
    /// Product of two coordinate columns.
    Matrix multiply(const Matrix& a, const Matrix& b) const;

    /// Checks associativity on all basis triples. O(dim^4); fine at the
    /// dimensions this library works with, so it runs on every construction.
    bool is_associative() const;

    /// Jacobson radical. Over Q this is the kernel of the trace form
    /// x |-> tr(L_{xy}); over F_p the trace form alone is not enough and the
    /// chain of p-power trace functions (Friedl-Ronyai) is used.
    Subspace radical() const;

    /// dim(A / rad A) == 1, i.e. local with residue field k.
    bool is_split_local() const;

    /// Socle of the left regular module: { x : rad * x = 0 }.
    Subspace left_socle() const;

    /// Self-injectivity of the regular module, decided by searching for an
    /// isomorphism Lambda -> D(Lambda) of left modules; for the local algebras
    /// this is called on, simple-socle is an equivalent formulation and the
    /// two are cross-checked (disagreement is an internal error).
    bool is_self_injective(uint64_t seed = 1) const;

    /// Is the module given by its action matrices (one per basis element,
    /// act[i] = action of basis_i on k^m) free over this local algebra?
    /// Uses the minimal-generator test: g = dim top, free iff
    /// dim M = g * dim Lambda and the lift Lambda^g -> M is injective.
    bool free_module_over_local(const std::vector<Matrix>& act) const;

    /// Quotient by a two-sided ideal given as a subspace (not verified).
    StructureAlgebra quotient(const Subspace& ideal) const;

  private:
    FieldSpec field_;
    int dim_;
    std::vector<std::vector<Matrix>> mult_;  // [i][j] -> column of b_i b_j
    std::vector<Matrix> left_; // cached L_{b_i}
    Matrix unit_;

    Subspace radical_char0() const;
    Subspace radical_charp() const;
};

/// Spec-level entry point: radical of a structure-constants table.
inline Subspace algebra_radical(const StructureAlgebra& a) { return a.radical(); }

}  // namespace quiva
