#pragma once

#include "quiva/algebra.hpp"
#include "quiva/isosearch.hpp"

namespace quiva {

/// A representation of the algebra: one exact vector space per vertex and one
/// matrix per generator, acting on column vectors (rows = dim of the target
/// vertex). For path algebras the generators are the arrows.
struct Rep {
    AlgebraPtr A;
    std::vector<int> dims;
    std::vector<Matrix> gen_maps;

    int total_dim() const;
    int offset(int v) const;
    bool is_zero() const { return total_dim() == 0; }
    const FieldSpec& field() const { return A->field(); }

    static Rep zero(const AlgebraPtr& A);

    /// Support: vertices with a nonzero space.
    std::vector<int> support() const;

    friend bool operator==(const Rep& a, const Rep& b);
};

/// The invariants every representation must satisfy: matrix shapes match the
/// dims, every relation evaluates to zero, and the generator matrices are
/// consistent with the full multiplication table.
bool rep_valid(const Rep& M);

Rep proj_rep(const AlgebraPtr& A, int v);
Rep simple_rep(const AlgebraPtr& A, int v);
Rep injective_rep(const AlgebraPtr& A, int v);

/// Action of a basis element (via its generator expression).
Matrix word_action(const Rep& M, int basis_index);
/// Action of an element of the block A(src, tgt), given by its coordinate
/// column over the full basis; returns a dims[tgt] x dims[src] matrix.
Matrix element_action(const Rep& M, const Matrix& coords, int src, int tgt);

struct Morphism {
    Rep source, target;
    std::vector<Matrix> comps;  // per vertex, dims: target x source

    bool is_zero() const;
    friend bool operator==(const Morphism& a, const Morphism& b);
};

Morphism zero_morphism(const Rep& M, const Rep& N);
Morphism identity_morphism(const Rep& M);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism mor_add(const Morphism& f, const Morphism& g);
Morphism mor_scale(const Morphism& f, const Scalar& c);
bool morphism_valid(const Morphism& f);
bool is_injective_morphism(const Morphism& f);
bool is_surjective_morphism(const Morphism& f);
bool is_isomorphism_morphism(const Morphism& f);

/// Exact basis of Hom_A(M, N): the solution space of all commuting squares.
std::vector<Morphism> hom_space(const Rep& M, const Rep& N);
int hom_dim(const Rep& M, const Rep& N);

struct DirectSum {
    Rep sum;
    std::vector<Morphism> incl;  // summand -> sum
    std::vector<Morphism> proj;  // sum -> summand
};
DirectSum direct_sum(const std::vector<Rep>& parts);

/// A submodule with its quotient and the exact structure maps.
struct SubQuot {
    Rep sub;
    Morphism incl;  // sub -> M
    Rep quot;
    Morphism proj;  // M -> quot
};

/// Builds sub/quot from per-vertex subspaces; throws if they are not closed
/// under the action (callers rely on this as an internal audit).
SubQuot subquot_from_subspaces(const Rep& M, const std::vector<Subspace>& spaces);

/// The smallest submodule containing the given stacked coordinate vectors
/// (closure under all generator actions), with its quotient.
SubQuot carve_generated(const Rep& M, const std::vector<Matrix>& stacked_vectors);

/// Trace submodule Tr_P(M) = sum of images of all homomorphisms P -> M.
SubQuot trace_submodule(const Rep& P, const Rep& M);

struct Layers {
    SubQuot radical;  // radical.sub = rad M, radical.quot = top
    SubQuot socle;    // socle.sub = soc M
};
/// rad M = J M (arrow ideal action), top = M / rad M, socle = annihilator of
/// J; the top and socle are verified semisimple.
Layers layers(const Rep& M);

/// Kernel, image and cokernel of a morphism (per-vertex exact subspaces).
SubQuot kernel(const Morphism& f);
SubQuot image(const Morphism& f);

/// Duality D = Hom_k(-, k): a representation of the opposite algebra with the
/// same dims and transposed action; dual_rep(dual_rep(M)) == M on the nose.
Rep dual_rep(const Rep& M);
/// Transport of a morphism through D (arrows reverse).
Morphism dual_morphism(const Morphism& f);

/// Restriction to a full subcategory algebra B (B->parent() must be M.A).
Rep restrict_rep(const Rep& M, const AlgebraPtr& B);

/// Isomorphism test: certificate morphism with invertible components, a
/// definitive negative, or an explicit Inconclusive verdict.
struct RepIso {
    IsoVerdict verdict = IsoVerdict::Inconclusive;
    std::optional<Morphism> cert;
};
RepIso is_isomorphic(const Rep& M, const Rep& N, uint64_t seed = 1);

}  // namespace quiva
