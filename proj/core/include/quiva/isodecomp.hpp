#pragma once

#include "quiva/homology.hpp"
#include "quiva/structalg.hpp"

namespace quiva {

struct EndAlgebra {
    StructureAlgebra alg;
    std::vector<Morphism> basis;
};
/// End_A(M) as a structure-constants algebra over the hom basis.
EndAlgebra end_algebra(const Rep& M);

/// Certified only by dim(End/rad) == 1; no spectral heuristics.
bool is_indecomposable(const Rep& M);

struct Summand {
    Rep indec;
    int multiplicity = 0;
};

/// Krull-Schmidt decomposition by Fitting splittings on endomorphisms.
/// Indecomposability of every factor is certified via the radical of its
/// endomorphism algebra; a non-split endomorphism quotient (a division
/// algebra bigger than the ground field) raises an Error suggesting a field
/// change rather than mis-reporting.
std::vector<Summand> decompose(const Rep& M, uint64_t seed = 1);

/// Monic minimal polynomial of a square matrix, coefficients ascending.
std::vector<Scalar> minimal_polynomial(const Matrix& T);

}  // namespace quiva
