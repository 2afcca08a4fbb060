#pragma once

#include <cstdint>
#include <vector>

#include "quiva/matrix.hpp"

namespace quiva {

enum class IsoVerdict { Iso, NotIso, Inconclusive };

struct IsoResult {
    IsoVerdict verdict = IsoVerdict::Inconclusive;
    /// Per-block matrices of an isomorphism when verdict == Iso.
    std::vector<Matrix> cert;
};

/// Searches the space spanned by `hom12` for an element whose blocks are all
/// invertible. hom21 is the reverse hom space; it feeds the exact
/// trace-ideal criterion: an isomorphism exists only if the identity lies in
/// span{ g o f }, which gives a definitive negative for arbitrary modules and
/// (when the composite decomposition exposes an invertible summand) a
/// certificate without randomness. Randomized trials and, over small prime
/// fields, exhaustion cover the rest; Inconclusive is possible but never a
/// silent false negative.
IsoResult block_iso_search(const FieldSpec& f,
                           const std::vector<int>& dims1,
                           const std::vector<int>& dims2,
                           const std::vector<std::vector<Matrix>>& hom12,
                           const std::vector<std::vector<Matrix>>& hom21,
                           uint64_t seed,
                           long exhaustive_budget = 1000000,
                           int random_trials = 200);

/// Basis of { F : F acts1[i] = acts2[i] F for all i }, F of shape m2 x m1.
std::vector<Matrix> intertwiners(const FieldSpec& f, int m1, int m2,
                                 const std::vector<Matrix>& acts1,
                                 const std::vector<Matrix>& acts2);

/// Isomorphism test for two modules over the same algebra, each given by the
/// action matrices of a common generating set.
IsoResult action_module_isomorphic(const FieldSpec& f,
                                   const std::vector<Matrix>& acts1,
                                   const std::vector<Matrix>& acts2,
                                   uint64_t seed);

}  // namespace quiva
