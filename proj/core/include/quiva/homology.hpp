#pragma once

#include "quiva/rep.hpp"

namespace quiva {

struct ProjCover {
    Rep P;
    Morphism cover;            // P ->> M, kernel inside rad P
    std::vector<int> copies;   // vertex of each indecomposable summand of P
};

/// Projective cover P = (+)_v P_v^{m_v} with m_v = dim top(M)(v).
ProjCover projective_cover(const Rep& M);

/// A finite stretch of a minimal projective resolution.
struct Resolution {
    std::vector<Rep> terms;                 // P^0 .. P^n
    std::vector<std::vector<int>> copies;   // summand vertices per term
    std::vector<Morphism> diffs;            // diffs[i] : P^{i+1} -> P^i
    Morphism augmentation;                  // P^0 -> M
    std::optional<int> pd;                  // exact projective dimension if found
    int cap = 0;
    /// Set when pd is open but Omega^i = Omega^j was certified (i < j).
    std::optional<std::pair<int, int>> syzygy_period;

    bool pd_at_most(int k) const { return pd && *pd <= k; }
    std::string pd_str() const;
};

/// Iterated projective covers of syzygies; pd is reported exactly when a zero
/// syzygy occurs within cap, otherwise ">=cap" (with an optional periodicity
/// certificate — infinite projective dimension is never asserted).
Resolution min_resolution(const Rep& M, int cap, bool detect_period = false,
                          uint64_t seed = 1);

/// dim Ext^i(M, N), computed from the Hom complex of a minimal resolution.
/// Throws "resolution too short" if the cap does not reach degree i+1.
int ext_dim(int i, const Rep& M, const Rep& N, int cap = -1);

struct InjEnvelope {
    Rep E;
    Morphism embed;  // M -> E, essential
};
/// Dual of the projective cover of the dual module.
InjEnvelope injective_envelope(const Rep& M);

/// Does f factor through an injective module? Equivalent to factoring
/// through the injective envelope of the source, which is a linear system.
bool factors_through_injective(const Morphism& f);

/// dim of Hom(M, N) modulo morphisms factoring through injectives.
int stable_hom_dim(const Rep& M, const Rep& N);

/// Induction A (x)_B W along a full subcategory B of A: transports a minimal
/// projective presentation of W and takes the cokernel.
Rep induce(const Rep& W, const AlgebraPtr& A);

/// Morphism P_w -> P_v given by right multiplication with an element of the
/// block A(v, w) (full coordinate column).
Morphism right_mult_morphism(const AlgebraPtr& A, const Matrix& elem, int v, int w);

/// Reads the components of a morphism between direct sums of projectives as
/// block elements: out[c][j] in A(v_c, w_j) for d : (+)_j P_{w_j} -> (+)_c P_{v_c}.
std::vector<std::vector<Matrix>> projective_map_components(
    const Morphism& d, const std::vector<int>& from_copies,
    const std::vector<int>& to_copies);

/// Seeded pseudo-random module over a path algebra, nonzero, with total
/// dimension at most max_total; deterministic in the seed.
Rep random_module(const AlgebraPtr& A, uint64_t seed, int max_total);

/// Seeded extension 0 -> Y -> E -> X -> 0 (possibly split); path algebras.
Rep random_extension(const Rep& X, const Rep& Y, uint64_t seed);

}  // namespace quiva
