#include <doctest.h>

#include "quiva/bundled.hpp"
#include "quiva/isodecomp.hpp"

using namespace quiva;

namespace {

AlgebraPtr alg(const char* name) { return Algebra::build(bundled::load(name)); }

std::vector<int> dims_of(const AlgebraPtr& A, const Rep& M) { return M.dims; }

// the module "x over y" in e3_1: one-dimensional at x and y, arrow a acts
// identically, everything else by zero
Rep x_over_y(const AlgebraPtr& A) {
    Rep M = simple_rep(A, A->vertex_index("x"));
    M.dims[A->vertex_index("y")] = 1;
    for (size_t g = 0; g < A->generators().size(); ++g) {
        const auto& gen = A->generators()[g];
        M.gen_maps[g] = Matrix(A->field(), M.dims[gen.tgt], M.dims[gen.src]);
        if (gen.name == "a") M.gen_maps[g].at(0, 0) = Scalar::one(A->field());
    }
    REQUIRE(rep_valid(M));
    return M;
}

}  // namespace

TEST_CASE("canonical modules: projectives, injectives, simples") {
    SUBCASE("projective dimensions in the four-vertex example") {
        auto A = alg("e3_1");
        CHECK(proj_rep(A, A->vertex_index("x")).total_dim() == 4);
        CHECK(proj_rep(A, A->vertex_index("y")).total_dim() == 2);
        CHECK(proj_rep(A, A->vertex_index("z")).total_dim() == 2);
        CHECK(proj_rep(A, A->vertex_index("w")).total_dim() == 2);
        Rep Px = proj_rep(A, A->vertex_index("x"));
        CHECK(Px.dims == std::vector<int>{1, 1, 1, 1});
        CHECK(rep_valid(Px));
    }
    SUBCASE("loop-arrow example: P_x, P_y, I_x, I_y") {
        auto A = alg("e3_2");
        int x = A->vertex_index("x"), y = A->vertex_index("y");
        Rep Px = proj_rep(A, x), Py = proj_rep(A, y);
        CHECK(Px.total_dim() == 3);
        CHECK(Py.total_dim() == 1);
        CHECK(Py == simple_rep(A, y));
        Rep Ix = injective_rep(A, x), Iy = injective_rep(A, y);
        CHECK(Ix.total_dim() == 2);
        CHECK(Ix.dims[x] == 2);
        CHECK(Iy.total_dim() == 2);
        CHECK(Iy.dims[x] == 1);
        CHECK(Iy.dims[y] == 1);
        CHECK(rep_valid(Ix));
        CHECK(rep_valid(Iy));
    }
    SUBCASE("simple is the top of its projective") {
        for (const char* name : {"e3_1", "e3_2", "e4_1", "e4_2"}) {
            auto A = alg(name);
            for (int v = 0; v < A->num_vertices(); ++v) {
                Layers lay = layers(proj_rep(A, v));
                CHECK(lay.radical.quot.dims == simple_rep(A, v).dims);
            }
        }
    }
    SUBCASE("sum of projective dimensions is dim A") {
        for (const char* name : {"e3_1", "e3_2", "e4_1", "e4_2", "ringel_dual_cycle"}) {
            auto A = alg(name);
            int total = 0;
            for (int v = 0; v < A->num_vertices(); ++v)
                total += proj_rep(A, v).total_dim();
            CHECK(total == A->dim());
        }
    }
}

TEST_CASE("hom spaces") {
    SUBCASE("dim Hom(P_v, M) = dim M(v) on canonical modules") {
        for (const char* name : {"e3_1", "e3_2", "e4_1"}) {
            auto A = alg(name);
            for (int v = 0; v < A->num_vertices(); ++v) {
                Rep Pv = proj_rep(A, v);
                for (int w = 0; w < A->num_vertices(); ++w) {
                    Rep M = proj_rep(A, w);
                    CHECK(hom_dim(Pv, M) == M.dims[v]);
                    Rep I = injective_rep(A, w);
                    CHECK(hom_dim(Pv, I) == I.dims[v]);
                }
            }
        }
    }
    SUBCASE("dim Hom(P_v, P_w) = dim of the block A(w, v)") {
        auto A = alg("e3_1");
        for (int v = 0; v < A->num_vertices(); ++v)
            for (int w = 0; w < A->num_vertices(); ++w)
                CHECK(hom_dim(proj_rep(A, v), proj_rep(A, w)) ==
                      (int)A->block(w, v).size());
    }
    SUBCASE("dim Hom(I_x, P_x) = 1 in the loop-arrow example") {
        auto A = alg("e3_2");
        int x = A->vertex_index("x");
        CHECK(hom_dim(injective_rep(A, x), proj_rep(A, x)) == 1);
    }
    SUBCASE("hom basis members are valid morphisms") {
        auto A = alg("e4_1");
        Rep Py = proj_rep(A, A->vertex_index("y"));
        Rep Pz = proj_rep(A, A->vertex_index("z"));
        for (const Morphism& f : hom_space(Py, Pz)) CHECK(morphism_valid(f));
    }
}

TEST_CASE("layers: radical, top, socle") {
    SUBCASE("P_w in the four-vertex example is w over w") {
        auto A = alg("e3_1");
        int w = A->vertex_index("w");
        Layers lay = layers(proj_rep(A, w));
        CHECK(lay.radical.sub.dims == simple_rep(A, w).dims);
        CHECK(lay.radical.quot.dims == simple_rep(A, w).dims);
        CHECK(lay.socle.sub.dims == simple_rep(A, w).dims);
    }
    SUBCASE("semisimple module: rad 0, socle = top = M") {
        auto A = alg("e3_1");
        Rep M = direct_sum({simple_rep(A, 0), simple_rep(A, 1)}).sum;
        Layers lay = layers(M);
        CHECK(lay.radical.sub.total_dim() == 0);
        CHECK(lay.radical.quot.dims == M.dims);
        CHECK(lay.socle.sub.dims == M.dims);
    }
    SUBCASE("P_x in the loop-arrow example: top S_x, radical of dim 2") {
        auto A = alg("e3_2");
        int x = A->vertex_index("x"), y = A->vertex_index("y");
        Layers lay = layers(proj_rep(A, x));
        CHECK(lay.radical.quot.dims == simple_rep(A, x).dims);
        CHECK(lay.radical.sub.dims[x] == 1);
        CHECK(lay.radical.sub.dims[y] == 1);
    }
}

TEST_CASE("carve: generated submodules and quotients") {
    auto A = alg("e3_1");
    int x = A->vertex_index("x"), y = A->vertex_index("y");
    int z = A->vertex_index("z"), w = A->vertex_index("w");
    Rep Px = proj_rep(A, x);
    SUBCASE("submodule generated by the arrow class at y") {
        // P_x(y) is one-dimensional; its closure is a copy of P_y
        Matrix gen(A->field(), Px.total_dim(), 1);
        gen.at(Px.offset(y), 0) = Scalar::one(A->field());
        SubQuot sq = carve_generated(Px, {gen});
        CHECK(sq.sub.dims == proj_rep(A, y).dims);
        CHECK(is_isomorphic(sq.sub, proj_rep(A, y)).verdict == IsoVerdict::Iso);
        CHECK(sq.quot.dims[x] == 1);
        CHECK(sq.quot.dims[z] == 1);
        CHECK(sq.quot.dims[y] == 0);
        CHECK(sq.quot.dims[w] == 0);
    }
    SUBCASE("carving out everything leaves the zero quotient") {
        std::vector<Matrix> all;
        for (int i = 0; i < Px.total_dim(); ++i) {
            Matrix e(A->field(), Px.total_dim(), 1);
            e.at(i, 0) = Scalar::one(A->field());
            all.push_back(e);
        }
        SubQuot sq = carve_generated(Px, all);
        CHECK(sq.sub.dims == Px.dims);
        CHECK(sq.quot.total_dim() == 0);
    }
    SUBCASE("trace of P_x in P_z vanishes (no morphisms z -> x)") {
        SubQuot tr = trace_submodule(Px, proj_rep(A, z));
        CHECK(tr.sub.total_dim() == 0);
    }
}

TEST_CASE("projective covers") {
    SUBCASE("cover of S_x in the loop-arrow example") {
        auto A = alg("e3_2");
        int x = A->vertex_index("x"), y = A->vertex_index("y");
        ProjCover pc = projective_cover(simple_rep(A, x));
        CHECK(pc.P.dims == proj_rep(A, x).dims);
        SubQuot ker = kernel(pc.cover);
        CHECK(ker.sub.dims[x] == 1);
        CHECK(ker.sub.dims[y] == 1);
    }
    SUBCASE("cover of a projective is an isomorphism") {
        auto A = alg("e4_1");
        Rep P = proj_rep(A, A->vertex_index("y"));
        ProjCover pc = projective_cover(P);
        CHECK(is_isomorphism_morphism(pc.cover));
    }
    SUBCASE("the pictured extension 0 -> P_z -> P_x -> M -> 0") {
        auto A = alg("e3_1");
        Rep M = x_over_y(A);
        ProjCover pc = projective_cover(M);
        CHECK(pc.P.dims == proj_rep(A, A->vertex_index("x")).dims);
        SubQuot ker = kernel(pc.cover);
        CHECK(is_isomorphic(ker.sub, proj_rep(A, A->vertex_index("z"))).verdict ==
              IsoVerdict::Iso);
    }
}

TEST_CASE("minimal resolutions and projective dimension") {
    SUBCASE("pd(x over y) = 1") {
        auto A = alg("e3_1");
        Resolution r = min_resolution(x_over_y(A), 5);
        REQUIRE(r.pd.has_value());
        CHECK(*r.pd == 1);
    }
    SUBCASE("pd of a projective is 0") {
        auto A = alg("e3_2");
        Resolution r = min_resolution(proj_rep(A, 0), 3);
        REQUIRE(r.pd.has_value());
        CHECK(*r.pd == 0);
    }
    SUBCASE("S_x in the loop-arrow example has unbounded resolution") {
        auto A = alg("e3_2");
        Resolution r = min_resolution(simple_rep(A, A->vertex_index("x")), 4, true);
        CHECK_FALSE(r.pd.has_value());
        CHECK(r.pd_str() == ">=4");
        REQUIRE(r.syzygy_period.has_value());  // syzygies repeat up to iso
    }
    SUBCASE("resolution exactness audit") {
        auto A = alg("e4_1");
        Rep M = simple_rep(A, A->vertex_index("y"));
        Resolution r = min_resolution(M, 3);
        // augmentation surjective, kernel of each map = image of the next
        CHECK(is_surjective_morphism(r.augmentation));
        Layers l0 = layers(r.terms[0]);
        for (size_t i = 0; i < r.diffs.size(); ++i) {
            const Morphism& d = r.diffs[i];
            SubQuot im = image(d);
            SubQuot ker = i == 0 ? kernel(r.augmentation) : kernel(r.diffs[i - 1]);
            CHECK(im.sub.dims == ker.sub.dims);
            // minimality: image of the differential sits inside rad
            Layers lt = layers(r.terms[i]);
            for (int v = 0; v < (int)im.sub.dims.size(); ++v) {
                Subspace imv = Subspace::span_of_rows(d.comps[v].transpose());
                Subspace radv = Subspace::span_of_rows(
                    lt.radical.incl.comps[v].transpose());
                CHECK(radv.contains(imv));
            }
        }
        (void)l0;
    }
}

TEST_CASE("ext groups") {
    SUBCASE("ext_dim(0) is the hom dimension") {
        auto A = alg("e3_2");
        Rep Px = proj_rep(A, 0), Ix = injective_rep(A, 0);
        CHECK(ext_dim(0, Px, Ix) == hom_dim(Px, Ix));
    }
    SUBCASE("standard-module ext in the loop-arrow example") {
        auto A = alg("e3_2");
        int x = A->vertex_index("x"), y = A->vertex_index("y");
        // Delta_x = P_x / (submodule generated at y), supported (x:2)
        Rep Px = proj_rep(A, x);
        Matrix gen(A->field(), Px.total_dim(), 1);
        gen.at(Px.offset(y), 0) = Scalar::one(A->field());
        Rep Dx = carve_generated(Px, {gen}).quot;
        Rep Dy = simple_rep(A, y);
        // Delta_y is projective, so Ext^1 out of it vanishes; the nonzero
        // extension goes the other way (oracle: 0 -> S_y -> P_x -> Delta_x -> 0)
        CHECK(ext_dim(1, Dy, Dx) == 0);
        CHECK(ext_dim(1, Dx, Dy) == 1);
    }
    SUBCASE("Ext^1(S_x, S_x) counts the loop") {
        auto A = alg("e3_2");
        int x = A->vertex_index("x");
        CHECK(ext_dim(1, simple_rep(A, x), simple_rep(A, x)) == 1);
    }
    SUBCASE("ext vanishes against projective targets in hereditary range") {
        auto A = alg("e3_1");
        CHECK(ext_dim(1, proj_rep(A, 0), proj_rep(A, 1)) == 0);
    }
}

TEST_CASE("duality") {
    SUBCASE("dual of a simple is the simple of the opposite algebra") {
        auto A = alg("e4_1");
        Rep D = dual_rep(simple_rep(A, 1));
        CHECK(D.A.get() == A->opposite().get());
        CHECK(D.dims == simple_rep(A->opposite(), 1).dims);
    }
    SUBCASE("duality is an involution on the nose") {
        auto A = alg("e4_2");
        for (int v = 0; v < A->num_vertices(); ++v) {
            Rep M = injective_rep(A, v);
            CHECK(dual_rep(dual_rep(M)) == M);
        }
    }
    SUBCASE("dims are preserved on all bundled examples") {
        for (const char* name : {"e3_1", "e3_2", "e4_1", "e4_2"}) {
            auto A = alg(name);
            for (int v = 0; v < A->num_vertices(); ++v) {
                Rep P = proj_rep(A, v);
                CHECK(dual_rep(P).total_dim() == P.total_dim());
            }
        }
    }
}

TEST_CASE("isomorphism testing") {
    auto A = alg("e3_1");
    SUBCASE("identity certificate") {
        Rep M = proj_rep(A, 0);
        RepIso r = is_isomorphic(M, M);
        CHECK(r.verdict == IsoVerdict::Iso);
        REQUIRE(r.cert.has_value());
        CHECK(morphism_valid(*r.cert));
        CHECK(is_isomorphism_morphism(*r.cert));
    }
    SUBCASE("equal total dims but different supports") {
        Rep Py = proj_rep(A, A->vertex_index("y"));
        Rep Pz = proj_rep(A, A->vertex_index("z"));
        CHECK(Py.total_dim() == Pz.total_dim());
        CHECK(is_isomorphic(Py, Pz).verdict == IsoVerdict::NotIso);
    }
    SUBCASE("a non-obvious certificate: Delta_x vs I_x in the loop-arrow example") {
        auto B = alg("e3_2");
        int x = B->vertex_index("x"), y = B->vertex_index("y");
        Rep Px = proj_rep(B, x);
        Matrix gen(B->field(), Px.total_dim(), 1);
        gen.at(Px.offset(y), 0) = Scalar::one(B->field());
        Rep Dx = carve_generated(Px, {gen}).quot;
        RepIso r = is_isomorphic(Dx, injective_rep(B, x));
        CHECK(r.verdict == IsoVerdict::Iso);
        REQUIRE(r.cert.has_value());
        CHECK(morphism_valid(*r.cert));
    }
    SUBCASE("definitive negative with equal dims everywhere") {
        // S_x + S_x vs the length-2 module Delta_x: same dims (x:2)
        auto B = alg("e3_2");
        int x = B->vertex_index("x"), y = B->vertex_index("y");
        Rep Px = proj_rep(B, x);
        Matrix gen(B->field(), Px.total_dim(), 1);
        gen.at(Px.offset(y), 0) = Scalar::one(B->field());
        Rep Dx = carve_generated(Px, {gen}).quot;
        Rep SS = direct_sum({simple_rep(B, x), simple_rep(B, x)}).sum;
        CHECK(Dx.dims == SS.dims);
        CHECK(is_isomorphic(Dx, SS).verdict == IsoVerdict::NotIso);
    }
}

TEST_CASE("decomposition") {
    SUBCASE("P_x + P_x: one class of multiplicity two") {
        auto A = alg("e3_2");
        Rep M = direct_sum({proj_rep(A, 0), proj_rep(A, 0)}).sum;
        auto parts = decompose(M, 5);
        REQUIRE(parts.size() == 1);
        CHECK(parts[0].multiplicity == 2);
        CHECK(parts[0].indec.dims == proj_rep(A, 0).dims);
    }
    SUBCASE("P_x + I_x: two classes") {
        auto A = alg("e3_2");
        int x = A->vertex_index("x");
        Rep M = direct_sum({proj_rep(A, x), injective_rep(A, x)}).sum;
        auto parts = decompose(M, 5);
        CHECK(parts.size() == 2);
        for (const auto& s : parts) CHECK(s.multiplicity == 1);
    }
    SUBCASE("indecomposability certificates") {
        auto A = alg("e4_1");
        for (int v = 0; v < A->num_vertices(); ++v) {
            CHECK(is_indecomposable(proj_rep(A, v)));
            CHECK(is_indecomposable(injective_rep(A, v)));
        }
        CHECK_FALSE(is_indecomposable(
            direct_sum({simple_rep(A, 0), simple_rep(A, 1)}).sum));
    }
}

TEST_CASE("restriction and induction") {
    auto A = alg("e3_1");
    int x = A->vertex_index("x"), y = A->vertex_index("y");
    int z = A->vertex_index("z"), w = A->vertex_index("w");
    SUBCASE("restriction to the full vertex set preserves everything") {
        auto B = A->full_subcategory({0, 1, 2, 3});
        Rep R = restrict_rep(proj_rep(A, x), B);
        CHECK(R.dims == proj_rep(A, x).dims);
        CHECK(rep_valid(R));
        CHECK(is_isomorphic(R, proj_rep(B, 0)).verdict == IsoVerdict::Iso);
    }
    SUBCASE("restriction of P_x to {y, z, w}") {
        auto B = A->full_subcategory({y, z, w});
        Rep R = restrict_rep(proj_rep(A, x), B);
        CHECK(R.dims == std::vector<int>{1, 1, 1});
        CHECK(rep_valid(R));
    }
    SUBCASE("restriction along an ideal preserves projectives") {
        // {x, y, z} is downward closed, so restriction of P_x stays projective
        auto B = A->full_subcategory({x, y, z});
        Rep R = restrict_rep(proj_rep(A, x), B);
        int bx = B->vertex_index("x");
        CHECK(is_isomorphic(R, proj_rep(B, bx)).verdict == IsoVerdict::Iso);
    }
    SUBCASE("induction of a subcategory projective is the big projective") {
        auto B = A->full_subcategory({x, y, z});
        for (int bv = 0; bv < B->num_vertices(); ++bv) {
            Rep ind = induce(proj_rep(B, bv), A);
            int av = B->parent_vertex_of()[bv];
            CHECK(is_isomorphic(ind, proj_rep(A, av)).verdict == IsoVerdict::Iso);
        }
    }
    SUBCASE("induction of the simple at x along {x, y, z}") {
        auto B = A->full_subcategory({x, y, z});
        int bx = B->vertex_index("x");
        Rep ind = induce(simple_rep(B, bx), A);
        // oracle: cokernel of (A e_y + A e_z -> A e_x) kills everything
        // reachable from x, leaving the simple at x
        CHECK(ind.dims == simple_rep(A, x).dims);
    }
    SUBCASE("restrict-induce round trip on seeded modules over F_3") {
        Presentation p = with_field(bundled::load("e3_1"), FieldSpec::prime(3));
        auto A3 = Algebra::build(p);
        auto B = A3->full_subcategory({x, y, z});
        for (uint64_t seed = 1; seed <= 5; ++seed) {
            Rep W = random_module(B, seed, 6);
            Rep back = restrict_rep(induce(W, A3), B);
            CHECK(is_isomorphic(W, back, seed).verdict == IsoVerdict::Iso);
        }
    }
    SUBCASE("adjunction dims on seeded instances over F_3") {
        Presentation p = with_field(bundled::load("e3_1"), FieldSpec::prime(3));
        auto A3 = Algebra::build(p);
        auto B = A3->full_subcategory({x, y, z});
        for (uint64_t seed = 11; seed <= 15; ++seed) {
            Rep W = random_module(B, seed, 6);
            Rep V = random_module(A3, seed + 100, 8);
            CHECK(hom_dim(induce(W, A3), V) == hom_dim(W, restrict_rep(V, B)));
        }
    }
}

TEST_CASE("Eckmann-Shapiro instance on the co-ideal {y, z, w}") {
    auto A = alg("e3_1");
    int y = A->vertex_index("y"), z = A->vertex_index("z"), w = A->vertex_index("w");
    auto B = A->full_subcategory({y, z, w});
    // modules over A supported inside B
    std::vector<Rep> vs = {simple_rep(A, y), simple_rep(A, w), proj_rep(A, y),
                           proj_rep(A, z)};
    for (const Rep& V : vs)
        for (const Rep& V2 : vs) {
            for (int i = 0; i <= 2; ++i) {
                int over_A = ext_dim(i, V, V2, 8);
                int over_B = ext_dim(i, restrict_rep(V, B), restrict_rep(V2, B), 8);
                CHECK_MESSAGE(over_A == over_B, "degree ", i);
            }
        }
}

TEST_CASE("injective envelopes and the stable category") {
    auto A = alg("e3_1");
    int w = A->vertex_index("w");
    SUBCASE("zero morphisms factor through injectives") {
        Rep S = simple_rep(A, w);
        CHECK(factors_through_injective(zero_morphism(S, S)));
    }
    SUBCASE("the identity of a non-injective module does not factor") {
        Rep S = simple_rep(A, w);
        InjEnvelope env = injective_envelope(S);
        CHECK(env.E.total_dim() > S.total_dim());  // S_w is not injective
        CHECK_FALSE(factors_through_injective(identity_morphism(S)));
    }
    SUBCASE("identity of an injective factors trivially") {
        Rep I = injective_rep(A, w);
        CHECK(factors_through_injective(identity_morphism(I)));
        CHECK(stable_hom_dim(I, I) < hom_dim(I, I) + 1);  // well-defined
        CHECK(stable_hom_dim(I, I) == 0);
    }
}

TEST_CASE("seeded extension construction") {
    auto A = alg("e3_1");
    Rep X = simple_rep(A, A->vertex_index("x"));
    Rep Y = simple_rep(A, A->vertex_index("y"));
    Rep E1 = random_extension(X, Y, 7);
    Rep E2 = random_extension(X, Y, 7);
    CHECK(E1 == E2);  // deterministic in the seed
    CHECK(E1.total_dim() == 2);
    CHECK(rep_valid(E1));
    // Ext^1(S_x, S_y) = 1 (the arrow a), so some seed yields a non-split middle
    bool found_nonsplit = false;
    for (uint64_t s = 1; s <= 8 && !found_nonsplit; ++s) {
        Rep E = random_extension(X, Y, s);
        if (is_indecomposable(E)) found_nonsplit = true;
    }
    CHECK(found_nonsplit);
}

TEST_CASE("seeded random modules are valid and reproducible") {
    auto A = Algebra::build(with_field(bundled::load("e3_2"), FieldSpec::prime(3)));
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        Rep M = random_module(A, seed, 8);
        CHECK(M.total_dim() >= 1);
        CHECK(M.total_dim() <= 8);
        CHECK(rep_valid(M));
        CHECK(random_module(A, seed, 8) == M);
    }
}
