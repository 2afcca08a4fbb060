#include "quiva/homology.hpp"

#include <random>

namespace quiva {

ProjCover projective_cover(const Rep& M) {
    const AlgebraPtr& A = M.A;
    const FieldSpec& f = M.field();
    ProjCover out;
    if (M.is_zero()) {
        out.P = Rep::zero(A);
        out.cover = zero_morphism(out.P, M);
        return out;
    }
    Layers lay = layers(M);
    const Morphism& top_proj = lay.radical.proj;

    // lifts: standard vectors of M(v) whose top classes form a basis
    std::vector<Rep> parts;
    std::vector<Matrix> lifts;  // column in M(v)
    for (int v = 0; v < A->num_vertices(); ++v) {
        int m_v = lay.radical.quot.dims[v];
        if (m_v == 0) continue;
        Subspace seen(f, m_v);
        for (int i = 0; i < M.dims[v] && seen.dim() < m_v; ++i) {
            Matrix e(f, M.dims[v], 1);
            e.at(i, 0) = Scalar::one(f);
            Matrix cls = (top_proj.comps[v] * e).transpose();
            if (seen.contains_vector(cls)) continue;
            seen = seen.sum(Subspace::span_of_rows(cls));
            parts.push_back(proj_rep(A, v));
            out.copies.push_back(v);
            lifts.push_back(e);
        }
        if (seen.dim() != m_v) throw Error("internal: top lift failed");
    }
    if (parts.empty()) {
        out.P = Rep::zero(A);
        out.cover = zero_morphism(out.P, M);
        return out;
    }
    DirectSum ds = direct_sum(parts);
    out.P = ds.sum;
    // cover on copy (v, u): basis word p of P_v(t) maps to p . u
    Morphism cover = zero_morphism(out.P, M);
    for (size_t c = 0; c < parts.size(); ++c) {
        int v = out.copies[c];
        Morphism comp = zero_morphism(parts[c], M);
        for (int t = 0; t < A->num_vertices(); ++t) {
            const auto& ids = A->block(v, t);
            for (int j = 0; j < (int)ids.size(); ++j) {
                Matrix col = word_action(M, ids[j]) * lifts[c];
                for (int i = 0; i < M.dims[t]; ++i) comp.comps[t].at(i, j) = col.at(i, 0);
            }
        }
        cover = mor_add(cover, compose(comp, ds.proj[c]));
    }
    out.cover = cover;
    if (!is_surjective_morphism(out.cover)) throw Error("internal: cover not surjective");
    // minimality: kernel inside rad P
    {
        SubQuot ker = kernel(out.cover);
        Layers pl = layers(out.P);
        for (int v = 0; v < A->num_vertices(); ++v) {
            Subspace kv = Subspace::span_of_rows(ker.incl.comps[v].transpose());
            Subspace rv = Subspace::span_of_rows(pl.radical.incl.comps[v].transpose());
            if (!rv.contains(kv)) throw Error("internal: cover kernel not in rad P");
        }
    }
    return out;
}

std::string Resolution::pd_str() const {
    if (pd) return std::to_string(*pd);
    return ">=" + std::to_string(cap);
}

Resolution min_resolution(const Rep& M, int cap, bool detect_period, uint64_t seed) {
    if (cap < 0) throw Error("resolution cap must be nonnegative");
    Resolution res;
    res.cap = cap;
    ProjCover c0 = projective_cover(M);
    res.terms.push_back(c0.P);
    res.copies.push_back(c0.copies);
    res.augmentation = c0.cover;

    std::vector<Rep> syzygies;
    Morphism cur_cover = c0.cover;
    for (int step = 0;; ++step) {
        SubQuot ker = kernel(cur_cover);
        if (ker.sub.is_zero()) {
            res.pd = step;
            break;
        }
        if (step == cap) break;
        syzygies.push_back(ker.sub);
        ProjCover cn = projective_cover(ker.sub);
        res.terms.push_back(cn.P);
        res.copies.push_back(cn.copies);
        res.diffs.push_back(compose(ker.incl, cn.cover));
        cur_cover = cn.cover;
    }
    if (!res.pd && detect_period) {
        for (size_t i = 0; i < syzygies.size() && !res.syzygy_period; ++i)
            for (size_t j = i + 1; j < syzygies.size() && !res.syzygy_period; ++j)
                if (is_isomorphic(syzygies[i], syzygies[j], seed).verdict == IsoVerdict::Iso)
                    res.syzygy_period = {{(int)i + 1, (int)j + 1}};
    }
    return res;
}

std::vector<std::vector<Matrix>> projective_map_components(
    const Morphism& d, const std::vector<int>& from_copies,
    const std::vector<int>& to_copies) {
    const AlgebraPtr& A = d.source.A;
    const FieldSpec& f = A->field();
    // offsets of copies within each vertex space of source and target
    auto offsets = [&](const Rep& R, const std::vector<int>& copies) {
        std::vector<std::vector<int>> off(copies.size(), std::vector<int>(R.dims.size(), 0));
        std::vector<int> at(R.dims.size(), 0);
        for (size_t c = 0; c < copies.size(); ++c) {
            for (int v = 0; v < (int)R.dims.size(); ++v) off[c][v] = at[v];
            for (int v = 0; v < (int)R.dims.size(); ++v)
                at[v] += (int)A->block(copies[c], v).size();
        }
        return off;
    };
    auto src_off = offsets(d.source, from_copies);
    auto tgt_off = offsets(d.target, to_copies);

    std::vector<std::vector<Matrix>> out(
        to_copies.size(), std::vector<Matrix>(from_copies.size(), Matrix(f, A->dim(), 1)));
    for (size_t j = 0; j < from_copies.size(); ++j) {
        int w = from_copies[j];
        // generator of copy j: the idempotent e_w inside block(w, w)
        const auto& wblock = A->block(w, w);
        int e_pos = -1;
        for (int k = 0; k < (int)wblock.size(); ++k)
            if (wblock[k] == A->idempotent_index(w)) e_pos = k;
        if (e_pos < 0) throw Error("internal: idempotent missing from its block");
        int col = src_off[j][w] + e_pos;
        for (size_t c = 0; c < to_copies.size(); ++c) {
            int v = to_copies[c];
            const auto& ids = A->block(v, w);
            Matrix elem(f, A->dim(), 1);
            for (int k = 0; k < (int)ids.size(); ++k)
                elem.at(ids[k], 0) = d.comps[w].at(tgt_off[c][w] + k, col);
            out[c][j] = std::move(elem);
        }
    }
    return out;
}

Morphism right_mult_morphism(const AlgebraPtr& A, const Matrix& elem, int v, int w) {
    Rep Pw = proj_rep(A, w), Pv = proj_rep(A, v);
    Morphism mor = zero_morphism(Pw, Pv);
    for (int t = 0; t < A->num_vertices(); ++t) {
        const auto& from = A->block(w, t);
        const auto& to = A->block(v, t);
        std::vector<int> pos(A->dim(), -1);
        for (int i = 0; i < (int)to.size(); ++i) pos[to[i]] = i;
        for (int j = 0; j < (int)from.size(); ++j) {
            // p |-> p . elem
            Matrix p(A->field(), A->dim(), 1);
            p.at(from[j], 0) = Scalar::one(A->field());
            Matrix prod = A->multiply(p, elem);
            for (int i = 0; i < A->dim(); ++i) {
                if (prod.at(i, 0).is_zero()) continue;
                if (pos[i] < 0) throw Error("internal: right multiplication escapes block");
                mor.comps[t].at(pos[i], j) = prod.at(i, 0);
            }
        }
    }
    return mor;
}

int ext_dim(int i, const Rep& M, const Rep& N, int cap) {
    if (i < 0) throw Error("ext degree must be nonnegative");
    if (i == 0) return hom_dim(M, N);
    if (cap < 0) cap = i + 1;
    Resolution res = min_resolution(M, std::min(cap, i + 1));
    if (!res.pd && (int)res.terms.size() < i + 2)
        throw Error("resolution too short for Ext^" + std::to_string(i));
    if (res.pd && *res.pd < i) return 0;

    // Hom((+) P_{v_c}, N) has coordinates N(v_c) per copy; precomposition
    // with a differential acts by the block elements of the differential
    auto hom_dim_of = [&](int k) {
        int d = 0;
        if (k >= (int)res.copies.size()) return 0;
        for (int v : res.copies[k]) d += N.dims[v];
        return d;
    };
    auto transfer = [&](int k) {  // Hom(P^k, N) -> Hom(P^{k+1}, N)
        int rows = hom_dim_of(k + 1), cols = hom_dim_of(k);
        Matrix T(N.field(), rows, cols);
        if (k + 1 >= (int)res.terms.size()) return T;
        auto blocks = projective_map_components(res.diffs[k], res.copies[k + 1],
                                                res.copies[k]);
        int row0 = 0;
        for (size_t j = 0; j < res.copies[k + 1].size(); ++j) {
            int w = res.copies[k + 1][j];
            int col0 = 0;
            for (size_t c = 0; c < res.copies[k].size(); ++c) {
                int v = res.copies[k][c];
                // phi(copy c) = x in N(v); (phi o d)(gen_j) += act(elem) x
                Matrix act = element_action(N, blocks[c][j], v, w);
                for (int r = 0; r < N.dims[w]; ++r)
                    for (int s = 0; s < N.dims[v]; ++s) T.at(row0 + r, col0 + s) = act.at(r, s);
                col0 += N.dims[v];
            }
            row0 += N.dims[w];
        }
        return T;
    };

    Matrix Ti = transfer(i);       // C^i -> C^{i+1}
    Matrix Tprev = transfer(i - 1);  // C^{i-1} -> C^i
    int dim_ci = hom_dim_of(i);
    int ker_dim = dim_ci - rank(Ti);
    return ker_dim - rank(Tprev);
}

InjEnvelope injective_envelope(const Rep& M) {
    ProjCover pc = projective_cover(dual_rep(M));
    InjEnvelope out;
    out.E = dual_rep(pc.P);
    Morphism embed{M, out.E, {}};
    for (const auto& m : pc.cover.comps) embed.comps.push_back(m.transpose());
    out.embed = std::move(embed);
    if (!is_injective_morphism(out.embed))
        throw Error("internal: envelope embedding not injective");
    return out;
}

bool factors_through_injective(const Morphism& f) {
    if (f.is_zero()) return true;
    InjEnvelope env = injective_envelope(f.source);
    const Rep& E = env.E;
    const Rep& N = f.target;
    const Rep& M = f.source;
    const FieldSpec& fld = M.field();
    const Algebra& A = *M.A;
    int nv = A.num_vertices();
    // unknowns: entries of h_v (N.dims[v] x E.dims[v])
    std::vector<int> off(nv + 1, 0);
    for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + N.dims[v] * E.dims[v];
    int rows = 0;
    for (const auto& gen : A.generators()) rows += N.dims[gen.tgt] * E.dims[gen.src];
    for (int v = 0; v < nv; ++v) rows += N.dims[v] * M.dims[v];
    Matrix sys(fld, rows, off[nv]);
    Matrix rhs(fld, rows, 1);
    int row = 0;
    for (size_t g = 0; g < A.generators().size(); ++g) {
        const auto& gen = A.generators()[g];
        int s = gen.src, t = gen.tgt;
        for (int i = 0; i < N.dims[t]; ++i)
            for (int j = 0; j < E.dims[s]; ++j) {
                for (int k = 0; k < E.dims[t]; ++k)
                    sys.at(row, off[t] + i * E.dims[t] + k) += E.gen_maps[g].at(k, j);
                for (int k = 0; k < N.dims[s]; ++k)
                    sys.at(row, off[s] + k * E.dims[s] + j) -= N.gen_maps[g].at(i, k);
                ++row;
            }
    }
    for (int v = 0; v < nv; ++v)
        for (int i = 0; i < N.dims[v]; ++i)
            for (int j = 0; j < M.dims[v]; ++j) {
                for (int k = 0; k < E.dims[v]; ++k)
                    sys.at(row, off[v] + i * E.dims[v] + k) += env.embed.comps[v].at(k, j);
                rhs.at(row, 0) = f.comps[v].at(i, j);
                ++row;
            }
    return solve(sys, rhs).has_value();
}

int stable_hom_dim(const Rep& M, const Rep& N) {
    std::vector<Morphism> homs = hom_space(M, N);
    if (homs.empty()) return 0;
    InjEnvelope env = injective_envelope(M);
    std::vector<Morphism> through = hom_space(env.E, N);
    // rank of precomposition Hom(E, N) -> Hom(M, N)
    auto vec = [&](const Morphism& m) {
        Matrix v(M.field(), 1, 0);
        for (const auto& c : m.comps) {
            Matrix flat(M.field(), 1, c.rows() * c.cols());
            for (int i = 0; i < c.rows(); ++i)
                for (int j = 0; j < c.cols(); ++j) flat.at(0, i * c.cols() + j) = c.at(i, j);
            v = v.hstack(flat);
        }
        return v;
    };
    Matrix img(M.field(), 0, vec(zero_morphism(M, N)).cols());
    for (const auto& h : through) img = img.vstack(vec(compose(h, env.embed)));
    return (int)homs.size() - rank(img);
}

Rep induce(const Rep& W, const AlgebraPtr& A) {
    const AlgebraPtr& B = W.A;
    if (B->parent() != A.get()) throw Error("induce: W's algebra is not a full subcategory");
    if (W.is_zero()) return Rep::zero(A);
    ProjCover c0 = projective_cover(W);
    SubQuot k0 = kernel(c0.cover);
    ProjCover c1 = projective_cover(k0.sub);
    Morphism d = compose(k0.incl, compose(c1.cover, identity_morphism(c1.P)));
    auto blocks = projective_map_components(d, c1.copies, c0.copies);

    // transport to A: map child vertices/blocks to parent ones
    const auto& pv = B->parent_vertex_of();
    const auto& pb = B->parent_basis_of();
    std::vector<Rep> tops;
    for (int v : c0.copies) tops.push_back(proj_rep(A, pv[v]));
    if (tops.empty()) return Rep::zero(A);
    DirectSum P0 = direct_sum(tops);
    // assemble D : (+)_j A e_{w_j} -> (+)_c A e_{v_c} componentwise
    std::vector<Rep> bottoms;
    for (int w : c1.copies) bottoms.push_back(proj_rep(A, pv[w]));
    if (bottoms.empty()) return P0.sum;  // W projective: induced module is P0
    DirectSum P1 = direct_sum(bottoms);
    Morphism big = zero_morphism(P1.sum, P0.sum);
    for (size_t c = 0; c < c0.copies.size(); ++c)
        for (size_t j = 0; j < c1.copies.size(); ++j) {
            // lift the block element to parent coordinates
            Matrix elem(A->field(), A->dim(), 1);
            for (int i = 0; i < B->dim(); ++i)
                if (!blocks[c][j].at(i, 0).is_zero()) elem.at(pb[i], 0) = blocks[c][j].at(i, 0);
            Morphism comp = right_mult_morphism(A, elem, pv[c0.copies[c]], pv[c1.copies[j]]);
            big = mor_add(big, compose(P0.incl[c], compose(comp, P1.proj[j])));
        }
    SubQuot coker = image(big);
    return coker.quot;
}

Rep random_module(const AlgebraPtr& A, uint64_t seed, int max_total) {
    std::mt19937_64 rng(seed);
    const FieldSpec& f = A->field();
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Rep> parts;
        for (int v = 0; v < A->num_vertices(); ++v) {
            int copies = (int)(rng() % 3);
            for (int c = 0; c < copies; ++c) parts.push_back(proj_rep(A, v));
        }
        if (parts.empty()) continue;
        DirectSum ds = direct_sum(parts);
        const Rep& R = ds.sum;
        int total = R.total_dim();
        if (total == 0) continue;
        // random submodule generated by a few random vectors
        int count = 1 + (int)(rng() % 3);
        std::vector<Matrix> gens;
        for (int k = 0; k < count; ++k) {
            Matrix vec(f, total, 1);
            for (int i = 0; i < total; ++i) {
                long c = f.is_rational() ? (long)(rng() % 5) - 2
                                         : (long)(rng() % f.characteristic());
                vec.at(i, 0) = Scalar(f, c);
            }
            gens.push_back(std::move(vec));
        }
        SubQuot sq = carve_generated(R, gens);
        Rep cand = (rng() % 2 == 0) ? sq.sub : sq.quot;
        if (cand.total_dim() > 0 && cand.total_dim() <= max_total) return cand;
    }
    // deterministic fallback: a simple module fits any positive bound
    return simple_rep(A, 0);
}

Rep random_extension(const Rep& X, const Rep& Y, uint64_t seed) {
    const AlgebraPtr& A = X.A;
    if (Y.A.get() != A.get()) throw Error("random_extension: different algebras");
    const FieldSpec& f = A->field();
    // unknown connecting blocks c_g : X(src g) -> Y(tgt g); constraint: every
    // relation evaluates to zero on the triangular matrices [[Y, c], [0, X]]
    std::vector<int> off(A->generators().size() + 1, 0);
    for (size_t g = 0; g < A->generators().size(); ++g) {
        const auto& gen = A->generators()[g];
        off[g + 1] = off[g] + Y.dims[gen.tgt] * X.dims[gen.src];
    }
    int unknowns = off.back();
    std::vector<std::vector<Scalar>> rows;
    for (const auto& rel : A->relations()) {
        if (rel.terms.empty()) continue;
        int src = A->generators()[rel.terms[0].gens.back()].src;
        int tgt = A->generators()[rel.terms[0].gens.front()].tgt;
        // coefficient of unknown entry c_g(a, b) in the (i, j) entry of the
        // evaluated relation: sum over terms and positions where g occurs
        std::vector<std::vector<Scalar>> block(
            Y.dims[tgt] * X.dims[src], std::vector<Scalar>(unknowns, Scalar::zero(f)));
        for (const auto& term : rel.terms) {
            int m = (int)term.gens.size();
            for (int pos = 0; pos < m; ++pos) {
                int g = term.gens[pos];
                const auto& gen = A->generators()[g];
                // the unknown block at `pos` sees the Y-product of the labels
                // to its left and the X-product of the labels to its right
                Matrix ypre(f, 0, 0), xsuf(f, 0, 0);
                {
                    Matrix acc = Matrix::identity(f, Y.dims[gen.tgt]);
                    for (int q = pos - 1; q >= 0; --q) acc = Y.gen_maps[term.gens[q]] * acc;
                    ypre = acc;  // Y(tgt g) -> Y(tgt)
                }
                {
                    Matrix acc = Matrix::identity(f, X.dims[gen.src]);
                    for (int q = pos + 1; q < m; ++q) acc = acc * X.gen_maps[term.gens[q]];
                    xsuf = acc;  // X(src) -> X(src g)
                }
                for (int i = 0; i < Y.dims[tgt]; ++i)
                    for (int j = 0; j < X.dims[src]; ++j)
                        for (int a = 0; a < Y.dims[gen.tgt]; ++a)
                            for (int b = 0; b < X.dims[gen.src]; ++b)
                                block[i * X.dims[src] + j]
                                     [off[g] + a * X.dims[gen.src] + b] +=
                                    term.coeff * ypre.at(i, a) * xsuf.at(b, j);
            }
        }
        for (auto& r : block) rows.push_back(std::move(r));
    }
    Matrix sys(f, (int)rows.size(), unknowns);
    for (int i = 0; i < (int)rows.size(); ++i)
        for (int j = 0; j < unknowns; ++j) sys.at(i, j) = rows[i][j];
    Subspace sol = unknowns == 0 ? Subspace(f, 0) : kernel_space(sys);

    std::mt19937_64 rng(seed);
    Matrix coeffs(f, 1, unknowns);
    for (int r = 0; r < sol.dim(); ++r) {
        long c = f.is_rational() ? (long)(rng() % 5) - 2
                                 : (long)(rng() % f.characteristic());
        Matrix row = sol.basis().row(r) * Scalar(f, c);
        coeffs = coeffs + row;
    }

    Rep E;
    E.A = A;
    E.dims.resize(A->num_vertices());
    for (int v = 0; v < A->num_vertices(); ++v) E.dims[v] = Y.dims[v] + X.dims[v];
    for (size_t g = 0; g < A->generators().size(); ++g) {
        const auto& gen = A->generators()[g];
        Matrix m(f, E.dims[gen.tgt], E.dims[gen.src]);
        for (int i = 0; i < Y.dims[gen.tgt]; ++i)
            for (int j = 0; j < Y.dims[gen.src]; ++j) m.at(i, j) = Y.gen_maps[g].at(i, j);
        for (int i = 0; i < X.dims[gen.tgt]; ++i)
            for (int j = 0; j < X.dims[gen.src]; ++j)
                m.at(Y.dims[gen.tgt] + i, Y.dims[gen.src] + j) = X.gen_maps[g].at(i, j);
        for (int a = 0; a < Y.dims[gen.tgt]; ++a)
            for (int b = 0; b < X.dims[gen.src]; ++b)
                m.at(a, Y.dims[gen.src] + b) = coeffs.at(0, off[g] + a * X.dims[gen.src] + b);
        E.gen_maps.push_back(std::move(m));
    }
    if (!rep_valid(E)) throw Error("internal: random extension is not a module");
    return E;
}

}  // namespace quiva
