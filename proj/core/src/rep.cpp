#include "quiva/rep.hpp"

namespace quiva {

int Rep::total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
}

int Rep::offset(int v) const {
    int t = 0;
    for (int u = 0; u < v; ++u) t += dims[u];
    return t;
}

Rep Rep::zero(const AlgebraPtr& A) {
    Rep m;
    m.A = A;
    m.dims.assign(A->num_vertices(), 0);
    for (const auto& g : A->generators())
        m.gen_maps.push_back(Matrix(A->field(), 0, 0));
    return m;
}

std::vector<int> Rep::support() const {
    std::vector<int> s;
    for (int v = 0; v < (int)dims.size(); ++v)
        if (dims[v] > 0) s.push_back(v);
    return s;
}

bool operator==(const Rep& a, const Rep& b) {
    return a.A.get() == b.A.get() && a.dims == b.dims && a.gen_maps == b.gen_maps;
}

bool rep_valid(const Rep& M) {
    const Algebra& A = *M.A;
    if ((int)M.dims.size() != A.num_vertices()) return false;
    if (M.gen_maps.size() != A.generators().size()) return false;
    for (size_t g = 0; g < M.gen_maps.size(); ++g) {
        const auto& gen = A.generators()[g];
        if (M.gen_maps[g].rows() != M.dims[gen.tgt] ||
            M.gen_maps[g].cols() != M.dims[gen.src])
            return false;
    }
    // declared relations evaluate to zero
    for (const auto& rel : A.relations()) {
        if (rel.terms.empty()) continue;
        int src = -1, tgt = -1;
        Matrix acc;
        bool first = true;
        for (const auto& t : rel.terms) {
            Matrix prod;
            bool started = false;
            int s = -1, e = -1;
            for (auto it = t.gens.rbegin(); it != t.gens.rend(); ++it) {
                const Matrix& m = M.gen_maps[*it];
                if (!started) {
                    prod = m;
                    started = true;
                    s = A.generators()[*it].src;
                } else {
                    prod = M.gen_maps[*it] * prod;
                }
                e = A.generators()[*it].tgt;
            }
            prod = prod * t.coeff;
            if (first) {
                acc = prod;
                src = s;
                tgt = e;
                first = false;
            } else {
                if (s != src || e != tgt) return false;
                acc = acc + prod;
            }
        }
        if (!acc.is_zero()) return false;
    }
    // table consistency: action(b_i) . action(b_j) == action(b_i b_j)
    int n = A.dim();
    std::vector<Matrix> acts(n);
    for (int i = 0; i < n; ++i) acts[i] = word_action(M, i);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& bi = A.basis()[i];
            const auto& bj = A.basis()[j];
            if (bi.src != bj.tgt) continue;
            Matrix lhs = acts[i] * acts[j];
            Matrix rhs(M.field(), M.dims[bi.tgt], M.dims[bj.src]);
            for (const auto& [k, c] : A.mult(i, j)) rhs = rhs + acts[k] * c;
            if (!(lhs == rhs)) return false;
        }
    return true;
}

Rep proj_rep(const AlgebraPtr& A, int v) {
    if (v < 0 || v >= A->num_vertices()) throw Error("unknown vertex");
    Rep P;
    P.A = A;
    P.dims.assign(A->num_vertices(), 0);
    for (int w = 0; w < A->num_vertices(); ++w) P.dims[w] = (int)A->block(v, w).size();
    for (size_t g = 0; g < A->generators().size(); ++g) {
        const auto& gen = A->generators()[g];
        const auto& src_ids = A->block(v, gen.src);
        const auto& tgt_ids = A->block(v, gen.tgt);
        std::vector<int> pos(A->dim(), -1);
        for (int i = 0; i < (int)tgt_ids.size(); ++i) pos[tgt_ids[i]] = i;
        Matrix m(A->field(), (int)tgt_ids.size(), (int)src_ids.size());
        for (int j = 0; j < (int)src_ids.size(); ++j)
            for (const auto& [k, c] : A->mult(gen.basis_index, src_ids[j])) {
                if (pos[k] < 0) throw Error("internal: projective action escapes block");
                m.at(pos[k], j) = c;
            }
        P.gen_maps.push_back(std::move(m));
    }
    return P;
}

Rep simple_rep(const AlgebraPtr& A, int v) {
    if (v < 0 || v >= A->num_vertices()) throw Error("unknown vertex");
    Rep S;
    S.A = A;
    S.dims.assign(A->num_vertices(), 0);
    S.dims[v] = 1;
    for (const auto& gen : A->generators())
        S.gen_maps.push_back(Matrix(A->field(), S.dims[gen.tgt], S.dims[gen.src]));
    return S;
}

Rep injective_rep(const AlgebraPtr& A, int v) {
    return dual_rep(proj_rep(A->opposite(), v));
}

Matrix word_action(const Rep& M, int basis_index) {
    const Algebra& A = *M.A;
    const auto& b = A.basis()[basis_index];
    Matrix acc(M.field(), M.dims[b.tgt], M.dims[b.src]);
    for (const auto& term : A.gen_expression(basis_index)) {
        if (term.gens.empty()) {
            // idempotent: identity on the vertex component
            acc = acc + Matrix::identity(M.field(), M.dims[b.src]) * term.coeff;
            continue;
        }
        Matrix prod;
        bool started = false;
        for (auto it = term.gens.rbegin(); it != term.gens.rend(); ++it) {
            if (!started) {
                prod = M.gen_maps[*it];
                started = true;
            } else {
                prod = M.gen_maps[*it] * prod;
            }
        }
        acc = acc + prod * term.coeff;
    }
    return acc;
}

Matrix element_action(const Rep& M, const Matrix& coords, int src, int tgt) {
    if (coords.rows() != M.A->dim() || coords.cols() != 1)
        throw Error("element_action expects a full coordinate column");
    Matrix acc(M.field(), M.dims[tgt], M.dims[src]);
    for (int i = 0; i < M.A->dim(); ++i) {
        if (coords.at(i, 0).is_zero()) continue;
        const auto& b = M.A->basis()[i];
        if (b.src != src || b.tgt != tgt)
            throw Error("element_action: coordinate outside the block");
        acc = acc + word_action(M, i) * coords.at(i, 0);
    }
    return acc;
}

bool Morphism::is_zero() const {
    for (const auto& m : comps)
        if (!m.is_zero()) return false;
    return true;
}

bool operator==(const Morphism& a, const Morphism& b) {
    return a.source == b.source && a.target == b.target && a.comps == b.comps;
}

Morphism zero_morphism(const Rep& M, const Rep& N) {
    Morphism f{M, N, {}};
    for (int v = 0; v < (int)M.dims.size(); ++v)
        f.comps.push_back(Matrix(M.field(), N.dims[v], M.dims[v]));
    return f;
}

Morphism identity_morphism(const Rep& M) {
    Morphism f{M, M, {}};
    for (int v = 0; v < (int)M.dims.size(); ++v)
        f.comps.push_back(Matrix::identity(M.field(), M.dims[v]));
    return f;
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (!(f.target == g.source)) throw Error("composition target/source mismatch");
    Morphism h{f.source, g.target, {}};
    for (size_t v = 0; v < f.comps.size(); ++v) h.comps.push_back(g.comps[v] * f.comps[v]);
    return h;
}

Morphism mor_add(const Morphism& f, const Morphism& g) {
    Morphism h{f.source, f.target, {}};
    for (size_t v = 0; v < f.comps.size(); ++v) h.comps.push_back(f.comps[v] + g.comps[v]);
    return h;
}

Morphism mor_scale(const Morphism& f, const Scalar& c) {
    Morphism h{f.source, f.target, {}};
    for (const auto& m : f.comps) h.comps.push_back(m * c);
    return h;
}

bool morphism_valid(const Morphism& f) {
    const Algebra& A = *f.source.A;
    if (f.target.A.get() != &A) return false;
    for (size_t g = 0; g < A.generators().size(); ++g) {
        const auto& gen = A.generators()[g];
        Matrix lhs = f.comps[gen.tgt] * f.source.gen_maps[g];
        Matrix rhs = f.target.gen_maps[g] * f.comps[gen.src];
        if (!(lhs == rhs)) return false;
    }
    return true;
}

bool is_injective_morphism(const Morphism& f) {
    for (const auto& m : f.comps)
        if (rank(m) != m.cols()) return false;
    return true;
}

bool is_surjective_morphism(const Morphism& f) {
    for (const auto& m : f.comps)
        if (rank(m) != m.rows()) return false;
    return true;
}

bool is_isomorphism_morphism(const Morphism& f) {
    for (const auto& m : f.comps)
        if (m.rows() != m.cols() || rank(m) != m.rows()) return false;
    return true;
}

std::vector<Morphism> hom_space(const Rep& M, const Rep& N) {
    if (M.A.get() != N.A.get()) throw Error("hom_space: modules over different algebras");
    const Algebra& A = *M.A;
    const FieldSpec& f = A.field();
    int nv = A.num_vertices();
    std::vector<int> off(nv + 1, 0);
    for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + N.dims[v] * M.dims[v];
    int unknowns = off[nv];

    int rows = 0;
    for (const auto& gen : A.generators()) rows += N.dims[gen.tgt] * M.dims[gen.src];
    Matrix sys(f, rows, unknowns);
    int row = 0;
    for (size_t g = 0; g < A.generators().size(); ++g) {
        const auto& gen = A.generators()[g];
        int s = gen.src, t = gen.tgt;
        // f_t * M_g - N_g * f_s = 0; unknown f_v entry (i,j) has index
        // off[v] + i * M.dims[v] + j
        for (int i = 0; i < N.dims[t]; ++i)
            for (int j = 0; j < M.dims[s]; ++j) {
                for (int k = 0; k < M.dims[t]; ++k)
                    sys.at(row, off[t] + i * M.dims[t] + k) += M.gen_maps[g].at(k, j);
                for (int k = 0; k < N.dims[s]; ++k)
                    sys.at(row, off[s] + k * M.dims[s] + j) -= N.gen_maps[g].at(i, k);
                ++row;
            }
    }
    Subspace ker = kernel_space(sys);
    std::vector<Morphism> basis;
    for (int r = 0; r < ker.dim(); ++r) {
        Morphism mor = zero_morphism(M, N);
        for (int v = 0; v < nv; ++v)
            for (int i = 0; i < N.dims[v]; ++i)
                for (int j = 0; j < M.dims[v]; ++j)
                    mor.comps[v].at(i, j) = ker.basis().at(r, off[v] + i * M.dims[v] + j);
        basis.push_back(std::move(mor));
    }
    return basis;
}

int hom_dim(const Rep& M, const Rep& N) { return (int)hom_space(M, N).size(); }

DirectSum direct_sum(const std::vector<Rep>& parts) {
    if (parts.empty()) throw Error("direct_sum of nothing (pass the zero module instead)");
    const AlgebraPtr& A = parts[0].A;
    DirectSum out;
    out.sum.A = A;
    out.sum.dims.assign(A->num_vertices(), 0);
    for (const auto& p : parts) {
        if (p.A.get() != A.get()) throw Error("direct_sum over different algebras");
        for (int v = 0; v < A->num_vertices(); ++v) out.sum.dims[v] += p.dims[v];
    }
    for (size_t g = 0; g < A->generators().size(); ++g) {
        const auto& gen = A->generators()[g];
        Matrix m(A->field(), out.sum.dims[gen.tgt], out.sum.dims[gen.src]);
        int ro = 0, co = 0;
        for (const auto& p : parts) {
            for (int i = 0; i < p.dims[gen.tgt]; ++i)
                for (int j = 0; j < p.dims[gen.src]; ++j)
                    m.at(ro + i, co + j) = p.gen_maps[g].at(i, j);
            ro += p.dims[gen.tgt];
            co += p.dims[gen.src];
        }
        out.sum.gen_maps.push_back(std::move(m));
    }
    std::vector<int> at(A->num_vertices(), 0);
    for (const auto& p : parts) {
        Morphism in = zero_morphism(p, out.sum);
        Morphism pr = zero_morphism(out.sum, p);
        for (int v = 0; v < A->num_vertices(); ++v)
            for (int i = 0; i < p.dims[v]; ++i) {
                in.comps[v].at(at[v] + i, i) = Scalar::one(A->field());
                pr.comps[v].at(i, at[v] + i) = Scalar::one(A->field());
            }
        for (int v = 0; v < A->num_vertices(); ++v) at[v] += p.dims[v];
        out.incl.push_back(std::move(in));
        out.proj.push_back(std::move(pr));
    }
    return out;
}

SubQuot subquot_from_subspaces(const Rep& M, const std::vector<Subspace>& spaces) {
    const AlgebraPtr& A = M.A;
    const FieldSpec& f = M.field();
    int nv = A->num_vertices();
    SubQuot out;
    out.sub.A = A;
    out.quot.A = A;
    out.sub.dims.resize(nv);
    out.quot.dims.resize(nv);

    // per-vertex: inclusion columns, projection rows, and a lift of the
    // quotient basis (complementary standard vectors)
    std::vector<Matrix> incl(nv), proj(nv), lift(nv);
    for (int v = 0; v < nv; ++v) {
        const Subspace& U = spaces[v];
        if (U.ambient_dim() != M.dims[v]) throw Error("subspace/ambient mismatch");
        int d = U.dim(), n = M.dims[v];
        out.sub.dims[v] = d;
        out.quot.dims[v] = n - d;
        incl[v] = U.basis().transpose();  // n x d
        // complement: standard vectors outside the span
        Matrix full = U.basis();
        std::vector<int> extra;
        Subspace span = U;
        for (int i = 0; i < n && (int)extra.size() < n - d; ++i) {
            Matrix e(f, 1, n);
            e.at(0, i) = Scalar::one(f);
            if (span.contains_vector(e)) continue;
            extra.push_back(i);
            full = full.vstack(e);
            span = span.sum(Subspace::span_of_rows(e));
        }
        Matrix inv = *inverse(full.transpose());  // coordinates in [U; complement]
        proj[v] = inv.submatrix(d, 0, n - d, n);
        lift[v] = Matrix(f, n, n - d);
        for (int k = 0; k < n - d; ++k) lift[v].at(extra[k], k) = Scalar::one(f);
    }

    for (size_t g = 0; g < A->generators().size(); ++g) {
        const auto& gen = A->generators()[g];
        int s = gen.src, t = gen.tgt;
        // sub action: express images of sub basis vectors in the sub basis
        Matrix img = M.gen_maps[g] * incl[s];
        auto sol = solve(incl[t], img);
        if (!sol) throw Error("subspaces not closed under the action");
        out.sub.gen_maps.push_back(*sol);
        out.quot.gen_maps.push_back(proj[t] * M.gen_maps[g] * lift[s]);
    }

    out.incl = Morphism{out.sub, M, incl};
    out.proj = Morphism{M, out.quot, proj};
    return out;
}

SubQuot carve_generated(const Rep& M, const std::vector<Matrix>& stacked_vectors) {
    const FieldSpec& f = M.field();
    int nv = (int)M.dims.size();
    std::vector<Subspace> spaces;
    for (int v = 0; v < nv; ++v) spaces.emplace_back(f, M.dims[v]);
    // seed with the vertex components of the given vectors
    int total = M.total_dim();
    for (const auto& vec : stacked_vectors) {
        if (vec.rows() != total || vec.cols() != 1)
            throw Error("generator vector outside the module's spaces");
        for (int v = 0; v < nv; ++v) {
            Matrix comp(f, 1, M.dims[v]);
            for (int i = 0; i < M.dims[v]; ++i) comp.at(0, i) = vec.at(M.offset(v) + i, 0);
            spaces[v] = spaces[v].sum(Subspace::span_of_rows(comp));
        }
    }
    // close under the generator actions
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t g = 0; g < M.gen_maps.size(); ++g) {
            const auto& gen = M.A->generators()[g];
            Matrix img = (M.gen_maps[g] * spaces[gen.src].basis().transpose()).transpose();
            Subspace bigger = spaces[gen.tgt].sum(Subspace::span_of_rows(img));
            if (bigger.dim() != spaces[gen.tgt].dim()) {
                spaces[gen.tgt] = bigger;
                changed = true;
            }
        }
    }
    return subquot_from_subspaces(M, spaces);
}

SubQuot trace_submodule(const Rep& P, const Rep& M) {
    const FieldSpec& f = M.field();
    std::vector<Subspace> spaces;
    for (int v = 0; v < (int)M.dims.size(); ++v) spaces.emplace_back(f, M.dims[v]);
    for (const Morphism& mor : hom_space(P, M))
        for (int v = 0; v < (int)M.dims.size(); ++v)
            spaces[v] = spaces[v].sum(Subspace::span_of_rows(mor.comps[v].transpose()));
    return subquot_from_subspaces(M, spaces);
}

Layers layers(const Rep& M) {
    const FieldSpec& f = M.field();
    int nv = (int)M.dims.size();
    Layers out;
    // rad M = sum of generator images (the generators span rad A mod rad^2,
    // and J M = sum over all positive words = closure of generator images)
    {
        std::vector<Subspace> spaces;
        for (int v = 0; v < nv; ++v) spaces.emplace_back(f, M.dims[v]);
        for (size_t g = 0; g < M.gen_maps.size(); ++g) {
            const auto& gen = M.A->generators()[g];
            spaces[gen.tgt] = spaces[gen.tgt].sum(
                Subspace::span_of_rows(M.gen_maps[g].transpose()));
        }
        // images of radical words of length >= 2 land inside generator
        // images already; closure keeps the audit in subquot honest
        out.radical = subquot_from_subspaces(M, spaces);
    }
    // soc M = annihilator of the radical: intersection of generator kernels
    {
        std::vector<Subspace> spaces;
        for (int v = 0; v < nv; ++v) {
            spaces.emplace_back(f, M.dims[v]);
            spaces[v] = Subspace::span_of_rows(Matrix::identity(f, M.dims[v]));
        }
        for (size_t g = 0; g < M.gen_maps.size(); ++g) {
            const auto& gen = M.A->generators()[g];
            spaces[gen.src] = spaces[gen.src].intersection(kernel_space(M.gen_maps[g]));
        }
        out.socle = subquot_from_subspaces(M, spaces);
    }
    // verify semisimplicity: every generator acts by zero on top and socle
    for (const Matrix& m : out.radical.quot.gen_maps)
        if (!m.is_zero()) throw Error("internal: top is not semisimple");
    for (const Matrix& m : out.socle.sub.gen_maps)
        if (!m.is_zero()) throw Error("internal: socle is not semisimple");
    return out;
}

SubQuot kernel(const Morphism& fm) {
    std::vector<Subspace> spaces;
    for (size_t v = 0; v < fm.comps.size(); ++v) spaces.push_back(kernel_space(fm.comps[v]));
    return subquot_from_subspaces(fm.source, spaces);
}

SubQuot image(const Morphism& fm) {
    std::vector<Subspace> spaces;
    for (size_t v = 0; v < fm.comps.size(); ++v)
        spaces.push_back(Subspace::span_of_rows(fm.comps[v].transpose()));
    return subquot_from_subspaces(fm.target, spaces);
}

Rep dual_rep(const Rep& M) {
    Rep D;
    D.A = M.A->opposite();
    D.dims = M.dims;
    for (const auto& m : M.gen_maps) D.gen_maps.push_back(m.transpose());
    return D;
}

Morphism dual_morphism(const Morphism& f) {
    Morphism d{dual_rep(f.target), dual_rep(f.source), {}};
    for (const auto& m : f.comps) d.comps.push_back(m.transpose());
    return d;
}

Rep restrict_rep(const Rep& M, const AlgebraPtr& B) {
    if (B->parent() != M.A.get())
        throw Error("restrict_rep: B is not a full subcategory of the module's algebra");
    Rep R;
    R.A = B;
    for (int v = 0; v < B->num_vertices(); ++v)
        R.dims.push_back(M.dims[B->parent_vertex_of()[v]]);
    for (const auto& gen : B->generators()) {
        int parent_idx = B->parent_basis_of()[gen.basis_index];
        R.gen_maps.push_back(word_action(M, parent_idx));
    }
    return R;
}

RepIso is_isomorphic(const Rep& M, const Rep& N, uint64_t seed) {
    if (M.A.get() != N.A.get()) throw Error("is_isomorphic: different algebras");
    RepIso out;
    if (M.dims != N.dims) {
        out.verdict = IsoVerdict::NotIso;
        return out;
    }
    std::vector<std::vector<Matrix>> hom12, hom21;
    for (const auto& f : hom_space(M, N)) hom12.push_back(f.comps);
    for (const auto& f : hom_space(N, M)) hom21.push_back(f.comps);
    IsoResult r = block_iso_search(M.field(), M.dims, N.dims, hom12, hom21, seed);
    out.verdict = r.verdict;
    if (r.verdict == IsoVerdict::Iso) out.cert = Morphism{M, N, r.cert};
    return out;
}

}  // namespace quiva
