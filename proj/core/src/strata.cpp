#include "quiva/strata.hpp"

#include <random>

namespace quiva {

namespace {

// trace of P_v in M, as subspaces (sum of images of all morphisms P_v -> M)
SubQuot vertex_trace(const AlgebraPtr& A, int v, const Rep& M) {
    return trace_submodule(proj_rep(A, v), M);
}

std::vector<int> descending(const LinearOrder& order) {
    std::vector<int> asc = order.ascending();
    return {asc.rbegin(), asc.rend()};
}

}  // namespace

Rep standard_rep(const AlgebraPtr& A, const LinearOrder& order, int v, StdVariant variant) {
    if (variant == StdVariant::Costd)
        return dual_rep(standard_rep(A->opposite(), order, v, StdVariant::Std));
    if (variant == StdVariant::ProperCostd)
        return dual_rep(standard_rep(A->opposite(), order, v, StdVariant::Proper));

    Rep Pv = proj_rep(A, v);
    std::vector<Subspace> spaces;
    for (int u = 0; u < A->num_vertices(); ++u)
        spaces.emplace_back(A->field(), Pv.dims[u]);
    for (int w = 0; w < A->num_vertices(); ++w) {
        if (!order.less(v, w)) continue;
        SubQuot tr = vertex_trace(A, w, Pv);
        for (int u = 0; u < A->num_vertices(); ++u)
            spaces[u] = spaces[u].sum(
                Subspace::span_of_rows(tr.incl.comps[u].transpose()));
    }
    SubQuot sq = subquot_from_subspaces(Pv, spaces);
    Rep delta = sq.quot;
    if (variant == StdVariant::Std) return delta;

    // proper standard: kill the trace of P_v inside rad(Delta_v)
    Layers lay = layers(delta);
    std::vector<Subspace> kill;
    for (int u = 0; u < A->num_vertices(); ++u)
        kill.emplace_back(A->field(), delta.dims[u]);
    for (const Morphism& f : hom_space(proj_rep(A, v), lay.radical.sub))
        for (int u = 0; u < A->num_vertices(); ++u) {
            Matrix into_delta = lay.radical.incl.comps[u] * f.comps[u];
            kill[u] = kill[u].sum(Subspace::span_of_rows(into_delta.transpose()));
        }
    return subquot_from_subspaces(delta, kill).quot;
}

FiltrationWitness delta_filtration(const Rep& M, const LinearOrder& order) {
    const AlgebraPtr& A = M.A;
    FiltrationWitness out;
    Rep cur = M;
    for (int v : descending(order)) {
        SubQuot tr = vertex_trace(A, v, cur);
        if (tr.sub.total_dim() == 0) continue;
        Rep delta = standard_rep(A, order, v, StdVariant::Std);
        Layers lay = layers(tr.sub);
        // the trace is generated at v, so its top lives at v
        int m = lay.radical.quot.dims[v];
        if (lay.radical.quot.total_dim() != m)
            throw Error("internal: trace top not concentrated at its vertex");
        if (tr.sub.total_dim() != m * delta.total_dim()) {
            out.failure_vertex = v;
            out.failure_reason = "trace of the projective at " + A->vertex_name(v) +
                                 " is not a power of the standard module";
            return out;
        }
        // explicit surjection Delta_v^m -> U via lifted top generators; it is
        // an isomorphism exactly when the dimensions match (checked above)
        ProjCover pc = projective_cover(tr.sub);
        for (int c : pc.copies)
            if (c != v) throw Error("internal: trace generated off its vertex");
        out.layers.push_back({v, m});
        cur = tr.quot;
    }
    if (cur.total_dim() != 0) throw Error("internal: unprocessed remainder in filtration");
    out.success = true;
    return out;
}

FiltrationWitness proper_filtration(const Rep& M, const LinearOrder& order) {
    const AlgebraPtr& A = M.A;
    const FieldSpec& f = A->field();
    FiltrationWitness out;
    Rep cur = M;
    for (int v : descending(order)) {
        SubQuot tr = vertex_trace(A, v, cur);
        if (tr.sub.total_dim() == 0) continue;
        Rep pdelta = standard_rep(A, order, v, StdVariant::Proper);
        Rep Pv = proj_rep(A, v);
        // kernel of P_v ->> proper Delta_v, used to peel one slice at a time
        SubQuot pd_pres = [&] {
            // recover the kernel from a cover P_v -> pdelta
            ProjCover pc = projective_cover(pdelta);
            if (pc.copies != std::vector<int>{v})
                throw Error("internal: proper standard module not generated at its vertex");
            return kernel(pc.cover);
        }();
        int count = 0;
        Rep U = tr.sub;
        while (U.total_dim() > 0) {
            Layers lay = layers(U);
            int m1 = lay.radical.quot.dims[v];
            if (m1 == 0 || lay.radical.quot.total_dim() != m1) {
                out.failure_vertex = v;
                out.failure_reason = "layer at " + A->vertex_name(v) +
                                     " cannot be peeled into proper standard slices";
                return out;
            }
            ProjCover pc = projective_cover(U);
            // X = image of the proper-standard kernel under each cover copy
            std::vector<Subspace> xs;
            for (int u = 0; u < A->num_vertices(); ++u) xs.emplace_back(f, U.dims[u]);
            DirectSum ds = direct_sum([&] {
                std::vector<Rep> copies(pc.copies.size(), Pv);
                return copies;
            }());
            for (size_t c = 0; c < pc.copies.size(); ++c) {
                if (pc.copies[c] != v) throw Error("internal: trace layer off vertex");
                Morphism one = compose(pc.cover, ds.incl[c]);  // P_v -> U
                for (int u = 0; u < A->num_vertices(); ++u) {
                    Matrix img = one.comps[u] * pd_pres.incl.comps[u];
                    xs[u] = xs[u].sum(Subspace::span_of_rows(img.transpose()));
                }
            }
            SubQuot slice = subquot_from_subspaces(U, xs);
            if (slice.quot.total_dim() != m1 * pdelta.total_dim()) {
                out.failure_vertex = v;
                out.failure_reason = "slice at " + A->vertex_name(v) +
                                     " is not a power of the proper standard module";
                return out;
            }
            count += m1;
            U = slice.sub;
        }
        out.layers.push_back({v, count});
        cur = tr.quot;
    }
    if (cur.total_dim() != 0) throw Error("internal: unprocessed remainder in filtration");
    out.success = true;
    return out;
}

StratReport stratification_report(const AlgebraPtr& A, const LinearOrder& order) {
    StratReport rep;
    rep.order = order;
    rep.order_directed = A->order_is_directed(order);
    rep.standardly = true;
    rep.properly = true;
    for (int v = 0; v < A->num_vertices(); ++v) {
        rep.std_dims.push_back(standard_rep(A, order, v, StdVariant::Std).total_dim());
        rep.proper_dims.push_back(
            standard_rep(A, order, v, StdVariant::Proper).total_dim());
        FiltrationWitness w = delta_filtration(proj_rep(A, v), order);
        rep.standardly = rep.standardly && w.success;
        rep.filtrations.push_back(std::move(w));
        FiltrationWitness pw = proper_filtration(proj_rep(A, v), order);
        rep.properly = rep.properly && pw.success;
        rep.proper_filtrations.push_back(std::move(pw));
    }
    rep.properly = rep.properly && rep.standardly;

    if (rep.order_directed) {
        // Prop-style cross-check: stratified iff every block A(x,y) is a
        // projective (= free) module over the local corner A(y,y)
        std::vector<std::vector<bool>> lp(A->num_vertices(),
                                          std::vector<bool>(A->num_vertices(), true));
        bool all = true;
        for (int x = 0; x < A->num_vertices(); ++x)
            for (int y = 0; y < A->num_vertices(); ++y) {
                lp[x][y] = A->corner(y).alg.free_module_over_local(
                    A->block_as_left_corner_module(x, y));
                all = all && lp[x][y];
            }
        if (all != rep.standardly)
            throw Error("internal: block projectivity disagrees with the filtration verdict");
        rep.local_projectivity = std::move(lp);
    }

    if (rep.standardly) {
        rep.quasi_hereditary = true;
        for (int v = 0; v < A->num_vertices(); ++v) {
            Rep delta = standard_rep(A, order, v, StdVariant::Std);
            if (hom_dim(delta, delta) != 1) rep.quasi_hereditary = false;
        }
        if (rep.quasi_hereditary && !rep.properly)
            throw Error("internal: quasi-hereditary verdict without proper stratification");
    }
    return rep;
}

DirectednessTriple directedness_equivalences(const AlgebraPtr& A, const LinearOrder& order) {
    DirectednessTriple t;
    t.cond1 = true;
    t.cond2 = true;
    for (int v = 0; v < A->num_vertices(); ++v) {
        Rep delta = standard_rep(A, order, v, StdVariant::Std);
        for (int u = 0; u < A->num_vertices(); ++u)
            if (u != v && delta.dims[u] > 0) t.cond1 = false;
        Rep pdelta = standard_rep(A, order, v, StdVariant::Proper);
        if (!(pdelta.dims == simple_rep(A, v).dims)) t.cond2 = false;
    }
    t.cond3 = A->order_is_directed(order);
    if (t.cond1 != t.cond2 || t.cond2 != t.cond3)
        throw Error("internal: directedness equivalences disagree");
    return t;
}

FreenessPdReport value_freeness_pd(const Rep& M, const LinearOrder& order, int pd_cap) {
    const AlgebraPtr& A = M.A;
    if (!A->order_is_directed(order))
        throw Error("hypotheses not met: the order is not a directed order");
    StratReport sr = stratification_report(A, order);
    if (!sr.standardly)
        throw Error("hypotheses not met: not standardly stratified for this order");

    FreenessPdReport out;
    out.pd_cap = pd_cap;
    out.free_values = true;
    for (int v = 0; v < A->num_vertices(); ++v) {
        std::vector<Matrix> act;
        for (int id : A->block(v, v)) act.push_back(word_action(M, id));
        if (!A->corner(v).alg.free_module_over_local(act)) out.free_values = false;
    }
    out.delta_member = delta_filtration(M, order).success;
    out.pd = min_resolution(M, pd_cap).pd;
    if (out.free_values != out.delta_member || out.delta_member != out.pd.has_value())
        throw Error("internal: freeness / filtration / pd verdicts disagree");
    return out;
}

bool hereditary_quotient_check(const AlgebraPtr& A, const LinearOrder& order) {
    StratReport sr = stratification_report(A, order);
    if (!sr.standardly) return false;
    for (int v = 0; v < A->num_vertices(); ++v)
        if (standard_rep(A, order, v).dims != simple_rep(A, v).dims) return false;
    return true;
}

bool CharTiltReport::all_ok() const {
    if (!hypotheses) return false;
    for (bool b : injective_filtered)
        if (!b) return false;
    for (const auto& s : ext_samples)
        if (s.value != 0) return false;
    return true;
}

CharTiltReport characteristic_tilting_check(const AlgebraPtr& A, const LinearOrder& order,
                                            uint64_t seed) {
    if (!A->order_is_directed(order))
        throw Error("hypotheses not met: the order is not a directed order");
    CharTiltReport out;
    out.hypotheses = true;
    for (int v = 0; v < A->num_vertices(); ++v) {
        bool si = A->corner(v).alg.is_self_injective(seed);
        out.self_injective.push_back(si);
        if (!si) out.hypotheses = false;
    }
    auto op = A->opposite();
    for (int y = 0; y < A->num_vertices(); ++y)
        for (int x = 0; x < A->num_vertices(); ++x) {
            // the block of morphisms y -> x as a right module over A(y,y),
            // i.e. a left module over the opposite corner
            bool free = op->corner(y).alg.free_module_over_local(
                op->block_as_left_corner_module(x, y));
            if (!free) {
                out.not_right_free.push_back({y, x});
                out.hypotheses = false;
            }
        }
    if (!out.hypotheses) return out;

    for (int v = 0; v < A->num_vertices(); ++v)
        out.injective_filtered.push_back(
            delta_filtration(injective_rep(A, v), order).success);

    // Ext-injectivity samples over F(Delta): all standards, all projectives,
    // and ten seeded extensions of standard modules
    std::vector<std::pair<std::string, Rep>> samples;
    for (int w = 0; w < A->num_vertices(); ++w) {
        samples.push_back({"Delta_" + A->vertex_name(w),
                           standard_rep(A, order, w, StdVariant::Std)});
        samples.push_back({"P_" + A->vertex_name(w), proj_rep(A, w)});
    }
    std::mt19937_64 rng(seed);
    for (int k = 0; k < 10; ++k) {
        int w1 = (int)(rng() % A->num_vertices());
        int w2 = (int)(rng() % A->num_vertices());
        Rep X = standard_rep(A, order, w1, StdVariant::Std);
        Rep Y = standard_rep(A, order, w2, StdVariant::Std);
        samples.push_back({"ext(Delta_" + A->vertex_name(w1) + ", Delta_" +
                               A->vertex_name(w2) + ")#" + std::to_string(k),
                           random_extension(X, Y, rng())});
    }
    for (int v = 0; v < A->num_vertices(); ++v) {
        Rep Iv = injective_rep(A, v);
        for (const auto& [desc, M] : samples)
            out.ext_samples.push_back(
                {desc + " vs I_" + A->vertex_name(v), ext_dim(1, M, Iv, 6)});
    }
    return out;
}

CokernelProbe cokernel_closure_probe(const AlgebraPtr& A, const LinearOrder& order,
                                     long budget) {
    const FieldSpec& f = A->field();
    if (f.is_rational())
        throw Error("the cokernel probe enumerates morphisms and needs a prime field");
    StratReport sr = stratification_report(A, order);
    if (!sr.standardly) throw Error("the cokernel probe needs a stratified order");

    CokernelProbe out;
    long p = f.characteristic();
    for (int i = 0; i < A->num_vertices(); ++i) {
        Rep delta = standard_rep(A, order, i, StdVariant::Std);
        for (int w = 0; w < A->num_vertices(); ++w) {
            Rep P = proj_rep(A, w);
            std::vector<Morphism> basis = hom_space(delta, P);
            long double count = 1;
            for (size_t k = 0; k < basis.size(); ++k) count *= p;
            if (count > (long double)budget) {
                out.skipped.push_back({i, w});
                continue;
            }
            std::vector<long> odo(basis.size(), 0);
            while (true) {
                int pos = 0;
                while (pos < (int)odo.size() && odo[pos] + 1 == p) odo[pos++] = 0;
                if (pos == (int)odo.size()) break;
                ++odo[pos];
                Morphism phi = zero_morphism(delta, P);
                for (size_t k = 0; k < basis.size(); ++k)
                    if (odo[k] != 0)
                        phi = mor_add(phi, mor_scale(basis[k], Scalar(f, odo[k])));
                if (!is_injective_morphism(phi)) continue;
                ++out.monos_checked;
                SubQuot img = image(phi);
                if (!delta_filtration(img.quot, order).success) {
                    out.status = CokernelProbe::Status::Counterexample;
                    out.witness_vertex = i;
                    out.witness_projective = w;
                    out.witness_cokernel = img.quot;
                    return out;
                }
            }
        }
    }
    out.status = out.skipped.empty() ? CokernelProbe::Status::Verified
                                     : CokernelProbe::Status::BudgetExceeded;
    return out;
}

}  // namespace quiva
