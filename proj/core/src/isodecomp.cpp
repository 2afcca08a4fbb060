#include "quiva/isodecomp.hpp"

#include <random>

namespace quiva {

namespace {

Matrix vec_morphism(const Morphism& m) {
    const FieldSpec& f = m.source.field();
    int total = 0;
    for (const auto& c : m.comps) total += c.rows() * c.cols();
    Matrix v(f, total, 1);
    int at = 0;
    for (const auto& c : m.comps)
        for (int i = 0; i < c.rows(); ++i)
            for (int j = 0; j < c.cols(); ++j) v.at(at++, 0) = c.at(i, j);
    return v;
}

// stacked matrix of an endomorphism on (+) M(v)
Matrix stacked(const Morphism& m) {
    const FieldSpec& f = m.source.field();
    int n = m.source.total_dim();
    Matrix T(f, n, n);
    int at = 0;
    for (const auto& c : m.comps) {
        for (int i = 0; i < c.rows(); ++i)
            for (int j = 0; j < c.cols(); ++j) T.at(at + i, at + j) = c.at(i, j);
        at += c.rows();
    }
    return T;
}

// rational roots of a monic polynomial with exact coefficients
std::vector<Scalar> poly_roots(const FieldSpec& f, const std::vector<Scalar>& coeffs) {
    std::vector<Scalar> roots;
    auto eval = [&](const Scalar& x) {
        Scalar acc = Scalar::zero(f);
        for (int d = (int)coeffs.size() - 1; d >= 0; --d) acc = acc * x + coeffs[d];
        return acc;
    };
    if (!f.is_rational()) {
        long p = f.characteristic();
        if (p > 4096) return roots;  // scanning cap; larger primes skip roots
        for (long r = 0; r < p; ++r) {
            Scalar x(f, r);
            if (eval(x).is_zero()) roots.push_back(x);
        }
        return roots;
    }
    // integer-scale: candidates p/q with p | a0, q | lead
    mpz_class denlcm = 1;
    for (const auto& c : coeffs) {
        mpz_class d = c.rational().get_den();
        denlcm = denlcm / gcd(denlcm, d) * d;
    }
    std::vector<mpz_class> ic;
    for (const auto& c : coeffs) {
        mpq_class q = c.rational() * mpq_class(denlcm);
        ic.push_back(q.get_num());
    }
    while (!ic.empty() && ic.front() == 0) {
        roots.push_back(Scalar::zero(f));
        ic.erase(ic.begin());
    }
    if (ic.size() <= 1) return roots;
    auto divisors = [](mpz_class n) {
        std::vector<mpz_class> out;
        n = abs(n);
        for (mpz_class d = 1; d * d <= n; ++d) {
            if (n % d == 0) {
                out.push_back(d);
                out.push_back(n / d);
            }
            if (d > 100000) break;  // desk-scale guard
        }
        return out;
    };
    for (const mpz_class& p : divisors(ic.front()))
        for (const mpz_class& q : divisors(ic.back()))
            for (int sign : {1, -1}) {
                mpq_class cand(sign * p, q);
                cand.canonicalize();
                Scalar x(f, cand);
                if (eval(x).is_zero()) {
                    bool seen = false;
                    for (const auto& r : roots)
                        if (r == x) seen = true;
                    if (!seen) roots.push_back(x);
                }
            }
    return roots;
}

}  // namespace

std::vector<Scalar> minimal_polynomial(const Matrix& T) {
    const FieldSpec& f = T.field();
    int n = T.rows();
    if (n == 0) return {Scalar::one(f)};  // the empty operator: min poly 1
    // Krylov on vectorized powers
    std::vector<Matrix> pows;
    Matrix cur = Matrix::identity(f, n);
    Matrix rows(f, 0, n * n);
    for (int d = 0;; ++d) {
        Matrix flat(f, 1, n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) flat.at(0, i * n + j) = cur.at(i, j);
        // dependence test: solve rows^T x = flat^T
        if (d > 0) {
            auto sol = solve(rows.transpose(), flat.transpose());
            if (sol) {
                std::vector<Scalar> coeffs;
                for (int k = 0; k < d; ++k) coeffs.push_back(-sol->at(k, 0));
                coeffs.push_back(Scalar::one(f));
                return coeffs;
            }
        }
        pows.push_back(cur);
        rows = rows.vstack(flat);
        cur = cur * T;
        if (d > n) throw Error("internal: minimal polynomial not found");
    }
}

EndAlgebra end_algebra(const Rep& M) {
    std::vector<Morphism> basis = hom_space(M, M);
    int m = (int)basis.size();
    const FieldSpec& f = M.field();
    // express pairwise compositions in the basis
    Matrix cols(f, M.is_zero() ? 1 : vec_morphism(zero_morphism(M, M)).rows(), m);
    if (!M.is_zero())
        for (int k = 0; k < m; ++k) {
            Matrix v = vec_morphism(basis[k]);
            for (int i = 0; i < v.rows(); ++i) cols.at(i, k) = v.at(i, 0);
        }
    std::vector<std::vector<Matrix>> mult(m, std::vector<Matrix>(m, Matrix(f, m, 1)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            auto sol = solve(cols, vec_morphism(compose(basis[a], basis[b])));
            if (!sol) throw Error("internal: End(M) is not closed");
            mult[a][b] = *sol;
        }
    return EndAlgebra{StructureAlgebra(f, std::move(mult)), std::move(basis)};
}

bool is_indecomposable(const Rep& M) {
    if (M.is_zero()) return false;
    EndAlgebra E = end_algebra(M);
    return E.alg.dim() - E.alg.radical().dim() == 1;
}

namespace {

// one Fitting split attempt from an endomorphism candidate
std::optional<std::pair<Rep, Rep>> try_split(const Rep& M, const Morphism& phi) {
    const FieldSpec& f = M.field();
    int n = M.total_dim();
    std::vector<Scalar> lambdas;
    Matrix T = stacked(phi);
    for (const Scalar& r : poly_roots(f, minimal_polynomial(T))) lambdas.push_back(r);
    for (const Scalar& lam : lambdas) {
        // psi = phi - lam, componentwise
        std::vector<Subspace> kers, ims;
        bool ok = true;
        int kdim = 0;
        std::vector<Matrix> powers;
        for (size_t v = 0; v < phi.comps.size(); ++v) {
            Matrix psi = phi.comps[v] - Matrix::identity(f, phi.comps[v].rows()) * lam;
            Matrix pw = psi.pow(n);
            kers.push_back(kernel_space(pw));
            ims.push_back(Subspace::span_of_rows(pw.transpose()));
            kdim += kers.back().dim();
        }
        if (kdim == 0 || kdim == n) continue;
        SubQuot K = subquot_from_subspaces(M, kers);
        SubQuot I = subquot_from_subspaces(M, ims);
        if (K.sub.total_dim() + I.sub.total_dim() != n) ok = false;
        if (ok) return std::make_pair(K.sub, I.sub);
    }
    return std::nullopt;
}

void split_rec(const Rep& M, uint64_t seed, std::vector<Rep>& out) {
    if (M.is_zero()) return;
    EndAlgebra E = end_algebra(M);
    int top_dim = E.alg.dim() - E.alg.radical().dim();
    if (top_dim == 1) {
        out.push_back(M);
        return;
    }
    auto recurse = [&](const std::pair<Rep, Rep>& parts) {
        split_rec(parts.first, seed, out);
        split_rec(parts.second, seed, out);
    };
    // candidates: basis endomorphisms, their pairwise products, random combos
    for (const Morphism& phi : E.basis)
        if (auto s = try_split(M, phi)) return recurse(*s);
    for (size_t a = 0; a < E.basis.size(); ++a)
        for (size_t b = 0; b < E.basis.size(); ++b)
            if (auto s = try_split(M, compose(E.basis[a], E.basis[b])))
                return recurse(*s);
    std::mt19937_64 rng(seed);
    const FieldSpec& f = M.field();
    for (int trial = 0; trial < 100; ++trial) {
        Morphism phi = zero_morphism(M, M);
        for (const Morphism& b : E.basis) {
            long c = f.is_rational() ? (long)(rng() % 5) - 2
                                     : (long)(rng() % f.characteristic());
            phi = mor_add(phi, mor_scale(b, Scalar(f, c)));
        }
        if (auto s = try_split(M, phi)) return recurse(*s);
    }
    throw Error(
        "non-split endomorphism quotient: End(M)/rad has dimension " +
        std::to_string(top_dim) +
        " and no splitting endomorphism was found; try a different field");
}

}  // namespace

std::vector<Summand> decompose(const Rep& M, uint64_t seed) {
    std::vector<Summand> out;
    if (M.is_zero()) return out;
    std::vector<Rep> pieces;
    split_rec(M, seed, pieces);
    // sanity: dimensions add up
    std::vector<int> dims(M.dims.size(), 0);
    for (const Rep& p : pieces)
        for (size_t v = 0; v < dims.size(); ++v) dims[v] += p.dims[v];
    if (dims != M.dims) throw Error("internal: decomposition dimensions disagree");
    for (const Rep& p : pieces) {
        bool matched = false;
        for (Summand& s : out) {
            RepIso iso = is_isomorphic(s.indec, p, seed);
            if (iso.verdict == IsoVerdict::Inconclusive)
                throw Error("inconclusive isomorphism test while grouping summands");
            if (iso.verdict == IsoVerdict::Iso) {
                ++s.multiplicity;
                matched = true;
                break;
            }
        }
        if (!matched) out.push_back({p, 1});
    }
    return out;
}

}  // namespace quiva
