#include "quiva/structalg.hpp"

#include "quiva/isosearch.hpp"

namespace quiva {

namespace {

using IMat = std::vector<std::vector<mpz_class>>;

IMat imat_mul(const IMat& a, const IMat& b) {
    size_t n = a.size();
    IMat r(n, std::vector<mpz_class>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j)
                if (b[k][j] != 0) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

IMat imat_pow(IMat base, unsigned long e) {
    size_t n = base.size();
    IMat acc(n, std::vector<mpz_class>(n, 0));
    for (size_t i = 0; i < n; ++i) acc[i][i] = 1;
    while (e > 0) {
        if (e & 1) acc = imat_mul(acc, base);
        e >>= 1;
        if (e) base = imat_mul(base, base);
    }
    return acc;
}

mpz_class imat_trace(const IMat& a) {
    mpz_class t = 0;
    for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

}  // namespace

StructureAlgebra::StructureAlgebra(const FieldSpec& f,
                                   std::vector<std::vector<Matrix>> mult)
    : field_(f), dim_((int)mult.size()), mult_(std::move(mult)) {
    for (const auto& row : mult_) {
        if ((int)row.size() != dim_) throw Error("ragged multiplication table");
        for (const auto& col : row)
            if (col.rows() != dim_ || col.cols() != 1)
                throw Error("structure constant column has wrong shape");
    }
    left_.reserve(dim_);
    for (int i = 0; i < dim_; ++i) {
        Matrix L(field_, dim_, dim_);
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k) L.at(k, j) = mult_[i][j].at(k, 0);
        left_.push_back(std::move(L));
    }
    if (!is_associative()) throw Error("multiplication table is not associative");
    // solve for a two-sided unit: L_u = id and R_u = id
    Matrix sys(field_, 2 * dim_ * dim_, dim_);
    Matrix rhs(field_, 2 * dim_ * dim_, 1);
    int row = 0;
    for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k) {
            for (int i = 0; i < dim_; ++i) {
                sys.at(row, i) = mult_[i][j].at(k, 0);          // (u b_j)_k
                sys.at(row + dim_ * dim_, i) = mult_[j][i].at(k, 0);  // (b_j u)_k
            }
            Scalar delta = (j == k) ? Scalar::one(field_) : Scalar::zero(field_);
            rhs.at(row, 0) = delta;
            rhs.at(row + dim_ * dim_, 0) = delta;
            ++row;
        }
    auto u = solve(sys, rhs);
    if (!u) throw Error("algebra has no unit");
    unit_ = *u;
}

Matrix StructureAlgebra::left_mult(const Matrix& v) const {
    if (v.rows() != dim_ || v.cols() != 1) throw Error("bad coordinate column");
    Matrix L(field_, dim_, dim_);
    for (int i = 0; i < dim_; ++i)
        if (!v.at(i, 0).is_zero()) L = L + left_[i] * v.at(i, 0);
    return L;
}

Matrix StructureAlgebra::right_mult(const Matrix& v) const {
    if (v.rows() != dim_ || v.cols() != 1) throw Error("bad coordinate column");
    Matrix R(field_, dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        if (v.at(j, 0).is_zero()) continue;
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < dim_; ++k)
                R.at(k, i) += mult_[i][j].at(k, 0) * v.at(j, 0);
    }
    return R;
}

Matrix StructureAlgebra::multiply(const Matrix& a, const Matrix& b) const {
    return left_mult(a) * b;
}

bool StructureAlgebra::is_associative() const {
    // L_{b_i b_j} == L_{b_i} L_{b_j} suffices for a faithful unital table,
    // and is what the radical computation relies on.
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (!(left_mult(mult_[i][j]) == left_[i] * left_[j])) return false;
    return true;
}

Subspace StructureAlgebra::radical_char0() const {
    // Dickson: over a characteristic-zero field the radical is the kernel of
    // the trace form (x, y) |-> tr(L_{xy}) = tr(L_x L_y).
    std::vector<Scalar> tr;
    tr.reserve(dim_);
    for (int l = 0; l < dim_; ++l) {
        Scalar t = Scalar::zero(field_);
        for (int k = 0; k < dim_; ++k) t += left_[l].at(k, k);
        tr.push_back(t);
    }
    Matrix G(field_, dim_, dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            Scalar g = Scalar::zero(field_);
            for (int l = 0; l < dim_; ++l) {
                const Scalar& c = mult_[i][j].at(l, 0);
                if (!c.is_zero()) g += c * tr[l];
            }
            G.at(j, i) = g;
        }
    return kernel_space(G);
}

Subspace StructureAlgebra::radical_charp() const {
    // Friedl-Ronyai chain. Work in the left regular representation with
    // entrywise integer lifts; level i cuts by the functions
    //   g_i(x, y) = p^{-i} tr((XY)^{p^i}) mod p,
    // which are F_p-linear in x on the spaces the chain produces.
    int64_t p = field_.characteristic();
    std::vector<IMat> lifts(dim_, IMat(dim_, std::vector<mpz_class>(dim_, 0)));
    for (int i = 0; i < dim_; ++i)
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c) lifts[i][r][c] = left_[i].at(r, c).residue();

    // current space, rows = basis vectors in algebra coordinates
    Matrix basis = Matrix::identity(field_, dim_);
    unsigned long q = 1;
    for (int level = 0; q / p < (unsigned long)dim_; ++level, q *= p) {
        int m = basis.rows();
        if (m == 0) break;
        std::vector<IMat> cur;
        cur.reserve(m);
        for (int s = 0; s < m; ++s) {
            IMat X(dim_, std::vector<mpz_class>(dim_, 0));
            for (int i = 0; i < dim_; ++i) {
                long c = basis.at(s, i).residue();
                if (c == 0) continue;
                for (int r = 0; r < dim_; ++r)
                    for (int cc = 0; cc < dim_; ++cc) X[r][cc] += c * lifts[i][r][cc];
            }
            cur.push_back(std::move(X));
        }
        Matrix G(field_, m, m);
        mpz_class pi = 1;
        for (int l = 0; l < level; ++l) pi *= p;
        for (int s = 0; s < m; ++s)
            for (int t = 0; t < m; ++t) {
                IMat prod = imat_mul(cur[s], cur[t]);
                mpz_class trv = imat_trace(imat_pow(prod, q));
                if (trv % pi != 0) throw Error("internal: radical trace not divisible");
                mpz_class red = (trv / pi) % p;
                if (red < 0) red += p;
                G.at(t, s) = Scalar(field_, red.get_si());
            }
        Subspace ker = kernel_space(G);
        Matrix next(field_, ker.dim(), dim_);
        for (int r = 0; r < ker.dim(); ++r)
            for (int i = 0; i < dim_; ++i) {
                Scalar v = Scalar::zero(field_);
                for (int s = 0; s < m; ++s) v += ker.basis().at(r, s) * basis.at(s, i);
                next.at(r, i) = v;
            }
        basis = Subspace::span_of_rows(next).basis();
    }
    return Subspace::span_of_rows(basis);
}

Subspace StructureAlgebra::radical() const {
    return field_.is_rational() ? radical_char0() : radical_charp();
}

bool StructureAlgebra::is_split_local() const {
    return dim_ - radical().dim() == 1;
}

Subspace StructureAlgebra::left_socle() const {
    Subspace rad = radical();
    Matrix sys(field_, 0, dim_);
    for (int r = 0; r < rad.dim(); ++r)
        sys = sys.vstack(left_mult(rad.basis().row(r).transpose()));
    if (rad.dim() == 0) return Subspace::span_of_rows(Matrix::identity(field_, dim_));
    return kernel_space(sys);
}

bool StructureAlgebra::is_self_injective(uint64_t seed) const {
    // Left action on D(Lambda) is x |-> R_x^T.
    std::vector<Matrix> reg, dual;
    for (int i = 0; i < dim_; ++i) {
        reg.push_back(left_[i]);
        Matrix ei(field_, dim_, 1);
        ei.at(i, 0) = Scalar::one(field_);
        dual.push_back(right_mult(ei).transpose());
    }
    IsoResult duality = action_module_isomorphic(field_, reg, dual, seed);
    if (duality.verdict == IsoVerdict::Inconclusive)
        throw Error("internal: self-injectivity search inconclusive");
    bool via_duality = duality.verdict == IsoVerdict::Iso;
    // cross-check: a local algebra is self-injective iff its left socle is
    // simple; for split local algebras that means one-dimensional
    if (is_split_local()) {
        bool via_socle = left_socle().dim() == 1;
        if (via_socle != via_duality)
            throw Error("internal: self-injectivity certificates disagree");
    }
    return via_duality;
}

bool StructureAlgebra::free_module_over_local(const std::vector<Matrix>& act) const {
    if (!is_split_local()) throw Error("freeness test requires a (split) local algebra");
    if ((int)act.size() != dim_) throw Error("need one action matrix per basis element");
    int m = act.empty() ? 0 : act[0].rows();
    for (const auto& a : act)
        if (a.rows() != m || a.cols() != m) throw Error("action matrices must be square");
    if (m == 0) return true;  // the zero module counts as free

    Subspace rad = radical();
    Matrix radm(field_, 0, m);
    for (int r = 0; r < rad.dim(); ++r) {
        Matrix op(field_, m, m);
        for (int i = 0; i < dim_; ++i) {
            const Scalar& c = rad.basis().at(r, i);
            if (!c.is_zero()) op = op + act[i] * c;
        }
        radm = radm.vstack(op.transpose());  // rows span rad * M
    }
    Subspace radM = Subspace::span_of_rows(radm);
    int g = m - radM.dim();
    if ((long)m != (long)g * dim_) return false;

    // lift a basis of the top and test that Lambda^g -> M is injective
    std::vector<Matrix> lifts;
    Subspace span = radM;
    for (int i = 0; i < m && (int)lifts.size() < g; ++i) {
        Matrix e(field_, 1, m);
        e.at(0, i) = Scalar::one(field_);
        if (span.contains_vector(e)) continue;
        lifts.push_back(e.transpose());
        span = span.sum(Subspace::span_of_rows(e));
    }
    Matrix map(field_, m, g * dim_);
    int col = 0;
    for (const auto& u : lifts)
        for (int j = 0; j < dim_; ++j) {
            Matrix v = act[j] * u;
            for (int i = 0; i < m; ++i) map.at(i, col) = v.at(i, 0);
            ++col;
        }
    return rank(map) == g * dim_;
}

StructureAlgebra StructureAlgebra::quotient(const Subspace& ideal) const {
    // complete the ideal basis to a basis of the algebra
    Matrix full = ideal.basis();
    std::vector<int> chosen;
    Subspace span = ideal;
    for (int i = 0; i < dim_; ++i) {
        Matrix e(field_, 1, dim_);
        e.at(0, i) = Scalar::one(field_);
        if (span.contains_vector(e)) continue;
        chosen.push_back(i);
        full = full.vstack(e);
        span = span.sum(Subspace::span_of_rows(e));
    }
    int q = (int)chosen.size();
    Matrix to_coords = *inverse(full.transpose());  // coordinates in [ideal; complement]
    std::vector<std::vector<Matrix>> qmult(q, std::vector<Matrix>(q));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            Matrix ea(field_, dim_, 1), eb(field_, dim_, 1);
            ea.at(chosen[a], 0) = Scalar::one(field_);
            eb.at(chosen[b], 0) = Scalar::one(field_);
            Matrix prod = to_coords * multiply(ea, eb);
            Matrix colv(field_, q, 1);
            for (int k = 0; k < q; ++k) colv.at(k, 0) = prod.at(ideal.dim() + k, 0);
            qmult[a][b] = colv;
        }
    return StructureAlgebra(field_, std::move(qmult));
}

}  // namespace quiva
