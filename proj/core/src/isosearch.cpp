#include "quiva/isosearch.hpp"

#include <random>

namespace quiva {

namespace {

using BlockMor = std::vector<Matrix>;

Matrix vec_blocks(const FieldSpec& f, const BlockMor& m) {
    int total = 0;
    for (const auto& b : m) total += b.rows() * b.cols();
    Matrix v(f, 1, total);
    int at = 0;
    for (const auto& b : m)
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) v.at(0, at++) = b.at(i, j);
    return v;
}

BlockMor compose(const BlockMor& g, const BlockMor& f) {
    BlockMor r;
    r.reserve(g.size());
    for (size_t b = 0; b < g.size(); ++b) r.push_back(g[b] * f[b]);
    return r;
}

BlockMor combine(const FieldSpec& f, const std::vector<BlockMor>& basis,
                 const std::vector<Scalar>& coeff,
                 const std::vector<int>& rows, const std::vector<int>& cols) {
    BlockMor r;
    for (size_t b = 0; b < rows.size(); ++b) r.emplace_back(f, rows[b], cols[b]);
    for (size_t k = 0; k < basis.size(); ++k) {
        if (coeff[k].is_zero()) continue;
        for (size_t b = 0; b < r.size(); ++b) r[b] = r[b] + basis[k][b] * coeff[k];
    }
    return r;
}

bool all_blocks_invertible(const BlockMor& m) {
    for (const auto& b : m) {
        if (b.rows() != b.cols()) return false;
        if (rank(b) != b.rows()) return false;
    }
    return true;
}

}  // namespace

IsoResult block_iso_search(const FieldSpec& f,
                           const std::vector<int>& dims1,
                           const std::vector<int>& dims2,
                           const std::vector<std::vector<Matrix>>& hom12,
                           const std::vector<std::vector<Matrix>>& hom21,
                           uint64_t seed, long exhaustive_budget, int random_trials) {
    IsoResult res;
    if (dims1 != dims2) {
        res.verdict = IsoVerdict::NotIso;
        return res;
    }
    int total = 0;
    for (int d : dims1) total += d;
    if (total == 0) {
        res.verdict = IsoVerdict::Iso;
        for (int d : dims1) res.cert.emplace_back(f, d, d);
        return res;
    }
    if (hom12.empty() || hom21.empty()) {
        res.verdict = IsoVerdict::NotIso;
        return res;
    }

    // 1. basis sweep
    for (const auto& cand : hom12)
        if (all_blocks_invertible(cand)) {
            res.verdict = IsoVerdict::Iso;
            res.cert = cand;
            return res;
        }

    // 2. trace-ideal criterion: id in span{ g o f } is necessary, and the
    // decomposition id = sum_j (sum_i c_ij g_i) o f_j often exposes an
    // invertible composite, which certifies f_j as an isomorphism.
    {
        std::vector<BlockMor> prods;
        for (const auto& g : hom21)
            for (const auto& fm : hom12) prods.push_back(compose(g, fm));
        BlockMor idm;
        for (int d : dims1) idm.push_back(Matrix::identity(f, d));
        Matrix cols(f, vec_blocks(f, idm).cols(), (int)prods.size());
        for (size_t k = 0; k < prods.size(); ++k) {
            Matrix v = vec_blocks(f, prods[k]);
            for (int i = 0; i < v.cols(); ++i) cols.at(i, (int)k) = v.at(0, i);
        }
        auto sol = solve(cols, vec_blocks(f, idm).transpose());
        if (!sol) {
            res.verdict = IsoVerdict::NotIso;
            return res;
        }
        for (size_t j = 0; j < hom12.size(); ++j) {
            BlockMor gj;
            for (size_t b = 0; b < dims1.size(); ++b)
                gj.emplace_back(f, dims1[b], dims2[b]);
            for (size_t i = 0; i < hom21.size(); ++i) {
                const Scalar& c = sol->at((int)(i * hom12.size() + j), 0);
                if (c.is_zero()) continue;
                for (size_t b = 0; b < gj.size(); ++b) gj[b] = gj[b] + hom21[i][b] * c;
            }
            if (all_blocks_invertible(compose(gj, hom12[j]))) {
                res.verdict = IsoVerdict::Iso;
                res.cert = hom12[j];
                return res;
            }
        }
    }

    std::vector<int> rows2(dims2.begin(), dims2.end());
    std::vector<int> cols1(dims1.begin(), dims1.end());

    // 3. seeded random combinations
    std::mt19937_64 rng(seed);
    int h = (int)hom12.size();
    for (int trial = 0; trial < random_trials; ++trial) {
        std::vector<Scalar> coeff;
        coeff.reserve(h);
        for (int k = 0; k < h; ++k) {
            long c = f.is_rational()
                         ? (long)(rng() % 7) - 3
                         : (long)(rng() % f.characteristic());
            coeff.push_back(Scalar(f, c));
        }
        BlockMor cand = combine(f, hom12, coeff, rows2, cols1);
        if (all_blocks_invertible(cand)) {
            res.verdict = IsoVerdict::Iso;
            res.cert = cand;
            return res;
        }
    }

    // 4. exhaustive search over small prime fields
    if (!f.is_rational()) {
        long double count = 1;
        for (int k = 0; k < h; ++k) count *= f.characteristic();
        if (count <= (long double)exhaustive_budget) {
            std::vector<long> odo(h, 0);
            while (true) {
                int pos = 0;
                while (pos < h && odo[pos] + 1 == (long)f.characteristic()) {
                    odo[pos] = 0;
                    ++pos;
                }
                if (pos == h) break;
                ++odo[pos];
                std::vector<Scalar> coeff;
                for (int k = 0; k < h; ++k) coeff.push_back(Scalar(f, odo[k]));
                BlockMor cand = combine(f, hom12, coeff, rows2, cols1);
                if (all_blocks_invertible(cand)) {
                    res.verdict = IsoVerdict::Iso;
                    res.cert = cand;
                    return res;
                }
            }
            res.verdict = IsoVerdict::NotIso;  // exhausted every combination
            return res;
        }
    }

    res.verdict = IsoVerdict::Inconclusive;
    return res;
}

std::vector<Matrix> intertwiners(const FieldSpec& f, int m1, int m2,
                                 const std::vector<Matrix>& acts1,
                                 const std::vector<Matrix>& acts2) {
    if (acts1.size() != acts2.size()) throw Error("action list length mismatch");
    // unknowns: entries of F (m2 x m1), row-major; equations: F A - B F = 0
    int nunk = m1 * m2;
    Matrix sys(f, (int)acts1.size() * m1 * m2, nunk);
    int row = 0;
    for (size_t a = 0; a < acts1.size(); ++a) {
        for (int i = 0; i < m2; ++i)
            for (int j = 0; j < m1; ++j) {
                for (int k = 0; k < m1; ++k)
                    sys.at(row, i * m1 + k) += acts1[a].at(k, j);
                for (int k = 0; k < m2; ++k)
                    sys.at(row, k * m1 + j) -= acts2[a].at(i, k);
                ++row;
            }
    }
    Subspace ker = kernel_space(sys);
    std::vector<Matrix> basis;
    for (int r = 0; r < ker.dim(); ++r) {
        Matrix F(f, m2, m1);
        for (int i = 0; i < m2; ++i)
            for (int j = 0; j < m1; ++j) F.at(i, j) = ker.basis().at(r, i * m1 + j);
        basis.push_back(std::move(F));
    }
    return basis;
}

IsoResult action_module_isomorphic(const FieldSpec& f,
                                   const std::vector<Matrix>& acts1,
                                   const std::vector<Matrix>& acts2,
                                   uint64_t seed) {
    if (acts1.empty() || acts2.empty())
        throw Error("action_module_isomorphic needs at least one action matrix");
    int m1 = acts1[0].cols();
    int m2 = acts2[0].cols();
    std::vector<std::vector<Matrix>> hom12, hom21;
    for (auto& F : intertwiners(f, m1, m2, acts1, acts2)) hom12.push_back({F});
    for (auto& F : intertwiners(f, m2, m1, acts2, acts1)) hom21.push_back({F});
    return block_iso_search(f, {m1}, {m2}, hom12, hom21, seed);
}

}  // namespace quiva
