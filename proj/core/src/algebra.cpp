#include "quiva/algebra.hpp"

#include <algorithm>
#include <map>

namespace quiva {

namespace {

// ---------------------------------------------------------------------------
// word enumeration and sparse echelon reduction for the quotient construction

struct Words {
    const Quiver& q;
    std::vector<PathWord> list;
    std::map<std::vector<int>, int> by_arrows;  // positive-length words
    std::vector<std::vector<int>> by_length;

    explicit Words(const Quiver& quiver) : q(quiver) {}

    int id_of_trivial(int v) const { return v; }
    int id_of(const std::vector<int>& arrows) const {
        auto it = by_arrows.find(arrows);
        return it == by_arrows.end() ? -1 : it->second;
    }
};

// enumerate all composable words of length <= cap
Words enumerate_words(const Quiver& q, int cap, size_t hard_limit) {
    Words w(q);
    w.by_length.resize(cap + 1);
    for (int v = 0; v < (int)q.vertices.size(); ++v) {
        w.by_length[0].push_back((int)w.list.size());
        w.list.push_back(PathWord::trivial_at(v));
    }
    for (int len = 1; len <= cap; ++len) {
        for (int prev : w.by_length[len - 1]) {
            const PathWord base = w.list[prev];  // copy: push_back reallocates
            for (int a = 0; a < (int)q.arrows.size(); ++a) {
                if (q.arrows[a].src != base.tgt) continue;
                std::vector<int> arrows;
                arrows.reserve(len);
                arrows.push_back(a);
                arrows.insert(arrows.end(), base.arrows.begin(), base.arrows.end());
                if (w.list.size() >= hard_limit)
                    throw Error("not finite-dimensional within cap (word explosion)");
                w.by_length[len].push_back((int)w.list.size());
                w.by_arrows[arrows] = (int)w.list.size();
                w.list.push_back(PathWord{base.src, q.arrows[a].tgt, std::move(arrows)});
            }
        }
    }
    return w;
}

// length-lex on words via arrow-name sequences
bool name_seq_less(const Quiver& q, const PathWord& a, const PathWord& b) {
    for (size_t i = 0; i < std::min(a.arrows.size(), b.arrows.size()); ++i) {
        const std::string& x = q.arrows[a.arrows[i]].name;
        const std::string& y = q.arrows[b.arrows[i]].name;
        if (x != y) return x < y;
    }
    return a.arrows.size() < b.arrows.size();
}

using SparseRow = std::map<int, Scalar>;  // position -> coefficient

// echelon collection over a fixed column (position) order, rows fully reduced
struct Echelon {
    std::vector<SparseRow> rows;
    std::vector<int> row_of_pivot;  // position -> row index or -1

    explicit Echelon(int positions) : row_of_pivot(positions, -1) {}

    void reduce(SparseRow& vec) const {
        auto it = vec.begin();
        while (it != vec.end()) {
            if (it->second.is_zero()) {
                it = vec.erase(it);
                continue;
            }
            int r = row_of_pivot[it->first];
            if (r < 0) {
                ++it;
                continue;
            }
            int pos = it->first;
            Scalar c = it->second;
            for (const auto& [p, val] : rows[r]) {
                auto slot = vec.find(p);
                if (slot == vec.end())
                    vec.emplace(p, -(c * val));
                else
                    slot->second -= c * val;
            }
            it = vec.lower_bound(pos);
        }
    }

    // returns true if the vector was independent (a new row was added)
    bool insert(SparseRow vec) {
        reduce(vec);
        if (vec.empty()) return false;
        int pivot = vec.begin()->first;
        Scalar inv = vec.begin()->second.inverse();
        for (auto& [p, val] : vec) val *= inv;
        // back-substitute into existing rows
        for (size_t r = 0; r < rows.size(); ++r) {
            auto slot = rows[r].find(pivot);
            if (slot == rows[r].end()) continue;
            Scalar c = slot->second;
            for (const auto& [p, val] : vec) {
                auto s2 = rows[r].find(p);
                if (s2 == rows[r].end())
                    rows[r].emplace(p, -(c * val));
                else {
                    s2->second -= c * val;
                    if (s2->second.is_zero()) rows[r].erase(s2);
                }
            }
        }
        row_of_pivot[pivot] = (int)rows.size();
        rows.push_back(std::move(vec));
        return true;
    }
};

}  // namespace

int Algebra::vertex_index(const std::string& name) const {
    for (size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] == name) return (int)i;
    return -1;
}

const std::vector<int>& Algebra::block(int src, int tgt) const {
    auto it = blocks_.find({src, tgt});
    return it == blocks_.end() ? empty_block_ : it->second;
}

void Algebra::index_blocks() {
    idem_.assign(vertices_.size(), -1);
    blocks_.clear();
    radical_.clear();
    for (int i = 0; i < dim(); ++i) {
        const BasisElem& b = basis_[i];
        blocks_[{b.src, b.tgt}].push_back(i);
        if (b.length == 0)
            idem_[b.src] = i;
        else
            radical_.push_back(i);
    }
    for (int v = 0; v < (int)vertices_.size(); ++v)
        if (idem_[v] < 0) throw Error("internal: missing idempotent");
}

std::shared_ptr<const Algebra> Algebra::build(const Presentation& pres, int length_cap) {
    const Quiver& q = pres.quiver;
    if (q.vertices.empty()) throw Error("a presentation needs at least one vertex");
    int maxrel = 0;
    for (const auto& r : pres.relations)
        for (const auto& t : r.terms) maxrel = std::max(maxrel, t.word.length());
    int cap = length_cap > 0
                  ? length_cap
                  : 2 * ((int)q.arrows.size() + (int)q.vertices.size()) + maxrel;

    Words words = enumerate_words(q, cap, 200000);
    int total = (int)words.list.size();

    // elimination order: longer first, lex-greater first within a length
    std::vector<int> order(total);
    for (int i = 0; i < total; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const PathWord& wa = words.list[a];
        const PathWord& wb = words.list[b];
        if (wa.length() != wb.length()) return wa.length() > wb.length();
        if (name_seq_less(q, wb, wa)) return true;
        if (name_seq_less(q, wa, wb)) return false;
        return a < b;
    });
    std::vector<int> position(total);
    for (int p = 0; p < total; ++p) position[order[p]] = p;

    // span of the two-sided ideal: u * r * v for all relations r and all
    // composable (u, v) with the longest term still inside the cap
    Echelon ech(total);
    for (const auto& rel : pres.relations) {
        int rmax = 0;
        for (const auto& t : rel.terms) rmax = std::max(rmax, t.word.length());
        for (int lu = 0; lu + rmax <= cap; ++lu)
            for (int u : words.by_length[lu]) {
                if (words.list[u].src != rel.tgt()) continue;
                for (int lv = 0; lu + rmax + lv <= cap; ++lv)
                    for (int v : words.by_length[lv]) {
                        if (words.list[v].tgt != rel.src()) continue;
                        SparseRow row;
                        for (const auto& t : rel.terms) {
                            std::vector<int> arrows;
                            arrows.insert(arrows.end(), words.list[u].arrows.begin(),
                                          words.list[u].arrows.end());
                            arrows.insert(arrows.end(), t.word.arrows.begin(),
                                          t.word.arrows.end());
                            arrows.insert(arrows.end(), words.list[v].arrows.begin(),
                                          words.list[v].arrows.end());
                            int id = words.id_of(arrows);
                            if (id < 0) throw Error("internal: concatenation not enumerated");
                            Scalar c(pres.field, 0);
                            c += t.coeff;
                            auto slot = row.find(position[id]);
                            if (slot == row.end())
                                row.emplace(position[id], c);
                            else
                                slot->second += c;
                        }
                        ech.insert(std::move(row));
                    }
            }
    }

    // certify a nilpotency degree: the first length L all of whose words
    // reduce to zero gives J^L = 0 in the quotient
    int nil = -1;
    for (int L = 1; L <= cap; ++L) {
        bool all_zero = true;
        for (int id : words.by_length[L]) {
            SparseRow v{{position[id], Scalar::one(pres.field)}};
            ech.reduce(v);
            if (!v.empty()) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) {
            nil = L;
            break;
        }
    }
    if (nil < 0)
        throw Error("not finite-dimensional within cap " + std::to_string(cap) +
                    ": irreducible words still appear at the cap length");

    auto alg = std::shared_ptr<Algebra>(new Algebra());
    alg->field_ = pres.field;
    alg->vertices_ = q.vertices;
    alg->nil_degree_ = nil;
    alg->pres_ = pres;
    alg->parent_vertex_.resize(q.vertices.size());
    for (size_t v = 0; v < q.vertices.size(); ++v) alg->parent_vertex_[v] = (int)v;

    // basis: non-pivot words of length < nil, sorted by length then name-lex
    std::vector<int> chosen;
    for (int L = 0; L < nil; ++L)
        for (int id : words.by_length[L])
            if (ech.row_of_pivot[position[id]] < 0) chosen.push_back(id);
    std::sort(chosen.begin(), chosen.end(), [&](int a, int b) {
        const PathWord& wa = words.list[a];
        const PathWord& wb = words.list[b];
        if (wa.length() != wb.length()) return wa.length() < wb.length();
        if (wa.length() == 0) return wa.src < wb.src;
        if (name_seq_less(q, wa, wb)) return true;
        if (name_seq_less(q, wb, wa)) return false;
        return a < b;
    });
    std::vector<int> basis_of_word(total, -1);
    for (int i = 0; i < (int)chosen.size(); ++i) {
        const PathWord& w = words.list[chosen[i]];
        alg->basis_.push_back({w.src, w.tgt, w.length(), w.label(q)});
        basis_of_word[chosen[i]] = i;
        alg->gen_expr_.push_back({{Scalar::one(pres.field), w.arrows}});
    }
    alg->parent_basis_.resize(chosen.size());
    for (size_t i = 0; i < chosen.size(); ++i) alg->parent_basis_[i] = (int)i;

    // generators: the arrows (admissibility keeps every arrow in the basis)
    for (int a = 0; a < (int)q.arrows.size(); ++a) {
        int id = words.id_of({a});
        if (id < 0 || basis_of_word[id] < 0)
            throw Error("internal: arrow eliminated from the basis");
        alg->gens_.push_back({q.arrows[a].name, q.arrows[a].src, q.arrows[a].tgt,
                              basis_of_word[id]});
    }
    for (const auto& rel : pres.relations) {
        GenRelation gr;
        for (const auto& t : rel.terms) gr.terms.push_back({t.coeff, t.word.arrows});
        alg->relations_.push_back(std::move(gr));
    }

    // structure constants by concatenate-then-reduce
    int dim = (int)chosen.size();
    alg->mult_.assign(dim, std::vector<SparseVec>(dim));
    for (int i = 0; i < dim; ++i) {
        const PathWord& wi = words.list[chosen[i]];
        for (int j = 0; j < dim; ++j) {
            const PathWord& wj = words.list[chosen[j]];
            if (wi.src != wj.tgt) continue;           // endpoint clash
            if (wi.length() + wj.length() >= nil) continue;  // lands in J^nil = 0
            std::vector<int> arrows;
            arrows.insert(arrows.end(), wi.arrows.begin(), wi.arrows.end());
            arrows.insert(arrows.end(), wj.arrows.begin(), wj.arrows.end());
            int id = arrows.empty() ? words.id_of_trivial(wi.src) : words.id_of(arrows);
            SparseRow v{{position[id], Scalar::one(pres.field)}};
            ech.reduce(v);
            SparseVec out;
            for (const auto& [pos, c] : v) {
                int bw = basis_of_word[order[pos]];
                if (bw < 0) throw Error("internal: residual outside basis");
                out.push_back({bw, c});
            }
            std::sort(out.begin(), out.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            alg->mult_[i][j] = std::move(out);
        }
    }

    alg->index_blocks();
    return alg;
}

Matrix Algebra::multiply(const Matrix& a, const Matrix& b) const {
    if (a.rows() != dim() || b.rows() != dim() || a.cols() != 1 || b.cols() != 1)
        throw Error("multiply expects coordinate columns");
    Matrix out(field_, dim(), 1);
    for (int i = 0; i < dim(); ++i) {
        if (a.at(i, 0).is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            if (b.at(j, 0).is_zero()) continue;
            Scalar c = a.at(i, 0) * b.at(j, 0);
            for (const auto& [k, v] : mult_[i][j]) out.at(k, 0) += c * v;
        }
    }
    return out;
}

bool Algebra::table_is_associative() const {
    int n = dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (basis_[i].src != basis_[j].tgt && !mult_[i][j].empty()) return false;
            for (int k = 0; k < n; ++k) {
                Matrix lhs(field_, n, 1), rhs(field_, n, 1);
                for (const auto& [l, c] : mult_[i][j])
                    for (const auto& [m, d] : mult_[l][k]) lhs.at(m, 0) += c * d;
                for (const auto& [l, c] : mult_[j][k])
                    for (const auto& [m, d] : mult_[i][l]) rhs.at(m, 0) += c * d;
                if (!(lhs == rhs)) return false;
            }
        }
    return true;
}

std::shared_ptr<const Algebra> Algebra::opposite() const {
    if (opposite_) return opposite_;
    auto op = std::shared_ptr<Algebra>(new Algebra());
    op->field_ = field_;
    op->vertices_ = vertices_;
    op->nil_degree_ = nil_degree_;
    for (const auto& g : gens_) op->gens_.push_back({g.name, g.tgt, g.src, g.basis_index});
    for (const auto& b : basis_) op->basis_.push_back({b.tgt, b.src, b.length, b.label});
    int n = dim();
    op->mult_.assign(n, std::vector<SparseVec>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) op->mult_[i][j] = mult_[j][i];
    for (const auto& terms : gen_expr_) {
        std::vector<GenExprTerm> rev;
        for (const auto& t : terms) {
            GenExprTerm r{t.coeff, t.gens};
            std::reverse(r.gens.begin(), r.gens.end());
            rev.push_back(std::move(r));
        }
        op->gen_expr_.push_back(std::move(rev));
    }
    for (const auto& rel : relations_) {
        GenRelation gr;
        for (const auto& t : rel.terms) {
            GenRelationTerm r{t.coeff, t.gens};
            std::reverse(r.gens.begin(), r.gens.end());
            gr.terms.push_back(std::move(r));
        }
        op->relations_.push_back(std::move(gr));
    }
    if (parent_) op->parent_ = parent_->opposite();
    op->parent_vertex_ = parent_vertex_;
    op->parent_basis_ = parent_basis_;
    op->index_blocks();
    op->opposite_ = shared_from_this();
    opposite_ = op;
    return op;
}

std::shared_ptr<const Algebra> Algebra::full_subcategory(std::vector<int> verts) const {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (verts.empty()) throw Error("full subcategory needs at least one vertex");
    for (int v : verts)
        if (v < 0 || v >= num_vertices()) throw Error("bad vertex in subcategory");

    auto sub = std::shared_ptr<Algebra>(new Algebra());
    sub->field_ = field_;
    sub->parent_ = shared_from_this();
    sub->nil_degree_ = nil_degree_;
    std::vector<int> child_vertex(num_vertices(), -1);
    for (int i = 0; i < (int)verts.size(); ++i) {
        sub->vertices_.push_back(vertices_[verts[i]]);
        sub->parent_vertex_.push_back(verts[i]);
        child_vertex[verts[i]] = i;
    }
    std::vector<int> child_basis(dim(), -1);
    for (int i = 0; i < dim(); ++i) {
        const BasisElem& b = basis_[i];
        if (child_vertex[b.src] < 0 || child_vertex[b.tgt] < 0) continue;
        child_basis[i] = (int)sub->basis_.size();
        sub->basis_.push_back(
            {child_vertex[b.src], child_vertex[b.tgt], b.length, b.label});
        sub->parent_basis_.push_back(i);
    }
    int n = (int)sub->basis_.size();
    sub->mult_.assign(n, std::vector<SparseVec>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (const auto& [k, c] : mult_[sub->parent_basis_[i]][sub->parent_basis_[j]]) {
                if (child_basis[k] < 0)
                    throw Error("internal: subcategory product escapes the blocks");
                sub->mult_[i][j].push_back({child_basis[k], c});
            }
        }
    sub->index_blocks();
    sub->compute_gen_expressions();
    return sub;
}

void Algebra::compute_gen_expressions() {
    // choose a minimal generating set of the radical: basis words whose
    // classes form a basis of rad / rad^2
    int n = dim();
    Matrix radsq(field_, 0, n);
    for (int i : radical_)
        for (int j : radical_) {
            if (basis_[j].tgt != basis_[i].src) continue;
            Matrix row(field_, 1, n);
            for (const auto& [k, c] : mult_[i][j]) row.at(0, k) = c;
            radsq = radsq.vstack(row);
        }
    Subspace span = Subspace::span_of_rows(radsq);
    gens_.clear();
    for (int i : radical_) {
        Matrix e(field_, 1, n);
        e.at(0, i) = Scalar::one(field_);
        if (span.contains_vector(e)) continue;
        gens_.push_back({basis_[i].label, basis_[i].src, basis_[i].tgt, i});
        span = span.sum(Subspace::span_of_rows(e));
    }

    // spanning closure: left-multiply generator products by generators until
    // the span of products covers the radical, recording the word sequences
    struct Prod {
        Matrix coords;
        std::vector<int> gens;
        int src, tgt;
    };
    std::vector<Prod> prods;
    Subspace pspan(field_, n);
    auto try_add = [&](Matrix coords, std::vector<int> gseq, int src, int tgt) {
        Matrix row = coords.transpose();
        if (pspan.contains_vector(row)) return;
        pspan = pspan.sum(Subspace::span_of_rows(row));
        prods.push_back({std::move(coords), std::move(gseq), src, tgt});
    };
    for (int g = 0; g < (int)gens_.size(); ++g) {
        Matrix e(field_, n, 1);
        e.at(gens_[g].basis_index, 0) = Scalar::one(field_);
        try_add(std::move(e), {g}, gens_[g].src, gens_[g].tgt);
    }
    for (size_t head = 0; head < prods.size(); ++head) {
        for (int g = 0; g < (int)gens_.size(); ++g) {
            const Prod p = prods[head];  // copy: try_add may reallocate
            if (gens_[g].src != p.tgt) continue;
            Matrix e(field_, n, 1);
            e.at(gens_[g].basis_index, 0) = Scalar::one(field_);
            Matrix coords = multiply(e, p.coords);
            if (coords.is_zero()) continue;
            std::vector<int> gseq;
            gseq.push_back(g);
            gseq.insert(gseq.end(), p.gens.begin(), p.gens.end());
            try_add(std::move(coords), std::move(gseq), p.src, gens_[g].tgt);
        }
    }
    if (pspan.dim() != (int)radical_.size())
        throw Error("internal: generator products do not span the radical");

    // express every basis element through the recorded products
    gen_expr_.assign(n, {});
    for (int v = 0; v < num_vertices(); ++v)
        gen_expr_[idem_[v]] = {{Scalar::one(field_), {}}};
    if (!radical_.empty()) {
        Matrix cols(field_, n, (int)prods.size());
        for (int k = 0; k < (int)prods.size(); ++k)
            for (int i = 0; i < n; ++i) cols.at(i, k) = prods[k].coords.at(i, 0);
        Matrix rhs(field_, n, (int)radical_.size());
        for (int j = 0; j < (int)radical_.size(); ++j)
            rhs.at(radical_[j], j) = Scalar::one(field_);
        auto sol = solve(cols, rhs);
        if (!sol) throw Error("internal: basis element outside product span");
        for (int j = 0; j < (int)radical_.size(); ++j) {
            std::vector<GenExprTerm> expr;
            for (int k = 0; k < (int)prods.size(); ++k) {
                const Scalar& c = sol->at(k, j);
                if (!c.is_zero()) expr.push_back({c, prods[k].gens});
            }
            gen_expr_[radical_[j]] = std::move(expr);
        }
    }
}

Algebra::Corner Algebra::corner(int v) const {
    const std::vector<int>& ids = block(v, v);
    int m = (int)ids.size();
    std::vector<int> pos(dim(), -1);
    for (int i = 0; i < m; ++i) pos[ids[i]] = i;
    std::vector<std::vector<Matrix>> mult(m, std::vector<Matrix>(m, Matrix(field_, m, 1)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Matrix col(field_, m, 1);
            for (const auto& [k, c] : mult_[ids[i]][ids[j]]) {
                if (pos[k] < 0) throw Error("internal: corner not closed");
                col.at(pos[k], 0) = c;
            }
            mult[i][j] = std::move(col);
        }
    return Corner{StructureAlgebra(field_, std::move(mult)), ids};
}

std::vector<Matrix> Algebra::block_as_left_corner_module(int x, int y) const {
    const std::vector<int>& mod = block(x, y);
    const std::vector<int>& cor = block(y, y);
    std::vector<int> pos(dim(), -1);
    for (int i = 0; i < (int)mod.size(); ++i) pos[mod[i]] = i;
    std::vector<Matrix> act;
    for (int g : cor) {
        Matrix m(field_, (int)mod.size(), (int)mod.size());
        for (int j = 0; j < (int)mod.size(); ++j)
            for (const auto& [k, c] : mult_[g][mod[j]]) {
                if (pos[k] < 0) throw Error("internal: block action not closed");
                m.at(pos[k], j) = c;
            }
        act.push_back(std::move(m));
    }
    return act;
}

Algebra::DirectedOrders Algebra::directed_orders() const {
    int n = num_vertices();
    DirectedOrders out;
    out.graph.assign(n, std::vector<bool>(n, false));
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (v != w && !block(v, w).empty()) out.graph[v][w] = true;

    std::vector<int> indeg(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (out.graph[v][w]) ++indeg[w];
    std::vector<int> chain;
    std::vector<bool> used(n, false);
    auto recurse = [&](auto&& self) -> void {
        if ((int)chain.size() == n) {
            out.orders.push_back(LinearOrder::from_ascending(chain));
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v] || indeg[v] != 0) continue;
            used[v] = true;
            chain.push_back(v);
            for (int w = 0; w < n; ++w)
                if (out.graph[v][w]) --indeg[w];
            self(self);
            for (int w = 0; w < n; ++w)
                if (out.graph[v][w]) ++indeg[w];
            chain.pop_back();
            used[v] = false;
        }
    };
    recurse(recurse);
    out.is_directed = !out.orders.empty();
    return out;
}

bool Algebra::order_is_directed(const LinearOrder& order) const {
    for (int v = 0; v < num_vertices(); ++v)
        for (int w = 0; w < num_vertices(); ++w)
            if (v != w && !block(v, w).empty() && !order.less(v, w)) return false;
    return true;
}

}  // namespace quiva
