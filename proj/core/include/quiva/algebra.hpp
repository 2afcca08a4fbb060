#pragma once

#include <map>
#include <memory>

#include "quiva/presentation.hpp"
#include "quiva/structalg.hpp"

namespace quiva {

/// The finite-dimensional algebra kQ/I (or one of its corner/opposite
/// algebras) as an explicit basis with structure constants. Basis elements of
/// a path algebra are reduced path words picked by length-then-lex
/// elimination; trivial paths are the orthogonal vertex idempotents, and the
/// positive-length words span the radical.
///
/// Instances are immutable and always owned by shared_ptr (construction goes
/// through the factory functions), so representations can share them freely.
class Algebra : public std::enable_shared_from_this<Algebra> {
  public:
    using SparseVec = std::vector<std::pair<int, Scalar>>;

    struct Generator {
        std::string name;
        int src = -1, tgt = -1;
        int basis_index = -1;
    };

    struct BasisElem {
        int src = -1, tgt = -1;
        int length = 0;
        std::string label;
    };

    /// One term of a basis element written in the generators: coeff times the
    /// product gens[0] o gens[1] o ... (rightmost acts first). An empty list
    /// is the idempotent at the element's vertex.
    struct GenExprTerm {
        Scalar coeff;
        std::vector<int> gens;
    };

    struct GenRelationTerm {
        Scalar coeff;
        std::vector<int> gens;
    };
    struct GenRelation {
        std::vector<GenRelationTerm> terms;
    };

    /// Gabriel's construction: basis of reduced words for kQ/I. length_cap 0
    /// picks the default 2*(arrows + vertices) + max relation length.
    /// Throws when no nilpotency degree L with J^L = 0 is certified within
    /// the cap ("not finite-dimensional within cap").
    static std::shared_ptr<const Algebra> build(const Presentation& pres,
                                                int length_cap = 0);

    const FieldSpec& field() const { return field_; }
    int dim() const { return (int)basis_.size(); }
    int num_vertices() const { return (int)vertices_.size(); }
    const std::vector<std::string>& vertex_names() const { return vertices_; }
    const std::string& vertex_name(int v) const { return vertices_[v]; }
    int vertex_index(const std::string& name) const;

    const std::vector<Generator>& generators() const { return gens_; }
    const std::vector<BasisElem>& basis() const { return basis_; }
    int idempotent_index(int v) const { return idem_[v]; }
    const std::vector<int>& block(int src, int tgt) const;
    const std::vector<int>& radical_basis() const { return radical_; }
    /// J^L = 0; L is the certified nilpotency degree of the arrow ideal.
    int nilpotency_degree() const { return nil_degree_; }

    const SparseVec& mult(int i, int j) const { return mult_[i][j]; }
    /// Product of coordinate columns.
    Matrix multiply(const Matrix& a, const Matrix& b) const;
    /// Checks associativity of the table on all basis triples.
    bool table_is_associative() const;

    const std::vector<GenExprTerm>& gen_expression(int basis_index) const {
        return gen_expr_[basis_index];
    }
    const std::vector<GenRelation>& relations() const { return relations_; }

    /// The opposite algebra; lazily built, mutually linked so that
    /// opposite()->opposite() is this exact object.
    std::shared_ptr<const Algebra> opposite() const;

    /// Full subcategory on a vertex subset: same hom spaces between the kept
    /// vertices. Generators are a minimal generating set of its radical.
    std::shared_ptr<const Algebra> full_subcategory(std::vector<int> verts) const;
    /// Vertex map child -> parent (identity for top-level algebras).
    const std::vector<int>& parent_vertex_of() const { return parent_vertex_; }
    const std::vector<int>& parent_basis_of() const { return parent_basis_; }
    const Algebra* parent() const { return parent_.get(); }

    /// Corner algebra A(v,v) with the basis indices that realize it.
    struct Corner {
        StructureAlgebra alg;
        std::vector<int> basis_indices;
    };
    Corner corner(int v) const;

    /// The block A(x,y) as a left module over the corner A(y,y): one action
    /// matrix per corner basis element. Feed to free_module_over_local.
    /// Right-module questions run this on the opposite algebra.
    std::vector<Matrix> block_as_left_corner_module(int x, int y) const;

    struct DirectedOrders {
        std::vector<std::vector<bool>> graph;  // edge v -> w for nonzero A(v,w)
        bool is_directed = false;
        std::vector<LinearOrder> orders;  // all linear extensions when directed
    };
    DirectedOrders directed_orders() const;
    /// Does every nonzero block A(v,w), v != w, go strictly upward?
    bool order_is_directed(const LinearOrder& order) const;

    const Presentation* presentation() const {
        return pres_ ? &*pres_ : nullptr;
    }

  private:
    Algebra() = default;

    FieldSpec field_;
    std::vector<std::string> vertices_;
    std::vector<Generator> gens_;
    std::vector<BasisElem> basis_;
    std::vector<int> idem_;
    std::vector<std::vector<SparseVec>> mult_;
    std::map<std::pair<int, int>, std::vector<int>> blocks_;
    std::vector<int> empty_block_;
    std::vector<int> radical_;
    int nil_degree_ = 1;
    std::vector<std::vector<GenExprTerm>> gen_expr_;
    std::vector<GenRelation> relations_;
    std::optional<Presentation> pres_;

    mutable std::shared_ptr<const Algebra> opposite_;
    std::shared_ptr<const Algebra> parent_;
    std::vector<int> parent_vertex_;
    std::vector<int> parent_basis_;

    void index_blocks();
    void compute_gen_expressions();
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

}  // namespace quiva
