#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quiva/field.hpp"

namespace quiva {

struct ParseError : Error {
    ParseError(const std::string& msg, int line, int col)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(col) +
                ": " + msg),
          line(line), col(col) {}
    int line, col;
};

struct Quiver {
    std::vector<std::string> vertices;
    struct Arrow {
        std::string name;
        int src = -1, tgt = -1;
    };
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& name) const;  // -1 if unknown
    int arrow_index(const std::string& name) const;
};

/// A path in the quiver. Arrows are stored in label order a1*a2*...*am with
/// composition right to left: a_m is applied first, so src = src(a_m) and
/// tgt = tgt(a_1). An empty arrow list is the trivial path at a vertex.
struct PathWord {
    int src = -1, tgt = -1;
    std::vector<int> arrows;

    bool trivial() const { return arrows.empty(); }
    int length() const { return (int)arrows.size(); }
    std::string label(const Quiver& q) const;

    static PathWord trivial_at(int v) { return PathWord{v, v, {}}; }
    /// Builds from an arrow index sequence, checking composability.
    static PathWord from_arrows(const Quiver& q, const std::vector<int>& arrows);

    friend bool operator==(const PathWord&, const PathWord&) = default;
};

/// One relation: a k-linear combination of parallel paths, each of length at
/// least two (admissibility), declared equal to zero.
struct RelationElem {
    struct Term {
        Scalar coeff;
        PathWord word;
        friend bool operator==(const Term&, const Term&) = default;
    };
    std::vector<Term> terms;

    int src() const { return terms.empty() ? -1 : terms.front().word.src; }
    int tgt() const { return terms.empty() ? -1 : terms.front().word.tgt; }

    friend bool operator==(const RelationElem&, const RelationElem&) = default;
};

/// A total order on the vertices, stored as vertex -> rank.
struct LinearOrder {
    std::vector<int> rank;

    bool less(int v, int w) const { return rank[v] < rank[w]; }
    /// Vertices sorted from minimal to maximal.
    std::vector<int> ascending() const;
    std::string str(const Quiver& q) const;

    static LinearOrder from_ascending(const std::vector<int>& verts);
    /// Parses "x < y < z" (or "x<y<z") against the quiver's vertex names.
    static LinearOrder parse(const Quiver& q, const std::string& text);

    friend bool operator==(const LinearOrder&, const LinearOrder&) = default;
};

struct Presentation {
    FieldSpec field;
    Quiver quiver;
    std::vector<RelationElem> relations;
    std::optional<LinearOrder> declared_order;

    friend bool operator==(const Presentation& a, const Presentation& b);
};

/// Parses the quiver file format:
///   field Q            (or field F<p>; defaults to Q)
///   vertex x y ...
///   arrow a: x -> y
///   rel <term> [+-] <term> ...     term = [coeff] a1*a2*...*am
///   order x < y < ...
/// '#' starts a comment; '*' composes right to left (g*a means a, then g).
Presentation parse_presentation(const std::string& text);

/// Canonical serialization; parse(serialize(p)) == p.
std::string serialize(const Presentation& p);

/// The same presentation with its coefficients coerced into another field
/// (used by the --field override; reduction mod p must be well defined).
Presentation with_field(const Presentation& p, const FieldSpec& f);

}  // namespace quiva
