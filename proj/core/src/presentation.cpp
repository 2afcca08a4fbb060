#include "quiva/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace quiva {

int Quiver::vertex_index(const std::string& name) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return (int)i;
    return -1;
}

int Quiver::arrow_index(const std::string& name) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return (int)i;
    return -1;
}

std::string PathWord::label(const Quiver& q) const {
    if (trivial()) return "e_" + q.vertices[src];
    std::string s;
    for (size_t i = 0; i < arrows.size(); ++i) {
        if (i) s += "*";
        s += q.arrows[arrows[i]].name;
    }
    return s;
}

PathWord PathWord::from_arrows(const Quiver& q, const std::vector<int>& arrows) {
    if (arrows.empty()) throw Error("empty arrow sequence needs a vertex");
    for (size_t i = 0; i + 1 < arrows.size(); ++i)
        if (q.arrows[arrows[i]].src != q.arrows[arrows[i + 1]].tgt)
            throw Error("non-composable arrow sequence");
    return PathWord{q.arrows[arrows.back()].src, q.arrows[arrows.front()].tgt, arrows};
}

std::vector<int> LinearOrder::ascending() const {
    std::vector<int> v(rank.size());
    for (size_t i = 0; i < rank.size(); ++i) v[rank[i]] = (int)i;
    return v;
}

std::string LinearOrder::str(const Quiver& q) const {
    std::string s;
    for (int v : ascending()) {
        if (!s.empty()) s += " < ";
        s += q.vertices[v];
    }
    return s;
}

LinearOrder LinearOrder::from_ascending(const std::vector<int>& verts) {
    LinearOrder o;
    o.rank.assign(verts.size(), -1);
    for (size_t r = 0; r < verts.size(); ++r) {
        if (verts[r] < 0 || verts[r] >= (int)verts.size() || o.rank[verts[r]] != -1)
            throw Error("order is not a permutation of the vertices");
        o.rank[verts[r]] = (int)r;
    }
    return o;
}

LinearOrder LinearOrder::parse(const Quiver& q, const std::string& text) {
    std::vector<int> verts;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) return;
        int v = q.vertex_index(cur);
        if (v < 0) throw Error("unknown vertex '" + cur + "' in order");
        verts.push_back(v);
        cur.clear();
    };
    for (char c : text) {
        if (c == '<' || c == ' ' || c == '\t')
            flush();
        else
            cur += c;
    }
    flush();
    if (verts.size() != q.vertices.size())
        throw Error("order must list every vertex exactly once");
    return from_ascending(verts);
}

bool operator==(const Presentation& a, const Presentation& b) {
    if (!(a.field == b.field) || a.quiver.vertices != b.quiver.vertices)
        return false;
    if (a.quiver.arrows.size() != b.quiver.arrows.size()) return false;
    for (size_t i = 0; i < a.quiver.arrows.size(); ++i) {
        const auto& x = a.quiver.arrows[i];
        const auto& y = b.quiver.arrows[i];
        if (x.name != y.name || x.src != y.src || x.tgt != y.tgt) return false;
    }
    return a.relations == b.relations && a.declared_order == b.declared_order;
}

namespace {

struct Line {
    int number;
    std::vector<std::pair<std::string, int>> tokens;  // token, column
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::string cur;
        int col = 0, start = 0;
        auto flush = [&]() {
            if (!cur.empty()) line.tokens.push_back({cur, start + 1});
            cur.clear();
        };
        for (char c : raw) {
            ++col;
            if (c == ' ' || c == '\t' || c == '\r') {
                flush();
            } else if (c == ':' || c == '<' || c == '>' || c == '+' || c == '-') {
                flush();
                line.tokens.push_back({std::string(1, c), col});
            } else {
                if (cur.empty()) start = col - 1;
                cur += c;
            }
        }
        flush();
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

bool is_integer(const std::string& t) {
    if (t.empty()) return false;
    for (size_t i = 0; i < t.size(); ++i) {
        if (!(t[i] >= '0' && t[i] <= '9') && !(t[i] == '/' && i > 0)) return false;
    }
    return true;
}

// "a1*a2*...*am" -> arrow indices; throws ParseError on unknown arrows
PathWord parse_word(const Quiver& q, const std::string& tok, int line, int col) {
    std::vector<int> arrows;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) throw ParseError("empty factor in path word", line, col);
        int a = q.arrow_index(cur);
        if (a < 0) {
            if (q.vertex_index(cur) >= 0)
                throw ParseError("trivial paths are not allowed in relations (term of length < 2)",
                                 line, col);
            throw ParseError("unknown arrow '" + cur + "'", line, col);
        }
        arrows.push_back(a);
        cur.clear();
    };
    for (char c : tok) {
        if (c == '*')
            flush();
        else
            cur += c;
    }
    flush();
    for (size_t i = 0; i + 1 < arrows.size(); ++i)
        if (q.arrows[arrows[i]].src != q.arrows[arrows[i + 1]].tgt)
            throw ParseError("arrows '" + q.arrows[arrows[i + 1]].name + "' and '" +
                                 q.arrows[arrows[i]].name + "' do not compose",
                             line, col);
    return PathWord::from_arrows(q, arrows);
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    bool field_seen = false;
    struct RawRel {
        std::vector<std::pair<std::string, std::string>> terms;  // sign/coeff, word
        std::vector<int> cols;
        int line;
    };
    std::vector<RawRel> raw_rels;
    std::optional<std::pair<std::string, int>> raw_order;

    for (const Line& line : tokenize(text)) {
        const auto& toks = line.tokens;
        const std::string& head = toks[0].first;
        auto err = [&](const std::string& msg, int idx) -> ParseError {
            int col = idx < (int)toks.size() ? toks[idx].second : 1;
            return ParseError(msg, line.number, col);
        };
        if (head == "field") {
            if (toks.size() != 2) throw err("expected 'field Q' or 'field F<p>'", 1);
            const std::string& f = toks[1].first;
            if (f == "Q")
                p.field = FieldSpec::rationals();
            else if (f.size() > 1 && f[0] == 'F') {
                unsigned mod = 0;
                for (size_t i = 1; i < f.size(); ++i) {
                    if (f[i] < '0' || f[i] > '9') throw err("bad field '" + f + "'", 1);
                    mod = mod * 10 + (f[i] - '0');
                }
                try {
                    p.field = FieldSpec::prime(mod);
                } catch (const Error& e) {
                    throw err(e.what(), 1);
                }
            } else
                throw err("bad field '" + f + "'", 1);
            field_seen = true;
        } else if (head == "vertex") {
            if (toks.size() < 2) throw err("vertex line needs at least one name", 0);
            for (size_t i = 1; i < toks.size(); ++i) {
                const std::string& name = toks[i].first;
                if (p.quiver.vertex_index(name) >= 0 || p.quiver.arrow_index(name) >= 0)
                    throw err("duplicate name '" + name + "'", (int)i);
                p.quiver.vertices.push_back(name);
            }
        } else if (head == "arrow") {
            // tokenized as: arrow name : src - > tgt
            if (toks.size() != 7 || toks[2].first != ":" || toks[4].first != "-" ||
                toks[5].first != ">")
                throw err("expected 'arrow <name>: <src> -> <tgt>'", 0);
            std::string name = toks[1].first;
            std::string src = toks[3].first;
            std::string tgt = toks[6].first;
            if (p.quiver.vertex_index(name) >= 0 || p.quiver.arrow_index(name) >= 0)
                throw err("duplicate name '" + name + "'", 1);
            int s = p.quiver.vertex_index(src), t = p.quiver.vertex_index(tgt);
            if (s < 0) throw err("unknown vertex '" + src + "'", 3);
            if (t < 0) throw err("unknown vertex '" + tgt + "'", 5);
            p.quiver.arrows.push_back({name, s, t});
        } else if (head == "rel") {
            if (toks.size() < 2) throw err("empty relation", 0);
            RawRel rel;
            rel.line = line.number;
            std::string sign = "+";
            std::string coeff;
            bool expect_term = true;
            for (size_t i = 1; i < toks.size(); ++i) {
                const std::string& t = toks[i].first;
                if (t == "+" || t == "-") {
                    if (expect_term && i != 1) throw err("misplaced sign", (int)i);
                    sign = t;
                    coeff.clear();
                    expect_term = true;
                } else if (is_integer(t)) {
                    if (!expect_term || !coeff.empty()) throw err("misplaced coefficient", (int)i);
                    coeff = t;
                } else {
                    if (!expect_term) throw err("missing sign between terms", (int)i);
                    std::string c = coeff.empty() ? "1" : coeff;
                    rel.terms.push_back({sign + c, t});
                    rel.cols.push_back(toks[i].second);
                    sign = "+";
                    coeff.clear();
                    expect_term = false;
                }
            }
            if (expect_term || !coeff.empty()) throw err("dangling sign or coefficient", (int)toks.size() - 1);
            raw_rels.push_back(std::move(rel));
        } else if (head == "order") {
            std::string rest;
            for (size_t i = 1; i < toks.size(); ++i) {
                if (toks[i].first == "<") continue;
                if (!rest.empty()) rest += "<";
                rest += toks[i].first;
            }
            raw_order = {rest, line.number};
        } else {
            throw err("unknown declaration '" + head + "'", 0);
        }
    }
    (void)field_seen;

    for (const RawRel& raw : raw_rels) {
        RelationElem rel;
        for (size_t i = 0; i < raw.terms.size(); ++i) {
            Scalar c = Scalar::parse(p.field, raw.terms[i].first);
            PathWord w = parse_word(p.quiver, raw.terms[i].second, raw.line, raw.cols[i]);
            if (w.length() < 2)
                throw ParseError("relation term of length < 2 (ideal must be admissible)",
                                 raw.line, raw.cols[i]);
            rel.terms.push_back({c, w});
        }
        for (const auto& t : rel.terms)
            if (t.word.src != rel.src() || t.word.tgt != rel.tgt())
                throw ParseError("non-parallel terms in relation", raw.line, raw.cols[0]);
        p.relations.push_back(std::move(rel));
    }
    if (raw_order) {
        try {
            p.declared_order = LinearOrder::parse(p.quiver, raw_order->first);
        } catch (const Error& e) {
            throw ParseError(e.what(), raw_order->second, 1);
        }
    }
    return p;
}

std::string serialize(const Presentation& p) {
    std::ostringstream os;
    os << "field " << p.field.name() << "\n";
    if (!p.quiver.vertices.empty()) {
        os << "vertex";
        for (const auto& v : p.quiver.vertices) os << " " << v;
        os << "\n";
    }
    for (const auto& a : p.quiver.arrows)
        os << "arrow " << a.name << ": " << p.quiver.vertices[a.src] << " -> "
           << p.quiver.vertices[a.tgt] << "\n";
    for (const auto& rel : p.relations) {
        os << "rel";
        for (size_t i = 0; i < rel.terms.size(); ++i) {
            const auto& t = rel.terms[i];
            Scalar c = t.coeff;
            std::string cs = c.str();
            bool negative = !cs.empty() && cs[0] == '-';
            if (i == 0) {
                if (negative) os << " -";
            } else {
                os << (negative ? " -" : " +");
            }
            std::string mag = negative ? cs.substr(1) : cs;
            if (mag != "1") os << " " << mag;
            os << " " << t.word.label(p.quiver);
        }
        os << "\n";
    }
    if (p.declared_order) os << "order " << p.declared_order->str(p.quiver) << "\n";
    return os.str();
}

Presentation with_field(const Presentation& p, const FieldSpec& f) {
    Presentation q = p;
    q.field = f;
    for (auto& rel : q.relations)
        for (auto& t : rel.terms) {
            if (t.coeff.field() == f) continue;
            t.coeff = t.coeff.field().is_rational()
                          ? Scalar(f, t.coeff.rational())
                          : Scalar(f, t.coeff.residue());
        }
    return q;
}

}  // namespace quiva
