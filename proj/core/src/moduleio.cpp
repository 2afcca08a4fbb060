#include "quiva/moduleio.hpp"

#include <sstream>

namespace quiva {

std::string write_module_file(const Rep& M) {
    const Algebra& A = *M.A;
    std::ostringstream os;
    os << "module\n";
    os << "dim";
    for (int v = 0; v < A.num_vertices(); ++v)
        os << " " << A.vertex_name(v) << "=" << M.dims[v];
    os << "\n";
    for (size_t g = 0; g < A.generators().size(); ++g) {
        const Matrix& m = M.gen_maps[g];
        os << "map " << A.generators()[g].name << " = [";
        for (int i = 0; i < m.rows(); ++i) {
            os << (i ? ",[" : "[");
            for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m.at(i, j).str();
            os << "]";
        }
        os << "]\n";
    }
    return os.str();
}

namespace {

Matrix parse_matrix(const FieldSpec& f, const std::string& body, int rows, int cols,
                    int line_no) {
    std::string s;
    for (char c : body)
        if (c != ' ' && c != '\t') s += c;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("matrix literal must be bracketed", line_no, 1);
    std::string inner = s.substr(1, s.size() - 2);
    std::vector<std::vector<Scalar>> data;
    size_t at = 0;
    while (at < inner.size()) {
        if (inner[at] == ',') {
            ++at;
            continue;
        }
        if (inner[at] != '[') throw ParseError("expected '[' starting a row", line_no, 1);
        size_t close = inner.find(']', at);
        if (close == std::string::npos)
            throw ParseError("unterminated matrix row", line_no, 1);
        std::string row = inner.substr(at + 1, close - at - 1);
        std::vector<Scalar> entries;
        std::string cur;
        for (char c : row + ",") {
            if (c == ',') {
                if (!cur.empty()) entries.push_back(Scalar::parse(f, cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        data.push_back(std::move(entries));
        at = close + 1;
    }
    if ((int)data.size() != rows)
        throw ParseError("matrix has " + std::to_string(data.size()) + " rows, expected " +
                             std::to_string(rows),
                         line_no, 1);
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i) {
        if ((int)data[i].size() != cols)
            throw ParseError("matrix row has " + std::to_string(data[i].size()) +
                                 " entries, expected " + std::to_string(cols),
                             line_no, 1);
        for (int j = 0; j < cols; ++j) m.at(i, j) = data[i][j];
    }
    return m;
}

}  // namespace

Rep read_module_file(const AlgebraPtr& A, const std::string& text, bool validate) {
    Rep M;
    M.A = A;
    M.dims.assign(A->num_vertices(), 0);
    std::vector<std::optional<std::string>> raw_maps(A->generators().size());
    std::vector<int> map_lines(A->generators().size(), 0);

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool saw_header = false;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw = raw.substr(0, hash);
        std::istringstream ls(raw);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "module") {
            saw_header = true;
        } else if (head == "dim") {
            std::string tok;
            while (ls >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos)
                    throw ParseError("expected <vertex>=<n>", line_no, 1);
                std::string name = tok.substr(0, eq);
                int v = A->vertex_index(name);
                if (v < 0) throw ParseError("unknown vertex '" + name + "'", line_no, 1);
                try {
                    M.dims[v] = std::stoi(tok.substr(eq + 1));
                } catch (const std::exception&) {
                    throw ParseError("bad dimension in '" + tok + "'", line_no, 1);
                }
                if (M.dims[v] < 0) throw ParseError("negative dimension", line_no, 1);
            }
        } else if (head == "map") {
            std::string name, eq;
            if (!(ls >> name >> eq) || eq != "=")
                throw ParseError("expected 'map <arrow> = [[...]]'", line_no, 1);
            int g = -1;
            for (size_t k = 0; k < A->generators().size(); ++k)
                if (A->generators()[k].name == name) g = (int)k;
            if (g < 0) throw ParseError("unknown arrow '" + name + "'", line_no, 1);
            std::string rest;
            std::getline(ls, rest);
            raw_maps[g] = rest;
            map_lines[g] = line_no;
        } else {
            throw ParseError("unknown declaration '" + head + "'", line_no, 1);
        }
    }
    if (!saw_header) throw ParseError("missing 'module' header", 1, 1);

    for (size_t g = 0; g < A->generators().size(); ++g) {
        const auto& gen = A->generators()[g];
        int rows = M.dims[gen.tgt], cols = M.dims[gen.src];
        if (raw_maps[g])
            M.gen_maps.push_back(
                parse_matrix(A->field(), *raw_maps[g], rows, cols, map_lines[g]));
        else
            M.gen_maps.push_back(Matrix(A->field(), rows, cols));
    }
    if (validate && !rep_valid(M))
        throw Error("module file violates the algebra's relations");
    return M;
}

}  // namespace quiva
