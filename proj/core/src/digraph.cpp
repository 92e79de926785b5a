#include <corona/digraph.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace corona {

Digraph::Digraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("Digraph: negative vertex count");
}

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n < 0) throw std::invalid_argument("Digraph: negative vertex count");
    for (const Arc& a : arcs_) {
        if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
            throw std::invalid_argument("Digraph: arc endpoint out of range");
        if (a.tail == a.head) throw std::invalid_argument("Digraph: loop arc");
    }
    std::sort(arcs_.begin(), arcs_.end());
    if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end())
        throw std::invalid_argument("Digraph: duplicate arc");
}

bool Digraph::has_arc(int tail, int head) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{tail, head});
}

Family family_from_name(std::string_view name) {
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "empty") return Family::empty;
    if (name == "complete") return Family::complete;
    throw std::invalid_argument("unknown family: '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::empty: return "empty";
        case Family::complete: return "complete";
    }
    throw std::logic_error("family_name: bad enum");
}

Digraph make_family(Family f, int n) {
    if (n < 1) throw std::invalid_argument("make_family: needs at least 1 vertex");
    std::vector<Arc> arcs;
    switch (f) {
        case Family::path:
            for (int i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
            break;
        case Family::cycle:
            if (n < 2) throw std::invalid_argument("make_family: cycle needs at least 2 vertices");
            for (int i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
            arcs.push_back({n - 1, 0});
            break;
        case Family::empty:
            break;
        case Family::complete:
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j) arcs.push_back({i, j});
            break;
    }
    return Digraph(n, std::move(arcs));
}

Digraph transpose(const Digraph& d) {
    std::vector<Arc> arcs;
    arcs.reserve(d.arcs().size());
    for (const Arc& a : d.arcs()) arcs.push_back({a.head, a.tail});
    return Digraph(d.vertex_count(), std::move(arcs));
}

Digraph complement(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !d.has_arc(i, j)) arcs.push_back({i, j});
    return Digraph(n, std::move(arcs));
}

Digraph disjoint_union(const Digraph& a, const Digraph& b) {
    const int na = a.vertex_count();
    std::vector<Arc> arcs(a.arcs());
    for (const Arc& e : b.arcs()) arcs.push_back({e.tail + na, e.head + na});
    return Digraph(na + b.vertex_count(), std::move(arcs));
}

Digraph join(const Digraph& a, const Digraph& b) {
    const int na = a.vertex_count();
    const int nb = b.vertex_count();
    std::vector<Arc> arcs(a.arcs());
    for (const Arc& e : b.arcs()) arcs.push_back({e.tail + na, e.head + na});
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            arcs.push_back({i, na + j});
            arcs.push_back({na + j, i});
        }
    return Digraph(na + nb, std::move(arcs));
}

Digraph line_digraph(const Digraph& d) {
    const auto& arcs = d.arcs();
    const int m = static_cast<int>(arcs.size());
    std::vector<Arc> line_arcs;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (arcs[static_cast<std::size_t>(i)].head == arcs[static_cast<std::size_t>(j)].tail)
                line_arcs.push_back({i, j});
    return Digraph(m, std::move(line_arcs));
}

namespace {

std::vector<std::vector<int>> out_lists(const Digraph& d) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(d.vertex_count()));
    for (const Arc& a : d.arcs()) adj[static_cast<std::size_t>(a.tail)].push_back(a.head);
    return adj;
}

int count_reachable(const std::vector<std::vector<int>>& adj, int start) {
    std::vector<char> seen(adj.size(), 0);
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    int count = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++count;
        for (int w : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
    }
    return count;
}

}  // namespace

bool is_strongly_connected(const Digraph& d) {
    const int n = d.vertex_count();
    if (n == 0) throw std::domain_error("is_strongly_connected: empty digraph");
    if (n == 1) return true;
    // Strongly connected iff vertex 0 reaches everything in d and in dᵀ.
    if (count_reachable(out_lists(d), 0) != n) return false;
    return count_reachable(out_lists(transpose(d)), 0) == n;
}

StructuralPredicates structural_predicates(const Digraph& d) {
    const int n = d.vertex_count();
    StructuralPredicates out;
    out.degrees.out_degrees.assign(static_cast<std::size_t>(n), 0);
    out.degrees.in_degrees.assign(static_cast<std::size_t>(n), 0);
    for (const Arc& a : d.arcs()) {
        ++out.degrees.out_degrees[static_cast<std::size_t>(a.tail)];
        ++out.degrees.in_degrees[static_cast<std::size_t>(a.head)];
    }

    out.is_symmetric = true;
    for (const Arc& a : d.arcs())
        if (!d.has_arc(a.head, a.tail)) {
            out.is_symmetric = false;
            break;
        }

    out.is_tournament = true;
    for (int i = 0; i < n && out.is_tournament; ++i)
        for (int j = i + 1; j < n; ++j)
            if (d.has_arc(i, j) == d.has_arc(j, i)) {
                out.is_tournament = false;
                break;
            }

    if (n > 0) {
        const int r = out.degrees.out_degrees[0];
        bool regular = true;
        for (int deg : out.degrees.out_degrees)
            if (deg != r) {
                regular = false;
                break;
            }
        if (regular) out.out_regular = r;
    }

    // 2-color the underlying graph component by component.
    const UnderlyingGraph g = underlying_graph(d);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const Edge& e : g.edges) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    out.is_bipartite = true;
    for (int s = 0; s < n && out.is_bipartite; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty() && out.is_bipartite) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
                    stack.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
                    out.is_bipartite = false;
                    break;
                }
            }
        }
    }
    return out;
}

UnderlyingGraph underlying_graph(const Digraph& d) {
    UnderlyingGraph g;
    g.n = d.vertex_count();
    for (const Arc& a : d.arcs()) {
        if (a.tail < a.head)
            g.edges.push_back({a.tail, a.head});
        else if (!d.has_arc(a.head, a.tail))
            g.edges.push_back({a.head, a.tail});
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

ExactMatrix graph_adjacency(const UnderlyingGraph& g) {
    ExactMatrix m(static_cast<std::size_t>(g.n), static_cast<std::size_t>(g.n));
    for (const Edge& e : g.edges) {
        m(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v)) = 1;
        m(static_cast<std::size_t>(e.v), static_cast<std::size_t>(e.u)) = 1;
    }
    return m;
}

ExactMatrix graph_degree_matrix(const UnderlyingGraph& g) {
    ExactMatrix m(static_cast<std::size_t>(g.n), static_cast<std::size_t>(g.n));
    for (const Edge& e : g.edges) {
        m(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.u)) += 1;
        m(static_cast<std::size_t>(e.v), static_cast<std::size_t>(e.v)) += 1;
    }
    return m;
}

ExactMatrix graph_laplacian(const UnderlyingGraph& g) {
    return graph_degree_matrix(g) - graph_adjacency(g);
}

ExactMatrix graph_signless_laplacian(const UnderlyingGraph& g) {
    return graph_degree_matrix(g) + graph_adjacency(g);
}

bool graph_connected(const UnderlyingGraph& g) {
    if (g.n == 0) throw std::domain_error("graph_connected: empty graph");
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
    for (const Edge& e : g.edges) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    return count_reachable(adj, 0) == g.n;
}

MatrixKind matrix_kind_from_name(std::string_view name) {
    if (name == "A") return MatrixKind::adjacency;
    if (name == "L") return MatrixKind::laplacian;
    if (name == "Q") return MatrixKind::signless_laplacian;
    throw std::invalid_argument("unknown matrix kind: '" + std::string(name) + "' (expected A, L or Q)");
}

std::string_view matrix_kind_name(MatrixKind k) {
    switch (k) {
        case MatrixKind::adjacency: return "A";
        case MatrixKind::laplacian: return "L";
        case MatrixKind::signless_laplacian: return "Q";
    }
    throw std::logic_error("matrix_kind_name: bad enum");
}

ExactMatrix matrix_of(const Digraph& d, DigraphMatrix kind) {
    const int n = d.vertex_count();
    if (n == 0) throw std::domain_error("matrix_of: digraph has no vertices");
    const auto un = static_cast<std::size_t>(n);
    ExactMatrix a(un, un);
    for (const Arc& arc : d.arcs()) a(static_cast<std::size_t>(arc.tail), static_cast<std::size_t>(arc.head)) = 1;
    auto out_degree_matrix = [&] {
        ExactMatrix m(un, un);
        for (const Arc& arc : d.arcs()) m(static_cast<std::size_t>(arc.tail), static_cast<std::size_t>(arc.tail)) += 1;
        return m;
    };
    switch (kind) {
        case DigraphMatrix::adjacency: return a;
        case DigraphMatrix::laplacian: return out_degree_matrix() - a;
        case DigraphMatrix::signless_laplacian: return out_degree_matrix() + a;
        case DigraphMatrix::anti_adjacency: return ExactMatrix::ones(un, un) - a;
        case DigraphMatrix::out_degree: return out_degree_matrix();
        case DigraphMatrix::in_degree: {
            ExactMatrix m(un, un);
            for (const Arc& arc : d.arcs()) m(static_cast<std::size_t>(arc.head), static_cast<std::size_t>(arc.head)) += 1;
            return m;
        }
    }
    throw std::logic_error("matrix_of: bad enum");
}

ExactMatrix matrix_of(const Digraph& d, MatrixKind kind) {
    switch (kind) {
        case MatrixKind::adjacency: return matrix_of(d, DigraphMatrix::adjacency);
        case MatrixKind::laplacian: return matrix_of(d, DigraphMatrix::laplacian);
        case MatrixKind::signless_laplacian: return matrix_of(d, DigraphMatrix::signless_laplacian);
    }
    throw std::logic_error("matrix_of: bad enum");
}

ExactMatrix incidence_of(const Digraph& d, IncidenceKind kind) {
    const int n = d.vertex_count();
    if (n == 0) throw std::domain_error("incidence_of: digraph has no vertices");
    const auto un = static_cast<std::size_t>(n);
    if (kind == IncidenceKind::in_incidence || kind == IncidenceKind::out_incidence) {
        const auto& arcs = d.arcs();
        ExactMatrix m(un, arcs.size());
        for (std::size_t j = 0; j < arcs.size(); ++j) {
            const int v = kind == IncidenceKind::in_incidence ? arcs[j].head : arcs[j].tail;
            m(static_cast<std::size_t>(v), j) = 1;
        }
        return m;
    }
    const UnderlyingGraph g = underlying_graph(d);
    ExactMatrix m(un, g.edges.size());
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        const Edge& e = g.edges[j];
        if (kind == IncidenceKind::underlying) {
            m(static_cast<std::size_t>(e.u), j) = 1;
            m(static_cast<std::size_t>(e.v), j) = 1;
        } else {  // oriented low → high
            m(static_cast<std::size_t>(e.u), j) = 1;
            m(static_cast<std::size_t>(e.v), j) = -1;
        }
    }
    return m;
}

ParseError::ParseError(int line_number, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
      line_number(line_number) {}

Digraph parse_digraph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_number = 0;
    bool have_header = false;
    int n = 0;
    std::vector<Arc> arcs;

    auto parse_int = [](const std::string& token, int& value) {
        if (token.empty()) return false;
        std::size_t pos = 0;
        if (token[0] == '-') pos = 1;
        if (pos == token.size()) return false;
        for (std::size_t i = pos; i < token.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
        try {
            value = std::stoi(token);
        } catch (const std::exception&) {
            return false;
        }
        return true;
    };

    while (std::getline(in, line)) {
        ++line_number;
        std::string_view view(line);
        // Tolerate surrounding whitespace, skip blank and comment lines.
        std::size_t begin = view.find_first_not_of(" \t\r");
        if (begin == std::string_view::npos) continue;
        if (view[begin] == '#') continue;
        std::size_t end = view.find_last_not_of(" \t\r");
        std::istringstream fields{std::string(view.substr(begin, end - begin + 1))};
        std::string first, second, extra;
        fields >> first >> second;
        const bool two_fields = !second.empty() && !(fields >> extra);
        if (!have_header) {
            int count = 0;
            if (first != "n" || !two_fields || !parse_int(second, count) || count < 0)
                throw ParseError(line_number, "malformed header, expected 'n <vertex count>'");
            n = count;
            have_header = true;
            continue;
        }
        int tail = 0, head = 0;
        if (!two_fields || !parse_int(first, tail) || !parse_int(second, head))
            throw ParseError(line_number, "malformed arc line, expected '<tail> <head>'");
        if (tail < 0 || tail >= n)
            throw ParseError(line_number, "tail index " + std::to_string(tail) + " out of range [0, " +
                                              std::to_string(n) + ")");
        if (head < 0 || head >= n)
            throw ParseError(line_number, "head index " + std::to_string(head) + " out of range [0, " +
                                              std::to_string(n) + ")");
        if (tail == head)
            throw ParseError(line_number, "loop arc " + std::to_string(tail) + " -> " + std::to_string(head));
        for (const Arc& a : arcs)
            if (a.tail == tail && a.head == head)
                throw ParseError(line_number,
                                 "duplicate arc " + std::to_string(tail) + " -> " + std::to_string(head));
        arcs.push_back({tail, head});
    }
    if (!have_header) throw ParseError(line_number == 0 ? 1 : line_number, "missing 'n <vertex count>' header");
    return Digraph(n, std::move(arcs));
}

std::string serialize_digraph(const Digraph& d) {
    std::ostringstream os;
    os << "n " << d.vertex_count() << "\n";
    for (const Arc& a : d.arcs()) os << a.tail << " " << a.head << "\n";
    return os.str();
}

std::string to_dot(const Digraph& d) {
    std::ostringstream os;
    os << "digraph {\n";
    for (int v = 0; v < d.vertex_count(); ++v) os << "  " << v << ";\n";
    for (const Arc& a : d.arcs()) os << "  " << a.tail << " -> " << a.head << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace corona
