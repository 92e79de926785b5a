#pragma once

#include <corona/matrix.hpp>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace corona {

struct Arc {
    int tail = 0;
    int head = 0;
    auto operator<=>(const Arc&) const = default;
};

/// Simple digraph: vertices 0..n-1, no loops, no parallel arcs. The arc
/// list is kept lexicographically sorted by (tail, head), which fixes one
/// canonical representation per digraph. n = 0 is representable; spectral
/// operations reject it.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);
    /// Validates vertex range, forbids loops and duplicates, sorts.
    Digraph(int n, std::vector<Arc> arcs);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    bool has_arc(int tail, int head) const;

    bool operator==(const Digraph&) const = default;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
};

enum class Family { path, cycle, empty, complete };

Family family_from_name(std::string_view name);
std::string_view family_name(Family f);

/// path: arcs i → i+1; cycle: path plus the closing arc (needs n ≥ 2);
/// empty: no arcs; complete: all ordered pairs. Requires n ≥ 1.
Digraph make_family(Family f, int n);

Digraph transpose(const Digraph& d);
/// Arc complement within simple digraphs: A ↦ J − I − A.
Digraph complement(const Digraph& d);
Digraph disjoint_union(const Digraph& a, const Digraph& b);
/// Disjoint union plus all arcs in both directions between the parts.
Digraph join(const Digraph& a, const Digraph& b);
/// One vertex per arc (in canonical order); arc i → j when the head of
/// arc i is the tail of arc j.
Digraph line_digraph(const Digraph& d);

/// Throws std::domain_error when d has no vertices; a single vertex is
/// strongly connected.
bool is_strongly_connected(const Digraph& d);

struct DegreeProfile {
    std::vector<int> out_degrees;
    std::vector<int> in_degrees;
};

struct StructuralPredicates {
    bool is_symmetric = false;     // every arc paired with its reverse
    bool is_tournament = false;    // exactly one arc per unordered pair
    std::optional<int> out_regular;  // common out-degree, when constant
    bool is_bipartite = false;     // underlying graph 2-colorable
    DegreeProfile degrees;
};

StructuralPredicates structural_predicates(const Digraph& d);

/// Undirected edge with endpoints ordered u < v.
struct Edge {
    int u = 0;
    int v = 0;
    auto operator<=>(const Edge&) const = default;
};

/// Underlying simple graph: one edge per adjacent unordered pair, sorted.
struct UnderlyingGraph {
    int n = 0;
    std::vector<Edge> edges;
};

UnderlyingGraph underlying_graph(const Digraph& d);
ExactMatrix graph_adjacency(const UnderlyingGraph& g);
ExactMatrix graph_degree_matrix(const UnderlyingGraph& g);
ExactMatrix graph_laplacian(const UnderlyingGraph& g);
ExactMatrix graph_signless_laplacian(const UnderlyingGraph& g);
/// Throws std::domain_error when g has no vertices.
bool graph_connected(const UnderlyingGraph& g);

/// The spectral trio most operations dispatch on.
enum class MatrixKind { adjacency, laplacian, signless_laplacian };

MatrixKind matrix_kind_from_name(std::string_view name);  // "A" | "L" | "Q"
std::string_view matrix_kind_name(MatrixKind k);

/// Full set of vertex-indexed matrices derivable from a digraph.
enum class DigraphMatrix {
    adjacency,           // A
    laplacian,           // D_out − A
    signless_laplacian,  // D_out + A
    anti_adjacency,      // J − A
    out_degree,          // D_out
    in_degree            // D_in
};

/// Throws std::domain_error when d has no vertices.
ExactMatrix matrix_of(const Digraph& d, DigraphMatrix kind);
ExactMatrix matrix_of(const Digraph& d, MatrixKind kind);

enum class IncidenceKind {
    in_incidence,   // n × m, rows index heads
    out_incidence,  // n × m, rows index tails
    underlying,     // n × m', edges of the underlying graph
    oriented        // n × m', each edge oriented from low to high endpoint
};

/// Columns follow the canonical arc order (in/out) or canonical edge
/// order (underlying/oriented). Throws std::domain_error on n = 0.
ExactMatrix incidence_of(const Digraph& d, IncidenceKind kind);

struct ParseError : std::runtime_error {
    int line_number;
    ParseError(int line_number, const std::string& message);
};

/// Edge-list format: '#' starts a comment line, the first significant
/// line is "n <vertex count>", every following significant line is
/// "<tail> <head>" with 0-based indices. Throws ParseError with the
/// offending line number.
Digraph parse_digraph(std::string_view text);

/// Canonical edge-list form: header line then sorted arcs.
std::string serialize_digraph(const Digraph& d);

/// Graphviz form with numeric vertex ids.
std::string to_dot(const Digraph& d);

}  // namespace corona
