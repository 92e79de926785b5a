#pragma once

#include <corona/charpoly.hpp>
#include <corona/digraph.hpp>
#include <corona/polynomial.hpp>

#include <string>
#include <utility>
#include <vector>

namespace corona {

enum class CoronaOp { vertex, arc };
enum class CoronaDirection { forward, backward, symmetric };

CoronaOp corona_op_from_name(std::string_view name);          // "vertex" | "arc"
std::string_view corona_op_name(CoronaOp op);
CoronaDirection corona_direction_from_name(std::string_view name);  // "fwd" | "bwd" | "sym"
std::string_view corona_direction_name(CoronaDirection dir);

/// Vertex corona: one copy of d2 per vertex of d1. Copy i's vertex k gets
/// index n1 + i + n1·k, so the second block of the adjacency matrix is
/// A(D2) ⊗ I_{n1}. forward adds v_i → w, backward w → v_i, symmetric both,
/// for every vertex w of copy i. Both factors must be nonempty.
Digraph vertex_corona(const Digraph& d1, const Digraph& d2, CoronaDirection dir);

/// Arc corona: one copy of d2 per arc of d1 (forward/backward) or per
/// edge of the underlying graph (symmetric). Copy c's vertex j gets index
/// n1 + c·n2 + j, copies in canonical arc/edge order. For an arc u → v,
/// forward adds u → w and w → v; backward adds v → w and w → u; symmetric
/// joins both endpoints of the edge with every w in both directions.
/// Both factors must be nonempty; with no arcs/edges the result is d1.
Digraph arc_corona(const Digraph& d1, const Digraph& d2, CoronaDirection dir);

/// Number of copies arc_corona attaches: arc count for forward/backward,
/// underlying edge count for symmetric.
int arc_corona_copy_count(const Digraph& d1, CoronaDirection dir);

/// The block matrix [[M1, s·1ᵀ⊗B1], [s·1⊗B2, M2⊗I_r]] with s = ±1,
/// B1 n1×r and B2 r×n1 (assembled literally, for cross-checks).
ExactMatrix assemble_kron_block(const ExactMatrix& m1, const ExactMatrix& m2,
                                const ExactMatrix& b1, const ExactMatrix& b2, int sign);

/// Characteristic polynomial of the block matrix above:
/// f_{M2}(λ)^r · det(λI − M1 − χ_{M2}(λ) B1 B2). The sign cancels. The
/// result is monic of degree n1 + r·n2; r ≥ 1 required.
Polynomial kron_schur_charpoly(const ExactMatrix& m1, const ExactMatrix& m2,
                               const ExactMatrix& b1, const ExactMatrix& b2, int sign = 1);

/// Characteristic polynomial of the symmetric vertex corona for kinds
/// A, L, Q, computed by the closed product formulas (never by building
/// the corona matrix).
Polynomial vertex_corona_charpoly(const Digraph& d1, const Digraph& d2, MatrixKind kind);

/// Exact factored description of a corona spectrum: inherited factors
/// with multiplicities plus one monic quadratic λ² − (sum)λ + (product)
/// per eigenvalue μ of d1's matrix.
struct SpectrumDescription {
    std::vector<std::pair<Polynomial, int>> inherited;
    std::vector<Polynomial> paired;
    /// Product of all factors; equals the corona characteristic polynomial.
    Polynomial expand() const;
};

/// Spectrum of the symmetric vertex corona when d2 is out-regular and
/// strongly connected. Requires the spectrum of d1's matrix to be
/// rational (equivalently: its monic integer characteristic polynomial
/// splits over ℤ); throws std::domain_error otherwise, and when d2 fails
/// its hypotheses.
SpectrumDescription vertex_corona_spectrum_outregular(const Digraph& d1, const Digraph& d2,
                                                      MatrixKind kind);

/// Characteristic polynomial of the arc corona, dispatching over the nine
/// (direction, kind) combinations; computed from the factor data alone.
Polynomial arc_corona_charpoly(const Digraph& d1, const Digraph& d2, CoronaDirection dir,
                               MatrixKind kind);

enum class ClosedFormStatus { ok, no_applicable_corollary, hypothesis_failed };

struct ClosedFormResult {
    ClosedFormStatus status = ClosedFormStatus::no_applicable_corollary;
    Polynomial value;    // meaningful only when status == ok
    std::string detail;  // which form applied, or why none did
};

/// Specialized arc-corona closed forms. Selects the corollary matching
/// (direction, kind) and d1's structure; reports no_applicable_corollary
/// when no corollary targets the combination and hypothesis_failed when
/// one does but d1 violates its hypotheses.
ClosedFormResult arc_corona_charpoly_closed(const Digraph& d1, const Digraph& d2,
                                            CoronaDirection dir, MatrixKind kind);

/// Predicted strong connectivity of the corona, from d1 alone:
/// symmetric vertex and forward arc coronas are strongly connected iff d1
/// is; backward and symmetric arc coronas iff the underlying graph of d1
/// is connected; forward and backward vertex coronas never are.
bool strong_connectivity_prediction(const Digraph& d1, CoronaOp op, CoronaDirection dir);

}  // namespace corona
