#pragma once

#include <corona/charpoly.hpp>
#include <corona/digraph.hpp>
#include <corona/rational_function.hpp>

#include <string>
#include <utility>
#include <vector>

namespace corona {

/// Coronal of any matrix with constant row sum t: n / (λ − t).
RationalFunction coronal_constant_rowsum(int n, const Rational& t);

/// Coronal of aM + bJ + cI from the coronal χ of M (a ≠ 0):
/// χ((λ−c)/a) / (a − b χ((λ−c)/a)).
RationalFunction coronal_affine(const RationalFunction& chi, const Rational& a, const Rational& b,
                                const Rational& c);

/// Characteristic polynomial of aM + bJ + cI from f and χ of M (a ≠ 0,
/// f monic of degree n ≥ 1): a^{n-1} f((λ−c)/a) (a − b χ((λ−c)/a)).
Polynomial charpoly_affine(const Polynomial& f, const RationalFunction& chi, const Rational& a,
                           const Rational& b, const Rational& c);

/// Coronal of the complement digraph from the coronal of the original;
/// kinds A and Q only (the Laplacian coronal is n/λ on both sides).
RationalFunction complement_coronal(const RationalFunction& chi, int n, MatrixKind kind);

/// Characteristic polynomial of the complement digraph. chi is the
/// coronal of the original matrix for kinds A and Q and is ignored for L.
Polynomial complement_charpoly(const Polynomial& f, const RationalFunction& chi, int n,
                               MatrixKind kind);

/// Specialization for r-out-regular digraphs; kinds A and Q. The rational
/// prefactor divides exactly.
Polynomial complement_charpoly_outregular(const Polynomial& f, int n, int r, MatrixKind kind);

/// A partition of the rows of a square matrix such that every block has
/// constant row sums into every block; quotient(i, j) holds that sum.
struct EquitablePartition {
    std::vector<std::vector<int>> blocks;
    ExactMatrix quotient;
};

/// Validates the partition against m and computes the quotient. The error
/// message of the thrown std::invalid_argument names the first violating
/// vertex and block.
EquitablePartition make_equitable_partition(const ExactMatrix& m,
                                            std::vector<std::vector<int>> blocks);

/// Coronal through the quotient: [|B_1| ... |B_k|] (λI − R)⁻¹ 1.
RationalFunction coronal_equitable(const EquitablePartition& partition);

/// Closed form of coronal_equitable for k = 2 with quotient
/// [[r11, r12], [r21, r22]] and block sizes n1, n2.
RationalFunction coronal_quotient2(int n1, int n2, const Rational& r11, const Rational& r12,
                                   const Rational& r21, const Rational& r22);

/// Coronal of the join of out-regular digraphs given (n_i, r_i) pairs;
/// kinds A and Q.
RationalFunction coronal_join_outregular(const std::vector<std::pair<int, int>>& parts,
                                         MatrixKind kind);

/// Bipartite digraph, V1 → V2 out-degree r1 on every V1 vertex and
/// V2 → V1 out-degree r2 on every V2 vertex; kinds A and Q.
RationalFunction coronal_semiregular_bipartite(int n1, int n2, int r1, int r2, MatrixKind kind);

/// Bipartite digraph whose V1 side is complete towards V2 (out-degree n2
/// everywhere) while the V2 side sends k arcs back in total; kind A:
/// ((n1+n2)λ + k + n1 n2) / (λ² − k).
RationalFunction coronal_fullside_bipartite(int n1, int n2, int k);

/// Coronal of the directed path on n vertices; kinds A and Q.
RationalFunction coronal_path(int n, MatrixKind kind);

/// Tagged numeric parameters for the closed-form families, the shape the
/// CLI accepts. Parameter layout per family:
///   constant-rowsum:        n, t
///   quotient2:              n1, n2, r11, r12, r21, r22
///   join:                   n1, r1 [, n2, r2 ...]
///   semiregular-bipartite:  n1, n2, r1, r2
///   fullside-bipartite:     n1, n2, k
///   path:                   n
struct FamilySpec {
    std::string family;
    std::vector<Rational> params;
};

RationalFunction coronal_family(const FamilySpec& spec, MatrixKind kind);

}  // namespace corona
