#pragma once

#include <corona/matrix.hpp>
#include <corona/polynomial.hpp>
#include <corona/rational_function.hpp>

#include <vector>

namespace corona {

/// Characteristic polynomial det(λI − M) together with the adjugate of
/// λI − M: adj(λI − M) = Σ_k coeff_matrices[k] λ^{n-1-k}.
struct CharpolyResult {
    Polynomial charpoly;
    std::vector<ExactMatrix> adjugate_coeffs;
};

/// Faddeev–LeVerrier iteration. Exact over rationals, O(n) matrix products.
CharpolyResult charpoly_with_adjugate(const ExactMatrix& m);

/// Monic characteristic polynomial det(λI − M), degree n.
Polynomial charpoly(const ExactMatrix& m);

/// Coronal: the rational function 1ᵀ (λI − M)⁻¹ 1, reduced. Its
/// denominator divides the characteristic polynomial.
RationalFunction coronal(const ExactMatrix& m);

/// det [[m1, m2], [m3, m4]] computed as det(m4) det(m1 − m2 m4⁻¹ m3);
/// throws std::domain_error when m4 is singular.
RationalFunction schur_block_det(const RatFuncMatrix& m1, const RatFuncMatrix& m2,
                                 const RatFuncMatrix& m3, const RatFuncMatrix& m4);

/// det(C + α J) computed as det(C) (1 + α 1ᵀ C⁻¹ 1); C must be invertible.
RationalFunction rank_one_update_det(const RatFuncMatrix& c, const RationalFunction& alpha);

/// (C + α J)⁻¹ computed as C⁻¹ − α C⁻¹ J C⁻¹ / (1 + α 1ᵀ C⁻¹ 1); throws
/// std::domain_error when C or the update factor is singular.
RatFuncMatrix rank_one_update_inverse(const RatFuncMatrix& c, const RationalFunction& alpha);

}  // namespace corona
