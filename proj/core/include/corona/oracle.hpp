#pragma once

#include <cstdint>

#include <corona/charpoly.hpp>
#include <corona/digraph.hpp>
#include <corona/matrix.hpp>
#include <corona/rational_function.hpp>

namespace corona::oracle {

/// Characteristic polynomial by the Berkowitz vector method.
///
/// Division-free and structurally unrelated to the Faddeev–LeVerrier trace
/// recurrence used by `corona::charpoly`, so the two act as independent
/// cross-checks of each other.
Polynomial oracle_charpoly(const ExactMatrix& m);

/// Coronal 1ᵀ(λI − M)⁻¹1 computed entry by entry from cofactors.
///
/// Every cofactor of λI − M is expanded by Laplace recursion over ℚ[λ]
/// (organised as a subset dynamic program over column sets), sharing no code
/// with the adjugate-series route used by `corona::coronal`. Exponential in
/// the matrix order; rejects matrices larger than 9×9.
RationalFunction oracle_coronal(const ExactMatrix& m);

/// Deterministic pseudo-random simple digraph on `n` vertices.
///
/// Each ordered pair (u, v), u ≠ v, becomes an arc independently with the
/// given density, decided by a counter-based hash of (seed, u, v); the same
/// arguments always produce the same digraph on every platform.
Digraph random_digraph(std::uint64_t seed, int n, double density);

}  // namespace corona::oracle
