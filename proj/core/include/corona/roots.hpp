#pragma once

#include <complex>
#include <vector>

#include <corona/polynomial.hpp>

namespace corona {

/// One numeric root location together with its exact algebraic multiplicity.
struct RootCluster {
    std::complex<double> value;
    int multiplicity = 0;
};

/// Numeric roots of a nonzero polynomial with exact multiplicities.
///
/// The multiplicity structure is computed exactly (square-free decomposition
/// over ℚ), so repeated roots are never smeared into nearby simple ones; only
/// the root locations themselves are floating point. Roots whose locations
/// end up within `tolerance` of each other are merged into a single cluster
/// with summed multiplicity. Results are sorted by real part, then imaginary
/// part.
///
/// Throws std::domain_error for the zero polynomial and std::runtime_error if
/// the iteration fails to converge.
std::vector<RootCluster> numeric_roots(const Polynomial& p, double tolerance = 1e-8);

/// True when every root of `p` is real within `imag_tolerance`.
bool all_roots_real(const Polynomial& p, double imag_tolerance = 1e-9);

}  // namespace corona
