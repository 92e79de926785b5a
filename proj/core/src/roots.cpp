#include <corona/roots.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace corona {

namespace {

std::complex<double> horner(const std::vector<std::complex<double>>& coeffs,
                            std::complex<double> z) {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

struct EvalWithBound {
    std::complex<double> value;
    /// Σ |c_k| |z|^k — scales the floating-point noise floor of `value`.
    double magnitude;
};

EvalWithBound horner_with_bound(const std::vector<std::complex<double>>& coeffs,
                                std::complex<double> z) {
    std::complex<double> acc(0.0, 0.0);
    double mag = 0.0;
    const double az = std::abs(z);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * z + *it;
        mag = mag * az + std::abs(*it);
    }
    return {acc, mag};
}

/// Aberth–Ehrlich simultaneous iteration on a square-free polynomial given by
/// ascending coefficients. All roots are simple by construction, which is the
/// regime where the iteration converges cubically.
std::vector<std::complex<double>> aberth_roots(const std::vector<std::complex<double>>& coeffs) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    std::vector<std::complex<double>> deriv(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        deriv[static_cast<std::size_t>(k - 1)] =
            coeffs[static_cast<std::size_t>(k)] * static_cast<double>(k);

    // Fujiwara's bound 2·max_k |c_{n-k}/c_n|^{1/k} stays close to the true
    // root magnitudes even when the raw coefficient ratios are huge (for a
    // product of linear factors the ratios grow combinatorially while the
    // roots themselves stay small).
    const double top = std::abs(coeffs.back());
    double bound = 0.0;
    for (int k = 0; k < n; ++k) {
        const double ratio = std::abs(coeffs[static_cast<std::size_t>(k)]) / top;
        bound = std::max(bound, std::pow(ratio, 1.0 / static_cast<double>(n - k)));
    }
    const double radius = std::max(1e-3, 2.0 * bound);

    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        // Irregular angular offset so symmetric polynomials do not start on a
        // symmetry axis of their own root set.
        const double angle = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.31) /
                             static_cast<double>(n);
        z[static_cast<std::size_t>(k)] =
            0.7 * radius * std::complex<double>(std::cos(angle), std::sin(angle));
    }

    // A point is frozen once |p(z)| falls below the round-off floor of the
    // Horner evaluation itself; past that the residual is pure noise and no
    // step criterion can improve the estimate.  Higham bounds the evaluation
    // error by ~2n·eps·Σ|c_k||z|^k; the extra slack keeps the test cheap.
    const double noise_factor =
        (4.0 * static_cast<double>(n) + 4.0) * std::numeric_limits<double>::epsilon();
    std::vector<bool> frozen(static_cast<std::size_t>(n), false);

    constexpr int max_iterations = 2000;
    for (int iter = 0; iter < max_iterations; ++iter) {
        double worst = 0.0;
        bool all_frozen = true;
        for (int k = 0; k < n; ++k) {
            if (frozen[static_cast<std::size_t>(k)]) continue;
            const std::complex<double> zk = z[static_cast<std::size_t>(k)];
            const auto [pv, magnitude] = horner_with_bound(coeffs, zk);
            const bool at_noise_floor = std::abs(pv) <= noise_factor * magnitude;
            const std::complex<double> dv = horner(deriv, zk);
            std::complex<double> w;
            if (dv == std::complex<double>(0.0, 0.0)) {
                w = std::complex<double>(0.0, 0.0);
            } else {
                w = pv / dv;
            }
            std::complex<double> repulsion(0.0, 0.0);
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                const std::complex<double> diff = zk - z[static_cast<std::size_t>(j)];
                if (diff == std::complex<double>(0.0, 0.0)) continue;
                repulsion += 1.0 / diff;
            }
            const std::complex<double> denom = 1.0 - w * repulsion;
            std::complex<double> step = denom == std::complex<double>(0.0, 0.0) ? w : w / denom;
            if (dv == std::complex<double>(0.0, 0.0) && pv != std::complex<double>(0.0, 0.0)) {
                // Derivative vanished away from a root: nudge off the bad spot.
                step = std::complex<double>(1e-6 * (1.0 + std::abs(zk)), 1e-6);
            }
            if (at_noise_floor) {
                // One last correction squeezes out the final ulp, but a large
                // step computed from a noise-level residual is itself noise.
                if (std::abs(step) <= 1e-8 * (1.0 + std::abs(zk)))
                    z[static_cast<std::size_t>(k)] = zk - step;
                frozen[static_cast<std::size_t>(k)] = true;
                continue;
            }
            all_frozen = false;
            z[static_cast<std::size_t>(k)] = zk - step;
            worst = std::max(worst, std::abs(step) / (1.0 + std::abs(zk)));
        }
        if (all_frozen || worst < 1e-14) return z;
    }
    throw std::runtime_error("numeric_roots: root iteration did not converge");
}

/// The factors handed to the iteration always have real coefficients, so
/// non-real roots occur in exact conjugate pairs — but round-off perturbs each
/// half of a pair independently, leaving e.g. real parts that differ in the
/// last ulp and therefore sort in an arbitrary order. Snap near-real roots
/// onto the axis and average each remaining root with its partner's conjugate
/// so the symmetry is restored bit-for-bit.
void symmetrize_real_coefficient_roots(std::vector<std::complex<double>>& roots) {
    constexpr double pair_tolerance = 1e-8;
    std::vector<bool> placed(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (std::abs(roots[i].imag()) <= pair_tolerance * (1.0 + std::abs(roots[i]))) {
            roots[i].imag(0.0);
            placed[i] = true;
        }
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (placed[i]) continue;
        placed[i] = true;
        std::size_t partner = roots.size();
        double best = pair_tolerance * (1.0 + std::abs(roots[i]));
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (placed[j]) continue;
            const double distance = std::abs(roots[j] - std::conj(roots[i]));
            if (distance <= best) {
                best = distance;
                partner = j;
            }
        }
        if (partner == roots.size()) continue;
        placed[partner] = true;
        const std::complex<double> mean = 0.5 * (roots[i] + std::conj(roots[partner]));
        roots[i] = mean;
        roots[partner] = std::conj(mean);
    }
}

}  // namespace

std::vector<RootCluster> numeric_roots(const Polynomial& p, double tolerance) {
    if (p.is_zero()) throw std::domain_error("numeric_roots: the zero polynomial has no roots");
    if (tolerance < 0.0) throw std::invalid_argument("numeric_roots: tolerance must be ≥ 0");

    std::vector<RootCluster> clusters;
    for (const auto& [factor, multiplicity] : square_free_decomposition(p)) {
        if (factor.degree() < 1) continue;
        std::vector<std::complex<double>> coeffs;
        coeffs.reserve(static_cast<std::size_t>(factor.degree()) + 1);
        for (const Rational& c : factor.coeffs()) coeffs.emplace_back(c.get_d(), 0.0);
        std::vector<std::complex<double>> roots = aberth_roots(coeffs);
        symmetrize_real_coefficient_roots(roots);
        for (const std::complex<double>& root : roots) clusters.push_back({root, multiplicity});
    }

    // Square-free factors are pairwise coprime, so exact roots never repeat
    // across factors; merging here only collapses locations that are
    // numerically indistinguishable at the requested tolerance.
    std::sort(clusters.begin(), clusters.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    std::vector<RootCluster> merged;
    for (const RootCluster& c : clusters) {
        if (!merged.empty() &&
            std::abs(merged.back().value - c.value) <=
                tolerance * std::max(1.0, std::abs(c.value))) {
            merged.back().multiplicity += c.multiplicity;
        } else {
            merged.push_back(c);
        }
    }
    return merged;
}

bool all_roots_real(const Polynomial& p, double imag_tolerance) {
    for (const RootCluster& c : numeric_roots(p))
        if (std::abs(c.value.imag()) > imag_tolerance) return false;
    return true;
}

}  // namespace corona
