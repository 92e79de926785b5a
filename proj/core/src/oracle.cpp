#include <corona/oracle.hpp>

#include <bit>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace corona::oracle {

Polynomial oracle_charpoly(const ExactMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("oracle_charpoly: matrix must be square");
    const std::size_t n = m.rows();
    // Descending coefficient vector of the current principal submatrix.
    std::vector<Rational> c{Rational(1)};
    for (std::size_t r = 1; r <= n; ++r) {
        // Samuelson step: q holds (1, −a, −R·S, −R·M·S, …) for the order-r
        // leading principal submatrix, with a the new diagonal entry, R the
        // new row, S the new column and M the previous principal block.
        std::vector<Rational> q(r + 1, Rational(0));
        q[0] = 1;
        q[1] = -m(r - 1, r - 1);
        if (r >= 2) {
            std::vector<Rational> vec(r - 1);
            for (std::size_t i = 0; i + 1 < r; ++i) vec[i] = m(i, r - 1);
            for (std::size_t k = 2; k <= r; ++k) {
                Rational dot(0);
                for (std::size_t i = 0; i + 1 < r; ++i) dot += m(r - 1, i) * vec[i];
                q[k] = -dot;
                if (k < r) {
                    std::vector<Rational> next(r - 1, Rational(0));
                    for (std::size_t i = 0; i + 1 < r; ++i)
                        for (std::size_t j = 0; j + 1 < r; ++j) next[i] += m(i, j) * vec[j];
                    vec = std::move(next);
                }
            }
        }
        std::vector<Rational> out(r + 1, Rational(0));
        for (std::size_t i = 0; i <= r; ++i)
            for (std::size_t j = 0; j < c.size() && j <= i; ++j) out[i] += q[i - j] * c[j];
        c = std::move(out);
    }
    return Polynomial(std::vector<Rational>(c.rbegin(), c.rend()));
}

namespace {

/// Laplace-expansion dynamic program: for the submatrix of `b` using the
/// first |S| rows of `rows` and the column set S, d[S] is its determinant.
std::vector<Polynomial> laplace_minors(const PolyMatrix& b, const std::vector<int>& rows) {
    const int n = static_cast<int>(b.cols());
    std::vector<Polynomial> d(std::size_t(1) << n);
    d[0] = Polynomial(1L);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        const int s = std::popcount(mask);
        if (s > static_cast<int>(rows.size())) continue;
        const int row = rows[static_cast<std::size_t>(s - 1)];
        Polynomial acc;
        int t = 0;
        for (int col = 0; col < n; ++col) {
            if (!(mask & (1u << col))) continue;
            Polynomial term =
                b(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) * d[mask ^ (1u << col)];
            if (((s - 1) + t) % 2 == 0)
                acc += term;
            else
                acc -= term;
            ++t;
        }
        d[mask] = std::move(acc);
    }
    return d;
}

}  // namespace

RationalFunction oracle_coronal(const ExactMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("oracle_coronal: matrix must be square");
    const int n = static_cast<int>(m.rows());
    if (n > 9)
        throw std::invalid_argument("oracle_coronal: exponential cofactor expansion is capped at 9×9");
    if (n == 0) return RationalFunction();

    const PolyMatrix b = lambda_identity_minus(m);
    const unsigned full = (1u << n) - 1u;

    std::vector<int> all_rows(static_cast<std::size_t>(n));
    std::iota(all_rows.begin(), all_rows.end(), 0);
    const Polynomial det = laplace_minors(b, all_rows)[full];

    // Entry sum of the adjugate: Σ over deleted row r and deleted column c of
    // (−1)^{r+c} · det of the corresponding minor of λI − M.
    Polynomial numerator;
    for (int r = 0; r < n; ++r) {
        std::vector<int> rows;
        rows.reserve(static_cast<std::size_t>(n - 1));
        for (int i = 0; i < n; ++i)
            if (i != r) rows.push_back(i);
        const std::vector<Polynomial> d = laplace_minors(b, rows);
        for (int c = 0; c < n; ++c) {
            const Polynomial& minor = d[full ^ (1u << c)];
            if ((r + c) % 2 == 0)
                numerator += minor;
            else
                numerator -= minor;
        }
    }
    return RationalFunction(numerator, det);
}

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

Digraph random_digraph(std::uint64_t seed, int n, double density) {
    if (n < 0) throw std::invalid_argument("random_digraph: vertex count must be ≥ 0");
    if (!(density >= 0.0 && density <= 1.0))
        throw std::invalid_argument("random_digraph: density must lie in [0, 1]");
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            const std::uint64_t key =
                mix64(mix64(mix64(seed) ^ static_cast<std::uint64_t>(u)) ^
                      static_cast<std::uint64_t>(v));
            const double unit = static_cast<double>(key >> 11) * 0x1.0p-53;
            if (unit < density) arcs.push_back({u, v});
        }
    return Digraph(n, std::move(arcs));
}

}  // namespace corona::oracle
