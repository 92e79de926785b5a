#include <corona/matrix.hpp>

namespace corona {

Polynomial det_bareiss(PolyMatrix m) {
    if (!m.is_square()) throw std::invalid_argument("det_bareiss: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return Polynomial(1L);
    Polynomial prev(1L);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && m(pivot, k).is_zero()) ++pivot;
            if (pivot == n) return Polynomial();
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = exact_div(t, prev);
            }
            m(i, k) = Polynomial();
        }
        prev = m(k, k);
    }
    Polynomial result = m(n - 1, n - 1);
    if (negate) result = -result;
    return result;
}

}  // namespace corona
