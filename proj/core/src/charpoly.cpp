#include <corona/charpoly.hpp>

#include <stdexcept>

namespace corona {

CharpolyResult charpoly_with_adjugate(const ExactMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("charpoly: matrix not square");
    const std::size_t n = m.rows();
    CharpolyResult out;
    if (n == 0) {
        out.charpoly = Polynomial(1L);
        return out;
    }
    // f(λ) = λ^n + c_1 λ^{n-1} + ... + c_n with
    //   B_0 = I,  A_k = M B_{k-1},  c_k = -tr(A_k)/k,  B_k = A_k + c_k I.
    std::vector<Rational> coeffs_desc(n + 1, Rational(0));
    coeffs_desc[0] = 1;
    out.adjugate_coeffs.reserve(n);
    ExactMatrix b = ExactMatrix::identity(n);
    out.adjugate_coeffs.push_back(b);
    for (std::size_t k = 1; k <= n; ++k) {
        ExactMatrix a = m * b;
        Rational c = -trace(a) / Rational(static_cast<long>(k));
        coeffs_desc[k] = c;
        b = std::move(a);
        for (std::size_t i = 0; i < n; ++i) b(i, i) += c;
        if (k < n) out.adjugate_coeffs.push_back(b);
    }
    // The iteration closes with B_n = 0; anything else means a bug.
    if (b != ExactMatrix(n, n)) throw std::logic_error("charpoly: iteration did not terminate at zero");
    std::vector<Rational> asc(coeffs_desc.rbegin(), coeffs_desc.rend());
    out.charpoly = Polynomial(std::move(asc));
    return out;
}

Polynomial charpoly(const ExactMatrix& m) { return charpoly_with_adjugate(m).charpoly; }

RationalFunction coronal(const ExactMatrix& m) {
    CharpolyResult r = charpoly_with_adjugate(m);
    const std::size_t n = m.rows();
    if (n == 0) return RationalFunction();
    // 1ᵀ adj(λI − M) 1 = Σ_k (entry sum of B_k) λ^{n-1-k}.
    std::vector<Rational> asc(n, Rational(0));
    for (std::size_t k = 0; k < n; ++k) asc[n - 1 - k] = sum_entries(r.adjugate_coeffs[k]);
    return RationalFunction(Polynomial(std::move(asc)), std::move(r.charpoly));
}

RationalFunction schur_block_det(const RatFuncMatrix& m1, const RatFuncMatrix& m2,
                                 const RatFuncMatrix& m3, const RatFuncMatrix& m4) {
    if (!m1.is_square() || !m4.is_square()) throw std::invalid_argument("schur_block_det: diagonal blocks not square");
    if (m2.rows() != m1.rows() || m2.cols() != m4.cols() || m3.rows() != m4.rows() ||
        m3.cols() != m1.cols())
        throw std::invalid_argument("schur_block_det: off-diagonal block shape mismatch");
    RationalFunction d4 = det(m4);
    if (d4.is_zero()) throw std::domain_error("schur_block_det: lower right block is singular");
    RatFuncMatrix complement = m1 - m2 * inverse(m4) * m3;
    return d4 * det(complement);
}

RationalFunction rank_one_update_det(const RatFuncMatrix& c, const RationalFunction& alpha) {
    if (!c.is_square()) throw std::invalid_argument("rank_one_update_det: matrix not square");
    RationalFunction dc = det(c);
    if (dc.is_zero()) throw std::domain_error("rank_one_update_det: singular matrix");
    RationalFunction quad = sum_entries(inverse(c));
    return dc * (RationalFunction(1L) + alpha * quad);
}

RatFuncMatrix rank_one_update_inverse(const RatFuncMatrix& c, const RationalFunction& alpha) {
    if (!c.is_square()) throw std::invalid_argument("rank_one_update_inverse: matrix not square");
    const std::size_t n = c.rows();
    RatFuncMatrix cinv = inverse(c);
    RationalFunction denom = RationalFunction(1L) + alpha * sum_entries(cinv);
    if (denom.is_zero())
        throw std::domain_error("rank_one_update_inverse: updated matrix is singular");
    RatFuncMatrix jc = RatFuncMatrix::ones(n, n) * cinv;
    RatFuncMatrix cj = cinv * jc;  // C⁻¹ J C⁻¹
    RationalFunction scale = alpha / denom;
    return cinv - cj.map([&](const RationalFunction& x) { return scale * x; });
}

}  // namespace corona
