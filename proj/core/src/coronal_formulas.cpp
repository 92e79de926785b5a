#include <corona/coronal_formulas.hpp>

#include <algorithm>
#include <stdexcept>

namespace corona {

namespace {

Polynomial linear(const Rational& c0, const Rational& c1) { return Polynomial({c0, c1}); }

RationalFunction affine_argument(const Rational& a, const Rational& c) {
    // (λ − c)/a as a rational function.
    return RationalFunction(linear(-c, Rational(1)) * (Rational(1) / a));
}

void require_kind_aq(MatrixKind kind, const char* op) {
    if (kind == MatrixKind::laplacian)
        throw std::invalid_argument(std::string(op) + ": kind L not supported (its coronal is n/λ unconditionally)");
}

}  // namespace

RationalFunction coronal_constant_rowsum(int n, const Rational& t) {
    if (n < 1) throw std::invalid_argument("coronal_constant_rowsum: n must be positive");
    return RationalFunction(Polynomial(Rational(n)), linear(-t, Rational(1)));
}

RationalFunction coronal_affine(const RationalFunction& chi, const Rational& a, const Rational& b,
                                const Rational& c) {
    if (a == 0) throw std::invalid_argument("coronal_affine: a must be nonzero");
    RationalFunction inner = compose(chi, affine_argument(a, c));
    RationalFunction denom = RationalFunction(a) - RationalFunction(b) * inner;
    if (denom.is_zero()) throw std::domain_error("coronal_affine: degenerate denominator");
    return inner / denom;
}

Polynomial charpoly_affine(const Polynomial& f, const RationalFunction& chi, const Rational& a,
                           const Rational& b, const Rational& c) {
    if (a == 0) throw std::invalid_argument("charpoly_affine: a must be nonzero");
    if (!f.is_monic()) throw std::invalid_argument("charpoly_affine: f must be monic");
    const int n = f.degree();
    if (n < 1) throw std::invalid_argument("charpoly_affine: f must have positive degree");
    RationalFunction arg = affine_argument(a, c);
    RationalFunction value = RationalFunction(Polynomial(a).pow(n - 1)) * compose(f, arg) *
                             (RationalFunction(a) - RationalFunction(b) * compose(chi, arg));
    Polynomial out = value.to_polynomial();
    if (!out.is_monic() || out.degree() != n)
        throw std::logic_error("charpoly_affine: result is not monic of the expected degree");
    return out;
}

RationalFunction complement_coronal(const RationalFunction& chi, int n, MatrixKind kind) {
    require_kind_aq(kind, "complement_coronal");
    if (n < 1) throw std::invalid_argument("complement_coronal: n must be positive");
    const RationalFunction one(1L);
    Polynomial arg = kind == MatrixKind::adjacency
                         ? linear(Rational(-1), Rational(-1))        // −λ − 1
                         : linear(Rational(n - 2), Rational(-1));    // n − λ − 2
    RationalFunction shifted = compose(chi, RationalFunction(arg));
    RationalFunction denom = one + shifted;
    if (denom.is_zero()) throw std::domain_error("complement_coronal: degenerate denominator");
    return one / denom - one;
}

Polynomial complement_charpoly(const Polynomial& f, const RationalFunction& chi, int n,
                               MatrixKind kind) {
    if (n < 1) throw std::invalid_argument("complement_charpoly: n must be positive");
    if (f.degree() != n) throw std::invalid_argument("complement_charpoly: degree of f must equal n");
    const Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
    switch (kind) {
        case MatrixKind::adjacency: {
            Polynomial arg = linear(Rational(-1), Rational(-1));  // −λ − 1
            RationalFunction value = (RationalFunction(1L) + compose(chi, RationalFunction(arg))) *
                                     RationalFunction(f.compose(arg));
            return (value * RationalFunction(sign)).to_polynomial();
        }
        case MatrixKind::laplacian: {
            Polynomial arg = linear(Rational(n), Rational(-1));  // n − λ
            RationalFunction ratio(Polynomial::variable(), linear(Rational(-n), Rational(1)));
            return (RationalFunction(sign) * ratio * RationalFunction(f.compose(arg))).to_polynomial();
        }
        case MatrixKind::signless_laplacian: {
            Polynomial arg = linear(Rational(n - 2), Rational(-1));  // n − λ − 2
            RationalFunction value = (RationalFunction(1L) + compose(chi, RationalFunction(arg))) *
                                     RationalFunction(f.compose(arg));
            return (value * RationalFunction(sign)).to_polynomial();
        }
    }
    throw std::logic_error("complement_charpoly: bad enum");
}

Polynomial complement_charpoly_outregular(const Polynomial& f, int n, int r, MatrixKind kind) {
    require_kind_aq(kind, "complement_charpoly_outregular");
    if (n < 1) throw std::invalid_argument("complement_charpoly_outregular: n must be positive");
    if (f.degree() != n)
        throw std::invalid_argument("complement_charpoly_outregular: degree of f must equal n");
    const Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
    Polynomial ratio_num, ratio_den, arg;
    if (kind == MatrixKind::adjacency) {
        ratio_num = linear(Rational(-n + r + 1), Rational(1));  // λ − n + r + 1
        ratio_den = linear(Rational(r + 1), Rational(1));       // λ + r + 1
        arg = linear(Rational(-1), Rational(-1));               // −λ − 1
    } else {
        ratio_num = linear(Rational(-2 * n + 2 * r + 2), Rational(1));  // λ − 2n + 2r + 2
        ratio_den = linear(Rational(-n + 2 * r + 2), Rational(1));      // λ − n + 2r + 2
        arg = linear(Rational(n - 2), Rational(-1));                    // n − λ − 2
    }
    RationalFunction value = RationalFunction(sign) * RationalFunction(ratio_num, ratio_den) *
                             RationalFunction(f.compose(arg));
    return value.to_polynomial();
}

EquitablePartition make_equitable_partition(const ExactMatrix& m,
                                            std::vector<std::vector<int>> blocks) {
    if (!m.is_square()) throw std::invalid_argument("make_equitable_partition: matrix not square");
    const std::size_t n = m.rows();
    std::vector<int> owner(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty())
            throw std::invalid_argument("make_equitable_partition: block " + std::to_string(b) + " is empty");
        for (int v : blocks[b]) {
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw std::invalid_argument("make_equitable_partition: vertex " + std::to_string(v) +
                                            " out of range");
            if (owner[static_cast<std::size_t>(v)] != -1)
                throw std::invalid_argument("make_equitable_partition: vertex " + std::to_string(v) +
                                            " appears in more than one block");
            owner[static_cast<std::size_t>(v)] = static_cast<int>(b);
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (owner[v] == -1)
            throw std::invalid_argument("make_equitable_partition: vertex " + std::to_string(v) +
                                        " is not covered by any block");

    const std::size_t k = blocks.size();
    ExactMatrix quotient(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            bool first = true;
            Rational expected;
            for (int v : blocks[i]) {
                Rational sum(0);
                for (int w : blocks[j]) sum += m(static_cast<std::size_t>(v), static_cast<std::size_t>(w));
                if (first) {
                    expected = sum;
                    first = false;
                } else if (sum != expected) {
                    throw std::invalid_argument(
                        "make_equitable_partition: vertex " + std::to_string(v) + " has row sum " +
                        to_string(sum) + " into block " + std::to_string(j) + ", expected " +
                        to_string(expected));
                }
            }
            quotient(i, j) = expected;
        }
    }
    return EquitablePartition{std::move(blocks), std::move(quotient)};
}

RationalFunction coronal_equitable(const EquitablePartition& partition) {
    const std::size_t k = partition.blocks.size();
    if (k == 0) throw std::invalid_argument("coronal_equitable: empty partition");
    CharpolyResult r = charpoly_with_adjugate(partition.quotient);
    // [n_1 ... n_k] adj(λI − R) 1 assembled from the adjugate coefficients.
    std::vector<Rational> asc(k, Rational(0));
    for (std::size_t t = 0; t < k; ++t) {
        Rational weighted(0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                weighted += Rational(static_cast<long>(partition.blocks[i].size())) *
                            r.adjugate_coeffs[t](i, j);
        asc[k - 1 - t] = weighted;
    }
    return RationalFunction(Polynomial(std::move(asc)), std::move(r.charpoly));
}

RationalFunction coronal_quotient2(int n1, int n2, const Rational& r11, const Rational& r12,
                                   const Rational& r21, const Rational& r22) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("coronal_quotient2: block sizes must be positive");
    Polynomial num({Rational(n1) * (r12 - r22) + Rational(n2) * (r21 - r11), Rational(n1 + n2)});
    Polynomial den({r11 * r22 - r12 * r21, -(r11 + r22), Rational(1)});
    return RationalFunction(std::move(num), std::move(den));
}

RationalFunction coronal_join_outregular(const std::vector<std::pair<int, int>>& parts,
                                         MatrixKind kind) {
    require_kind_aq(kind, "coronal_join_outregular");
    if (parts.empty()) throw std::invalid_argument("coronal_join_outregular: no parts");
    int n = 0;
    for (const auto& [ni, ri] : parts) {
        if (ni < 1) throw std::invalid_argument("coronal_join_outregular: part size must be positive");
        if (ri < 0 || ri >= ni)
            throw std::invalid_argument("coronal_join_outregular: part regularity out of range");
        n += ni;
    }
    const RationalFunction one(1L);
    RationalFunction sum;
    for (const auto& [ni, ri] : parts) {
        Rational shift = kind == MatrixKind::adjacency
                             ? Rational(ni - ri)             // λ + n_i − r_i
                             : Rational(-n + 2 * ni - 2 * ri);  // λ − n + 2n_i − 2r_i
        sum += RationalFunction(Polynomial(Rational(ni)), linear(shift, Rational(1)));
    }
    RationalFunction denom = one - sum;
    if (denom.is_zero()) throw std::domain_error("coronal_join_outregular: degenerate denominator");
    return one / denom - one;
}

RationalFunction coronal_semiregular_bipartite(int n1, int n2, int r1, int r2, MatrixKind kind) {
    require_kind_aq(kind, "coronal_semiregular_bipartite");
    if (n1 < 1 || n2 < 1)
        throw std::invalid_argument("coronal_semiregular_bipartite: part sizes must be positive");
    if (r1 < 0 || r1 > n2 || r2 < 0 || r2 > n1)
        throw std::invalid_argument("coronal_semiregular_bipartite: degrees out of range");
    if (kind == MatrixKind::adjacency) {
        Polynomial num({Rational(n1) * Rational(r1) + Rational(n2) * Rational(r2), Rational(n1 + n2)});
        Polynomial den({Rational(-r1) * Rational(r2), Rational(0), Rational(1)});
        return RationalFunction(std::move(num), std::move(den));
    }
    Polynomial num({Rational(n1 - n2) * Rational(r1 - r2), Rational(n1 + n2)});
    Polynomial den = Polynomial::variable() * linear(Rational(-(r1 + r2)), Rational(1));
    return RationalFunction(std::move(num), std::move(den));
}

RationalFunction coronal_fullside_bipartite(int n1, int n2, int k) {
    if (n1 < 1 || n2 < 1)
        throw std::invalid_argument("coronal_fullside_bipartite: part sizes must be positive");
    if (k < 0 || k > n1 * n2)
        throw std::invalid_argument("coronal_fullside_bipartite: arc total out of range");
    Polynomial num({Rational(k + n1 * n2), Rational(n1 + n2)});
    Polynomial den({Rational(-k), Rational(0), Rational(1)});
    return RationalFunction(std::move(num), std::move(den));
}

RationalFunction coronal_path(int n, MatrixKind kind) {
    if (n < 1) throw std::invalid_argument("coronal_path: n must be positive");
    const Polynomial lambda = Polynomial::variable();
    if (kind == MatrixKind::adjacency) {
        // (n λ^{n+1} − (n+1) λ^n + 1) / (λ^n (λ−1)²)
        Polynomial num = Polynomial::monomial(Rational(n), n + 1) -
                         Polynomial::monomial(Rational(n + 1), n) + Polynomial(1L);
        Polynomial den = Polynomial::monomial(Rational(1), n) * linear(Rational(-1), Rational(1)).pow(2);
        return RationalFunction(std::move(num), std::move(den));
    }
    if (kind == MatrixKind::signless_laplacian) {
        // ((λ−1)^n (λ n (λ−2) − 2(λ−1)) + 2(λ−1)) / (λ (λ−1)^n (λ−2)²)
        Polynomial lm1 = linear(Rational(-1), Rational(1));
        Polynomial lm2 = linear(Rational(-2), Rational(1));
        Polynomial num = lm1.pow(n) * (lambda * Rational(n) * lm2 - lm1 * Rational(2)) + lm1 * Rational(2);
        Polynomial den = lambda * lm1.pow(n) * lm2.pow(2);
        return RationalFunction(std::move(num), std::move(den));
    }
    throw std::invalid_argument("coronal_path: kind L not supported (its coronal is n/λ unconditionally)");
}

RationalFunction coronal_family(const FamilySpec& spec, MatrixKind kind) {
    auto want = [&](std::size_t count) {
        if (spec.params.size() != count)
            throw std::invalid_argument("coronal_family: family '" + spec.family + "' expects " +
                                        std::to_string(count) + " parameters");
    };
    auto as_int = [&](std::size_t idx) {
        const Rational& x = spec.params[idx];
        if (x.get_den() != 1)
            throw std::invalid_argument("coronal_family: parameter " + std::to_string(idx) +
                                        " must be an integer");
        return static_cast<int>(x.get_num().get_si());
    };
    if (spec.family == "constant-rowsum") {
        want(2);
        return coronal_constant_rowsum(as_int(0), spec.params[1]);
    }
    if (spec.family == "quotient2") {
        want(6);
        return coronal_quotient2(as_int(0), as_int(1), spec.params[2], spec.params[3],
                                 spec.params[4], spec.params[5]);
    }
    if (spec.family == "join") {
        if (spec.params.size() < 2 || spec.params.size() % 2 != 0)
            throw std::invalid_argument("coronal_family: join expects (n_i, r_i) pairs");
        std::vector<std::pair<int, int>> parts;
        for (std::size_t i = 0; i < spec.params.size(); i += 2)
            parts.emplace_back(as_int(i), as_int(i + 1));
        return coronal_join_outregular(parts, kind);
    }
    if (spec.family == "semiregular-bipartite") {
        want(4);
        return coronal_semiregular_bipartite(as_int(0), as_int(1), as_int(2), as_int(3), kind);
    }
    if (spec.family == "fullside-bipartite") {
        want(3);
        if (kind != MatrixKind::adjacency)
            throw std::invalid_argument("coronal_family: fullside-bipartite supports kind A only");
        return coronal_fullside_bipartite(as_int(0), as_int(1), as_int(2));
    }
    if (spec.family == "path") {
        want(1);
        return coronal_path(as_int(0), kind);
    }
    throw std::invalid_argument("coronal_family: unknown family '" + spec.family + "'");
}

}  // namespace corona
