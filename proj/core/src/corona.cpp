#include <corona/corona.hpp>

#include <algorithm>
#include <stdexcept>

namespace corona {

CoronaOp corona_op_from_name(std::string_view name) {
    if (name == "vertex") return CoronaOp::vertex;
    if (name == "arc") return CoronaOp::arc;
    throw std::invalid_argument("unknown corona op: '" + std::string(name) + "'");
}

std::string_view corona_op_name(CoronaOp op) {
    return op == CoronaOp::vertex ? "vertex" : "arc";
}

CoronaDirection corona_direction_from_name(std::string_view name) {
    if (name == "fwd") return CoronaDirection::forward;
    if (name == "bwd") return CoronaDirection::backward;
    if (name == "sym") return CoronaDirection::symmetric;
    throw std::invalid_argument("unknown corona direction: '" + std::string(name) +
                                "' (expected fwd, bwd or sym)");
}

std::string_view corona_direction_name(CoronaDirection dir) {
    switch (dir) {
        case CoronaDirection::forward: return "fwd";
        case CoronaDirection::backward: return "bwd";
        case CoronaDirection::symmetric: return "sym";
    }
    throw std::logic_error("corona_direction_name: bad enum");
}

namespace {

void require_nonempty_factors(const Digraph& d1, const Digraph& d2, const char* op) {
    if (d1.vertex_count() < 1 || d2.vertex_count() < 1)
        throw std::invalid_argument(std::string(op) + ": both factors need at least one vertex");
}

}  // namespace

Digraph vertex_corona(const Digraph& d1, const Digraph& d2, CoronaDirection dir) {
    require_nonempty_factors(d1, d2, "vertex_corona");
    const int n1 = d1.vertex_count();
    const int n2 = d2.vertex_count();
    auto label = [n1](int copy, int k) { return n1 + copy + n1 * k; };
    std::vector<Arc> arcs(d1.arcs());
    for (int i = 0; i < n1; ++i) {
        for (const Arc& a : d2.arcs()) arcs.push_back({label(i, a.tail), label(i, a.head)});
        for (int k = 0; k < n2; ++k) {
            if (dir != CoronaDirection::backward) arcs.push_back({i, label(i, k)});
            if (dir != CoronaDirection::forward) arcs.push_back({label(i, k), i});
        }
    }
    return Digraph(n1 + n1 * n2, std::move(arcs));
}

int arc_corona_copy_count(const Digraph& d1, CoronaDirection dir) {
    if (dir == CoronaDirection::symmetric)
        return static_cast<int>(underlying_graph(d1).edges.size());
    return d1.arc_count();
}

Digraph arc_corona(const Digraph& d1, const Digraph& d2, CoronaDirection dir) {
    require_nonempty_factors(d1, d2, "arc_corona");
    const int n1 = d1.vertex_count();
    const int n2 = d2.vertex_count();
    const int copies = arc_corona_copy_count(d1, dir);
    auto base = [n1, n2](int copy) { return n1 + copy * n2; };
    std::vector<Arc> arcs(d1.arcs());
    for (int c = 0; c < copies; ++c)
        for (const Arc& a : d2.arcs()) arcs.push_back({base(c) + a.tail, base(c) + a.head});
    if (dir == CoronaDirection::symmetric) {
        const UnderlyingGraph g = underlying_graph(d1);
        for (int c = 0; c < copies; ++c) {
            const Edge& e = g.edges[static_cast<std::size_t>(c)];
            for (int j = 0; j < n2; ++j) {
                arcs.push_back({e.u, base(c) + j});
                arcs.push_back({base(c) + j, e.u});
                arcs.push_back({e.v, base(c) + j});
                arcs.push_back({base(c) + j, e.v});
            }
        }
    } else {
        for (int c = 0; c < copies; ++c) {
            const Arc& a = d1.arcs()[static_cast<std::size_t>(c)];
            const int enter = dir == CoronaDirection::forward ? a.tail : a.head;
            const int leave = dir == CoronaDirection::forward ? a.head : a.tail;
            for (int j = 0; j < n2; ++j) {
                arcs.push_back({enter, base(c) + j});
                arcs.push_back({base(c) + j, leave});
            }
        }
    }
    return Digraph(n1 + copies * n2, std::move(arcs));
}

ExactMatrix assemble_kron_block(const ExactMatrix& m1, const ExactMatrix& m2,
                                const ExactMatrix& b1, const ExactMatrix& b2, int sign) {
    if (!m1.is_square() || !m2.is_square())
        throw std::invalid_argument("assemble_kron_block: diagonal blocks must be square");
    if (sign != 1 && sign != -1) throw std::invalid_argument("assemble_kron_block: sign must be ±1");
    const std::size_t n1 = m1.rows();
    const std::size_t n2 = m2.rows();
    const std::size_t r = b1.cols();
    if (b1.rows() != n1 || b2.rows() != r || b2.cols() != n1)
        throw std::invalid_argument("assemble_kron_block: coupling block shapes must be n1×r and r×n1");
    const std::size_t n = n1 + n2 * r;
    ExactMatrix out(n, n);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) out(i, j) = m1(i, j);
    const Rational s(sign);
    for (std::size_t q = 0; q < n2; ++q)
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t t = 0; t < r; ++t) {
                out(i, n1 + q * r + t) = s * b1(i, t);
                out(n1 + q * r + t, i) = s * b2(t, i);
            }
    for (std::size_t q = 0; q < n2; ++q)
        for (std::size_t p = 0; p < n2; ++p)
            for (std::size_t t = 0; t < r; ++t) out(n1 + q * r + t, n1 + p * r + t) = m2(q, p);
    return out;
}

namespace {

/// prefactor^exponent · det(λI − s − c·x), cleared through the monic
/// denominator of c; the division is exact whenever the inputs come from
/// one of the corona identities.
Polynomial scaled_det_charpoly(const ExactMatrix& s, const ExactMatrix& x,
                               const RationalFunction& c, const Polynomial& prefactor,
                               int exponent) {
    const std::size_t n1 = s.rows();
    const Polynomial& p = c.num();
    const Polynomial& q = c.den();
    PolyMatrix lm = lambda_identity_minus(s);
    PolyMatrix e(n1, n1);
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n1; ++j) e(i, j) = lm(i, j) * q - p * x(i, j);
    Polynomial d = det_bareiss(std::move(e));
    return exact_div(prefactor.pow(exponent) * d, q.pow(static_cast<int>(n1)));
}

void check_monic_degree(const Polynomial& f, int degree, const char* op) {
    if (!f.is_monic() || f.degree() != degree)
        throw std::logic_error(std::string(op) + ": result is not monic of the expected degree");
}

}  // namespace

Polynomial kron_schur_charpoly(const ExactMatrix& m1, const ExactMatrix& m2,
                               const ExactMatrix& b1, const ExactMatrix& b2, int sign) {
    if (!m1.is_square() || !m2.is_square())
        throw std::invalid_argument("kron_schur_charpoly: diagonal blocks must be square");
    if (sign != 1 && sign != -1) throw std::invalid_argument("kron_schur_charpoly: sign must be ±1");
    const std::size_t n1 = m1.rows();
    const std::size_t n2 = m2.rows();
    const std::size_t r = b1.cols();
    if (b1.rows() != n1 || b2.rows() != r || b2.cols() != n1)
        throw std::invalid_argument("kron_schur_charpoly: coupling block shapes must be n1×r and r×n1");
    if (r < 1 || n2 < 1)
        throw std::invalid_argument("kron_schur_charpoly: needs r ≥ 1 copies of a nonempty block");
    const Polynomial f2 = charpoly(m2);
    const RationalFunction chi2 = coronal(m2);
    Polynomial out = scaled_det_charpoly(m1, b1 * b2, chi2, f2, static_cast<int>(r));
    check_monic_degree(out, static_cast<int>(n1 + r * n2), "kron_schur_charpoly");
    return out;
}

namespace {

/// f2^exponent · (1 + χ2)^{n1} · f1(λ / (1 + χ2)), the forward-arc and
/// symmetric-d1 backward-arc adjacency form.
Polynomial forward_adjacency_form(const Polynomial& f1, const Polynomial& f2,
                                  const RationalFunction& chi2, int n1, int exponent) {
    RationalFunction s = RationalFunction(1L) + chi2;
    RationalFunction w = RationalFunction::variable() / s;
    RationalFunction value = compose(f1, w) * s.pow(n1) * RationalFunction(f2).pow(exponent);
    return value.to_polynomial();
}

RationalFunction shifted_ratfunc(const RationalFunction& f, long shift) {
    // f(λ + shift)
    return RationalFunction(f.num().shifted(Rational(shift)), f.den().shifted(Rational(shift)));
}

}  // namespace

Polynomial vertex_corona_charpoly(const Digraph& d1, const Digraph& d2, MatrixKind kind) {
    require_nonempty_factors(d1, d2, "vertex_corona_charpoly");
    const int n1 = d1.vertex_count();
    const int n2 = d2.vertex_count();
    const Polynomial f1 = charpoly(matrix_of(d1, kind));
    const Polynomial f2 = charpoly(matrix_of(d2, kind));
    RationalFunction value;
    switch (kind) {
        case MatrixKind::adjacency: {
            RationalFunction u = RationalFunction::variable() - coronal(matrix_of(d2, kind));
            value = compose(f1, u) * RationalFunction(f2).pow(n1);
            break;
        }
        case MatrixKind::laplacian: {
            Polynomial shifted_f2 = f2.shifted(Rational(-1));  // f_{L2}(λ − 1)
            RationalFunction u(Polynomial({Rational(0), Rational(-(n2 + 1)), Rational(1)}),
                               Polynomial({Rational(-1), Rational(1)}));
            value = compose(f1, u) * RationalFunction(shifted_f2).pow(n1);
            break;
        }
        case MatrixKind::signless_laplacian: {
            Polynomial shifted_f2 = f2.shifted(Rational(-1));
            RationalFunction chi2 = shifted_ratfunc(coronal(matrix_of(d2, kind)), -1);
            RationalFunction u =
                RationalFunction(Polynomial({Rational(-n2), Rational(1)})) - chi2;
            value = compose(f1, u) * RationalFunction(shifted_f2).pow(n1);
            break;
        }
    }
    Polynomial out = value.to_polynomial();
    check_monic_degree(out, n1 + n1 * n2, "vertex_corona_charpoly");
    return out;
}

Polynomial SpectrumDescription::expand() const {
    Polynomial out(1L);
    for (const auto& [factor, multiplicity] : inherited) out *= factor.pow(multiplicity);
    for (const Polynomial& quad : paired) out *= quad;
    return out;
}

namespace {

/// All roots of a monic integer-coefficient polynomial, with multiplicity,
/// provided it splits over ℤ; throws std::domain_error otherwise.
std::vector<Rational> integer_roots_with_multiplicity(Polynomial f) {
    for (const Rational& c : f.coeffs())
        if (c.get_den() != 1)
            throw std::logic_error("integer root extraction: polynomial is not integral");
    std::vector<Rational> roots;
    const Polynomial lambda = Polynomial::variable();
    while (f.degree() > 0) {
        if (f.coeff(0) == 0) {
            roots.emplace_back(0);
            f = exact_div(f, lambda);
            continue;
        }
        mpz_class bound = 0;
        for (const Rational& c : f.coeffs()) {
            mpz_class mag = abs(c.get_num());
            if (mag > bound) bound = mag;
        }
        bound += 1;  // Cauchy bound for monic polynomials
        if (bound > 1000000)
            throw std::domain_error("integer root extraction: coefficient bound too large");
        const mpz_class c0 = abs(f.coeff(0).get_num());
        bool found = false;
        for (long d = 1; mpz_class(d) <= bound && !found; ++d) {
            if (c0 % d != 0) continue;
            for (long sgn : {1L, -1L}) {
                Rational candidate(sgn * d);
                if (f(candidate) == 0) {
                    roots.push_back(candidate);
                    f = exact_div(f, Polynomial({-candidate, Rational(1)}));
                    found = true;
                    break;
                }
            }
        }
        if (!found)
            throw std::domain_error(
                "spectrum description requires the base matrix spectrum to be rational");
    }
    return roots;
}

}  // namespace

SpectrumDescription vertex_corona_spectrum_outregular(const Digraph& d1, const Digraph& d2,
                                                      MatrixKind kind) {
    require_nonempty_factors(d1, d2, "vertex_corona_spectrum_outregular");
    const StructuralPredicates preds2 = structural_predicates(d2);
    if (!preds2.out_regular)
        throw std::domain_error("vertex_corona_spectrum_outregular: d2 must be out-regular");
    if (!is_strongly_connected(d2))
        throw std::domain_error("vertex_corona_spectrum_outregular: d2 must be strongly connected");
    const int r = *preds2.out_regular;
    const int n1 = d1.vertex_count();
    const int n2 = d2.vertex_count();
    const Polynomial f1 = charpoly(matrix_of(d1, kind));
    const Polynomial f2 = charpoly(matrix_of(d2, kind));

    Polynomial shifted;
    Rational removed;
    switch (kind) {
        case MatrixKind::adjacency:
            shifted = f2;
            removed = r;
            break;
        case MatrixKind::laplacian:
            shifted = f2.shifted(Rational(-1));
            removed = 1;
            break;
        case MatrixKind::signless_laplacian:
            shifted = f2.shifted(Rational(-1));
            removed = 2 * r + 1;
            break;
    }
    // The removed eigenvalue is simple for a strongly connected out-regular
    // digraph, so this division is exact.
    Polynomial inherited = exact_div(shifted, Polynomial({-removed, Rational(1)}));

    SpectrumDescription out;
    if (inherited.degree() > 0) out.inherited.emplace_back(std::move(inherited), n1);
    for (const Rational& mu : integer_roots_with_multiplicity(f1)) {
        Rational sum, product;
        switch (kind) {
            case MatrixKind::adjacency:
                sum = mu + r;
                product = mu * r - n2;
                break;
            case MatrixKind::laplacian:
                sum = mu + n2 + 1;
                product = mu;
                break;
            case MatrixKind::signless_laplacian:
                sum = mu + n2 + 2 * r + 1;
                product = mu * (2 * r + 1) + 2 * r * n2;
                break;
        }
        out.paired.push_back(Polynomial({product, -sum, Rational(1)}));
    }
    return out;
}

Polynomial arc_corona_charpoly(const Digraph& d1, const Digraph& d2, CoronaDirection dir,
                               MatrixKind kind) {
    require_nonempty_factors(d1, d2, "arc_corona_charpoly");
    const int n1 = d1.vertex_count();
    const int n2 = d2.vertex_count();
    const int copies = arc_corona_copy_count(d1, dir);
    const long shift = dir == CoronaDirection::symmetric ? 2 : 1;

    Polynomial out;
    switch (kind) {
        case MatrixKind::adjacency: {
            const ExactMatrix a1 = matrix_of(d1, DigraphMatrix::adjacency);
            const ExactMatrix a2 = matrix_of(d2, DigraphMatrix::adjacency);
            const Polynomial f2 = charpoly(a2);
            const RationalFunction chi2 = coronal(a2);
            if (dir == CoronaDirection::forward) {
                out = forward_adjacency_form(charpoly(a1), f2, chi2, n1, copies);
            } else if (dir == CoronaDirection::backward) {
                out = scaled_det_charpoly(a1, a1.transpose(), chi2, f2, copies);
            } else {
                out = scaled_det_charpoly(a1, graph_signless_laplacian(underlying_graph(d1)), chi2,
                                          f2, copies);
            }
            break;
        }
        case MatrixKind::laplacian: {
            const Polynomial f2 = charpoly(matrix_of(d2, MatrixKind::laplacian));
            const Polynomial pre = f2.shifted(Rational(-shift));
            const RationalFunction c(Polynomial(Rational(n2)),
                                     Polynomial({Rational(-shift), Rational(1)}));
            const ExactMatrix l1 = matrix_of(d1, MatrixKind::laplacian);
            ExactMatrix s(0, 0), x(0, 0);
            if (dir == CoronaDirection::forward) {
                s = l1 + matrix_of(d1, DigraphMatrix::out_degree) * Rational(n2);
                x = matrix_of(d1, DigraphMatrix::adjacency);
            } else if (dir == CoronaDirection::backward) {
                s = l1 + matrix_of(d1, DigraphMatrix::in_degree) * Rational(n2);
                x = matrix_of(d1, DigraphMatrix::adjacency).transpose();
            } else {
                const UnderlyingGraph g = underlying_graph(d1);
                s = l1 + graph_degree_matrix(g) * Rational(n2);
                x = graph_signless_laplacian(g);
            }
            out = scaled_det_charpoly(s, x, c, pre, copies);
            break;
        }
        case MatrixKind::signless_laplacian: {
            const ExactMatrix q2 = matrix_of(d2, MatrixKind::signless_laplacian);
            const Polynomial pre = charpoly(q2).shifted(Rational(-shift));
            const RationalFunction c = shifted_ratfunc(coronal(q2), -shift);
            const ExactMatrix q1 = matrix_of(d1, MatrixKind::signless_laplacian);
            ExactMatrix s(0, 0), x(0, 0);
            if (dir == CoronaDirection::forward) {
                s = q1 + matrix_of(d1, DigraphMatrix::out_degree) * Rational(n2);
                x = matrix_of(d1, DigraphMatrix::adjacency);
            } else if (dir == CoronaDirection::backward) {
                s = q1 + matrix_of(d1, DigraphMatrix::in_degree) * Rational(n2);
                x = matrix_of(d1, DigraphMatrix::adjacency).transpose();
            } else {
                const UnderlyingGraph g = underlying_graph(d1);
                s = q1 + graph_degree_matrix(g) * Rational(n2);
                x = graph_signless_laplacian(g);
            }
            out = scaled_det_charpoly(s, x, c, pre, copies);
            break;
        }
    }
    check_monic_degree(out, n1 + copies * n2, "arc_corona_charpoly");
    return out;
}

ClosedFormResult arc_corona_charpoly_closed(const Digraph& d1, const Digraph& d2,
                                            CoronaDirection dir, MatrixKind kind) {
    require_nonempty_factors(d1, d2, "arc_corona_charpoly_closed");
    const int n1 = d1.vertex_count();
    const int n2 = d2.vertex_count();
    const int m1 = d1.arc_count();
    const int m1_edges = static_cast<int>(underlying_graph(d1).edges.size());
    const StructuralPredicates preds1 = structural_predicates(d1);

    auto ok = [](Polynomial value, std::string detail) {
        return ClosedFormResult{ClosedFormStatus::ok, std::move(value), std::move(detail)};
    };
    auto none = [](std::string detail) {
        return ClosedFormResult{ClosedFormStatus::no_applicable_corollary, Polynomial(),
                                std::move(detail)};
    };
    auto failed = [](std::string detail) {
        return ClosedFormResult{ClosedFormStatus::hypothesis_failed, Polynomial(),
                                std::move(detail)};
    };

    try {
        switch (kind) {
            case MatrixKind::adjacency: {
                const ExactMatrix a2 = matrix_of(d2, MatrixKind::adjacency);
                const Polynomial f2 = charpoly(a2);
                const RationalFunction chi2 = coronal(a2);
                const Polynomial f1 = charpoly(matrix_of(d1, MatrixKind::adjacency));
                if (dir == CoronaDirection::forward)
                    return none("no specialized corollary for (forward, A); the general "
                                "formula is already closed");
                if (dir == CoronaDirection::backward) {
                    if (preds1.is_symmetric)
                        return ok(forward_adjacency_form(f1, f2, chi2, n1, m1),
                                  "symmetric d1: backward equals the forward form");
                    if (preds1.is_tournament) {
                        const RationalFunction one(1L);
                        const RationalFunction chi1 =
                            coronal(matrix_of(d1, MatrixKind::adjacency));
                        RationalFunction w = (RationalFunction::variable() + chi2) / (one - chi2);
                        RationalFunction value = RationalFunction(f2).pow(m1) *
                                                 (one - chi2).pow(n1 - 1) * compose(f1, w) *
                                                 (one - chi2 - chi2 * compose(chi1, w));
                        return ok(value.to_polynomial(), "tournament d1 backward form");
                    }
                    return none("(backward, A) needs d1 symmetric or a tournament");
                }
                // symmetric
                if (!preds1.is_symmetric)
                    return failed("(symmetric, A) corollary needs symmetric d1");
                if (!preds1.out_regular)
                    return failed("(symmetric, A) corollary needs out-regular d1");
                {
                    const int r = *preds1.out_regular;
                    const RationalFunction one(1L);
                    RationalFunction s = one + chi2;
                    RationalFunction w =
                        (RationalFunction::variable() - RationalFunction(Rational(r)) * chi2) / s;
                    RationalFunction value =
                        RationalFunction(f2).pow(m1_edges) * s.pow(n1) * compose(f1, w);
                    return ok(value.to_polynomial(), "symmetric regular d1 form");
                }
            }
            case MatrixKind::laplacian: {
                if (dir == CoronaDirection::backward)
                    return none("no specialized corollary for (backward, L)");
                if (!preds1.out_regular)
                    return failed(dir == CoronaDirection::forward
                                      ? "(forward, L) corollary needs out-regular d1"
                                      : "(symmetric, L) corollary needs symmetric out-regular d1");
                const int r = *preds1.out_regular;
                const Polynomial f1 = charpoly(matrix_of(d1, MatrixKind::laplacian));
                const Polynomial f2 = charpoly(matrix_of(d2, MatrixKind::laplacian));
                if (dir == CoronaDirection::forward) {
                    const Polynomial pre = f2.shifted(Rational(-1));
                    RationalFunction ratio(Polynomial({Rational(-(n2 + 1)), Rational(1)}),
                                           Polynomial({Rational(-1), Rational(1)}));
                    RationalFunction u(
                        Polynomial({Rational(0), Rational(-(static_cast<long>(r) * n2 + 1)), Rational(1)}),
                        Polynomial({Rational(-(n2 + 1)), Rational(1)}));
                    RationalFunction value =
                        RationalFunction(pre).pow(m1) * ratio.pow(n1) * compose(f1, u);
                    return ok(value.to_polynomial(), "out-regular d1 forward form");
                }
                if (!preds1.is_symmetric)
                    return failed("(symmetric, L) corollary needs symmetric d1");
                {
                    const Polynomial pre = f2.shifted(Rational(-2));
                    RationalFunction ratio(Polynomial({Rational(-(n2 + 2)), Rational(1)}),
                                           Polynomial({Rational(-2), Rational(1)}));
                    RationalFunction u(
                        Polynomial({Rational(0), Rational(-(static_cast<long>(r) * n2 + 2)), Rational(1)}),
                        Polynomial({Rational(-(n2 + 2)), Rational(1)}));
                    RationalFunction value =
                        RationalFunction(pre).pow(m1_edges) * ratio.pow(n1) * compose(f1, u);
                    return ok(value.to_polynomial(), "symmetric regular d1 form");
                }
            }
            case MatrixKind::signless_laplacian: {
                if (dir == CoronaDirection::backward)
                    return none("no specialized corollary for (backward, Q)");
                if (!preds1.out_regular)
                    return failed(dir == CoronaDirection::forward
                                      ? "(forward, Q) corollary needs out-regular d1"
                                      : "(symmetric, Q) corollary needs symmetric out-regular d1");
                const int r = *preds1.out_regular;
                const ExactMatrix q2 = matrix_of(d2, MatrixKind::signless_laplacian);
                const Polynomial f1 = charpoly(matrix_of(d1, MatrixKind::signless_laplacian));
                const RationalFunction one(1L);
                if (dir == CoronaDirection::forward) {
                    const Polynomial pre = charpoly(q2).shifted(Rational(-1));
                    const RationalFunction chi = shifted_ratfunc(coronal(q2), -1);
                    RationalFunction s = one + chi;
                    RationalFunction w =
                        (RationalFunction(Polynomial({Rational(-static_cast<long>(r) * n2), Rational(1)})) +
                         RationalFunction(Rational(r)) * chi) /
                        s;
                    RationalFunction value = RationalFunction(pre).pow(m1) * s.pow(n1) * compose(f1, w);
                    return ok(value.to_polynomial(), "out-regular d1 forward form");
                }
                if (!preds1.is_symmetric)
                    return failed("(symmetric, Q) corollary needs symmetric d1");
                {
                    const Polynomial pre = charpoly(q2).shifted(Rational(-2));
                    const RationalFunction chi = shifted_ratfunc(coronal(q2), -2);
                    RationalFunction s = one + chi;
                    RationalFunction w =
                        RationalFunction(Polynomial({Rational(-static_cast<long>(r) * n2), Rational(1)})) / s;
                    RationalFunction value =
                        RationalFunction(pre).pow(m1_edges) * s.pow(n1) * compose(f1, w);
                    return ok(value.to_polynomial(), "symmetric regular d1 form");
                }
            }
        }
    } catch (const std::domain_error& e) {
        return failed(std::string("formula evaluation failed: ") + e.what());
    }
    throw std::logic_error("arc_corona_charpoly_closed: bad enum");
}

bool strong_connectivity_prediction(const Digraph& d1, CoronaOp op, CoronaDirection dir) {
    if (d1.vertex_count() == 0)
        throw std::domain_error("strong_connectivity_prediction: empty digraph");
    if (op == CoronaOp::vertex) {
        // Forward copies cannot reach back, backward copies cannot be
        // reached; only the symmetric corona can be strongly connected.
        if (dir != CoronaDirection::symmetric) return false;
        return is_strongly_connected(d1);
    }
    if (dir == CoronaDirection::forward) return is_strongly_connected(d1);
    return graph_connected(underlying_graph(d1));
}

}  // namespace corona
