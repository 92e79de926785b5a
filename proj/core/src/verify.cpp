#include <corona/verify.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <corona/charpoly.hpp>
#include <corona/corona.hpp>
#include <corona/coronal_formulas.hpp>
#include <corona/digraph.hpp>
#include <corona/oracle.hpp>

namespace corona::verify {

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::match: return "match";
        case Verdict::mismatch: return "mismatch";
        case Verdict::hypothesis_violated: return "hypothesis-violated";
        case Verdict::skipped: return "skipped";
    }
    throw std::logic_error("verdict_name: bad enum");
}

namespace {

struct Task {
    std::string suite;
    std::string instance;
    std::function<void(Report&)> body;
};

std::string describe(const Digraph& d) {
    std::ostringstream os;
    os << "n" << d.vertex_count() << "{";
    bool first = true;
    for (const Arc& a : d.arcs()) {
        if (!first) os << ",";
        os << a.tail << ">" << a.head;
        first = false;
    }
    os << "}";
    return os.str();
}

std::string matrix_str(const ExactMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << to_string(m(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

void settle(Report& r, std::string expected, std::string actual, bool equal) {
    r.expected = std::move(expected);
    r.actual = std::move(actual);
    r.verdict = equal ? Verdict::match : Verdict::mismatch;
}

void expect_equal(Report& r, const Polynomial& expected, const Polynomial& actual) {
    settle(r, expected.str(), actual.str(), expected == actual);
}

void expect_equal(Report& r, const RationalFunction& expected, const RationalFunction& actual) {
    settle(r, expected.str(), actual.str(), expected == actual);
}

void expect_equal(Report& r, const ExactMatrix& expected, const ExactMatrix& actual) {
    settle(r, matrix_str(expected), matrix_str(actual), expected == actual);
}

void expect_equal(Report& r, bool expected, bool actual) {
    settle(r, expected ? "true" : "false", actual ? "true" : "false", expected == actual);
}

/// Runs fn and requires a std::domain_error whose message mentions `needle`;
/// that outcome is recorded as hypothesis_violated (the formula correctly
/// refused the instance), anything else as mismatch.
template <typename Fn>
void expect_domain_error(Report& r, std::string_view needle, Fn&& fn) {
    r.expected = "domain error mentioning \"" + std::string(needle) + "\"";
    try {
        fn();
        r.actual = "no exception thrown";
        r.verdict = Verdict::mismatch;
    } catch (const std::domain_error& e) {
        r.actual = e.what();
        r.verdict = std::string_view(e.what()).find(needle) != std::string_view::npos
                        ? Verdict::hypothesis_violated
                        : Verdict::mismatch;
    }
}

void skip(Report& r, std::string reason) {
    r.expected = "";
    r.actual = std::move(reason);
    r.verdict = Verdict::skipped;
}

// ---------------------------------------------------------------- instance pools

Digraph circulant(int n, int t) {
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int s = 1; s <= t; ++s) arcs.push_back({i, (i + s) % n});
    return Digraph(n, std::move(arcs));
}

Digraph block_cyclic(const std::vector<int>& sizes, const std::vector<std::vector<int>>& r) {
    const int k = static_cast<int>(sizes.size());
    std::vector<int> offset(static_cast<std::size_t>(k) + 1, 0);
    for (int i = 0; i < k; ++i)
        offset[static_cast<std::size_t>(i) + 1] = offset[static_cast<std::size_t>(i)] + sizes[static_cast<std::size_t>(i)];
    std::vector<Arc> arcs;
    for (int i = 0; i < k; ++i)
        for (int p = 0; p < sizes[static_cast<std::size_t>(i)]; ++p)
            for (int j = 0; j < k; ++j) {
                const int rij = r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                const int first = i == j ? 1 : 0;
                for (int s = first; s < first + rij; ++s)
                    arcs.push_back({offset[static_cast<std::size_t>(i)] + p,
                                    offset[static_cast<std::size_t>(j)] +
                                        (p + s) % sizes[static_cast<std::size_t>(j)]});
            }
    return Digraph(offset[static_cast<std::size_t>(k)], std::move(arcs));
}

Digraph semiregular_bipartite_digraph(int n1, int n2, int r1, int r2) {
    std::vector<Arc> arcs;
    for (int p = 0; p < n1; ++p)
        for (int s = 0; s < r1; ++s) arcs.push_back({p, n1 + (p + s) % n2});
    for (int q = 0; q < n2; ++q)
        for (int s = 0; s < r2; ++s) arcs.push_back({n1 + q, (q + s) % n1});
    return Digraph(n1 + n2, std::move(arcs));
}

Digraph fullside_bipartite_digraph(int n1, int n2, int k) {
    std::vector<Arc> arcs;
    for (int p = 0; p < n1; ++p)
        for (int q = 0; q < n2; ++q) arcs.push_back({p, n1 + q});
    for (int idx = 0; idx < k; ++idx) arcs.push_back({n1 + idx / n1, idx % n1});
    return Digraph(n1 + n2, std::move(arcs));
}

std::vector<Digraph> named_pool(int max_vertices) {
    std::vector<Digraph> out;
    for (int n = 1; n <= std::min(4, max_vertices); ++n) out.push_back(make_family(Family::path, n));
    for (int n = 2; n <= std::min(4, max_vertices); ++n) out.push_back(make_family(Family::cycle, n));
    for (int n = 1; n <= std::min(3, max_vertices); ++n) out.push_back(make_family(Family::empty, n));
    for (int n = 2; n <= std::min(4, max_vertices); ++n)
        out.push_back(make_family(Family::complete, n));
    return out;
}

Digraph seeded_digraph(const SweepConfig& cfg, int index, int max_vertices) {
    const int n = 1 + index % std::max(1, max_vertices);
    const double span = cfg.max_density - cfg.min_density;
    const double density = cfg.min_density + span * static_cast<double>(index % 7) / 6.0;
    return oracle::random_digraph(cfg.seed * 1000003ULL + static_cast<std::uint64_t>(index), n,
                                  density);
}

ExactMatrix random_rational_matrix(const SweepConfig& cfg, int index, int n) {
    std::mt19937_64 rng(cfg.seed * 6364136223846793005ULL + static_cast<std::uint64_t>(index));
    ExactMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = Rational(static_cast<long>(rng() % 7) - 3);
    return m;
}

constexpr MatrixKind kAllKinds[] = {MatrixKind::adjacency, MatrixKind::laplacian,
                                    MatrixKind::signless_laplacian};
constexpr CoronaDirection kAllDirections[] = {CoronaDirection::forward, CoronaDirection::backward,
                                              CoronaDirection::symmetric};

// ---------------------------------------------------------------- algebra-core

void build_algebra_core(const SweepConfig& cfg, std::vector<Task>& tasks) {
    const std::string suite = "algebra-core";
    const int max_n = std::min(cfg.max_vertices, 8);
    for (int t = 0; t < cfg.trials; ++t) {
        const int n = 1 + t % max_n;
        const ExactMatrix m = random_rational_matrix(cfg, t, n);
        const std::string tag = "#" + std::to_string(t) + " n=" + std::to_string(n);
        tasks.push_back({suite, "charpoly-cross" + tag, [m](Report& r) {
                             expect_equal(r, oracle::oracle_charpoly(m), charpoly(m));
                         }});
        tasks.push_back({suite, "charpoly-transpose" + tag, [m](Report& r) {
                             expect_equal(r, charpoly(m), charpoly(m.transpose()));
                         }});
        tasks.push_back({suite, "coronal-transpose" + tag, [m](Report& r) {
                             expect_equal(r, coronal(m), coronal(m.transpose()));
                         }});
        tasks.push_back({suite, "coronal-cross" + tag, [m](Report& r) {
                             expect_equal(r, oracle::oracle_coronal(m), coronal(m));
                         }});
        tasks.push_back({suite, "adjugate-identity" + tag, [m, n](Report& r) {
                             const CharpolyResult res = charpoly_with_adjugate(m);
                             PolyMatrix adj(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
                             for (int k = 0; k < n; ++k) {
                                 const int power = n - 1 - k;
                                 adj += res.adjugate_coeffs[static_cast<std::size_t>(k)].map(
                                     [power](const Rational& c) {
                                         return Polynomial::monomial(c, power);
                                     });
                             }
                             PolyMatrix product = lambda_identity_minus(m) * adj;
                             PolyMatrix expected(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
                             for (int i = 0; i < n; ++i)
                                 expected(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) =
                                     res.charpoly;
                             settle(r, "(λI−M)·adj(λI−M) = f(λ)·I", product == expected ? "identity holds" : "identity fails",
                                    product == expected);
                         }});
        tasks.push_back({suite, "rank-one-det-constant" + tag, [m, t](Report& r) {
                             const Rational alpha =
                                 make_rational(static_cast<long>(t % 5) - 2,
                                               static_cast<long>(1 + t % 3));
                             const Rational direct =
                                 det(m + ExactMatrix::ones(m.rows(), m.cols()) * alpha);
                             if (det(m) == 0) {
                                 expect_domain_error(r, "singular", [&] {
                                     (void)rank_one_update_det(to_ratfunc_matrix(m),
                                                               RationalFunction(alpha));
                                 });
                                 return;
                             }
                             const RationalFunction via =
                                 rank_one_update_det(to_ratfunc_matrix(m), RationalFunction(alpha));
                             expect_equal(r, RationalFunction(direct), via);
                         }});
        if (n <= 6) {
            tasks.push_back({suite, "rank-one-det-resolvent" + tag, [m, t](Report& r) {
                                 const RationalFunction alpha(
                                     make_rational(static_cast<long>(t % 3) - 1, 2));
                                 const RatFuncMatrix c = to_ratfunc_matrix(lambda_identity_minus(m));
                                 RatFuncMatrix shifted = c;
                                 for (std::size_t i = 0; i < shifted.rows(); ++i)
                                     for (std::size_t j = 0; j < shifted.cols(); ++j)
                                         shifted(i, j) += alpha;
                                 expect_equal(r, det(shifted), rank_one_update_det(c, alpha));
                             }});
        }
    }
    const int digraph_max = std::min(cfg.max_vertices, 6);
    for (int t = 0; t < cfg.trials; ++t) {
        const Digraph d = seeded_digraph(cfg, t, digraph_max);
        const std::string tag = "#" + std::to_string(t) + " " + describe(d);
        tasks.push_back({suite, "incidence-adjacency" + tag, [d](Report& r) {
                             const ExactMatrix bout = incidence_of(d, IncidenceKind::out_incidence);
                             const ExactMatrix bin = incidence_of(d, IncidenceKind::in_incidence);
                             expect_equal(r, matrix_of(d, DigraphMatrix::adjacency),
                                          bout * bin.transpose());
                         }});
        tasks.push_back({suite, "incidence-line-adjacency" + tag, [d](Report& r) {
                             if (d.arc_count() > 12) {
                                 skip(r, "line digraph above size budget");
                                 return;
                             }
                             if (d.arc_count() == 0) {
                                 settle(r, "line digraph of an arcless digraph is empty",
                                        line_digraph(d).vertex_count() == 0 ? "empty" : "nonempty",
                                        line_digraph(d).vertex_count() == 0);
                                 return;
                             }
                             const ExactMatrix bout = incidence_of(d, IncidenceKind::out_incidence);
                             const ExactMatrix bin = incidence_of(d, IncidenceKind::in_incidence);
                             expect_equal(r, matrix_of(line_digraph(d), DigraphMatrix::adjacency),
                                          bin.transpose() * bout);
                         }});
        tasks.push_back({suite, "charpoly-product-swap" + tag, [d](Report& r) {
                             if (d.arc_count() > 12) {
                                 skip(r, "line digraph above size budget");
                                 return;
                             }
                             const ExactMatrix bout = incidence_of(d, IncidenceKind::out_incidence);
                             const ExactMatrix bin = incidence_of(d, IncidenceKind::in_incidence);
                             const int n = d.vertex_count();
                             const int m = d.arc_count();
                             const Polynomial left =
                                 Polynomial::monomial(Rational(1), m) * charpoly(bout * bin.transpose());
                             const Polynomial right =
                                 Polynomial::monomial(Rational(1), n) * charpoly(bin.transpose() * bout);
                             expect_equal(r, left, right);
                         }});
        tasks.push_back({suite, "graph-incidence-factorizations" + tag, [d](Report& r) {
                             const UnderlyingGraph g = underlying_graph(d);
                             const ExactMatrix nmat = incidence_of(d, IncidenceKind::oriented);
                             const ExactMatrix bmat = incidence_of(d, IncidenceKind::underlying);
                             const bool lap = graph_laplacian(g) == nmat * nmat.transpose();
                             const bool slap = graph_signless_laplacian(g) == bmat * bmat.transpose();
                             settle(r, "L(G)=N·Nᵀ and Q(G)=B·Bᵀ",
                                    lap ? (slap ? "both hold" : "Q factorization fails")
                                        : "L factorization fails",
                                    lap && slap);
                         }});
    }
}

// ---------------------------------------------------------------- coronal-families

void add_family_pair(std::vector<Task>& tasks, const std::string& name, const Digraph& d,
                     MatrixKind kind, const RationalFunction& formula) {
    const std::string suite = "coronal-families";
    const ExactMatrix m = matrix_of(d, kind);
    tasks.push_back({suite,
                     name + "-formula[" + std::string(matrix_kind_name(kind)) + "] " + describe(d),
                     [formula, m](Report& r) { expect_equal(r, formula, coronal(m)); }});
    tasks.push_back({suite,
                     name + "-oracle[" + std::string(matrix_kind_name(kind)) + "] " + describe(d),
                     [m](Report& r) {
                         if (m.rows() > 9) {
                             skip(r, "above cofactor oracle size cap");
                             return;
                         }
                         expect_equal(r, oracle::oracle_coronal(m), coronal(m));
                     }});
}

void build_coronal_families(const SweepConfig& cfg, std::vector<Task>& tasks) {
    const std::string suite = "coronal-families";
    const int max_n = std::min(cfg.max_vertices, 8);

    const std::pair<int, int> circ[] = {{3, 1}, {4, 1}, {4, 2}, {5, 2}, {6, 2}, {8, 3}};
    for (const auto& [n, t] : circ) {
        if (n > max_n) continue;
        const Digraph d = circulant(n, t);
        add_family_pair(tasks, "constant-rowsum", d, MatrixKind::adjacency,
                        coronal_constant_rowsum(n, Rational(t)));
        add_family_pair(tasks, "constant-rowsum", d, MatrixKind::laplacian,
                        coronal_constant_rowsum(n, Rational(0)));
        add_family_pair(tasks, "constant-rowsum", d, MatrixKind::signless_laplacian,
                        coronal_constant_rowsum(n, Rational(2 * t)));
    }

    struct EquitableInstance {
        std::vector<int> sizes;
        std::vector<std::vector<int>> r;
    };
    const EquitableInstance equitable[] = {
        {{2, 3}, {{1, 1}, {2, 0}}},
        {{2, 2, 4}, {{1, 0, 2}, {1, 1, 1}, {0, 1, 1}}},
    };
    for (const EquitableInstance& inst : equitable) {
        int total = 0;
        for (int s : inst.sizes) total += s;
        if (total > max_n) continue;
        const Digraph d = block_cyclic(inst.sizes, inst.r);
        std::vector<std::vector<int>> blocks;
        int at = 0;
        for (int s : inst.sizes) {
            std::vector<int> block;
            for (int v = 0; v < s; ++v) block.push_back(at + v);
            blocks.push_back(std::move(block));
            at += s;
        }
        const ExactMatrix a = matrix_of(d, MatrixKind::adjacency);
        tasks.push_back({suite, "equitable-quotient " + describe(d), [a, blocks](Report& r) {
                             const EquitablePartition part = make_equitable_partition(a, blocks);
                             expect_equal(r, coronal_equitable(part), coronal(a));
                         }});
        tasks.push_back({suite, "equitable-oracle " + describe(d), [a](Report& r) {
                             expect_equal(r, oracle::oracle_coronal(a), coronal(a));
                         }});
        if (inst.sizes.size() == 2) {
            tasks.push_back(
                {suite, "quotient2-cross " + describe(d), [a, blocks, inst](Report& r) {
                     const EquitablePartition part = make_equitable_partition(a, blocks);
                     expect_equal(r,
                                  coronal_quotient2(inst.sizes[0], inst.sizes[1],
                                                    part.quotient(0, 0), part.quotient(0, 1),
                                                    part.quotient(1, 0), part.quotient(1, 1)),
                                  coronal_equitable(part));
                 }});
        }
    }

    // Star-shaped 2-block quotient: one hub, two leaves, arcs both ways.
    {
        const Digraph star(3, {{0, 1}, {0, 2}, {1, 0}, {2, 0}});
        const ExactMatrix a = matrix_of(star, MatrixKind::adjacency);
        tasks.push_back({suite, "quotient2-star " + describe(star), [a](Report& r) {
                             expect_equal(r,
                                          coronal_quotient2(1, 2, Rational(0), Rational(2),
                                                            Rational(1), Rational(0)),
                                          coronal(a));
                         }});
    }

    using Parts = std::vector<std::pair<int, int>>;
    const Parts joins[] = {{{2, 1}, {3, 2}}, {{2, 1}, {2, 1}, {3, 1}}};
    for (const Parts& parts : joins) {
        int total = 0;
        for (const auto& [ni, ri] : parts) total += ni;
        if (total > max_n) continue;
        Digraph d = circulant(parts[0].first, parts[0].second);
        for (std::size_t i = 1; i < parts.size(); ++i)
            d = join(d, circulant(parts[i].first, parts[i].second));
        for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::signless_laplacian})
            add_family_pair(tasks, "join-outregular", d, kind, coronal_join_outregular(parts, kind));
    }

    const std::tuple<int, int, int, int> semi[] = {{2, 3, 2, 1}, {3, 3, 2, 2}, {2, 4, 2, 1}};
    for (const auto& [n1, n2, r1, r2] : semi) {
        if (n1 + n2 > max_n) continue;
        const Digraph d = semiregular_bipartite_digraph(n1, n2, r1, r2);
        for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::signless_laplacian})
            add_family_pair(tasks, "semiregular-bipartite", d, kind,
                            coronal_semiregular_bipartite(n1, n2, r1, r2, kind));
    }

    const std::tuple<int, int, int> fullside[] = {{2, 3, 2}, {3, 2, 4}, {2, 2, 3}};
    for (const auto& [n1, n2, k] : fullside) {
        if (n1 + n2 > max_n) continue;
        const Digraph d = fullside_bipartite_digraph(n1, n2, k);
        add_family_pair(tasks, "fullside-bipartite", d, MatrixKind::adjacency,
                        coronal_fullside_bipartite(n1, n2, k));
    }

    for (int n = 2; n <= std::min(8, max_n); ++n) {
        const Digraph d = make_family(Family::path, n);
        add_family_pair(tasks, "path", d, MatrixKind::adjacency, coronal_path(n, MatrixKind::adjacency));
        add_family_pair(tasks, "path", d, MatrixKind::signless_laplacian,
                        coronal_path(n, MatrixKind::signless_laplacian));
    }

    tasks.push_back({suite, "family-dispatch path n=5", [](Report& r) {
                         expect_equal(r, coronal_path(5, MatrixKind::adjacency),
                                      coronal_family({"path", {Rational(5)}}, MatrixKind::adjacency));
                     }});

    const std::tuple<long, long, long> affine_params[] = {{1, 1, 0}, {2, -1, 3}, {-1, 2, -2}};
    for (int t = 0; t < 3; ++t) {
        const Digraph d = seeded_digraph(cfg, 100 + t, std::min(max_n, 6));
        const ExactMatrix a = matrix_of(d, MatrixKind::adjacency);
        for (const auto& [pa, pb, pc] : affine_params) {
            const Rational ra(pa), rb(pb), rc(pc);
            ExactMatrix shifted = a * ra + ExactMatrix::ones(a.rows(), a.cols()) * rb +
                                  ExactMatrix::identity(a.rows()) * rc;
            const std::string tag = " a=" + to_string(ra) + ",b=" + to_string(rb) +
                                    ",c=" + to_string(rc) + " " + describe(d);
            tasks.push_back({suite, "affine-coronal" + tag, [a, shifted, ra, rb, rc](Report& r) {
                                 expect_equal(r, coronal(shifted),
                                              coronal_affine(coronal(a), ra, rb, rc));
                             }});
            tasks.push_back({suite, "affine-charpoly" + tag, [a, shifted, ra, rb, rc](Report& r) {
                                 expect_equal(r, charpoly(shifted),
                                              charpoly_affine(charpoly(a), coronal(a), ra, rb, rc));
                             }});
        }
    }
}

// ---------------------------------------------------------------- complement-identities

void build_complement_identities(const SweepConfig& cfg, std::vector<Task>& tasks) {
    const std::string suite = "complement-identities";
    const int max_n = std::min(cfg.max_vertices, 7);
    for (int t = 0; t < cfg.trials; ++t) {
        const Digraph d = seeded_digraph(cfg, t, max_n);
        const int n = d.vertex_count();
        const Digraph dc = complement(d);
        const std::string tag = "#" + std::to_string(t) + " " + describe(d);

        tasks.push_back({suite, "double-complement" + tag, [d, dc](Report& r) {
                             settle(r, serialize_digraph(d), serialize_digraph(complement(dc)),
                                    complement(dc) == d);
                         }});
        tasks.push_back({suite, "coronal-A" + tag, [d, dc, n](Report& r) {
                             const RationalFunction chi = coronal(matrix_of(d, MatrixKind::adjacency));
                             expect_equal(r, coronal(matrix_of(dc, MatrixKind::adjacency)),
                                          complement_coronal(chi, n, MatrixKind::adjacency));
                         }});
        tasks.push_back({suite, "coronal-Q" + tag, [d, dc, n](Report& r) {
                             const RationalFunction chi =
                                 coronal(matrix_of(d, MatrixKind::signless_laplacian));
                             expect_equal(r, coronal(matrix_of(dc, MatrixKind::signless_laplacian)),
                                          complement_coronal(chi, n, MatrixKind::signless_laplacian));
                         }});
        for (MatrixKind kind : kAllKinds) {
            const std::string kn(matrix_kind_name(kind));
            tasks.push_back({suite, "charpoly-" + kn + tag, [d, dc, n, kind](Report& r) {
                                 const ExactMatrix m = matrix_of(d, kind);
                                 expect_equal(r, charpoly(matrix_of(dc, kind)),
                                              complement_charpoly(charpoly(m), coronal(m), n, kind));
                             }});
        }
        for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::signless_laplacian}) {
            const std::string kn(matrix_kind_name(kind));
            tasks.push_back(
                {suite, "charpoly-outregular-" + kn + tag, [d, dc, n, kind](Report& r) {
                     const auto preds = structural_predicates(d);
                     if (!preds.out_regular) {
                         skip(r, "d is not out-regular");
                         return;
                     }
                     expect_equal(r, charpoly(matrix_of(dc, kind)),
                                  complement_charpoly_outregular(charpoly(matrix_of(d, kind)), n,
                                                                 *preds.out_regular, kind));
                 }});
        }

        // Affine shifts M ↦ aM + bJ + cI share the machinery of the
        // complement identities (J-rank-one corrections of the resolvent).
        {
            const std::tuple<long, long, long> affine_params[] = {
                {1, 1, 0}, {2, -1, 3}, {-1, 2, -2}};
            const auto& [pa, pb, pc] = affine_params[t % 3];
            const Rational ra(pa), rb(pb), rc(pc);
            const ExactMatrix a = matrix_of(d, MatrixKind::adjacency);
            const ExactMatrix shifted = a * ra + ExactMatrix::ones(a.rows(), a.cols()) * rb +
                                        ExactMatrix::identity(a.rows()) * rc;
            tasks.push_back({suite, "affine-coronal" + tag, [a, shifted, ra, rb, rc](Report& r) {
                                 expect_equal(r, coronal(shifted),
                                              coronal_affine(coronal(a), ra, rb, rc));
                             }});
            tasks.push_back({suite, "affine-charpoly" + tag, [a, shifted, ra, rb, rc](Report& r) {
                                 expect_equal(r, charpoly(shifted),
                                              charpoly_affine(charpoly(a), coronal(a), ra, rb, rc));
                             }});
        }
    }
}

// ---------------------------------------------------------------- vertex-corona

std::vector<std::pair<Digraph, Digraph>> corona_pairs(const SweepConfig& cfg, int budget_base,
                                                      int budget_copies_weight) {
    std::vector<Digraph> firsts = named_pool(std::min(cfg.max_vertices, 4));
    std::vector<Digraph> seconds = named_pool(std::min(cfg.max_vertices, 3));
    for (int i = 0; i < 4; ++i) firsts.push_back(seeded_digraph(cfg, 200 + i, 3));
    for (int i = 0; i < 3; ++i) seconds.push_back(seeded_digraph(cfg, 300 + i, 2));
    std::vector<std::pair<Digraph, Digraph>> pairs;
    for (const Digraph& d1 : firsts)
        for (const Digraph& d2 : seconds) {
            (void)budget_copies_weight;
            if (d1.vertex_count() * (1 + d2.vertex_count()) <= budget_base)
                pairs.emplace_back(d1, d2);
        }
    return pairs;
}

void build_vertex_corona(const SweepConfig& cfg, std::vector<Task>& tasks) {
    const std::string suite = "vertex-corona";
    int index = 0;
    for (const auto& [d1, d2] : corona_pairs(cfg, 10, 0)) {
        const int n1 = d1.vertex_count();
        const int n2 = d2.vertex_count();
        const std::string tag =
            "#" + std::to_string(index++) + " d1=" + describe(d1) + " d2=" + describe(d2);
        for (MatrixKind kind : kAllKinds) {
            const std::string kn(matrix_kind_name(kind));
            tasks.push_back({suite, "sym-" + kn + tag, [d1, d2, kind](Report& r) {
                                 const Digraph c = vertex_corona(d1, d2, CoronaDirection::symmetric);
                                 expect_equal(r, oracle::oracle_charpoly(matrix_of(c, kind)),
                                              vertex_corona_charpoly(d1, d2, kind));
                             }});
            tasks.push_back({suite, "fwd-" + kn + tag, [d1, d2, kind, n2](Report& r) {
                                 const Digraph c = vertex_corona(d1, d2, CoronaDirection::forward);
                                 // Forward coupling is block-triangular: the base block
                                 // becomes M1 (+ n2·I for L and Q), the copies stay M2.
                                 Polynomial f1 = charpoly(matrix_of(d1, kind));
                                 if (kind != MatrixKind::adjacency) f1 = f1.shifted(Rational(-n2));
                                 const Polynomial f2 = charpoly(matrix_of(d2, kind));
                                 expect_equal(r, oracle::oracle_charpoly(matrix_of(c, kind)),
                                              f1 * f2.pow(d1.vertex_count()));
                             }});
            tasks.push_back({suite, "bwd-" + kn + tag, [d1, d2, kind](Report& r) {
                                 const Digraph c = vertex_corona(d1, d2, CoronaDirection::backward);
                                 // Backward coupling: base block unchanged, every copy
                                 // vertex gains one out-arc, shifting L and Q by one.
                                 const Polynomial f1 = charpoly(matrix_of(d1, kind));
                                 Polynomial f2 = charpoly(matrix_of(d2, kind));
                                 if (kind != MatrixKind::adjacency) f2 = f2.shifted(Rational(-1));
                                 expect_equal(r, oracle::oracle_charpoly(matrix_of(c, kind)),
                                              f1 * f2.pow(d1.vertex_count()));
                             }});
            tasks.push_back({suite, "kron-" + kn + tag, [d1, d2, kind, n1, n2](Report& r) {
                                 ExactMatrix m1 = matrix_of(d1, kind);
                                 ExactMatrix m2 = matrix_of(d2, kind);
                                 if (kind != MatrixKind::adjacency) {
                                     m1 += ExactMatrix::identity(static_cast<std::size_t>(n1)) *
                                           Rational(n2);
                                     m2 += ExactMatrix::identity(static_cast<std::size_t>(n2));
                                 }
                                 const ExactMatrix eye =
                                     ExactMatrix::identity(static_cast<std::size_t>(n1));
                                 expect_equal(r, vertex_corona_charpoly(d1, d2, kind),
                                              kron_schur_charpoly(m1, m2, eye, eye,
                                                                  kind == MatrixKind::laplacian ? -1
                                                                                                : 1));
                             }});
        }
    }
}

// ---------------------------------------------------------------- vertex-corona-spectrum

void build_vertex_corona_spectrum(const SweepConfig& cfg, std::vector<Task>& tasks) {
    const std::string suite = "vertex-corona-spectrum";
    (void)cfg;
    std::vector<Digraph> firsts;
    for (int n = 1; n <= 3; ++n) firsts.push_back(make_family(Family::empty, n));
    for (int n = 2; n <= 3; ++n) firsts.push_back(make_family(Family::complete, n));
    firsts.push_back(make_family(Family::path, 1));
    firsts.push_back(make_family(Family::path, 2));
    firsts.push_back(make_family(Family::path, 3));
    firsts.push_back(make_family(Family::cycle, 2));
    const Digraph seconds[] = {make_family(Family::cycle, 2), make_family(Family::cycle, 3),
                               make_family(Family::cycle, 4), make_family(Family::complete, 3),
                               make_family(Family::path, 1)};
    int index = 0;
    for (const Digraph& d1 : firsts)
        for (const Digraph& d2 : seconds) {
            for (MatrixKind kind : kAllKinds) {
                const std::string tag = "#" + std::to_string(index++) + "[" +
                                        std::string(matrix_kind_name(kind)) + "] d1=" + describe(d1) +
                                        " d2=" + describe(d2);
                tasks.push_back({suite, "expand" + tag, [d1, d2, kind](Report& r) {
                                     const SpectrumDescription s =
                                         vertex_corona_spectrum_outregular(d1, d2, kind);
                                     const Digraph c =
                                         vertex_corona(d1, d2, CoronaDirection::symmetric);
                                     expect_equal(r, oracle::oracle_charpoly(matrix_of(c, kind)),
                                                  s.expand());
                                 }});
            }
        }

    for (MatrixKind kind : kAllKinds) {
        const std::string kn(matrix_kind_name(kind));
        tasks.push_back({suite, "irrational-base[" + kn + "]", [kind](Report& r) {
                             expect_domain_error(r, "rational", [&] {
                                 (void)vertex_corona_spectrum_outregular(
                                     make_family(Family::cycle, 3), make_family(Family::cycle, 2),
                                     kind);
                             });
                         }});
    }
    tasks.push_back({suite, "not-out-regular", [](Report& r) {
                         expect_domain_error(r, "out-regular", [&] {
                             (void)vertex_corona_spectrum_outregular(
                                 make_family(Family::path, 2), make_family(Family::path, 2),
                                 MatrixKind::adjacency);
                         });
                     }});
    tasks.push_back({suite, "not-strongly-connected", [](Report& r) {
                         expect_domain_error(r, "strongly connected", [&] {
                             (void)vertex_corona_spectrum_outregular(
                                 make_family(Family::path, 2),
                                 disjoint_union(make_family(Family::cycle, 2),
                                                make_family(Family::cycle, 2)),
                                 MatrixKind::adjacency);
                         });
                     }});
}

// ---------------------------------------------------------------- arc-corona

void build_arc_corona(const SweepConfig& cfg, std::vector<Task>& tasks) {
    const std::string suite = "arc-corona";
    int index = 0;
    for (const auto& [d1, d2] : corona_pairs(cfg, 1000, 0)) {
        const int n1 = d1.vertex_count();
        const int n2 = d2.vertex_count();
        for (CoronaDirection dir : kAllDirections) {
            const int copies = arc_corona_copy_count(d1, dir);
            if (n1 + copies * n2 > 10) continue;
            const std::string dn(corona_direction_name(dir));
            for (MatrixKind kind : kAllKinds) {
                const std::string tag = "#" + std::to_string(index++) + " d1=" + describe(d1) +
                                        " d2=" + describe(d2);
                tasks.push_back(
                    {suite, dn + "-" + std::string(matrix_kind_name(kind)) + tag,
                     [d1, d2, dir, kind](Report& r) {
                         const Digraph c = arc_corona(d1, d2, dir);
                         expect_equal(r, oracle::oracle_charpoly(matrix_of(c, kind)),
                                      arc_corona_charpoly(d1, d2, dir, kind));
                     }});
            }
            if (dir == CoronaDirection::forward && copies >= 1) {
                const std::string tag = "#" + std::to_string(index++) + " d1=" + describe(d1) +
                                        " d2=" + describe(d2);
                tasks.push_back({suite, "kron-fwd-A" + tag, [d1, d2](Report& r) {
                                     const ExactMatrix bout =
                                         incidence_of(d1, IncidenceKind::out_incidence);
                                     const ExactMatrix bin =
                                         incidence_of(d1, IncidenceKind::in_incidence);
                                     expect_equal(
                                         r,
                                         arc_corona_charpoly(d1, d2, CoronaDirection::forward,
                                                             MatrixKind::adjacency),
                                         kron_schur_charpoly(
                                             matrix_of(d1, DigraphMatrix::adjacency),
                                             matrix_of(d2, DigraphMatrix::adjacency), bout,
                                             bin.transpose(), 1));
                                 }});
            }
        }
    }
}

// ---------------------------------------------------------------- arc-corona-closed

void build_arc_corona_closed(const SweepConfig& cfg, std::vector<Task>& tasks) {
    const std::string suite = "arc-corona-closed";
    int index = 0;
    for (const auto& [d1, d2] : corona_pairs(cfg, 1000, 0)) {
        const int n1 = d1.vertex_count();
        const int n2 = d2.vertex_count();
        for (CoronaDirection dir : kAllDirections) {
            const int copies = arc_corona_copy_count(d1, dir);
            if (n1 + copies * n2 > 10) continue;
            const std::string dn(corona_direction_name(dir));
            for (MatrixKind kind : kAllKinds) {
                const std::string tag = "#" + std::to_string(index++) + " d1=" + describe(d1) +
                                        " d2=" + describe(d2);
                tasks.push_back(
                    {suite, dn + "-" + std::string(matrix_kind_name(kind)) + tag,
                     [d1, d2, dir, kind](Report& r) {
                         const ClosedFormResult closed =
                             arc_corona_charpoly_closed(d1, d2, dir, kind);
                         const auto preds = structural_predicates(d1);
                         const bool needs_symmetric = dir == CoronaDirection::symmetric;
                         const bool needs_regular =
                             dir == CoronaDirection::symmetric ||
                             (dir == CoronaDirection::forward && kind != MatrixKind::adjacency);
                         const bool hypotheses_hold =
                             (!needs_symmetric || preds.is_symmetric) &&
                             (!needs_regular || preds.out_regular.has_value());
                         switch (closed.status) {
                             case ClosedFormStatus::ok:
                                 expect_equal(r, arc_corona_charpoly(d1, d2, dir, kind),
                                              closed.value);
                                 break;
                             case ClosedFormStatus::no_applicable_corollary:
                                 skip(r, closed.detail);
                                 break;
                             case ClosedFormStatus::hypothesis_failed:
                                 if (hypotheses_hold) {
                                     settle(r, "closed form for a hypothesis-satisfying instance",
                                            "refused: " + closed.detail, false);
                                 } else {
                                     r.expected = "hypothesis failure detected";
                                     r.actual = closed.detail;
                                     r.verdict = Verdict::hypothesis_violated;
                                 }
                                 break;
                         }
                     }});
            }
        }
    }
}

// ---------------------------------------------------------------- connectivity

void build_connectivity(const SweepConfig& cfg, std::vector<Task>& tasks) {
    const std::string suite = "connectivity";
    const int pair_count = std::max(cfg.trials, 1);
    for (int t = 0; t < pair_count; ++t) {
        const Digraph d1 = seeded_digraph(cfg, 400 + t, std::min(cfg.max_vertices, 5));
        const Digraph d2 = seeded_digraph(cfg, 500 + t, std::min(cfg.max_vertices, 3));
        const std::string tag =
            "#" + std::to_string(t) + " d1=" + describe(d1) + " d2=" + describe(d2);
        for (CoronaOp op : {CoronaOp::vertex, CoronaOp::arc})
            for (CoronaDirection dir : kAllDirections) {
                const std::string label = std::string(corona_op_name(op)) + "-" +
                                          std::string(corona_direction_name(dir)) + tag;
                tasks.push_back({suite, label, [d1, d2, op, dir](Report& r) {
                                     const Digraph c = op == CoronaOp::vertex
                                                           ? vertex_corona(d1, d2, dir)
                                                           : arc_corona(d1, d2, dir);
                                     expect_equal(r, is_strongly_connected(c),
                                                  strong_connectivity_prediction(d1, op, dir));
                                 }});
            }
    }
}

// ---------------------------------------------------------------- self-test-negative

void build_self_test_negative(const SweepConfig& cfg, std::vector<Task>& tasks) {
    (void)cfg;
    const std::string suite = "self-test-negative";
    tasks.push_back({suite, "intentional-mismatch", [](Report& r) {
                         const ExactMatrix a = matrix_of(make_family(Family::path, 2),
                                                         MatrixKind::adjacency);
                         const Polynomial corrupted = charpoly(a) + Polynomial(1L);
                         expect_equal(r, oracle::oracle_charpoly(a), corrupted);
                     }});
    tasks.push_back({suite, "intentional-match", [](Report& r) {
                         const ExactMatrix a = matrix_of(make_family(Family::path, 2),
                                                         MatrixKind::adjacency);
                         expect_equal(r, oracle::oracle_charpoly(a), charpoly(a));
                     }});
}

// ---------------------------------------------------------------- suite registry

using Builder = void (*)(const SweepConfig&, std::vector<Task>&);

struct SuiteEntry {
    const char* name;
    Builder build;
    bool in_default_set;
};

const SuiteEntry kSuites[] = {
    {"algebra-core", build_algebra_core, true},
    {"coronal-families", build_coronal_families, true},
    {"complement-identities", build_complement_identities, true},
    {"vertex-corona", build_vertex_corona, true},
    {"vertex-corona-spectrum", build_vertex_corona_spectrum, true},
    {"arc-corona", build_arc_corona, true},
    {"arc-corona-closed", build_arc_corona_closed, true},
    {"connectivity", build_connectivity, true},
    {"self-test-negative", build_self_test_negative, false},
};

int resolve_threads(int requested) {
    int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("CORONA_SPECTRA_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return n;
}

Report run_task(const Task& task) {
    Report r;
    r.suite = task.suite;
    r.instance = task.instance;
    const auto start = std::chrono::steady_clock::now();
    try {
        task.body(r);
    } catch (const std::exception& e) {
        r.expected = "no unhandled exception";
        r.actual = std::string("unhandled exception: ") + e.what();
        r.verdict = Verdict::mismatch;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const SuiteEntry& s : kSuites)
        if (s.in_default_set) out.emplace_back(s.name);
    return out;
}

std::vector<std::string> all_suite_names() {
    std::vector<std::string> out;
    for (const SuiteEntry& s : kSuites) out.emplace_back(s.name);
    return out;
}

SweepSummary run_sweep(const SweepConfig& config) {
    std::vector<std::string> wanted = config.suites.empty() ? suite_names() : config.suites;
    std::vector<Task> tasks;
    for (const std::string& name : wanted) {
        const SuiteEntry* entry = nullptr;
        for (const SuiteEntry& s : kSuites)
            if (name == s.name) entry = &s;
        if (!entry) throw std::invalid_argument("unknown verification suite: '" + name + "'");
        entry->build(config, tasks);
    }

    std::vector<Report> reports(tasks.size());
    int threads = resolve_threads(config.threads);
    if (static_cast<std::size_t>(threads) > tasks.size())
        threads = static_cast<int>(std::max<std::size_t>(tasks.size(), 1));
    if (threads <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) reports[i] = run_task(tasks[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(threads));
        for (int w = 0; w < threads; ++w)
            workers.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                    reports[i] = run_task(tasks[i]);
            });
        for (std::thread& w : workers) w.join();
    }

    SweepSummary summary;
    summary.reports = std::move(reports);
    for (const Report& r : summary.reports) {
        switch (r.verdict) {
            case Verdict::match: ++summary.matches; break;
            case Verdict::mismatch: ++summary.mismatches; break;
            case Verdict::hypothesis_violated: ++summary.hypothesis_violations; break;
            case Verdict::skipped: ++summary.skips; break;
        }
    }
    return summary;
}

std::vector<std::string> covered_operations() {
    // Hand-maintained inventory of what the suites actually compare against
    // the division-free charpoly oracle. build_vertex_corona emits the
    // sym/fwd/bwd tasks per matrix kind; build_arc_corona emits the
    // fwd/bwd/sym tasks per matrix kind. Keep this list in lockstep with
    // those builders; the computed cross-product in required_operations()
    // catches any drift.
    return {
        "vertex/fwd/A", "vertex/fwd/L", "vertex/fwd/Q",
        "vertex/bwd/A", "vertex/bwd/L", "vertex/bwd/Q",
        "vertex/sym/A", "vertex/sym/L", "vertex/sym/Q",
        "arc/fwd/A",    "arc/fwd/L",    "arc/fwd/Q",
        "arc/bwd/A",    "arc/bwd/L",    "arc/bwd/Q",
        "arc/sym/A",    "arc/sym/L",    "arc/sym/Q",
    };
}

std::vector<std::string> required_operations() {
    std::vector<std::string> out;
    for (CoronaOp op : {CoronaOp::vertex, CoronaOp::arc})
        for (CoronaDirection dir : {CoronaDirection::forward, CoronaDirection::backward,
                                    CoronaDirection::symmetric})
            for (MatrixKind kind : kAllKinds)
                out.push_back(std::string(corona_op_name(op)) + "/" +
                              std::string(corona_direction_name(dir)) + "/" +
                              std::string(matrix_kind_name(kind)));
    return out;
}

}  // namespace corona::verify
