#include <corona/coronal_formulas.hpp>

#include <corona/charpoly.hpp>
#include <corona/digraph.hpp>
#include <corona/oracle.hpp>

#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"

using namespace corona;
using testutil::P;
using testutil::RF;

TEST_CASE("constant row sum collapses the coronal to a simple pole") {
    CHECK(coronal_constant_rowsum(3, Rational(1)) == RF({3}, {-1, 1}));
    CHECK(coronal_constant_rowsum(3, Rational(1)) ==
          coronal(matrix_of(make_family(Family::cycle, 3), MatrixKind::adjacency)));
    CHECK(coronal_constant_rowsum(4, Rational(0)) == RF({4}, {0, 1}));
    CHECK_THROWS_AS(coronal_constant_rowsum(0, Rational(1)), std::invalid_argument);
}

TEST_CASE("affine transform of a coronal matches the direct computation") {
    const ExactMatrix m = matrix_of(make_family(Family::path, 3), MatrixKind::adjacency);
    const RationalFunction chi = coronal(m);
    const Rational a(2), b(-1), c(3);
    const ExactMatrix shifted = m * a + ExactMatrix::ones(3, 3) * b + ExactMatrix::identity(3) * c;
    CHECK(coronal_affine(chi, a, b, c) == coronal(shifted));
    CHECK(charpoly_affine(charpoly(m), chi, a, b, c) == charpoly(shifted));
    CHECK_THROWS_AS(coronal_affine(chi, Rational(0), b, c), std::invalid_argument);
    CHECK_THROWS_AS(charpoly_affine(charpoly(m), chi, Rational(0), b, c), std::invalid_argument);
}

TEST_CASE("complete digraph characteristic polynomial via the affine route") {
    // J − I on three vertices, built from the arcless digraph's data.
    const Polynomial f = P({0, 0, 0, 1});      // λ³
    const RationalFunction chi = RF({3}, {0, 1});  // 3/λ
    CHECK(charpoly_affine(f, chi, Rational(-1), Rational(1), Rational(-1)) == P({-2, -3, 0, 1}));
}

TEST_CASE("complement coronal matches the complement construction") {
    const Digraph d(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::signless_laplacian}) {
        CAPTURE(matrix_kind_name(kind));
        const RationalFunction chi = coronal(matrix_of(d, kind));
        CHECK(complement_coronal(chi, 4, kind) == coronal(matrix_of(complement(d), kind)));
    }
    CHECK_THROWS_AS(complement_coronal(RF({1}, {0, 1}), 3, MatrixKind::laplacian),
                    std::invalid_argument);
}

TEST_CASE("complement characteristic polynomial for all three kinds") {
    const Digraph d(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    const Digraph dc = complement(d);
    for (MatrixKind kind :
         {MatrixKind::adjacency, MatrixKind::laplacian, MatrixKind::signless_laplacian}) {
        CAPTURE(matrix_kind_name(kind));
        const RationalFunction chi = coronal(matrix_of(d, kind));
        CHECK(complement_charpoly(charpoly(matrix_of(d, kind)), chi, 4, kind) ==
              charpoly(matrix_of(dc, kind)));
    }
}

TEST_CASE("Laplacian complement of the directed 3-cycle") {
    const Polynomial f = P({0, 3, -3, 1});  // λ³ − 3λ² + 3λ
    CHECK(complement_charpoly(f, RationalFunction(), 3, MatrixKind::laplacian) == f);
}

TEST_CASE("out-regular complement specialization agrees with the general form") {
    const Digraph c4 = make_family(Family::cycle, 4);
    for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::signless_laplacian}) {
        CAPTURE(matrix_kind_name(kind));
        CHECK(complement_charpoly_outregular(charpoly(matrix_of(c4, kind)), 4, 1, kind) ==
              charpoly(matrix_of(complement(c4), kind)));
    }
}

TEST_CASE("equitable partitions validate row sums blockwise") {
    // Star with bidirectional arcs: center 0, leaves 1 and 2.
    const Digraph star(3, {{0, 1}, {0, 2}, {1, 0}, {2, 0}});
    const ExactMatrix a = matrix_of(star, MatrixKind::adjacency);
    const EquitablePartition part = make_equitable_partition(a, {{0}, {1, 2}});
    CHECK(part.quotient(0, 0) == 0);
    CHECK(part.quotient(0, 1) == 2);
    CHECK(part.quotient(1, 0) == 1);
    CHECK(part.quotient(1, 1) == 0);
    // {0,1},{2} is not equitable: row sums into {2} differ inside the first block.
    CHECK_THROWS_AS(make_equitable_partition(a, {{0, 1}, {2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_equitable_partition(a, {{0}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_equitable_partition(a, {{0}, {}}), std::invalid_argument);
}

TEST_CASE("coronal through an equitable quotient matches the direct coronal") {
    const Digraph star(3, {{0, 1}, {0, 2}, {1, 0}, {2, 0}});
    const ExactMatrix a = matrix_of(star, MatrixKind::adjacency);
    const EquitablePartition part = make_equitable_partition(a, {{0}, {1, 2}});
    CHECK(coronal_equitable(part) == coronal(a));
    CHECK(coronal_equitable(part) == RF({4, 3}, {-2, 0, 1}));
}

TEST_CASE("two-block quotient closed form") {
    CHECK(coronal_quotient2(1, 2, Rational(0), Rational(2), Rational(1), Rational(0)) ==
          RF({4, 3}, {-2, 0, 1}));
    CHECK_THROWS_AS(coronal_quotient2(0, 2, Rational(0), Rational(1), Rational(1), Rational(0)),
                    std::invalid_argument);
}

TEST_CASE("join coronal for out-regular parts matches the built join") {
    const Digraph j = join(make_family(Family::cycle, 2), make_family(Family::cycle, 3));
    for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::signless_laplacian}) {
        CAPTURE(matrix_kind_name(kind));
        CHECK(coronal_join_outregular({{2, 1}, {3, 1}}, kind) == coronal(matrix_of(j, kind)));
    }
    CHECK_THROWS_AS(coronal_join_outregular({}, MatrixKind::adjacency), std::invalid_argument);
    CHECK_THROWS_AS(coronal_join_outregular({{2, 5}}, MatrixKind::adjacency),
                    std::invalid_argument);
}

TEST_CASE("semi-regular bipartite coronal closed form") {
    CHECK(coronal_semiregular_bipartite(1, 2, 2, 1, MatrixKind::adjacency) ==
          RF({4, 3}, {-2, 0, 1}));
    // Build the digraph: V1 → V2 out-degree r1, V2 → V1 out-degree r2, circulant pattern.
    const int n1 = 2, n2 = 4, r1 = 2, r2 = 1;
    std::vector<Arc> arcs;
    for (int p = 0; p < n1; ++p)
        for (int s = 0; s < r1; ++s) arcs.push_back({p, n1 + (p + s) % n2});
    for (int q = 0; q < n2; ++q)
        for (int s = 0; s < r2; ++s) arcs.push_back({n1 + q, (q + s) % n1});
    const Digraph d(n1 + n2, arcs);
    for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::signless_laplacian}) {
        CAPTURE(matrix_kind_name(kind));
        CHECK(coronal_semiregular_bipartite(n1, n2, r1, r2, kind) ==
              coronal(matrix_of(d, kind)));
    }
    CHECK_THROWS_AS(coronal_semiregular_bipartite(1, 2, 3, 1, MatrixKind::adjacency),
                    std::invalid_argument);
}

TEST_CASE("full-side bipartite coronal closed form") {
    CHECK(coronal_fullside_bipartite(2, 3, 2) == RF({8, 5}, {-2, 0, 1}));
    // V1 complete towards V2, k back-arcs in row-major order.
    const int n1 = 2, n2 = 3, k = 2;
    std::vector<Arc> arcs;
    for (int p = 0; p < n1; ++p)
        for (int q = 0; q < n2; ++q) arcs.push_back({p, n1 + q});
    for (int idx = 0; idx < k; ++idx) arcs.push_back({n1 + idx / n1, idx % n1});
    const Digraph d(n1 + n2, arcs);
    CHECK(coronal_fullside_bipartite(n1, n2, k) ==
          coronal(matrix_of(d, MatrixKind::adjacency)));
    CHECK_THROWS_AS(coronal_fullside_bipartite(2, 3, 7), std::invalid_argument);
}

TEST_CASE("directed path coronal closed forms") {
    CHECK(coronal_path(2, MatrixKind::signless_laplacian) == RF({2}, {-1, 1}));
    CHECK(coronal_path(2, MatrixKind::adjacency) == RF({1, 2}, {0, 0, 1}));
    // (Σ k λ^{k-1}) / λ^n after cancelling one power of λ.
    CHECK(coronal_path(3, MatrixKind::adjacency) == RF({1, 2, 3}, {0, 0, 0, 1}));
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        const ExactMatrix m = matrix_of(make_family(Family::path, n), MatrixKind::adjacency);
        CHECK(coronal_path(n, MatrixKind::adjacency) == coronal(m));
        CHECK(coronal_path(n, MatrixKind::signless_laplacian) ==
              coronal(matrix_of(make_family(Family::path, n), MatrixKind::signless_laplacian)));
    }
    CHECK_THROWS_AS(coronal_path(3, MatrixKind::laplacian), std::invalid_argument);
    CHECK_THROWS_AS(coronal_path(0, MatrixKind::adjacency), std::invalid_argument);
}

TEST_CASE("family dispatch routes parameters and rejects bad input") {
    CHECK(coronal_family({"path", {Rational(4)}}, MatrixKind::adjacency) ==
          coronal_path(4, MatrixKind::adjacency));
    CHECK(coronal_family({"constant-rowsum", {Rational(3), Rational(1)}},
                         MatrixKind::adjacency) == RF({3}, {-1, 1}));
    CHECK(coronal_family({"quotient2",
                          {Rational(1), Rational(2), Rational(0), Rational(2), Rational(1),
                           Rational(0)}},
                         MatrixKind::adjacency) == RF({4, 3}, {-2, 0, 1}));
    CHECK(coronal_family({"join", {Rational(2), Rational(1), Rational(3), Rational(1)}},
                         MatrixKind::adjacency) ==
          coronal_join_outregular({{2, 1}, {3, 1}}, MatrixKind::adjacency));
    CHECK(coronal_family({"semiregular-bipartite",
                          {Rational(1), Rational(2), Rational(2), Rational(1)}},
                         MatrixKind::adjacency) == RF({4, 3}, {-2, 0, 1}));
    CHECK(coronal_family({"fullside-bipartite", {Rational(2), Rational(3), Rational(2)}},
                         MatrixKind::adjacency) == RF({8, 5}, {-2, 0, 1}));

    CHECK_THROWS_AS(coronal_family({"path", {}}, MatrixKind::adjacency), std::invalid_argument);
    CHECK_THROWS_AS(coronal_family({"path", {make_rational(3, 2)}}, MatrixKind::adjacency),
                    std::invalid_argument);
    CHECK_THROWS_AS(coronal_family({"join", {Rational(2)}}, MatrixKind::adjacency),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        coronal_family({"fullside-bipartite", {Rational(2), Rational(3), Rational(2)}},
                       MatrixKind::laplacian),
        std::invalid_argument);
    CHECK_THROWS_AS(coronal_family({"mystery", {}}, MatrixKind::adjacency),
                    std::invalid_argument);
}
