#include <corona/matrix.hpp>

#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"

using corona::ExactMatrix;
using corona::Matrix;
using corona::PolyMatrix;
using corona::Polynomial;
using corona::Rational;
using corona::det;
using corona::det_bareiss;
using corona::inverse;
using corona::kronecker;
using corona::lambda_identity_minus;
using corona::sum_entries;
using corona::to_poly_matrix;
using corona::to_ratfunc_matrix;
using corona::trace;
using testutil::P;

namespace {

ExactMatrix from_longs(std::size_t rows, std::size_t cols, std::vector<long> entries) {
    std::vector<Rational> data(entries.begin(), entries.end());
    return ExactMatrix(rows, cols, std::move(data));
}

}  // namespace

TEST_CASE("constructors validate the data size") {
    CHECK_THROWS_AS(ExactMatrix(2, 2, std::vector<Rational>(3)), std::invalid_argument);
    const ExactMatrix z(2, 3);
    CHECK(z.rows() == 2);
    CHECK(z.cols() == 3);
    CHECK(z(1, 2) == 0);
}

TEST_CASE("identity and ones builders") {
    const ExactMatrix i = ExactMatrix::identity(3);
    CHECK(i(0, 0) == 1);
    CHECK(i(0, 1) == 0);
    CHECK(sum_entries(i) == 3);
    CHECK(sum_entries(ExactMatrix::ones(2, 3)) == 6);
}

TEST_CASE("addition and multiplication respect shapes") {
    const ExactMatrix a = from_longs(2, 2, {1, 2, 3, 4});
    const ExactMatrix b = from_longs(2, 2, {0, 1, 1, 0});
    CHECK(a + b == from_longs(2, 2, {1, 3, 4, 4}));
    CHECK(a - a == ExactMatrix(2, 2));
    CHECK(a * b == from_longs(2, 2, {2, 1, 4, 3}));
    CHECK(b * a == from_longs(2, 2, {3, 4, 1, 2}));
    CHECK_THROWS_AS(a + ExactMatrix(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(a * ExactMatrix(3, 2), std::invalid_argument);
}

TEST_CASE("scalar multiplication works from both sides") {
    const ExactMatrix a = from_longs(2, 2, {1, 2, 3, 4});
    CHECK(Rational(2) * a == a * Rational(2));
    CHECK((a * Rational(2))(1, 1) == 8);
}

TEST_CASE("transpose flips indices") {
    const ExactMatrix a = from_longs(2, 3, {1, 2, 3, 4, 5, 6});
    const ExactMatrix t = a.transpose();
    CHECK(t.rows() == 3);
    CHECK(t(2, 1) == 6);
    CHECK(t.transpose() == a);
}

TEST_CASE("trace requires a square matrix") {
    CHECK(trace(from_longs(2, 2, {1, 2, 3, 4})) == 5);
    CHECK_THROWS_AS(trace(ExactMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("kronecker product layout and values") {
    const ExactMatrix a = from_longs(2, 2, {1, 2, 0, 1});
    const ExactMatrix b = from_longs(2, 2, {0, 1, 1, 0});
    const ExactMatrix k = kronecker(a, b);
    REQUIRE(k.rows() == 4);
    REQUIRE(k.cols() == 4);
    CHECK(k == from_longs(4, 4, {0, 1, 0, 2, 1, 0, 2, 0, 0, 0, 0, 1, 0, 0, 1, 0}));
    // I ⊗ M is block diagonal.
    const ExactMatrix blocks = kronecker(ExactMatrix::identity(2), b);
    CHECK(blocks(0, 1) == 1);
    CHECK(blocks(0, 3) == 0);
    CHECK(blocks(2, 3) == 1);
}

TEST_CASE("determinant of small matrices") {
    CHECK(det(from_longs(1, 1, {7})) == 7);
    CHECK(det(from_longs(2, 2, {1, 2, 3, 4})) == -2);
    CHECK(det(from_longs(3, 3, {2, 0, 1, 1, 1, 0, 0, 3, 1})) == 5);
    CHECK(det(ExactMatrix::identity(4)) == 1);
}

TEST_CASE("determinant handles zero pivots by row swaps") {
    CHECK(det(from_longs(2, 2, {0, 1, 1, 0})) == -1);
    CHECK(det(from_longs(3, 3, {0, 0, 1, 0, 1, 0, 1, 0, 0})) == -1);
}

TEST_CASE("determinant of a singular matrix is zero") {
    CHECK(det(from_longs(2, 2, {1, 2, 2, 4})) == 0);
    CHECK(det(ExactMatrix(3, 3)) == 0);
}

TEST_CASE("determinant rejects non-square input") {
    CHECK_THROWS_AS(det(ExactMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("inverse times the original is the identity") {
    const ExactMatrix a = from_longs(3, 3, {2, 0, 1, 1, 1, 0, 0, 3, 1});
    CHECK(inverse(a) * a == ExactMatrix::identity(3));
    CHECK(a * inverse(a) == ExactMatrix::identity(3));
}

TEST_CASE("inverse rejects singular matrices") {
    CHECK_THROWS_AS(inverse(from_longs(2, 2, {1, 2, 2, 4})), std::domain_error);
    CHECK_THROWS_WITH_AS(inverse(ExactMatrix(1, 1)), "inverse: singular matrix",
                         std::domain_error);
}

TEST_CASE("lambda_identity_minus builds the resolvent argument") {
    const PolyMatrix lm = lambda_identity_minus(from_longs(2, 2, {0, 1, 1, 0}));
    CHECK(lm(0, 0) == P({0, 1}));
    CHECK(lm(0, 1) == P({-1}));
    CHECK_THROWS_AS(lambda_identity_minus(ExactMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("fraction-free determinant agrees with field elimination") {
    const ExactMatrix m = from_longs(3, 3, {0, 1, 0, 0, 0, 1, 1, 1, 0});
    const Polynomial f = det_bareiss(lambda_identity_minus(m));
    // det over the rational-function field of the same matrix.
    const auto rf = det(to_ratfunc_matrix(lambda_identity_minus(m)));
    CHECK(corona::RationalFunction(f) == rf);
    CHECK(f.is_monic());
    CHECK(f.degree() == 3);
}

TEST_CASE("map lifts entries into another ring") {
    const ExactMatrix a = from_longs(2, 2, {1, 2, 3, 4});
    CHECK(to_poly_matrix(a)(1, 0) == Polynomial(3L));
    CHECK(to_ratfunc_matrix(a)(0, 1) == corona::RationalFunction(Rational(2)));
}
