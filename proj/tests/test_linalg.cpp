#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hborbit/linalg.hpp"
#include "hborbit/precision.hpp"

using namespace hborbit;

TEST_CASE("solves a 2x2 system exactly") {
    Matrix<double> a(2, 2);
    a(0, 0) = 2;
    a(0, 1) = 1;
    a(1, 0) = 1;
    a(1, 1) = 3;
    const std::vector<double> x = lu_solve(a, {5, 10});
    CHECK(x[0] == doctest::Approx(1.0));
    CHECK(x[1] == doctest::Approx(3.0));
}

TEST_CASE("solves random systems to small residual") {
    std::mt19937 rng(51);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int n : {1, 3, 10, 60}) {
        Matrix<double> a(n, n);
        std::vector<double> b(n);
        for (int i = 0; i < n; ++i) {
            b[i] = u(rng);
            for (int j = 0; j < n; ++j) a(i, j) = u(rng) + (i == j ? 3.0 : 0.0);
        }
        const std::vector<double> x = lu_solve(a, b);
        for (int i = 0; i < n; ++i) {
            double acc = -b[i];
            for (int j = 0; j < n; ++j) acc += a(i, j) * x[j];
            CHECK(std::abs(acc) <= 1e-11);
        }
    }
}

TEST_CASE("pivoting handles a zero on the diagonal") {
    Matrix<double> a(2, 2);
    a(0, 0) = 0;
    a(0, 1) = 1;
    a(1, 0) = 1;
    a(1, 1) = 0;
    const std::vector<double> x = lu_solve(a, {2, 3});
    CHECK(x[0] == 3.0);
    CHECK(x[1] == 2.0);
}

TEST_CASE("reports singular matrices") {
    Matrix<double> zero_col(3, 3);
    zero_col(0, 1) = 1;
    zero_col(1, 2) = 1;
    zero_col(2, 1) = 2;  // column 0 identically zero
    CHECK_THROWS_AS(lu_solve(zero_col, {1, 1, 1}), SingularMatrixError);

    Matrix<double> rank1(2, 2);
    rank1(0, 0) = 1;
    rank1(0, 1) = 2;
    rank1(1, 0) = 2;
    rank1(1, 1) = 4;
    CHECK_THROWS_AS(lu_solve(rank1, {1, 1}), SingularMatrixError);

    CHECK_THROWS_AS(lu_solve(Matrix<double>(2, 2), {1, 1}), SingularMatrixError);
}

TEST_CASE("rejects mismatched shapes") {
    CHECK_THROWS_AS(lu_solve(Matrix<double>(2, 3), {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(lu_solve(Matrix<double>(2, 2), {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("works at extended precision") {
    Matrix<ExtReal> a(2, 2);
    a(0, 0) = 3;
    a(0, 1) = 1;
    a(1, 0) = 1;
    a(1, 1) = 2;
    const std::vector<ExtReal> x = lu_solve(a, {ExtReal(9), ExtReal(8)});
    using std::abs;
    CHECK(abs(x[0] - 2) < ExtReal("1e-28"));
    CHECK(abs(x[1] - 3) < ExtReal("1e-28"));
}
