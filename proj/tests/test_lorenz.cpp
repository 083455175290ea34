#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hborbit/lorenz.hpp"

using namespace hborbit;

namespace {
const LorenzParams<double> kClassical = LorenzParams<double>::classical();
}

TEST_CASE("vector field at the origin vanishes") {
    const State3<double> f = vector_field(State3<double>{0, 0, 0}, kClassical);
    CHECK(f.x1 == 0.0);
    CHECK(f.x2 == 0.0);
    CHECK(f.x3 == 0.0);
}

TEST_CASE("vector field vanishes at (sqrt(72), sqrt(72), 27)") {
    const double q = std::sqrt(72.0);
    const State3<double> f = vector_field(State3<double>{q, q, 27.0}, kClassical);
    CHECK(std::abs(f.x1) <= 1e-13);
    CHECK(std::abs(f.x2) <= 1e-13);
    CHECK(std::abs(f.x3) <= 1e-13);
}

TEST_CASE("vector field at (1,1,1)") {
    const State3<double> f = vector_field(State3<double>{1, 1, 1}, kClassical);
    CHECK(f.x1 == 0.0);
    CHECK(f.x2 == 26.0);
    CHECK(f.x3 == doctest::Approx(-5.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("equilibria at classical parameters") {
    const auto [o1, o2] = equilibria(kClassical);
    CHECK(o2.x1 == doctest::Approx(8.485281374238571).epsilon(1e-15));
    CHECK(o2.x2 == doctest::Approx(8.485281374238571).epsilon(1e-15));
    CHECK(o2.x3 == 27.0);
    CHECK(o1.x1 == -o2.x1);
    CHECK(o1.x2 == -o2.x2);
    CHECK(o1.x3 == o2.x3);
}

TEST_CASE("equilibria with b(r-1) = 1") {
    const auto [o1, o2] = equilibria(LorenzParams<double>{10, 2, 1});
    CHECK(o2.x1 == 1.0);
    CHECK(o2.x2 == 1.0);
    CHECK(o2.x3 == 1.0);
    CHECK(o1.x1 == -1.0);
}

TEST_CASE("equilibria reject r <= 1") {
    CHECK_THROWS_AS(equilibria(LorenzParams<double>{10, 1.0, 8.0 / 3.0}), std::invalid_argument);
    CHECK_THROWS_AS(equilibria(LorenzParams<double>{10, 0.5, 8.0 / 3.0}), std::invalid_argument);
}

TEST_CASE("vector field vanishes at both equilibria for random parameters") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> sig(1.0, 20.0), rr(1.5, 50.0), bb(0.5, 5.0);
    for (int trial = 0; trial < 50; ++trial) {
        const LorenzParams<double> p{sig(rng), rr(rng), bb(rng)};
        const auto [o1, o2] = equilibria(p);
        for (const auto& eq : {o1, o2}) {
            const double scale =
                std::max({std::abs(eq.x1), std::abs(eq.x2), std::abs(eq.x3), 1.0});
            const State3<double> f = vector_field(eq, p);
            CHECK(std::abs(f.x1) <= 1e-14 * scale * p.sigma);
            CHECK(std::abs(f.x2) <= 1e-14 * scale * p.r);
            CHECK(std::abs(f.x3) <= 1e-14 * scale * p.b);
        }
    }
}

TEST_CASE("field respects the (x1,x2) -> (-x1,-x2) symmetry exactly") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-30.0, 30.0);
    for (int trial = 0; trial < 100; ++trial) {
        const State3<double> s{u(rng), u(rng), u(rng)};
        const State3<double> f = vector_field(s, kClassical);
        const State3<double> g = vector_field(State3<double>{-s.x1, -s.x2, s.x3}, kClassical);
        CHECK(g.x1 == -f.x1);
        CHECK(g.x2 == -f.x2);
        CHECK(g.x3 == f.x3);
    }
}
