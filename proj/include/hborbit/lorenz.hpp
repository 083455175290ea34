#pragma once

#include <stdexcept>
#include <utility>

#include "hborbit/real.hpp"

namespace hborbit {

// Parameters of the Lorenz equations
//   x1' = sigma (x2 - x1)
//   x2' = r x1 - x2 - x1 x3
//   x3' = x1 x2 - b x3
// Valid ranges: sigma > 0, r > 1, b > 0 (so the off-origin equilibria are real).
template <class Real>
struct LorenzParams {
    Real sigma{};
    Real r{};
    Real b{};

    static LorenzParams classical() { return {Real(10), Real(28), Real(8) / Real(3)}; }
};

template <class Real>
struct State3 {
    Real x1{};
    Real x2{};
    Real x3{};
};

template <class Real>
bool is_finite(const State3<Real>& s) {
    return is_finite(s.x1) && is_finite(s.x2) && is_finite(s.x3);
}

template <class Real>
Real max_abs_delta(const State3<Real>& a, const State3<Real>& b) {
    using std::abs;
    Real d = abs(a.x1 - b.x1);
    if (abs(a.x2 - b.x2) > d) d = abs(a.x2 - b.x2);
    if (abs(a.x3 - b.x3) > d) d = abs(a.x3 - b.x3);
    return d;
}

template <class Real>
State3<Real> vector_field(const State3<Real>& s, const LorenzParams<Real>& p) {
    return {p.sigma * (s.x2 - s.x1),
            p.r * s.x1 - s.x2 - s.x1 * s.x3,
            s.x1 * s.x2 - p.b * s.x3};
}

// The two equilibria off the origin,
//   (-q, -q, r-1) and (+q, +q, r-1) with q = sqrt(b (r-1));
// requires r > 1.
template <class Real>
std::pair<State3<Real>, State3<Real>> equilibria(const LorenzParams<Real>& p) {
    if (!(p.r > Real(1)))
        throw std::invalid_argument("equilibria: r must exceed 1");
    using std::sqrt;
    const Real q = sqrt(p.b * (p.r - Real(1)));
    const Real z = p.r - Real(1);
    return {State3<Real>{-q, -q, z}, State3<Real>{q, q, z}};
}

}  // namespace hborbit
