#pragma once

#include <stdexcept>
#include <vector>

#include "hborbit/linalg.hpp"
#include "hborbit/lorenz.hpp"
#include "hborbit/trig_poly.hpp"

namespace hborbit {

// Unknowns of the harmonic balance system: the cyclic frequency plus one
// trig polynomial per phase coordinate, all truncated at the same h.
// Flattening convention (canonical unknown ordering):
//   [omega, x10, x20, x30, then per harmonic i=1..h: c1i, s1i, c2i, s2i, c3i, s3i]
// which is 6h + 4 unknowns.
template <class Real>
struct HBState {
    Real omega{};
    TrigPoly<Real> x1;
    TrigPoly<Real> x2;
    TrigPoly<Real> x3;

    int harmonics() const { return x1.harmonics(); }

    bool operator==(const HBState&) const = default;
};

inline int unknown_count(int h) { return 6 * h + 4; }

// Canonical equation ordering: per harmonic i=1..h the six balance rows
// (k=1 cos, k=1 sin, k=2 cos, k=2 sin, k=3 cos, k=3 sin), then the three
// mean rows for k=1..3, then the section anchor. k names the coordinate
// whose equation the row balances.
inline int row_harmonic(int i, int k, bool sine) { return 6 * (i - 1) + 2 * (k - 1) + (sine ? 1 : 0); }
inline int row_mean(int k, int h) { return 6 * h + (k - 1); }
inline int row_anchor(int h) { return 6 * h + 3; }

inline int col_omega() { return 0; }
inline int col_mean(int k) { return k; }
inline int col_amp(int i, int k, bool sine) { return 4 + 6 * (i - 1) + 2 * (k - 1) + (sine ? 1 : 0); }

template <class Real>
void require_consistent(const HBState<Real>& z) {
    if (z.x2.harmonics() != z.x1.harmonics() || z.x3.harmonics() != z.x1.harmonics())
        throw std::invalid_argument("HBState: polynomials disagree on harmonic count");
}

template <class Real>
bool is_finite(const HBState<Real>& z) {
    return is_finite(z.omega) && is_finite(z.x1) && is_finite(z.x2) && is_finite(z.x3);
}

template <class Real>
std::vector<Real> flatten(const HBState<Real>& z) {
    require_consistent(z);
    const int h = z.harmonics();
    std::vector<Real> v;
    v.reserve(static_cast<size_t>(unknown_count(h)));
    v.push_back(z.omega);
    v.push_back(z.x1.mean);
    v.push_back(z.x2.mean);
    v.push_back(z.x3.mean);
    for (int i = 1; i <= h; ++i) {
        v.push_back(z.x1.c(i));
        v.push_back(z.x1.s(i));
        v.push_back(z.x2.c(i));
        v.push_back(z.x2.s(i));
        v.push_back(z.x3.c(i));
        v.push_back(z.x3.s(i));
    }
    return v;
}

template <class Real>
HBState<Real> unflatten(const std::vector<Real>& v, int h) {
    if (static_cast<int>(v.size()) != unknown_count(h))
        throw std::invalid_argument("unflatten: vector length is not 6h+4");
    HBState<Real> z;
    z.omega = v[0];
    z.x1 = TrigPoly<Real>(h);
    z.x2 = TrigPoly<Real>(h);
    z.x3 = TrigPoly<Real>(h);
    z.x1.mean = v[1];
    z.x2.mean = v[2];
    z.x3.mean = v[3];
    size_t at = 4;
    for (int i = 1; i <= h; ++i) {
        z.x1.c(i) = v[at++];
        z.x1.s(i) = v[at++];
        z.x2.c(i) = v[at++];
        z.x2.s(i) = v[at++];
        z.x3.c(i) = v[at++];
        z.x3.s(i) = v[at++];
    }
    return z;
}

// Zero-pads all three polynomials to new_h harmonics.
template <class Real>
HBState<Real> pad_state(const HBState<Real>& z, int new_h) {
    HBState<Real> out;
    out.omega = z.omega;
    out.x1 = padded(z.x1, new_h);
    out.x2 = padded(z.x2, new_h);
    out.x3 = padded(z.x3, new_h);
    return out;
}

// The exact all-amplitudes-zero root sitting on an equilibrium: means at
// the equilibrium coordinates, any omega. Satisfies every balance equation
// and the anchor identically.
template <class Real>
HBState<Real> equilibrium_state(const LorenzParams<Real>& p, int h, bool positive_branch,
                                const Real& omega) {
    const auto eq = equilibria(p);
    const State3<Real>& e = positive_branch ? eq.second : eq.first;
    HBState<Real> z;
    z.omega = omega;
    z.x1 = TrigPoly<Real>(h);
    z.x2 = TrigPoly<Real>(h);
    z.x3 = TrigPoly<Real>(h);
    z.x1.mean = e.x1;
    z.x2.mean = e.x2;
    z.x3.mean = e.x3;
    return z;
}

// Residual of the 6h+4 balance equations at z. Row r is the Fourier
// coefficient (of the matching harmonic/mean) of the defect
//   delta_k = d/dt xk~ - fk(x1~, x2~, x3~),
// truncated at h, except the last row which is the section anchor
//   x30 + sum_i c3i - (r - 1).
template <class Real>
std::vector<Real> assemble_residual(const HBState<Real>& z, const LorenzParams<Real>& p) {
    require_consistent(z);
    const int h = z.harmonics();
    const TrigPoly<Real> p13 = truncated_product(z.x1, z.x3);
    const TrigPoly<Real> p12 = truncated_product(z.x1, z.x2);

    std::vector<Real> f(static_cast<size_t>(unknown_count(h)));
    for (int i = 1; i <= h; ++i) {
        const Real iw = Real(i) * z.omega;
        f[row_harmonic(i, 1, false)] = iw * z.x1.s(i) - p.sigma * z.x2.c(i) + p.sigma * z.x1.c(i);
        f[row_harmonic(i, 1, true)] = -iw * z.x1.c(i) - p.sigma * z.x2.s(i) + p.sigma * z.x1.s(i);
        f[row_harmonic(i, 2, false)] = iw * z.x2.s(i) - p.r * z.x1.c(i) + z.x2.c(i) + p13.c(i);
        f[row_harmonic(i, 2, true)] = -iw * z.x2.c(i) - p.r * z.x1.s(i) + z.x2.s(i) + p13.s(i);
        f[row_harmonic(i, 3, false)] = iw * z.x3.s(i) + p.b * z.x3.c(i) - p12.c(i);
        f[row_harmonic(i, 3, true)] = -iw * z.x3.c(i) + p.b * z.x3.s(i) - p12.s(i);
    }
    f[row_mean(1, h)] = p.sigma * (z.x1.mean - z.x2.mean);
    f[row_mean(2, h)] = -p.r * z.x1.mean + z.x2.mean + p13.mean;
    f[row_mean(3, h)] = p.b * z.x3.mean - p12.mean;

    Real anchor = z.x3.mean - (p.r - Real(1));
    for (int i = 1; i <= h; ++i) anchor += z.x3.c(i);
    f[row_anchor(h)] = anchor;
    return f;
}

namespace detail {

// Adds sign * (coefficients of dp) into column col of the k-th coordinate's
// equation rows. dp is the derivative of a truncated product along one basis
// direction, which by bilinearity is again a truncated product.
template <class Real>
void add_product_column(Matrix<Real>& jac, int k, int h, int col, const Real& sign,
                        const TrigPoly<Real>& dp) {
    for (int i = 1; i <= h; ++i) {
        jac(row_harmonic(i, k, false), col) += sign * dp.c(i);
        jac(row_harmonic(i, k, true), col) += sign * dp.s(i);
    }
    jac(row_mean(k, h), col) += sign * dp.mean;
}

}  // namespace detail

// Exact Jacobian of assemble_residual in the canonical (row, column) layout.
// The residual is quadratic in z: linear terms are entered directly, and the
// bilinear product terms differentiate by replacing one factor with a basis
// polynomial and reusing truncated_product.
template <class Real>
Matrix<Real> assemble_jacobian(const HBState<Real>& z, const LorenzParams<Real>& p) {
    require_consistent(z);
    const int h = z.harmonics();
    const int n = unknown_count(h);
    const Real one(1);
    Matrix<Real> jac(n, n);

    for (int i = 1; i <= h; ++i) {
        const Real iw = Real(i) * z.omega;

        // d/d omega of the i w terms.
        jac(row_harmonic(i, 1, false), col_omega()) = Real(i) * z.x1.s(i);
        jac(row_harmonic(i, 1, true), col_omega()) = -Real(i) * z.x1.c(i);
        jac(row_harmonic(i, 2, false), col_omega()) = Real(i) * z.x2.s(i);
        jac(row_harmonic(i, 2, true), col_omega()) = -Real(i) * z.x2.c(i);
        jac(row_harmonic(i, 3, false), col_omega()) = Real(i) * z.x3.s(i);
        jac(row_harmonic(i, 3, true), col_omega()) = -Real(i) * z.x3.c(i);

        // k=1 rows: i w s1i - sigma c2i + sigma c1i and -i w c1i - sigma s2i + sigma s1i.
        jac(row_harmonic(i, 1, false), col_amp(i, 1, true)) += iw;
        jac(row_harmonic(i, 1, false), col_amp(i, 2, false)) += -p.sigma;
        jac(row_harmonic(i, 1, false), col_amp(i, 1, false)) += p.sigma;
        jac(row_harmonic(i, 1, true), col_amp(i, 1, false)) += -iw;
        jac(row_harmonic(i, 1, true), col_amp(i, 2, true)) += -p.sigma;
        jac(row_harmonic(i, 1, true), col_amp(i, 1, true)) += p.sigma;

        // k=2 rows, linear part: i w s2i - r c1i + c2i and -i w c2i - r s1i + s2i.
        jac(row_harmonic(i, 2, false), col_amp(i, 2, true)) += iw;
        jac(row_harmonic(i, 2, false), col_amp(i, 1, false)) += -p.r;
        jac(row_harmonic(i, 2, false), col_amp(i, 2, false)) += one;
        jac(row_harmonic(i, 2, true), col_amp(i, 2, false)) += -iw;
        jac(row_harmonic(i, 2, true), col_amp(i, 1, true)) += -p.r;
        jac(row_harmonic(i, 2, true), col_amp(i, 2, true)) += one;

        // k=3 rows, linear part: i w s3i + b c3i and -i w c3i + b s3i.
        jac(row_harmonic(i, 3, false), col_amp(i, 3, true)) += iw;
        jac(row_harmonic(i, 3, false), col_amp(i, 3, false)) += p.b;
        jac(row_harmonic(i, 3, true), col_amp(i, 3, false)) += -iw;
        jac(row_harmonic(i, 3, true), col_amp(i, 3, true)) += p.b;
    }

    // Mean rows, linear part.
    jac(row_mean(1, h), col_mean(1)) += p.sigma;
    jac(row_mean(1, h), col_mean(2)) += -p.sigma;
    jac(row_mean(2, h), col_mean(1)) += -p.r;
    jac(row_mean(2, h), col_mean(2)) += one;
    jac(row_mean(3, h), col_mean(3)) += p.b;

    // Anchor row: unit coefficients on x30 and every c3i.
    jac(row_anchor(h), col_mean(3)) += one;
    for (int i = 1; i <= h; ++i) jac(row_anchor(h), col_amp(i, 3, false)) += one;

    // Product terms. x1~ x3~ enters the k=2 rows with +, x1~ x2~ enters the
    // k=3 rows with -. Differentiating along a basis direction of x1~ hits
    // both products; directions of x2~ and x3~ hit one each.
    TrigPoly<Real> basis(h);
    auto product_cols = [&](int coord) {
        const Real plus(1), minus(-1);
        auto emit = [&](int col) {
            if (coord == 1) {
                detail::add_product_column(jac, 2, h, col, plus, truncated_product(basis, z.x3));
                detail::add_product_column(jac, 3, h, col, minus, truncated_product(basis, z.x2));
            } else if (coord == 2) {
                detail::add_product_column(jac, 3, h, col, minus, truncated_product(z.x1, basis));
            } else {
                detail::add_product_column(jac, 2, h, col, plus, truncated_product(z.x1, basis));
            }
        };
        basis.mean = one;
        emit(col_mean(coord));
        basis.mean = Real(0);
        for (int i = 1; i <= h; ++i) {
            basis.c(i) = one;
            emit(col_amp(i, coord, false));
            basis.c(i) = Real(0);
            basis.s(i) = one;
            emit(col_amp(i, coord, true));
            basis.s(i) = Real(0);
        }
    };
    product_cols(1);
    product_cols(2);
    product_cols(3);

    return jac;
}

}  // namespace hborbit
