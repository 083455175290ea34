#pragma once

#include <stdexcept>
#include <vector>

#include "hborbit/real.hpp"

namespace hborbit {

// Truncated trigonometric polynomial
//   mean + sum_{i=1..h} (cos_amp[i] cos(i w t) + sin_amp[i] sin(i w t)).
// Amplitude indices are 1-based in every formula below; index 0 is the mean.
// Storage is 0-based, so the i-th harmonic lives at [i-1]; use c(i)/s(i).
template <class Real>
struct TrigPoly {
    Real mean{};
    std::vector<Real> cos_amp;
    std::vector<Real> sin_amp;

    TrigPoly() = default;
    explicit TrigPoly(int h) : cos_amp(static_cast<size_t>(h)), sin_amp(static_cast<size_t>(h)) {}

    int harmonics() const { return static_cast<int>(cos_amp.size()); }

    Real& c(int i) { return cos_amp[static_cast<size_t>(i - 1)]; }
    Real& s(int i) { return sin_amp[static_cast<size_t>(i - 1)]; }
    const Real& c(int i) const { return cos_amp[static_cast<size_t>(i - 1)]; }
    const Real& s(int i) const { return sin_amp[static_cast<size_t>(i - 1)]; }

    bool operator==(const TrigPoly&) const = default;
};

template <class Real>
bool is_finite(const TrigPoly<Real>& p) {
    if (!is_finite(p.mean)) return false;
    for (const Real& v : p.cos_amp)
        if (!is_finite(v)) return false;
    for (const Real& v : p.sin_amp)
        if (!is_finite(v)) return false;
    return static_cast<int>(p.sin_amp.size()) == p.harmonics();
}

template <class Real>
Real evaluate(const TrigPoly<Real>& p, const Real& omega, const Real& t) {
    using std::cos;
    using std::sin;
    Real acc = p.mean;
    for (int i = 1; i <= p.harmonics(); ++i) {
        const Real phase = Real(i) * omega * t;
        acc += p.c(i) * cos(phase) + p.s(i) * sin(phase);
    }
    return acc;
}

// d/dt of the polynomial at frequency omega: the mean drops,
// cos' = i w s, sin' = -i w c.
template <class Real>
TrigPoly<Real> differentiate(const TrigPoly<Real>& p, const Real& omega) {
    TrigPoly<Real> d(p.harmonics());
    for (int i = 1; i <= p.harmonics(); ++i) {
        const Real iw = Real(i) * omega;
        d.c(i) = iw * p.s(i);
        d.s(i) = -iw * p.c(i);
    }
    return d;
}

// Pointwise product truncated back to h harmonics. With f written with
// coefficients (a0, a_m, b_m) and g with (A0, A_m, B_m), the result is
//   alpha_0 = a0 A0 + 1/2 sum_{m=1..h} (a_m A_m + b_m B_m)
//   alpha_i = a0 A_i + a_i A0
//           + 1/2 sum_{m=1..h-i} (a_m A_{m+i} + b_m B_{m+i})
//           + 1/2 sum_{m=1..i-1} (a_m A_{i-m} - b_m B_{i-m})
//           + 1/2 sum_{m=i+1..h} (a_m A_{m-i} + b_m B_{m-i})
//   beta_i  = a0 B_i + b_i A0
//           + 1/2 sum_{m=1..h-i} (a_m B_{m+i} - b_m A_{m+i})
//           + 1/2 sum_{m=1..i-1} (a_m B_{i-m} + b_m A_{i-m})
//           + 1/2 sum_{m=i+1..h} (-a_m B_{m-i} + b_m A_{m-i})
// Empty ranges contribute nothing. Harmonics above h are discarded.
template <class Real>
TrigPoly<Real> truncated_product(const TrigPoly<Real>& f, const TrigPoly<Real>& g) {
    const int h = f.harmonics();
    if (g.harmonics() != h)
        throw std::invalid_argument("truncated_product: harmonic counts differ");
    const Real half = Real(1) / Real(2);
    TrigPoly<Real> out(h);

    Real a0 = f.mean * g.mean;
    for (int m = 1; m <= h; ++m)
        a0 += half * (f.c(m) * g.c(m) + f.s(m) * g.s(m));
    out.mean = a0;

    for (int i = 1; i <= h; ++i) {
        Real ci = f.mean * g.c(i) + f.c(i) * g.mean;
        Real si = f.mean * g.s(i) + f.s(i) * g.mean;
        for (int m = 1; m <= h - i; ++m) {
            ci += half * (f.c(m) * g.c(m + i) + f.s(m) * g.s(m + i));
            si += half * (f.c(m) * g.s(m + i) - f.s(m) * g.c(m + i));
        }
        for (int m = 1; m <= i - 1; ++m) {
            ci += half * (f.c(m) * g.c(i - m) - f.s(m) * g.s(i - m));
            si += half * (f.c(m) * g.s(i - m) + f.s(m) * g.c(i - m));
        }
        for (int m = i + 1; m <= h; ++m) {
            ci += half * (f.c(m) * g.c(m - i) + f.s(m) * g.s(m - i));
            si += half * (f.s(m) * g.c(m - i) - f.c(m) * g.s(m - i));
        }
        out.c(i) = ci;
        out.s(i) = si;
    }
    return out;
}

template <class Real>
TrigPoly<Real> operator+(const TrigPoly<Real>& a, const TrigPoly<Real>& b) {
    if (a.harmonics() != b.harmonics())
        throw std::invalid_argument("TrigPoly sum: harmonic counts differ");
    TrigPoly<Real> out = a;
    out.mean += b.mean;
    for (int i = 1; i <= a.harmonics(); ++i) {
        out.c(i) += b.c(i);
        out.s(i) += b.s(i);
    }
    return out;
}

template <class Real>
TrigPoly<Real> operator*(const Real& k, const TrigPoly<Real>& p) {
    TrigPoly<Real> out = p;
    out.mean *= k;
    for (int i = 1; i <= p.harmonics(); ++i) {
        out.c(i) *= k;
        out.s(i) *= k;
    }
    return out;
}

// Same polynomial viewed with new_h >= h harmonics; the added ones are zero.
template <class Real>
TrigPoly<Real> padded(const TrigPoly<Real>& p, int new_h) {
    if (new_h < p.harmonics())
        throw std::invalid_argument("padded: cannot shrink a polynomial");
    TrigPoly<Real> out(new_h);
    out.mean = p.mean;
    for (int i = 1; i <= p.harmonics(); ++i) {
        out.c(i) = p.c(i);
        out.s(i) = p.s(i);
    }
    return out;
}

}  // namespace hborbit
