#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hborbit/lorenz.hpp"
#include "hborbit/newton.hpp"

namespace hborbit {

class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class StepUnderflow : public IntegrationError {
public:
    using IntegrationError::IntegrationError;
};
class NonFiniteState : public IntegrationError {
public:
    using IntegrationError::IntegrationError;
};

enum class Direction { forward, backward };

template <class Real>
struct TaylorConfig {
    Real term_tol = Real(1e-16);  // bound on the magnitude of the last retained series term
    int max_order = 20;
    Direction direction = Direction::forward;
};

template <class Real>
struct TaylorCoefficients {
    std::vector<Real> x1, x2, x3;  // order+1 entries each; index k is the t^k coefficient
};

namespace detail {

// Taylor coefficients of the local solution of x' = dir * f(x) with f the
// Lorenz field. The quadratic terms turn into Cauchy convolutions:
//   (k+1) a_{k+1} = dir * sigma (b_k - a_k)
//   (k+1) b_{k+1} = dir * (r a_k - b_k - sum_j a_j c_{k-j})
//   (k+1) c_{k+1} = dir * (sum_j a_j b_{k-j} - b c_k)
template <class Real>
TaylorCoefficients<Real> taylor_coefficients_signed(const State3<Real>& s, const LorenzParams<Real>& p,
                                                    int order, const Real& dir) {
    if (order < 1)
        throw std::invalid_argument("taylor_coefficients: order must be >= 1");
    TaylorCoefficients<Real> t;
    t.x1.resize(static_cast<size_t>(order) + 1);
    t.x2.resize(static_cast<size_t>(order) + 1);
    t.x3.resize(static_cast<size_t>(order) + 1);
    t.x1[0] = s.x1;
    t.x2[0] = s.x2;
    t.x3[0] = s.x3;
    for (int k = 0; k < order; ++k) {
        Real conv_ac(0), conv_ab(0);
        for (int j = 0; j <= k; ++j) {
            conv_ac += t.x1[j] * t.x3[k - j];
            conv_ab += t.x1[j] * t.x2[k - j];
        }
        const Real div(k + 1);
        t.x1[k + 1] = dir * (p.sigma * (t.x2[k] - t.x1[k])) / div;
        t.x2[k + 1] = dir * (p.r * t.x1[k] - t.x2[k] - conv_ac) / div;
        t.x3[k + 1] = dir * (conv_ab - p.b * t.x3[k]) / div;
    }
    return t;
}

}  // namespace detail

template <class Real>
TaylorCoefficients<Real> taylor_coefficients(const State3<Real>& s, const LorenzParams<Real>& p,
                                             int order) {
    return detail::taylor_coefficients_signed(s, p, order, Real(1));
}

namespace detail {

// Working type used inside a step. Backward-time integration amplifies every
// rounding of the running state by the reversed flow's expansion (about 1e9
// over one cycle period), so the double mode carries the state and series in
// long double; wider scalars already have headroom and stay as they are.
template <class Real>
struct wide_compute {
    using type = Real;
};
template <>
struct wide_compute<double> {
    using type = long double;
};

}  // namespace detail

// Largest step for which the last retained term stays within term_tol:
//   dt = (term_tol / |last|)^(1/order), capped above at 1.
// A vanishing last coefficient (an equilibrium) allows the full cap.
// Steps that would have to shrink below 1e-6 raise StepUnderflow.
template <class Real>
Real taylor_step_size(const TaylorCoefficients<Real>& t, const Real& term_tol, int order) {
    using std::abs;
    using std::pow;
    const Real dt_min = Real(1) / Real(1000000);
    const Real dt_max(1);
    Real last = abs(t.x1[static_cast<size_t>(order)]);
    if (abs(t.x2[static_cast<size_t>(order)]) > last) last = abs(t.x2[static_cast<size_t>(order)]);
    if (abs(t.x3[static_cast<size_t>(order)]) > last) last = abs(t.x3[static_cast<size_t>(order)]);
    if (!(last > Real(0))) return dt_max;
    const Real dt = pow(term_tol / last, Real(1) / Real(order));
    if (!is_finite(dt) || dt < dt_min)
        throw StepUnderflow("required step " + format_real(dt) + " below 1e-6");
    return dt < dt_max ? dt : dt_max;
}

template <class Real>
struct IntegrationResult {
    State3<Real> state;
    int steps = 0;
};

// Advances s0 over t_span > 0 by repeated Taylor steps at fixed order with
// the adaptive step above; the final partial step lands exactly on t_span.
// Direction backward integrates the time-reversed field.
template <class Real>
IntegrationResult<Real> integrate(const State3<Real>& s0, const LorenzParams<Real>& p,
                                  const Real& t_span, const TaylorConfig<Real>& cfg) {
    if (!(t_span > Real(0)))
        throw std::invalid_argument("integrate: t_span must be positive");
    if (!(cfg.term_tol > Real(0)) || cfg.max_order < 2)
        throw std::invalid_argument("integrate: bad config");
    if (!is_finite(s0))
        throw NonFiniteState("initial state is not finite");

    using Compute = typename detail::wide_compute<Real>::type;
    const Compute dir = cfg.direction == Direction::forward ? Compute(1) : Compute(-1);
    const LorenzParams<Compute> pc{real_cast<Compute>(p.sigma), real_cast<Compute>(p.r),
                                   real_cast<Compute>(p.b)};
    const Compute term_tol = real_cast<Compute>(cfg.term_tol);
    const int order = cfg.max_order;

    IntegrationResult<Real> out;
    State3<Compute> s{real_cast<Compute>(s0.x1), real_cast<Compute>(s0.x2),
                      real_cast<Compute>(s0.x3)};
    Compute remaining = real_cast<Compute>(t_span);
    while (remaining > Compute(0)) {
        const TaylorCoefficients<Compute> t =
            detail::taylor_coefficients_signed(s, pc, order, dir);
        Compute dt = taylor_step_size(t, term_tol, order);
        if (dt > remaining) dt = remaining;

        Compute a = t.x1[static_cast<size_t>(order)];
        Compute b = t.x2[static_cast<size_t>(order)];
        Compute c = t.x3[static_cast<size_t>(order)];
        for (int k = order - 1; k >= 0; --k) {
            a = a * dt + t.x1[static_cast<size_t>(k)];
            b = b * dt + t.x2[static_cast<size_t>(k)];
            c = c * dt + t.x3[static_cast<size_t>(k)];
        }
        s = {a, b, c};
        if (!is_finite(s))
            throw NonFiniteState("state became non-finite after " + std::to_string(out.steps) +
                                 " steps");
        remaining -= dt;
        ++out.steps;
    }
    out.state = {real_cast<Real>(s.x1), real_cast<Real>(s.x2), real_cast<Real>(s.x3)};
    return out;
}

template <class Real>
struct VerificationReport {
    Real forward_closure_error{};    // |X(T) - X(0)| max-norm
    Real backward_recovery_error{};  // |back(forward(X(0))) - X(0)| max-norm
    int steps_taken = 0;
    TaylorConfig<Real> config_used;
};

// Independent check of a cycle candidate: integrate the initial condition
// forward over one period and compare with the start, then integrate the
// endpoint backward and compare again.
template <class Real>
VerificationReport<Real> verify_orbit(const CycleResult<Real>& result, const LorenzParams<Real>& p,
                                      const TaylorConfig<Real>& cfg) {
    if (!(result.period > Real(0)))
        throw std::invalid_argument("verify_orbit: period must be positive");
    TaylorConfig<Real> fwd = cfg;
    fwd.direction = Direction::forward;
    TaylorConfig<Real> bwd = cfg;
    bwd.direction = Direction::backward;

    const State3<Real>& x0 = result.initial_condition;
    const IntegrationResult<Real> end = integrate(x0, p, result.period, fwd);
    const IntegrationResult<Real> back = integrate(end.state, p, result.period, bwd);

    VerificationReport<Real> report;
    report.forward_closure_error = max_abs_delta(end.state, x0);
    report.backward_recovery_error = max_abs_delta(back.state, x0);
    report.steps_taken = end.steps + back.steps;
    report.config_used = cfg;
    return report;
}

}  // namespace hborbit
