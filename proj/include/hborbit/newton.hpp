#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hborbit/balance_system.hpp"
#include "hborbit/linalg.hpp"

namespace hborbit {

// Solver failures. run_continuation annotates these with the h of the stage
// that failed before letting them propagate.
class SolveError : public std::runtime_error {
public:
    explicit SolveError(const std::string& message)
        : std::runtime_error(message), message_(message) {}

    const char* what() const noexcept override { return message_.c_str(); }

    void annotate_stage(int h) {
        stage_h_ = h;
        message_ = "stage h=" + std::to_string(h) + ": " + message_;
    }
    int stage_h() const { return stage_h_; }

private:
    std::string message_;
    int stage_h_ = -1;
};

class MaxIterExceeded : public SolveError {
public:
    using SolveError::SolveError;
};
class SingularJacobian : public SolveError {
public:
    using SolveError::SolveError;
};
class Diverged : public SolveError {
public:
    using SolveError::SolveError;
};
class Stagnated : public SolveError {
public:
    using SolveError::SolveError;
};

template <class Real>
struct NewtonConfig {
    Real tol = Real(1e-8);             // convergence: residual max-norm <= tol
    int max_iter = 50;
    Real min_step_norm = Real(1e-14);  // stagnation guard
};

template <class Real>
struct NewtonResult {
    HBState<Real> state;
    int iterations = 0;
    Real residual_norm{};
    std::vector<Real> step_norms;  // max-norm of each Newton update, in order
};

// Plain undamped Newton on the 6h+4 balance equations: each iteration solves
// J delta = -F by LU with partial pivoting and takes the full step.
// Convergence is declared on the residual max-norm. Never repairs a failing
// iteration; it throws instead.
template <class Real>
NewtonResult<Real> newton_solve(const HBState<Real>& z0, const LorenzParams<Real>& p,
                                const NewtonConfig<Real>& cfg) {
    if (!(cfg.tol > Real(0)) || cfg.max_iter < 1)
        throw std::invalid_argument("newton_solve: bad config");
    require_consistent(z0);

    const int h = z0.harmonics();
    std::vector<Real> v = flatten(z0);
    NewtonResult<Real> out;

    for (int iter = 0;; ++iter) {
        HBState<Real> z = unflatten(v, h);
        std::vector<Real> f = assemble_residual(z, p);
        const Real rnorm = max_norm(f);
        if (!is_finite(rnorm))
            throw Diverged("residual became non-finite at iteration " + std::to_string(iter));
        if (rnorm <= cfg.tol) {
            out.state = z;
            out.iterations = iter;
            out.residual_norm = rnorm;
            return out;
        }
        if (iter >= cfg.max_iter)
            throw MaxIterExceeded("residual " + format_real(rnorm) + " after " +
                                  std::to_string(cfg.max_iter) + " iterations");
        if (!out.step_norms.empty() && out.step_norms.back() < cfg.min_step_norm)
            throw Stagnated("step norm " + format_real(out.step_norms.back()) +
                            " stalled with residual " + format_real(rnorm));

        Matrix<Real> jac = assemble_jacobian(z, p);
        for (Real& x : f) x = -x;
        std::vector<Real> delta;
        try {
            delta = lu_solve(std::move(jac), std::move(f));
        } catch (const SingularMatrixError& e) {
            throw SingularJacobian(std::string(e.what()) + " at iteration " + std::to_string(iter));
        }
        const Real dnorm = max_norm(delta);
        if (!is_finite(dnorm))
            throw Diverged("step became non-finite at iteration " + std::to_string(iter));
        out.step_norms.push_back(dnorm);
        for (size_t j = 0; j < v.size(); ++j) v[j] += delta[j];
    }
}

struct ContinuationSchedule {
    std::vector<int> h_values;

    void validate() const {
        if (h_values.empty())
            throw std::invalid_argument("schedule: empty");
        int prev = 0;
        for (int h : h_values) {
            if (h <= prev)
                throw std::invalid_argument("schedule: h values must be positive and strictly increasing");
            prev = h;
        }
    }

    // 5, 10, 15, ... capped by target (the last entry is exactly target).
    static ContinuationSchedule default_to(int target_h) {
        if (target_h < 5)
            throw std::invalid_argument("default schedule starts at h=5; target must be >= 5");
        ContinuationSchedule s;
        for (int h = 5; h < target_h; h += 5) s.h_values.push_back(h);
        s.h_values.push_back(target_h);
        return s;
    }
};

template <class Real>
struct CycleResult {
    HBState<Real> state;
    Real period{};                       // T = 2 pi / omega
    State3<Real> initial_condition{};    // the three polynomials at t = 0
    Real residual_norm{};                // re-checked after the solve
    std::vector<int> iterations_per_stage;
};

// Wraps a state as a CycleResult: period 2 pi / omega, initial condition from
// evaluating the polynomials at t = 0, residual re-checked from scratch.
template <class Real>
CycleResult<Real> make_cycle_result(const HBState<Real>& z, const LorenzParams<Real>& p) {
    if (!(z.omega > Real(0)))
        throw std::invalid_argument("make_cycle_result: omega must be positive");
    CycleResult<Real> out;
    out.state = z;
    out.period = Real(2) * pi<Real>() / z.omega;
    out.initial_condition = State3<Real>{evaluate(z.x1, z.omega, Real(0)),
                                         evaluate(z.x2, z.omega, Real(0)),
                                         evaluate(z.x3, z.omega, Real(0))};
    out.residual_norm = max_norm(assemble_residual(z, p));
    return out;
}

// Hand-tuned h=5 initial guess from which Newton reaches the short cycle
// rather than a degenerate root: omega=4, means 0, every cosine amplitude -1
// on all three coordinates, s12=1 on the first coordinate, other sines 0.
// The basin is genuine: the iteration takes the same 29 steps at double and
// at 256-bit precision. Seeding only the first coordinate's amplitudes sends
// exact Newton to a frequency-zero root instead.
template <class Real>
HBState<Real> builtin_seed() {
    HBState<Real> z;
    z.omega = Real(4);
    z.x1 = TrigPoly<Real>(5);
    z.x2 = TrigPoly<Real>(5);
    z.x3 = TrigPoly<Real>(5);
    for (int i = 1; i <= 5; ++i) {
        z.x1.c(i) = Real(-1);
        z.x2.c(i) = Real(-1);
        z.x3.c(i) = Real(-1);
    }
    z.x1.s(2) = Real(1);
    return z;
}

// Continuation in the harmonic count: solve at schedule[0] from the seed,
// then at each later h re-solve starting from the previous solution with the
// new amplitudes zero-padded.
template <class Real>
CycleResult<Real> run_continuation(const HBState<Real>& seed, const ContinuationSchedule& schedule,
                                   const LorenzParams<Real>& p, const NewtonConfig<Real>& cfg) {
    schedule.validate();
    if (seed.harmonics() > schedule.h_values.front())
        throw std::invalid_argument("seed has more harmonics than the first stage");

    CycleResult<Real> out;
    HBState<Real> z = seed;
    for (int h : schedule.h_values) {
        z = pad_state(z, h);
        try {
            NewtonResult<Real> r = newton_solve(z, p, cfg);
            z = r.state;
            out.iterations_per_stage.push_back(r.iterations);
        } catch (SolveError& e) {
            e.annotate_stage(h);
            throw;
        }
    }
    if (!(z.omega > Real(0)))
        throw SolveError("converged to non-positive frequency " + format_real(z.omega));

    CycleResult<Real> result = make_cycle_result(z, p);
    result.iterations_per_stage = out.iterations_per_stage;
    return result;
}

template <class Real>
CycleResult<Real> run_continuation(const ContinuationSchedule& schedule, const LorenzParams<Real>& p,
                                   const NewtonConfig<Real>& cfg) {
    schedule.validate();
    if (schedule.h_values.front() < 5)
        throw std::invalid_argument("the built-in seed needs a first stage with h >= 5");
    return run_continuation(builtin_seed<Real>(), schedule, p, cfg);
}

}  // namespace hborbit
