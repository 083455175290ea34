#include "hborbit/cli_commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "hborbit/coeff_file.hpp"
#include "hborbit/newton.hpp"
#include "hborbit/precision.hpp"
#include "hborbit/taylor.hpp"

namespace hborbit {

namespace {

constexpr const char* kExtendedLabel = "extended";

// Decimal digits after the point that an error of this size leaves intact.
template <class Real>
int matching_digits(const Real& err) {
    if (!(err > Real(0))) return 99;
    const double e = real_cast<double>(err);
    const double d = -std::log10(e);
    if (d <= 0) return 0;
    if (d >= 99) return 99;
    return static_cast<int>(d);
}

template <class Real>
void print_state(std::ostream& out, const char* label, const State3<Real>& s) {
    out << label << " = (" << format_real(s.x1) << ", " << format_real(s.x2) << ", "
        << format_real(s.x3) << ")\n";
}

template <class Real>
int run_find(const FindOptions& opt, std::ostream& out, std::ostream& err) {
    if (!(opt.sigma > 0) || !(opt.r > 1) || !(opt.b > 0)) {
        err << "error: parameters must satisfy sigma > 0, r > 1, b > 0\n";
        return kExitUsage;
    }
    if (!(opt.tol > 0) || opt.max_iter < 1) {
        err << "error: tol must be positive and max-iter at least 1\n";
        return kExitUsage;
    }
    if (opt.out_path.empty()) {
        err << "error: --out is required\n";
        return kExitUsage;
    }

    ContinuationSchedule schedule;
    try {
        if (opt.schedule.empty()) {
            schedule = ContinuationSchedule::default_to(opt.target_h);
        } else {
            schedule.h_values = opt.schedule;
            schedule.validate();
            if (schedule.h_values.front() < 5)
                throw std::invalid_argument("the built-in seed needs a first stage with h >= 5");
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    LorenzParams<Real> p{Real(opt.sigma), Real(opt.r), Real(opt.b)};
    NewtonConfig<Real> cfg;
    cfg.tol = Real(opt.tol);
    cfg.max_iter = opt.max_iter;

    CycleResult<Real> result;
    try {
        result = run_continuation<Real>(schedule, p, cfg);
    } catch (const SolveError& e) {
        err << "solver failed: " << e.what() << "\n";
        return kExitSolver;
    }

    {
        std::ofstream file(opt.out_path);
        if (file) write_coefficient_file(file, p, result.state, opt.extended ? kExtendedLabel : "");
        if (!file) {
            err << "error: cannot write '" << opt.out_path << "'\n";
            return kExitIo;
        }
    }

    out << "h = " << result.state.harmonics() << "\n";
    out << "T = " << format_real(result.period) << "\n";
    out << "omega = " << format_real(result.state.omega) << "\n";
    print_state(out, "X(0)", result.initial_condition);
    out << "residual max-norm = " << format_real(result.residual_norm) << "\n";
    out << "newton iterations per stage:";
    for (size_t k = 0; k < schedule.h_values.size(); ++k)
        out << " h=" << schedule.h_values[k] << ":" << result.iterations_per_stage[k];
    out << "\n";
    out << "coefficients written to " << opt.out_path << "\n";
    return kExitOk;
}

template <class Real>
int run_verify(const RawCoefficientFile& raw, const VerifyOptions& opt, std::ostream& out,
               std::ostream& err, const Real& default_term_tol, int default_order) {
    CoefficientSet<Real> set = typed_coefficients<Real>(raw);
    CycleResult<Real> cycle = make_cycle_result(set.state, set.params);

    TaylorConfig<Real> cfg;
    cfg.term_tol = opt.term_tol > 0 ? Real(opt.term_tol) : default_term_tol;
    cfg.max_order = opt.max_order > 0 ? opt.max_order : default_order;

    out << "h = " << cycle.state.harmonics() << "\n";
    out << "T = " << format_real(cycle.period) << "\n";
    print_state(out, "X(0)", cycle.initial_condition);
    out << "residual max-norm = " << format_real(cycle.residual_norm) << "\n";

    VerificationReport<Real> report;
    try {
        report = verify_orbit(cycle, set.params, cfg);
    } catch (const IntegrationError& e) {
        err << "verification failed: " << e.what() << "\n";
        return kExitVerification;
    }

    out << "taylor steps = " << report.steps_taken << " (order " << cfg.max_order << ", term tol "
        << format_real(cfg.term_tol) << ")\n";
    out << "forward closure error = " << format_real(report.forward_closure_error) << " ("
        << matching_digits(report.forward_closure_error) << " matching decimal digits)\n";
    out << "backward recovery error = " << format_real(report.backward_recovery_error) << " ("
        << matching_digits(report.backward_recovery_error) << " matching decimal digits)\n";

    const Real closure_tol(opt.closure_tol);
    if (report.forward_closure_error > closure_tol ||
        report.backward_recovery_error > closure_tol) {
        err << "not a cycle at tolerance " << format_real(closure_tol)
            << ": closure errors exceed it\n";
        return kExitVerification;
    }
    out << "verification passed (closure tolerance " << format_real(closure_tol) << ")\n";
    return kExitOk;
}

template <class Real>
int run_sample(const RawCoefficientFile& raw, const SampleOptions& opt, std::ostream& out,
               std::ostream& err) {
    CoefficientSet<Real> set = typed_coefficients<Real>(raw);
    std::ofstream file(opt.out_path);
    if (file) write_trajectory(file, set.state, opt.points);
    if (!file) {
        err << "error: cannot write '" << opt.out_path << "'\n";
        return kExitIo;
    }
    out << "wrote " << opt.points << " samples over one period to " << opt.out_path << "\n";
    return kExitOk;
}

}  // namespace

int cmd_find(const FindOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.extended) return run_find<ExtReal>(opt, out, err);
    return run_find<double>(opt, out, err);
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    if (!(opt.closure_tol > 0)) {
        err << "error: closure tolerance must be positive\n";
        return kExitUsage;
    }
    try {
        const RawCoefficientFile raw = read_coefficient_file(opt.in_path);
        if (raw.precision.empty())
            return run_verify<double>(raw, opt, out, err, 1e-16, 20);
        if (raw.precision == kExtendedLabel)
            return run_verify<ExtReal>(raw, opt, out, err, ExtReal("1e-25"), 32);
        throw ParseError("unknown precision label '" + raw.precision + "'");
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

int cmd_sample(const SampleOptions& opt, std::ostream& out, std::ostream& err) {
    if (opt.points < 2) {
        err << "error: need at least 2 sample points\n";
        return kExitUsage;
    }
    try {
        const RawCoefficientFile raw = read_coefficient_file(opt.in_path);
        if (raw.precision.empty())
            return run_sample<double>(raw, opt, out, err);
        if (raw.precision == kExtendedLabel)
            return run_sample<ExtReal>(raw, opt, out, err);
        throw ParseError("unknown precision label '" + raw.precision + "'");
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

}  // namespace hborbit
