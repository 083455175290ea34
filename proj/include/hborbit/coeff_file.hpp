#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "hborbit/balance_system.hpp"
#include "hborbit/lorenz.hpp"

namespace hborbit {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Coefficient file, token level. Layout:
//   format_version = 1
//   sigma = <v>
//   r = <v>
//   b = <v>
//   omega = <v>
//   precision = <label>          (only written by the extended-precision mode)
//   means = <x10> <x20> <x30>
//   <i> <c1i> <s1i> <c2i> <s2i> <c3i> <s3i>     (one row per harmonic, i = 1..h)
// Values carry max_digits10 significant digits for the scalar that wrote
// them, so read-after-write reproduces every value exactly.
struct RawCoefficientFile {
    std::string sigma, r, b, omega;
    std::string precision;  // empty when the file is plain double
    std::array<std::string, 3> means;
    std::vector<std::array<std::string, 6>> rows;
};

RawCoefficientFile read_coefficient_file(std::istream& in);
RawCoefficientFile read_coefficient_file(const std::string& path);

template <class Real>
struct CoefficientSet {
    LorenzParams<Real> params;
    HBState<Real> state;
};

template <class Real>
CoefficientSet<Real> typed_coefficients(const RawCoefficientFile& raw) {
    CoefficientSet<Real> set;
    try {
        set.params.sigma = parse_real<Real>(raw.sigma);
        set.params.r = parse_real<Real>(raw.r);
        set.params.b = parse_real<Real>(raw.b);
        set.state.omega = parse_real<Real>(raw.omega);
        const int h = static_cast<int>(raw.rows.size());
        set.state.x1 = TrigPoly<Real>(h);
        set.state.x2 = TrigPoly<Real>(h);
        set.state.x3 = TrigPoly<Real>(h);
        set.state.x1.mean = parse_real<Real>(raw.means[0]);
        set.state.x2.mean = parse_real<Real>(raw.means[1]);
        set.state.x3.mean = parse_real<Real>(raw.means[2]);
        for (int i = 1; i <= h; ++i) {
            const auto& row = raw.rows[static_cast<size_t>(i - 1)];
            set.state.x1.c(i) = parse_real<Real>(row[0]);
            set.state.x1.s(i) = parse_real<Real>(row[1]);
            set.state.x2.c(i) = parse_real<Real>(row[2]);
            set.state.x2.s(i) = parse_real<Real>(row[3]);
            set.state.x3.c(i) = parse_real<Real>(row[4]);
            set.state.x3.s(i) = parse_real<Real>(row[5]);
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    if (!is_finite(set.state) || !is_finite(set.params.sigma) || !is_finite(set.params.r) ||
        !is_finite(set.params.b))
        throw ParseError("coefficient file holds non-finite values");
    if (!(set.state.omega > Real(0)))
        throw ParseError("omega must be positive");
    return set;
}

template <class Real>
void write_coefficient_file(std::ostream& out, const LorenzParams<Real>& p, const HBState<Real>& z,
                            const std::string& precision_label = "") {
    require_consistent(z);
    out << "format_version = 1\n";
    out << "sigma = " << format_real(p.sigma) << "\n";
    out << "r = " << format_real(p.r) << "\n";
    out << "b = " << format_real(p.b) << "\n";
    out << "omega = " << format_real(z.omega) << "\n";
    if (!precision_label.empty()) out << "precision = " << precision_label << "\n";
    out << "means = " << format_real(z.x1.mean) << " " << format_real(z.x2.mean) << " "
        << format_real(z.x3.mean) << "\n";
    for (int i = 1; i <= z.harmonics(); ++i) {
        out << i << " " << format_real(z.x1.c(i)) << " " << format_real(z.x1.s(i)) << " "
            << format_real(z.x2.c(i)) << " " << format_real(z.x2.s(i)) << " "
            << format_real(z.x3.c(i)) << " " << format_real(z.x3.s(i)) << "\n";
    }
}

// Sampled trajectory rows "t,x1,x2,x3" on the uniform grid t_j = j T / (n-1).
template <class Real>
void write_trajectory(std::ostream& out, const HBState<Real>& z, int n) {
    if (n < 2) throw std::invalid_argument("write_trajectory: need at least 2 points");
    const Real period = Real(2) * pi<Real>() / z.omega;
    for (int j = 0; j < n; ++j) {
        const Real t = (j == n - 1) ? period : period * Real(j) / Real(n - 1);
        out << format_real(t) << "," << format_real(evaluate(z.x1, z.omega, t)) << ","
            << format_real(evaluate(z.x2, z.omega, t)) << ","
            << format_real(evaluate(z.x3, z.omega, t)) << "\n";
    }
}

}  // namespace hborbit
