#pragma once

#include <charconv>
#include <cmath>
#include <iomanip>
#include <limits>
#include <locale>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hborbit {

// pi at the working precision of Real.
template <class Real>
const Real& pi() {
    using std::acos;
    static const Real value = acos(Real(-1));
    return value;
}

// NaN- and infinity-free check that works for any ordered scalar.
template <class Real>
bool is_finite(const Real& x) {
    return x == x && x >= std::numeric_limits<Real>::lowest() && x <= (std::numeric_limits<Real>::max)();
}

// Decimal text with enough digits for a lossless round-trip (17 for double).
// Locale-independent: always "C" formatting.
template <class Real>
std::string format_real(const Real& x) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(std::numeric_limits<Real>::max_digits10) << x;
    return os.str();
}

// Parses a decimal literal; the whole token must be consumed.
template <class Real>
Real parse_real(std::string_view text) {
    try {
        return Real(std::string(text));
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    }
}

template <>
inline double parse_real<double>(std::string_view text) {
    double value{};
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    return value;
}

template <class To, class From>
To real_cast(const From& x) {
    return static_cast<To>(x);
}

}  // namespace hborbit
