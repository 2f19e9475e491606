#ifndef KEPLER_LOG_VALUE_HPP
#define KEPLER_LOG_VALUE_HPP

#include <cmath>
#include <limits>

#include "kepler/errors.hpp"

namespace kepler {

// Signed log-scale real number: represents sign * exp(log_abs).
// All Gamma-heavy products in this library are carried in this form;
// raw products overflow double already around |mu| ~ 30.
struct LogValue {
    double log_abs = -std::numeric_limits<double>::infinity();
    int sign = 0; // -1, 0, +1

    static LogValue zero() { return LogValue{}; }
    static LogValue one() { return LogValue{0.0, +1}; }

    static LogValue from_double(double x) {
        if (x == 0.0) return zero();
        return LogValue{std::log(std::fabs(x)), x > 0 ? +1 : -1};
    }

    // sign * exp(log_abs); may overflow to +-inf for large log_abs.
    double to_double() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(log_abs);
    }

    bool is_zero() const { return sign == 0; }

    LogValue operator*(const LogValue& o) const {
        if (sign == 0 || o.sign == 0) return zero();
        return LogValue{log_abs + o.log_abs, sign * o.sign};
    }

    LogValue operator/(const LogValue& o) const {
        if (o.sign == 0) throw domain_error("LogValue: division by exact zero");
        if (sign == 0) return zero();
        return LogValue{log_abs - o.log_abs, sign * o.sign};
    }

    LogValue& operator*=(const LogValue& o) { *this = *this * o; return *this; }
    LogValue& operator/=(const LogValue& o) { *this = *this / o; return *this; }

    LogValue pow(double e) const {
        if (sign == 0) {
            if (e <= 0.0) throw domain_error("LogValue: 0 to nonpositive power");
            return zero();
        }
        if (sign < 0) throw domain_error("LogValue: negative base to real power");
        return LogValue{log_abs * e, +1};
    }
};

// Multiply a running LogValue by a plain real factor, keeping the zero sign.
inline LogValue log_mul(const LogValue& v, double factor) {
    return v * LogValue::from_double(factor);
}

// log |Gamma(x)| with sign.  Throws pole_error at nonpositive integers.
inline LogValue log_gamma_signed(double x) {
    if (x <= 0.0 && x == std::floor(x))
        throw pole_error("Gamma pole at nonpositive integer argument");
#if defined(__GLIBC__) || defined(__APPLE__)
    // plain lgamma writes the global signgam; the sign is recomputed below
    int sign_unused = 0;
    double la = ::lgamma_r(x, &sign_unused);
#else
    double la = std::lgamma(x);
#endif
    int sign = +1;
    if (x < 0.0) {
        // Gamma alternates sign between consecutive negative integers:
        // negative on (-1,0), positive on (-2,-1), ...
        long long n = static_cast<long long>(std::floor(-x));
        sign = (n % 2 == 0) ? -1 : +1;
    }
    return LogValue{la, sign};
}

// Classical rising factorial (x)_n in log space; an exact zero factor gives
// sign = 0 rather than an error.
inline LogValue log_pochhammer(double x, long long n) {
    LogValue out = LogValue::one();
    for (long long i = 0; i < n; ++i) {
        double f = x + static_cast<double>(i);
        if (f == 0.0) return LogValue::zero();
        out.log_abs += std::log(std::fabs(f));
        if (f < 0.0) out.sign = -out.sign;
    }
    return out;
}

} // namespace kepler

#endif
