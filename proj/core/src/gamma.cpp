#include "kepler/gamma.hpp"

#include <cmath>
#include <string>

#include "kepler/errors.hpp"

namespace kepler {

namespace {
constexpr double LOG_2PI = 1.8378770664093454835606594728112353;
}

LogValue log_gindikin_gamma(int r, double a, std::span<const double> s) {
    if (static_cast<int>(s.size()) != r)
        throw domain_error("log_gindikin_gamma: argument vector length != r");
    LogValue out{0.25 * r * (r - 1) * a * LOG_2PI, +1};
    for (int j = 1; j <= r; ++j) {
        double arg = s[j - 1] - 0.5 * a * (j - 1);
        if (arg <= 0.0 && arg == std::floor(arg))
            throw pole_error("Gamma_r pole in factor " + std::to_string(j) +
                                 " (argument " + std::to_string(arg) + ")",
                             j);
        out *= log_gamma_signed(arg);
    }
    return out;
}

LogValue log_gindikin_gamma(int r, double a, double nu) {
    std::vector<double> s(static_cast<size_t>(r), nu);
    return log_gindikin_gamma(r, a, s);
}

LogValue log_gindikin_gamma(int r, double a, const Partition& mu, double nu) {
    if (mu.length() > r)
        throw domain_error("log_gindikin_gamma: partition longer than rank");
    std::vector<double> s(static_cast<size_t>(r));
    for (int j = 1; j <= r; ++j) s[j - 1] = mu.part(j) + nu;
    return log_gindikin_gamma(r, a, s);
}

LogValue pochhammer_partition(double s, const Partition& mu, double a, int r) {
    if (mu.length() > r)
        throw domain_error("pochhammer_partition: partition longer than rank");
    LogValue out = LogValue::one();
    for (int j = 1; j <= mu.length(); ++j) {
        LogValue f = log_pochhammer(s - 0.5 * a * (j - 1), mu.part(j));
        if (f.is_zero()) return LogValue::zero();
        out *= f;
    }
    return out;
}

double pochhammer_partition_d(double s, const Partition& mu, double a, int r) {
    if (mu.length() > r)
        throw domain_error("pochhammer_partition: partition longer than rank");
    double out = 1.0;
    for (int j = 1; j <= mu.length(); ++j) {
        double base = s - 0.5 * a * (j - 1);
        for (int i = 0; i < mu.part(j); ++i) out *= base + i;
    }
    return out;
}

} // namespace kepler
