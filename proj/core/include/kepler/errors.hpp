#ifndef KEPLER_ERRORS_HPP
#define KEPLER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kepler {

// Invalid argument outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

// A Gamma factor was requested at a nonpositive integer.  `index` is the
// 1-based position of the offending argument inside a multivariate Gamma
// product (0 when not applicable).
class pole_error : public domain_error {
public:
    pole_error(const std::string& msg, int index_ = 0)
        : domain_error(msg), index(index_) {}
    int index;
};

// Invalid series / hypergeometric parameters (vanishing denominator
// Pochhammer, divergent parameter set requested as convergent, ...).
class parameter_error : public domain_error {
public:
    explicit parameter_error(const std::string& msg) : domain_error(msg) {}
};

// Quadrature or linear solve failed to reach the requested accuracy.
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string& msg, double estimate_ = 0.0)
        : std::runtime_error(msg), estimate(estimate_) {}
    double estimate;
};

} // namespace kepler

#endif
