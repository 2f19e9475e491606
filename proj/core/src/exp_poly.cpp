#include "kepler/exp_poly.hpp"

namespace kepler {

void ExpPolyFunction::add_term(const Rational& q, double c) {
    auto [it, inserted] = terms.emplace(q, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0.0) terms.erase(it);
    }
}

ExpPolyFunction ExpPolyFunction::mul_power(const Rational& alpha) const {
    ExpPolyFunction out(lambda);
    for (const auto& [q, c] : terms) out.terms.emplace(q + alpha, c);
    return out;
}

ExpPolyFunction ExpPolyFunction::derivative() const {
    ExpPolyFunction out(lambda);
    const Rational one(1);
    const double lam = lambda.as_double();
    for (const auto& [q, c] : terms) {
        if (!(c == 0.0) && !(q == Rational(0))) out.add_term(q - one, c * q.as_double());
        out.add_term(q + lambda - one, c * lam);
    }
    return out;
}

ExpPolyFunction ExpPolyFunction::derivative(int k) const {
    ExpPolyFunction out = *this;
    for (int i = 0; i < k; ++i) out = out.derivative();
    return out;
}

} // namespace kepler
