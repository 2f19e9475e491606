#include "kepler/measures.hpp"

#include <cmath>

#include "kepler/errors.hpp"
#include "kepler/gamma.hpp"
#include "kepler/quadrature.hpp"

namespace kepler {

namespace {
constexpr double PI = 3.14159265358979323846264338327950288;

// Gamma_ell(a ell/2) / (Gamma_ell(d/r) Gamma_ell(a r/2)), the normalizing
// constant common to every radial density.
LogValue radial_constant_log(const JordanType& jt, int ell) {
    return log_gindikin_gamma(ell, jt.a, 0.5 * jt.a * ell) /
           (log_gindikin_gamma(ell, jt.a, jt.dim_over_rank()) *
            log_gindikin_gamma(ell, jt.a, 0.5 * jt.a * jt.r));
}
} // namespace

RadialDensity RadialDensity::riemann(const JordanType& jt, int ell) {
    derive_invariants(jt, ell);
    return RadialDensity{Kind::Riemann, jt, ell, 1.0, 1.0};
}

RadialDensity RadialDensity::flat(const JordanType& jt, int ell, double lambda_exp,
                                  double nu) {
    derive_invariants(jt, ell);
    if (!(lambda_exp > 0.0) || !(nu > 0.0))
        throw domain_error("RadialDensity::flat: need lambda_exp > 0 and nu > 0");
    return RadialDensity{Kind::FlatPotential, jt, ell, lambda_exp, nu};
}

RadialDensity RadialDensity::bounded(const JordanType& jt, int ell, double nu) {
    derive_invariants(jt, ell);
    if (!(nu > 0.0)) throw domain_error("RadialDensity::bounded: need nu > 0");
    return RadialDensity{Kind::BoundedPotential, jt, ell, 1.0, nu};
}

RadialDensity RadialDensity::invariant(const JordanType& jt, int ell) {
    derive_invariants(jt, ell);
    if (!jt.tube_type())
        throw domain_error("RadialDensity::invariant: requires tube type (b = 0)");
    return RadialDensity{Kind::Invariant, jt, ell, 1.0, 1.0};
}

double radial_density(const RadialDensity& rd, const DiagonalPoint& t) {
    if (t.length() != rd.ell)
        throw domain_error("radial_density: point length must equal ell");
    const KeplerRank kr = derive_invariants(rd.jt, rd.ell);
    const double q = kr.dsecond_ell / rd.ell; // a(r-ell)+b
    double n_t = 1.0, trace = 0.0;
    for (double x : t.t) {
        if (!(x > 0.0)) throw domain_error("radial_density: point must lie in the cone");
        n_t *= x;
        trace += x;
    }
    const double c = radial_constant_log(rd.jt, rd.ell).to_double();
    switch (rd.kind) {
        case RadialDensity::Kind::Riemann:
            return c * std::pow(PI, kr.d_ell) * std::pow(n_t, q);
        case RadialDensity::Kind::FlatPotential: {
            const double lam = rd.lambda_exp;
            return c * std::pow(lam, kr.d_ell + 1.0) * std::pow(n_t, q) *
                   std::pow(trace, kr.d_ell * (lam - 1.0)) *
                   std::exp(-rd.nu * std::pow(trace, lam));
        }
        case RadialDensity::Kind::BoundedPotential: {
            double nb = 1.0;
            for (double x : t.t) {
                if (!(x < 1.0))
                    throw domain_error("radial_density: bounded density needs t_i < 1");
                nb *= 1.0 - x;
            }
            return c * std::pow(n_t, q) * std::pow(nb, rd.nu - rd.jt.genus());
        }
        case RadialDensity::Kind::Invariant:
            // polar form of the invariant measure: N(t)^{ar/2 - d'_ell/ell}
            // carries |S_ell|/2^{d'_ell} = c * pi^{d_ell}
            return c * std::pow(PI, kr.d_ell) *
                   std::pow(n_t, 0.5 * rd.jt.a * rd.jt.r - kr.dprime_ell / rd.ell);
    }
    throw domain_error("radial_density: unknown kind");
}

double peirce_volume(const JordanType& jt, int ell) {
    const KeplerRank kr = derive_invariants(jt, ell);
    LogValue v = log_gindikin_gamma(ell, jt.a, kr.dprime_ell / ell) *
                 radial_constant_log(jt, ell);
    return v.to_double();
}

double tripotent_volume(const JordanType& jt, int ell) {
    const KeplerRank kr = derive_invariants(jt, ell);
    LogValue v = radial_constant_log(jt, ell);
    v.log_abs += kr.dprime_ell * std::log(2.0) + kr.d_ell * std::log(PI);
    return v.to_double();
}

double conformal_volume(const JordanType& jt) {
    LogValue v = log_gindikin_gamma(jt.r, jt.a, jt.dim2_over_rank()) /
                 log_gindikin_gamma(jt.r, jt.a, jt.genus());
    return v.to_double();
}

namespace {

double upper_cut(const RadialDensity& rd) {
    if (rd.kind == RadialDensity::Kind::BoundedPotential) return 1.0;
    return -1.0; // half line
}

} // namespace

double eigenvalue_quadrature(const std::function<double(const std::vector<double>&)>& f,
                             const RadialDensity& density, int ell, double abs_tol,
                             double rel_tol) {
    if (ell < 1 || ell > 2)
        throw domain_error("eigenvalue_quadrature: only ell <= 2 is supported");
    if (ell != density.ell)
        throw domain_error("eigenvalue_quadrature: density rank mismatch");
    const double cut = upper_cut(density);
    const double a = density.jt.a;

    if (ell == 1) {
        auto integrand = [&](double t) {
            std::vector<double> v{t};
            return f(v) * radial_density(density, DiagonalPoint::cone({t}));
        };
        QuadResult r = (cut > 0.0)
                           ? integrate_gk(integrand, 0.0, cut, abs_tol, rel_tol)
                           : integrate_gk_half_line(integrand, 0.0, abs_tol, rel_tol);
        return r.value;
    }

    // ell == 2: ordered simplex t1 > t2, Jacobian (t1 - t2)^a
    auto outer = [&](double t1) {
        auto inner = [&](double t2) {
            std::vector<double> v{t1, t2};
            return f(v) * radial_density(density, DiagonalPoint::cone({t1, t2})) *
                   std::pow(t1 - t2, a);
        };
        QuadResult r = integrate_gk(inner, 0.0, t1, abs_tol * 0.05, rel_tol * 0.05);
        return r.value;
    };
    QuadResult r = (cut > 0.0) ? integrate_gk(outer, 0.0, cut, abs_tol, rel_tol)
                               : integrate_gk_half_line(outer, 0.0, abs_tol, rel_tol);
    return r.value;
}

} // namespace kepler
