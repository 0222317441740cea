#include <cmath>

#include "polariton/errors.hpp"
#include "polariton/faddeeva.hpp"
#include "polariton/lineshape.hpp"
#include "polariton/quadrature.hpp"

namespace polariton {

cplx voigt_G(double Delta_p, const MediumParams& medium, const BeamGeometry& geom) {
    const double W = medium.Gamma + medium.gamma_c;
    require(W > 0.0, "voigt_G: Gamma + gamma_c must be > 0");
    // \int F(u) / (Delta_p - q u + i W) du = -(1/q) C((Delta_p + i W)/q)
    return -gaussian_cauchy(cplx(Delta_p, W) / geom.q, medium.v_T) / geom.q;
}

cplx voigt_G_hermite(double Delta_p, const MediumParams& medium, const BeamGeometry& geom,
                     int nodes) {
    const double W = medium.Gamma + medium.gamma_c;
    require(W > 0.0, "voigt_G_hermite: Gamma + gamma_c must be > 0");
    const QuadratureRule r = normal_rule(nodes, medium.v_T);
    cplx s = 0.0;
    for (int j = 0; j < nodes; ++j) s += r.weights[j] / cplx(Delta_p - geom.q * r.nodes[j], W);
    return s;
}

cplx chi_one_photon_strong(double Delta_p, const MediumParams& medium, const BeamGeometry& geom) {
    medium.validate();
    geom.validate();
    const cplx G = voigt_G(Delta_p, medium, geom);
    return medium.g * G / (I * medium.gamma_c * G - 1.0);
}

namespace {

struct Linear {
    cplx a0, a1;  // numerator a0 + a1 u
};

// \int F(u) (a0 + a1 u) / (c2 u^2 + c1 u + c0) du for normal F of width sigma.
// The denominator has no real roots when both complex detunings are damped.
cplx rational_gauss(Linear x, cplx c2, cplx c1, cplx c0, double sigma) {
    const double scale = std::abs(c1) * sigma + std::abs(c0);
    auto num = [&](cplx u) { return x.a0 + x.a1 * u; };
    if (std::abs(c2) * sigma * sigma <= 1e-15 * scale) {
        const cplx r = -c0 / c1;
        return x.a1 / c1 + num(r) * gaussian_cauchy(r, sigma) / c1;
    }
    const cplx disc = std::sqrt(c1 * c1 - 4.0 * c2 * c0);
    const cplx sg = (std::real(std::conj(c1) * disc) >= 0.0) ? disc : -disc;
    const cplx qq = -0.5 * (c1 + sg);
    const cplx r1 = qq / c2;
    const cplx r2 = c0 / qq;
    if (std::abs(r1 - r2) <= 1e-7 * (std::abs(r1) + std::abs(r2))) {
        const cplx r = 0.5 * (r1 + r2);
        return (num(r) * gaussian_cauchy_derivative(r, sigma) + x.a1 * gaussian_cauchy(r, sigma)) / c2;
    }
    return (num(r1) * gaussian_cauchy(r1, sigma) - num(r2) * gaussian_cauchy(r2, sigma)) /
           (c2 * (r1 - r2));
}

VelocityIntegrals collinear_integrals(cplx a1, cplx a2, double q, double ks, double Om, double vT) {
    // (a1 - q u)(a2 - ks u) - Om^2
    const cplx c2 = q * ks;
    const cplx c1 = -(q * a2 + ks * a1);
    const cplx c0 = a1 * a2 - Om * Om;
    VelocityIntegrals g;
    g.G_delta_p = rational_gauss({a1, -q}, c2, c1, c0, vT);
    g.G_delta = rational_gauss({a2, -ks}, c2, c1, c0, vT);
    g.G_omega = rational_gauss({Om, 0.0}, c2, c1, c0, vT);
    return g;
}

VelocityIntegrals transverse_integrals(cplx a1, cplx a2, double q, double k, double Om, double vT,
                                       int nodes) {
    const QuadratureRule r = normal_rule(nodes, vT);
    VelocityIntegrals g{0.0, 0.0, 0.0, nodes};
    for (int j = 0; j < nodes; ++j) {
        const cplx b = a2 - k * r.nodes[j];
        const cplx c1 = -q * b;
        const cplx c0 = a1 * b - Om * Om;
        g.G_delta_p += r.weights[j] * rational_gauss({a1, -q}, 0.0, c1, c0, vT);
        g.G_delta += r.weights[j] * rational_gauss({b, 0.0}, 0.0, c1, c0, vT);
        g.G_omega += r.weights[j] * rational_gauss({Om, 0.0}, 0.0, c1, c0, vT);
    }
    return g;
}

double max_rel_change(const VelocityIntegrals& a, const VelocityIntegrals& b) {
    auto rel = [](cplx x, cplx y) {
        const double s = std::max(std::abs(x), std::abs(y));
        return s > 0 ? std::abs(x - y) / s : 0.0;
    };
    return std::max({rel(a.G_delta_p, b.G_delta_p), rel(a.G_delta, b.G_delta),
                     rel(a.G_omega, b.G_omega)});
}

}  // namespace

VelocityIntegrals velocity_integrals(double Delta_p, double Delta, const MediumParams& medium,
                                     const BeamGeometry& geom, const DriveParams& drive) {
    medium.validate();
    geom.validate();
    drive.validate();
    require(medium.Gamma + medium.gamma_c > 0.0, "velocity_integrals: Gamma + gamma_c must be > 0");
    require(medium.gamma0 + medium.gamma_c > 0.0, "velocity_integrals: gamma0 + gamma_c must be > 0");
    const cplx a1(Delta_p, medium.Gamma + medium.gamma_c);
    const cplx a2(Delta, medium.gamma0 + medium.gamma_c);
    const double Om = drive.Omega_c;
    if (geom.axis == RamanAxis::Collinear || geom.k == 0.0)
        return collinear_integrals(a1, a2, geom.q, geom.k_sign() * geom.k, Om, medium.v_T);

    int n = 101;
    VelocityIntegrals prev = transverse_integrals(a1, a2, geom.q, geom.k, Om, medium.v_T, n);
    while (true) {
        const int next = 2 * n + 1;
        if (next > 3300)
            throw ConvergenceError("velocity_integrals: transverse Gauss-Hermite not converged at " +
                                   std::to_string(n) + " nodes");
        VelocityIntegrals cur = transverse_integrals(a1, a2, geom.q, geom.k, Om, medium.v_T, next);
        if (max_rel_change(prev, cur) < 1e-10) return cur;
        prev = cur;
        n = next;
    }
}

cplx chi_full_strong(double Delta_p, double Delta, const MediumParams& medium,
                     const BeamGeometry& geom, const DriveParams& drive) {
    const VelocityIntegrals v = velocity_integrals(Delta_p, Delta, medium, geom, drive);
    const double gc = medium.gamma_c;
    const cplx A = 1.0 - I * gc * v.G_delta_p;
    const cplx G = A * (1.0 - I * gc * v.G_delta) + gc * gc * v.G_omega * v.G_omega;
    return -medium.g * (v.G_delta * A + I * gc * v.G_omega * v.G_omega) / G;
}

}  // namespace polariton
