#include "polariton/lineshape.hpp"

#include <cmath>
#include <limits>

#include "polariton/errors.hpp"
#include "polariton/quadrature.hpp"

namespace polariton {

double memory_kernel_H(double x) {
    require(x >= 0.0, "memory_kernel_H: x must be >= 0");
    if (x < 1e-4) return x * x * (0.5 - x * (1.0 / 6.0 - x / 24.0));
    return std::expm1(-x) + x;
}

WidthReport motional_widths(const MediumParams& medium, const BeamGeometry& geom) {
    medium.validate();
    geom.validate();
    WidthReport w;
    w.doppler = medium.v_T * geom.q;
    w.residual_doppler = medium.v_T * geom.k;
    const double fwhm_gauss = 2.0 * std::sqrt(2.0 * std::log(2.0));
    if (medium.gamma_c > 0.0) {
        const double Lambda = medium.v_T / medium.gamma_c;
        const double D = medium.v_T * Lambda;
        w.dicke = D * geom.q * geom.q;
        w.residual_dicke = D * geom.k * geom.k;
        const double a2 = 2.0 / std::log(2.0);
        w.interpolated = medium.gamma_c * (4.0 / a2) * memory_kernel_H(std::sqrt(a2) * geom.q * Lambda);
    } else {
        w.ballistic = true;
        w.dicke = w.residual_dicke = std::numeric_limits<double>::infinity();
        w.interpolated = fwhm_gauss * w.doppler;
    }
    return w;
}

namespace {

const QuadratureRule& gl16() {
    static const QuadratureRule r = gauss_legendre(16);
    return r;
}

}  // namespace

cplx dephased_time_integral(double detuning, double decay, double k, double v_T, double gamma_c,
                            const QuadratureSpec& quad) {
    require(decay >= 0.0 && gamma_c >= 0.0 && v_T >= 0.0 && k >= 0.0,
            "dephased_time_integral: negative rate");
    const double sigma = k * v_T;
    require(decay > 0.0 || sigma > 0.0, "dephased_time_integral: integrand does not decay");
    require(quad.envelope_cutoff > 0.0 && quad.envelope_cutoff < 1.0 && quad.rel_tol > 0.0,
            "dephased_time_integral: invalid quadrature settings");

    const double s2 = gamma_c > 0.0 ? (sigma / gamma_c) * (sigma / gamma_c) : 0.0;
    auto exponent = [&](double t) {
        const double phi = gamma_c > 0.0 ? s2 * memory_kernel_H(gamma_c * t) : 0.5 * sigma * sigma * t * t;
        return decay * t + phi;
    };
    const double target = -std::log(quad.envelope_cutoff);

    double hi = 1.0 / (decay + sigma);
    while (exponent(hi) < target) hi *= 2.0;
    double lo = 0.0;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (exponent(mid) < target ? lo : hi) = mid;
    }
    const double tmax = hi;

    const auto& rule = gl16();
    auto integrate = [&](long panels, double& l1) {
        const double h = tmax / panels;
        cplx sum = 0.0;
        l1 = 0.0;
        for (long p = 0; p < panels; ++p) {
            const double c = (p + 0.5) * h;
            for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
                const double t = c + 0.5 * h * rule.nodes[j];
                const double env = std::exp(-exponent(t));
                const double w = 0.5 * h * rule.weights[j];
                sum += w * env * std::polar(1.0, -detuning * t);
                l1 += w * env;
            }
        }
        return sum;
    };

    long panels = std::max<long>(8, static_cast<long>(std::ceil(std::abs(detuning) * tmax / pi)));
    double l1 = 0.0;
    cplx prev = integrate(panels, l1);
    while (true) {
        if (2 * panels > quad.max_panels)
            throw ConvergenceError("dephased_time_integral: no convergence with " +
                                   std::to_string(panels) + " panels");
        panels *= 2;
        const cplx cur = integrate(panels, l1);
        if (std::abs(cur - prev) <= quad.rel_tol * l1) return cur;
        prev = cur;
    }
}

cplx chi_one_photon_weak(double Delta_p, const MediumParams& medium, const BeamGeometry& geom,
                         const QuadratureSpec& quad) {
    medium.validate();
    geom.validate();
    require(medium.Gamma > 0.0 || medium.gamma_c > 0.0, "chi_one_photon_weak: needs Gamma > 0 or gamma_c > 0");
    return I * medium.g *
           dephased_time_integral(Delta_p, medium.Gamma, geom.q, medium.v_T, medium.gamma_c, quad);
}

cplx chi_raman_weak(double Delta, const MediumParams& medium, const BeamGeometry& geom,
                    const QuadratureSpec& quad) {
    medium.validate();
    geom.validate();
    require(medium.gamma0 > 0.0 || medium.gamma_c > 0.0, "chi_raman_weak: needs gamma0 > 0 or gamma_c > 0");
    require(medium.Gamma > 0.0, "chi_raman_weak: Gamma must be > 0");
    const cplx pref = I * medium.g / (medium.Gamma * medium.Gamma);
    return pref * dephased_time_integral(-Delta, medium.gamma0, geom.k, medium.v_T, medium.gamma_c, quad);
}

DarkResonance DarkResonance::from(const MediumParams& medium, const DriveParams& drive,
                                  const BeamGeometry& geom, GammaPrimeMode mode) {
    require(medium.gamma_c > 0.0, "dark resonance: gamma_c must be > 0 (finite D)");
    const DerivedParams d = derive_params(medium, drive, geom, mode);
    DarkResonance r;
    r.prefactor = I * medium.g / d.Gamma_prime;
    r.gammaP = d.gammaP_complex;
    r.gamma0 = medium.gamma0;
    r.D = d.D;
    return r;
}

DarkResonance DarkResonance::ideal(double alpha, double gammaP, double gamma0, double D) {
    require(alpha >= 0.0 && gammaP >= 0.0 && gamma0 >= 0.0 && D >= 0.0,
            "dark resonance: parameters must be >= 0");
    DarkResonance r;
    r.prefactor = cplx(0.0, alpha);
    r.gammaP = gammaP;
    r.gamma0 = gamma0;
    r.D = D;
    return r;
}

cplx chi_dicke(double Delta, double k, const DarkResonance& res) {
    const cplx den = res.gamma0 + res.gammaP + res.D * k * k - I * Delta;
    if (den == cplx(0.0)) return 0.0;
    return res.prefactor * (1.0 - res.gammaP / den);
}

cplx chi_dicke(double Delta, double k, const MediumParams& medium, const DriveParams& drive,
               const BeamGeometry& geom) {
    return chi_dicke(Delta, k, DarkResonance::from(medium, drive, geom));
}

double group_velocity(double k, const DarkResonance& res) {
    const double a = res.alpha() * res.gammaP.real();
    if (!(a > 0.0)) return std::numeric_limits<double>::infinity();
    const double w = res.gamma() + res.D * k * k;
    return w * w / a;
}

double group_velocity(double k, const MediumParams& medium, const DriveParams& drive,
                      const BeamGeometry& geom) {
    return group_velocity(k, DarkResonance::from(medium, drive, geom));
}

}  // namespace polariton
