#include "polariton/ramsey.hpp"

#include <cmath>

#include "polariton/bessel.hpp"
#include "polariton/errors.hpp"

namespace polariton {

void RamseyGeometry::validate() const {
    require(dimensionality == 1 || dimensionality == 2, "ramsey: dimensionality must be 1 or 2");
    require(std::isfinite(a) && a > 0.0, "ramsey: a must be > 0");
    require(!std::isnan(b) && b >= a, "ramsey: b must be >= a");
    require(std::isfinite(D) && D > 0.0, "ramsey: D must be > 0");
    require(std::isfinite(gamma0) && gamma0 >= 0.0, "ramsey: gamma0 must be >= 0");
    require(std::isfinite(gammaP) && gammaP >= 0.0, "ramsey: gammaP must be >= 0");
}

namespace {

// tanh without overflow for large |Re z|; requires Re z >= 0.
cplx tanh_stable(cplx z) {
    const cplx e = std::exp(-2.0 * z);
    return (1.0 - e) / (1.0 + e);
}

cplx principal_kappa(cplx rate, double D) {
    cplx k = std::sqrt(rate / D);
    if (k.real() < 0.0) k = -k;
    return k;
}

cplx r1d(cplx k, cplx k0, const RamseyGeometry& g) {
    const cplx t = tanh_stable(k * g.a);
    const cplx tw = g.has_walls() ? tanh_stable(k0 * (g.b - g.a)) : cplx(1.0);
    return t / (k * g.a) / (1.0 + (k / k0) * t * tw);
}

cplx r2d(cplx k, cplx k0, const RamseyGeometry& g, WallFactor wf) {
    const cplx ka = k * g.a, k0a = k0 * g.a;
    const cplx inner = bessel_i_scaled(0, ka) / bessel_i_scaled(1, ka);
    cplx outer = bessel_k_scaled(0, k0a) / bessel_k_scaled(1, k0a);
    if (g.has_walls()) {
        const cplx k0b = k0 * g.b;
        const cplx damp = std::exp(-2.0 * k0 * (g.b - g.a));
        if (wf == WallFactor::AsPrinted) {
            if (g.b == g.a) {
                outer = 0.0;
            } else {
                const cplx beta = bessel_k_scaled(0, k0b) /
                                  (bessel_k_scaled(0, k0a) * bessel_i_scaled(0, k0 * (g.b - g.a))) * damp;
                outer *= 1.0 - beta;
            }
        } else {
            const cplx c = bessel_k_scaled(0, k0b) / bessel_i_scaled(0, k0b) * damp;
            const cplx e0 = c * bessel_i_scaled(0, k0a) / bessel_k_scaled(0, k0a);
            const cplx e1 = c * bessel_i_scaled(1, k0a) / bessel_k_scaled(1, k0a);
            outer *= (1.0 - e0) / (1.0 + e1);
        }
    }
    return 2.0 / ka / (inner + (k / k0) * outer);
}

}  // namespace

cplx ramsey_correction(double Delta, const RamseyGeometry& g, WallFactor wf) {
    g.validate();
    const cplx rate_in(g.gamma0 + g.gammaP, -Delta);
    const cplx rate_out(g.gamma0, -Delta);
    require(std::abs(rate_in) > 0.0, "ramsey: gamma0 + gammaP - i Delta vanishes");
    const cplx k = principal_kappa(rate_in, g.D);
    require(std::abs(rate_out) > 0.0, "ramsey: gamma0 = Delta = 0 makes kappa0 vanish");
    const cplx k0 = principal_kappa(rate_out, g.D);
    return g.dimensionality == 1 ? r1d(k, k0, g) : r2d(k, k0, g, wf);
}

cplx ramsey_dark_resonance(double Delta, const RamseyGeometry& g, WallFactor wf) {
    const cplx lor = g.gammaP / cplx(g.gamma0 + g.gammaP, -Delta);
    return lor * (1.0 - ramsey_correction(Delta, g, wf));
}

cplx universal_spectrum(double Delta, double D, double gamma0, double ell) {
    require(D > 0.0 && ell > 0.0 && gamma0 >= 0.0, "universal_spectrum: invalid parameters");
    const cplx s(gamma0, Delta);
    require(std::abs(s) > 0.0, "universal_spectrum: s = 0");
    return 1.0 / (ell * std::sqrt(s / D));
}

cplx lorentzian_reference(double Delta, double gamma0) {
    const cplx s(gamma0, Delta);
    require(std::abs(s) > 0.0, "lorentzian_reference: s = 0");
    return 1.0 / s;
}

}  // namespace polariton
