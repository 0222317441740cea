#include "polariton/params.hpp"

#include <cmath>
#include <limits>

#include "polariton/errors.hpp"
#include "polariton/lineshape.hpp"

namespace polariton {

namespace {

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

}  // namespace

void MediumParams::validate() const {
    require(finite_nonneg(gamma0), "gamma0 must be finite and >= 0");
    require(finite_nonneg(Gamma), "Gamma must be finite and >= 0");
    require(finite_nonneg(gamma_c), "gamma_c must be finite and >= 0");
    require(std::isfinite(v_T) && v_T > 0.0, "v_T must be finite and > 0");
    require(finite_nonneg(g), "g must be finite and >= 0");
}

BeamGeometry BeamGeometry::degenerate(double q, double theta) {
    BeamGeometry b;
    b.q = q;
    b.q_c = q;
    b.theta = theta;
    b.k = 2.0 * q * std::abs(std::sin(0.5 * theta));
    b.axis = RamanAxis::Transverse;
    b.validate();
    return b;
}

BeamGeometry BeamGeometry::collinear(double q, double q_c) {
    BeamGeometry b;
    b.q = q;
    b.q_c = q_c;
    b.theta = 0.0;
    b.k = std::abs(q - q_c);
    b.axis = RamanAxis::Collinear;
    b.validate();
    return b;
}

void BeamGeometry::validate() const {
    require(std::isfinite(q) && q > 0.0, "q must be > 0");
    require(std::isfinite(q_c) && q_c > 0.0, "q_c must be > 0");
    require(finite_nonneg(k), "k must be >= 0");
    require(std::isfinite(theta), "theta must be finite");
}

void DriveParams::validate() const {
    require(finite_nonneg(Omega_c), "Omega_c must be >= 0");
    require(std::isfinite(Delta) && std::isfinite(Delta_p), "detunings must be finite");
}

cplx gamma_prime(double Delta_p, const MediumParams& medium, const BeamGeometry& geom,
                 GammaPrimeMode mode) {
    if (mode == GammaPrimeMode::Stationary) return cplx(medium.Gamma, -Delta_p);
    require(medium.Gamma + medium.gamma_c > 0.0, "Gamma + gamma_c must be > 0");
    // ig/chi_I with chi_I = g G/(i gamma_c G - 1); g cancels.
    const cplx G = voigt_G(Delta_p, medium, geom);
    return -medium.gamma_c - I / G;
}

DerivedParams derive_params(const MediumParams& medium, const DriveParams& drive,
                            const BeamGeometry& geom, GammaPrimeMode mode) {
    medium.validate();
    drive.validate();
    geom.validate();

    DerivedParams d;
    if (medium.gamma_c > 0.0) {
        d.Lambda = medium.v_T / medium.gamma_c;
        d.D = medium.v_T * d.Lambda;
    } else {
        d.ballistic = true;
        d.Lambda = std::numeric_limits<double>::infinity();
        d.D = std::numeric_limits<double>::infinity();
    }

    d.Gamma_prime = gamma_prime(drive.Delta_p, medium, geom, mode);
    require(std::abs(d.Gamma_prime) > 0.0, "Gamma' vanishes; no optical damping");
    d.gammaP_complex = drive.Omega_c * drive.Omega_c / d.Gamma_prime;
    d.gammaP = d.gammaP_complex.real();
    d.gamma = medium.gamma0 + d.gammaP;
    d.alpha = (medium.g / d.Gamma_prime).real();
    d.k0 = d.ballistic ? 0.0 : std::sqrt(d.gamma / d.D);
    return d;
}

}  // namespace polariton
