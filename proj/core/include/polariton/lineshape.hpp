#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

#include "polariton/params.hpp"
#include "polariton/spectrum.hpp"

namespace polariton {

// H(x) = exp(-x) - 1 + x, the velocity-memory kernel of the Gumbel model.
double memory_kernel_H(double x);

struct WidthReport {
    double doppler = 0.0;           // v_T q (1 sigma)
    double dicke = 0.0;             // D q^2
    double interpolated = 0.0;      // Doppler-Dicke FWHM interpolation
    double residual_doppler = 0.0;  // v_T k
    double residual_dicke = 0.0;    // D k^2
    bool ballistic = false;         // gamma_c == 0: Dicke widths are +inf
};

// The interpolated width reduces to the Gaussian FWHM 2 sqrt(2 ln 2) v_T q for
// q Lambda >> 1 and to the Lorentzian FWHM 2 D q^2 for q Lambda << 1.
WidthReport motional_widths(const MediumParams& medium, const BeamGeometry& geom);

struct QuadratureSpec {
    double envelope_cutoff = 1e-12;  // truncate where |integrand envelope| drops below
    double rel_tol = 1e-9;           // panel doubling stops at this change / L1(envelope)
    int max_panels = 1 << 16;
};

// \int_0^inf dt exp((-i detuning - decay) t) exp(-(k v_T)^2 H(gamma_c t)/gamma_c^2)
// (the gamma_c -> 0 limit of the exponent is (k v_T t)^2 / 2).
cplx dephased_time_integral(double detuning, double decay, double k, double v_T, double gamma_c,
                            const QuadratureSpec& quad = {});

// Weak-collision (Gumbel) spectra. Gamma here excludes gamma_c. The time
// integral is written with exp(-i Delta_p t), so the line is the mirror image
// of the strong-collision convention; absorption profiles are even in Delta_p.
cplx chi_one_photon_weak(double Delta_p, const MediumParams& medium, const BeamGeometry& geom,
                         const QuadratureSpec& quad = {});
cplx chi_raman_weak(double Delta, const MediumParams& medium, const BeamGeometry& geom,
                    const QuadratureSpec& quad = {});

// Voigt function G_I(Delta_p) [s] via the Faddeeva function.
cplx voigt_G(double Delta_p, const MediumParams& medium, const BeamGeometry& geom);
// Direct Gauss-Hermite evaluation of the same integral (cross-check).
cplx voigt_G_hermite(double Delta_p, const MediumParams& medium, const BeamGeometry& geom,
                     int nodes = 101);

// Strong-collision one-photon susceptibility chi_I = g G_I / (i gamma_c G_I - 1).
cplx chi_one_photon_strong(double Delta_p, const MediumParams& medium, const BeamGeometry& geom);

// The three velocity integrals G_X = \int F X / (delta_p delta - Omega_c^2).
struct VelocityIntegrals {
    cplx G_delta_p;
    cplx G_delta;
    cplx G_omega;
    int transverse_nodes = 0;  // Gauss-Hermite nodes used along k (0 for collinear)
};

VelocityIntegrals velocity_integrals(double Delta_p, double Delta, const MediumParams& medium,
                                     const BeamGeometry& geom, const DriveParams& drive);

// Full strong-collision susceptibility of the Lambda system.
cplx chi_full_strong(double Delta_p, double Delta, const MediumParams& medium,
                     const BeamGeometry& geom, const DriveParams& drive);

// Dicke-limit dark resonance chi = P (1 - gammaP / (gamma0 + gammaP + D k^2 - i Delta)).
struct DarkResonance {
    cplx prefactor;  // i g / Gamma'
    cplx gammaP;     // Omega_c^2 / Gamma'
    double gamma0 = 0.0;
    double D = 0.0;

    // gamma_c must be > 0 so that D is finite.
    static DarkResonance from(const MediumParams& medium, const DriveParams& drive,
                              const BeamGeometry& geom,
                              GammaPrimeMode mode = GammaPrimeMode::Voigt);
    // Real alpha and gammaP (Gamma' real, on one-photon resonance).
    static DarkResonance ideal(double alpha, double gammaP, double gamma0, double D);

    double alpha() const { return prefactor.imag(); }
    double gamma() const { return gamma0 + gammaP.real(); }
    double k0() const { return std::sqrt(gamma() / D); }
    // HWHM of the dark resonance at Raman wavenumber k.
    double hwhm(double k) const { return gamma() + D * k * k; }
};

cplx chi_dicke(double Delta, double k, const DarkResonance& res);
cplx chi_dicke(double Delta, double k, const MediumParams& medium, const DriveParams& drive,
               const BeamGeometry& geom);

// v_g = (gamma + D k^2)^2 / (alpha gammaP); +inf when gammaP or alpha vanish.
double group_velocity(double k, const DarkResonance& res);
double group_velocity(double k, const MediumParams& medium, const DriveParams& drive,
                      const BeamGeometry& geom);

struct EmitterConfig {
    double v = 0.0;               // speed [m/s]
    double q = 0.0;               // [rad/m]
    double collision_rate = 0.0;  // Poisson direction-flip rate [1/s]
    std::optional<double> wall_spacing;  // reflecting walls at 0 and d
    double duration = 0.0;        // [s]
    double dt = 0.0;              // sample step [s]
    std::uint64_t seed = 1;
};

// Power spectrum of exp(i q x(t)) for a 1D emitter moving at +-v.
// detunings are angular frequencies in increasing order; chi holds the
// power per bin (real, summing to 1).
ComplexSpectrum dicke_emitter_spectrum(const EmitterConfig& cfg);

}  // namespace polariton
