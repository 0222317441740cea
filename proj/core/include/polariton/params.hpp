#pragma once

#include "polariton/units.hpp"

namespace polariton {

struct MediumParams {
    double gamma0 = 0.0;   // ground-state decoherence [rad/s]
    double Gamma = 0.0;    // optical dipole decay [rad/s]
    double gamma_c = 0.0;  // velocity-changing collision rate [rad/s]
    double v_T = 0.0;      // thermal velocity (1D rms) [m/s]
    double g = 0.0;        // coupling constant [1/(m s)]

    void validate() const;
};

enum class RamanAxis { Collinear, Transverse };

struct BeamGeometry {
    double q = 0.0;      // probe wavenumber [rad/m]
    double q_c = 0.0;    // coupling wavenumber [rad/m]
    double theta = 0.0;  // angle between the beams [rad]
    double k = 0.0;      // |q - q_c| [rad/m]
    RamanAxis axis = RamanAxis::Transverse;

    // |q| = |q_c| with an angle theta between them; k = 2 q sin(theta/2).
    static BeamGeometry degenerate(double q, double theta);
    // Parallel beams of different wavenumber; k = |q - q_c| along q.
    static BeamGeometry collinear(double q, double q_c);

    // +1 when the Raman wavevector points along q, -1 when opposite.
    double k_sign() const { return q >= q_c ? 1.0 : -1.0; }

    void validate() const;
};

struct DriveParams {
    double Omega_c = 0.0;  // [rad/s]
    double Delta = 0.0;    // two-photon detuning [rad/s]
    double Delta_p = 0.0;  // one-photon detuning [rad/s]

    void validate() const;
};

enum class GammaPrimeMode {
    Voigt,       // ig / chi_I with chi_I from the strong-collision formula
    Stationary,  // Gamma - i Delta_p
};

struct DerivedParams {
    double Lambda = 0.0;  // mean free path [m]
    double D = 0.0;       // diffusion coefficient [m^2/s]
    bool ballistic = false;  // gamma_c == 0: Lambda and D are +inf

    cplx Gamma_prime{};  // effective optical width [rad/s]
    cplx gammaP_complex{};
    double gammaP = 0.0;  // Re of Omega_c^2 / Gamma'
    double gamma = 0.0;   // gamma0 + gammaP
    double alpha = 0.0;   // Re(g / Gamma') [1/m]
    double k0 = 0.0;      // sqrt(gamma / D) [rad/m]
};

DerivedParams derive_params(const MediumParams& medium, const DriveParams& drive,
                            const BeamGeometry& geom,
                            GammaPrimeMode mode = GammaPrimeMode::Voigt);

cplx gamma_prime(double Delta_p, const MediumParams& medium, const BeamGeometry& geom,
                 GammaPrimeMode mode = GammaPrimeMode::Voigt);

}  // namespace polariton
