#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polariton/field.hpp"
#include "polariton/lineshape.hpp"

namespace polariton {

enum class ChiMode {
    FullLorentzian,  // P (1 - gammaP / (gamma + D |k - k_c|^2 - i Delta))
    Quadratic,       // expansion to second order in |k - k_c|
    FreeSpace,       // chi = 0
    Constant,        // chi = constant_chi for every k
};

struct PropagationPlan {
    double L = 0.0;               // medium length [m]
    std::size_t z_steps = 0;      // extra outputs at z = L j / z_steps, j = 1..z_steps
    ChiMode chi_mode = ChiMode::FullLorentzian;
    double tilt = 0.0;            // coupling-beam angle theta_c along x [rad]
    double Delta = 0.0;           // two-photon detuning [rad/s]
    double q = 0.0;               // probe wavenumber [rad/m]
    DarkResonance resonance{};
    cplx constant_chi{};

    void validate() const;
};

// chi at transverse wavevector (kx, ky); the tilt shifts only the diffusion
// term, D |k - q theta_c x|^2. The optical k^2/(2q) term is never tilted.
cplx chi_transverse(double kx, double ky, double Delta, const DarkResonance& res, double q,
                    double theta_c = 0.0);
cplx chi_transverse_quadratic(double kx, double ky, double Delta, const DarkResonance& res,
                              double q, double theta_c = 0.0);

// D gamma^2 / (gamma - i Delta)^2
cplx effective_diffusion(double Delta, double gamma, double D);
cplx effective_diffusion(double Delta, const DarkResonance& res);

// (1 - q D / v_g)^{-1}; +inf at v_g = q D.
double diffraction_index(double v_g, double q, double D);

// Modified Snell law sin(theta_i - theta_c) = n sin(theta_r - theta_c).
double deflection_angle(double theta_c, double theta_i, double n_diff, bool linearized = true);

struct PropagationResult {
    ScalarField2D field;                // at z = L
    std::vector<double> z_values;       // for z_series
    std::vector<ScalarField2D> z_series;
    std::vector<std::string> warnings;
    std::optional<double> tau_d;        // L / v_g when v_g is finite
};

PropagationResult propagate(const ScalarField2D& field, const PropagationPlan& plan);

struct CentroidDrift {
    bool defined = false;  // false when either field carries ~zero power
    double dx = 0.0, dy = 0.0;            // [m]
    double angle_x = 0.0, angle_y = 0.0;  // [rad]
};

CentroidDrift centroid_drift(const ScalarField2D& in, const ScalarField2D& out, const PropagationPlan& plan);

}  // namespace polariton
