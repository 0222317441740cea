#pragma once

#include <vector>

#include "polariton/field.hpp"

namespace polariton {

enum class ModeFamily { StandardHG, ElegantHG, StandardLG, ElegantLG };

struct ModeSpec {
    ModeFamily family = ModeFamily::StandardHG;
    int n = 0, m = 0;  // Hermite-Gauss indices
    int p = 0, l = 0;  // Laguerre-Gauss radial index and charge
    double w0 = 0.0;   // waist [m]
    double z = 0.0;    // evaluation plane [m]; requires q when nonzero
    double q = 0.0;    // optical wavenumber [rad/m]
    cplx amplitude = 1.0;

    // Elegant LG with p > 0 follows from the elegant generating form but has
    // no reference result to check against.
    bool unverified() const { return family == ModeFamily::ElegantLG && p > 0; }
};

struct GridSpec {
    std::size_t nx = 0, ny = 0;
    double dx = 0.0, dy = 0.0;

    static GridSpec square(std::size_t n, double d) { return {n, n, d, d}; }
};

// Unit-power mode (times amplitude). The Gaussian factor is exp(-r^2/w_hat^2)
// with w_hat^2 = 2 (z_R - i z) / q, z_R = q w0^2 / 2; global phases are dropped.
ScalarField2D make_mode(const ModeSpec& spec, const GridSpec& grid);

struct StorageRun {
    ScalarField2D initial;
    double D = 0.0;       // [m^2/s]
    double gamma0 = 0.0;  // [rad/s]
    double kx = 0.0, ky = 0.0;  // residual Raman wavevector [rad/m]
    std::vector<double> taus;   // [s], non-negative and increasing

    void validate() const;
};

// Exact spectral solution of d rho/dt = D (grad + i k)^2 rho - gamma0 rho.
std::vector<ScalarField2D> evolve_stored(const StorageRun& run);
ScalarField2D evolve_stored(const ScalarField2D& initial, double tau, double D, double gamma0,
                            double kx = 0.0, double ky = 0.0);

// s(tau) = sqrt(1 + 4 D tau / w0^2)
double stretch_factor(double w0, double D, double tau);
// tau at which s(tau) = s
double tau_for_stretch(double w0, double D, double s);

struct ElegantEvolution {
    ScalarField2D field;
    double power_ratio = 1.0;
    double w_tau = 0.0;
};

ElegantEvolution elegant_evolution(int n, int m, double w0, double tau, double D, double gamma0,
                                   const GridSpec& grid);

struct BeamMetrics {
    double power = 0.0;
    double centroid_x = 0.0, centroid_y = 0.0;
    double rms_radius = 0.0;  // sqrt(<|r - c|^2>)
    double e2_radius = 0.0;   // sqrt(2) rms_radius: 1/e^2 radius for a Gaussian
    double sigma_x = 0.0, sigma_y = 0.0;
    double core_intensity = 0.0;  // |f(0,0)|^2 / max |f|^2
};

BeamMetrics beam_metrics(const ScalarField2D& field);

}  // namespace polariton
