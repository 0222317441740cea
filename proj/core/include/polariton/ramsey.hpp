#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "polariton/units.hpp"

namespace polariton {

struct RamseyGeometry {
    int dimensionality = 2;  // 1: light sheet of half-width a, 2: top-hat disk of radius a
    double a = 0.0;          // [m]
    double b = std::numeric_limits<double>::infinity();  // absorbing walls [m], b >= a
    double D = 0.0;          // [m^2/s]
    double gamma0 = 0.0;     // [rad/s]
    double gammaP = 0.0;     // [rad/s]

    bool has_walls() const { return b < std::numeric_limits<double>::infinity(); }
    void validate() const;
};

enum class WallFactor {
    AsPrinted,       // beta = K0(k0 b) / (K0(k0 a) I0(k0 (b - a)))
    ExactAbsorbing,  // outer solution K0(k0 r) - [K0(k0 b)/I0(k0 b)] I0(k0 r)
};

// Correction R(Delta) to the stationary dark resonance for a finite beam.
// kappa = sqrt((gamma0 + gammaP - i Delta)/D), kappa0 = sqrt((gamma0 - i Delta)/D),
// principal branches.
cplx ramsey_correction(double Delta, const RamseyGeometry& g, WallFactor wf = WallFactor::AsPrinted);

// Beam-averaged pumped ground-state coherence:
//   gammaP / (gamma0 + gammaP - i Delta) * (1 - R(Delta)).
// The probe susceptibility is prefactor * (1 - ramsey_dark_resonance).
cplx ramsey_dark_resonance(double Delta, const RamseyGeometry& g, WallFactor wf = WallFactor::AsPrinted);

// 1 / (ell sqrt(s/D)), s = gamma0 + i Delta: the small-beam limit A/(1 - P_out(s))
// with P_out(s) ~ 1 - ell sqrt(s/D) and A = 1.
cplx universal_spectrum(double Delta, double D, double gamma0, double ell);
// 1 / (gamma0 + i Delta)
cplx lorentzian_reference(double Delta, double gamma0);

struct MonteCarloSpec {
    std::size_t walkers = 10000;
    double dt = 0.0;               // base time step near the beam edge [s]
    std::uint64_t seed = 1;
    double weight_cutoff = 1e-4;   // stop when exp(-gamma0 t) drops below
    unsigned threads = 0;          // 0: global thread limit
    std::vector<cplx> laplace_s;   // [rad/s]; P_in, P_out and direct return sums
    std::size_t histogram_bins = 60;
    std::size_t max_samples = 200000;  // duration reservoir per kind
};

struct LaplaceEstimate {
    cplx s;
    cplx mean;
    double stderr_re = 0.0, stderr_im = 0.0;
    std::size_t samples = 0;
};

struct TrajectoryStats {
    std::vector<double> t_in_samples;   // first max_samples positive durations [s]
    std::vector<double> t_out_samples;
    std::size_t in_count = 0, out_count = 0;       // excursions, including sub-step touches
    std::size_t censored_out = 0;                   // excursions cut by the stop rule or walls
    std::vector<LaplaceEstimate> laplace_in;        // E exp(-s t_in)
    std::vector<LaplaceEstimate> laplace_out;       // E exp(-s t_out)
    std::vector<LaplaceEstimate> return_sum;        // E sum_n exp(-s T_n), T_n cumulative dark time
    std::vector<double> histogram_edges;            // [s], log spaced
    std::vector<double> pdf_in, pdf_out;            // [1/s]

    // 1 / (1 - P_out(s)) from the estimated P_out, one value per laplace_s
    std::vector<cplx> renewal_spectrum() const;
};

struct RepeatedInteractionResult {
    std::vector<double> detunings;      // [rad/s]
    std::vector<cplx> dark;             // estimate of ramsey_dark_resonance
    std::vector<cplx> dark_stderr;      // (stderr re, stderr im)
    std::vector<cplx> first_transit;    // contribution before the first exit
    std::vector<cplx> recurrence;       // contribution after the first exit
    std::vector<cplx> recurrence_stderr;
    std::size_t absorbed = 0;           // walkers lost to walls
    TrajectoryStats stats;
};

// Feynman-Kac Monte Carlo of the diffusion model: walkers start uniformly in
// the beam; inside they pump toward the bright-state amplitude at rate
// gamma0 + gammaP, outside they precess freely as exp(-(gamma0 - i Delta) t).
// Results are bit-identical for a given seed regardless of thread count.
RepeatedInteractionResult simulate_repeated_interaction(const RamseyGeometry& g,
                                                        const std::vector<double>& detunings,
                                                        const MonteCarloSpec& spec);

}  // namespace polariton
