#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "polariton/parallel.hpp"
#include "polariton/units.hpp"

namespace polariton {

struct ComplexSpectrum {
    std::vector<double> detunings;  // [rad/s], strictly increasing
    std::vector<cplx> chi;          // [1/m]
    std::string formalism;          // weak | strong | dicke-limit | ...
    std::vector<std::pair<std::string, std::string>> params;

    void validate() const;
};

std::vector<double> linspace(double lo, double hi, std::size_t n);

template <class F>
ComplexSpectrum sample_spectrum(std::vector<double> detunings, F&& f, std::string formalism) {
    ComplexSpectrum s;
    s.detunings = std::move(detunings);
    s.chi.resize(s.detunings.size());
    s.formalism = std::move(formalism);
    parallel_for(s.detunings.size(), [&](std::size_t i) { s.chi[i] = f(s.detunings[i]); });
    s.validate();
    return s;
}

// Full width at half maximum of a sampled single-peaked profile with zero
// baseline. Crossings are located on a monotone (Fritsch-Carlson) cubic.
double fwhm(const std::vector<double>& x, const std::vector<double>& y);

struct LorentzianFit {
    double amplitude = 0.0;
    double center = 0.0;
    double hwhm = 0.0;
    double rms_residual = 0.0;  // relative to amplitude
};

// Least-squares fit of A / (1 + ((x - x0)/h)^2) (Levenberg-Marquardt).
LorentzianFit fit_lorentzian(const std::vector<double>& x, const std::vector<double>& y);

// Shortest round-trip decimal representation with 17 significant digits.
std::string format_double(double v);

struct ExtraColumn {
    std::string name;
    std::vector<double> values;
};

// `# polariton-sim spectrum v1` CSV. Detunings are written in Hz.
void write_spectrum_csv(std::ostream& out, const ComplexSpectrum& s, std::optional<double> L,
                        const std::vector<ExtraColumn>& extra = {});

}  // namespace polariton
