#include "polariton/storage.hpp"

#include <algorithm>
#include <cmath>

#include "polariton/errors.hpp"
#include "polariton/fft.hpp"
#include "polariton/parallel.hpp"

namespace polariton {

void StorageRun::validate() const {
    require(initial.nx() >= 8 && initial.ny() >= 8, "storage: initial field is empty");
    require(D >= 0.0 && gamma0 >= 0.0 && std::isfinite(D) && std::isfinite(gamma0),
            "storage: D and gamma0 must be >= 0");
    for (std::size_t i = 0; i < taus.size(); ++i) {
        require(taus[i] >= 0.0 && std::isfinite(taus[i]), "storage: tau must be >= 0");
        if (i) require(taus[i] >= taus[i - 1], "storage: tau schedule must be increasing");
    }
}

std::vector<ScalarField2D> evolve_stored(const StorageRun& run) {
    run.validate();
    const auto& f0 = run.initial;
    const std::size_t nx = f0.nx(), ny = f0.ny();
    const Fft2D fft(nx, ny);
    std::vector<cplx> spec = f0.data();
    fft.forward(spec);

    std::vector<double> rate(nx * ny);
    for (std::size_t iy = 0; iy < ny; ++iy) {
        const double ky = fft_wavenumber(iy, ny, f0.dy()) + run.ky;
        for (std::size_t ix = 0; ix < nx; ++ix) {
            const double kx = fft_wavenumber(ix, nx, f0.dx()) + run.kx;
            rate[iy * nx + ix] = run.gamma0 + run.D * (kx * kx + ky * ky);
        }
    }

    const double norm = 1.0 / double(nx * ny);
    std::vector<ScalarField2D> out;
    out.reserve(run.taus.size());
    for (const double tau : run.taus) {
        ScalarField2D f(nx, ny, f0.dx(), f0.dy());
        auto& d = f.data();
        parallel_for(ny, [&](std::size_t iy) {
            for (std::size_t ix = 0; ix < nx; ++ix) {
                const std::size_t i = iy * nx + ix;
                d[i] = spec[i] * (std::exp(-rate[i] * tau) * norm);
            }
        });
        fft.inverse(d);
        out.push_back(std::move(f));
    }
    return out;
}

ScalarField2D evolve_stored(const ScalarField2D& initial, double tau, double D, double gamma0,
                            double kx, double ky) {
    StorageRun run{initial, D, gamma0, kx, ky, {tau}};
    return std::move(evolve_stored(run).front());
}

double stretch_factor(double w0, double D, double tau) {
    require(w0 > 0.0 && D >= 0.0 && tau >= 0.0, "stretch_factor: invalid arguments");
    return std::sqrt(1.0 + 4.0 * D * tau / (w0 * w0));
}

double tau_for_stretch(double w0, double D, double s) {
    require(w0 > 0.0 && D > 0.0 && s >= 1.0, "tau_for_stretch: invalid arguments");
    return (s * s - 1.0) * w0 * w0 / (4.0 * D);
}

ElegantEvolution elegant_evolution(int n, int m, double w0, double tau, double D, double gamma0,
                                   const GridSpec& grid) {
    require(tau >= 0.0, "elegant_evolution: tau must be >= 0");
    require(gamma0 >= 0.0, "elegant_evolution: gamma0 must be >= 0");
    const double s = stretch_factor(w0, D, tau);
    const int N = n + m;
    ElegantEvolution e;
    e.w_tau = w0 * s;
    // unit-power eHG at the stretched waist, scaled by the retrieval amplitude
    ModeSpec spec;
    spec.family = ModeFamily::ElegantHG;
    spec.n = n;
    spec.m = m;
    spec.w0 = tau == 0.0 ? w0 : e.w_tau;
    spec.amplitude = std::exp(-gamma0 * tau) * std::pow(s, -(N + 1));
    e.field = make_mode(spec, grid);
    e.power_ratio = std::exp(-2.0 * gamma0 * tau) * std::pow(s, -2.0 * (N + 1));
    return e;
}

BeamMetrics beam_metrics(const ScalarField2D& f) {
    BeamMetrics b;
    double p = 0.0, sx = 0.0, sy = 0.0, peak = 0.0;
    for (std::size_t iy = 0; iy < f.ny(); ++iy)
        for (std::size_t ix = 0; ix < f.nx(); ++ix) {
            const double w = std::norm(f(ix, iy));
            p += w;
            sx += w * f.x(ix);
            sy += w * f.y(iy);
            peak = std::max(peak, w);
        }
    require(p > 0.0 && peak > 0.0, "beam_metrics: field has zero power");
    b.power = p * f.dx() * f.dy();
    b.centroid_x = sx / p;
    b.centroid_y = sy / p;
    double vx = 0.0, vy = 0.0;
    for (std::size_t iy = 0; iy < f.ny(); ++iy)
        for (std::size_t ix = 0; ix < f.nx(); ++ix) {
            const double w = std::norm(f(ix, iy));
            const double ddx = f.x(ix) - b.centroid_x, ddy = f.y(iy) - b.centroid_y;
            vx += w * ddx * ddx;
            vy += w * ddy * ddy;
        }
    b.sigma_x = std::sqrt(vx / p);
    b.sigma_y = std::sqrt(vy / p);
    b.rms_radius = std::sqrt((vx + vy) / p);
    b.e2_radius = std::sqrt(2.0) * b.rms_radius;
    b.core_intensity = std::norm(f(f.center_x(), f.center_y())) / peak;
    return b;
}

}  // namespace polariton
