#include "polariton/propagator.hpp"

#include <cmath>
#include <limits>

#include "polariton/errors.hpp"
#include "polariton/fft.hpp"
#include "polariton/parallel.hpp"

namespace polariton {

void PropagationPlan::validate() const {
    require(std::isfinite(L) && L > 0.0, "propagate: L must be > 0");
    require(std::isfinite(q) && q > 0.0, "propagate: q must be > 0");
    require(std::isfinite(tilt) && std::isfinite(Delta), "propagate: tilt and Delta must be finite");
    if (chi_mode == ChiMode::FullLorentzian || chi_mode == ChiMode::Quadratic) {
        require(resonance.D >= 0.0 && resonance.gamma0 >= 0.0, "propagate: invalid dark resonance");
        require(resonance.gamma() > 0.0 || Delta != 0.0, "propagate: gamma must be > 0");
    }
}

cplx chi_transverse(double kx, double ky, double Delta, const DarkResonance& res, double q,
                    double theta_c) {
    const double sx = kx - q * theta_c;
    return chi_dicke(Delta, std::sqrt(sx * sx + ky * ky), res);
}

cplx chi_transverse_quadratic(double kx, double ky, double Delta, const DarkResonance& res,
                              double q, double theta_c) {
    const double sx = kx - q * theta_c;
    const double k2 = sx * sx + ky * ky;
    const cplx w = res.gamma0 + res.gammaP - I * Delta;
    return res.prefactor * (1.0 - res.gammaP / w) + res.prefactor * res.gammaP * res.D * k2 / (w * w);
}

cplx effective_diffusion(double Delta, double gamma, double D) {
    require(gamma > 0.0, "effective_diffusion: gamma must be > 0");
    const cplx w = gamma - I * Delta;
    return D * gamma * gamma / (w * w);
}

cplx effective_diffusion(double Delta, const DarkResonance& res) {
    return effective_diffusion(Delta, res.gamma(), res.D);
}

double diffraction_index(double v_g, double q, double D) {
    require(v_g > 0.0, "diffraction_index: v_g must be > 0");
    const double den = 1.0 - q * D / v_g;
    if (den == 0.0 || std::abs(den) < 1e-12) return std::numeric_limits<double>::infinity();
    return 1.0 / den;
}

double deflection_angle(double theta_c, double theta_i, double n_diff, bool linearized) {
    if (std::isinf(n_diff)) return theta_c;
    if (linearized) return theta_c + (theta_i - theta_c) / n_diff;
    const double s = std::sin(theta_i - theta_c) / n_diff;
    require(std::abs(s) <= 1.0, "deflection_angle: no refracted solution");
    return theta_c + std::asin(s);
}

namespace {

double band_fraction(const std::vector<cplx>& spec, std::size_t nx, std::size_t ny) {
    // power with |index| beyond 90% of Nyquist along either axis
    double total = 0.0, outer = 0.0;
    const double hx = 0.5 * nx, hy = 0.5 * ny;
    for (std::size_t iy = 0; iy < ny; ++iy) {
        const double fy = std::abs(iy < (ny + 1) / 2 ? double(iy) : double(iy) - double(ny)) / hy;
        for (std::size_t ix = 0; ix < nx; ++ix) {
            const double fx = std::abs(ix < (nx + 1) / 2 ? double(ix) : double(ix) - double(nx)) / hx;
            const double p = std::norm(spec[iy * nx + ix]);
            total += p;
            if (fx > 0.9 || fy > 0.9) outer += p;
        }
    }
    return total > 0 ? outer / total : 0.0;
}

double edge_fraction(const ScalarField2D& f) {
    double total = 0.0, outer = 0.0;
    const double ex = 0.45 * f.nx() * f.dx(), ey = 0.45 * f.ny() * f.dy();
    for (std::size_t iy = 0; iy < f.ny(); ++iy)
        for (std::size_t ix = 0; ix < f.nx(); ++ix) {
            const double p = std::norm(f(ix, iy));
            total += p;
            if (std::abs(f.x(ix)) > ex || std::abs(f.y(iy)) > ey) outer += p;
        }
    return total > 0 ? outer / total : 0.0;
}

}  // namespace

PropagationResult propagate(const ScalarField2D& field, const PropagationPlan& plan) {
    plan.validate();
    const std::size_t nx = field.nx(), ny = field.ny();
    const Fft2D fft(nx, ny);
    std::vector<cplx> spec = field.data();
    fft.forward(spec);

    PropagationResult res;
    if (band_fraction(spec, nx, ny) >= 0.01)
        res.warnings.push_back("aliasing: >= 1% of spectral power in the outer 10% band of the k-grid");

    // exponent E(k) such that Omega(k; z) = exp(E z) Omega(k; 0)
    std::vector<cplx> expo(nx * ny);
    double quad_outside = 0.0, quad_total = 0.0;
    const double k0 = plan.resonance.D > 0 && plan.resonance.gamma() > 0 ? plan.resonance.k0() : INFINITY;
    for (std::size_t iy = 0; iy < ny; ++iy) {
        const double ky = fft_wavenumber(iy, ny, field.dy());
        for (std::size_t ix = 0; ix < nx; ++ix) {
            const double kx = fft_wavenumber(ix, nx, field.dx());
            cplx chi = 0.0;
            switch (plan.chi_mode) {
                case ChiMode::FullLorentzian:
                    chi = chi_transverse(kx, ky, plan.Delta, plan.resonance, plan.q, plan.tilt);
                    break;
                case ChiMode::Quadratic: {
                    chi = chi_transverse_quadratic(kx, ky, plan.Delta, plan.resonance, plan.q, plan.tilt);
                    const double sx = kx - plan.q * plan.tilt;
                    const double p = std::norm(spec[iy * nx + ix]);
                    quad_total += p;
                    if (sx * sx + ky * ky > k0 * k0) quad_outside += p;
                    break;
                }
                case ChiMode::FreeSpace:
                    break;
                case ChiMode::Constant:
                    chi = plan.constant_chi;
                    break;
            }
            expo[iy * nx + ix] = I * chi - I * (kx * kx + ky * ky) / (2.0 * plan.q);
        }
    }
    if (plan.chi_mode == ChiMode::Quadratic && quad_total > 0 && quad_outside / quad_total > 0.01)
        res.warnings.push_back("quadratic chi: >= 1% of spectral power lies beyond k0");

    const double norm = 1.0 / double(nx * ny);
    auto evolve_to = [&](double z) {
        ScalarField2D out(nx, ny, field.dx(), field.dy());
        auto& d = out.data();
        parallel_for(ny, [&](std::size_t iy) {
            for (std::size_t ix = 0; ix < nx; ++ix) {
                const std::size_t i = iy * nx + ix;
                d[i] = spec[i] * std::exp(expo[i] * z) * norm;
            }
        });
        fft.inverse(d);
        return out;
    };

    for (std::size_t j = 1; j <= plan.z_steps; ++j) {
        const double z = plan.L * double(j) / double(plan.z_steps);
        res.z_values.push_back(z);
        res.z_series.push_back(j == plan.z_steps ? ScalarField2D() : evolve_to(z));
    }
    res.field = evolve_to(plan.L);
    if (plan.z_steps) res.z_series.back() = res.field;

    if (edge_fraction(res.field) >= 0.01)
        res.warnings.push_back("guard band: >= 1% of output power within 5% of the grid edge (periodic wrap)");

    if (plan.chi_mode == ChiMode::FullLorentzian || plan.chi_mode == ChiMode::Quadratic) {
        const double vg = group_velocity(0.0, plan.resonance);
        if (std::isfinite(vg)) res.tau_d = plan.L / vg;
    }
    return res;
}

CentroidDrift centroid_drift(const ScalarField2D& in, const ScalarField2D& out, const PropagationPlan& plan) {
    require(in.same_grid(out), "centroid_drift: fields must share a grid");
    auto centroid = [](const ScalarField2D& f, double& cx, double& cy) {
        double p = 0.0, sx = 0.0, sy = 0.0, peak = 0.0;
        for (std::size_t iy = 0; iy < f.ny(); ++iy)
            for (std::size_t ix = 0; ix < f.nx(); ++ix) {
                const double w = std::norm(f(ix, iy));
                p += w;
                sx += w * f.x(ix);
                sy += w * f.y(iy);
                peak = std::max(peak, w);
            }
        if (!(p > 0.0) || !(peak > 1e-300)) return false;
        cx = sx / p;
        cy = sy / p;
        return true;
    };
    CentroidDrift d;
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    if (!centroid(in, x0, y0) || !centroid(out, x1, y1)) return d;
    d.defined = true;
    d.dx = x1 - x0;
    d.dy = y1 - y0;
    d.angle_x = d.dx / plan.L;
    d.angle_y = d.dy / plan.L;
    return d;
}

}  // namespace polariton
