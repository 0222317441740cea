#include <cmath>
#include <random>

#include "polariton/errors.hpp"
#include "polariton/fft.hpp"
#include "polariton/lineshape.hpp"

namespace polariton {

ComplexSpectrum dicke_emitter_spectrum(const EmitterConfig& cfg) {
    require(cfg.v >= 0.0 && cfg.q > 0.0 && cfg.collision_rate >= 0.0, "emitter: invalid v, q or rate");
    require(cfg.dt > 0.0 && cfg.duration > 0.0, "emitter: dt and duration must be > 0");
    require(cfg.dt * cfg.q * cfg.v < 0.5, "emitter: undersampled, need dt q v < 0.5");
    if (cfg.wall_spacing) require(*cfg.wall_spacing > 0.0, "emitter: wall spacing must be > 0");
    const auto n = static_cast<std::size_t>(std::llround(cfg.duration / cfg.dt));
    require(n >= 8, "emitter: duration must span >= 8 samples");

    std::mt19937_64 rng(cfg.seed);
    std::exponential_distribution<double> wait(cfg.collision_rate > 0 ? cfg.collision_rate : 1.0);
    auto next_collision = [&](double now) {
        return cfg.collision_rate > 0 ? now + wait(rng) : INFINITY;
    };

    // Event-driven motion sampled exactly at t_j = j dt.
    const double d = cfg.wall_spacing.value_or(0.0);
    double x = cfg.wall_spacing ? 0.5 * d : 0.0;
    double dir = 1.0, t = 0.0;
    double t_coll = next_collision(0.0);
    std::vector<cplx> sig(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double target = j * cfg.dt;
        while (t < target) {
            double t_wall = INFINITY;
            if (cfg.wall_spacing && cfg.v > 0) t_wall = t + (dir > 0 ? d - x : x) / cfg.v;
            const double t_evt = std::min({t_coll, t_wall, target});
            x += dir * cfg.v * (t_evt - t);
            t = t_evt;
            if (t_evt == t_wall) {
                x = dir > 0 ? d : 0.0;
                dir = -dir;
            } else if (t_evt == t_coll) {
                dir = -dir;
                t_coll = next_collision(t);
            }
        }
        sig[j] = std::polar(1.0, cfg.q * x);
    }

    fft_forward_1d(sig);
    double total = 0.0;
    for (const auto& s : sig) total += std::norm(s);

    // fftshift to increasing frequency order
    ComplexSpectrum out;
    out.formalism = "emitter-psd";
    out.detunings.resize(n);
    out.chi.resize(n);
    const std::size_t half = n / 2;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t src = (i + n - half) % n;
        out.detunings[i] = fft_wavenumber(src, n, cfg.dt);
        out.chi[i] = std::norm(sig[src]) / total;
    }
    out.params = {{"v_m_s", format_double(cfg.v)},
                  {"q_rad_m", format_double(cfg.q)},
                  {"collision_rate_per_s", format_double(cfg.collision_rate)},
                  {"seed", std::to_string(cfg.seed)}};
    out.validate();
    return out;
}

}  // namespace polariton
