#include "polariton/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

#include "commands.hpp"
#include "polariton/errors.hpp"
#include "polariton/parallel.hpp"

namespace polariton::cli {

std::string version_string() {
    return std::string("polariton-sim ") + POLARITON_VERSION + " (spectrum csv v1, CF2D v1)";
}

namespace {

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    std::replace(s.begin(), s.end(), '"', '\'');
    return s;
}

int fail(std::ostream& err, int code, const char* kind, const std::string& msg) {
    err << "error code=" << code << " kind=" << kind << " message=\"" << one_line(msg) << "\"\n";
    return code;
}

void add_range(CLI::App* app, std::string& target) {
    app->add_option("--delta-range", target, "lo:hi:n detuning sweep [Hz]")->required();
}

void add_beam(CLI::App* app, BeamOptions& b, const char* flag) {
    app->add_option(flag, b.mode, "generated mode, e.g. sHG:0,0 or eLG:0,2");
    app->add_option("--w0", b.w0, "waist [m]");
    app->add_option("--grid", b.grid, "grid points per axis")->check(CLI::Range(8, 16384));
    app->add_option("--dx", b.dx, "sample spacing [m] (default w0/8)");
    app->add_option("--z", b.z, "evaluation plane of a standard mode [m]");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Raman/EIT lineshapes, slow and stored light, Ramsey narrowing"};
    app.name("polariton-sim");
    app.set_version_flag("--version", version_string());
    app.require_subcommand(1, 1);
    app.fallthrough();

    Common common;
    app.add_option("--params", common.params_file, "key = value parameter file (rates in Hz)");
    app.add_option("--set", common.overrides, "override one parameter, key=value")->allow_extra_args(false);
    app.add_option("--threads", common.threads, "cap on worker threads (0: all cores)");

    SpectrumOptions sp;
    auto* spectrum = app.add_subcommand("spectrum", "susceptibility spectrum CSV");
    spectrum->add_option("--model", sp.model, "weak | strong | raman-weak | full | dicke")->required();
    add_range(spectrum, sp.range);
    spectrum->add_option("--sweep", sp.sweep, "probe | raman (full model)");
    spectrum->add_option("--L", sp.L, "medium length for the transmission column [m]");
    spectrum->add_option("--out", sp.out, "output CSV")->required();

    DarkOptions dk;
    auto* dark = app.add_subcommand("dark-resonance", "Dicke-limit dark resonance and derived widths");
    add_range(dark, dk.range);
    dark->add_option("--k", dk.k, "Raman wavenumber [rad/m] (default from the beam geometry)");
    dark->add_option("--gamma-prime", dk.gamma_prime, "voigt | stationary");
    dark->add_option("--L", dk.L, "medium length [m]");
    dark->add_option("--out", dk.out, "output CSV")->required();

    OracleOptions orc;
    auto* oracle = app.add_subcommand("oracle", "velocity-resolved kinetic solution vs closed form");
    add_range(oracle, orc.range);
    oracle->add_option("--sweep", orc.sweep, "probe | raman");
    oracle->add_option("--nodes", orc.nodes, "Gauss-Hermite nodes along q (odd)");
    oracle->add_option("--perp-nodes", orc.perp_nodes, "nodes along k for angled beams (odd)");
    oracle->add_option("--out", orc.out, "output CSV")->required();

    PropagateOptions pr;
    auto* prop = app.add_subcommand("propagate", "slow-light propagation of a transverse field");
    prop->add_option("--in", pr.in, "input CF2D field");
    add_beam(prop, pr.beam, "--beam");
    prop->add_option("--L", pr.L, "medium length [m]");
    prop->add_option("--delta", pr.delta, "two-photon detuning: Hz, or a multiple of gamma, e.g. -1gamma");
    prop->add_option("--vg", pr.vg, "group velocity: m/s, or a multiple of qD, e.g. qD");
    prop->add_option("--mode", pr.chi_mode, "full | quadratic | free");
    prop->add_option("--tilt", pr.tilt, "coupling tilt theta_c along x [rad]");
    prop->add_option("--z-steps", pr.z_steps, "extra equally spaced outputs along z");
    prop->add_option("--out", pr.out, "output CF2D field");
    prop->add_option("--intensity-csv", pr.intensity_csv, "output |field|^2 CSV");

    StoreOptions st;
    auto* store = app.add_subcommand("store", "diffusion of a stored coherence field");
    store->add_option("--in", st.in, "input CF2D field");
    add_beam(store, st.beam, "--mode");
    store->add_option("--tau", st.taus, "storage times, comma separated [s]");
    store->add_option("--stretch", st.stretch, "target stretch factors s(tau), comma separated");
    store->add_option("--kx", st.kx, "residual Raman wavevector x [rad/m]");
    store->add_option("--ky", st.ky, "residual Raman wavevector y [rad/m]");
    store->add_option("--out", st.out, "output CF2D (indexed when several taus)");
    store->add_option("--metrics", st.metrics, "beam metrics CSV");

    RamseyOptions rm;
    auto* ramsey = app.add_subcommand("ramsey", "Ramsey-narrowed dark resonance of a finite beam");
    ramsey->add_option("--dim", rm.dim, "1 (slab) or 2 (disk)")->check(CLI::IsMember({1, 2}));
    ramsey->add_option("--a", rm.a, "beam half-width or radius [m]");
    ramsey->add_option("--b", rm.b, "absorbing wall distance [m] or inf");
    add_range(ramsey, rm.range);
    ramsey->add_option("--walkers", rm.walkers, "Monte Carlo walkers (0: closed form only)");
    ramsey->add_option("--dt", rm.dt, "edge time step [s] (default 1e-2 a^2/D)");
    ramsey->add_option("--seed", rm.seed, "Monte Carlo seed");
    ramsey->add_option("--hist", rm.hist, "durations histogram CSV");
    ramsey->add_option("--wall-factor", rm.wall_factor, "printed | exact");
    ramsey->add_option("--L", rm.L, "medium length [m]");
    ramsey->add_option("--out", rm.out, "output CSV")->required();

    DickeOptions dd;
    auto* demo = app.add_subcommand("dicke-demo", "power spectrum of a bouncing emitter");
    demo->add_option("--v", dd.v, "speed [m/s] (default v_T)");
    demo->add_option("--q", dd.q, "wavenumber [rad/m] (default from lambda)");
    demo->add_option("--collision-rate", dd.collision_rate, "direction-flip rate [1/s]");
    demo->add_option("--walls", dd.walls, "reflecting wall spacing [m]");
    demo->add_option("--duration", dd.duration, "record length [s]");
    demo->add_option("--dt", dd.dt, "sample step [s]");
    demo->add_option("--seed", dd.seed, "seed");
    demo->add_option("--out", dd.out, "output CSV")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << version_string() << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        return fail(err, kUsage, "usage", e.what());
    }

    try {
        set_thread_limit(common.threads);
        if (spectrum->parsed()) cmd_spectrum(common, sp, out);
        else if (dark->parsed()) cmd_dark_resonance(common, dk, out);
        else if (oracle->parsed()) cmd_oracle(common, orc, out);
        else if (prop->parsed()) cmd_propagate(common, pr, out);
        else if (store->parsed()) cmd_store(common, st, out);
        else if (ramsey->parsed()) cmd_ramsey(common, rm, out);
        else if (demo->parsed()) cmd_dicke_demo(common, dd, out);
    } catch (const ConvergenceError& e) {
        return fail(err, kConvergence, "convergence", e.what());
    } catch (const std::invalid_argument& e) {
        return fail(err, kValidation, "validation", e.what());
    } catch (const std::exception& e) {
        return fail(err, kIoError, "internal", e.what());
    }
    return kOk;
}

}  // namespace polariton::cli
