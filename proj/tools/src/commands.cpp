#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

#include "polariton/errors.hpp"
#include "polariton/kinetics.hpp"
#include "polariton/parallel.hpp"
#include "polariton/propagator.hpp"
#include "polariton/ramsey.hpp"

namespace polariton::cli {

namespace {

void header_params(std::ostream& os, const ParamList& params) {
    for (const auto& [k, v] : params) os << "# " << k << " = " << v << '\n';
}

void add(ParamList& p, const std::string& key, double v) { p.emplace_back(key, format_double(v)); }

void add_derived(ParamList& p, const Physical& phys) {
    if (phys.has_optics) {
        add(p, "derived.q_rad_m", phys.geom.q);
        add(p, "derived.k_rad_m", phys.geom.k);
    }
    if (phys.medium.gamma_c > 0.0) {
        add(p, "derived.Lambda_m", phys.medium.v_T / phys.medium.gamma_c);
        add(p, "derived.D_m2_s", phys.medium.v_T * phys.medium.v_T / phys.medium.gamma_c);
    }
}

void add_resonance(ParamList& p, const DarkResonance& r) {
    add(p, "derived.alpha_per_m", r.alpha());
    add(p, "derived.gammaP_rad_s", r.gammaP.real());
    add(p, "derived.gamma_rad_s", r.gamma());
    add(p, "derived.D_m2_s", r.D);
    if (r.D > 0.0) add(p, "derived.k0_rad_m", r.k0());
}

std::string indexed_path(const std::string& path, std::size_t i, std::size_t count) {
    if (count <= 1) return path;
    const std::filesystem::path p(path);
    std::filesystem::path out = p.parent_path() / p.stem();
    out += "_" + std::to_string(i) + p.extension().string();
    return out.string();
}

std::optional<double> pick_L(double opt, const Physical& phys) {
    if (opt > 0.0) return opt;
    if (phys.L) {
        require(*phys.L > 0.0, "L must be > 0");
        return phys.L;
    }
    return std::nullopt;
}

Physical checked_physical(const KeyValueParams& kv) {
    Physical p = resolve_physical(kv);
    require(p.has_optics, "missing parameter: lambda");
    p.medium.validate();
    p.drive.validate();
    return p;
}

void write_spectrum(const std::string& path, const ComplexSpectrum& s, std::optional<double> L,
                    const std::vector<ExtraColumn>& extra, std::ostream& out) {
    std::ostringstream ss;
    write_spectrum_csv(ss, s, L, extra);
    write_text_atomic(path, ss.str());
    out << "wrote " << path << " (" << s.detunings.size() << " rows)\n";
}

ScalarField2D make_beam(const BeamOptions& b, double q) {
    require(!b.mode.empty(), "give --in or --beam");
    ModeSpec spec = parse_mode(b.mode);
    require(b.w0 > 0.0, "--w0 must be > 0");
    spec.w0 = b.w0;
    spec.z = b.z;
    spec.q = q;
    const double dx = b.dx > 0.0 ? b.dx : b.w0 / 8.0;
    return make_mode(spec, GridSpec::square(b.grid, dx));
}

double optional_q(const KeyValueParams& kv) {
    return kv.has("lambda") ? wavenumber(kv.number("lambda")) : 0.0;
}

std::string intensity_csv(const ScalarField2D& f, const ParamList& params) {
    std::ostringstream os;
    os << "# polariton-sim intensity v1\n";
    header_params(os, params);
    os << "x_m,y_m,intensity\n";
    for (std::size_t iy = 0; iy < f.ny(); ++iy)
        for (std::size_t ix = 0; ix < f.nx(); ++ix)
            os << format_double(f.x(ix)) << ',' << format_double(f.y(iy)) << ','
               << format_double(std::norm(f(ix, iy))) << '\n';
    return os.str();
}

FieldMetadata to_meta(const ParamList& params) {
    FieldMetadata m;
    for (const auto& [k, v] : params) m[k] = v;
    return m;
}

}  // namespace

void cmd_spectrum(const Common& c, const SpectrumOptions& o, std::ostream& out) {
    const KeyValueParams kv = load_params(c);
    const Physical p = checked_physical(kv);
    const auto x = parse_range(o.range);
    const bool one_photon = o.model == "weak" || o.model == "strong";
    const std::string sweep = o.sweep.empty() ? (one_photon ? "probe" : "raman") : o.sweep;
    require(sweep == "probe" || sweep == "raman", "--sweep must be probe or raman");
    require(!one_photon || sweep == "probe", "one-photon models sweep the probe only");
    const bool raman_only = o.model == "raman-weak" || o.model == "dicke";
    require(!raman_only || sweep == "raman", "Raman models sweep the two-photon detuning only");

    const auto& m = p.medium;
    const auto& g = p.geom;
    const auto& dr = p.drive;
    std::function<cplx(double)> f;
    std::string formalism;
    if (o.model == "weak") {
        f = [&](double d) { return chi_one_photon_weak(d, m, g); };
        formalism = "weak";
    } else if (o.model == "strong") {
        f = [&](double d) { return chi_one_photon_strong(d, m, g); };
        formalism = "strong";
    } else if (o.model == "raman-weak") {
        f = [&](double d) { return chi_raman_weak(d, m, g); };
        formalism = "weak";
    } else if (o.model == "full") {
        if (sweep == "raman")
            f = [&](double d) { return chi_full_strong(dr.Delta_p, d, m, g, dr); };
        else  // coupling frequency fixed: the two-photon detuning follows the probe
            f = [&](double d) { return chi_full_strong(d, dr.Delta + (d - dr.Delta_p), m, g, dr); };
        formalism = "strong";
    } else if (o.model == "dicke") {
        const DarkResonance res = DarkResonance::from(m, dr, g);
        f = [res, k = g.k](double d) { return chi_dicke(d, k, res); };
        formalism = "dicke-limit";
    } else {
        throw ValidationError("unknown model '" + o.model + "' (weak, strong, raman-weak, full, dicke)");
    }
    ComplexSpectrum s = sample_spectrum(x, f, formalism);
    s.params = echo(kv);
    s.params.emplace_back("command.model", o.model);
    s.params.emplace_back("command.sweep", sweep);
    add_derived(s.params, p);
    write_spectrum(o.out, s, pick_L(o.L, p), {}, out);
}

void cmd_dark_resonance(const Common& c, const DarkOptions& o, std::ostream& out) {
    const KeyValueParams kv = load_params(c);
    const Physical p = checked_physical(kv);
    require(o.gamma_prime == "voigt" || o.gamma_prime == "stationary", "--gamma-prime must be voigt or stationary");
    const auto mode = o.gamma_prime == "voigt" ? GammaPrimeMode::Voigt : GammaPrimeMode::Stationary;
    const DarkResonance res = DarkResonance::from(p.medium, p.drive, p.geom, mode);
    const double k = o.k >= 0.0 ? o.k : p.geom.k;
    ComplexSpectrum s = sample_spectrum(parse_range(o.range), [&](double d) { return chi_dicke(d, k, res); },
                                        "dicke-limit");
    s.params = echo(kv);
    s.params.emplace_back("command.gamma_prime", o.gamma_prime);
    add(s.params, "command.k_rad_m", k);
    add_derived(s.params, p);
    add_resonance(s.params, res);
    write_spectrum(o.out, s, pick_L(o.L, p), {}, out);
    out << "hwhm_hz=" << format_double(rad_to_hz(res.hwhm(k))) << " k0_rad_m=" << format_double(res.k0())
        << " vg_m_s=" << format_double(group_velocity(k, res)) << " qD_m_s=" << format_double(p.geom.q * res.D)
        << '\n';
}

void cmd_oracle(const Common& c, const OracleOptions& o, std::ostream& out) {
    const KeyValueParams kv = load_params(c);
    const Physical p = checked_physical(kv);
    require(o.sweep == "probe" || o.sweep == "raman", "--sweep must be probe or raman");
    VelocityGrid grid = default_grid(p.medium, p.geom);
    if (o.nodes > 0 || o.perp_nodes > 0)
        grid = VelocityGrid::make(grid.axes, o.nodes > 0 ? o.nodes : grid.nodes, p.medium.v_T,
                                  o.perp_nodes > 0 ? o.perp_nodes : grid.perp_nodes);
    const auto x = parse_range(o.range);
    const auto& dr = p.drive;
    auto detunings = [&](double d) {
        return o.sweep == "raman" ? std::pair{dr.Delta_p, d} : std::pair{d, dr.Delta + (d - dr.Delta_p)};
    };
    std::vector<OracleSolution> sol(x.size());
    std::vector<cplx> closed(x.size());
    parallel_for(x.size(), [&](std::size_t i) {
        const auto [dp, d] = detunings(x[i]);
        sol[i] = solve_velocity_resolved_detail(dp, d, p.medium, p.geom, dr, grid);
        closed[i] = chi_full_strong(dp, d, p.medium, p.geom, dr);
    });
    ComplexSpectrum s;
    s.detunings = x;
    s.formalism = "kinetics-oracle";
    ExtraColumn re_cf{"re_chi_closed_form_per_m", {}}, im_cf{"im_chi_closed_form_per_m", {}},
        err{"relative_difference", {}}, res{"closure_residual", {}};
    for (std::size_t i = 0; i < x.size(); ++i) {
        s.chi.push_back(sol[i].chi);
        re_cf.values.push_back(closed[i].real());
        im_cf.values.push_back(closed[i].imag());
        err.values.push_back(std::abs(sol[i].chi - closed[i]) / std::abs(closed[i]));
        res.values.push_back(sol[i].closure_residual);
    }
    s.validate();
    s.params = echo(kv);
    s.params.emplace_back("command.sweep", o.sweep);
    s.params.emplace_back("command.axes", std::to_string(grid.axes));
    s.params.emplace_back("command.nodes", std::to_string(grid.nodes));
    s.params.emplace_back("command.perp_nodes", std::to_string(grid.perp_nodes));
    add_derived(s.params, p);
    write_spectrum(o.out, s, p.L, {re_cf, im_cf, err, res}, out);
}

void cmd_propagate(const Common& c, const PropagateOptions& o, std::ostream& out) {
    const KeyValueParams kv = load_params(c);
    require(kv.has("lambda"), "missing parameter: lambda");
    const double q = wavenumber(kv.number("lambda"));
    FieldMetadata in_meta;
    const ScalarField2D field = o.in.empty() ? make_beam(o.beam, q) : read_cf2d(o.in, &in_meta);

    DarkResonance res = resolve_resonance(kv);
    const double Delta = parse_scaled(o.delta, "gamma", res.gamma(), two_pi, "--delta");
    double vg = group_velocity(0.0, res);
    if (!o.vg.empty()) {
        vg = parse_scaled(o.vg, "qD", q * res.D, 1.0, "--vg");
        require(vg > 0.0 && std::isfinite(vg), "--vg must be > 0");
        require(res.gammaP.real() > 0.0, "--vg needs gammaP > 0");
        // rescale the prefactor so that v_g(0) = gamma^2 / (alpha gammaP) hits the target
        const double alpha = res.gamma() * res.gamma() / (res.gammaP.real() * vg);
        res.prefactor = res.alpha() > 0.0 ? res.prefactor * (alpha / res.alpha()) : cplx(0.0, alpha);
    }

    PropagationPlan plan;
    const Physical phys = resolve_physical(kv);
    const auto L = pick_L(o.L, phys);
    require(L.has_value(), "missing medium length: --L or L");
    plan.L = *L;
    plan.z_steps = o.z_steps;
    plan.Delta = Delta;
    plan.q = q;
    plan.tilt = o.tilt;
    plan.resonance = res;
    if (o.chi_mode == "full")
        plan.chi_mode = ChiMode::FullLorentzian;
    else if (o.chi_mode == "quadratic")
        plan.chi_mode = ChiMode::Quadratic;
    else if (o.chi_mode == "free")
        plan.chi_mode = ChiMode::FreeSpace;
    else
        throw ValidationError("--mode must be full, quadratic or free");
    require(!o.out.empty() || !o.intensity_csv.empty(), "give --out and/or --intensity-csv");

    const PropagationResult r = propagate(field, plan);
    ParamList params = echo(kv);
    if (!o.in.empty()) params.emplace_back("command.in", o.in);
    else params.emplace_back("command.beam", o.beam.mode);
    add(params, "command.L_m", plan.L);
    add(params, "command.delta_rad_s", Delta);
    add(params, "command.vg_m_s", vg);
    add(params, "command.tilt_rad", plan.tilt);
    params.emplace_back("command.chi_mode", o.chi_mode);
    add_resonance(params, res);
    if (r.tau_d) add(params, "derived.tau_d_s", *r.tau_d);
    for (std::size_t i = 0; i < r.warnings.size(); ++i)
        params.emplace_back("warning." + std::to_string(i), r.warnings[i]);
    for (const auto& w : r.warnings) out << "warning: " << w << '\n';

    if (!o.out.empty()) {
        write_cf2d(o.out, r.field, to_meta(params));
        out << "wrote " << o.out << '\n';
        for (std::size_t j = 0; j < r.z_series.size(); ++j) {
            ParamList zp = params;
            add(zp, "command.z_m", r.z_values[j]);
            const std::string path = indexed_path(o.out, j + 1, r.z_series.size() + 1);
            write_cf2d(path, r.z_series[j], to_meta(zp));
            out << "wrote " << path << '\n';
        }
    }
    if (!o.intensity_csv.empty()) {
        write_text_atomic(o.intensity_csv, intensity_csv(r.field, params));
        out << "wrote " << o.intensity_csv << '\n';
    }
}

void cmd_store(const Common& c, const StoreOptions& o, std::ostream& out) {
    const KeyValueParams kv = load_params(c);
    const double q = optional_q(kv);
    require(o.in.empty() || o.beam.mode.empty(), "give --in or --mode, not both");
    if (o.in.empty()) require(!o.beam.mode.empty(), "give --in or --mode");
    if (o.beam.z != 0.0) require(q > 0.0, "--z needs lambda");
    FieldMetadata in_meta;
    const ScalarField2D f0 = o.in.empty() ? make_beam(o.beam, q) : read_cf2d(o.in, &in_meta);

    StorageRun run;
    run.initial = f0;
    run.D = resolve_D(kv);
    run.gamma0 = hz_to_rad(kv.number("gamma0", 0.0));
    run.kx = o.kx;
    run.ky = o.ky;
    require(o.taus.empty() != o.stretch.empty(), "give exactly one of --tau or --stretch");
    if (!o.taus.empty()) {
        run.taus = parse_list(o.taus, "--tau");
    } else {
        require(o.beam.w0 > 0.0, "--stretch needs a generated mode with --w0");
        for (double s : parse_list(o.stretch, "--stretch")) run.taus.push_back(tau_for_stretch(o.beam.w0, run.D, s));
    }
    const auto fields = evolve_stored(run);

    ParamList params = echo(kv);
    if (!o.in.empty()) params.emplace_back("command.in", o.in);
    else {
        params.emplace_back("command.mode", o.beam.mode);
        add(params, "command.w0_m", o.beam.w0);
        add(params, "command.z_m", o.beam.z);
    }
    add(params, "derived.D_m2_s", run.D);
    add(params, "derived.gamma0_rad_s", run.gamma0);
    add(params, "command.kx_rad_m", run.kx);
    add(params, "command.ky_rad_m", run.ky);

    int order = -1;  // total order for the focal-plane elegant HG law
    if (o.in.empty() && o.beam.z == 0.0) {
        const ModeSpec spec = parse_mode(o.beam.mode);
        if (spec.family == ModeFamily::ElegantHG) order = spec.n + spec.m;
    }
    const double p0 = f0.power();
    std::ostringstream csv;
    csv << "# polariton-sim storage-metrics v1\n";
    header_params(csv, params);
    csv << "tau_s,stretch,power,power_ratio,analytic_power_ratio,centroid_x_m,centroid_y_m,rms_radius_m,"
           "e2_radius_m,core_intensity\n";
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 0; i < fields.size(); ++i) {
        const double tau = run.taus[i];
        const BeamMetrics bm = beam_metrics(fields[i]);
        const double s = o.beam.w0 > 0.0 && o.in.empty() ? stretch_factor(o.beam.w0, run.D, tau) : nan;
        const double analytic =
            order >= 0 ? std::exp(-2.0 * run.gamma0 * tau) * std::pow(s, -2.0 * (order + 1)) : nan;
        for (double v : {tau, s, bm.power, bm.power / p0, analytic, bm.centroid_x, bm.centroid_y, bm.rms_radius,
                         bm.e2_radius})
            csv << format_double(v) << ',';
        csv << format_double(bm.core_intensity) << '\n';
        if (!o.out.empty()) {
            ParamList fp = params;
            add(fp, "command.tau_s", tau);
            const std::string path = indexed_path(o.out, i, fields.size());
            write_cf2d(path, fields[i], to_meta(fp));
            out << "wrote " << path << '\n';
        }
    }
    if (!o.metrics.empty()) {
        write_text_atomic(o.metrics, csv.str());
        out << "wrote " << o.metrics << " (" << fields.size() << " rows)\n";
    } else if (o.out.empty()) {
        out << csv.str();
    }
}

void cmd_ramsey(const Common& c, const RamseyOptions& o, std::ostream& out) {
    const KeyValueParams kv = load_params(c);
    const DarkResonance res = resolve_resonance(kv);
    const Physical phys = resolve_physical(kv);
    RamseyGeometry g;
    g.dimensionality = o.dim;
    g.a = o.a > 0.0 ? o.a : kv.number("a");
    const std::string b = kv.has("b") && o.b == "inf" ? *kv.get("b") : o.b;
    g.b = b == "inf" ? std::numeric_limits<double>::infinity() : parse_double(b, "--b");
    g.D = res.D;
    g.gamma0 = res.gamma0;
    g.gammaP = res.gammaP.real();
    g.validate();
    require(o.wall_factor == "printed" || o.wall_factor == "exact", "--wall-factor must be printed or exact");
    const WallFactor wf = o.wall_factor == "printed" ? WallFactor::AsPrinted : WallFactor::ExactAbsorbing;
    require(o.walkers > 0 || o.hist.empty(), "--hist needs --walkers > 0");

    const auto x = parse_range(o.range);
    ComplexSpectrum s;
    s.detunings = x;
    s.formalism = g.dimensionality == 1 ? "ramsey-1d" : "ramsey-2d";
    ExtraColumn re_R{"re_R", {}}, im_R{"im_R", {}};
    for (double d : x) {
        const cplx R = ramsey_correction(d, g, wf);
        re_R.values.push_back(R.real());
        im_R.values.push_back(R.imag());
        s.chi.push_back(res.prefactor * (1.0 - ramsey_dark_resonance(d, g, wf)));
    }
    s.validate();
    s.params = echo(kv);
    add(s.params, "command.a_m", g.a);
    add(s.params, "command.b_m", g.b);
    s.params.emplace_back("command.dim", std::to_string(g.dimensionality));
    s.params.emplace_back("command.wall_factor", o.wall_factor);
    add_resonance(s.params, res);
    std::vector<ExtraColumn> extra{re_R, im_R};

    if (o.walkers > 0) {
        MonteCarloSpec mc;
        mc.walkers = o.walkers;
        mc.dt = o.dt > 0.0 ? o.dt : 1e-2 * g.a * g.a / g.D;
        mc.seed = o.seed;
        mc.threads = c.threads;
        const auto r = simulate_repeated_interaction(g, x, mc);
        ExtraColumn rc{"re_chi_mc_per_m", {}}, ic{"im_chi_mc_per_m", {}}, rd{"re_dark_mc", {}},
            id{"im_dark_mc", {}}, sr{"se_re_dark_mc", {}}, si{"se_im_dark_mc", {}};
        for (std::size_t i = 0; i < x.size(); ++i) {
            const cplx chi = res.prefactor * (1.0 - r.dark[i]);
            rc.values.push_back(chi.real());
            ic.values.push_back(chi.imag());
            rd.values.push_back(r.dark[i].real());
            id.values.push_back(r.dark[i].imag());
            sr.values.push_back(r.dark_stderr[i].real());
            si.values.push_back(r.dark_stderr[i].imag());
        }
        for (auto* col : {&rc, &ic, &rd, &id, &sr, &si}) extra.push_back(*col);
        s.params.emplace_back("command.walkers", std::to_string(mc.walkers));
        add(s.params, "command.dt_s", mc.dt);
        s.params.emplace_back("command.seed", std::to_string(mc.seed));
        add(s.params, "derived.absorbed_fraction", double(r.absorbed) / double(mc.walkers));

        if (!o.hist.empty()) {
            const auto& st = r.stats;
            std::ostringstream h;
            h << "# polariton-sim durations v1\n";
            header_params(h, s.params);
            h << "t_seconds,pdf_in,pdf_out\n";
            for (std::size_t i = 0; i < st.pdf_in.size(); ++i) {
                const double t = std::sqrt(st.histogram_edges[i] * st.histogram_edges[i + 1]);
                h << format_double(t) << ',' << format_double(st.pdf_in[i]) << ',' << format_double(st.pdf_out[i])
                  << '\n';
            }
            write_text_atomic(o.hist, h.str());
            out << "wrote " << o.hist << '\n';
        }
    }
    write_spectrum(o.out, s, pick_L(o.L, phys), extra, out);
}

void cmd_dicke_demo(const Common& c, const DickeOptions& o, std::ostream& out) {
    const KeyValueParams kv = load_params(c);
    EmitterConfig cfg;
    cfg.v = o.v > 0.0 ? o.v : kv.number("v_T", 0.0);
    cfg.q = o.q > 0.0 ? o.q : optional_q(kv);
    require(cfg.q > 0.0, "give --q or lambda");
    cfg.collision_rate = o.collision_rate > 0.0 ? o.collision_rate : kv.number("collision_rate", 0.0);
    if (o.walls > 0.0) cfg.wall_spacing = o.walls;
    const double qv = cfg.q * cfg.v;
    cfg.dt = o.dt > 0.0 ? o.dt : (qv > 0.0 ? 0.1 / qv : 1.0);
    cfg.duration = o.duration > 0.0 ? o.duration : 16384.0 * cfg.dt;
    cfg.seed = o.seed;
    const ComplexSpectrum s = dicke_emitter_spectrum(cfg);

    ParamList params = echo(kv);
    add(params, "command.v_m_s", cfg.v);
    add(params, "command.q_rad_m", cfg.q);
    add(params, "command.collision_rate_per_s", cfg.collision_rate);
    add(params, "command.wall_spacing_m", cfg.wall_spacing.value_or(std::numeric_limits<double>::infinity()));
    add(params, "command.duration_s", cfg.duration);
    add(params, "command.dt_s", cfg.dt);
    params.emplace_back("command.seed", std::to_string(cfg.seed));
    std::ostringstream os;
    os << "# polariton-sim emitter-psd v1\n";
    header_params(os, params);
    os << "frequency_hz,power_fraction\n";
    for (std::size_t i = 0; i < s.detunings.size(); ++i)
        os << format_double(rad_to_hz(s.detunings[i])) << ',' << format_double(s.chi[i].real()) << '\n';
    write_text_atomic(o.out, os.str());
    out << "wrote " << o.out << " (" << s.detunings.size() << " rows)\n";
}

}  // namespace polariton::cli
