#include "resolve.hpp"

#include <cmath>
#include <sstream>

#include "polariton/errors.hpp"
#include "polariton/io.hpp"

namespace polariton::cli {

KeyValueParams load_params(const Common& c) {
    KeyValueParams kv = c.params_file.empty() ? KeyValueParams{} : KeyValueParams::load(c.params_file);
    for (const auto& o : c.overrides) kv.set_assignment(o);
    return kv;
}

Physical resolve_physical(const KeyValueParams& kv) {
    Physical p;
    MediumParams& m = p.medium;
    m.v_T = kv.number("v_T", 0.0);
    m.Gamma = hz_to_rad(kv.number("Gamma", 0.0));
    m.gamma0 = hz_to_rad(kv.number("gamma0", 0.0));
    m.g = hz_to_rad(kv.number("g", 0.0));
    if (kv.has("gamma_c")) {
        m.gamma_c = hz_to_rad(kv.number("gamma_c"));
    } else if (kv.has("D")) {
        m.gamma_c = m.v_T * m.v_T / kv.number("D");
    } else if (kv.has("Lambda")) {
        m.gamma_c = m.v_T / kv.number("Lambda");
    }
    p.drive.Omega_c = hz_to_rad(kv.number("Omega_c", 0.0));
    p.drive.Delta = hz_to_rad(kv.number("Delta", 0.0));
    p.drive.Delta_p = hz_to_rad(kv.number("Delta_p", 0.0));
    if (kv.has("L")) p.L = kv.number("L");

    if (kv.has("lambda")) {
        p.has_optics = true;
        const double lambda = kv.number("lambda");
        require(lambda > 0.0, "lambda must be > 0");
        const double lambda_c = kv.number("lambda_c", lambda);
        require(lambda_c > 0.0, "lambda_c must be > 0");
        const double theta = kv.number("theta", 0.0);
        const std::string axis = kv.get("geometry").value_or(theta != 0.0 ? "transverse" : "collinear");
        const double q = wavenumber(lambda), qc = wavenumber(lambda_c);
        if (axis == "collinear") {
            require(theta == 0.0, "collinear geometry requires theta = 0");
            p.geom = BeamGeometry::collinear(q, qc);
        } else if (axis == "transverse") {
            require(lambda_c == lambda, "angled beams require lambda_c = lambda");
            p.geom = BeamGeometry::degenerate(q, theta);
        } else {
            throw ValidationError("geometry must be collinear or transverse, got '" + axis + "'");
        }
    }
    return p;
}

double resolve_D(const KeyValueParams& kv) {
    if (kv.has("D")) {
        const double D = kv.number("D");
        require(D >= 0.0 && std::isfinite(D), "D must be finite and >= 0");
        return D;
    }
    const Physical p = resolve_physical(kv);
    require(p.medium.gamma_c > 0.0 && p.medium.v_T > 0.0, "need D, or v_T with gamma_c or Lambda");
    return p.medium.v_T * p.medium.v_T / p.medium.gamma_c;
}

DarkResonance resolve_resonance(const KeyValueParams& kv) {
    if (kv.has("alpha") || kv.has("gammaP")) {
        return DarkResonance::ideal(kv.number("alpha", 1.0), hz_to_rad(kv.number("gammaP")),
                                    hz_to_rad(kv.number("gamma0", 0.0)), resolve_D(kv));
    }
    const Physical p = resolve_physical(kv);
    require(p.has_optics, "missing parameter: lambda (or give alpha and gammaP directly)");
    p.medium.validate();
    return DarkResonance::from(p.medium, p.drive, p.geom);
}

ParamList echo(const KeyValueParams& kv) {
    ParamList out;
    for (const auto& [k, v] : kv.entries()) out.emplace_back(k, v);
    return out;
}

std::vector<double> parse_range(const std::string& spec) {
    const auto a = spec.find(':');
    const auto b = a == std::string::npos ? a : spec.find(':', a + 1);
    if (b == std::string::npos) throw ValidationError("range must be lo:hi:n, got '" + spec + "'");
    const double lo = parse_double(spec.substr(0, a), "range lo");
    const double hi = parse_double(spec.substr(a + 1, b - a - 1), "range hi");
    const double n = parse_double(spec.substr(b + 1), "range n");
    require(n >= 1 && n == std::floor(n) && n <= 1e7, "range n must be a positive integer");
    require(n == 1 || hi > lo, "range needs hi > lo");
    std::vector<double> v = n == 1 ? std::vector<double>{lo} : linspace(lo, hi, std::size_t(n));
    for (double& x : v) x = hz_to_rad(x);
    return v;
}

std::vector<double> parse_list(const std::string& spec, const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(item, what));
    require(!out.empty(), what + ": empty list");
    return out;
}

double parse_scaled(const std::string& text, const std::string& unit, double unit_value,
                    double plain_scale, const std::string& what) {
    if (text.size() >= unit.size() && text.compare(text.size() - unit.size(), unit.size(), unit) == 0) {
        const std::string head = text.substr(0, text.size() - unit.size());
        const double f = head.empty() || head == "+" ? 1.0 : head == "-" ? -1.0 : parse_double(head, what);
        return f * unit_value;
    }
    return parse_double(text, what) * plain_scale;
}

ModeSpec parse_mode(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw ValidationError("mode must look like sHG:1,0 or eLG:0,2");
    const std::string fam = spec.substr(0, colon);
    const auto idx = parse_list(spec.substr(colon + 1), "mode indices");
    require(idx.size() == 2, "mode needs two indices");
    for (double i : idx) require(i == std::floor(i), "mode indices must be integers");
    ModeSpec m;
    const int i0 = int(idx[0]), i1 = int(idx[1]);
    if (fam == "sHG" || fam == "eHG") {
        m.family = fam == "sHG" ? ModeFamily::StandardHG : ModeFamily::ElegantHG;
        m.n = i0;
        m.m = i1;
    } else if (fam == "sLG" || fam == "eLG") {
        m.family = fam == "sLG" ? ModeFamily::StandardLG : ModeFamily::ElegantLG;
        m.p = i0;
        m.l = i1;
    } else {
        throw ValidationError("unknown mode family '" + fam + "' (sHG, eHG, sLG, eLG)");
    }
    return m;
}

void write_text_atomic(const std::string& path, const std::string& text) { write_file_atomic(path, text); }

}  // namespace polariton::cli
