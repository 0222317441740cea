#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polariton/kv_params.hpp"
#include "polariton/lineshape.hpp"
#include "polariton/storage.hpp"

namespace polariton::cli {

using ParamList = std::vector<std::pair<std::string, std::string>>;

struct Common {
    std::string params_file;
    std::vector<std::string> overrides;
    unsigned threads = 0;
};

KeyValueParams load_params(const Common& c);

// Parameter files carry ordinary frequencies [Hz]; everything here is rad/s.
struct Physical {
    MediumParams medium;
    BeamGeometry geom;
    DriveParams drive;
    std::optional<double> L;
    bool has_optics = false;  // lambda present
};

Physical resolve_physical(const KeyValueParams& kv);
// D from `D`, else v_T^2 / gamma_c.
double resolve_D(const KeyValueParams& kv);
// alpha/gammaP keys when present, otherwise the Dicke-limit resonance of the medium.
DarkResonance resolve_resonance(const KeyValueParams& kv);

ParamList echo(const KeyValueParams& kv);

// "lo:hi:n" in Hz -> rad/s
std::vector<double> parse_range(const std::string& spec);
std::vector<double> parse_list(const std::string& spec, const std::string& what);
// Plain number, or a number followed by a symbolic unit, e.g. "-1gamma", "0.5qD".
double parse_scaled(const std::string& text, const std::string& unit, double unit_value,
                    double plain_scale, const std::string& what);
ModeSpec parse_mode(const std::string& spec);

void write_text_atomic(const std::string& path, const std::string& text);

}  // namespace polariton::cli
