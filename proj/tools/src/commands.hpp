#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "resolve.hpp"

namespace polariton::cli {

struct SpectrumOptions {
    std::string model;
    std::string range;
    std::string sweep;  // probe | raman; empty picks the model default
    std::string out;
    double L = -1.0;
};

struct DarkOptions {
    std::string range;
    std::string out;
    double k = -1.0;  // [rad/m]; negative uses the beam geometry
    std::string gamma_prime = "voigt";
    double L = -1.0;
};

struct OracleOptions {
    std::string range;
    std::string sweep = "raman";
    int nodes = 0;
    int perp_nodes = 0;
    std::string out;
};

struct BeamOptions {
    std::string mode;  // e.g. sHG:0,0
    double w0 = 0.0;
    std::size_t grid = 256;
    double dx = 0.0;
    double z = 0.0;
};

struct PropagateOptions {
    std::string in;
    BeamOptions beam;
    double L = -1.0;
    std::string delta = "0";
    std::string vg;
    std::string chi_mode = "full";
    double tilt = 0.0;
    std::size_t z_steps = 0;
    std::string out;
    std::string intensity_csv;
};

struct StoreOptions {
    std::string in;
    BeamOptions beam;
    std::string taus;
    std::string stretch;
    double kx = 0.0, ky = 0.0;
    std::string out;
    std::string metrics;
};

struct RamseyOptions {
    int dim = 2;
    double a = 0.0;
    std::string b = "inf";
    std::string range;
    std::size_t walkers = 0;
    double dt = 0.0;
    std::uint64_t seed = 1;
    std::string hist;
    std::string wall_factor = "printed";
    std::string out;
    double L = -1.0;
};

struct DickeOptions {
    double v = 0.0;
    double q = 0.0;
    double collision_rate = 0.0;
    double walls = 0.0;
    double duration = 0.0;
    double dt = 0.0;
    std::uint64_t seed = 1;
    std::string out;
};

void cmd_spectrum(const Common& c, const SpectrumOptions& o, std::ostream& out);
void cmd_dark_resonance(const Common& c, const DarkOptions& o, std::ostream& out);
void cmd_oracle(const Common& c, const OracleOptions& o, std::ostream& out);
void cmd_propagate(const Common& c, const PropagateOptions& o, std::ostream& out);
void cmd_store(const Common& c, const StoreOptions& o, std::ostream& out);
void cmd_ramsey(const Common& c, const RamseyOptions& o, std::ostream& out);
void cmd_dicke_demo(const Common& c, const DickeOptions& o, std::ostream& out);

}  // namespace polariton::cli
