#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "polariton/cli.hpp"
#include "polariton/field.hpp"

namespace fs = std::filesystem;
using polariton::cli::run;

namespace {

struct Sandbox {
    fs::path dir;
    Sandbox() {
        dir = fs::temp_directory_path() / ("polariton_cli_" + std::to_string(counter()++));
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    ~Sandbox() { fs::remove_all(dir); }
    std::string path(const std::string& name) const { return (dir / name).string(); }
    std::size_t file_count() const { return std::distance(fs::directory_iterator(dir), fs::directory_iterator{}); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::size_t data_rows(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    std::size_t n = 0;
    bool header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header) {
            header = true;
            continue;
        }
        ++n;
    }
    return n;
}

const std::string kParams = POLARITON_SAMPLE_PARAMS;

}  // namespace

TEST_CASE("spectrum writes one row per detuning and echoes the parameters") {
    Sandbox box;
    const auto r = cli({"spectrum", "--model", "strong", "--params", kParams, "--delta-range", "-1e6:1e6:2001",
                        "--out", box.path("s.csv")});
    REQUIRE(r.code == 0);
    const std::string csv = slurp(box.path("s.csv"));
    CHECK(csv.rfind("# polariton-sim spectrum v1", 0) == 0);
    CHECK(data_rows(csv) == 2001);
    CHECK(csv.find("lambda") != std::string::npos);
    CHECK(csv.find("gamma0") != std::string::npos);
    CHECK(csv.find("detuning_hz,re_chi_per_m,im_chi_per_m,transmission") != std::string::npos);
}

TEST_CASE("usage errors exit 2 without writing files") {
    Sandbox box;
    auto r = cli({"spectrum", "--model", "strong", "--params", kParams, "--delta-range", "-1:1:3", "--bogus",
                  "--out", box.path("s.csv")});
    CHECK(r.code == 2);
    r = cli({"spectrum", "--params", kParams, "--out", box.path("s.csv")});
    CHECK(r.code == 2);
    r = cli({"no-such-command"});
    CHECK(r.code == 2);
    r = cli({});
    CHECK(r.code == 2);
    CHECK(box.file_count() == 0);
}

TEST_CASE("validation errors exit 3 with a single machine-readable line") {
    Sandbox box;
    auto r = cli({"spectrum", "--model", "strong", "--params", kParams, "--set", "Gamma=-1", "--delta-range",
                  "-1:1:3", "--out", box.path("s.csv")});
    CHECK(r.code == 3);
    CHECK(r.err.rfind("error code=3", 0) == 0);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    r = cli({"spectrum", "--model", "strong", "--params", kParams, "--delta-range", "1:-1:3", "--out",
             box.path("s.csv")});
    CHECK(r.code == 3);
    r = cli({"ramsey", "--params", kParams, "--a", "1e-4", "--b", "1e-5", "--delta-range", "-1:1:3", "--out",
             box.path("r.csv")});
    CHECK(r.code == 3);
    CHECK(box.file_count() == 0);
}

TEST_CASE("missing parameter file is reported") {
    Sandbox box;
    const auto r = cli({"spectrum", "--model", "strong", "--params", box.path("absent.kv"), "--delta-range",
                        "-1:1:3", "--out", box.path("s.csv")});
    CHECK(r.code != 0);
    CHECK(r.err.rfind("error code=", 0) == 0);
    CHECK(box.file_count() == 0);
}

TEST_CASE("store then propagate with symbolic detuning and group velocity") {
    Sandbox box;
    auto r = cli({"store", "--params", kParams, "--mode", "sHG:0,0", "--w0", "1e-3", "--grid", "128", "--tau", "0",
                  "--out", box.path("beam.cf2d")});
    REQUIRE(r.code == 0);
    polariton::FieldMetadata meta;
    const auto beam = polariton::read_cf2d(box.path("beam.cf2d"), &meta);
    CHECK(beam.nx() == 128);
    CHECK_FALSE(meta.empty());

    r = cli({"propagate", "--params", kParams, "--in", box.path("beam.cf2d"), "--L", "0.05", "--delta", "-1.0gamma",
             "--vg", "qD", "--out", box.path("out.cf2d"), "--intensity-csv", box.path("i.csv")});
    REQUIRE(r.code == 0);
    const auto out = polariton::read_cf2d(box.path("out.cf2d"), &meta);
    CHECK(out.same_grid(beam));
    CHECK(meta.count("L") + meta.count("L_m") >= 1);
    CHECK(data_rows(slurp(box.path("i.csv"))) > 0);
}

TEST_CASE("Monte Carlo output is byte-identical for a seed") {
    Sandbox box;
    auto args = [&](const std::string& name, const std::string& threads) {
        return std::vector<std::string>{"--threads", threads, "ramsey", "--params", kParams, "--dim", "2", "--a",
                                        "1e-4", "--walkers", "400", "--seed", "5", "--delta-range", "-2e3:2e3:9",
                                        "--out", box.path(name)};
    };
    REQUIRE(cli(args("a.csv", "1")).code == 0);
    REQUIRE(cli(args("b.csv", "1")).code == 0);
    REQUIRE(cli(args("c.csv", "2")).code == 0);
    const std::string a = slurp(box.path("a.csv"));
    CHECK(a == slurp(box.path("b.csv")));
    CHECK(a == slurp(box.path("c.csv")));
    CHECK(a.find("re_chi_mc") != std::string::npos);
    CHECK(a.find("re_R") != std::string::npos);
    CHECK(a.find("seed") != std::string::npos);
}

TEST_CASE("other subcommands run") {
    Sandbox box;
    CHECK(cli({"dark-resonance", "--params", kParams, "--delta-range", "-5e3:5e3:101", "--out", box.path("d.csv")})
              .code == 0);
    CHECK(cli({"oracle", "--params", kParams, "--set", "Omega_c=0", "--delta-range", "-1e9:1e9:5", "--out",
               box.path("o.csv")})
              .code == 0);
    CHECK(cli({"dicke-demo", "--params", kParams, "--v", "1", "--q", "6.283185307179586", "--duration", "64",
               "--dt", "0.0625", "--out", box.path("e.csv")})
              .code == 0);
    CHECK(slurp(box.path("e.csv")).rfind("# polariton-sim emitter-psd v1", 0) == 0);
    const auto v = cli({"--version"});
    CHECK(v.code == 0);
    CHECK(v.out.find(polariton::cli::version_string()) != std::string::npos);
}
