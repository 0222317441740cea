#include "polariton/field.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "polariton/errors.hpp"
#include "polariton/io.hpp"

namespace polariton {

static_assert(std::endian::native == std::endian::little, "CF2D I/O assumes a little-endian host");

ScalarField2D::ScalarField2D(std::size_t nx, std::size_t ny, double dx, double dy)
    : nx_(nx), ny_(ny), dx_(dx), dy_(dy), data_(nx * ny) {
    require(nx >= 8 && ny >= 8, "ScalarField2D: nx, ny must be >= 8");
    require(dx > 0.0 && dy > 0.0 && std::isfinite(dx) && std::isfinite(dy),
            "ScalarField2D: dx, dy must be > 0");
}

double ScalarField2D::power() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return s * dx_ * dy_;
}

bool ScalarField2D::same_grid(const ScalarField2D& o) const {
    return nx_ == o.nx_ && ny_ == o.ny_ && dx_ == o.dx_ && dy_ == o.dy_;
}

double relative_l2(const ScalarField2D& a, const ScalarField2D& b) {
    require(a.same_grid(b), "relative_l2: grids differ");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        num += std::norm(a.data()[i] - b.data()[i]);
        den += std::norm(b.data()[i]);
    }
    return den > 0 ? std::sqrt(num / den) : std::sqrt(num);
}

cplx inner_product(const ScalarField2D& a, const ScalarField2D& b) {
    require(a.same_grid(b), "inner_product: grids differ");
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) s += std::conj(a.data()[i]) * b.data()[i];
    return s * a.dx() * a.dy();
}

void write_file_atomic(const std::string& path, const std::string& bytes) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw ValidationError("cannot write: " + path);
        f.write(bytes.data(), std::streamsize(bytes.size()));
        f.flush();
        if (!f) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw ValidationError("write failed: " + path);
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw ValidationError("cannot rename into place: " + path);
    }
}

namespace {

template <class T>
void put(std::string& out, T v) {
    char b[sizeof(T)];
    std::memcpy(b, &v, sizeof(T));
    out.append(b, sizeof(T));
}

template <class T>
T get(const std::string& in, std::size_t& pos) {
    if (pos + sizeof(T) > in.size()) throw ValidationError("CF2D: truncated file");
    T v;
    std::memcpy(&v, in.data() + pos, sizeof(T));
    pos += sizeof(T);
    return v;
}

constexpr std::uint32_t kVersion = 1;

}  // namespace

void write_cf2d(const std::string& path, const ScalarField2D& f, const FieldMetadata& meta) {
    std::string out;
    out.reserve(32 + f.data().size() * 16);
    out.append("CF2D");
    put<std::uint32_t>(out, kVersion);
    put<std::uint32_t>(out, std::uint32_t(f.nx()));
    put<std::uint32_t>(out, std::uint32_t(f.ny()));
    put<double>(out, f.dx());
    put<double>(out, f.dy());
    for (const auto& v : f.data()) {
        put<double>(out, v.real());
        put<double>(out, v.imag());
    }
    if (!meta.empty()) {
        std::string text;
        for (const auto& [k, v] : meta) text += k + "=" + v + "\n";
        out.append("META");
        put<std::uint32_t>(out, std::uint32_t(text.size()));
        out.append(text);
    }
    write_file_atomic(path, out);
}

ScalarField2D read_cf2d(const std::string& path, FieldMetadata* meta) {
    std::ifstream fin(path, std::ios::binary);
    if (!fin) throw ValidationError("cannot read CF2D file: " + path);
    std::ostringstream ss;
    ss << fin.rdbuf();
    const std::string in = ss.str();
    if (in.size() < 4 || in.compare(0, 4, "CF2D") != 0) throw ValidationError("CF2D: bad magic in " + path);
    std::size_t pos = 4;
    const auto version = get<std::uint32_t>(in, pos);
    if (version != kVersion) throw ValidationError("CF2D: unsupported version " + std::to_string(version));
    const auto nx = get<std::uint32_t>(in, pos);
    const auto ny = get<std::uint32_t>(in, pos);
    const double dx = get<double>(in, pos);
    const double dy = get<double>(in, pos);
    ScalarField2D f(nx, ny, dx, dy);
    for (auto& v : f.data()) {
        const double re = get<double>(in, pos);
        const double im = get<double>(in, pos);
        v = cplx(re, im);
    }
    if (meta) meta->clear();
    if (pos < in.size()) {
        if (in.size() - pos < 8 || in.compare(pos, 4, "META") != 0)
            throw ValidationError("CF2D: trailing bytes are not a META chunk");
        pos += 4;
        const auto len = get<std::uint32_t>(in, pos);
        if (pos + len > in.size()) throw ValidationError("CF2D: truncated META chunk");
        if (meta) {
            std::istringstream ls(in.substr(pos, len));
            std::string line;
            while (std::getline(ls, line)) {
                const auto eq = line.find('=');
                if (eq != std::string::npos) (*meta)[line.substr(0, eq)] = line.substr(eq + 1);
            }
        }
    }
    return f;
}

}  // namespace polariton
