#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "polariton/units.hpp"

namespace polariton {

// Complex field on a uniform grid with centered coordinates:
// x(ix) = (ix - nx/2) dx, so the origin is a grid node. Row-major, rows along y.
class ScalarField2D {
public:
    ScalarField2D() = default;
    ScalarField2D(std::size_t nx, std::size_t ny, double dx, double dy);

    std::size_t nx() const { return nx_; }
    std::size_t ny() const { return ny_; }
    double dx() const { return dx_; }
    double dy() const { return dy_; }

    double x(std::size_t ix) const { return (double(ix) - double(nx_ / 2)) * dx_; }
    double y(std::size_t iy) const { return (double(iy) - double(ny_ / 2)) * dy_; }
    std::size_t center_x() const { return nx_ / 2; }
    std::size_t center_y() const { return ny_ / 2; }

    cplx& operator()(std::size_t ix, std::size_t iy) { return data_[iy * nx_ + ix]; }
    const cplx& operator()(std::size_t ix, std::size_t iy) const { return data_[iy * nx_ + ix]; }

    std::vector<cplx>& data() { return data_; }
    const std::vector<cplx>& data() const { return data_; }

    double power() const;
    bool same_grid(const ScalarField2D& o) const;

private:
    std::size_t nx_ = 0, ny_ = 0;
    double dx_ = 0.0, dy_ = 0.0;
    std::vector<cplx> data_;
};

// sqrt(sum |a-b|^2 / sum |b|^2)
double relative_l2(const ScalarField2D& a, const ScalarField2D& b);
// <a, b> = sum conj(a) b dx dy
cplx inner_product(const ScalarField2D& a, const ScalarField2D& b);

using FieldMetadata = std::map<std::string, std::string>;

// CF2D v1: "CF2D", u32 version, u32 nx, u32 ny, f64 dx, f64 dy, then nx*ny
// little-endian (re, im) f64 pairs; optionally followed by "META", u32 byte
// count and `key=value` lines.
void write_cf2d(const std::string& path, const ScalarField2D& f, const FieldMetadata& meta = {});
ScalarField2D read_cf2d(const std::string& path, FieldMetadata* meta = nullptr);

}  // namespace polariton
