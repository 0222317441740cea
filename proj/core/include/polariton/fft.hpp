#pragma once

#include <cstddef>
#include <vector>

#include "polariton/units.hpp"

namespace polariton {

// In-place 2D transform over row-major data (ny rows of nx samples).
// Plans are created under a global lock; execution is thread-safe.
class Fft2D {
public:
    Fft2D(std::size_t nx, std::size_t ny);
    ~Fft2D();
    Fft2D(const Fft2D&) = delete;
    Fft2D& operator=(const Fft2D&) = delete;

    void forward(std::vector<cplx>& data) const;
    // Unnormalized inverse; divide by nx*ny to invert forward().
    void inverse(std::vector<cplx>& data) const;

private:
    std::size_t nx_, ny_;
    void* fwd_ = nullptr;
    void* inv_ = nullptr;
};

void fft_forward_1d(std::vector<cplx>& data);

// Angular wavenumber of FFT bin i (0 <= i < n) for sample spacing d.
double fft_wavenumber(std::size_t i, std::size_t n, double d);

}  // namespace polariton
