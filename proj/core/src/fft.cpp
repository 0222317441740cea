#include "polariton/fft.hpp"

#include <fftw3.h>

#include <mutex>

#include "polariton/errors.hpp"

namespace polariton {

namespace {

std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

fftw_complex* as_fftw(cplx* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

Fft2D::Fft2D(std::size_t nx, std::size_t ny) : nx_(nx), ny_(ny) {
    require(nx > 0 && ny > 0, "Fft2D: empty grid");
    std::vector<cplx> tmp(nx * ny);
    std::lock_guard<std::mutex> lk(plan_mutex());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fwd_ = fftw_plan_dft_2d(int(ny), int(nx), as_fftw(tmp.data()), as_fftw(tmp.data()), FFTW_FORWARD, flags);
    inv_ = fftw_plan_dft_2d(int(ny), int(nx), as_fftw(tmp.data()), as_fftw(tmp.data()), FFTW_BACKWARD, flags);
}

Fft2D::~Fft2D() {
    std::lock_guard<std::mutex> lk(plan_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(inv_));
}

void Fft2D::forward(std::vector<cplx>& data) const {
    require(data.size() == nx_ * ny_, "Fft2D: size mismatch");
    fftw_execute_dft(static_cast<fftw_plan>(fwd_), as_fftw(data.data()), as_fftw(data.data()));
}

void Fft2D::inverse(std::vector<cplx>& data) const {
    require(data.size() == nx_ * ny_, "Fft2D: size mismatch");
    fftw_execute_dft(static_cast<fftw_plan>(inv_), as_fftw(data.data()), as_fftw(data.data()));
}

void fft_forward_1d(std::vector<cplx>& data) {
    if (data.empty()) return;
    fftw_plan p;
    {
        std::lock_guard<std::mutex> lk(plan_mutex());
        p = fftw_plan_dft_1d(int(data.size()), as_fftw(data.data()), as_fftw(data.data()),
                             FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    }
    fftw_execute(p);
    std::lock_guard<std::mutex> lk(plan_mutex());
    fftw_destroy_plan(p);
}

double fft_wavenumber(std::size_t i, std::size_t n, double d) {
    const double idx = i < (n + 1) / 2 ? double(i) : double(i) - double(n);
    return two_pi * idx / (double(n) * d);
}

}  // namespace polariton
