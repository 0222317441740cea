#include "polariton/faddeeva.hpp"

#include <array>
#include <cmath>

namespace polariton {

namespace {

constexpr int kN = 40;
const double kInvSqrtPi = 1.0 / std::sqrt(pi);

// Weideman (1994) rational expansion: coefficients of the Fourier series of
// exp(-t^2)(L^2+t^2) under t = L tan(theta/2).
struct Weideman {
    double L;
    std::array<double, kN> a{};
    Weideman() {
        const int M = 2 * kN;
        L = std::sqrt(kN / std::sqrt(2.0));
        for (int n = 1; n <= kN; ++n) {
            double s = 0.0;
            for (int k = -M + 1; k < M; ++k) {
                const double th = k * pi / M;
                const double t = L * std::tan(0.5 * th);
                s += std::exp(-t * t) * (L * L + t * t) * std::cos(n * th);
            }
            a[n - 1] = s / (2 * M);
        }
    }
};

const Weideman& weideman() {
    static const Weideman w;
    return w;
}

cplx w_upper(cplx z) {
    if (std::abs(z) >= 8.0) {
        // Laplace continued fraction
        cplx r = 0.0;
        for (int k = 60; k >= 1; --k) r = (0.5 * k) / (z - r);
        return I * kInvSqrtPi / (z - r);
    }
    const Weideman& c = weideman();
    const cplx den = c.L - I * z;
    const cplx Z = (c.L + I * z) / den;
    cplx p = c.a[kN - 1];
    for (int n = kN - 2; n >= 0; --n) p = p * Z + c.a[n];
    return 2.0 * p / (den * den) + kInvSqrtPi / den;
}

}  // namespace

cplx faddeeva_w(cplx z) {
    if (z.imag() >= 0.0) return w_upper(z);
    return 2.0 * std::exp(-z * z) - w_upper(-z);
}

cplx gaussian_cauchy(cplx z, double sigma) {
    const double s = std::sqrt(2.0) * sigma;
    const cplx pref = I * std::sqrt(pi / 2.0) / sigma;
    if (z.imag() > 0.0) return pref * faddeeva_w(z / s);
    return std::conj(pref * faddeeva_w(std::conj(z) / s));
}

cplx gaussian_cauchy_derivative(cplx z, double sigma) {
    // w'(t) = -2 t w(t) + 2i/sqrt(pi)
    const double s = std::sqrt(2.0) * sigma;
    const cplx pref = I * std::sqrt(pi / 2.0) / sigma / s;
    auto dw = [](cplx t) { return -2.0 * t * faddeeva_w(t) + 2.0 * I / std::sqrt(pi); };
    if (z.imag() > 0.0) return pref * dw(z / s);
    return std::conj(pref * dw(std::conj(z) / s));
}

}  // namespace polariton
