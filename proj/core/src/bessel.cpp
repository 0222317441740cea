#include "polariton/bessel.hpp"

#include <cmath>

#include "polariton/errors.hpp"

namespace polariton {

namespace {

constexpr double kAsymptoticRadius = 30.0;

// Hankel expansion coefficient a_k(n) = prod_{j=1..k} (4n^2 - (2j-1)^2) / (k! 8^k)
template <class Sign>
cplx hankel_series(int n, cplx z, Sign sign) {
    const double mu = 4.0 * n * n;
    cplx sum = 1.0, term = 1.0;
    for (int k = 1; k < 60; ++k) {
        const double c = (mu - (2.0 * k - 1) * (2.0 * k - 1)) / (8.0 * k);
        const cplx next = term * (sign * c) / z;
        if (std::abs(next) > std::abs(term)) break;
        term = next;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

}  // namespace

cplx bessel_i_scaled(int n, cplx z) {
    require(n == 0 || n == 1, "bessel_i_scaled: order must be 0 or 1");
    require(z.real() > 0.0 || (z.real() == 0.0 && z.imag() == 0.0),
            "bessel_i_scaled: requires Re z > 0");
    if (std::abs(z) > kAsymptoticRadius)
        return hankel_series(n, z, -1.0) / std::sqrt(two_pi * z);
    // (1/2pi) \int_0^{2pi} exp(z(cos t - 1)) cos(n t) dt, periodic trapezoid
    constexpr int M = 256;
    cplx s = 0.0;
    for (int j = 0; j < M; ++j) {
        const double t = two_pi * j / M;
        s += std::exp(z * (std::cos(t) - 1.0)) * std::cos(n * t);
    }
    return s / double(M);
}

cplx bessel_k_scaled(int n, cplx z) {
    require(n == 0 || n == 1, "bessel_k_scaled: order must be 0 or 1");
    require(z.real() > 0.0, "bessel_k_scaled: requires Re z > 0");
    if (std::abs(z) > kAsymptoticRadius)
        return std::sqrt(pi / (2.0 * z)) * hankel_series(n, z, 1.0);
    // \int_0^inf exp(-z(cosh t - 1)) cosh(n t) dt, trapezoid on the even extension
    constexpr double h = 0.05;
    const double rez = z.real();
    cplx s = 0.5;
    for (int j = 1;; ++j) {
        const double t = j * h;
        const double ch = std::cosh(t);
        const cplx term = std::exp(-z * (ch - 1.0)) * std::cosh(n * t);
        s += term;
        if (rez * (ch - 1.0) - n * t > 45.0) break;
    }
    return s * h;
}

}  // namespace polariton
