#pragma once

#include "polariton/units.hpp"

namespace polariton {

// Faddeeva function w(z) = exp(-z^2) erfc(-iz).
// Relative error below 1e-13 in the closed upper half plane.
cplx faddeeva_w(cplx z);

// Gaussian Cauchy transform  C(z) = \int du F(u)/(u - z)  for a zero-mean
// normal density F of standard deviation sigma, Im z != 0.
cplx gaussian_cauchy(cplx z, double sigma);
// dC/dz
cplx gaussian_cauchy_derivative(cplx z, double sigma);

}  // namespace polariton
