#pragma once

#include "polariton/units.hpp"

namespace polariton {

// Exponentially scaled modified Bessel functions for Re z > 0, n in {0, 1}:
//   bessel_i_scaled(n, z) = I_n(z) exp(-z)
//   bessel_k_scaled(n, z) = K_n(z) exp(+z)
cplx bessel_i_scaled(int n, cplx z);
cplx bessel_k_scaled(int n, cplx z);

}  // namespace polariton
