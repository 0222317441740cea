#pragma once

#include <vector>

namespace polariton {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// n-point Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(int n);

// n-point Gauss-Hermite rule for the weight exp(-x^2) on the real line.
QuadratureRule gauss_hermite(int n);

// Gauss-Hermite rule mapped to a zero-mean normal density of standard
// deviation sigma: nodes x*sqrt(2)*sigma, weights normalized to sum 1.
QuadratureRule normal_rule(int n, double sigma);

}  // namespace polariton
