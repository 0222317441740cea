#include "polariton/quadrature.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "polariton/errors.hpp"

namespace polariton {

QuadratureRule gauss_legendre(int n) {
    require(n >= 1, "gauss_legendre: n >= 1");
    QuadratureRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p2) / j;
            }
            dp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = 0.0;
        for (int j = 1; j <= n; ++j) {
            const double p2 = p1;
            p1 = p0;
            p0 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p2) / j;
        }
        dp = n * (x * p0 - p1) / (x * x - 1.0);
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        r.weights[i] = r.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    if (n % 2 == 1) r.nodes[n / 2] = 0.0;
    return r;
}

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix of the orthonormal
// Hermite recurrence; weights from the Christoffel sum 1 / sum_j p_j(x)^2.
QuadratureRule gauss_hermite(int n) {
    require(n >= 1, "gauss_hermite: n >= 1");
    const double pim4 = 1.0 / std::pow(std::numbers::pi, 0.25);
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(std::max(n - 1, 0));
    for (int j = 1; j < n; ++j) sub[j - 1] = std::sqrt(0.5 * j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw ConvergenceError("gauss_hermite: eigenvalue iteration failed");

    QuadratureRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = es.eigenvalues()[i];
        for (int pass = 0; pass < 2; ++pass) {
            // orthonormal p_j wrt exp(-x^2): p_{j+1} = x sqrt(2/(j+1)) p_j - sqrt(j/(j+1)) p_{j-1}
            double p1 = pim4, p2 = 0.0, sum = p1 * p1;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = x * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(double(j) / (j + 1)) * p3;
                if (j + 1 < n) sum += p1 * p1;
            }
            if (pass == 0) {
                x -= p1 / (std::sqrt(2.0 * n) * p2);
            } else {
                r.nodes[i] = x;
                r.weights[i] = 1.0 / sum;
            }
        }
    }
    // exact symmetry
    for (int i = 0; i < n / 2; ++i) {
        const double x = 0.5 * (r.nodes[n - 1 - i] - r.nodes[i]);
        const double w = 0.5 * (r.weights[i] + r.weights[n - 1 - i]);
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        r.weights[i] = r.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) r.nodes[n / 2] = 0.0;
    return r;
}

QuadratureRule normal_rule(int n, double sigma) {
    QuadratureRule r = gauss_hermite(n);
    double sum = 0.0;
    for (double w : r.weights) sum += w;
    const double s = std::sqrt(2.0) * sigma;
    for (int i = 0; i < n; ++i) {
        r.nodes[i] *= s;
        r.weights[i] /= sum;
    }
    return r;
}

}  // namespace polariton
